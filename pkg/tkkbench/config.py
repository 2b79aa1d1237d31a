"""
Runtime settings read from the environment.

TKK_THREADS
    worker count for claim execution (default: number of cores)
TKK_SEED
    seed of every deterministic sampler (default: 0)
TKK_AXIOM_SAMPLES
    number of sampled quintuples for the axiom-3 fast tier (default: 100000)
TKK_CARTAN_BUDGET
    number of candidate elements tried by the split Cartan search (default: 200)
"""

import logging
import multiprocessing
import os
from collections import namedtuple

logger = logging.getLogger(__name__)

_FIELDS = ["threads", "seed", "axiom_samples", "cartan_budget"]


class Config(namedtuple("Config", _FIELDS)):
    __slots__ = ()

    @classmethod
    def from_environment(cls, environ=None):
        environ = os.environ if environ is None else environ
        return cls(
            threads=_int_setting(
                environ, "TKK_THREADS", multiprocessing.cpu_count()),
            seed=_int_setting(environ, "TKK_SEED", 0),
            axiom_samples=_int_setting(environ, "TKK_AXIOM_SAMPLES", 100000),
            cartan_budget=_int_setting(environ, "TKK_CARTAN_BUDGET", 200))

    def replace(self, **kwargs):
        return self._replace(**kwargs)


def _int_setting(environ, name, default):
    raw = environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring non-integer %s=%r", name, raw)
        return default
    return max(value, 1) if name == "TKK_THREADS" else value


_CONFIG = []


def get_config():
    """Return the process-wide Config, reading the environment once."""
    if not _CONFIG:
        _CONFIG.append(Config.from_environment())
    return _CONFIG[0]
