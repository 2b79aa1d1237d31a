"""
Claim reports as JSON or as a text table.
"""

from __future__ import absolute_import

import json
from collections import OrderedDict
from fractions import Fraction

import pandas

from ._version import __version__
from .exact import format_scalar

TOOL = "tkkbench"


def jsonable(value):
    """Payload with exact rationals replaced by 'num/den' strings."""
    if isinstance(value, Fraction):
        return format_scalar(value)
    if isinstance(value, dict):
        items = value.items() if isinstance(value, OrderedDict) else \
            sorted(value.items())
        return OrderedDict((str(k), jsonable(v)) for (k, v) in items)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def _entry(result, timings):
    entry = OrderedDict([
        ("id", result.id),
        ("status", result.status),
        ("witnesses", jsonable(result.witnesses)),
    ])
    if timings:
        entry["runtime"] = round(result.runtime, 3)
    return entry


def _sorted(results):
    def key(result):
        suffix = result.id[1:]
        return (int(suffix) if suffix.isdigit() else 0, result.id)
    return sorted(results, key=key)


def emit_report(results, format="json", timings=False):
    """
    Render claim results, sorted by claim id. Runtimes are left out unless
    ``timings`` is set, so repeated runs give identical documents.
    """
    entries = [_entry(r, timings) for r in _sorted(results)]
    if format == "json":
        document = OrderedDict([
            ("tool", TOOL),
            ("version", __version__),
            ("claims", entries),
        ])
        return json.dumps(document, indent=2) + "\n"
    if format == "text":
        header = "%s %s\n" % (TOOL, __version__)
        if not entries:
            return header + "no claims\n"
        frame = pandas.DataFrame.from_records([
            OrderedDict([
                ("id", e["id"]),
                ("status", e["status"]),
                ("witnesses", json.dumps(e["witnesses"])),
            ] + ([("runtime", e["runtime"])] if timings else []))
            for e in entries])
        return header + frame.to_string(index=False) + "\n"
    raise ValueError("Unknown report format %r" % (format,))


def all_passed(results):
    """True iff no executed claim failed."""
    return all(r.status != "fail" for r in results)
