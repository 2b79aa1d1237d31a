"""
JSON exchange format for structure tensors.

    {"kind": "lie" | "fts" | "lts", "dim": n, "labels": [...],
     "entries": [[i, j, k, "num/den"], ...]}

Lie algebras list [b_i, b_j] for i < j only; ternary algebras and Lie triple
systems list four indices per entry (a, b, c, k for the k-th coordinate of
the product of basis elements a, b, c). Ternary algebras add "gram", and a
Lie algebra may carry "cartan", a list of sparse vectors spanning a split
Cartan subalgebra, and "embedding", the images of its basis in a larger
algebra. Indices are 0-based and omitted entries are zero.
"""

from __future__ import absolute_import

import json
import logging
from collections import OrderedDict, namedtuple
from fractions import Fraction

from .errors import ExchangeFormatError
from .exact import ExactMatrix, format_scalar
from .liealg import LieAlgebra
from .tkk import LieTripleSystem
from .ternary import TernaryAlgebra

logger = logging.getLogger(__name__)

KINDS = ("lie", "fts", "lts")

Exchange = namedtuple("Exchange", ["kind", "value", "labels", "embedding"])


def default_labels(dim):
    return ["b%d" % i for i in range(dim)]


def _kind_of(value):
    if isinstance(value, LieAlgebra):
        return "lie"
    if isinstance(value, TernaryAlgebra):
        return "fts"
    if isinstance(value, LieTripleSystem):
        return "lts"
    raise ExchangeFormatError("Cannot serialize %r" % (value,))


def _sparse_entries(vector):
    return [[k, format_scalar(x)] for (k, x) in sorted(vector.items())]


def to_document(value, labels=None, embedding=None):
    kind = _kind_of(value)
    dim = value.dim
    if labels is None:
        labels = default_labels(dim)
    if len(labels) != dim:
        raise ExchangeFormatError(
            "%d labels for dimension %d" % (len(labels), dim))
    entries = []
    if kind == "lie":
        for (i, j, vector) in value.structure_entries():
            for (k, x) in sorted(vector.items()):
                entries.append([i, j, k, format_scalar(x)])
    elif kind == "fts":
        for ((a, b, c), vector) in value.product_entries():
            for (k, x) in sorted(vector.items()):
                entries.append([a, b, c, k, format_scalar(x)])
    else:
        for ((i, j), columns) in sorted(value.operators.items()):
            for (k, vector) in sorted(columns.items()):
                for (r, x) in sorted(vector.items()):
                    entries.append([i, j, k, r, format_scalar(x)])
    document = OrderedDict([
        ("kind", kind),
        ("dim", dim),
        ("labels", list(labels)),
        ("entries", entries),
    ])
    if kind == "fts":
        document["gram"] = [[format_scalar(x) for x in row]
                            for row in value.gram.to_lists()]
    if kind == "lie":
        cartan = value.frame.cartan if value.frame is not None else \
            value.seeds
        if cartan:
            document["cartan"] = [_sparse_entries(h) for h in cartan]
        if embedding is not None:
            if len(embedding) != dim:
                raise ExchangeFormatError("Embedding needs %d images" % dim)
            document["embedding"] = [_sparse_entries(v) for v in embedding]
    return document


def dumps(value, labels=None, embedding=None):
    return json.dumps(to_document(value, labels, embedding), indent=1) + "\n"


def write_exchange(value, path, labels=None, embedding=None):
    text = dumps(value, labels, embedding)
    with open(path, "w") as handle:
        handle.write(text)
    logger.info("Wrote %s (%s, dim %d)", path, _kind_of(value), value.dim)


def _scalar(raw):
    if isinstance(raw, (bool, float)):
        raise ExchangeFormatError("Bad scalar %r" % (raw,))
    try:
        return Fraction(raw)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ExchangeFormatError("Bad scalar %r" % (raw,))


def _index(raw, dim):
    if isinstance(raw, bool) or not isinstance(raw, int) or \
            not 0 <= raw < dim:
        raise ExchangeFormatError("Index %r outside 0..%d" % (raw, dim - 1))
    return raw


def _entries(document, width, dim):
    out = []
    for entry in document.get("entries", []):
        if not isinstance(entry, list) or len(entry) != width + 1:
            raise ExchangeFormatError(
                "Entry %r should have %d indices and a value" % (
                    entry, width))
        indices = tuple(_index(i, dim) for i in entry[:width])
        out.append((indices, _scalar(entry[width])))
    return out


def _sparse_vector(entries, dim=None):
    out = {}
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != 2:
            raise ExchangeFormatError("Bad sparse entry %r" % (entry,))
        k = entry[0]
        if isinstance(k, bool) or not isinstance(k, int) or k < 0 or \
                dim is not None and k >= dim:
            raise ExchangeFormatError("Bad sparse index %r" % (k,))
        out[k] = _scalar(entry[1])
    return out


def from_document(document):
    """Parse a decoded exchange document into an Exchange tuple."""
    if not isinstance(document, dict):
        raise ExchangeFormatError("Exchange document must be an object")
    kind = document.get("kind")
    if kind not in KINDS:
        raise ExchangeFormatError("Unknown kind %r" % (kind,))
    dim = document.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise ExchangeFormatError("Bad dimension %r" % (dim,))
    labels = document.get("labels", default_labels(dim))
    embedding = None
    if len(labels) != dim:
        raise ExchangeFormatError(
            "%d labels for dimension %d" % (len(labels), dim))
    if kind == "lie":
        table = {}
        for ((i, j, k), x) in _entries(document, 3, dim):
            if i >= j:
                raise ExchangeFormatError(
                    "Lie entries need i < j, got (%d, %d)" % (i, j))
            table.setdefault((i, j), {})[k] = x
        seeds = [_sparse_vector(v, dim) for v in document.get("cartan", [])]
        value = LieAlgebra(dim, table, seeds=seeds, name="exchange")
        if "embedding" in document:
            embedding = [_sparse_vector(v) for v in document["embedding"]]
            if len(embedding) != dim:
                raise ExchangeFormatError("Embedding needs %d images" % dim)
    elif kind == "fts":
        table = {}
        for ((a, b, c, k), x) in _entries(document, 4, dim):
            table.setdefault((a, b, c), {})[k] = x
        rows = document.get("gram")
        if not isinstance(rows, list) or len(rows) != dim or \
                any(not isinstance(r, list) or len(r) != dim for r in rows):
            raise ExchangeFormatError("Gram matrix must be %d x %d" % (
                dim, dim))
        gram = ExactMatrix([[_scalar(x) for x in row] for row in rows],
                           rows=dim, cols=dim)
        value = TernaryAlgebra(dim, table, gram, name="exchange")
    else:
        operators = {}
        for ((i, j, k, r), x) in _entries(document, 4, dim):
            operators.setdefault((i, j), {}).setdefault(k, {})[r] = x
        value = LieTripleSystem(dim, operators, name="exchange")
    return Exchange(kind, value, list(labels), embedding)


def loads(text):
    try:
        document = json.loads(text)
    except ValueError as e:
        raise ExchangeFormatError("Not JSON: %s" % e)
    return from_document(document)


def read_exchange(path):
    with open(path) as handle:
        return loads(handle.read())
