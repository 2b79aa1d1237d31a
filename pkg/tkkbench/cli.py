"""
Command line interface.

    tkkbench build --type E7 [--out e7.json]
    tkkbench extract (--in g.json | --type E7) [--out fts.json]
    tkkbench tkk --in fts.json [--out l.json]
    tkkbench axioms --in fts.json
    tkkbench identify --in l.json
    tkkbench index --source s.json --target t.json
    tkkbench claims [--tier N] [--id C5] [--format json|text] [--out r.json]
"""

from __future__ import absolute_import, print_function

import argparse
import logging
import sys
from collections import OrderedDict

from ._version import __version__
from .cartan import identify_type, split_cartan
from .chevalley import chevalley_algebra
from .claims import run_claims
from .dynkin import multi_index
from .errors import DimensionMismatch, ExchangeFormatError, TkkError
from .exact import Subspace, combine
from .grading import extract_fts, extraspecial_sl2
from .liealg import Subalgebra, structural_tests
from .report import all_passed, emit_report
from .rootsys import parse_type
from .ternary import all_axioms_pass, check_bsta_axioms
from .tkk import tkk
from .exchange import dumps, read_exchange
from .utilities import print_dict

logger = logging.getLogger(__name__)


def chevalley_labels(algebra, frame):
    """e<coefficients>, h<node>, f<coefficients> for a Chevalley basis."""
    rs = frame.root_system
    labels = [None] * algebra.dim
    for (root, index) in frame.root_index.items():
        prefix = "e" if any(c > 0 for c in root) else "f"
        labels[index] = prefix + "".join(str(abs(c)) for c in root)
    npos = len(rs.positive_coefficients)
    for k in range(rs.rank):
        labels[npos + k] = "h%d" % (k + 1)
    return labels


def _emit(text, out):
    if out:
        with open(out, "w") as handle:
            handle.write(text)
        logger.info("Wrote %s", out)
    else:
        sys.stdout.write(text)


def _load(path, *kinds):
    exchange = read_exchange(path)
    if exchange.kind not in kinds:
        raise ExchangeFormatError("%s holds a %s tensor, expected %s" % (
            path, exchange.kind, " or ".join(kinds)))
    return exchange


def _build(args):
    algebra, frame = chevalley_algebra(*parse_type(args.type))
    _emit(dumps(algebra, chevalley_labels(algebra, frame)), args.out)
    return 0


def _extract(args):
    if args.type:
        algebra, frame = chevalley_algebra(*parse_type(args.type))
    elif args.input:
        algebra = _load(args.input, "lie").value
        frame = split_cartan(algebra)
    else:
        raise ExchangeFormatError("extract needs --in or --type")
    fts = extract_fts(algebra, extraspecial_sl2(algebra, frame))
    _emit(dumps(fts), args.out)
    return 0


def _tkk(args):
    source = _load(args.input, "fts", "lts").value
    _emit(dumps(tkk(source)), args.out)
    return 0


def _axioms(args):
    fts = _load(args.input, "fts").value
    report = check_bsta_axioms(fts)
    summary = OrderedDict([("dim", fts.dim)])
    for (name, result) in zip(["axiom1", "axiom2", "axiom3"], report[:3]):
        summary[name] = result.passed
        summary[name + "_checked"] = result.checked
        if not result.passed:
            summary[name + "_witness"] = result.witness
    summary["suspected_variant"] = report.suspected_variant
    print_dict(summary)
    return 0 if all_axioms_pass(report) else 1


def _identify(args):
    algebra = _load(args.input, "lie").value
    structure = structural_tests(algebra)
    summary = OrderedDict(zip(structure._fields, structure))
    summary["type"] = str(identify_type(algebra))
    print_dict(summary)
    return 0


def _index(args):
    source = _load(args.source, "lie")
    target = _load(args.target, "lie").value
    if source.embedding is None:
        raise ExchangeFormatError("%s has no embedding" % args.source)
    images = source.embedding
    for (i, j, vector) in source.value.structure_entries():
        expected = combine((x, images[k]) for (k, x) in vector.items())
        if target.bracket(images[i], images[j]) != expected:
            raise DimensionMismatch(
                "Embedding does not preserve [b%d, b%d]" % (i, j))
    space = Subspace.span(target.dim, images)
    if space.dim != source.value.dim:
        raise DimensionMismatch("Embedding is not injective")
    multi = multi_index(Subalgebra(target, space))
    print_dict(OrderedDict([
        ("source", " + ".join("%s%d" % s for s in multi.source)),
        ("target", " + ".join("%s%d" % s for s in multi.target)),
        ("multi_index", multi.matrix),
    ]))
    return 0


def _claims(args):
    ids = [args.id] if args.id else None
    results = run_claims(ids, tier_budget=args.tier)
    _emit(emit_report(results, args.format, timings=args.timings), args.out)
    return 0 if all_passed(results) else 1


def parser():
    top = argparse.ArgumentParser(
        prog="tkkbench",
        description="Exact computations with ternary algebras, TKK "
                    "constructions and Dynkin indices.")
    top.add_argument("--verbose", action="store_true",
                     help="Log progress at DEBUG level")
    top.add_argument("--version", action="version", version=__version__)
    commands = top.add_subparsers(dest="command")
    commands.required = True

    build = commands.add_parser("build", help="Chevalley basis of a type")
    build.add_argument("--type", required=True, help="e.g. E7, C3, G2")
    build.add_argument("--out")
    build.set_defaults(run=_build)

    extract = commands.add_parser(
        "extract", help="Ternary algebra of the extraspecial grading")
    extract.add_argument("--in", dest="input")
    extract.add_argument("--type")
    extract.add_argument("--out")
    extract.set_defaults(run=_extract)

    build_tkk = commands.add_parser("tkk", help="TKK Lie algebra")
    build_tkk.add_argument("--in", dest="input", required=True)
    build_tkk.add_argument("--out")
    build_tkk.set_defaults(run=_tkk)

    axioms = commands.add_parser("axioms", help="Check the three axioms")
    axioms.add_argument("--in", dest="input", required=True)
    axioms.set_defaults(run=_axioms)

    identify = commands.add_parser("identify", help="Isomorphism type")
    identify.add_argument("--in", dest="input", required=True)
    identify.set_defaults(run=_identify)

    index = commands.add_parser("index", help="Dynkin (multi-)index")
    index.add_argument("--source", required=True)
    index.add_argument("--target", required=True)
    index.set_defaults(run=_index)

    claims = commands.add_parser("claims", help="Run registered claims")
    claims.add_argument("--tier", type=int, default=1)
    claims.add_argument("--id")
    claims.add_argument("--format", choices=["json", "text"],
                        default="json")
    claims.add_argument("--out")
    claims.add_argument("--timings", action="store_true",
                        help="Include wall times in the report")
    claims.set_defaults(run=_claims)
    return top


def main(argv=None):
    args = parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(name)s %(levelname)s: %(message)s")
    try:
        return args.run(args)
    except (TkkError, IOError) as e:
        logger.error("%s: %s", type(e).__name__, e)
        return 2


if __name__ == "__main__":
    sys.exit(main())
