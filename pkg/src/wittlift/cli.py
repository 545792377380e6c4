"""Command-line entry points.

Four console scripts:
  verify run [--filter GLOB] [--heavy] [--json PATH] [--md PATH]
  verify list
  obstruct --field p^m --n N --variant glift|blift --rho "..." --mu "..."
  centralizer --field p^m --matrix "..."
  jordan --field p^m --matrix "..."

Exit codes: 0 all pass, 1 any check failed, 2 configuration error.
The environment variable LOL_MAX_GROUP overrides the group-closure bound.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, List, Optional

from .checks import check_ids, run_checks
from .cohom import BicyclicGroupSpec, bicyclic_split, glift_triple
from .errors import WittliftError
from .gfq import fq_make
from .grp import centralizer_of_matrix, element_order
from .linalg import Mat, canonical_form
from .report import write_json, write_markdown
from .rings import FqRing, fq_ring


def _field_ring(text: str) -> FqRing:
    if "^" in text:
        p_text, _, m_text = text.partition("^")
    else:
        p_text, m_text = text, "1"
    return fq_ring(fq_make(int(p_text), int(m_text)))


def _run_entry(
    parser: argparse.ArgumentParser,
    handler: Callable[[argparse.Namespace], int],
    argv: Optional[List[str]],
) -> int:
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return handler(args)
    except (WittliftError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


# verify ---------------------------------------------------------------------


def _verify_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="verify", description="Run the check catalog.")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="execute checks and report")
    run.add_argument("--filter", default=None, metavar="GLOB", help="run matching check ids only")
    run.add_argument("--heavy", action="store_true", help="include whole-group enumerations")
    run.add_argument(
        "--json", default=None, metavar="PATH", help="write JSON report (plus CSV and figures)"
    )
    run.add_argument("--md", default=None, metavar="PATH", help="write markdown digest")
    sub.add_parser("list", help="print all check ids")
    return parser


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.command == "list":
        for cid in check_ids():
            print(cid)
        return 0
    reports = run_checks(filter_glob=args.filter, heavy=args.heavy)
    if args.json:
        write_json(reports, args.json)
    if args.md:
        write_markdown(reports, args.md)
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for rep in sorted(reports, key=lambda r: r.id):
        counts[rep.status] += 1
        print(f"{rep.status.upper():7s} {rep.id}  ({rep.ms:.1f} ms)")
        if rep.status == "fail":
            print(f"        {json.dumps(rep.evidence, sort_keys=True)}")
    print(
        f"{len(reports)} checks: {counts['pass']} pass, "
        f"{counts['fail']} fail, {counts['skipped']} skipped"
    )
    return 1 if counts["fail"] else 0


def main(argv: Optional[List[str]] = None) -> int:
    return _run_entry(_verify_parser(), _cmd_verify, argv)


# obstruct -------------------------------------------------------------------


def _obstruct_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="obstruct", description="Decide a bicyclic lifting obstruction."
    )
    parser.add_argument("--field", required=True, help="p^m, e.g. 2^2")
    parser.add_argument("--n", required=True, type=int)
    parser.add_argument("--variant", default="glift", choices=("glift", "blift"))
    parser.add_argument("--rho", required=True, help='matrix text, e.g. "1,x;0,1"')
    parser.add_argument("--mu", required=True)
    return parser


def _cmd_obstruct(args: argparse.Namespace) -> int:
    ring = _field_ring(args.field)
    rho = Mat.parse(ring, args.rho)
    mu = Mat.parse(ring, args.mu)
    if rho.rows != args.n or mu.rows != args.n:
        raise WittliftError(f"matrices are not {args.n}x{args.n}")
    spec = BicyclicGroupSpec(rho, mu, s=element_order(rho), t=element_order(mu))
    triple = glift_triple(spec, args.variant)
    result = bicyclic_split(spec, triple, args.variant)
    payload = {
        "cocycle_valid": result.cocycle_valid,
        "splits": result.splits,
        "orders": [spec.s, spec.t],
    }
    if result.witness is not None:
        payload["witness"] = [w.text() for w in result.witness]
    if result.certificate is not None:
        payload["certificate"] = result.certificate
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def obstruct_entry(argv: Optional[List[str]] = None) -> int:
    return _run_entry(_obstruct_parser(), _cmd_obstruct, argv)


# centralizer / jordan -------------------------------------------------------


def _matrix_parser(prog: str, desc: str) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=prog, description=desc)
    parser.add_argument("--field", required=True, help="p^m, e.g. 2^1")
    parser.add_argument("--matrix", required=True, help="row-delimited matrix text")
    return parser


def _cmd_centralizer(args: argparse.Namespace) -> int:
    ring = _field_ring(args.field)
    A = Mat.parse(ring, args.matrix)
    G = centralizer_of_matrix(A)
    payload = {"order": G.order, "generators": [g.text() for g in G.generators]}
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def centralizer_entry(argv: Optional[List[str]] = None) -> int:
    parser = _matrix_parser("centralizer", "Conjugation stabilizer of a matrix.")
    return _run_entry(parser, _cmd_centralizer, argv)


def _cmd_jordan(args: argparse.Namespace) -> int:
    ring = _field_ring(args.field)
    A = Mat.parse(ring, args.matrix)
    form = canonical_form(A, "jordan")
    payload = {
        "blocks": [[ring.text(lam), size] for lam, size in form.blocks],
        "conjugator": form.conjugator.text(),
    }
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def jordan_entry(argv: Optional[List[str]] = None) -> int:
    parser = _matrix_parser("jordan", "Jordan canonical form data.")
    return _run_entry(parser, _cmd_jordan, argv)


if __name__ == "__main__":
    sys.exit(main())
