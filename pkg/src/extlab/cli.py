"""Command-line entry point.

Exit codes: 0 success (for check-ext1 and search: Ext^1 ≠ 0), 3 when Ext^1 = 0
was found, 2 on input errors, 1 when verify-paper has failing claims or a
search hit a structural violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

from .field import QQ, FieldSpec
from .ideals import NotGradedError, RingPresentation, embedding_dimension, hilbert_table, krull_dimension
from .lab.delta import ConstraintError
from .lab.ext import NotAParameterError, ext1_check
from .lab.rings import counterexample_ring
from .lab.search import DEFAULT_CAP, SearchScopeError, falsification_search
from .lab.suite import parse_nl, report_to_dict, verify_paper
from .oracle import graded_oracle
from .parser import ParseError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_VANISHES = 3


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    ring_path: Optional[str] = None
    n: Optional[int] = None
    l: Optional[int] = None
    field: Optional[FieldSpec] = None
    max_degree: int = 6
    json: bool = False
    jobs: int = 1
    cap: int = DEFAULT_CAP

    def validate(self, needs_ring: bool) -> None:
        has_path = self.ring_path is not None
        has_nl = self.n is not None or self.l is not None
        if needs_ring and has_path == has_nl:
            raise InputError("give exactly one ring source: --ring PATH or --n N --l L")
        if has_nl and (self.n is None or self.l is None):
            raise InputError("--n and --l go together")
        if self.max_degree < 1:
            raise InputError("--max must be >= 1")
        if self.cap < 1:
            raise InputError("--cap must be >= 1")
        if self.jobs < 1:
            raise InputError("--jobs must be >= 1")

    def load_ring(self) -> RingPresentation:
        if self.ring_path is not None:
            try:
                text = Path(self.ring_path).read_text(encoding="utf-8")
            except OSError as e:
                raise InputError(f"cannot read ring file: {e}") from e
            R = RingPresentation.from_text(text)
            if self.field is not None and self.field != R.field:
                R = R.with_field(self.field)
            return R
        return counterexample_ring(self.n, self.l, self.field or QQ)


def _emit(obj: dict, as_json: bool, text_lines: Sequence[str], out=None) -> None:
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _config(args) -> RunConfig:
    def opt(name, default):
        v = getattr(args, name, None)
        return default if v is None else v

    field = FieldSpec.parse(args.field) if getattr(args, "field", None) else None
    return RunConfig(command=args.command, ring_path=getattr(args, "ring", None),
                     n=getattr(args, "n", None), l=getattr(args, "l", None), field=field,
                     max_degree=opt("max", 6), json=opt("json", False),
                     jobs=opt("jobs", 1), cap=opt("cap", DEFAULT_CAP))


def cmd_gen(args) -> int:
    cfg = _config(args)
    if args.n is None or args.l is None:
        raise InputError("gen needs --n and --l")
    R = counterexample_ring(args.n, args.l, cfg.field or QQ)
    text = R.to_text(comment=f"counterexample ring for (n, l) = ({args.n}, {args.l})")
    v, d = embedding_dimension(R), krull_dimension(R)
    summary = {"command": "gen", "ring": R.name, "n": args.n, "l": args.l, "field": str(R.field),
               "v": v, "dim": d, "generators": len(R.relations), "out": args.out}
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot write {args.out}: {e}") from e
        _emit(summary, cfg.json, [f"wrote {args.out}", f"v(R)={v} dim={d} generators={len(R.relations)}"])
    else:
        sys.stdout.write(text)
        sys.stderr.write(f"v(R)={v} dim={d} generators={len(R.relations)}\n")
    return EXIT_OK


def cmd_check_ext1(args) -> int:
    cfg = _config(args)
    cfg.validate(True)
    R = cfg.load_ring()
    a = R.S.parse(args.param)
    rep = ext1_check(R, a)
    obj = {"command": "check-ext1", **rep.to_dict()}
    lines = [f"ring: {rep.ring}", f"parameter: {rep.parameter}",
             f"I = (0):a = ({', '.join(rep.I) or '0'})",
             f"(0):I = ({', '.join(rep.D)})",
             f"vanishes: {str(rep.vanishes).lower()}", f"ext_length: {rep.ext_length}"]
    if not rep.homogeneous:
        lines += [f"vanishes_locally: {str(rep.vanishes_locally).lower()}",
                  f"local_ext_length: {rep.local_ext_length}"]
    lines += [f"standard: {str(rep.standard).lower()}", f"square_standard: {str(rep.square_standard).lower()}"]
    _emit(obj, cfg.json, lines)
    return EXIT_VANISHES if rep.vanishes_locally else EXIT_OK


def cmd_hilbert(args) -> int:
    cfg = _config(args)
    cfg.validate(True)
    R = cfg.load_ring()
    if not R.is_graded:
        raise NotGradedError(f"{R.name} is not graded")
    tab = hilbert_table(R, None, cfg.max_degree)
    obj = {"command": "hilbert", "ring": R.name, **tab.to_dict()}
    lines = [", ".join(str(x) for x in tab.values())]
    if tab.length is not None:
        lines.append(f"length: {tab.length}")
    if args.oracle:
        odims = graded_oracle(R, "piece-dimension", None, cfg.max_degree).values()
        agree = odims == tab.values()
        obj["oracle_agrees"] = agree
        lines.append(f"oracle: {'agrees' if agree else 'DISAGREES ' + str(odims)}")
        if not agree:
            _emit(obj, cfg.json, lines)
            return EXIT_FAIL
    _emit(obj, cfg.json, lines)
    return EXIT_OK


def cmd_search(args) -> int:
    cfg = _config(args)
    cfg.validate(True)
    if cfg.field is None:
        cfg.field = FieldSpec.parse("F2")
    R = cfg.load_ring()
    rep = falsification_search(R, cfg.max_degree, cfg.cap, expect_vanishing=None,
                               suite=args.suite, jobs=cfg.jobs)
    obj = {"command": "search", **rep.to_dict()}
    w = rep.witness
    lines = [f"ring: {R.name} over {w['field']}, degree <= {w['max_degree']}",
             f"candidates: {w['tested']}, parameters: {w['parameters']}",
             f"vanishing: {w['vanishing_count']}" + (f" ({', '.join(w['vanishing'])})" if w["vanishing"] else ""),
             rep.line()]
    _emit(obj, cfg.json, lines)
    if not rep.passed:
        return EXIT_FAIL
    return EXIT_VANISHES if w["vanishing_count"] else EXIT_OK


def cmd_verify_paper(args) -> int:
    field = FieldSpec.parse(args.field) if args.field else QQ
    nl = parse_nl(args.nl) if args.nl else None
    if args.jobs is not None and args.jobs < 1:
        raise InputError("--jobs must be >= 1")
    result = verify_paper(field, nl, search=not args.no_search, jobs=args.jobs or 1)
    obj = {"command": "verify-paper", **report_to_dict(result)}
    lines = [r.line() for r in result["claims"]]
    lines.append(f"{result['passed']}/{result['total']} claims pass")
    if args.out:
        try:
            Path(args.out).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot write {args.out}: {e}") from e
    _emit(obj, args.json, lines)
    return EXIT_OK if result["all_pass"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="extlab", description="Ext^1 vanishing laboratory for one-dimensional rings")
    sub = p.add_subparsers(dest="command", required=True)

    def ring_source(sp):
        sp.add_argument("--ring", help="ring presentation file")
        sp.add_argument("--n", type=int, help="counterexample ring parameter n")
        sp.add_argument("--l", type=int, help="counterexample ring parameter l")

    def common(sp):
        sp.add_argument("--field", help="Q, F2, F3, ...")
        sp.add_argument("--json", action="store_true", help="emit JSON")

    g = sub.add_parser("gen", help="write the (n, l) counterexample ring")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--l", type=int, required=True)
    g.add_argument("--out", help="output path (default: stdout)")
    common(g)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check-ext1", help="decide Ext^1_R(R/(a), R) = 0")
    ring_source(c)
    c.add_argument("--param", required=True, help="the parameter a")
    common(c)
    c.set_defaults(func=cmd_check_ext1)

    h = sub.add_parser("hilbert", help="Hilbert function of R")
    ring_source(h)
    h.add_argument("--max", type=int, default=6)
    h.add_argument("--oracle", action="store_true", help="cross-check with graded linear algebra")
    common(h)
    h.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("search", help="exhaustive search for vanishing parameters over F_p")
    ring_source(s)
    s.add_argument("--max", type=int, default=1, help="maximal degree of candidates")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--suite", action="store_true", help="also check structural facts on every parameter")
    common(s)
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify-paper", help="run every claim check")
    v.add_argument("--nl", nargs="*", help="(n,l) pairs as N,L")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--out", help="also write the JSON report here")
    v.add_argument("--no-search", action="store_true")
    common(v)
    v.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, ConstraintError, NotAParameterError, NotGradedError, SearchScopeError, ParseError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
