"""Batch command-line surface with stable file formats and exit codes.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 budget exceeded.  Output is deterministic JSON (sorted keys, version field)
so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys

from .determinantal import LSequence, verify_main
from .errors import BudgetExceeded, ExplosionGuard, ToolkitError
from .homset import HomIdeal, enumerate_isotone
from .ideals import coletterplace_ideal, letterplace_ideal, support
from .monomial import (
    MonomialIdeal,
    alexander_dual,
    elem_var,
    hilbert_numerator,
    nat_var,
    parse_monomial,
)
from .poset import Poset
from .pstable import is_p_stable
from .quotient import FiberMap, project_ideal, regular_quotient_check
from .stable import dualize_ss, dualize_ss_bounded

VERSION = 1


def _emit(doc: dict, out_path=None, fmt: str = "json") -> None:
    doc = dict(doc)
    doc["version"] = VERSION
    if fmt == "text":
        lines = []
        for key in sorted(doc):
            value = doc[key]
            if isinstance(value, list) and all(not isinstance(v, dict) for v in value):
                lines.append(f"{key}:")
                lines.extend(f"  {v}" for v in value)
            else:
                lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_homideal(path: str) -> HomIdeal:
    return HomIdeal.from_json(_read(path))


def read_ideal_file(path: str) -> MonomialIdeal:
    """Monomial-ideal file: '# family=<elem|nat|pair> n=<k>' then one monomial per line."""
    lines = [ln.strip() for ln in _read(path).splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise ValueError("ideal file must start with a '# family=... n=...' header")
    fields = dict(tok.split("=", 1) for tok in lines[0][1:].split())
    family = fields.get("family", "pair")
    n = int(fields.get("n", "0"))
    if family == "elem":
        universe = [elem_var(p) for p in range(n)]
    elif family == "nat":
        universe = [nat_var(i) for i in range(n)]
    else:
        universe = None
    gens = [parse_monomial(ln, family=family) for ln in lines[1:]]
    return MonomialIdeal(gens, universe if universe else None)


def write_ideal_file(I: MonomialIdeal, family: str, path=None) -> str:
    n = len(I.universe)
    lines = [f"# family={family} n={n}"] + I.text_lines()
    text = "\n".join(lines) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def _fiber_map(selector: str, J: HomIdeal, ideal: MonomialIdeal) -> FiberMap:
    pairs = sorted({(v.a, v.b) for g in ideal.gens for v in g.support()})
    if not pairs:
        pairs = sorted(support(J))
    if selector == "p1":
        return FiberMap.projection_first(pairs)
    if selector == "p2":
        return FiberMap.projection_second(pairs)
    return FiberMap.from_json(_read(selector))


def _side_ideal(J: HomIdeal, side: str) -> MonomialIdeal:
    if side == "letterplace":
        return letterplace_ideal(J)
    if side == "coletterplace":
        return coletterplace_ideal(J)
    raise ValueError(f"unknown side {side!r}")


# -- subcommand handlers ----------------------------------------------------


def _cmd_hom_enumerate(args) -> int:
    P = Poset.from_json(_read(args.poset))
    maps = enumerate_isotone(P, args.bound, args.cap)
    _emit({"count": len(maps), "maps": [list(m) for m in maps]}, args.output, args.format)
    return 0


def _cmd_markers(args) -> int:
    J = _load_homideal(args.ideal)
    marks = J.minimal_markers()
    _emit(
        {
            "markers": [
                {"domain": sorted(m.domain), "graph": sorted(m.graph())} for m in marks
            ]
        },
        args.output,
        args.format,
    )
    return 0


def _cmd_letterplace(args, side: str) -> int:
    J = _load_homideal(args.ideal)
    ideal = _side_ideal(J, side)
    doc = {
        "generators": ideal.text_lines(J.poset.labels),
        "support": sorted(list(s) for s in support(J)),
        "bound_used": J.nmax(),
        "unit": ideal.is_unit,
        "zero": ideal.is_zero,
    }
    _emit(doc, args.output, args.format)
    return 0


def _cmd_dual_check(args) -> int:
    J = _load_homideal(args.ideal)
    L = letterplace_ideal(J)
    C = coletterplace_ideal(J)
    ok = alexander_dual(C, L.universe or C.universe).gens == L.gens
    _emit(
        {
            "dual_ok": ok,
            "letterplace": L.text_lines(J.poset.labels),
            "coletterplace": C.text_lines(J.poset.labels),
        },
        args.output,
        args.format,
    )
    return 0 if ok else 1


def _cmd_project(args) -> int:
    J = _load_homideal(args.ideal)
    ideal = _side_ideal(J, args.side)
    fmap = _fiber_map(args.map, J, ideal)
    out = project_ideal(ideal, fmap)
    _emit({"generators": out.text_lines(), "side": args.side}, args.output, args.format)
    return 0


def _cmd_regular_check(args) -> int:
    J = _load_homideal(args.ideal)
    ideal = _side_ideal(J, args.side)
    fmap = _fiber_map(args.map, J, ideal)
    ok = regular_quotient_check(ideal, fmap)
    _emit({"regular": ok, "side": args.side}, args.output, args.format)
    return 0 if ok else 1


def _cmd_pstable(args) -> int:
    P = Poset.from_json(_read(args.poset))
    I = read_ideal_file(args.gens)
    verdict = is_p_stable(P, I, args.mode, args.depth)
    _emit({"p_stable": verdict, "mode": args.mode}, args.output, args.format)
    return 0


def _cmd_ss_dualize(args) -> int:
    I = read_ideal_file(args.gens)
    if args.bound is not None:
        out = dualize_ss_bounded(I, args.bound)
        text = write_ideal_file(out, "elem", args.output)
    else:
        out = dualize_ss(I)
        text = write_ideal_file(out, "nat", args.output)
    if not args.output:
        sys.stdout.write(text)
    return 0


def _cmd_det_verify(args) -> int:
    seq = LSequence(args.a, tuple(int(t) for t in args.l.split(",")))
    report = verify_main(seq, args.degree_cap, args.pair_cap)
    _emit(report, args.output, args.format)
    return 0 if report["ok"] else 1


def _cmd_hilbert(args) -> int:
    I = read_ideal_file(args.gens)
    K = hilbert_numerator(I)
    _emit(
        {
            "numerator": {str(d): c for d, c in sorted(K.coeffs().items())},
            "variables": len(I.universe),
        },
        args.output,
        args.format,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="letterplace", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")
        p.add_argument("--format", choices=("json", "text"), default="json")

    hom = sub.add_parser("hom", help="Hom(P,N) queries").add_subparsers(
        dest="homcmd", required=True
    )
    p = hom.add_parser("enumerate", help="all isotone maps up to a value bound")
    p.add_argument("--poset", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--cap", type=int, default=10**7)
    add_output(p)
    p.set_defaults(func=_cmd_hom_enumerate)

    p = sub.add_parser("markers", help="minimal markers of a HomIdeal")
    p.add_argument("--ideal", required=True)
    add_output(p)
    p.set_defaults(func=_cmd_markers)

    for side in ("letterplace", "coletterplace"):
        p = sub.add_parser(side, help=f"{side} generators of a HomIdeal")
        p.add_argument("--ideal", required=True)
        add_output(p)
        p.set_defaults(func=lambda a, s=side: _cmd_letterplace(a, s))

    p = sub.add_parser("dual-check", help="verify the two ideals are Alexander dual")
    p.add_argument("--ideal", required=True)
    add_output(p)
    p.set_defaults(func=_cmd_dual_check)

    for name, handler in (("project", _cmd_project), ("regular-check", _cmd_regular_check)):
        p = sub.add_parser(name)
        p.add_argument("--ideal", required=True)
        p.add_argument("--side", choices=("letterplace", "coletterplace"), required=True)
        p.add_argument("--map", required=True, help="p1, p2, or a fiber-map JSON file")
        add_output(p)
        p.set_defaults(func=handler)

    p = sub.add_parser("pstable", help="stability of a monomial ideal over a poset")
    p.add_argument("--poset", required=True)
    p.add_argument("--gens", required=True, help="monomial ideal file (family=elem)")
    p.add_argument("--mode", choices=("exact", "bounded"), default="exact")
    p.add_argument("--depth", type=int, default=None)
    add_output(p)
    p.set_defaults(func=_cmd_pstable)

    ss = sub.add_parser("ss", help="strongly stable ideals").add_subparsers(
        dest="sscmd", required=True
    )
    p = ss.add_parser("dualize", help="dual strongly stable ideal")
    p.add_argument("--gens", required=True)
    p.add_argument("--bound", type=int, default=None, help="deg window for the finite duality")
    add_output(p)
    p.set_defaults(func=_cmd_ss_dualize)

    det = sub.add_parser("det", help="staircase determinantal ideals").add_subparsers(
        dest="detcmd", required=True
    )
    p = det.add_parser("verify", help="initial ideal and codimension report")
    p.add_argument("--l", required=True, help="comma-separated weakly increasing values")
    p.add_argument("--a", type=int, default=0, help="starting index of the sequence")
    p.add_argument("--degree-cap", type=int, default=None)
    p.add_argument("--pair-cap", type=int, default=200_000)
    add_output(p)
    p.set_defaults(func=_cmd_det_verify)

    p = sub.add_parser("hilbert", help="Hilbert-series numerator of a monomial ideal")
    p.add_argument("--gens", required=True)
    add_output(p)
    p.set_defaults(func=_cmd_hilbert)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (BudgetExceeded, ExplosionGuard) as exc:
        _emit({"error": str(exc), "reason": type(exc).__name__})
        return 3
    except (ToolkitError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        _emit({"error": str(exc), "reason": type(exc).__name__})
        return 2


if __name__ == "__main__":
    sys.exit(main())
