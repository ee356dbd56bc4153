"""Command-line entry point: ``knotbounds <subcommand> ...``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds as B
from .braid import closure, parse_braid, torus_braid
from .diagram import DiagramError, PlanarDiagram, is_alternating, is_reduced
from .doubles import DoubleSpec, blackboard_double, double_genus_certificate
from .harness import SuiteConfig, format_pd, load_fixtures, parse_fixture, run_suite
from .poly import degrees
from .seifert import FlypeSiteError, flype, flype_site, seifert_circles
from .skein import CrossingCapError, conway, homfly, kauffman, kauffman_mod2


def _read_pd(path: str) -> tuple[str, PlanarDiagram]:
    fx = parse_fixture(Path(path).read_text(encoding="ascii"), path)
    return fx.name, fx.diagrams[0]


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.replace(",", " ").split()]


def _diagram_from(args) -> tuple[str, PlanarDiagram]:
    if args.pd:
        return _read_pd(args.pd)
    w = parse_braid(args.braid, args.strands)
    return f"closure({' '.join(map(str, w.to_ints()))})", closure(w)


def cmd_invariants(args) -> int:
    name, D = _diagram_from(args)
    sd = seifert_circles(D)
    out = [
        f"name          {name}",
        f"c(D)          {D.c}",
        f"|K|           {D.component_count}",
        f"writhe        {D.writhe}",
        f"s(D)          {sd.s}",
        f"2g(D)         {sd.diagram_genus_twice}",
        f"alternating   {is_alternating(D)}",
        f"reduced       {is_reduced(D)}",
    ]
    try:
        P = homfly(D, args.homfly_cap)
        d = degrees(P)
        out += [
            f"HOMFLY        {P.to_text(('v', 'z'))}",
            f"  degrees     e={d.e} E={d.E} m={d.m} M={d.M}",
            f"Conway        {conway(D, args.homfly_cap).to_text(('v', 'z'))}",
            f"MWF b >=      {B.mwf_bound(d)}",
            f"Morton M <=   {D.c - sd.s + 1}  (M={B.morton_genus_bound(d)})",
            f"c >=          {B.homfly_crossing_bound(d)}  (M + (E-e)/2)",
        ]
    except CrossingCapError as exc:
        out.append(f"HOMFLY        skipped: {exc}")
    try:
        F = kauffman(D, args.kauffman_cap)
        fd = degrees(F)
        G = degrees(kauffman_mod2(D, args.kauffman_cap))
        out += [
            f"Kauffman      {F.to_text(('a', 'z'))}",
            f"  degrees     a:{fd.e}..{fd.E} z:{fd.m}..{fd.M}",
            f"c >=          {B.kidwell_bound(fd.M)}  (maxdeg_z F + 1, knots)",
            f"alpha >=      {B.arc_index_bound_mod2(G.E - G.e)}  (mod-2 a-spread + 2)",
        ]
    except CrossingCapError as exc:
        out.append(f"Kauffman      skipped: {exc}")
    print("\n".join(out))
    return 0


def cmd_torus(args) -> int:
    ti = B.torus_invariants(args.p, args.q)
    D = closure(torus_braid(args.p, args.q))
    sd = seifert_circles(D)
    verdict = B.f_check(ti.c, ti.g2, ti.b, ti.components)
    print(f"T({args.p},{args.q})")
    print(f"c = pq-p      {ti.c}   (closure: c(D)={D.c})")
    print(f"b             {ti.b}   (closure: s(D)={sd.s})")
    print(f"|K|           {ti.components}   (closure: {D.component_count})")
    print(f"2g            {ti.g2}   (closure: 2g(D)={sd.diagram_genus_twice})")
    print(f"pq-p-q+|K|-2  {B.torus_display_genus_twice(args.p, args.q)}   (alternative closed form)")
    print(f"F-family      {verdict}")
    return 0


def cmd_double(args) -> int:
    name, base = _read_pd(args.pd)
    spec = DoubleSpec(base, 1 if args.clasp == "+" else -1, args.twists, args.clasp_arc)
    W = blackboard_double(spec)
    cert = double_genus_certificate(spec)
    print(f"double of {name}: clasp {args.clasp}, {args.twists} half-twists")
    for key in ("crossings", "components", "s", "twice_genus", "genus_upper_bound", "base_crossings"):
        print(f"{key:18s}{cert[key]}")
    c = cert["base_crossings"]
    print(f"{'s = 2c+1':18s}{cert['claim_2c_plus_1']}  ({2 * c + 1})")
    print(f"{'g(D) = c':18s}{cert['claim_g_equals_c']}  ({c})")
    if args.emit_pd:
        Path(args.emit_pd).write_text(format_pd(f"W_{name}", W), encoding="ascii")
        print(f"wrote {args.emit_pd}")
    return 0


def cmd_flype(args) -> int:
    name, D = _read_pd(args.pd)
    tangle, pivot = args.tangle, args.pivot
    if args.site:
        t_text, _, p_text = args.site.partition(":")
        tangle, pivot = t_text, int(p_text)
    if tangle is None or pivot is None:
        print("flype needs --tangle and --pivot, or --site T:P", file=sys.stderr)
        return 2
    site = flype_site(D, _ints(tangle), pivot)
    E = flype(D, site)
    print(f"s(D) {seifert_circles(D).s} -> {seifert_circles(E).s}, c {D.c} -> {E.c}, |K| {D.component_count} -> {E.component_count}")
    text = format_pd(f"{name}_flyped", E)
    if args.emit_pd:
        Path(args.emit_pd).write_text(text, encoding="ascii")
        print(f"wrote {args.emit_pd}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    fixtures = load_fixtures(args.fixtures)
    cfg = SuiteConfig(
        homfly_cap=args.homfly_cap,
        kauffman_cap=args.kauffman_cap,
        max_pq=args.max_pq,
        twists=args.twists,
        seed=args.seed,
    )
    report = run_suite(fixtures, cfg)
    text = report.to_text()
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.machine:
        Path(args.machine).write_text(report.to_jsonl(), encoding="utf-8")
    if args.report:
        print(text.splitlines()[-1])
    return 1 if report.violated else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="knotbounds", description="Knot invariants and crossing-number bounds.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="diagram data, polynomials and bounds")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--pd", help="PD fixture file")
    src.add_argument("--braid", help='signed generators, e.g. "1 -2 1 -2"')
    p.add_argument("--strands", type=int, help="strand count for --braid")
    p.add_argument("--homfly-cap", type=int, default=None)
    p.add_argument("--kauffman-cap", type=int, default=None)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("torus", help="torus-link invariants from the closed-form formulas")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_torus)

    p = sub.add_parser("double", help="blackboard Whitehead double of a diagram")
    p.add_argument("--pd", required=True)
    p.add_argument("--clasp", choices=["+", "-"], default="+")
    p.add_argument("--twists", type=int, default=0)
    p.add_argument("--clasp-arc", type=int, default=1)
    p.add_argument("--emit-pd")
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("flype", help="flype a crossing across a tangle (0-based crossing indices)")
    p.add_argument("--pd", required=True)
    p.add_argument("--tangle", help="comma-separated crossing indices")
    p.add_argument("--pivot", type=int)
    p.add_argument("--site", help="shorthand TANGLE:PIVOT, e.g. 1,2:0")
    p.add_argument("--emit-pd")
    p.set_defaults(func=cmd_flype)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--fixtures", help="directory of .pd files (default: bundled table)")
    p.add_argument("--report", help="write the text report here")
    p.add_argument("--machine", help="write JSON lines here")
    p.add_argument("--homfly-cap", type=int, default=16)
    p.add_argument("--kauffman-cap", type=int, default=14)
    p.add_argument("--max-pq", type=int, default=8)
    p.add_argument("--twists", type=int, default=5)
    p.add_argument("--seed", type=int, default=1729)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DiagramError, FlypeSiteError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
