"""Fixture files, the verification suite and its report.

A fixture file describes one knot or link::

    name 3_1
    tag prime
    known c 3 knot-table
    X 1 4 2 5
    X 3 6 4 1
    X 5 2 6 3
    braid 2 1 1 1

``X`` lines make one diagram.  Recipe lines (``torus p q``, ``pretzel a b ...``,
``braid n w1 w2 ...``, ``double <fixture> +|- n``) each add another diagram of
the same link.  ``#`` starts a comment.

Known values whose provenance is ``cited`` are taken as given.  Every other
known value is only compared against what the suite can certify on its own.
"""

from __future__ import annotations

import json
import os
import random
from math import gcd
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from . import bounds as B
from .braid import (
    BraidWord,
    closure,
    conjugate,
    is_homogeneous,
    stabilize,
    torus_braid,
)
from .diagram import (
    DiagramError,
    PlanarDiagram,
    connected_sum,
    is_alternating,
    is_reduced,
    mirror,
    pretzel,
    unknot,
    validate,
)
from .doubles import DoubleSpec, blackboard_double
from .poly import DegreeSummary, LaurentPoly2, degrees
from .seifert import flype, flype_site, pretzel_flype_sites, s_a, seifert_circles
from .skein import CrossingCapError, conway, homfly, kauffman, kauffman_mod2

__all__ = [
    "KNOWN_FIELDS",
    "KnotRecord",
    "Fixture",
    "FixtureParseError",
    "parse_fixture",
    "format_pd",
    "load_fixtures",
    "SuiteConfig",
    "Row",
    "Report",
    "run_suite",
    "STATUSES",
]

KNOWN_FIELDS = ("c", "g", "gf", "gc", "b", "alpha")
CITED = "cited"

CONSISTENT = "consistent"
SHARP = "sharp"
VIOLATED = "violated"
SKIPPED = "skipped"
NOTED = "discrepancy-noted"
STATUSES = (CONSISTENT, SHARP, VIOLATED, SKIPPED, NOTED)


class FixtureParseError(ValueError):
    def __init__(self, source: str, line: int, msg: str):
        super().__init__(f"{source}:{line}: {msg}")
        self.source = source
        self.line = line


@dataclass(frozen=True)
class KnotRecord:
    name: str
    diagrams: tuple[PlanarDiagram, ...]
    known: tuple[tuple[str, int, str], ...] = ()

    def value(self, fld: str) -> int | None:
        for f, v, _ in self.known:
            if f == fld:
                return v
        return None

    def provenance(self, fld: str) -> str | None:
        for f, _, p in self.known:
            if f == fld:
                return p
        return None

    @property
    def known_c(self):
        return self.value("c")

    @property
    def known_g(self):
        return self.value("g")

    @property
    def known_gf(self):
        return self.value("gf")

    @property
    def known_b(self):
        return self.value("b")

    @property
    def known_alpha(self):
        return self.value("alpha")


@dataclass(frozen=True)
class Fixture:
    record: KnotRecord
    braids: tuple[BraidWord, ...] = ()
    recipes: tuple[str, ...] = ()
    tags: frozenset[str] = frozenset()
    source: str = ""

    @property
    def name(self) -> str:
        return self.record.name

    @property
    def diagrams(self) -> tuple[PlanarDiagram, ...]:
        return self.record.diagrams


def _ints(parts, source, lineno):
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FixtureParseError(source, lineno, "expected integers") from None


def _expand(words, source, lineno, resolved):
    kind, args = words[0], words[1:]
    try:
        if kind == "torus":
            p, q = _ints(args, source, lineno)
            w = torus_braid(max(p, q), min(p, q))
            return closure(w), w
        if kind == "pretzel":
            return pretzel(*_ints(args, source, lineno)), None
        if kind == "braid":
            nums = _ints(args, source, lineno)
            if not nums:
                raise FixtureParseError(source, lineno, "braid needs a strand count")
            w = BraidWord.from_ints(nums[1:], nums[0])
            return closure(w), w
        if kind == "double":
            if len(args) != 3 or args[1] not in "+-":
                raise FixtureParseError(source, lineno, "expected: double <fixture> +|- <twists>")
            base = resolved.get(args[0])
            if base is None:
                raise FixtureParseError(source, lineno, f"unknown base fixture {args[0]!r}")
            sign = 1 if args[1] == "+" else -1
            spec = DoubleSpec(base.diagrams[0], sign, _ints(args[2:], source, lineno)[0])
            return blackboard_double(spec), None
    except DiagramError as exc:
        raise FixtureParseError(source, lineno, str(exc)) from None
    raise FixtureParseError(source, lineno, f"unknown line type {kind!r}")


def _check_labels(xlines, source):
    seen: dict[int, int] = {}
    for lineno, quad in xlines:
        for a in quad:
            seen[a] = seen.get(a, 0) + 1
            if seen[a] > 2:
                raise FixtureParseError(source, lineno, f"arc label {a} used more than twice")


def parse_fixture(text: str, source: str = "<string>", resolved: dict | None = None) -> Fixture:
    """Parse one fixture file.  ``resolved`` maps names to fixtures for ``double`` recipes."""
    resolved = resolved or {}
    name = None
    known: list[tuple[str, int, str]] = []
    tags: set[str] = set()
    xlines: list[tuple[int, tuple[int, int, int, int]]] = []
    recipe_lines: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        head = words[0]
        if head == "name":
            if len(words) != 2:
                raise FixtureParseError(source, lineno, "expected: name <string>")
            name = words[1]
        elif head == "known":
            if len(words) != 4 or words[1] not in KNOWN_FIELDS:
                raise FixtureParseError(source, lineno, f"expected: known <{'|'.join(KNOWN_FIELDS)}> <int> <provenance>")
            val = _ints(words[2:3], source, lineno)[0]
            if val < 0:
                raise FixtureParseError(source, lineno, "known values are nonnegative")
            known.append((words[1], val, words[3]))
        elif head == "tag":
            tags.update(words[1:])
        elif head == "X":
            if len(words) != 5:
                raise FixtureParseError(source, lineno, "a crossing needs four arc labels")
            xlines.append((lineno, tuple(_ints(words[1:], source, lineno))))
        else:
            recipe_lines.append((lineno, words))
    if name is None:
        raise FixtureParseError(source, 1, "missing name line")
    diagrams = []
    braids = []
    if xlines or not recipe_lines:
        _check_labels(xlines, source)
        try:
            diagrams.append(validate([q for _, q in xlines]))
        except DiagramError as exc:
            line = xlines[0][0] if xlines else 1
            raise FixtureParseError(source, line, str(exc)) from None
    for lineno, words in recipe_lines:
        D, w = _expand(words, source, lineno, resolved)
        diagrams.append(D)
        if w is not None:
            braids.append(w)
    for D in diagrams:
        if D.split:
            raise FixtureParseError(source, 1, "fixture diagrams must be non-split")
    ks = {D.component_count for D in diagrams}
    if len(ks) != 1:
        raise FixtureParseError(source, 1, f"diagrams disagree on the component count: {sorted(ks)}")
    record = KnotRecord(name, tuple(diagrams), tuple(known))
    return Fixture(record, tuple(braids), tuple(" ".join(w) for _, w in recipe_lines), frozenset(tags), source)


def format_pd(name: str, D: PlanarDiagram, known: Iterable[tuple[str, int, str]] = ()) -> str:
    """Fixture-file text for a single diagram."""
    if D.free_loops and D.c:
        raise DiagramError("split diagrams with free loops cannot be written as PD files")
    lines = [f"name {name}"]
    lines += [f"known {f} {v} {p}" for f, v, p in known]
    lines += ["X " + " ".join(str(a) for a in quad) for quad in D.pd()]
    return "\n".join(lines) + "\n"


def _bundled_dir():
    return resources.files("knotbounds") / "data"


def load_fixtures(path=None) -> list[Fixture]:
    """Load every ``*.pd`` file in a directory (the bundled table by default).

    Files are read in name order, with ``double`` recipes resolved after the
    fixtures they refer to.
    """
    root = _bundled_dir() if path is None else Path(path)
    files = sorted((p for p in root.iterdir() if p.name.endswith(".pd")), key=lambda p: p.name)
    texts = [(p.name, p.read_text(encoding="ascii")) for p in files]

    def uses_double(text):
        return any(line.split()[:1] == ["double"] for line in text.splitlines())

    resolved: dict[str, Fixture] = {}
    for later in (False, True):
        for src, text in texts:
            if uses_double(text) == later:
                fx = parse_fixture(text, src, resolved)
                resolved[fx.name] = fx
    return sorted(resolved.values(), key=lambda f: f.name)


# ---------------------------------------------------------------- suite


@dataclass(frozen=True)
class SuiteConfig:
    homfly_cap: int = 16
    kauffman_cap: int = 14
    max_pq: int = 8
    twists: int = 5
    seed: int = 1729
    markov_trials: int = 20
    homogeneous_count: int = 12
    threads: int = field(default_factory=lambda: max(1, int(os.environ.get("KNOTBOUNDS_THREADS", "1"))))


@dataclass(frozen=True)
class Row:
    proposition: str
    inputs: str
    bound: str
    known: str
    status: str

    def as_dict(self) -> dict:
        return {
            "proposition": self.proposition,
            "inputs": self.inputs,
            "bound": self.bound,
            "known": self.known,
            "status": self.status,
        }


@dataclass
class Report:
    rows: list[Row] = field(default_factory=list)

    def add(self, proposition, inputs, bound, known, status) -> Row:
        if status not in STATUSES:
            raise ValueError(f"unknown status {status!r}")
        row = Row(proposition, str(inputs), str(bound), "-" if known is None else str(known), status)
        self.rows.append(row)
        return row

    def summary(self) -> dict[str, int]:
        out = {s: 0 for s in STATUSES}
        for r in self.rows:
            out[r.status] += 1
        return out

    @property
    def violated(self) -> bool:
        return any(r.status == VIOLATED for r in self.rows)

    def select(self, proposition: str) -> list[Row]:
        return [r for r in self.rows if r.proposition == proposition]

    def to_text(self) -> str:
        header = ("proposition", "inputs", "bound", "known value", "status")
        table = [header] + [(r.proposition, r.inputs, r.bound, r.known, r.status) for r in self.rows]
        widths = [max(len(row[i]) for row in table) for i in range(5)]
        lines = [" | ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table]
        counts = self.summary()
        lines.append("")
        lines.append(f"rows {len(self.rows)}: " + ", ".join(f"{s} {counts[s]}" for s in STATUSES))
        return "\n".join(lines) + "\n"

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r.as_dict(), sort_keys=True) + "\n" for r in self.rows)


def _lower(bound: int, known: int | None) -> str:
    if known is None:
        return CONSISTENT
    if bound > known:
        return VIOLATED
    return SHARP if bound == known else CONSISTENT


def _fmt(**kw) -> str:
    return " ".join(f"{k}={v}" for k, v in kw.items())


def _wlabel(w: BraidWord) -> str:
    return ",".join(str(x) for x in w.to_ints()) + f"/{w.strand_count}"


def _bracket(lo: int, hi: int):
    return lo if lo == hi else (lo, hi)


def _show(x) -> str:
    return f"[{x[0]},{x[1]}]" if isinstance(x, tuple) else str(x)


@dataclass
class _Stats:
    c: int
    k: int
    s: int
    g2: int
    alternating: bool
    reduced: bool
    homfly: LaurentPoly2 | None = None
    hdeg: DegreeSummary | None = None
    conway_deg: int | None = None
    kauffman: LaurentPoly2 | None = None
    kdeg: DegreeSummary | None = None
    mod2_spread: int | None = None
    homfly_skip: str | None = None
    kauffman_skip: str | None = None


class _Suite:
    def __init__(self, config: SuiteConfig):
        self.cfg = config
        self.report = Report()
        self.rng = random.Random(config.seed)
        self.diagram_count = 0
        self.parity_failures: list[str] = []
        self._cache: dict = {}

    # shared diagram statistics --------------------------------------------------
    def stats(self, D: PlanarDiagram, label: str, polys: bool = True) -> _Stats:
        key = (tuple(D.pd()), D.free_loops, polys)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        sd = seifert_circles(D)
        self.diagram_count += 1
        if sd.diagram_genus_twice % 2:
            self.parity_failures.append(label)
        st = _Stats(D.c, D.component_count, sd.s, sd.diagram_genus_twice, is_alternating(D), is_reduced(D))
        if polys:
            try:
                st.homfly = homfly(D, self.cfg.homfly_cap)
                st.hdeg = degrees(st.homfly)
                st.conway_deg = degrees(conway(D, self.cfg.homfly_cap)).M
            except CrossingCapError as exc:
                st.homfly_skip = str(exc)
            try:
                st.kauffman = kauffman(D, self.cfg.kauffman_cap)
                st.kdeg = degrees(st.kauffman)
                g = degrees(kauffman_mod2(D, self.cfg.kauffman_cap))
                st.mod2_spread = g.E - g.e
            except CrossingCapError as exc:
                st.kauffman_skip = str(exc)
        self._cache[key] = st
        return st

    def add(self, *a):
        return self.report.add(*a)

    def safety(self, label: str, st: _Stats):
        """Braid-index and Morton inequalities for one diagram."""
        if st.hdeg is None:
            self.add("mwf-braid-index", f"D={label}", "-", st.s, SKIPPED)
            self.add("morton-degree", f"D={label}", "-", st.c - st.s + 1, SKIPPED)
            return
        mwf = B.mwf_bound(st.hdeg)
        self.add("mwf-braid-index", f"D={label} E={st.hdeg.E} e={st.hdeg.e}", mwf, st.s, _lower(mwf, st.s))
        M = B.morton_genus_bound(st.hdeg)
        self.add("morton-degree", _fmt(D=label, c=st.c, s=st.s), M, st.c - st.s + 1, _lower(M, st.c - st.s + 1))

    # propositions ---------------------------------------------------------------
    def torus(self):
        cfg = self.cfg
        display_diffs = 0
        pairs = 0
        for p in range(2, cfg.max_pq + 1):
            for q in range(2, p + 1):
                pairs += 1
                ti = B.torus_invariants(p, q)
                D = closure(torus_braid(p, q))
                st = self.stats(D, f"T({p},{q})", polys=False)
                agree = (st.c, st.s, st.k, st.g2) == (ti.c, ti.b, ti.components, ti.g2)
                verdict = B.f_check(ti.c, ti.g2, ti.b, ti.components)
                ok = agree and verdict.status is B.Membership.IN_F
                self.add(
                    "torus-formula",
                    _fmt(p=p, q=q, **{"c(D)": st.c, "s(D)": st.s, "|K|": st.k}),
                    f"c={ti.c} b={ti.b} 2g={ti.g2} {verdict}",
                    f"pq-p={p * q - p}",
                    SHARP if ok else VIOLATED,
                )
                if B.torus_display_genus_twice(p, q) != ti.g2:
                    display_diffs += 1
        self.add(
            "torus-genus-display",
            f"pairs={pairs} 2g=pq-p-q-|K|+2 vs pq-p-q+|K|-2",
            f"differ={display_diffs}",
            "agree only when |K|=2",
            NOTED,
        )
        # torus knots up to the default HOMFLY cap; a smaller cap turns rows into skips
        for p in range(3, 17):
            for q in range(2, p):
                if gcd(p, q) != 1 or p * q - p > 16:
                    continue
                D = closure(torus_braid(p, q))
                label = f"T({p},{q})"
                st = self.stats(D, label)
                if st.hdeg is None:
                    self.add("homfly-crossing-bound", f"D={label}", "-", p * q - p, SKIPPED)
                    continue
                bound = B.homfly_crossing_bound(st.hdeg)
                self.add(
                    "homfly-crossing-bound",
                    _fmt(D=label, M=st.hdeg.M, E=st.hdeg.E, e=st.hdeg.e),
                    bound,
                    p * q - p,
                    _lower(bound, p * q - p),
                )
                self.safety(label, st)

    def fixture_rows(self, fixtures: Sequence[Fixture]):
        def compute(fx):
            return [self.stats(D, f"{fx.name}#{i}") for i, D in enumerate(fx.diagrams)]

        if self.cfg.threads > 1:
            # warm the polynomial memo concurrently; rows are still emitted in order
            with ThreadPoolExecutor(self.cfg.threads) as pool:
                all_stats = list(pool.map(compute, fixtures))
        else:
            all_stats = [compute(fx) for fx in fixtures]
        for fx, sts in zip(fixtures, all_stats):
            self.one_fixture(fx, sts)

    def one_fixture(self, fx: Fixture, sts: list[_Stats]):
        name = fx.name
        rec = fx.record
        k = sts[0].k
        for i, st in enumerate(sts):
            self.safety(f"{name}#{i}", st)
        poly = next((st for st in sts if st.hdeg is not None), None)
        kpoly = next((st for st in sts if st.kdeg is not None), None)
        trivial = min(st.c for st in sts) == 0
        c_known, c_prov = rec.value("c"), rec.provenance("c")

        # certified brackets --------------------------------------------------
        c_hi = min(st.c for st in sts)
        c_lo = 0
        if poly is not None:
            c_lo = max(c_lo, B.homfly_crossing_bound(poly.hdeg))
        if kpoly is not None and k == 1 and not trivial:
            c_lo = max(c_lo, B.kidwell_bound(kpoly.kdeg.M))
        if any(st.alternating and st.reduced for st in sts):
            c_lo = c_hi
        g2_hi = min(st.g2 for st in sts)
        g2_lo = max(0, poly.conway_deg - k + 1) if poly is not None else 0
        b_hi = min(st.s for st in sts)
        b_lo = B.mwf_bound(poly.hdeg) if poly is not None else 1
        cert = {"c": (c_lo, c_hi), "g2": (g2_lo, g2_hi), "b": (b_lo, b_hi)}
        for fld, key, scale in (("c", "c", 1), ("g", "g2", 2), ("b", "b", 1)):
            v = rec.value(fld)
            if v is None:
                continue
            lo, hi = cert[key]
            v2 = v * scale
            inside = lo <= v2 <= hi
            if rec.provenance(fld) == CITED:
                status = CONSISTENT if inside else NOTED
            else:
                status = CONSISTENT if inside else VIOLATED
            self.add("known-value-audit", f"K={name} field={key}", f"[{lo},{hi}]", v2, status)

        def pick(fld, key, scale=1):
            v = rec.value(fld)
            if v is not None and rec.provenance(fld) == CITED:
                return v * scale
            return _bracket(*cert[key])

        c_in, g2_in, b_in = pick("c", "c"), pick("g", "g2", 2), pick("b", "b")
        verdict = B.f_check(c_in, g2_in, b_in, k)
        self.add(
            "f-family",
            f"K={name} c={_show(c_in)} 2g={_show(g2_in)} b={_show(b_in)} |K|={k}",
            verdict,
            None,
            SKIPPED if trivial else CONSISTENT,
        )
        g = rec.value("g")
        b = rec.value("b")
        if g is not None and b is not None:
            bound = B.genus_formula_bound(2 * g, b, k)
            self.add("genus-formula-bound", _fmt(K=name, **{"2g": 2 * g, "b": b, "|K|": k}), bound, c_known, _lower(bound, c_known))
            gc = rec.value("gc")
            if gc is not None:
                hi_bound = B.genus_formula_bound(2 * gc, b, k)
                self.add(
                    "genus-hierarchy",
                    _fmt(K=name, g=g, gc=gc),
                    bound,
                    hi_bound,
                    CONSISTENT if bound <= hi_bound else VIOLATED,
                )
        if b is not None and c_known is not None:
            bound = B.ohyama_bound(b)
            self.add("ohyama-bound", _fmt(K=name, b=b), bound, c_known, _lower(bound, c_known))
        if poly is not None:
            bound = B.homfly_crossing_bound(poly.hdeg)
            self.add("homfly-crossing-bound", _fmt(D=name, M=poly.hdeg.M, E=poly.hdeg.E, e=poly.hdeg.e), bound, c_known, _lower(bound, c_known))
            m = poly.hdeg.m
            self.add(
                "z-degree-vs-components",
                _fmt(K=name, m=m),
                f"m={m} (1-m={1 - m})",
                f"|K|={k}",
                CONSISTENT if m == k else NOTED,
            )
            if k == 1 and (poly.hdeg.E - poly.hdeg.e) % 2:
                self.add("homfly-parity", f"K={name}", poly.hdeg.E - poly.hdeg.e, "even", VIOLATED)
        else:
            self.add("homfly-crossing-bound", f"D={name}", "-", c_known, SKIPPED)
        if k == 1 and not trivial:
            if kpoly is None:
                self.add("kidwell-bound", f"K={name}", "-", c_known, SKIPPED)
            else:
                bound = B.kidwell_bound(kpoly.kdeg.M)
                prime_alt = "prime" in fx.tags and any(st.alternating and st.reduced for st in sts)
                status = _lower(bound, c_known)
                if prime_alt and c_known is not None and bound != c_known:
                    status = VIOLATED
                self.add("kidwell-bound", _fmt(K=name, maxdeg_zF=kpoly.kdeg.M, prime_alt=prime_alt), bound, c_known, status)
        if kpoly is not None:
            alpha = rec.value("alpha")
            bound = B.arc_index_bound_mod2(kpoly.mod2_spread)
            self.add("arc-index-mod2", _fmt(K=name, spread=kpoly.mod2_spread), bound, alpha, _lower(bound, alpha))
        alt = [st for st in sts if st.alternating and st.reduced]
        if alt and not trivial:
            sa = alt[0].s
            verdict = B.sab_criterion(sa, _bracket(b_lo, b_hi) if rec.provenance("b") != CITED else b)
            self.add("sab-criterion", _fmt(K=name, s_a=sa, b=_show(_bracket(b_lo, b_hi))), verdict, None, CONSISTENT)

    def multiplicativity(self, fixtures: Sequence[Fixture]):
        by = {f.name: f for f in fixtures}
        pairs = [("3_1", "3_1"), ("3_1", "4_1"), ("3_1", "5_1"), ("4_1", "4_1"), ("4_1", "5_2"), ("3_1", "hopf"), ("5_1", "6_1")]
        for a, b in pairs:
            if a not in by or b not in by:
                continue
            D1, D2 = by[a].diagrams[0], by[b].diagrams[0]
            for tag, E2 in ((b, D2), (f"mirror({b})", mirror(D2))):
                S = connected_sum(D1, E2)
                label = f"{a}#{tag}"
                st = self.stats(S, label)
                s1, s2 = self.stats(D1, a), self.stats(E2, tag)
                if st.homfly is None or s1.homfly is None or s2.homfly is None:
                    self.add("homfly-multiplicative", f"D={label}", "-", "-", SKIPPED)
                    continue
                equal = st.homfly == s1.homfly * s2.homfly
                self.add("homfly-multiplicative", _fmt(D=label, c=S.c, **{"|K|": S.component_count}), "P(K1#K2)", "P(K1)P(K2)", CONSISTENT if equal else VIOLATED)
                bsum = B.homfly_crossing_bound(s1.hdeg) + B.homfly_crossing_bound(s2.hdeg)
                bcomp = B.homfly_crossing_bound(st.hdeg)
                self.add("crossing-bound-additive", f"D={label}", bcomp, bsum, CONSISTENT if bsum == bcomp else VIOLATED)
                self.safety(label, st)
        if "3_1" in by:
            T = by["3_1"]
            g2, b = 2, 2
            cb = B.composite_bound([(g2, b, 1), (g2, b, 1)])
            S = connected_sum(T.diagrams[0], T.diagrams[0])
            self.add("composite-bound", "K=3_1#3_1", cb, S.c, _lower(cb, S.c))
            bi = B.composite_braid_index([b, b])
            st = self.stats(S, "3_1#3_1")
            mwf = B.mwf_bound(st.hdeg) if st.hdeg is not None else None
            self.add("composite-braid-index", f"K=3_1#3_1 mwf={mwf} s(D)={st.s}", bi, _bracket(mwf or 1, st.s), CONSISTENT if mwf is None or mwf <= bi <= st.s else VIOLATED)
            if st.alternating and st.reduced:
                ok = B.murasugi_sum_sa_check(st.s, [2, 2])
                self.add("murasugi-sum-sa", "K=3_1#3_1 parts=2,2", st.s, 3, CONSISTENT if ok else VIOLATED)

    def _markov_step(self, w: BraidWord) -> BraidWord:
        if self.rng.random() < 0.5 or w.strand_count > 4:
            g = self.rng.randrange(1, w.strand_count) * self.rng.choice((1, -1))
            return conjugate(w, g)
        return stabilize(w, self.rng.choice((1, -1)))

    def markov(self):
        for label, base in (("s1^3", BraidWord.from_ints([1, 1, 1])), ("s1s2^-1s1s2^-1", BraidWord.from_ints([1, -2, 1, -2]))):
            if len(base) > self.cfg.homfly_cap:
                self.add("markov-invariance", _fmt(w=label, trials=0, seed=self.cfg.seed), "-", "mismatches=0", SKIPPED)
                continue
            ref = homfly(closure(base), self.cfg.homfly_cap)
            fails, done = 0, 0
            for _ in range(self.cfg.markov_trials):
                w = base
                for _ in range(self.rng.randint(1, 3)):
                    nxt = self._markov_step(w)
                    if len(nxt) > min(self.cfg.homfly_cap, 12):
                        break
                    w = nxt
                D = closure(w)
                st = self.stats(D, _wlabel(w))
                done += 1
                if st.homfly != ref:
                    fails += 1
            self.add("markov-invariance", _fmt(w=label, trials=done, seed=self.cfg.seed), f"mismatches={fails}", "mismatches=0", CONSISTENT if fails == 0 else VIOLATED)

    def homogeneous(self):
        made = 0
        tries = 0
        while made < self.cfg.homogeneous_count and tries < 1000:
            tries += 1
            n = self.rng.randint(2, 4)
            signs = {i: self.rng.choice((1, -1)) for i in range(1, n)}
            length = self.rng.randint(n - 1, min(10, self.cfg.homfly_cap))
            letters = list(range(1, n)) + [self.rng.randrange(1, n) for _ in range(length - (n - 1))]
            self.rng.shuffle(letters)
            w = BraidWord(n, tuple((i, signs[i]) for i in letters))
            if not is_homogeneous(w):
                continue
            D = closure(w)
            label = _wlabel(w)
            st = self.stats(D, label)
            made += 1
            if st.conway_deg is None:
                self.add("homogeneous-degree", f"w={label}", "-", st.c - st.s + 1, SKIPPED)
                continue
            want = st.c - st.s + 1
            self.add("homogeneous-degree", _fmt(w=label, c=st.c, s=st.s), st.conway_deg, want, SHARP if st.conway_deg == want else VIOLATED)
            self.safety(label, st)

    def flypes(self):
        for tw in ((3, 2), (2, 2), (3, 3), (1, 1, 1), (1, 2, 3), (2, 1, 2, 1), (1, 1, 1, 1), (4, 1, 2), (3, 1, 1, 2)):
            D, sites = pretzel_flype_sites(tw)
            st = self.stats(D, f"P{tw}")
            self.safety("pretzel" + ",".join(map(str, tw)), st)
            for site in sites:
                E = flype(D, site)
                back = flype(E, flype_site(E, site.tangle_crossings, site.pivot_crossing))
                se = self.stats(E, "flyped", polys=False)
                sb = self.stats(back, "flyped-back", polys=False)
                ok = se.s == st.s and sb.s == st.s and E.c == D.c and E.component_count == D.component_count
                self.add(
                    "flype-invariance",
                    _fmt(D="pretzel" + ",".join(map(str, tw)), tangle=",".join(map(str, sorted(site.tangle_crossings))), pivot=site.pivot_crossing),
                    f"s={se.s}",
                    f"s={st.s}",
                    CONSISTENT if ok else VIOLATED,
                )
            if st.alternating and st.reduced:
                self.add("s_a-invariant", "D=pretzel" + ",".join(map(str, tw)), s_a(D), st.s, CONSISTENT)

    def doubles(self, fixtures: Sequence[Fixture]):
        by = {f.name: f for f in fixtures}
        bases = [("unknot", unknot())] + [(n, by[n].diagrams[0]) for n in ("3_1", "4_1") if n in by]
        for name, base in bases:
            c = base.c
            s_best = {}
            for sign in (1, -1):
                spec = DoubleSpec(base, sign, 0)
                W = blackboard_double(spec)
                s_best[sign] = self.stats(W, f"W({name},{sign:+d},0)", polys=False).s
            sign = max((1, -1), key=lambda x: (s_best[x], x))
            prev = None
            for n in range(self.cfg.twists + 1):
                W = blackboard_double(DoubleSpec(base, sign, n))
                label = f"W({name},{sign:+d},{n})"
                polys = W.c <= self.cfg.homfly_cap
                st = self.stats(W, label, polys=polys)
                ok = W.c == 4 * c + 2 + n and W.component_count == 1
                self.add("double-construction", _fmt(K=name, clasp=f"{sign:+d}", n=n), f"c={W.c} |K|={W.component_count}", f"4c+2+n={4 * c + 2 + n}", CONSISTENT if ok else VIOLATED)
                if polys:
                    self.safety(label, st)
                if n == 0:
                    self.add(
                        "double-circle-census",
                        _fmt(K=name, c=c, **{"c(D)": W.c}),
                        f"s={st.s} 2g={st.g2}",
                        f"claims s=2c+1={2 * c + 1}, g(D)=c={c}",
                        NOTED,
                    )
                    if name == "3_1":
                        if st.hdeg is None:
                            self.add("double-homfly-degree", "K=3_1", "-", 6, SKIPPED)
                        else:
                            self.add("double-homfly-degree", f"K=3_1 c(D)={W.c}", f"M={st.hdeg.M}", "M=6", CONSISTENT if st.hdeg.M == 6 else VIOLATED)
                    if st.hdeg is not None and c:
                        self.add("double-crossing-bound", f"K={name}", f"M/2={st.hdeg.M / 2:g}", f"c={c}", CONSISTENT if 2 * c >= st.hdeg.M else VIOLATED)
                if prev is not None:
                    same = st.g2 == prev.g2 and st.s == prev.s + 1
                    self.add(
                        "double-twist-invariance",
                        _fmt(K=name, n=f"{n - 1}->{n}"),
                        f"2g {prev.g2}->{st.g2} s {prev.s}->{st.s}",
                        "2g equal, s+1",
                        CONSISTENT if same else NOTED,
                    )
                prev = st

    def conjecture(self, fixtures: Sequence[Fixture]):
        by = {f.name: f for f in fixtures}
        for name in ("3_1", "4_1"):
            if name not in by:
                continue
            base = by[name].diagrams[0]
            kst = self.stats(base, name)
            W = blackboard_double(DoubleSpec(base))
            if kst.kdeg is None or W.c > self.cfg.homfly_cap:
                left = "-" if kst.kdeg is None else 2 * (kst.kdeg.M + 1)
                self.add("double-conjecture", _fmt(K=name, **{"c(W)": W.c}), f"left={left}", "right=-", SKIPPED)
                continue
            left = 2 * (kst.kdeg.M + 1)
            wst = self.stats(W, f"W({name})")
            if wst.hdeg is None:
                self.add("double-conjecture", f"K={name}", f"left={left}", "right=-", SKIPPED)
                continue
            right = wst.hdeg.M
            status = SHARP if left == right else (CONSISTENT if left >= right else VIOLATED)
            self.add("double-conjecture", _fmt(K=name, **{"c(W)": W.c}), f"left={left}", f"right={right}", status)

    def calculators(self):
        cases = [
            ("cable-genus", "p=2 q=3 2g_C=2", B.cable_genus(2, 3, 2), 6),
            ("cable-crossing-bound", "p=2 q=3 c_C=3", B.cable_crossing_bound(2, 3, 3), 9),
            ("satellite-bound", "type=0 w0=2 2g_C=2 b_C=2 g_B=0", B.satellite_bound(0, w0=2, g2_c=2, b_c=2, g_b=0), 8),
            ("satellite-bound", "type=1 w0=2 w1=1 2g_C=2 b_C=2 g_B=0", B.satellite_bound(1, w0=2, w1=1, g2_c=2, b_c=2, g_b=0), 9),
            ("satellite-bound", "type=other alpha_C=5", B.satellite_bound("other", alpha_c=5), 8),
            ("satellite-alt-braid-bound", "c_B=3 b_B=2 c_C=3", B.satellite_alt_braid_bound(3, 2, 3), 9),
            ("alt-fibered-companion-bound", "c_C=3", B.alt_fibered_companion_bound(3), 8),
        ]
        for prop, inputs, got, want in cases:
            self.add(prop, inputs, got, want, CONSISTENT if got == want else VIOLATED)

    def parity(self):
        self.add(
            "genus-parity",
            f"diagrams={self.diagram_count}",
            f"odd={len(self.parity_failures)}",
            "odd=0",
            CONSISTENT if not self.parity_failures else VIOLATED,
        )


def run_suite(fixtures: Sequence[Fixture], config: SuiteConfig | None = None) -> Report:
    """Replay every proposition over the fixtures and generated families.

    An empty fixture list gives an empty report.
    """
    config = config or SuiteConfig()
    fixtures = sorted(fixtures, key=lambda f: f.name)
    suite = _Suite(config)
    if not fixtures:
        return suite.report
    suite.torus()
    suite.fixture_rows(fixtures)
    suite.multiplicativity(fixtures)
    suite.markov()
    suite.homogeneous()
    suite.flypes()
    suite.doubles(fixtures)
    suite.conjecture(fixtures)
    suite.calculators()
    suite.parity()
    return suite.report
