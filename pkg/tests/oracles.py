"""Independent reference computations used to pin down engine outputs.

Nothing here imports the skein engine.  The Jones polynomial comes from a
plain Kauffman-bracket state sum over PD codes; both two-variable engines
must specialise to it.  Component and circle counts come from direct arc
tracing written separately from the library's slot-graph code.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import product


def _add(p, q, scale=1):
    out = defaultdict(int, p)
    for k, v in q.items():
        out[k] += scale * v
    return {k: v for k, v in out.items() if v}


def _mul(p, q):
    out = defaultdict(int)
    for a, x in p.items():
        for b, y in q.items():
            out[a + b] += x * y
    return {k: v for k, v in out.items() if v}


def _pow(p, n):
    out = {0: 1}
    for _ in range(n):
        out = _mul(out, p)
    return out


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def bracket(pd, free_loops=0):
    """Kauffman bracket in A with the empty-diagram normalisation <O> = 1 for one loop.

    Returned as {exponent of A: coefficient}.  Smoothing convention:
    X[a,b,c,d] -> A <(a b)(c d)> + A^-1 <(a d)(b c)>.
    """
    d = {2: -1, -2: -1}
    if not pd:
        return _pow(d, max(free_loops - 1, 0)) if free_loops else {0: 1}
    arcs = sorted({x for q in pd for x in q})
    total = {}
    for state in product((0, 1), repeat=len(pd)):
        parent = {x: x for x in arcs}
        for (a, b, c, dd), st in zip(pd, state):
            pairs = ((a, b), (c, dd)) if st == 0 else ((a, dd), (b, c))
            for u, v in pairs:
                ru, rv = _find(parent, u), _find(parent, v)
                if ru != rv:
                    parent[ru] = rv
        loops = len({_find(parent, x) for x in arcs}) + free_loops
        exp = sum(1 if st == 0 else -1 for st in state)
        total = _add(total, _mul({exp: 1}, _pow(d, loops - 1)))
    return total


def writhe(signs):
    return sum(signs)


def jones_from_bracket(pd, signs, free_loops=0):
    """Jones polynomial as {exponent of A: coeff}, i.e. (-A^3)^(-w) <D>."""
    w = writhe(signs)
    factor = {-3 * w: (-1) ** (w % 2)}
    return _mul(factor, bracket(pd, free_loops))


def homfly_matches_bracket(P, pd, signs, free_loops=0):
    """Check P(v, z) at v = A^-4, z = A^-2 - A^2 against the bracket's Jones polynomial.

    Links carry negative powers of z, so both sides are multiplied by z^N first.
    """
    zpoly = {-2: 1, 2: -1}
    shift = max([0] + [-j for (_, j) in P])
    lhs = {}
    for (i, j), c in P.items():
        lhs = _add(lhs, _mul({-4 * i: c}, _pow(zpoly, j + shift)))
    rhs = _mul(jones_from_bracket(pd, signs, free_loops), _pow(zpoly, shift))
    return lhs == rhs


def kauffman_matches_bracket(F, pd, signs, free_loops=0):
    """Check F(a, z) at a = -A^3, z = A + A^-1 against the bracket's Jones polynomial."""
    zpoly = {1: 1, -1: 1}
    shift = max([0] + [-j for (_, j) in F])
    lhs = {}
    for (i, j), c in F.items():
        lhs = _add(lhs, _mul({3 * i: c * (-1) ** (i % 2)}, _pow(zpoly, j + shift)))
    rhs = _mul(jones_from_bracket(pd, signs, free_loops), _pow(zpoly, shift))
    return lhs == rhs


def trace_components(pd):
    """Number of link components: arcs joined through each crossing, ignoring direction."""
    arcs = {x for q in pd for x in q}
    parent = {x: x for x in arcs}
    for a, b, c, d in pd:
        for u, v in ((a, c), (b, d)):
            ru, rv = _find(parent, u), _find(parent, v)
            if ru != rv:
                parent[ru] = rv
    return len({_find(parent, x) for x in arcs})


def knot_seifert_count(pd):
    """Seifert circles of a knot PD code with arcs 1..2n in traversal order."""
    n2 = 2 * len(pd)
    nxt = {}
    for a, b, c, d in pd:
        oin, oout = (b, d) if d == b % n2 + 1 else (d, b)
        nxt[a] = oout
        nxt[oin] = c
    seen, count = set(), 0
    for start in sorted(nxt):
        if start in seen:
            continue
        count += 1
        x = start
        while x not in seen:
            seen.add(x)
            x = nxt[x]
    return count


def determinant(conway_terms):
    """|Conway(2i)|, the knot determinant."""
    val = sum(c * (2j) ** e for e, c in conway_terms.items())
    return round(abs(val))
