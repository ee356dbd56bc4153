"""Crossing-number estimates for knots and links from diagrams and polynomials."""

from .bounds import FVerdict, Membership, f_check, homfly_crossing_bound, torus_invariants
from .braid import BraidWord, closure, parse_braid, torus_braid
from .diagram import (
    Crossing,
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
from .doubles import DoubleSpec, blackboard_double, double_genus_certificate
from .harness import KnotRecord, load_fixtures, run_suite
from .poly import DegreeSummary, LaurentPoly2, degrees
from .seifert import FlypeSite, SeifertDecomposition, flype, flype_site, s_a, seifert_circles
from .skein import conway, homfly, kauffman, kauffman_mod2

__version__ = "0.1.0"
