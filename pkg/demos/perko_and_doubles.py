"""Two places where the genus formula is not an equality.

The Perko knot has c = 10 but 2g + b - 1 = 8, so it falls outside the
family.  For Whitehead doubles only an upper bound for the canonical genus
comes out of the diagram, and the circle count of the blackboard double
decides between two competing statements about it.
"""

from knotbounds import bounds as B
from knotbounds import DoubleSpec, blackboard_double, conway, degrees, double_genus_certificate, homfly, load_fixtures
from knotbounds.doubles import conjecture_evidence

table = {f.name: f for f in load_fixtures()}

perko = table["10_161"].record
g2 = 2 * perko.known_g
print("Perko 10_161")
print(f"  c={perko.known_c} 2g={g2} b={perko.known_b}")
print(f"  2g + b + |K| - 2 = {B.genus_formula_bound(g2, perko.known_b, 1)} -> {B.f_check(perko.known_c, g2, perko.known_b, 1)}")
D = table["10_161"].diagrams[0]
d = degrees(homfly(D))
print(f"  HOMFLY: MWF b >= {B.mwf_bound(d)}, M = {d.M}, c >= {B.homfly_crossing_bound(d)}")

trefoil = table["3_1"].diagrams[0]
print("\nWhitehead doubles of the trefoil")
for n in range(6):
    cert = double_genus_certificate(DoubleSpec(trefoil, 1, n))
    print(f"  n={n}: c={cert['crossings']:2} s={cert['s']:2} 2g(D)={cert['twice_genus']}")
print("  s = 2c+3 at n=0, so g(D) = c(K); the first half-twist costs one genus")

W = blackboard_double(DoubleSpec(trefoil))
print(f"  Conway of the n=0 double: {conway(W).to_text(('v', 'z'))}")
print("  (nonzero z^2 term: the blackboard framing is the writhe, not zero)")

row = conjecture_evidence(trefoil, "3_1")
print(f"  2(maxdeg_z F + 1) = {row['left']}, maxdeg_z P(W) = {row['right']}")
