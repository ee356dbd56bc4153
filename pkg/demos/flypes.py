"""Flyping a pretzel diagram changes the picture but not the Seifert circle count."""

from knotbounds import flype, flype_site, seifert_circles
from knotbounds.diagram import same_diagram
from knotbounds.seifert import pretzel_flype_sites

for twists in ((3, 3), (2, 1, 2, 1), (3, 1, 1, 2)):
    D, sites = pretzel_flype_sites(twists)
    s0 = seifert_circles(D).s
    moved = 0
    for site in sites:
        E = flype(D, site)
        assert seifert_circles(E).s == s0
        # the site has to be re-derived on the new diagram before flyping back
        back = flype(E, flype_site(E, site.tangle_crossings, site.pivot_crossing))
        assert same_diagram(back, D)
        moved += not same_diagram(E, D)
    print(f"P{twists}: {len(sites)} sites, s={s0} throughout, {moved} give a new diagram")
