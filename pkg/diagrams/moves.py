"""
Crossing-blind rewrites: bigon reduction and the triangle (RD3) move.
"""
from typing import Dict, List

from diagrams.exceptions import CurlError, DiagramError, StaleSiteError
from diagrams.model import Crossing, LinkDiagram, orient_components
from diagrams.sites import BigonSite, TriangleSite, find_bigons, find_triangles


def reduce_bigon(d: LinkDiagram, site: BigonSite) -> LinkDiagram:
    """
    Merge the two crossings of a bigon into one.

    The segments j, k disappear; the outer segments u1, u2 (at s) and
    w1, w2 (at t) become the counterclockwise slots of the merged crossing,
    which takes the index of s. The understrand of s is kept. Each
    component keeps the direction of its smallest label.

    Raises:
        StaleSiteError: site is not a bigon of d
        CurlError: the merged crossing would carry a segment twice
    """
    if site not in find_bigons(d):
        raise StaleSiteError(f"Bigon {site.pair} is not a bigon of this diagram")
    if d.n <= 2:
        raise DiagramError("The Hopf diagram has no bigon reduction")

    s, t = site.s, site.t
    u1, u2, w1, w2 = site.outer
    if len({u1, u2, w1, w2}) < 4:
        raise CurlError(f"Reducing bigon {site.pair} creates a curl")
    under = 0 if d.crossings[s].is_under(site.s_slot + 2) else 1
    merged = Crossing((u1, u2, w1, w2), under)

    index_map: Dict[int, int] = {}
    crossings: List[Crossing] = []
    for x, crossing in enumerate(d.crossings):
        if x == t:
            continue
        index_map[x] = len(crossings)
        crossings.append(merged if x == s else crossing)
    index_map[t] = index_map[s]

    hints = {
        label: index_map[tail]
        for label, tail in d.tails.items()
        if label not in (site.j, site.k)
    }
    tails = orient_components(crossings, hints, strict=False)
    return LinkDiagram(crossings, tails, d.name)


def apply_rd3(d: LinkDiagram, site: TriangleSite) -> LinkDiagram:
    """
    Move segment a across the crossing of b and c.

    On each of the three strands the two outer segment ends trade places;
    crossings keep their index, slots and understrand. The inner segments
    a, b, c reverse direction and moved ends keep their tail/head role.

    Raises:
        StaleSiteError: site is not a triangle of d
    """
    if site not in find_triangles(d):
        raise StaleSiteError(f"Triangle {site.segments} is not a region of this diagram")

    slots = [list(c.segments) for c in d.crossings]

    def outer_dart(x: int, inner: int):
        return (x, (d.crossings[x].slot_of(inner) + 2) % 4)

    swaps = [
        (outer_dart(site.y_ab, site.a), outer_dart(site.z_ac, site.a)),
        (outer_dart(site.y_ab, site.b), outer_dart(site.x_bc, site.b)),
        (outer_dart(site.z_ac, site.c), outer_dart(site.x_bc, site.c)),
    ]
    moved = {}
    for first, second in swaps:
        (x1, p1), (x2, p2) = first, second
        slots[x1][p1], slots[x2][p2] = d.crossings[x2].segments[p2], d.crossings[x1].segments[p1]
        moved[first] = second
        moved[second] = first

    tails = {}
    for label in d.labels:
        tail, head = d.ends[label]
        if label in (site.a, site.b, site.c):
            tails[label] = head[0]
        else:
            tails[label] = moved.get(tail, tail)[0]

    crossings = [Crossing(tuple(seg), c.under) for seg, c in zip(slots, d.crossings)]
    return LinkDiagram(crossings, tails, d.name)
