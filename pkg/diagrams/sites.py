"""
Local configurations of a diagram: bigons, triangles, generalized bigons,
the Hopf base case and connected-sum witnesses.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

import networkx as nx

from diagrams.model import LinkDiagram


@dataclass(frozen=True)
class BigonSite:
    """
    A 2-sided region bounded by segments j < k.

    At crossing s the region sits between slot s_slot and s_slot+1; at t
    between t_slot and t_slot+1. outer lists the segments at s (slots
    s_slot+2, s_slot+3) followed by those at t (t_slot+2, t_slot+3).
    """

    j: int
    k: int
    s: int
    t: int
    s_slot: int
    t_slot: int
    outer: Tuple[int, int, int, int]

    @property
    def pair(self) -> Tuple[int, int]:
        return (self.j, self.k)


@dataclass(frozen=True)
class TriangleSite:
    """
    A 3-sided region with a role assignment.

    a moves across the crossing x_bc of b and c; the quiver carries the
    3-cycle a -> c -> b -> a. y_ab and z_ac are the other two corners.
    """

    a: int
    b: int
    c: int
    y_ab: int
    z_ac: int
    x_bc: int
    region: int

    @property
    def segments(self) -> Tuple[int, int, int]:
        return tuple(sorted((self.a, self.b, self.c)))

    @property
    def crossings(self) -> frozenset:
        return frozenset((self.y_ab, self.z_ac, self.x_bc))


@dataclass(frozen=True)
class GeneralizedBigon:
    """Two simple strands from crossing a to crossing b and the regions they enclose"""

    a: int
    b: int
    strand: Tuple[int, ...]
    other_strand: Tuple[int, ...]
    inside: Tuple[int, ...]

    @property
    def boundary(self) -> frozenset:
        return frozenset(self.strand + self.other_strand)


@dataclass(frozen=True)
class PrimalityViolation:
    regions: Tuple[int, int]
    segments: Tuple[int, ...]
    sides: Tuple[Tuple[int, ...], Tuple[int, ...]]


def find_bigons(d: LinkDiagram) -> List[BigonSite]:
    """One site per 2-sided region, sorted by segment pair"""
    sites = []
    for region in d.regions:
        if region.sides != 2:
            continue
        (x0, p0), (x1, p1) = region.corners
        (s, p), (t, q) = sorted(((x0, p0), (x1, p1)))
        cs, ct = d.crossings[s], d.crossings[t]
        j, k = sorted((cs.segments[(p + 1) % 4], ct.segments[(q + 1) % 4]))
        outer = (
            cs.segments[(p + 2) % 4], cs.segments[(p + 3) % 4],
            ct.segments[(q + 2) % 4], ct.segments[(q + 3) % 4],
        )
        sites.append(BigonSite(j, k, s, t, p, q, outer))
    return sorted(sites, key=lambda site: (site.j, site.k, site.s))


def find_triangles(d: LinkDiagram) -> List[TriangleSite]:
    """All 3-sided regions with each of their three role assignments"""
    sites = []
    for region in d.regions:
        if region.sides != 3 or len(set(region.crossings)) != 3:
            continue
        # corner (x, p): arrow segments[p+1] -> segments[p]
        arrows = {}
        for x, p in region.corners:
            seg = d.crossings[x].segments
            arrows[seg[(p + 1) % 4]] = (seg[p], x)
        for a in sorted(arrows):
            c, z_ac = arrows[a]
            b = next(src for src, (dst, _) in arrows.items() if dst == a)
            y_ab = arrows[b][1]
            x_bc = arrows[c][1]
            sites.append(TriangleSite(a, b, c, y_ab, z_ac, x_bc, region.index))
    return sites


def detect_hopf(d: LinkDiagram) -> Optional[Tuple[int, int, int, int]]:
    """Labels (a, b, c, d) of the Hopf diagram paired by component, else None"""
    if d.n != 2 or len(d.labels) != 4 or len(d.components) != 2:
        return None
    pairs = sorted(tuple(sorted(comp)) for comp in d.components)
    return pairs[0] + pairs[1]


def crossing_graph(d: LinkDiagram) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(d.n))
    for label in d.labels:
        (x, _), (y, _) = d.ends[label]
        graph.add_edge(x, y, key=label)
    return graph


def primality_scan(d: LinkDiagram) -> List[PrimalityViolation]:
    """
    Connected-sum witnesses.

    A witness is a pair of regions sharing two segments whose removal
    splits the crossings in two, or a single segment with the same region
    on both sides.
    """
    graph = crossing_graph(d)
    violations = []
    for label in d.labels:
        left, right = d.adjacent_regions(label)
        if left == right:
            cut = graph.copy()
            (x, _), (y, _) = d.ends[label]
            cut.remove_edge(x, y, key=label)
            sides = tuple(sorted(tuple(sorted(c)) for c in nx.connected_components(cut)))
            violations.append(PrimalityViolation((left, left), (label,), sides))
    for r1, r2 in combinations(d.regions, 2):
        shared = sorted(set(r1.segments) & set(r2.segments))
        for s1, s2 in combinations(shared, 2):
            cut = graph.copy()
            for label in (s1, s2):
                (x, _), (y, _) = d.ends[label]
                cut.remove_edge(x, y, key=label)
            parts = list(nx.connected_components(cut))
            if len(parts) == 2:
                sides = tuple(sorted(tuple(sorted(p)) for p in parts))
                violations.append(PrimalityViolation((r1.index, r2.index), (s1, s2), sides))
    return violations


def _strand_paths(d: LinkDiagram, a: int):
    """Simple strands leaving crossing a, cut at every crossing they reach"""
    paths = []
    for start in range(4):
        labels: List[int] = []
        interior: List[int] = []
        visited = {a}
        x, slot = a, start
        while True:
            labels.append(d.segment_at((x, slot)))
            y, q = d.twin((x, slot))
            if y in visited:
                break
            paths.append((start, y, q, tuple(labels), frozenset(interior)))
            visited.add(y)
            interior.append(y)
            x, slot = y, (q + 2) % 4
    return paths


def _enclosed_side(d: LinkDiagram, boundary: frozenset) -> Optional[Tuple[int, ...]]:
    graph = nx.Graph()
    graph.add_nodes_from(r.index for r in d.regions)
    for label in d.labels:
        if label not in boundary:
            graph.add_edge(*d.adjacent_regions(label))
    parts = [tuple(sorted(p)) for p in nx.connected_components(graph)]
    if len(parts) != 2:
        return None
    return min(parts, key=lambda p: (len(p), p))


def find_generalized_bigons(d: LinkDiagram) -> List[GeneralizedBigon]:
    """
    Generalized bigons sorted by enclosed region count, then crossing pair.

    The strands leave a along different strands, arrive at b along
    different strands and share no interior crossing.
    """
    found = {}
    for a in range(d.n):
        paths = _strand_paths(d, a)
        for (p1, b1, q1, l1, i1), (p2, b2, q2, l2, i2) in combinations(paths, 2):
            if b1 != b2 or b1 == a:
                continue
            if (p1 - p2) % 4 in (0, 2) or (q1 - q2) % 4 in (0, 2):
                continue
            if i1 & i2 or b1 in i1 | i2:
                continue
            boundary = frozenset(l1 + l2)
            key = (frozenset((a, b1)), boundary)
            if key in found:
                continue
            inside = _enclosed_side(d, boundary)
            if inside is None:
                continue
            lo, hi = sorted((a, b1))
            found[key] = GeneralizedBigon(lo, hi, l1, l2, inside)
    return sorted(found.values(), key=lambda g: (len(g.inside), g.a, g.b, sorted(g.boundary)))


def boundary_triangles(d: LinkDiagram, bigon: GeneralizedBigon) -> List[int]:
    """Triangular regions inside a generalized bigon with a side on its boundary"""
    result = []
    for index in bigon.inside:
        region = d.regions[index]
        if region.sides == 3 and bigon.boundary & set(region.segments):
            result.append(index)
    return result
