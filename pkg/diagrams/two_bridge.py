"""
Standard alternating diagrams of 2-bridge links from continued fractions.

The rational tangle is grown one crossing at a time. A horizontal twist
adds a crossing on the east side (ccw slots: new NE, old NE, old SE, new SE);
a vertical twist adds one on the south side (ccw slots: old SE, old SW,
new SW, new SE). Groups alternate and the last group is horizontal, so the
numerator closure (NW-NE, SW-SE) gives a reduced diagram.
"""
from collections import deque
from typing import Dict, List, Sequence, Tuple

from diagrams.exceptions import ParseError
from diagrams.model import Crossing, Dart, LinkDiagram


def _build_wiring(cf: Sequence[int]) -> Tuple[int, List[Tuple[Dart, Dart]]]:
    groups = []
    horizontal = len(cf) % 2 == 1
    for twists in cf:
        groups.append((horizontal, twists))
        horizontal = not horizontal

    edges: List[Tuple[Dart, Dart]] = []
    ports: Dict[str, Dart] = {}
    n = 0
    for is_horizontal, twists in groups:
        for _ in range(twists):
            c = n
            n += 1
            if not ports:
                ports = {"NE": (c, 0), "NW": (c, 1), "SW": (c, 2), "SE": (c, 3)}
            elif is_horizontal:
                edges.append(((c, 1), ports["NE"]))
                edges.append(((c, 2), ports["SE"]))
                ports["NE"], ports["SE"] = (c, 0), (c, 3)
            else:
                edges.append(((c, 0), ports["SE"]))
                edges.append(((c, 1), ports["SW"]))
                ports["SW"], ports["SE"] = (c, 2), (c, 3)
    edges.append((ports["NW"], ports["NE"]))
    edges.append((ports["SW"], ports["SE"]))
    return n, edges


def _checkerboard(d: LinkDiagram) -> Dict[int, bool]:
    black = {0: True}
    queue = deque([0])
    neighbours: Dict[int, List[int]] = {r.index: [] for r in d.regions}
    for label in d.labels:
        left, right = d.adjacent_regions(label)
        neighbours[left].append(right)
        neighbours[right].append(left)
    while queue:
        region = queue.popleft()
        for other in neighbours[region]:
            if other not in black:
                black[other] = not black[region]
                queue.append(other)
    return black


def two_bridge(cf: Sequence[int], name: str = "") -> LinkDiagram:
    """
    Alternating 2-bridge diagram of the continued fraction cf.

    Segments are numbered consecutively along each component and oriented
    in walking order.

    Args:
        cf: positive integers, sum at least 2

    Raises:
        ParseError: empty list, entry below 1, or fewer than 2 crossings
    """
    cf = list(cf)
    if not cf:
        raise ParseError("Continued fraction must not be empty")
    if any(a < 1 for a in cf):
        raise ParseError(f"Continued fraction entries must be positive: {cf}")
    if sum(cf) < 2:
        raise ParseError(f"Continued fraction {cf} gives fewer than 2 crossings")

    n, edges = _build_wiring(cf)
    partner: Dict[Dart, Dart] = {}
    for a, b in edges:
        partner[a] = b
        partner[b] = a

    labels: Dict[Dart, int] = {}
    tails: Dict[int, int] = {}
    next_label = 1
    for x in range(n):
        for p in range(4):
            if (x, p) in labels:
                continue
            dart = (x, p)
            while dart not in labels:
                other = partner[dart]
                labels[dart] = labels[other] = next_label
                tails[next_label] = dart[0]
                next_label += 1
                dart = (other[0], (other[1] + 2) % 4)

    def build(unders: Sequence[int]) -> LinkDiagram:
        crossings = [
            Crossing(tuple(labels[(x, p)] for p in range(4)), unders[x])
            for x in range(n)
        ]
        return LinkDiagram(crossings, tails, name or "2-bridge " + ",".join(map(str, cf)))

    draft = build([0] * n)
    black = _checkerboard(draft)
    unders = [1 if black[draft.corner_region[(x, 0)]] else 0 for x in range(n)]
    return build(unders)
