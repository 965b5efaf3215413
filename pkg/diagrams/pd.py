import re
from collections import Counter
from typing import Dict, List

from diagrams.exceptions import ParseError
from diagrams.model import Crossing, LinkDiagram, orient_components, segment_ends

_CROSSING_RE = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")
_FILLER_RE = re.compile(r"^[\s,]*(PD\[)?[\s,]*\]?[\s,]*$")


def parse_pd(text: str, name: str = "") -> LinkDiagram:
    """
    Parse a PD code.

    Each X[a,b,c,d] lists the segments counterclockwise starting at the
    incoming under-edge, so the understrand runs a -> c. Over strands take
    their direction from the under passes of their component; components
    that never pass under run towards increasing labels.

    Args:
        text: PD code such as "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
        name: diagram name

    Returns:
        Validated LinkDiagram

    Raises:
        ParseError: malformed text or labels not exactly 1..2n, twice each
        PlanarityError, CurlError: invalid rotation data
    """
    matches = list(_CROSSING_RE.finditer(text))
    if not matches:
        raise ParseError(f"No crossings found in PD code {text!r}")
    leftover = _CROSSING_RE.sub(",", text)
    if not _FILLER_RE.match(leftover.replace(",", " ")):
        raise ParseError(f"Unexpected content in PD code: {leftover.strip()!r}")

    crossings: List[Crossing] = []
    for match in matches:
        a, b, c, d = (int(g) for g in match.groups())
        crossings.append(Crossing((a, b, c, d), 0))

    n = len(crossings)
    counts = Counter(label for c in crossings for label in c.segments)
    expected = set(range(1, 2 * n + 1))
    if set(counts) != expected or any(v != 2 for v in counts.values()):
        raise ParseError(
            f"PD labels must be 1..{2 * n}, each exactly twice; got {dict(sorted(counts.items()))}"
        )

    ends = segment_ends(crossings)
    hints: Dict[int, int] = {}
    for x, crossing in enumerate(crossings):
        incoming, outgoing = crossing.segments[0], crossing.segments[2]
        hints[outgoing] = x
        other = [y for y, _ in ends[incoming] if y != x]
        if other:
            hints[incoming] = other[0]

    tails = orient_components(crossings, hints)
    return LinkDiagram(crossings, tails, name)


def export_pd(d: LinkDiagram) -> str:
    """PD code of d, each crossing started at its incoming under-edge"""
    parts = []
    for x, crossing in enumerate(d.crossings):
        u = crossing.under
        start = u if d.tails[crossing.segments[u]] != x else u + 2
        rotated = crossing.rotated(start)
        parts.append("X[" + ",".join(str(s) for s in rotated.segments) + "]")
    return " ".join(parts)
