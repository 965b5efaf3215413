"""
Oriented link diagrams as planar combinatorial maps.

Each crossing stores its four segment labels in counterclockwise order
(slots 0..3) and the parity of the slot pair carrying the understrand.
Opposite slots (p, p+2) belong to the same strand. The corner (x, p) is
the region between slot p and slot p+1 of crossing x; faces are traced by
corner (x, p) -> twin(x, p+1).
"""
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from diagrams.exceptions import CurlError, DiagramError, OrientationError, PlanarityError

Dart = Tuple[int, int]


class SegmentClass(str, Enum):
    UNDER_TO_OVER = "UnderToOver"
    OVER_TO_UNDER = "OverToUnder"
    SAME = "Same"


@dataclass(frozen=True)
class Crossing:
    """Four segment labels counterclockwise; under=0 means slots 0,2 pass under"""

    segments: Tuple[int, int, int, int]
    under: int

    def __post_init__(self):
        if len(self.segments) != 4:
            raise DiagramError(f"Crossing needs 4 segments, got {self.segments}")
        if self.under not in (0, 1):
            raise DiagramError(f"Under pair must be 0 or 1, got {self.under}")

    def is_under(self, slot: int) -> bool:
        return slot % 2 == self.under

    def slot_of(self, label: int) -> int:
        return self.segments.index(label)

    def rotated(self, k: int) -> "Crossing":
        """Same crossing with slot k renumbered as slot 0"""
        k %= 4
        segs = self.segments[k:] + self.segments[:k]
        return Crossing(segs, (self.under - k) % 2)

    def code(self) -> Tuple[Tuple[int, ...], int]:
        """Lexicographically minimal rotation, used by canonical forms"""
        return min((c.segments, c.under) for c in (self.rotated(k) for k in range(4)))


@dataclass(frozen=True)
class Region:
    """A face: corners in tracing order and the segment leaving each corner"""

    index: int
    corners: Tuple[Dart, ...]
    segments: Tuple[int, ...]

    @property
    def sides(self) -> int:
        return len(self.corners)

    @property
    def crossings(self) -> Tuple[int, ...]:
        return tuple(x for x, _ in self.corners)


def segment_ends(crossings: Sequence[Crossing]) -> Dict[int, List[Dart]]:
    """Both darts of every segment label"""
    ends: Dict[int, List[Dart]] = {}
    for x, crossing in enumerate(crossings):
        for p, label in enumerate(crossing.segments):
            ends.setdefault(label, []).append((x, p))
    return ends


def _check_ends(ends: Mapping[int, List[Dart]]):
    for label, darts in ends.items():
        if len(darts) != 2:
            raise DiagramError(f"Segment {label} has {len(darts)} ends instead of 2")
        if darts[0][0] == darts[1][0]:
            raise CurlError(f"Segment {label} joins crossing {darts[0][0]} to itself")


def trace_components(crossings: Sequence[Crossing]) -> List[List[Tuple[int, int]]]:
    """
    Walk every strand of the map.

    Returns:
        One list per component of (label, tail crossing) pairs in walking
        order; the walking direction is arbitrary but deterministic.
    """
    ends = segment_ends(crossings)
    _check_ends(ends)
    seen = set()
    components = []
    for label in sorted(ends):
        if label in seen:
            continue
        start = min(ends[label])
        walk = []
        x, p = start
        while True:
            current = crossings[x].segments[p]
            if current in seen:
                break
            seen.add(current)
            walk.append((current, x))
            a, b = ends[current]
            y, q = b if a == (x, p) else a
            x, p = y, (q + 2) % 4
        components.append(walk)
    return components


def orient_components(
    crossings: Sequence[Crossing],
    hints: Mapping[int, int],
    strict: bool = True
) -> Dict[int, int]:
    """
    Choose a direction for every component.

    Args:
        crossings: the rotation data
        hints: known tail crossing of some segments
        strict: raise on conflicting hints instead of keeping the first

    Returns:
        Tail crossing of every segment

    Raises:
        OrientationError: hints disagree along a component
    """
    ends = segment_ends(crossings)
    tails: Dict[int, int] = {}
    for walk in trace_components(crossings):
        forward = dict(walk)
        backward = {}
        for label, _ in walk:
            a, b = ends[label]
            backward[label] = b[0] if a[0] == forward[label] else a[0]
        hinted = sorted(label for label in forward if label in hints)
        if hinted:
            first = hinted[0]
            keep = forward if hints[first] == forward[first] else backward
            if strict:
                for label in hinted:
                    if keep[label] != hints[label]:
                        raise OrientationError(
                            f"Segment {label} runs against segment {first} on its component"
                        )
        else:
            labels = [label for label, _ in walk]
            smallest = labels.index(min(labels))
            after = labels[(smallest + 1) % len(labels)]
            before = labels[smallest - 1]
            keep = forward if after <= before else backward
        tails.update(keep)
    return tails


class LinkDiagram:
    """
    Immutable oriented link diagram.

    Args:
        crossings: crossing rotation data, indexed 0..n-1
        tails: tail crossing index of every segment label
        name: free-form name used in reports
    """

    def __init__(
        self,
        crossings: Sequence[Crossing],
        tails: Mapping[int, int],
        name: str = ""
    ):
        self.crossings: Tuple[Crossing, ...] = tuple(crossings)
        self.tails: Dict[int, int] = dict(tails)
        self.name = name
        self._validate()

    # -- validation -------------------------------------------------------

    def _validate(self):
        if not self.crossings:
            raise DiagramError("Diagram has no crossings")
        ends = segment_ends(self.crossings)
        _check_ends(ends)
        if len(ends) != 2 * self.n:
            raise DiagramError(f"{len(ends)} segments for {self.n} crossings")
        if set(self.tails) != set(ends):
            raise OrientationError("Orientation must cover exactly the segment labels")
        for label, darts in ends.items():
            if self.tails[label] not in (darts[0][0], darts[1][0]):
                raise OrientationError(
                    f"Tail of segment {label} is not one of its crossings"
                )
        for x, crossing in enumerate(self.crossings):
            for p in (0, 1):
                out_p = self.tails[crossing.segments[p]] == x
                out_q = self.tails[crossing.segments[p + 2]] == x
                if out_p == out_q:
                    raise OrientationError(
                        f"Strand through crossing {x} slots {p},{p + 2} is not oriented consistently"
                    )
        if len(self.regions) != self.n + 2:
            raise PlanarityError(
                f"Face tracing found {len(self.regions)} regions, expected {self.n + 2}"
            )

    # -- structure --------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.crossings)

    @cached_property
    def labels(self) -> Tuple[int, ...]:
        return tuple(sorted(self.tails))

    @cached_property
    def ends(self) -> Dict[int, Tuple[Dart, Dart]]:
        """(tail dart, head dart) of every segment"""
        result = {}
        for label, (a, b) in segment_ends(self.crossings).items():
            result[label] = (a, b) if a[0] == self.tails[label] else (b, a)
        return result

    def segment_at(self, dart: Dart) -> int:
        x, p = dart
        return self.crossings[x].segments[p % 4]

    def twin(self, dart: Dart) -> Dart:
        """The other end of the segment sitting at dart"""
        x, p = dart[0], dart[1] % 4
        tail, head = self.ends[self.segment_at((x, p))]
        return head if tail == (x, p) else tail

    @cached_property
    def regions(self) -> List[Region]:
        seen = set()
        faces = []
        for x in range(self.n):
            for p in range(4):
                if (x, p) in seen:
                    continue
                corners = []
                segs = []
                corner = (x, p)
                while corner not in seen:
                    seen.add(corner)
                    corners.append(corner)
                    leaving = (corner[0], (corner[1] + 1) % 4)
                    segs.append(self.segment_at(leaving))
                    corner = self.twin(leaving)
                    if len(corners) > 4 * self.n:
                        raise PlanarityError("Face tracing does not close")
                if corner != (x, p):
                    raise PlanarityError("Face tracing does not close")
                faces.append(Region(len(faces), tuple(corners), tuple(segs)))
        return faces

    @cached_property
    def corner_region(self) -> Dict[Dart, int]:
        return {corner: r.index for r in self.regions for corner in r.corners}

    def adjacent_regions(self, label: int) -> Tuple[int, int]:
        """
        Regions on either side of a segment.

        Returns:
            (region clockwise of the segment at its tail, region counterclockwise)
        """
        x, p = self.ends[label][0]
        return (
            self.corner_region[(x, (p - 1) % 4)],
            self.corner_region[(x, p)],
        )

    @cached_property
    def components(self) -> List[Tuple[int, ...]]:
        """Segment sequences along each component, following the orientation"""
        result = []
        seen = set()
        for label in self.labels:
            if label in seen:
                continue
            cycle = []
            current = label
            while current not in seen:
                seen.add(current)
                cycle.append(current)
                y, q = self.ends[current][1]
                current = self.segment_at((y, q + 2))
            result.append(tuple(cycle))
        return result

    def component_of(self, label: int) -> int:
        for index, comp in enumerate(self.components):
            if label in comp:
                return index
        raise DiagramError(f"Unknown segment {label}")

    def region_census(self) -> Dict[int, int]:
        """Number of regions with each side count"""
        return dict(sorted(Counter(r.sides for r in self.regions).items()))

    def coregion_segments(self, label: int) -> set:
        """Segments bounding a common region with label (label included)"""
        result = set()
        for region in self.regions:
            if label in region.segments:
                result.update(region.segments)
        return result

    # -- classification ---------------------------------------------------

    def segment_class(self, label: int) -> SegmentClass:
        (x, p), (y, q) = self.ends[label]
        tail_under = self.crossings[x].is_under(p)
        head_under = self.crossings[y].is_under(q)
        if tail_under and not head_under:
            return SegmentClass.UNDER_TO_OVER
        if head_under and not tail_under:
            return SegmentClass.OVER_TO_UNDER
        return SegmentClass.SAME

    def reversed(self) -> "LinkDiagram":
        """Every component with the opposite orientation"""
        tails = {label: self.ends[label][1][0] for label in self.labels}
        return LinkDiagram(self.crossings, tails, self.name)

    # -- identity ---------------------------------------------------------

    def raw_key(self) -> Tuple:
        """Crossings and tails exactly as indexed, unlike canonical_form"""
        return (self.crossings, tuple(sorted(self.tails.items())))

    def canonical_form(self) -> Tuple:
        codes = [c.code() for c in self.crossings]
        orientation = tuple((label, codes[self.tails[label]]) for label in self.labels)
        return (tuple(sorted(codes)), orientation)

    def __eq__(self, other):
        if not isinstance(other, LinkDiagram):
            return NotImplemented
        return self.canonical_form() == other.canonical_form()

    def __hash__(self):
        return hash(self.canonical_form())

    def __repr__(self):
        name = f" {self.name}" if self.name else ""
        return f"<LinkDiagram{name}: {self.n} crossings, {len(self.components)} components>"


def classify_segments(d: LinkDiagram) -> Dict[int, SegmentClass]:
    """Under/over pattern of every segment"""
    return {label: d.segment_class(label) for label in d.labels}


def renamed(d: LinkDiagram, name: Optional[str]) -> LinkDiagram:
    return LinkDiagram(d.crossings, d.tails, name or d.name)
