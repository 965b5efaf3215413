"""
Mutation plans: reduce a diagram to the Hopf link and read off the knot-cluster word.

A plan is a list of events (triangle moves, bigon reductions, the final
Hopf link). Its word is red + hopf + reversed(sigma(red)), where red is the
reduction word, hopf the four Hopf segments and sigma the involution built
from the reduced bigon pairs and the Hopf pairs.
"""
import json
import os
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field, ValidationError

from algebra.cluster import Seed, f_polynomial, green_sequence_report, initial_seed, mutate_sequence
from algebra.laurent import LaurentPoly
from algebra.quiver import quiver_of
from config.settings import RD3_SEARCH_DEPTH, fixture_path
from diagrams.exceptions import CurlError, DiagramError, ParseError
from diagrams.model import LinkDiagram, classify_segments
from diagrams.moves import apply_rd3, reduce_bigon
from diagrams.sites import (
    BigonSite,
    TriangleSite,
    boundary_triangles,
    detect_hopf,
    find_bigons,
    find_generalized_bigons,
    find_triangles,
    primality_scan,
)
from invariants.alexander import coefficient_list, specialize
from planner.exceptions import PlanningError
from utils.logger import KnotClusterLogger

logger = KnotClusterLogger("planner")


@dataclass(frozen=True)
class RD3Event:
    a: int
    b: int
    c: int

    @property
    def mutations(self) -> Tuple[int, ...]:
        a, b, c = self.a, self.b, self.c
        return (a, b, c, a, b, c, b, c, b)


@dataclass(frozen=True)
class BigonEvent:
    j: int
    k: int

    @property
    def mutations(self) -> Tuple[int, ...]:
        return (self.j, self.k)


@dataclass(frozen=True)
class HopfEvent:
    labels: Tuple[int, int, int, int]

    @property
    def mutations(self) -> Tuple[int, ...]:
        return self.labels


Event = Union[RD3Event, BigonEvent, HopfEvent]


@dataclass(frozen=True)
class MutationPlan:
    events: Tuple[Event, ...]
    diagram: str = ""

    @property
    def reductions(self) -> List[BigonEvent]:
        return [e for e in self.events if isinstance(e, BigonEvent)]

    @property
    def rd3_moves(self) -> List[RD3Event]:
        return [e for e in self.events if isinstance(e, RD3Event)]

    @property
    def hopf(self) -> HopfEvent:
        for event in self.events:
            if isinstance(event, HopfEvent):
                return event
        raise PlanningError("Plan has no Hopf event")

    @property
    def sigma(self) -> Dict[int, int]:
        return sigma_of(self)

    @property
    def word(self) -> List[int]:
        return flatten(self)


def sigma_pairs(plan: MutationPlan) -> List[Tuple[int, int]]:
    pairs = [(e.j, e.k) for e in plan.reductions]
    a, b, c, d = plan.hopf.labels
    pairs.extend([(a, b), (c, d)])
    return pairs


def sigma_of(plan: MutationPlan) -> Dict[int, int]:
    """Involution swapping every reduced bigon pair and both Hopf pairs"""
    sigma: Dict[int, int] = {}
    for x, y in sigma_pairs(plan):
        if x in sigma or y in sigma:
            raise PlanningError(f"Label of pair ({x} {y}) appears twice in sigma")
        sigma[x], sigma[y] = y, x
    return sigma


def reduction_word(plan: MutationPlan) -> List[int]:
    word: List[int] = []
    for event in plan.events:
        if not isinstance(event, HopfEvent):
            word.extend(event.mutations)
    return word


def flatten(plan: MutationPlan) -> List[int]:
    """red + hopf + reversed(sigma(red))"""
    sigma = sigma_of(plan)
    red = reduction_word(plan)
    mirrored = [sigma.get(k, k) for k in red]
    return red + list(plan.hopf.mutations) + mirrored[::-1]


def format_cycles(pairs: Sequence[Tuple[int, int]]) -> str:
    return "".join(f"({a} {b})" for a, b in pairs)


# -- search ---------------------------------------------------------------


def _reducible(d: LinkDiagram) -> List[BigonSite]:
    """Bigons whose reduction leaves a curl-free diagram"""
    sites = []
    for site in find_bigons(d):
        try:
            reduce_bigon(d, site)
        except CurlError:
            continue
        sites.append(site)
    return sites


def _site_for_pair(d: LinkDiagram, pair: Tuple[int, int]) -> Optional[BigonSite]:
    for site in find_bigons(d):
        if site.pair == pair:
            return site
    return None


def _reduce_batch(d: LinkDiagram, events: List[Event]) -> LinkDiagram:
    """Reduce the current bigons in pair order, skipping those that went stale"""
    pairs = sorted({site.pair for site in _reducible(d)})
    for pair in pairs:
        if d.n <= 2:
            break
        site = _site_for_pair(d, pair)
        if site is None:
            continue
        try:
            d = reduce_bigon(d, site)
        except CurlError:
            continue
        events.append(BigonEvent(*pair))
    return d


def _moving_site(d: LinkDiagram, region: int) -> TriangleSite:
    """Role assignment in which the smallest segment moves"""
    sites = [s for s in find_triangles(d) if s.region == region]
    return min(sites, key=lambda s: s.a)


def _candidate_triangles(d: LinkDiagram) -> List[TriangleSite]:
    """Triangles on the boundary of a minimal generalized bigon first, then the rest"""
    regions = {s.region for s in find_triangles(d)}
    preferred: List[int] = []
    bigons = find_generalized_bigons(d)
    if bigons:
        smallest = len(bigons[0].inside)
        for bigon in bigons:
            if len(bigon.inside) != smallest:
                break
            preferred.extend(r for r in boundary_triangles(d, bigon) if r not in preferred)
    first = sorted((_moving_site(d, r) for r in preferred), key=lambda s: s.segments)
    rest = sorted(
        (_moving_site(d, r) for r in regions if r not in preferred),
        key=lambda s: s.segments,
    )
    return first + rest


def _search_rd3(d: LinkDiagram, depth: int) -> Tuple[LinkDiagram, List[TriangleSite]]:
    """
    Shortest admissible triangle-move sequence after which a bigon can be reduced.

    Consecutive triangles share no crossing.
    """
    queue = deque([(d, [], frozenset())])
    seen = {d}
    while queue:
        current, moves, last = queue.popleft()
        if len(moves) >= depth:
            continue
        for site in _candidate_triangles(current):
            if site.crossings & last:
                continue
            try:
                moved = apply_rd3(current, site)
            except DiagramError:
                continue
            if moved in seen:
                continue
            if _reducible(moved):
                return moved, moves + [site]
            seen.add(moved)
            queue.append((moved, moves + [site], site.crossings))
    raise PlanningError(f"No bigon within {depth} admissible triangle moves")


def plan(d: LinkDiagram, depth: int = RD3_SEARCH_DEPTH) -> MutationPlan:
    """
    Reduction plan of a prime diagram down to the Hopf link.

    Args:
        d: prime, curl-free diagram with at least 2 crossings
        depth: bound on consecutive triangle moves

    Raises:
        PlanningError: non-prime input, or no bigon within the search bound
    """
    start_time = time.time()
    violations = primality_scan(d)
    if violations:
        raise PlanningError(f"Diagram is not prime: segments {violations[0].segments}")

    events: List[Event] = []
    current = d
    while current.n > 2:
        reduced = _reduce_batch(current, events)
        if reduced is not current:
            current = reduced
            continue
        current, moves = _search_rd3(current, depth)
        events.extend(RD3Event(s.a, s.b, s.c) for s in moves)

    hopf = detect_hopf(current)
    if hopf is None:
        raise PlanningError("Reduction did not end at the Hopf link")
    events.append(HopfEvent(hopf))

    result = MutationPlan(tuple(events), d.name)
    duration_ms = int((time.time() - start_time) * 1000)
    logger.log_plan(len(result.events), len(result.rd3_moves), result.word, duration_ms)
    return result


# -- execution ------------------------------------------------------------


def execute(d: LinkDiagram, p: MutationPlan) -> Seed:
    """Initial seed of the diagram's quiver mutated along the plan's word"""
    return mutate_sequence(initial_seed(quiver_of(d)), flatten(p))


def replay_events(d: LinkDiagram, p: MutationPlan) -> List[LinkDiagram]:
    """
    Apply the plan's diagram moves; returns every diagram visited, d first.

    Raises:
        PlanningError: an event has no matching site
    """
    diagrams = [d]
    current = d
    for event in p.events:
        if isinstance(event, RD3Event):
            site = next(
                (s for s in find_triangles(current) if (s.a, s.b, s.c) == (event.a, event.b, event.c)),
                None,
            )
            if site is None:
                raise PlanningError(f"No triangle with roles {event.a};{event.b},{event.c}")
            current = apply_rd3(current, site)
        elif isinstance(event, BigonEvent):
            site = _site_for_pair(current, (event.j, event.k))
            if site is None:
                raise PlanningError(f"No bigon ({event.j} {event.k})")
            current = reduce_bigon(current, site)
        else:
            if detect_hopf(current) != event.labels:
                raise PlanningError(f"Diagram is not the Hopf link {event.labels}")
            continue
        diagrams.append(current)
    return diagrams


def quiver_duality(d: LinkDiagram, seed: Seed, sigma: Dict[int, int]) -> bool:
    """sigma(Q) equals the opposite of the final quiver"""
    return quiver_of(d).permute(sigma) == seed.quiver.opposite()


def rd3_relation(d: LinkDiagram, site: TriangleSite) -> bool:
    """
    The quiver after moving a across x_bc is the quiver of d mutated at
    a, b, c, a with b and c interchanged.
    """
    moved = quiver_of(apply_rd3(d, site))
    mutated = quiver_of(d).mutate_sequence((site.a, site.b, site.c, site.a))
    return moved == mutated.permute({site.b: site.c, site.c: site.b})


# -- serialisation --------------------------------------------------------


class EventDocument(BaseModel):
    kind: Literal["rd3", "bigon", "hopf"]
    labels: List[int] = Field(..., min_length=2, max_length=4)


class PlanDocument(BaseModel):
    diagram: str = ""
    events: List[EventDocument]
    sigma: List[List[int]] = Field(default_factory=list)
    word: List[int] = Field(default_factory=list)


class ExpectedDocument(BaseModel):
    f_polys: Dict[int, str] = Field(default_factory=dict, description="Position -> F-polynomial text")
    sigma: List[List[int]] = Field(default_factory=list, description="Transpositions")
    alexander: List[int] = Field(default_factory=list, description="Normalized coefficient list")
    all_green: Optional[bool] = Field(None, description="Every mutation of the word is green")


class ReplayDocument(BaseModel):
    diagram: str
    sequence: List[int]
    expected: ExpectedDocument = Field(default_factory=ExpectedDocument)


def plan_to_json(p: MutationPlan) -> Dict:
    events = []
    for event in p.events:
        if isinstance(event, RD3Event):
            events.append({"kind": "rd3", "labels": [event.a, event.b, event.c]})
        elif isinstance(event, BigonEvent):
            events.append({"kind": "bigon", "labels": [event.j, event.k]})
        else:
            events.append({"kind": "hopf", "labels": list(event.labels)})
    return {
        "diagram": p.diagram,
        "events": events,
        "sigma": [list(pair) for pair in sigma_pairs(p)],
        "word": flatten(p),
    }


def plan_from_json(doc: Dict) -> MutationPlan:
    """
    Raises:
        ParseError: malformed document, or a word that disagrees with the events
    """
    try:
        parsed = PlanDocument.model_validate(doc)
    except ValidationError as e:
        raise ParseError(f"Invalid plan document: {e}") from e
    events: List[Event] = []
    for entry in parsed.events:
        arity = {"rd3": 3, "bigon": 2, "hopf": 4}[entry.kind]
        if len(entry.labels) != arity:
            raise ParseError(f"{entry.kind} event needs {arity} labels, got {entry.labels}")
        if entry.kind == "rd3":
            events.append(RD3Event(*entry.labels))
        elif entry.kind == "bigon":
            events.append(BigonEvent(*entry.labels))
        else:
            events.append(HopfEvent(tuple(entry.labels)))
    result = MutationPlan(tuple(events), parsed.diagram)
    if parsed.word and parsed.word != flatten(result):
        raise ParseError("Plan word does not match its events")
    return result


def load_replay(path: str) -> ReplayDocument:
    """
    Raises:
        ParseError: unreadable or invalid replay document
    """
    path = fixture_path(path)
    if not os.path.exists(path):
        raise FileNotFoundError(f"File not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            return ReplayDocument.model_validate(json.load(f))
    except (json.JSONDecodeError, ValidationError) as e:
        raise ParseError(f"Invalid replay document {path}: {e}") from e


@dataclass
class ReplayResult:
    seed: Seed
    mismatches: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def replay(
    d: LinkDiagram,
    word: Sequence[int],
    expected: Optional[ExpectedDocument] = None,
    seed: Optional[Seed] = None
) -> ReplayResult:
    """
    Mutate the diagram's initial seed along word and compare with expectations.

    seed, when given, is the already mutated seed and is trusted as such.

    F-polynomials are compared as text-parsed polynomials; sigma through the
    quiver duality sigma(Q) = opposite(Q_t).
    """
    if seed is None:
        seed = mutate_sequence(initial_seed(quiver_of(d)), word)
    result = ReplayResult(seed)
    if expected is None:
        return result
    for position, text in sorted(expected.f_polys.items()):
        actual = f_polynomial(seed, position)
        wanted = LaurentPoly.parse(text, actual.variables)
        if actual != wanted:
            result.mismatches.append(
                f"F at {position}: expected {wanted.to_text()}, got {actual.to_text()}"
            )
    if expected.sigma:
        sigma: Dict[int, int] = {}
        for a, b in expected.sigma:
            sigma[a], sigma[b] = b, a
        if not quiver_duality(d, seed, sigma):
            result.mismatches.append(
                f"sigma {format_cycles(expected.sigma)} does not map Q to the opposite final quiver"
            )
    if expected.alexander:
        classes = classify_segments(d)
        for label in seed.labels:
            value = coefficient_list(specialize(f_polynomial(seed, label), classes))
            if value != expected.alexander:
                result.mismatches.append(f"Alexander at {label}: expected {expected.alexander}, got {value}")
    if expected.all_green is not None:
        all_green, _ = green_sequence_report(quiver_of(d), word)
        if all_green != expected.all_green:
            result.mismatches.append(f"all mutations green: expected {expected.all_green}, got {all_green}")
    return result
