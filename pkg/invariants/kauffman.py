"""
Kauffman states relative to a segment and their transposition lattice.

A state places one marker at a corner of every crossing so that every
region, except the two along the chosen segment, holds exactly one marker.
Two states are joined along segment j when the markers at the two ends of
j sit on the same side of j and swap to the other side.
"""
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import networkx as nx

from algebra.laurent import LaurentPoly
from config.settings import CLOCK_SENSE, CLOCKWISE, COUNTERCLOCKWISE
from diagrams.model import LinkDiagram
from invariants.exceptions import LatticeError
from utils.logger import KnotClusterLogger

logger = KnotClusterLogger("kauffman")

KauffmanState = Tuple[int, ...]  # marker corner slot per crossing


@dataclass(frozen=True)
class StatePoset:
    segment: int
    labels: Tuple[int, ...]
    states: Tuple[KauffmanState, ...]
    graph: nx.DiGraph
    exponents: Tuple[Tuple[int, ...], ...]
    source: int
    sink: int
    sense: str

    def monomial(self, index: int) -> str:
        text = LaurentPoly(
            tuple(f"y{l}" for l in self.labels), {self.exponents[index]: 1}
        ).to_text()
        return text


def opposite_sense(sense: str) -> str:
    return CLOCKWISE if sense == COUNTERCLOCKWISE else COUNTERCLOCKWISE


def enumerate_states(d: LinkDiagram, i: int) -> List[KauffmanState]:
    """
    All Kauffman states relative to segment i, by backtracking.

    The crossing with the fewest remaining candidate corners is placed first.

    Raises:
        LatticeError: no state exists
    """
    excluded = set(d.adjacent_regions(i))
    candidates: Dict[int, List[Tuple[int, int]]] = {}
    for x in range(d.n):
        candidates[x] = [
            (p, d.corner_region[(x, p)])
            for p in range(4)
            if d.corner_region[(x, p)] not in excluded
        ]

    states: List[KauffmanState] = []
    placement: Dict[int, int] = {}
    used = set()

    def extend():
        if len(placement) == d.n:
            states.append(tuple(placement[x] for x in range(d.n)))
            return
        best = None
        best_options: List[Tuple[int, int]] = []
        for x in range(d.n):
            if x in placement:
                continue
            options = [(p, r) for p, r in candidates[x] if r not in used]
            if best is None or len(options) < len(best_options):
                best, best_options = x, options
            if not options:
                return
        for p, region in best_options:
            placement[best] = p
            used.add(region)
            extend()
            used.discard(region)
            del placement[best]

    extend()
    if not states:
        raise LatticeError(f"No Kauffman state relative to segment {i}")
    return sorted(states)


def _transpositions(d: LinkDiagram, states: List[KauffmanState]) -> List[Tuple[int, int, int]]:
    """(state, state, segment) with markers moving from the clockwise side of the segment"""
    index = {s: k for k, s in enumerate(states)}
    moves = []
    for k, state in enumerate(states):
        for label in d.labels:
            (x, p), (y, q) = d.ends[label]
            if state[x] == (p - 1) % 4 and state[y] == (q - 1) % 4:
                moved = list(state)
                moved[x], moved[y] = p, q
                target = index.get(tuple(moved))
                if target is not None:
                    moves.append((k, target, label))
    return moves


def _orient(
    d: LinkDiagram,
    i: int,
    states: List[KauffmanState],
    moves: List[Tuple[int, int, int]],
    sense: str
) -> Tuple[Optional[StatePoset], str]:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(states)))
    for src, dst, label in moves:
        if sense == COUNTERCLOCKWISE:
            graph.add_edge(src, dst, label=label)
        else:
            graph.add_edge(dst, src, label=label)

    if not nx.is_weakly_connected(graph):
        return None, "transposition graph is disconnected"
    if not nx.is_directed_acyclic_graph(graph):
        return None, "orientation has a cycle"
    sources = [v for v in graph if graph.in_degree(v) == 0]
    sinks = [v for v in graph if graph.out_degree(v) == 0]
    if len(sources) != 1 or len(sinks) != 1:
        return None, f"{len(sources)} minimal and {len(sinks)} maximal states"

    labels = d.labels
    position = {l: k for k, l in enumerate(labels)}
    exponents: Dict[int, Tuple[int, ...]] = {sources[0]: (0,) * len(labels)}
    for node in nx.topological_sort(graph):
        for _, succ, data in graph.out_edges(node, data=True):
            step = list(exponents[node])
            step[position[data["label"]]] += 1
            step = tuple(step)
            if exponents.setdefault(succ, step) != step:
                return None, f"exponent of state {succ} depends on the path"

    poset = StatePoset(
        segment=i,
        labels=labels,
        states=tuple(states),
        graph=graph,
        exponents=tuple(exponents[k] for k in range(len(states))),
        source=sources[0],
        sink=sinks[0],
        sense=sense,
    )
    return poset, ""


def build_poset(
    d: LinkDiagram,
    i: int,
    states: Optional[List[KauffmanState]] = None,
    sense: Optional[str] = None,
    fallback: bool = True
) -> StatePoset:
    """
    Transposition lattice of the states relative to i.

    Args:
        d: diagram
        i: segment
        states: precomputed states, enumerated when omitted
        sense: rotation sense counted as "up", defaults to the configured one
        fallback: try the opposite sense once when the configured one fails

    Raises:
        LatticeError: neither orientation gives a graded lattice
    """
    sense = sense or CLOCK_SENSE
    states = states if states is not None else enumerate_states(d, i)
    moves = _transpositions(d, states)
    poset, problem = _orient(d, i, states, moves, sense)
    if poset is None and fallback:
        other = opposite_sense(sense)
        logger.warning(
            f"Segment {i}: {problem} with {sense} orientation, retrying {other}",
            extra={"operation": "state_lattice", "segment": i, "sense": sense},
        )
        poset, second = _orient(d, i, states, moves, other)
        problem = f"{problem}; {second}" if poset is None else problem
    if poset is None:
        raise LatticeError(f"States relative to segment {i}: {problem}")
    logger.log_lattice(i, len(states), poset.graph.number_of_edges(), poset.sense)
    return poset


@lru_cache(maxsize=512)
def _cached_poset(key: Tuple, i: int, sense: Optional[str]) -> StatePoset:
    crossings, tails = key
    return build_poset(LinkDiagram(crossings, dict(tails)), i, sense=sense)


def poset_of(d: LinkDiagram, i: int, sense: Optional[str] = None) -> StatePoset:
    """build_poset cached on the indexed crossings, so relabelled diagrams never share states"""
    return _cached_poset(d.raw_key(), i, sense)


def lattice_polynomial(poset: StatePoset) -> LaurentPoly:
    """Sum of y^e over the states of the poset"""
    variables = tuple(f"y{l}" for l in poset.labels)
    return LaurentPoly(variables, {e: 1 for e in poset.exponents})


def poset_dims(poset: StatePoset) -> Dict[int, int]:
    """Exponent of the maximal state by segment"""
    top = poset.exponents[poset.sink]
    return {label: top[k] for k, label in enumerate(poset.labels)}


def f_of_T(d: LinkDiagram, i: int, sense: Optional[str] = None) -> LaurentPoly:
    """Sum of y^e over the states relative to i"""
    return lattice_polynomial(poset_of(d, i, sense))


def dims_of_T(d: LinkDiagram, i: int, sense: Optional[str] = None) -> Dict[int, int]:
    """Dimension vector: exponent of the maximal state"""
    return poset_dims(poset_of(d, i, sense))


def support_rule(d: LinkDiagram, i: int) -> set:
    """Segments that bound no common region with i"""
    return set(d.labels) - d.coregion_segments(i)


def dim_symmetry_check(
    d: LinkDiagram,
    sense: Optional[str] = None,
    dims: Optional[Dict[int, Dict[int, int]]] = None
) -> Dict:
    """
    Compare dim T(i)_j with dim T(j)_i, and column sums with total dimensions.

    Args:
        dims: precomputed dims_of_T per segment

    Returns:
        dict with the dimension table and lists of violations
    """
    start_time = time.time()
    if dims is None:
        dims = {i: dims_of_T(d, i, sense) for i in d.labels}
    symmetry = [
        (i, j, dims[i][j], dims[j][i])
        for i in d.labels
        for j in d.labels
        if i < j and dims[i][j] != dims[j][i]
    ]
    column_sums = [
        (j, sum(dims[i][j] for i in d.labels), sum(dims[j].values()))
        for j in d.labels
        if sum(dims[i][j] for i in d.labels) != sum(dims[j].values())
    ]
    return {
        "dims": dims,
        "symmetry_violations": symmetry,
        "column_sum_violations": column_sums,
        "duration_ms": int((time.time() - start_time) * 1000),
    }


def hasse_dot(poset: StatePoset, name: str = "lattice") -> str:
    """Hasse diagram with states labelled by monomials and edges by segment"""
    lines = [f'digraph "{name}" {{']
    for k in range(len(poset.states)):
        lines.append(f'  s{k} [label="{poset.monomial(k)}"];')
    for src, dst, data in sorted(poset.graph.edges(data=True)):
        lines.append(f'  s{src} -> s{dst} [label="{data["label"]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def state_dump(d: LinkDiagram, poset: StatePoset) -> List[Dict[str, int]]:
    """Every state as {crossing: region}"""
    return [
        {str(x): d.corner_region[(x, p)] for x, p in enumerate(state)}
        for state in poset.states
    ]
