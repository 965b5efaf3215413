"""
Segment-incidence quivers as skew-symmetric integer matrices.

b[i, j] counts arrows i -> j minus arrows j -> i. Vertices are segment
labels; deleted vertices stay in the index set behind a live mask.
"""
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from algebra.exceptions import QuiverError
from diagrams.model import LinkDiagram


def matrix_mutation(matrix: np.ndarray, k: int) -> np.ndarray:
    """
    Mutate a skew-symmetric integer matrix at index k.

    Args:
        matrix: square skew-symmetric integer matrix
        k: 0-based index

    Returns:
        Mutated matrix
    """
    B = np.asarray(matrix, dtype=np.int64)
    if B.ndim != 2 or B.shape[0] != B.shape[1]:
        raise ValueError("matrix must be a square 2D array")
    n = B.shape[0]
    if not 0 <= k < n:
        raise IndexError(f"mutation index k={k} out of bounds for size {n}")

    col = B[:, k]
    row = B[k, :]
    Bp = B + (np.outer(np.abs(col), row) + np.outer(col, np.abs(row))) // 2
    Bp[k, :] = -row
    Bp[:, k] = -col
    return Bp


class Quiver:
    """
    Immutable 2-cycle-free quiver on segment labels.

    Args:
        labels: vertex labels, sorted ascending
        matrix: skew-symmetric exchange matrix indexed like labels
        live: mask of vertices that were not deleted
    """

    def __init__(
        self,
        labels: Sequence[int],
        matrix: np.ndarray,
        live: Optional[Sequence[bool]] = None
    ):
        self.labels: Tuple[int, ...] = tuple(labels)
        if list(self.labels) != sorted(set(self.labels)):
            raise QuiverError("Quiver labels must be distinct and sorted")
        self.matrix = np.array(matrix, dtype=np.int64)
        self.matrix.setflags(write=False)
        size = len(self.labels)
        if self.matrix.shape != (size, size):
            raise QuiverError(f"Matrix shape {self.matrix.shape} does not fit {size} labels")
        if not np.array_equal(self.matrix, -self.matrix.T):
            raise QuiverError("Exchange matrix must be skew-symmetric")
        self.live: Tuple[bool, ...] = tuple(live) if live is not None else (True,) * size
        self._index = {label: i for i, label in enumerate(self.labels)}

    @classmethod
    def from_arrows(cls, labels: Sequence[int], arrows: Iterable[Tuple[int, int]]) -> "Quiver":
        """Quiver from an arrow list; opposite arrows cancel"""
        labels = sorted(labels)
        index = {label: i for i, label in enumerate(labels)}
        B = np.zeros((len(labels), len(labels)), dtype=np.int64)
        for src, dst in arrows:
            B[index[src], index[dst]] += 1
            B[index[dst], index[src]] -= 1
        return cls(labels, B)

    def index(self, label: int) -> int:
        if label not in self._index:
            raise QuiverError(f"Unknown vertex {label}")
        return self._index[label]

    @property
    def live_labels(self) -> Tuple[int, ...]:
        return tuple(label for label, alive in zip(self.labels, self.live) if alive)

    def b(self, i: int, j: int) -> int:
        return int(self.matrix[self.index(i), self.index(j)])

    def arrows(self) -> Dict[Tuple[int, int], int]:
        """Arrow multiplicities between live vertices"""
        result = {}
        for i in self.live_labels:
            for j in self.live_labels:
                m = self.b(i, j)
                if m > 0:
                    result[(i, j)] = m
        return result

    def arrow_count(self) -> int:
        return sum(self.arrows().values())

    def mutate(self, k: int) -> "Quiver":
        idx = self.index(k)
        if not self.live[idx]:
            raise QuiverError(f"Vertex {k} was deleted")
        return Quiver(self.labels, matrix_mutation(self.matrix, idx), self.live)

    def mutate_sequence(self, word: Iterable[int]) -> "Quiver":
        quiver = self
        for k in word:
            quiver = quiver.mutate(k)
        return quiver

    def delete(self, vertices: Iterable[int]) -> "Quiver":
        """Mask vertices out; their arrows are dropped"""
        B = self.matrix.copy()
        live = list(self.live)
        for v in vertices:
            idx = self.index(v)
            live[idx] = False
            B[idx, :] = 0
            B[:, idx] = 0
        return Quiver(self.labels, B, live)

    def opposite(self) -> "Quiver":
        return Quiver(self.labels, -self.matrix, self.live)

    def permute(self, sigma: Mapping[int, int]) -> "Quiver":
        """Relabel vertex i as sigma(i); unmapped labels stay fixed"""
        image = [sigma.get(label, label) for label in self.labels]
        if sorted(image) != list(self.labels):
            raise QuiverError("Permutation is not a bijection on the vertex set")
        B = np.zeros_like(self.matrix)
        live = [False] * len(self.labels)
        for i, src in enumerate(self.labels):
            ni = self._index[image[i]]
            live[ni] = self.live[i]
            for j in range(len(self.labels)):
                B[ni, self._index[image[j]]] = self.matrix[i, j]
        return Quiver(self.labels, B, live)

    def equals(self, other: "Quiver") -> bool:
        """Same live vertices carrying the same arrows"""
        return set(self.live_labels) == set(other.live_labels) and self.arrows() == other.arrows()

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.equals(other)

    def __hash__(self):
        return hash((self.live_labels, tuple(sorted(self.arrows().items()))))

    def __repr__(self):
        return f"<Quiver: {len(self.live_labels)} vertices, {self.arrow_count()} arrows>"

    def to_dot(self, name: str = "quiver") -> str:
        """One DOT edge per arrow; multiple arrows carry a multiplicity label"""
        return arrows_to_dot(
            self.live_labels,
            [(i, j) for (i, j), m in sorted(self.arrows().items()) for _ in range(m)],
            name,
        )

    def to_json(self) -> Dict:
        return {
            "labels": list(self.labels),
            "live": list(self.live),
            "matrix": self.matrix.tolist(),
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "Quiver":
        return cls(doc["labels"], np.array(doc["matrix"]), doc.get("live"))


def raw_arrows(d: LinkDiagram) -> List[Tuple[int, int]]:
    """
    The clockwise 4-cycle of every crossing, before 2-cycle cancellation.

    In counterclockwise slot order the clockwise successor of slot p+1 is
    slot p, so each crossing contributes segments[p+1] -> segments[p].
    """
    arrows = []
    for crossing in d.crossings:
        seg = crossing.segments
        for p in range(4):
            arrows.append((seg[(p + 1) % 4], seg[p]))
    return arrows


def quiver_of(d: LinkDiagram) -> Quiver:
    """Segment-incidence quiver of a diagram"""
    return Quiver.from_arrows(d.labels, raw_arrows(d))


def arrows_to_dot(labels: Iterable[int], arrows: Sequence[Tuple[int, int]], name: str) -> str:
    counts: Dict[Tuple[int, int], int] = {}
    for arrow in arrows:
        counts[arrow] = counts.get(arrow, 0) + 1
    lines = [f'digraph "{name}" {{']
    for label in labels:
        lines.append(f"  {label};")
    for i, j in arrows:
        m = counts[(i, j)]
        attrs = f' [label="x{m}"]' if m > 1 else ""
        lines.append(f"  {i} -> {j}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def raw_quiver_dot(d: LinkDiagram, name: str = "raw quiver") -> str:
    """DOT of the uncancelled 4-cycles, 4n arrows"""
    return arrows_to_dot(d.labels, raw_arrows(d), name)
