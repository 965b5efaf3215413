"""
Vertex test for the Newton polytope of a polynomial.
"""
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix
from sympy.solvers.simplex import InfeasibleLPError, linprog

from algebra.laurent import LaurentPoly

Point = Tuple[int, ...]


def _is_extreme_in_some_coordinate(point: Point, others: Sequence[Point]) -> bool:
    for c, value in enumerate(point):
        if all(value > q[c] for q in others) or all(value < q[c] for q in others):
            return True
    return False


def _exposed_toward_box_corner(point: Point, others: Sequence[Point], lo: Point, hi: Point) -> bool:
    """point alone maximizes w.x for w = 2*point - lo - hi; always true on 0/1 vectors"""
    w = [2 * v - a - b for v, a, b in zip(point, lo, hi)]
    top = sum(a * b for a, b in zip(w, point))
    return all(sum(a * b for a, b in zip(w, q)) < top for q in others)


def in_convex_hull(point: Point, others: Sequence[Point]) -> bool:
    """
    Exact feasibility of lambda >= 0, sum(lambda) = 1, sum(lambda_k * q_k) = point.

    The equalities are posed as paired inequalities and the returned lambda
    is checked against them before it is trusted.
    """
    if not others:
        return False
    m = len(others)
    rows = [[q[c] for q in others] for c in range(len(point))]
    rows.append([1] * m)
    A = Matrix(rows)
    b = Matrix(list(point) + [1])
    try:
        _, solution = linprog(Matrix([0] * m), A=A.col_join(-A), b=b.col_join(-b))
    except InfeasibleLPError:
        return False
    lam = Matrix(list(solution))
    return all(v >= 0 for v in lam) and A * lam == b


def non_vertices(F: LaurentPoly) -> List[Point]:
    points = sorted(F.terms)
    if not points:
        return []
    lo = tuple(min(col) for col in zip(*points))
    hi = tuple(max(col) for col in zip(*points))
    result = []
    for k, p in enumerate(points):
        others = points[:k] + points[k + 1:]
        if _is_extreme_in_some_coordinate(p, others):
            continue
        if _exposed_toward_box_corner(p, others, lo, hi):
            continue
        if in_convex_hull(p, others):
            result.append(p)
    return result


def newton_vertex_check(F: LaurentPoly, witness: Optional[list] = None) -> bool:
    """
    True iff every exponent vector of F is a vertex of its Newton polytope.

    Args:
        F: polynomial
        witness: filled with the offending exponent vectors when given
    """
    bad = non_vertices(F)
    if witness is not None:
        witness.extend(bad)
    return not bad
