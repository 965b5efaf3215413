"""
Alexander polynomial from F-polynomials and from the crossing-region matrix.

Corner entries around a crossing, counterclockwise from the incoming
under-strand (slot 0 drawn at the bottom):

            |
       t    |   -1
    --------+--------
      -t    |    1
            ^
            under

i.e. corners 0..3 (between slots p and p+1) carry 1, -1, t, -t.
"""
from typing import Dict, List, Mapping, Optional

from sympy import ZZ, Matrix, Symbol
from sympy.polys.matrices import DomainMatrix

from algebra.laurent import T_VARIABLES, LaurentPoly, normalize_unit
from diagrams.exceptions import DiagramError
from diagrams.model import LinkDiagram, SegmentClass

CORNER_ENTRIES = (1, -1, "t", "-t")

_t = Symbol("t")


def _t_monomial(power: int, coeff: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(T_VARIABLES, (power,), coeff)


SPECIALIZATION = {
    SegmentClass.UNDER_TO_OVER: _t_monomial(1, -1),
    SegmentClass.OVER_TO_UNDER: _t_monomial(-1, -1),
    SegmentClass.SAME: _t_monomial(0, -1),
}


def specialize(F: LaurentPoly, classes: Mapping[int, SegmentClass]) -> LaurentPoly:
    """
    y_j -> -t, -1/t or -1 by the under/over pattern of segment j, then normalize.
    """
    assignment = {f"y{label}": SPECIALIZATION[cls] for label, cls in classes.items()}
    return normalize_unit(F.substitute(assignment, T_VARIABLES))


def _incoming_under_slot(d: LinkDiagram, x: int) -> int:
    crossing = d.crossings[x]
    for p in range(4):
        if crossing.is_under(p) and d.ends[crossing.segments[p]][1] == (x, p):
            return p
    raise DiagramError(f"Crossing {x} has no incoming under-strand")


def crossing_region_matrix(d: LinkDiagram) -> Matrix:
    """n x (n+2) matrix of corner entries in t"""
    entries = {1: 1, -1: -1, "t": _t, "-t": -_t}
    M = Matrix.zeros(d.n, len(d.regions))
    for x in range(d.n):
        start = _incoming_under_slot(d, x)
        for m, entry in enumerate(CORNER_ENTRIES):
            region = d.corner_region[(x, (start + m) % 4)]
            M[x, region] += entries[entry]
    return M


def region_domain_matrix(d: LinkDiagram) -> DomainMatrix:
    """The crossing-region matrix over ZZ[t]"""
    return DomainMatrix.from_Matrix(crossing_region_matrix(d)).convert_to(ZZ[_t])


def alexander_matrix(d: LinkDiagram, i: int, M: Optional[DomainMatrix] = None) -> LaurentPoly:
    """
    Determinant of the crossing-region matrix with the two regions along i removed.

    Pass M from region_domain_matrix to share it across segments.

    Raises:
        ZeroPolynomialError: singular matrix
    """
    if M is None:
        M = region_domain_matrix(d)
    dropped = set(d.adjacent_regions(i))
    keep = [r for r in range(M.shape[1]) if r not in dropped]
    det = M.extract(list(range(d.n)), keep).det()
    terms: Dict[tuple, int] = {}
    for (power,), coeff in det.terms():
        if coeff:
            terms[(power,)] = int(coeff)
    return normalize_unit(LaurentPoly(T_VARIABLES, terms))


def alexander_matrices(d: LinkDiagram) -> Dict[int, LaurentPoly]:
    """alexander_matrix for every segment from one shared matrix"""
    M = region_domain_matrix(d)
    return {i: alexander_matrix(d, i, M) for i in d.labels}


def eval_y_minus1(F: LaurentPoly) -> int:
    """F with every y set to -1"""
    return F.evaluate({name: -1 for name in F.variables})


def compare(a: LaurentPoly, b: LaurentPoly) -> bool:
    """Equality up to a signed power of t"""
    return normalize_unit(a) == normalize_unit(b)


def coefficient_list(p: LaurentPoly) -> List[int]:
    """Dense coefficients of the normalized polynomial, lowest degree first"""
    p = normalize_unit(p)
    degree = max(e[0] for e in p.terms)
    return [p.terms.get((k,), 0) for k in range(degree + 1)]


def is_palindromic(p: LaurentPoly) -> bool:
    """Delta(t) equals Delta(1/t) up to a signed power of t"""
    values = coefficient_list(p)
    return values == values[::-1] or values == [-v for v in values[::-1]]
