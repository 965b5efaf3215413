"""
Seeds with principal coefficients and their mutation.

Cluster variables are kept fully expanded as Laurent polynomials over
x_l, y_l (l running over the quiver labels). Coefficients are tropical
monomials, i.e. c-vectors.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from algebra.exceptions import InexactDivisionError, SeedError
from algebra.laurent import LaurentPoly, TropicalMonomial
from algebra.quiver import Quiver
from utils.logger import KnotClusterLogger

logger = KnotClusterLogger("cluster")


def seed_variables(labels: Sequence[int]) -> Tuple[str, ...]:
    return tuple(f"x{l}" for l in labels) + tuple(f"y{l}" for l in labels)


def coefficient_variables(labels: Sequence[int]) -> Tuple[str, ...]:
    return tuple(f"y{l}" for l in labels)


@dataclass(frozen=True)
class Seed:
    quiver: Quiver
    cluster: Tuple[LaurentPoly, ...]
    coeffs: Tuple[TropicalMonomial, ...]
    history: Tuple[int, ...] = field(default=())

    @property
    def labels(self) -> Tuple[int, ...]:
        return self.quiver.labels

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def variables(self) -> Tuple[str, ...]:
        return seed_variables(self.labels)

    def position(self, label: int) -> int:
        return self.quiver.index(label)

    def variable(self, label: int) -> LaurentPoly:
        return self.cluster[self.position(label)]


def initial_seed(q: Quiver) -> Seed:
    """Seed (x, y, q) with principal coefficients"""
    variables = seed_variables(q.labels)
    size = len(q.labels)
    cluster = tuple(LaurentPoly.variable(variables, f"x{l}") for l in q.labels)
    coeffs = tuple(TropicalMonomial.unit_vector(size, i) for i in range(size))
    return Seed(q, cluster, coeffs)


def exchange_matrix(q: Quiver) -> np.ndarray:
    """
    Matrix the seed mutates with.

    y_k rides on the arrows leaving k, so F-polynomials count submodules of
    representations of q. This is the exchange matrix of the opposite quiver.
    """
    return -q.matrix


def _y_monomial(variables: Sequence[str], trop: TropicalMonomial) -> LaurentPoly:
    return trop.to_poly(variables, offset=len(trop.exponents))


def mutate_seed(s: Seed, k: int) -> Seed:
    """
    Mutate a seed at vertex k.

    x'_k = (y^[c]+ * prod_{k->i} x_i + y^[-c]+ * prod_{i->k} x_i) / x_k where
    c is the c-vector at k and the y-monomials come from dividing by the
    tropical sum y^c (+) 1.

    Raises:
        SeedError: k is not a live vertex
        InexactDivisionError: the exchange relation left a remainder
    """
    q = s.quiver
    idx = s.position(k)
    if not q.live[idx]:
        raise SeedError(f"Vertex {k} was deleted")
    variables = s.variables
    size = s.rank
    one = TropicalMonomial.one(size)

    c_k = s.coeffs[idx]
    ys = coefficient_variables(s.labels)
    trop_sum = (
        LaurentPoly.monomial(ys, c_k.exponents) + LaurentPoly.constant(ys, 1)
    ).tropical_eval()

    B = exchange_matrix(q)
    leaving = _y_monomial(variables, c_k / trop_sum)
    entering = _y_monomial(variables, one / trop_sum)
    for i, b in enumerate(B[:, idx]):
        if b > 0:
            leaving = leaving * s.cluster[i] ** int(b)
        elif b < 0:
            entering = entering * s.cluster[i] ** int(-b)
    try:
        new_variable = (leaving + entering).exact_div(s.cluster[idx])
    except InexactDivisionError as e:
        raise InexactDivisionError(
            f"Exchange relation at {k} after {list(s.history)} is not exact: {e}"
        ) from e

    row = B[idx, :]
    coeffs = []
    for j, c_j in enumerate(s.coeffs):
        if j == idx:
            coeffs.append(c_k.inverse())
            continue
        b = int(row[j])
        coeffs.append(c_j * (c_k ** max(b, 0)) * (trop_sum ** (-b)))

    cluster = list(s.cluster)
    cluster[idx] = new_variable
    history = s.history + (k,)
    logger.log_mutation(k, len(history), c_k.is_nonnegative())
    return Seed(q.mutate(k), tuple(cluster), tuple(coeffs), history)


def mutate_sequence(s: Seed, word: Iterable[int]) -> Seed:
    for k in word:
        s = mutate_seed(s, k)
    return s


def seed_path(s: Seed, word: Iterable[int]) -> List[Seed]:
    """Every seed visited along word, starting with s"""
    seeds = [s]
    for k in word:
        seeds.append(mutate_seed(seeds[-1], k))
    return seeds


# -- read-outs -------------------------------------------------------------


def f_polynomial(s: Seed, label: int) -> LaurentPoly:
    """Cluster variable with every x set to 1"""
    x = s.variable(label)
    size = s.rank
    terms: Dict[Tuple[int, ...], int] = {}
    for exponent, coeff in x.terms.items():
        key = exponent[size:]
        terms[key] = terms.get(key, 0) + coeff
    return LaurentPoly(coefficient_variables(s.labels), terms)


def g_vector(s: Seed, label: int) -> Tuple[int, ...]:
    """x-exponent of the unique y-free monomial"""
    x = s.variable(label)
    size = s.rank
    free = [e[:size] for e in x.terms if not any(e[size:])]
    if len(free) != 1:
        raise SeedError(f"Variable at {label} has {len(free)} y-free monomials")
    return tuple(free[0])


def c_vector(s: Seed, label: int) -> Tuple[int, ...]:
    return s.coeffs[s.position(label)].exponents


def den_vector(s: Seed, label: int) -> Tuple[int, ...]:
    """Denominator exponents; initial cluster variables report zeros"""
    x = s.variable(label)
    size = s.rank
    if x.is_monomial() and list(x.terms.values()) == [1]:
        (exponent,) = x.terms
        if sorted(exponent) == [0] * (2 * size - 1) + [1]:
            return (0,) * size
    low = x.min_exponents()[:size]
    return tuple(max(0, -e) for e in low)


def raw_x_exponents(s: Seed, label: int) -> Tuple[int, ...]:
    """Lowest exponent of every x in the cluster variable"""
    return s.variable(label).min_exponents()[: s.rank]


def is_green(s: Seed, k: int) -> bool:
    return s.coeffs[s.position(k)].is_nonnegative()


def is_red(s: Seed) -> bool:
    """True when every c-vector is nonpositive"""
    return all(c.is_nonpositive() for c in s.coeffs)


def c_matrix(s: Seed) -> np.ndarray:
    return np.array([c.exponents for c in s.coeffs], dtype=np.int64).T


def g_matrix(s: Seed) -> np.ndarray:
    return np.array([g_vector(s, l) for l in s.labels], dtype=np.int64).T


def duality_check(s: Seed) -> bool:
    """G^T C = I"""
    return bool(np.array_equal(g_matrix(s).T @ c_matrix(s), np.eye(s.rank, dtype=np.int64)))


def initial_quiver(s: Seed) -> Quiver:
    """Quiver of the initial seed, recovered by undoing the history"""
    return s.quiver.mutate_sequence(reversed(s.history))


def separation_reconstruct(
    F: LaurentPoly,
    g: Sequence[int],
    initial: Quiver
) -> LaurentPoly:
    """
    x^g * F(yhat) / F|_P with yhat_j = y_j * prod_{j->i} x_i / prod_{i->j} x_i.

    Args:
        F: F-polynomial over y
        g: g-vector
        initial: quiver of the initial seed

    Raises:
        InexactDivisionError: F|_P is not a monomial
    """
    labels = initial.labels
    variables = seed_variables(labels)
    size = len(labels)
    B = exchange_matrix(initial)
    assignment = {}
    for j, label in enumerate(labels):
        exponent = [0] * (2 * size)
        exponent[size + j] = 1
        for i in range(size):
            exponent[i] = int(B[i, j])
        assignment[f"y{label}"] = LaurentPoly.monomial(variables, exponent)
    numerator = F.substitute(assignment, variables)
    tropical = F.tropical_eval()
    shift = [0] * size + [-e for e in tropical.exponents]
    return numerator.shift(list(g) + [0] * size).shift(shift)


def reconstruct(s: Seed, label: int) -> LaurentPoly:
    return separation_reconstruct(f_polynomial(s, label), g_vector(s, label), initial_quiver(s))


def f_shape_ok(F: LaurentPoly) -> bool:
    """Constant term 1 and a top monomial divisible by every other monomial"""
    if F.constant_term() != 1:
        return False
    return F.max_exponents() in F.terms


def seed_structure_check(s: Seed) -> List[str]:
    """Violations of the Laurent, positivity, sign-coherence, duality and F-shape properties"""
    violations = []
    for label in s.labels:
        x = s.variable(label)
        if any(c <= 0 for c in x.terms.values()):
            violations.append(f"negative coefficient in variable {label}")
        c = s.coeffs[s.position(label)]
        if not (c.is_nonnegative() or c.is_nonpositive()):
            violations.append(f"c-vector {label} not sign-coherent: {c.exponents}")
        if not f_shape_ok(f_polynomial(s, label)):
            violations.append(f"F-polynomial {label} has no constant 1 or no dominating monomial")
    try:
        if not duality_check(s):
            violations.append("G^T C is not the identity")
    except SeedError as e:
        violations.append(str(e))
    return violations


def green_sequence_report(q: Quiver, word: Sequence[int]) -> Tuple[bool, bool]:
    """
    Returns:
        (every mutation in word is green, the final seed is red)
    """
    coeff_seed = _CVectorSeed.initial(q)
    all_green = True
    for k in word:
        all_green &= coeff_seed.is_green(k)
        coeff_seed = coeff_seed.mutate(k)
    return all_green, coeff_seed.is_red()


@dataclass(frozen=True)
class _CVectorSeed:
    """Quiver and c-vectors only; enough to track greenness without Laurent arithmetic"""

    quiver: Quiver
    coeffs: Tuple[TropicalMonomial, ...]

    @classmethod
    def initial(cls, q: Quiver) -> "_CVectorSeed":
        size = len(q.labels)
        return cls(q, tuple(TropicalMonomial.unit_vector(size, i) for i in range(size)))

    def is_green(self, k: int) -> bool:
        return self.coeffs[self.quiver.index(k)].is_nonnegative()

    def is_red(self) -> bool:
        return all(c.is_nonpositive() for c in self.coeffs)

    def mutate(self, k: int) -> "_CVectorSeed":
        idx = self.quiver.index(k)
        c_k = self.coeffs[idx]
        trop_sum = c_k.oplus(TropicalMonomial.one(len(self.coeffs)))
        row = exchange_matrix(self.quiver)[idx, :]
        coeffs = []
        for j, c_j in enumerate(self.coeffs):
            if j == idx:
                coeffs.append(c_k.inverse())
            else:
                b = int(row[j])
                coeffs.append(c_j * (c_k ** max(b, 0)) * (trop_sum ** (-b)))
        return _CVectorSeed(self.quiver.mutate(k), tuple(coeffs))


def dump_seed(s: Seed, positions: Iterable[int] = ()) -> Dict:
    """Canonical text F-polynomials and vectors of every position"""
    labels = list(positions) or list(s.labels)
    return {
        "history": list(s.history),
        "variables": {
            str(label): {
                "f_polynomial": f_polynomial(s, label).to_text(),
                "g_vector": list(g_vector(s, label)),
                "c_vector": list(c_vector(s, label)),
                "den_vector": list(den_vector(s, label)),
            }
            for label in labels
        },
    }
