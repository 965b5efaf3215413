"""
Exact sparse multivariate Laurent polynomials over the integers.

A polynomial lives over a fixed, ordered tuple of variable names (its ambient
set) and stores a map from exponent vectors to nonzero integer coefficients.
Addition and multiplication work directly on the maps; exact division is
delegated to sympy's sparse polynomial rings after clearing negative
exponents.
"""
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyRing

from algebra.exceptions import (
    ArityMismatchError,
    InexactDivisionError,
    PolynomialError,
    ZeroPolynomialError,
)

Exponent = Tuple[int, ...]

_TERM_RE = re.compile(r"[+-]?[^+-]+")
_FACTOR_RE = re.compile(r"([a-z]\d*)(?:\^(~?\d+))?")


def cluster_variables(size: int) -> Tuple[str, ...]:
    """Ambient set x1..xN, y1..yN for a cluster algebra of rank N"""
    return tuple(f"x{i}" for i in range(1, size + 1)) + tuple(f"y{i}" for i in range(1, size + 1))


def y_variables(size: int) -> Tuple[str, ...]:
    """Ambient set y1..yN"""
    return tuple(f"y{i}" for i in range(1, size + 1))


T_VARIABLES: Tuple[str, ...] = ("t",)


@lru_cache(maxsize=None)
def _integer_ring(arity: int) -> PolyRing:
    return PolyRing([f"v{i}" for i in range(arity)], ZZ)


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(p + q for p, q in zip(a, b))


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Optional[Mapping[Exponent, int]] = None
    ):
        self.variables: Tuple[str, ...] = tuple(variables)
        arity = len(self.variables)
        clean: Dict[Exponent, int] = {}
        for exponent, coeff in (terms or {}).items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != arity:
                raise ArityMismatchError(
                    f"Exponent {exponent} does not match {arity} variables"
                )
            if coeff:
                clean[exponent] = clean.get(exponent, 0) + int(coeff)
                if not clean[exponent]:
                    del clean[exponent]
        self.terms: Dict[Exponent, int] = clean
        self._hash: Optional[int] = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def _trusted(cls, variables: Tuple[str, ...], terms: Dict[Exponent, int]) -> "LaurentPoly":
        """Wrap terms that already have the right arity and no zero coefficients"""
        poly = cls.__new__(cls)
        poly.variables = variables
        poly.terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "LaurentPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], value: int) -> "LaurentPoly":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def monomial(
        cls,
        variables: Sequence[str],
        exponent: Sequence[int],
        coeff: int = 1
    ) -> "LaurentPoly":
        return cls(variables, {tuple(exponent): coeff})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str, power: int = 1) -> "LaurentPoly":
        variables = tuple(variables)
        if name not in variables:
            raise PolynomialError(f"Unknown variable {name}")
        exponent = [0] * len(variables)
        exponent[variables.index(name)] = power
        return cls(variables, {tuple(exponent): 1})

    @classmethod
    def parse(cls, text: str, variables: Sequence[str]) -> "LaurentPoly":
        """
        Parse canonical text such as "1 + y1*y4 - 3*t^-1".

        Juxtaposed factors ("y1y4y6") are accepted as well.
        """
        variables = tuple(variables)
        index = {name: i for i, name in enumerate(variables)}
        compact = re.sub(r"\s+", "", text).replace("^-", "^~")
        if not compact:
            raise PolynomialError("Empty polynomial text")
        result = cls.zero(variables)
        for chunk in _TERM_RE.findall(compact):
            sign = -1 if chunk.startswith("-") else 1
            body = chunk.lstrip("+-").replace("*", "")
            digits = re.match(r"\d*", body).group(0)
            coeff = int(digits) if digits else 1
            rest = body[len(digits):]
            exponent = [0] * len(variables)
            consumed = 0
            for match in _FACTOR_RE.finditer(rest):
                if match.start() != consumed:
                    break
                name, power = match.group(1), match.group(2)
                if name not in index:
                    raise PolynomialError(f"Unknown variable {name} in {text!r}")
                exponent[index[name]] += int(power.replace("~", "-")) if power else 1
                consumed = match.end()
            if consumed != len(rest):
                raise PolynomialError(f"Cannot parse term {chunk!r} in {text!r}")
            result = result + cls.monomial(variables, exponent, sign * coeff)
        return result

    # -- basic queries ----------------------------------------------------

    @property
    def arity(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coefficients(self) -> List[int]:
        return [self.terms[e] for e in sorted(self.terms)]

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.arity, 0)

    def support(self) -> List[str]:
        """Variables occurring with a nonzero exponent"""
        used = set()
        for exponent in self.terms:
            used.update(i for i, e in enumerate(exponent) if e)
        return [self.variables[i] for i in sorted(used)]

    def min_exponents(self) -> Exponent:
        if not self.terms:
            raise ZeroPolynomialError("Zero polynomial has no exponents")
        return tuple(min(col) for col in zip(*self.terms))

    def max_exponents(self) -> Exponent:
        if not self.terms:
            raise ZeroPolynomialError("Zero polynomial has no exponents")
        return tuple(max(col) for col in zip(*self.terms))

    def _check(self, other: "LaurentPoly"):
        if self.variables != other.variables:
            raise ArityMismatchError(
                f"Variable sets differ: {self.variables[:3]}... vs {other.variables[:3]}..."
            )

    def _coerce(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.variables, other)
        return NotImplemented

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for exponent, coeff in other.terms.items():
            value = terms.get(exponent, 0) + coeff
            if value:
                terms[exponent] = value
            else:
                terms.pop(exponent, None)
        return LaurentPoly._trusted(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._trusted(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = _add_exp(e1, e2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return LaurentPoly._trusted(self.variables, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if power < 0:
            if not self.is_monomial():
                raise InexactDivisionError("Only monomials have Laurent inverses")
            (exponent, coeff), = self.terms.items()
            if abs(coeff) != 1:
                raise InexactDivisionError(f"Coefficient {coeff} is not a unit")
            return LaurentPoly.monomial(
                self.variables, [-e * (-power) for e in exponent], coeff ** (-power)
            )
        result = LaurentPoly.constant(self.variables, 1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, exponent: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with the given exponent vector"""
        exponent = tuple(int(e) for e in exponent)
        if len(exponent) != self.arity:
            raise ArityMismatchError(f"Shift {exponent} does not match {self.arity} variables")
        return LaurentPoly._trusted(
            self.variables, {_add_exp(e, exponent): c for e, c in self.terms.items()}
        )

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """
        Divide exactly in the Laurent ring.

        Raises:
            ZeroPolynomialError: when dividing by zero
            InexactDivisionError: when the quotient is not a Laurent polynomial
        """
        self._check(other)
        if other.is_zero():
            raise ZeroPolynomialError("Division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.variables)
        if other.is_monomial():
            (exponent, coeff), = other.terms.items()
            if any(c % coeff for c in self.terms.values()):
                raise InexactDivisionError(f"Coefficients not divisible by {coeff}")
            negated = tuple(-e for e in exponent)
            return LaurentPoly(
                self.variables,
                {_add_exp(e, negated): c // coeff for e, c in self.terms.items()},
            )

        low_p = self.min_exponents()
        low_q = other.min_exponents()
        ring = _integer_ring(self.arity)
        numerator = ring.from_dict(
            {tuple(a - b for a, b in zip(e, low_p)): c for e, c in self.terms.items()}
        )
        denominator = ring.from_dict(
            {tuple(a - b for a, b in zip(e, low_q)): c for e, c in other.terms.items()}
        )
        try:
            quotient = numerator.exquo(denominator)
        except ExactQuotientFailed as exc:
            raise InexactDivisionError(
                f"{self.to_text()} is not divisible by {other.to_text()}"
            ) from exc
        offset = tuple(a - b for a, b in zip(low_p, low_q))
        return LaurentPoly(
            self.variables,
            {_add_exp(tuple(e), offset): int(c) for e, c in quotient.items()},
        )

    # -- evaluation -------------------------------------------------------

    def substitute(
        self,
        assignment: Mapping[str, Union["LaurentPoly", int]],
        target: Optional[Sequence[str]] = None
    ) -> "LaurentPoly":
        """
        Substitute variables by polynomials over the target variable set.

        Variables missing from the assignment are mapped to the variable of
        the same name in the target set.

        Raises:
            PolynomialError: a support variable has no image
            InexactDivisionError: a negative power of a non-monomial image
        """
        target = tuple(target) if target is not None else self.variables
        images: List[Optional[LaurentPoly]] = []
        for name in self.variables:
            if name in assignment:
                value = assignment[name]
                if isinstance(value, int):
                    value = LaurentPoly.constant(target, value)
                elif value.variables != target:
                    raise ArityMismatchError(f"Image of {name} is not over the target set")
                images.append(value)
            elif name in target:
                images.append(LaurentPoly.variable(target, name))
            else:
                images.append(None)

        powers: Dict[Tuple[int, int], LaurentPoly] = {}
        result = LaurentPoly.zero(target)
        for exponent, coeff in self.terms.items():
            term = LaurentPoly.constant(target, coeff)
            for i, e in enumerate(exponent):
                if not e:
                    continue
                if images[i] is None:
                    raise PolynomialError(f"No value for variable {self.variables[i]}")
                key = (i, e)
                if key not in powers:
                    powers[key] = images[i] ** e
                term = term * powers[key]
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, int]) -> int:
        """Evaluate at integer values; every support variable must be given"""
        total = 0
        for exponent, coeff in self.terms.items():
            value = coeff
            for name, e in zip(self.variables, exponent):
                if e:
                    base = values[name]
                    if e < 0:
                        if base not in (1, -1):
                            raise InexactDivisionError(f"{name}={base} is not a unit")
                        value *= base ** (-e)
                    else:
                        value *= base ** e
            total += value
        return total

    def tropical_eval(self) -> "TropicalMonomial":
        """Componentwise minimum of the exponent vectors"""
        if self.is_zero():
            raise ZeroPolynomialError("Tropical evaluation of zero")
        return TropicalMonomial(self.min_exponents())

    # -- comparison and output --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.variables, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self) -> List[Tuple[Exponent, int]]:
        return sorted(self.terms.items())

    def _monomial_text(self, exponent: Exponent) -> str:
        factors = []
        for name, e in zip(self.variables, exponent):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        return "*".join(factors)

    def to_text(self) -> str:
        """Canonical text form, terms in lexicographic exponent order"""
        if self.is_zero():
            return "0"
        parts = []
        for k, (exponent, coeff) in enumerate(self.sorted_terms()):
            monomial = self._monomial_text(exponent)
            magnitude = abs(coeff)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if k == 0:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"{'-' if coeff < 0 else '+'} {body}")
        return " ".join(parts)

    def to_json(self) -> List[List]:
        return [[list(e), c] for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, variables: Sequence[str], doc: Iterable) -> "LaurentPoly":
        return cls(variables, {tuple(e): c for e, c in doc})

    def __repr__(self):
        return f"LaurentPoly({self.to_text()})"

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class TropicalMonomial:
    """Element of the tropical semifield: an integer exponent vector over y"""

    exponents: Tuple[int, ...]

    @classmethod
    def unit_vector(cls, size: int, index: int) -> "TropicalMonomial":
        return cls(tuple(1 if i == index else 0 for i in range(size)))

    @classmethod
    def one(cls, size: int) -> "TropicalMonomial":
        return cls((0,) * size)

    def __mul__(self, other: "TropicalMonomial") -> "TropicalMonomial":
        return TropicalMonomial(_add_exp(self.exponents, other.exponents))

    def __truediv__(self, other: "TropicalMonomial") -> "TropicalMonomial":
        return TropicalMonomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, power: int) -> "TropicalMonomial":
        return TropicalMonomial(tuple(power * a for a in self.exponents))

    def oplus(self, other: "TropicalMonomial") -> "TropicalMonomial":
        return TropicalMonomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def inverse(self) -> "TropicalMonomial":
        return TropicalMonomial(tuple(-a for a in self.exponents))

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.exponents)

    def is_nonpositive(self) -> bool:
        return all(a <= 0 for a in self.exponents)

    def positive_part(self) -> "TropicalMonomial":
        return TropicalMonomial(tuple(max(a, 0) for a in self.exponents))

    def to_poly(self, variables: Sequence[str], offset: int = 0) -> LaurentPoly:
        """Embed as a monomial, placing the exponents from position offset on"""
        exponent = [0] * len(variables)
        exponent[offset:offset + len(self.exponents)] = self.exponents
        return LaurentPoly.monomial(variables, exponent)


def normalize_unit(p: LaurentPoly) -> LaurentPoly:
    """
    Canonical representative of p up to a signed power of t.

    The lowest term is moved to degree 0 and given a positive coefficient.
    """
    if p.arity != 1:
        raise ArityMismatchError("normalize_unit expects a univariate polynomial")
    if p.is_zero():
        raise ZeroPolynomialError("Cannot normalize the zero polynomial")
    low = min(e[0] for e in p.terms)
    sign = 1 if p.terms[(low,)] > 0 else -1
    return LaurentPoly(p.variables, {(e[0] - low,): sign * c for e, c in p.terms.items()})


def t_poly(coefficients: Sequence[int], low_degree: int = 0) -> LaurentPoly:
    """Univariate polynomial in t from a coefficient list starting at t^low_degree"""
    return LaurentPoly(
        T_VARIABLES, {(low_degree + k,): c for k, c in enumerate(coefficients)}
    )
