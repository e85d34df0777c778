"""
PolyScalar - exact polynomials in the deformation parameter p with rational
coefficients. Numeric evaluation substitutes p = (q - 1) / sqrt(q).
"""
import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Tuple, Union

Number = Union[int, Fraction]

_TERM = re.compile(r"^(?P<coef>[+-]?\d+(?:/\d+)?)?\s*(?P<sign>-)?(?P<p>p(?:\^(?P<deg>\d+))?)?$")


def p_value(q: float) -> float:
    if q <= 0:
        raise ValueError(f"q must be positive, got {q}")
    return (q - 1.0) / math.sqrt(q)


class PolyScalar:
    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Union[Dict[int, Number], Iterable[Tuple[int, Number]], None] = None):
        items = coeffs.items() if isinstance(coeffs, dict) else (coeffs or ())
        clean: Dict[int, Fraction] = {}
        for degree, value in items:
            if degree < 0:
                raise ValueError(f"Negative degree {degree} in PolyScalar")
            value = Fraction(value)
            if value:
                clean[degree] = clean.get(degree, Fraction(0)) + value
                if not clean[degree]:
                    del clean[degree]
        self._coeffs = tuple(sorted(clean.items()))
        self._hash = None

    @classmethod
    def constant(cls, value: Number) -> "PolyScalar":
        return cls({0: value})

    @classmethod
    def monomial(cls, degree: int, value: Number = 1) -> "PolyScalar":
        return cls({degree: value})

    @property
    def coeffs(self) -> Dict[int, Fraction]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def degree(self) -> int:
        return self._coeffs[-1][0] if self._coeffs else -1

    # Arithmetic

    @staticmethod
    def _coerce(other) -> "PolyScalar":
        if isinstance(other, PolyScalar):
            return other
        if isinstance(other, (int, Rational)):
            return PolyScalar.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        merged = dict(self._coeffs)
        for d, c in other._coeffs:
            merged[d] = merged.get(d, Fraction(0)) + c
        return PolyScalar(merged)

    __radd__ = __add__

    def __neg__(self):
        return PolyScalar({d: -c for d, c in self._coeffs})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        product: Dict[int, Fraction] = {}
        for d1, c1 in self._coeffs:
            for d2, c2 in other._coeffs:
                product[d1 + d2] = product.get(d1 + d2, Fraction(0)) + c1 * c2
        return PolyScalar(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("PolyScalar only supports nonnegative powers")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._coeffs)
        return self._hash

    # Evaluation and text form

    def evaluate(self, q: float) -> float:
        p = p_value(q)
        return sum(float(c) * p ** d for d, c in self._coeffs)

    def evaluate_p(self, p: float) -> float:
        return sum(float(c) * p ** d for d, c in self._coeffs)

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for d, c in self._coeffs:
            if d == 0:
                parts.append(str(c))
            else:
                power = "p" if d == 1 else f"p^{d}"
                if c == 1:
                    parts.append(power)
                elif c == -1:
                    parts.append(f"-{power}")
                else:
                    parts.append(f"{c} {power}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"PolyScalar({self})"

    @classmethod
    def parse(cls, text: str) -> "PolyScalar":
        """Inverse of str(): '1 + -2 p + 1/3 p^2', '-p', '0'."""
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1].strip()
        if text in ("", "0"):
            return ZERO
        coeffs: Dict[int, Fraction] = {}
        for token in text.split(" + "):
            match = _TERM.match(token.strip())
            if not match or not (match.group("coef") or match.group("p")):
                raise ValueError(f"Cannot parse polynomial term {token!r}")
            coef = Fraction(match.group("coef")) if match.group("coef") else Fraction(1)
            if match.group("sign"):
                coef = -coef
            if match.group("p"):
                degree = int(match.group("deg")) if match.group("deg") else 1
            else:
                degree = 0
            coeffs[degree] = coeffs.get(degree, Fraction(0)) + coef
        return cls(coeffs)


ZERO = PolyScalar()
ONE = PolyScalar.constant(1)
P = PolyScalar.monomial(1)
