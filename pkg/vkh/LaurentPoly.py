import dataclasses
from fractions import Fraction
from typing import Dict, Tuple, Iterable, Union, List
from vkh.GaussInt import GaussInt, Number


@dataclasses.dataclass(frozen=True)
class LaurentPoly:
    """Laurent polynomial in q^(1/2) over the Gaussian integers.

    Keys are doubled exponents: the term (3, c) stands for c * q^(3/2).
    Terms are kept sorted by exponent and never hold a zero coefficient.
    """

    terms: Tuple[Tuple[int, GaussInt], ...] = ()

    @classmethod
    def from_dict(cls, coefficients: Dict[int, Number]) -> 'LaurentPoly':
        cleaned = []
        for exponent in sorted(coefficients):
            coefficient = GaussInt.coerce(coefficients[exponent])
            if coefficient:
                cleaned.append((exponent, coefficient))
        return cls(tuple(cleaned))

    @classmethod
    def monomial(cls, coefficient: Number, doubled_exponent: int = 0) -> 'LaurentPoly':
        return cls.from_dict({doubled_exponent: coefficient})

    @classmethod
    def zero(cls) -> 'LaurentPoly':
        return cls(())

    @classmethod
    def one(cls) -> 'LaurentPoly':
        return cls.monomial(1, 0)

    @classmethod
    def loop(cls) -> 'LaurentPoly':
        """q + q^-1, the value of one circle."""
        return cls.from_dict({2: 1, -2: 1})

    @classmethod
    def from_list(cls, data: Iterable[Iterable[int]]) -> 'LaurentPoly':
        coefficients: Dict[int, GaussInt] = {}
        for exponent, re, im in data:
            coefficients[exponent] = coefficients.get(exponent, GaussInt()) + GaussInt(re, im)
        return cls.from_dict(coefficients)

    def as_dict(self) -> Dict[int, GaussInt]:
        return dict(self.terms)

    def coefficient(self, doubled_exponent: int) -> GaussInt:
        return self.as_dict().get(doubled_exponent, GaussInt())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        return poly_add(self, other)

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly(tuple((exponent, -coefficient) for exponent, coefficient in self.terms))

    def __sub__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        return poly_add(self, -other)

    def __mul__(self, other: Union['LaurentPoly', int, GaussInt]) -> 'LaurentPoly':
        if isinstance(other, LaurentPoly):
            return poly_mul(self, other)
        return poly_scale(self, GaussInt.coerce(other), 0)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'LaurentPoly':
        result = LaurentPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    @property
    def is_real(self) -> bool:
        return all(coefficient.is_real for _, coefficient in self.terms)

    def to_list(self) -> List[List[int]]:
        return [[exponent, coefficient.re, coefficient.im] for exponent, coefficient in self.terms]

    def to_text(self) -> str:
        if not self.terms:
            return '0'
        pieces = []
        for index, (exponent, coefficient) in enumerate(self.terms):
            negative = coefficient.is_negative
            magnitude = -coefficient if negative else coefficient
            body = _term_text(magnitude, exponent)
            if index == 0:
                pieces.append('-' + body if negative else body)
            else:
                pieces.append(('- ' if negative else '+ ') + body)
        return ' '.join(pieces)

    def __str__(self) -> str:
        return self.to_text()


def _exponent_text(doubled_exponent: int) -> str:
    exponent = Fraction(doubled_exponent, 2)
    if exponent == 1:
        return 'q'
    if exponent.denominator == 1:
        return 'q^{}'.format(exponent.numerator)
    return 'q^({}/{})'.format(exponent.numerator, exponent.denominator)


def _term_text(coefficient: GaussInt, doubled_exponent: int) -> str:
    if doubled_exponent == 0:
        return coefficient.to_text()
    if coefficient == GaussInt(1, 0):
        return _exponent_text(doubled_exponent)
    return '{}*{}'.format(coefficient.to_text(), _exponent_text(doubled_exponent))


def poly_add(left: LaurentPoly, right: LaurentPoly) -> LaurentPoly:
    coefficients = left.as_dict()
    for exponent, coefficient in right.terms:
        coefficients[exponent] = coefficients.get(exponent, GaussInt()) + coefficient
    return LaurentPoly.from_dict(coefficients)


def poly_mul(left: LaurentPoly, right: LaurentPoly) -> LaurentPoly:
    coefficients: Dict[int, GaussInt] = {}
    for left_exponent, left_coefficient in left.terms:
        for right_exponent, right_coefficient in right.terms:
            exponent = left_exponent + right_exponent
            coefficients[exponent] = coefficients.get(exponent, GaussInt()) + left_coefficient * right_coefficient
    return LaurentPoly.from_dict(coefficients)


def poly_scale(poly: LaurentPoly, unit: Number, doubled_shift: int) -> LaurentPoly:
    """Multiply by unit * q^(doubled_shift / 2)."""
    unit = GaussInt.coerce(unit)
    return LaurentPoly.from_dict({exponent + doubled_shift: coefficient * unit for exponent, coefficient in poly.terms})


def eval_at_one(poly: LaurentPoly) -> GaussInt:
    total = GaussInt()
    for _, coefficient in poly.terms:
        total = total + coefficient
    return total
