import dataclasses
from typing import Union

Number = Union['GaussInt', int]


@dataclasses.dataclass(frozen=True)
class GaussInt:
    re: int = 0
    im: int = 0

    @classmethod
    def coerce(cls, value: Number) -> 'GaussInt':
        if isinstance(value, GaussInt):
            return value
        return cls(int(value), 0)

    @classmethod
    def i_power(cls, exponent: int) -> 'GaussInt':
        """i ** exponent, exponent taken mod 4."""
        return (cls(1, 0), cls(0, 1), cls(-1, 0), cls(0, -1))[exponent % 4]

    def __add__(self, other: Number) -> 'GaussInt':
        other = GaussInt.coerce(other)
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> 'GaussInt':
        return GaussInt(-self.re, -self.im)

    def __sub__(self, other: Number) -> 'GaussInt':
        return self + (-GaussInt.coerce(other))

    def __rsub__(self, other: Number) -> 'GaussInt':
        return GaussInt.coerce(other) - self

    def __mul__(self, other: Number) -> 'GaussInt':
        if not isinstance(other, (GaussInt, int)):
            return NotImplemented
        other = GaussInt.coerce(other)
        return GaussInt(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def is_negative(self) -> bool:
        """True for -n and -ni with n > 0; used when rendering signs."""
        return (self.im == 0 and self.re < 0) or (self.re == 0 and self.im < 0)

    def to_list(self) -> list:
        return [self.re, self.im]

    def to_text(self) -> str:
        if self.im == 0:
            return str(self.re)
        imaginary = {1: 'i', -1: '-i'}.get(self.im, '{}i'.format(self.im))
        if self.re == 0:
            return imaginary
        return '({}{}{})'.format(self.re, '+' if self.im > 0 else '', imaginary)

    def __str__(self) -> str:
        return self.to_text()
