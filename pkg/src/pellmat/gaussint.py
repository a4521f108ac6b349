"""Exact arithmetic over the Gaussian integers Z[i]."""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Union


class NotAUnit(ValueError):
    pass


class InexactDivision(ArithmeticError):
    pass


@dataclass(frozen=True, slots=True)
class GaussInt:
    re: int = 0
    im: int = 0

    def __post_init__(self) -> None:
        # bool is an int subclass but not a sensible component
        if type(self.re) is not int or type(self.im) is not int:
            raise TypeError(f"GaussInt components must be int, got {self.re!r}, {self.im!r}")

    @classmethod
    def coerce(cls, value: "GaussLike") -> GaussInt:
        if isinstance(value, GaussInt):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return cls(value, 0)
        if isinstance(value, str):
            return parse(value)
        if isinstance(value, dict):
            return from_json(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian integer")

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __add__(self, other: GaussLike) -> GaussInt:
        if not isinstance(other, (GaussInt, int)):
            return NotImplemented
        return gi_add(self, GaussInt.coerce(other))

    __radd__ = __add__

    def __sub__(self, other: GaussLike) -> GaussInt:
        if not isinstance(other, (GaussInt, int)):
            return NotImplemented
        o = GaussInt.coerce(other)
        return GaussInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: GaussLike) -> GaussInt:
        return -self + other

    def __mul__(self, other: GaussLike) -> GaussInt:
        if not isinstance(other, (GaussInt, int)):
            return NotImplemented
        return gi_mul(self, GaussInt.coerce(other))

    __rmul__ = __mul__

    def conjugate(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def exact_div(self, other: GaussLike) -> GaussInt:
        """Divide exactly in Z[i]; raises InexactDivision if the quotient leaves Z[i]."""
        o = GaussInt.coerce(other)
        q = _pair_exact_div(self.re, self.im, o.re, o.im)
        return GaussInt(*q)

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        return format_gauss(self)

    def __repr__(self) -> str:
        return f"GaussInt({self.re}, {self.im})"

    def to_json(self) -> dict[str, str]:
        return {"re": str(self.re), "im": str(self.im)}


GaussLike = Union[GaussInt, int, str]

ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I = GaussInt(0, 1)


def gi_add(a: GaussInt, b: GaussInt) -> GaussInt:
    return GaussInt(a.re + b.re, a.im + b.im)


def gi_mul(a: GaussInt, b: GaussInt) -> GaussInt:
    return GaussInt(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re)


def _pair_exact_div(ar: int, ai: int, br: int, bi: int) -> tuple[int, int]:
    n = br * br + bi * bi
    if n == 0:
        raise ZeroDivisionError("division by zero Gaussian integer")
    # a / b = a * conj(b) / |b|^2
    nr = ar * br + ai * bi
    ni = ai * br - ar * bi
    qr, rr = divmod(nr, n)
    qi, ri = divmod(ni, n)
    if rr or ri:
        raise InexactDivision(f"({ar}{ai:+}i) is not divisible by ({br}{bi:+}i)")
    return qr, qi


class UnitPhase(Enum):
    """The four units of Z[i]; the value is the exponent k in i**k."""

    ONE = 0
    I = 1
    MINUS_ONE = 2
    MINUS_I = 3

    def as_gauss(self) -> GaussInt:
        return _UNIT_VALUES[self.value]

    def __mul__(self, other: UnitPhase) -> UnitPhase:
        if not isinstance(other, UnitPhase):
            return NotImplemented
        return UnitPhase((self.value + other.value) % 4)

    def inverse(self) -> UnitPhase:
        return UnitPhase(-self.value % 4)

    def __str__(self) -> str:
        return format_gauss(self.as_gauss())


_UNIT_VALUES = (GaussInt(1, 0), GaussInt(0, 1), GaussInt(-1, 0), GaussInt(0, -1))


def as_gauss(u: UnitPhase) -> GaussInt:
    return u.as_gauss()


def unit_pow_i(k: int) -> UnitPhase:
    """i**k for any integer k (Python's % keeps negative k in range)."""
    return UnitPhase(k % 4)


def classify_unit(z: GaussInt) -> UnitPhase:
    try:
        return UnitPhase(_UNIT_VALUES.index(z))
    except ValueError:
        raise NotAUnit(f"{z} has norm {z.norm()}, not 1") from None


def strip_unit(z: GaussInt, u: UnitPhase) -> GaussInt:
    """z / u; exact since u**-1 = conj(u)."""
    return gi_mul(z, u.inverse().as_gauss())


def format_gauss(z: GaussInt) -> str:
    re_, im_ = z.re, z.im
    if im_ == 0:
        return str(re_)
    if im_ == 1:
        im_text = "i"
    elif im_ == -1:
        im_text = "-i"
    else:
        im_text = f"{im_}i"
    if re_ == 0:
        return im_text
    sign = "" if im_text.startswith("-") else "+"
    return f"{re_}{sign}{im_text}"


_GAUSS_RE = re.compile(
    r"""^\s*
    (?:
        (?P<re>[+-]?\d+)(?:(?P<isign>[+-])(?P<im>\d*)i)?   # a, a+bi, a-i
      | (?P<pure>[+-]?\d*)i                                  # bi, i, -i
    )\s*$""",
    re.VERBOSE,
)


def parse(text: str) -> GaussInt:
    """Parse "3", "2i", "-i", "3-4i", "7+i" and the like."""
    m = _GAUSS_RE.match(text)
    if m is None:
        raise ValueError(f"not a Gaussian integer literal: {text!r}")
    if m.group("pure") is not None:
        coef = m.group("pure")
        if coef in ("", "+"):
            return GaussInt(0, 1)
        if coef == "-":
            return GaussInt(0, -1)
        return GaussInt(0, int(coef))
    real = int(m.group("re"))
    if m.group("isign") is None:
        return GaussInt(real, 0)
    mag = int(m.group("im")) if m.group("im") else 1
    return GaussInt(real, mag if m.group("isign") == "+" else -mag)


def from_json(obj: dict) -> GaussInt:
    return GaussInt(int(obj["re"]), int(obj["im"]))
