r"""Exact arithmetic in the theta subring of the cohomology of a p.p.a.v.

A class is stored by its coefficients in the divided-power basis
``theta^i / i!`` for ``i = 0..g``. In that basis

* the cup product is ``(a*b)[k] = sum_{i+j=k} C(k, i) a[i] b[j]``,
* integration against the fundamental class picks ``coeffs[g]``
  (so ``theta^g/g!`` integrates to 1, i.e. chi(Theta) = 1),
* Poincare duality reverses the coefficient list.

Classes are immutable and every coefficient is a :class:`fractions.Fraction`.

    >>> ctx = PpavContext(3)
    >>> e = CohClass(ctx, [1, 1, 1, 1])
    >>> (e * e).coeffs == CohClass(ctx, [1, 2, 4, 8]).coeffs
    True
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Tuple, Union

from .errors import ContextMismatchError, InputError

DEFAULT_MAX_G = 64
MAX_G_ENV = "THETA_CALC_MAX_G"

Rational = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")


def max_g() -> int:
    raw = os.environ.get(MAX_G_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_G
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{MAX_G_ENV} must be a positive integer, got {raw!r}")
    if value < 1:
        raise InputError(f"{MAX_G_ENV} must be a positive integer, got {raw!r}")
    return value


def parse_rational(text, pointer=None) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (q > 0) into a Fraction.

    Integers are accepted as-is; floats and bools are rejected so that no
    binary rounding ever leaks in.
    """
    if isinstance(text, bool):
        raise InputError(f"expected a rational, got {text!r}", pointer)
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError(f"expected a rational string 'p/q', got {text!r}", pointer)
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise InputError(f"malformed rational {text!r} (expected 'p' or 'p/q')", pointer)
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if den <= 0:
        raise InputError(f"denominator must be positive in {text!r}", pointer)
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def _as_fraction(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"coefficients must be int or Fraction, got {type(x).__name__}")
    return Fraction(x)


@dataclass(frozen=True)
class PpavContext:
    """Dimension ``g`` of the principally polarized abelian variety (A, Theta)."""

    g: int

    def __post_init__(self):
        if isinstance(self.g, bool) or not isinstance(self.g, int):
            raise InputError(f"g must be an integer, got {self.g!r}")
        cap = max_g()
        if not 1 <= self.g <= cap:
            raise InputError(f"g must lie in [1, {cap}], got {self.g}")

    def zero(self) -> "CohClass":
        return CohClass(self, [0] * (self.g + 1))

    def unit(self) -> "CohClass":
        return self.basis(0)

    def theta(self) -> "CohClass":
        return self.basis(1) if self.g >= 1 else self.zero()

    def point(self) -> "CohClass":
        """Class of a point, ``theta^g / g!``."""
        return self.basis(self.g)

    def basis(self, k: int, scale: Rational = 1) -> "CohClass":
        """``scale * theta^k / k!``; zero when ``k > g``."""
        coeffs = [0] * (self.g + 1)
        if 0 <= k <= self.g:
            coeffs[k] = scale
        elif k < 0:
            raise ValueError(f"degree must be non-negative, got {k}")
        return CohClass(self, coeffs)


@dataclass(frozen=True)
class CohClass:
    """A class ``sum_i coeffs[i] * theta^i / i!`` in H^*(A, Q)."""

    ctx: PpavContext
    coeffs: Tuple[Fraction, ...]

    def __init__(self, ctx: PpavContext, coeffs: Iterable[Rational]):
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        if len(coeffs) != ctx.g + 1:
            raise InputError(
                f"expected {ctx.g + 1} coefficients for g={ctx.g}, got {len(coeffs)}"
            )
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def g(self) -> int:
        return self.ctx.g

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"CohClass(g={self.g}, [{body}])"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def component(self, k: int) -> "CohClass":
        """Homogeneous degree-``k`` part."""
        return self.ctx.basis(k, self.coeffs[k]) if 0 <= k <= self.g else self.ctx.zero()

    def is_homogeneous(self, k: int) -> bool:
        return all(c == 0 for i, c in enumerate(self.coeffs) if i != k)

    def with_coeff(self, k: int, value: Rational) -> "CohClass":
        coeffs = list(self.coeffs)
        coeffs[k] = value
        return CohClass(self.ctx, coeffs)

    def _check(self, other: "CohClass"):
        if not isinstance(other, CohClass):
            return NotImplemented
        if other.ctx != self.ctx:
            raise ContextMismatchError(
                f"classes live on different varieties (g={self.g} vs g={other.g})"
            )
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return CohClass(self.ctx, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return CohClass(self.ctx, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CohClass(self.ctx, (-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, CohClass):
            return cup(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CohClass(self.ctx, (other * a for a in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def to_json(self) -> list:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, ctx: PpavContext, data, pointer="") -> "CohClass":
        if not isinstance(data, list):
            raise InputError("expected a JSON array of rationals", pointer or None)
        if len(data) != ctx.g + 1:
            raise InputError(
                f"expected {ctx.g + 1} coefficients for g={ctx.g}, got {len(data)}",
                pointer or None,
            )
        return cls(ctx, [parse_rational(x, f"{pointer}/{i}") for i, x in enumerate(data)])


def linear_combine(terms: Sequence[Tuple[Rational, CohClass]]) -> CohClass:
    """Return ``sum(scalar * cls for scalar, cls in terms)``."""
    terms = list(terms)
    if not terms:
        raise ValueError("linear_combine needs at least one term")
    ctx = terms[0][1].ctx
    out = [Fraction(0)] * (ctx.g + 1)
    for scalar, cls in terms:
        if cls.ctx != ctx:
            raise ContextMismatchError(
                f"classes live on different varieties (g={ctx.g} vs g={cls.g})"
            )
        s = _as_fraction(scalar)
        if s:
            for k, c in enumerate(cls.coeffs):
                out[k] += s * c
    return CohClass(ctx, out)


def cup(a: CohClass, b: CohClass) -> CohClass:
    """Cup product; degrees above g are dropped since they vanish on A."""
    if a.ctx != b.ctx:
        raise ContextMismatchError(
            f"classes live on different varieties (g={a.g} vs g={b.g})"
        )
    g = a.g
    out = [Fraction(0)] * (g + 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(g + 1 - i):
            y = b.coeffs[j]
            if y:
                out[i + j] += comb(i + j, i) * x * y
    return CohClass(a.ctx, out)


def integrate(a: CohClass) -> Fraction:
    return a.coeffs[a.g]


def poincare_dual(a: CohClass) -> CohClass:
    return CohClass(a.ctx, reversed(a.coeffs))
