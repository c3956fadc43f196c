"""Chern classes, Chern characters and Euler characteristics on a p.p.a.v.

The conversion between the total Chern class ``c = 1 + c_1 + c_2 + ...`` and
the Chern character ``ch = r + ch_1 + ch_2 + ...`` goes through the power sums
``p_k = k! ch_k`` of the Chern roots and Newton's identities

    p_k = sum_{i=1}^{k-1} (-1)^(i-1) c_i p_{k-i} + (-1)^(k-1) k c_k,

with every product a cup product. The rank only enters as ``ch_0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .cohring import CohClass, PpavContext, Rational, cup, integrate
from .errors import InputError, InvariantViolationError

BASIS_TAG = "divided-power"


@dataclass(frozen=True)
class ChernCharacter:
    """Chern character; ``value[i]`` is ch_i and ``value[0]`` the rank."""

    value: CohClass

    def __post_init__(self):
        r = self.value[0]
        if r.denominator != 1 or r < 0:
            raise InputError(f"ch_0 (the rank) must be a non-negative integer, got {r}")

    @property
    def ctx(self) -> PpavContext:
        return self.value.ctx

    @property
    def g(self) -> int:
        return self.value.g

    @property
    def rank(self) -> int:
        return int(self.value[0])

    def __getitem__(self, k):
        return self.value[k]

    def __add__(self, other):
        if not isinstance(other, ChernCharacter):
            return NotImplemented
        return ChernCharacter(self.value + other.value)

    def to_json(self) -> dict:
        return {"g": self.g, "basis": BASIS_TAG, "ch": self.value.to_json()}


@dataclass(frozen=True)
class TotalChernClass:
    """Total Chern class; ``value[i]`` is c_i and ``value[0]`` is always 1."""

    value: CohClass

    def __post_init__(self):
        if self.value[0] != 1:
            raise InputError(f"c_0 must equal 1, got {self.value[0]}")

    @property
    def ctx(self) -> PpavContext:
        return self.value.ctx

    @property
    def g(self) -> int:
        return self.value.g

    def __getitem__(self, k):
        return self.value[k]

    def to_json(self) -> dict:
        return {"g": self.g, "basis": BASIS_TAG, "c": self.value.to_json()}


def exp_theta(t: Rational, ctx: PpavContext) -> CohClass:
    """``e^{t theta}``, whose divided-power coefficients are ``t^i``."""
    t = Fraction(t)
    return CohClass(ctx, [t**i for i in range(ctx.g + 1)])


def _power_sums(c: CohClass) -> list:
    # p[k] is the coefficient of theta^k/k! in the k-th power sum of the roots
    g = c.g
    p = [Fraction(0)] * (g + 1)
    for k in range(1, g + 1):
        acc = Fraction((-1) ** (k - 1) * k) * c[k]
        for i in range(1, k):
            if c[i] and p[k - i]:
                acc += (-1) ** (i - 1) * comb(k, i) * c[i] * p[k - i]
        p[k] = acc
    return p


def chern_to_character(rank: int, c: TotalChernClass) -> ChernCharacter:
    if isinstance(rank, bool) or not isinstance(rank, int):
        raise InputError(f"rank must be an integer, got {rank!r}")
    if rank < 0:
        raise InputError(f"rank must be non-negative, got {rank}")
    p = _power_sums(c.value)
    ch = [Fraction(rank)] + [p[k] / factorial(k) for k in range(1, c.g + 1)]
    return ChernCharacter(CohClass(c.ctx, ch))


def character_to_chern(ch: ChernCharacter) -> TotalChernClass:
    """Invert Newton's identities: ``k c_k = sum_{i=1}^{k} (-1)^(i-1) c_{k-i} p_i``.

    Rank-0 input is accepted; the result is then a purely formal class.
    """
    g = ch.g
    p = [Fraction(0)] + [factorial(k) * ch[k] for k in range(1, g + 1)]
    c = [Fraction(1)] + [Fraction(0)] * g
    for k in range(1, g + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            if p[i] and c[k - i]:
                acc += (-1) ** (i - 1) * comb(k, i) * c[k - i] * p[i]
        c[k] = acc / k
    return TotalChernClass(CohClass(ch.ctx, c))


def is_divided_power_profile(rank: int, c: TotalChernClass) -> bool:
    """True iff ``c_i = c_1^i / i!`` for every i.

    The same answer is read off the Chern character (ch_j = 0 for j >= 2);
    disagreement between the two raises InvariantViolationError.
    """
    c1 = c.value.component(1)
    power = c.ctx.unit()
    by_classes = True
    for i in range(1, c.g + 1):
        power = cup(power, c1)
        if power[i] / factorial(i) != c[i]:
            by_classes = False
            break
    ch = chern_to_character(rank, c)
    by_character = all(ch[j] == 0 for j in range(2, c.g + 1))
    if by_classes != by_character:
        raise InvariantViolationError(
            "divided-power test disagrees with vanishing of ch_j, j >= 2 "
            f"(classes: {by_classes}, character: {by_character})"
        )
    return by_classes


def euler_characteristic(ch: ChernCharacter) -> Fraction:
    # td(A) = 1, so Hirzebruch-Riemann-Roch reduces to integrating ch
    return integrate(ch.value)


def line_bundle_character(n: int, ctx: PpavContext) -> ChernCharacter:
    """``ch(O(n Theta)) = e^{n theta}``."""
    return ChernCharacter(exp_theta(n, ctx))
