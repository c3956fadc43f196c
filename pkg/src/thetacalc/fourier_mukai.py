"""Fourier-Mukai transforms of sheaf invariants on a p.p.a.v.

For a WIT_j sheaf E the transform satisfies

    ch_i(E^) = (-1)^(i+j) PD(ch_{g-i}(E)),

which in the divided-power basis is a signed reversal of the coefficients.
WIT indices are declared by the caller; only their arithmetic consequences
are checked here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .chern import ChernCharacter, euler_characteristic
from .cohring import CohClass, PpavContext, poincare_dual
from .errors import InputError, UndeclaredWITError
from .report import CriterionReport


class Side(str, enum.Enum):
    A = "A"
    A_HAT = "A-hat"

    def flip(self) -> "Side":
        return Side.A_HAT if self is Side.A else Side.A

    @property
    def functor(self) -> str:
        # the functor that transforms a sheaf living on this side
        return "Phi" if self is Side.A else "Phi^"


@dataclass(frozen=True)
class SheafInvariant:
    """Numerical shadow of a coherent sheaf: ch, declared WIT index, side.

    Arithmetic consistency of the WIT declaration is not enforced here;
    see :func:`check_wit_rules`.
    """

    ch: ChernCharacter
    wit_index: Optional[int] = None
    side: Side = Side.A

    def __post_init__(self):
        if self.wit_index is not None and (
            isinstance(self.wit_index, bool) or not isinstance(self.wit_index, int)
        ):
            raise InputError(f"wit index must be an integer or None, got {self.wit_index!r}")
        object.__setattr__(self, "side", Side(self.side))

    @property
    def ctx(self) -> PpavContext:
        return self.ch.ctx

    @property
    def g(self) -> int:
        return self.ch.g

    @property
    def rank(self) -> int:
        return self.ch.rank

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "ch": self.ch.value.to_json(),
            "wit": self.wit_index,
            "side": self.side.value,
        }

    @classmethod
    def from_json(cls, data) -> "SheafInvariant":
        from .schemas import parse_sheaf

        return parse_sheaf(data)


def mukai_coefficients(value: CohClass, j: int) -> CohClass:
    """Signed Poincare-dual reversal applied to a bare class."""
    dual = poincare_dual(value)
    return CohClass(value.ctx, ((-1) ** (i + j) * x for i, x in enumerate(dual)))


def _require_wit(s: SheafInvariant) -> int:
    j = s.wit_index
    if j is None:
        raise UndeclaredWITError(
            "transform needs a declared WIT index; none given"
        )
    if not 0 <= j <= s.g:
        raise InputError(f"wit index must lie in [0, {s.g}], got {j}")
    return j


def mukai_transform(s: SheafInvariant) -> SheafInvariant:
    """Transform of a WIT_j sheaf: a WIT_{g-j} sheaf on the other side."""
    j = _require_wit(s)
    ch = ChernCharacter(mukai_coefficients(s.ch.value, j))
    return SheafInvariant(ch, s.g - j, s.side.flip())


def transform_rank(s: SheafInvariant):
    """``(-1)^j chi(s)``: the rank the transform must have."""
    j = _require_wit(s)
    return (-1) ** j * euler_characteristic(s.ch)


def double_transform_check(s: SheafInvariant) -> bool:
    return mukai_transform(mukai_transform(s)) == s


def check_wit_rules(s: SheafInvariant) -> CriterionReport:
    report = CriterionReport(f"WIT rules for sheaf on {s.side.value} (g={s.g})")
    g, j = s.g, s.wit_index
    if not report.check("wit_declared", j is not None, "no WIT index declared" if j is None else f"WIT_{j}"):
        return report
    if not report.check("wit_in_range", 0 <= j <= g, f"index {j}, allowed [0, {g}]"):
        return report

    report.check(
        "wit_g_locally_free",
        j != g or s.rank >= 1,
        f"WIT_{g} forces a non-zero locally free sheaf; rank is {s.rank}",
    )
    rk = transform_rank(s)
    report.derived["euler_characteristic"] = euler_characteristic(s.ch)
    report.derived["transform_rank"] = rk
    report.check(
        "transform_rank_nonnegative_integer",
        rk.denominator == 1 and rk >= 0,
        f"(-1)^{j} * chi = {rk}",
    )
    if j == 0 and not s.ch.value.is_zero():
        # transform is WIT_g, hence locally free and non-zero
        report.check(
            "wit0_transform_nonzero",
            rk >= 1,
            f"transform of a non-zero WIT_0 sheaf is WIT_{g}; rank {rk}",
        )
    report.derived["transform_wit_index"] = g - j
    report.derived["transform_functor"] = s.side.functor
    return report
