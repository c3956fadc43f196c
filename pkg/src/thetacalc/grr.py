"""Grothendieck-Riemann-Roch along the Abel embedding ``a: C -> J(C)``.

For a line bundle L of degree d on a genus-g curve, with [C] the minimal
class ``theta^(g-1)/(g-1)!`` and td(J) = 1,

    ch(a_* L) = a_*((1 + d [pt]) (1 - (g-1) [pt])) = [C] + (d - g + 1) [pt].
"""

from __future__ import annotations

from dataclasses import dataclass

from .chern import ChernCharacter
from .cohring import CohClass, PpavContext
from .errors import InputError


@dataclass(frozen=True)
class CurveLineBundleSpec:
    genus: int
    degree: int

    def __post_init__(self):
        for name in ("genus", "degree"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise InputError(f"{name} must be an integer, got {v!r}")
        if self.genus < 1:
            raise InputError(f"genus must be at least 1, got {self.genus}")

    @property
    def ctx(self) -> PpavContext:
        return PpavContext(self.genus)

    @property
    def degenerate(self) -> bool:
        return self.genus < 2

    def to_json(self) -> dict:
        return {"genus": self.genus, "degree": self.degree}


def curve_chi(spec: CurveLineBundleSpec) -> int:
    return spec.degree - spec.genus + 1


def abel_pushforward(spec: CurveLineBundleSpec) -> ChernCharacter:
    ctx = spec.ctx
    g = spec.genus
    coeffs = [0] * (g + 1)
    coeffs[g - 1] = 1
    coeffs[g] = curve_chi(spec)
    return ChernCharacter(CohClass(ctx, coeffs))


def serre_dual_degree(spec: CurveLineBundleSpec) -> CurveLineBundleSpec:
    """Degree of ``L^* (x) omega_C``."""
    return CurveLineBundleSpec(spec.genus, 2 * spec.genus - 2 - spec.degree)
