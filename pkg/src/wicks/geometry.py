"""Hyperbolic data of extremal surfaces of genus g >= 2.

An extremal surface is glued from a regular hyperbolic polygon with
``n = 12g - 6`` sides and interior angles ``2*pi/3``.  With
``beta = pi / n``:

* embedded-disk radius ``R = arccosh(1 / (2 sin beta))`` (the inradius),
* covering-disk radius ``C = arccosh(1 / (sqrt(3) tan beta))`` (the
  circumradius of the polygon).

Values are computed with mpmath using guard digits, then checked against
a second evaluation at higher precision before being rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Context, Decimal

import mpmath

from . import errors

GUARD = 15


def _evaluate(g, dps):
    with mpmath.workdps(dps):
        n = 12 * g - 6
        beta = mpmath.pi / n
        R = mpmath.acosh(1 / (2 * mpmath.sin(beta)))
        C = mpmath.acosh(1 / (mpmath.sqrt(3) * mpmath.tan(beta)))
        angle = 2 * mpmath.pi / 3
        area = 4 * mpmath.pi * (g - 1)
        defect = (n - 2) * mpmath.pi - n * angle
        return {"beta": +beta, "R": +R, "C": +C, "interior_angle": +angle,
                "area": +area, "defect": +defect}


def _fixed(x, digits):
    """``x`` rounded half-even to ``digits`` places after the point."""
    with mpmath.workdps(digits + GUARD + 10):
        s = mpmath.nstr(x, digits + GUARD + 5, strip_zeros=False,
                        min_fixed=-mpmath.inf, max_fixed=mpmath.inf)
    ctx = Context(prec=digits + GUARD + 40, rounding=ROUND_HALF_EVEN)
    return str(Decimal(s).quantize(Decimal(1).scaleb(-digits), context=ctx))


@dataclass(frozen=True)
class ExtremalGeometry:
    genus: int
    digits: int
    beta: mpmath.mpf
    R: mpmath.mpf
    C: mpmath.mpf
    interior_angle: mpmath.mpf
    area: mpmath.mpf

    @property
    def n_sides(self) -> int:
        return 12 * self.genus - 6

    @property
    def error_bound(self) -> str:
        """Absolute bound on the error of each rounded decimal string."""
        return f"5e-{self.digits + 1}"

    def strings(self) -> dict:
        d = self.digits
        return {
            "genus": self.genus,
            "n_sides": self.n_sides,
            "beta": _fixed(self.beta, d),
            "R": _fixed(self.R, d),
            "C": _fixed(self.C, d),
            "interior_angle": _fixed(self.interior_angle, d),
            "area": _fixed(self.area, d),
            "digits": d,
            "error_bound": self.error_bound,
        }


def _check_genus(g):
    if g < 2:
        raise errors.GenusGuard(f"genus {g} surfaces are not hyperbolic")


def extremal_geometry(g: int, digits: int = 30) -> ExtremalGeometry:
    _check_genus(g)
    if digits < 1:
        raise ValueError("digits must be >= 1")
    lo = _evaluate(g, digits + GUARD)
    hi = _evaluate(g, digits + 2 * GUARD)
    tol = mpmath.mpf(10) ** (-(digits + GUARD // 2))
    for name in ("R", "C", "beta"):
        if abs(lo[name] - hi[name]) > tol:
            raise ArithmeticError(f"{name} did not stabilise at {digits} digits")
    return ExtremalGeometry(g, digits, hi["beta"], hi["R"], hi["C"],
                            hi["interior_angle"], hi["area"])


def gauss_bonnet_check(g: int, digits: int = 30) -> bool:
    """Angle defect of the (12g-6)-gon equals the surface area 4*pi*(g-1)."""
    _check_genus(g)
    v = _evaluate(g, digits + GUARD)
    with mpmath.workdps(digits + GUARD):
        return abs(v["defect"] - v["area"]) < mpmath.mpf(10) ** (-digits)


def circumradius_residual(geom: ExtremalGeometry) -> mpmath.mpf:
    """``cosh(C) * tan(beta) * sqrt(3) - 1``; zero up to rounding."""
    with mpmath.workdps(geom.digits + GUARD):
        return mpmath.cosh(geom.C) * mpmath.tan(geom.beta) * mpmath.sqrt(3) - 1
