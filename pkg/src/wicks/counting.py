"""Exact masses of maximal Wicks forms and the derived surface counts.

Everything here is integer or :class:`fractions.Fraction` arithmetic.
Stratum functions take the formula parameters; the order-6 stratum with
parameters ``(r, s, t)`` is the one labelled ``(3r; 2s, 2t)`` by its fixed
edge and vertex counts (see :func:`m6_label` / :func:`m6_params`).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from . import errors

_fact = [1]
_fact_lock = threading.Lock()


def factorial(n: int) -> int:
    if n < 0:
        raise errors.FormulaDomain(f"factorial of negative argument {n}")
    if n >= len(_fact):
        with _fact_lock:
            while len(_fact) <= n:
                _fact.append(_fact[-1] * len(_fact))
    return _fact[n]


def _check_genus(g):
    if g < 1:
        raise errors.GenusGuard(f"genus must be >= 1, got {g}")


def m1(g: int) -> Fraction:
    _check_genus(g)
    return 2 * Fraction(1, 12) ** g * Fraction(
        factorial(6 * g - 5), factorial(g) * factorial(3 * g - 3))


def _whole(num, den):
    """num/den when it is a nonnegative integer, else None."""
    if num < 0 or num % den:
        return None
    return num // den


def m2(g: int, r: int) -> Fraction:
    _check_genus(g)
    if r < 0:
        return Fraction(0)
    f = _whole(2 * g + 1 - r, 4)
    if f is None:
        return Fraction(0)
    return (Fraction(4, 12) ** f / factorial(r)
            * Fraction(factorial(6 * f + 2 * r - 5),
                       factorial(f) * factorial(3 * f + r - 3)))


def m3(g: int, s: int, t: int) -> Fraction:
    _check_genus(g)
    if s < 0 or t < 0:
        return Fraction(0)
    f = _whole(g + 1 - s - t, 3)
    if f is None or (s - 2 * g - 1) % 3 or (t - 2 * g) % 3:
        return Fraction(0)
    if g == 1:
        return Fraction(1, 6) if (s, t) == (0, 2) else Fraction(0)
    return (Fraction(2, 3) * Fraction(9, 12) ** f
            / (factorial(s) * factorial(t))
            * Fraction(factorial(6 * f + 2 * s + 2 * t - 5),
                       factorial(f) * factorial(3 * f + s + t - 3)))


def m6(g: int, r: int, s: int, t: int) -> Fraction:
    """Mass of the stratum labelled ``(3r; 2s, 2t)``."""
    _check_genus(g)
    if r < 0 or s < 0 or t < 0:
        return Fraction(0)
    f = _whole(2 * g + 5 - 3 * r - 4 * s - 4 * t, 12)
    if f is None or (2 * s - 2 * g - 1) % 3 or (2 * t - 2 * g) % 3:
        return Fraction(0)
    if g == 1:
        return Fraction(1, 6) if (r, s, t) == (1, 0, 1) else Fraction(0)
    return (Fraction(2, 6) * Fraction(36, 12) ** f
            / (factorial(r) * factorial(s) * factorial(t))
            * Fraction(factorial(6 * f + 2 * r + 2 * s + 2 * t - 5),
                       factorial(f) * factorial(3 * f + r + s + t - 3)))


def m6_label(r: int, s: int, t: int) -> tuple[int, int, int]:
    """Formula parameters -> (fixed edges, fixed positive, fixed negative)."""
    return 3 * r, 2 * s, 2 * t


def m6_params(r3: int, s2: int, t2: int) -> tuple[int, int, int]:
    """Inverse of :func:`m6_label`."""
    if r3 % 3 or s2 % 2 or t2 % 2:
        raise ValueError(f"({r3}; {s2}, {t2}) is not an order-6 stratum label")
    return r3 // 3, s2 // 2, t2 // 2


def strata2(g: int):
    """Admissible r with their masses."""
    return {r: m2(g, r) for r in range(2 * g + 2) if m2(g, r)}


def strata3(g: int):
    out = {}
    for s in range(g + 2):
        for t in range(g + 2 - s):
            v = m3(g, s, t)
            if v:
                out[(s, t)] = v
    return out


def strata6(g: int):
    """Masses keyed by the formula parameters (r, s, t)."""
    out = {}
    for r in range((2 * g + 5) // 3 + 1):
        for s in range((2 * g + 5) // 4 + 1):
            for t in range((2 * g + 5) // 4 + 1):
                if 3 * r + 4 * s + 4 * t > 2 * g + 5:
                    continue
                v = m6(g, r, s, t)
                if v:
                    out[(r, s, t)] = v
    return out


def totals(g: int) -> tuple[Fraction, Fraction, Fraction]:
    return (sum(strata2(g).values(), Fraction(0)),
            sum(strata3(g).values(), Fraction(0)),
            sum(strata6(g).values(), Fraction(0)))


def _integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise errors.IntegralityViolation(f"{what} = {x} is not an integer")
    return x.numerator


@dataclass(frozen=True)
class CountTable:
    genus: int
    m1: Fraction
    m2: Fraction
    m3: Fraction
    m6: Fraction
    M: dict  # d -> surfaces with an automorphism of order d
    exact: dict  # d -> surfaces with exactly d automorphisms

    def pointed(self) -> dict:
        """Number of linear representatives per mass, ``(12g - 6) m_d``."""
        n = 12 * self.genus - 6
        return {d: _integer(n * m, f"(12g-6) m{d}")
                for d, m in ((1, self.m1), (2, self.m2), (3, self.m3), (6, self.m6))}

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "m1": str(self.m1), "m2": str(self.m2),
            "m3": str(self.m3), "m6": str(self.m6),
            "M": {str(d): v for d, v in self.M.items()},
            "exact": {str(d): v for d, v in self.exact.items()},
        }


def count_table(g: int) -> CountTable:
    a1 = m1(g)
    a2, a3, a6 = totals(g)
    M = {
        1: _integer(a1 + a2 + 2 * a3 + 2 * a6, "M1"),
        2: _integer(2 * a2 + 4 * a6, "M2"),
        3: _integer(3 * a3 + 3 * a6, "M3"),
        6: _integer(6 * a6, "M6"),
    }
    exact = {
        1: M[1] - M[2] - M[3] + M[6],
        2: M[2] - M[6],
        3: M[3] - M[6],
        6: M[6],
    }
    if any(v < 0 for v in exact.values()):
        raise errors.IntegralityViolation(f"negative exact-order count at genus {g}: {exact}")
    table = CountTable(g, a1, a2, a3, a6, M, exact)
    table.pointed()
    return table


def surfaces(g: int) -> int:
    return count_table(g).M[1]


def surface_table(max_g: int, include_genus_3: bool = False):
    """Rows ``(g, count, note)`` for g = 1, 2, 4, ..., max_g."""
    if max_g < 1:
        raise ValueError("max_g must be >= 1")
    rows = []
    for g in range(1, max_g + 1):
        if g == 3:
            if include_genus_3:
                rows.append((3, surfaces(3), "bijection open"))
            continue
        rows.append((g, surfaces(g), ""))
    return rows


def format_table(rows, fmt: str = "text") -> str:
    if fmt == "csv":
        lines = ["genus,surfaces,note"]
        lines += [f"{g},{n},{note}" for g, n, note in rows]
        return "\n".join(lines) + "\n"
    width = max(len(str(g)) for g, _, _ in rows)
    lines = []
    for g, n, note in rows:
        line = f"{g:>{width}}  {n}"
        if note:
            line += f"  ({note})"
        lines.append(line)
    return "\n".join(lines) + "\n"
