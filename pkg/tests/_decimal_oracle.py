"""Independent high-precision reference for the extremal radii.

Uses only :mod:`decimal`: Machin's formula for pi, Taylor series for sine
and cosine, and ``arccosh(x) = ln(x + sqrt(x^2 - 1))``.
"""

from decimal import Decimal, localcontext


def _arctan_inv(k, prec):
    # arctan(1/k)
    with localcontext() as ctx:
        ctx.prec = prec
        x = Decimal(1) / k
        x2 = x * x
        term, total, n = x, x, 1
        while True:
            term *= -x2
            n += 2
            delta = term / n
            if abs(delta) < Decimal(10) ** (-prec):
                return total
            total += delta


def pi(prec):
    with localcontext() as ctx:
        ctx.prec = prec + 10
        return 16 * _arctan_inv(5, prec + 10) - 4 * _arctan_inv(239, prec + 10)


def sin_cos(x, prec):
    with localcontext() as ctx:
        ctx.prec = prec + 10
        s, c = Decimal(0), Decimal(0)
        term, n = Decimal(1), 0
        eps = Decimal(10) ** (-(prec + 5))
        while True:
            # term = x^n / n!
            if n % 4 == 0:
                c += term
            elif n % 4 == 1:
                s += term
            elif n % 4 == 2:
                c -= term
            else:
                s -= term
            n += 1
            term = term * x / n
            if abs(term) < eps:
                return s, c


def radii(g, prec=60):
    """(beta, R, C) for genus g as Decimals carrying about ``prec`` digits."""
    with localcontext() as ctx:
        ctx.prec = prec + 10
        beta = pi(prec) / (12 * g - 6)
        s, c = sin_cos(beta, prec)
        tan = s / c
        x_r = 1 / (2 * s)
        x_c = 1 / (Decimal(3).sqrt() * tan)
        R = (x_r + (x_r * x_r - 1).sqrt()).ln()
        C = (x_c + (x_c * x_c - 1).sqrt()).ln()
        return +beta, +R, +C
