"""Derivatives of exp(+-1/t) via Lah numbers, cross-checked by series.

Both routes compute the ratio of the n-th derivative to the function
value, so the transcendental prefactor exp(+-1/t0) is divided out
analytically and every quantity is an exact rational.  The same
divide-out move reconstructs, order by order in x, the identity that
links the derivatives of exp(e^-x) to the alternating Lah/Stirling sum.
"""

from fractions import Fraction

from .series import Series, expm1_series
from .tables import factorial, lah, stirling2_recurrence

SIGNS = (1, -1)


def _check_sign(sign):
    if sign not in SIGNS:
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")


def exp_recip_derivative_formula(n, t0, sign=1):
    """Ratio (d^n/dt^n exp(sign/t)) / exp(sign/t) at t = t0, by Lah numbers.

    Returns (-1)^n * sum_{k=1..n} sign^k * L(n,k) / t0^(n+k) as a Fraction.
    """
    _check_sign(sign)
    if n < 1:
        raise ValueError(f"derivative order must be >= 1, got {n}")
    t0 = Fraction(t0)
    if t0 == 0:
        raise ValueError("t0 = 0 is the singularity of exp(sign/t)")
    total = Fraction(0)
    for k in range(1, n + 1):
        term = Fraction(lah(n, k)) / t0 ** (n + k)
        total += term if (sign == 1 or k % 2 == 0) else -term
    return -total if n % 2 else total


def exp_recip_derivative_series_oracle(n, t0, sign=1):
    """The same ratio from a truncated series expansion around t0.

    Expands g(e) = sign/(t0+e) - sign/t0 geometrically (zero constant
    term), exponentiates, and reads off n! times the n-th coefficient.
    Independent of the Lah route, so agreement is a real check.
    """
    _check_sign(sign)
    if n < 1:
        raise ValueError(f"derivative order must be >= 1, got {n}")
    t0 = Fraction(t0)
    if t0 == 0:
        raise ValueError("t0 = 0 is the singularity of exp(sign/t)")
    coeffs = [Fraction(0)]
    for j in range(1, n + 1):
        c = Fraction((-1) ** j, 1) / t0 ** (j + 1)
        coeffs.append(c if sign == 1 else -c)
    g = Series(coeffs)
    return g.exp().coefficient(n) * factorial(n)


def proof_rhs_series(n, order):
    """The Lah/Stirling side of the central identity, as a series in x.

    Builds sum_{k=1..n} (-1)^k [sum_{l=1..k} L(k,l) exp(-l*x)] S(n,k)
    truncated at `order`.  Its constant term is (-1)^n B_n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    x = Series.x(order)
    total = Series.zero(order)
    for k in range(1, n + 1):
        inner = Series.zero(order)
        for l in range(1, k + 1):
            inner = inner + x.scale(-l).exp().scale(lah(k, l))
        term = inner.scale(stirling2_recurrence(n, k))
        total = total + (term if k % 2 == 0 else -term)
    return total


def proof_identity_check(n, order):
    """Verify the central identity behind the Bell-number formula, in series.

    Builds F = exp(e^-x - 1) to `order`, divides the n-th derivative by F
    (removing the exp(e^-x) prefactor exactly), and compares against
    proof_rhs_series coefficient-wise to order - n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if order < n:
        raise ValueError(f"order must be >= n, got order {order} < n {n}")
    f = expm1_series(order, -1).exp()
    deriv = f
    for _ in range(n):
        deriv = deriv.derivative()
    lhs = deriv / f
    return lhs.matches(proof_rhs_series(n, order), order - n)
