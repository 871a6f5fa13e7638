"""Truncated formal power series over exact rationals.

The verification backbone: generating-function identities for Bell and
Stirling numbers are checked coefficient-by-coefficient against the table
routes, and series composition provides an independent oracle for the
chain-rule formula.

A series carries an explicit truncation order; binary operations truncate
to the smaller operand order so a result's order always states exactly how
far its coefficients can be trusted.  Storage is dense (orders stay small
here, N <= ~64).
"""

from fractions import Fraction

from .tables import bell_classic, factorial, stirling2_recurrence


class Series:
    """Power series truncated at a fixed order, coefficients are Fractions.

    coeffs[j] is the coefficient of x^j; len(coeffs) == order + 1, missing
    terms are explicit zeros.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError(f"order must be >= 0, got {order}")
            cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least its constant term")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def zero(cls, order):
        return cls([0], order=order)

    @classmethod
    def one(cls, order):
        return cls([1], order=order)

    @classmethod
    def x(cls, order):
        return cls([0, 1], order=order)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def coefficient(self, j):
        if not 0 <= j <= self.order:
            raise ValueError(f"coefficient {j} outside truncation order {self.order}")
        return self.coeffs[j]

    def truncate(self, order):
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def matches(self, other, order=None):
        """Coefficient-wise equality up to the shared (or given) order."""
        upto = min(self.order, other.order)
        if order is not None:
            upto = min(upto, order)
        return self.coeffs[: upto + 1] == other.coeffs[: upto + 1]

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Series({list(self.coeffs)!r})"

    def __add__(self, other):
        n = min(self.order, other.order)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], order=n)

    def __sub__(self, other):
        n = min(self.order, other.order)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)], order=n)

    def __neg__(self):
        return Series([-a for a in self.coeffs])

    def scale(self, c):
        c = Fraction(c)
        return Series([c * a for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: n + 1 - i]):
                if b:
                    out[i + j] += a * b
        return Series(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        """Long division; the divisor needs a nonzero constant term."""
        if not isinstance(other, Series):
            return self.scale(Fraction(1) / Fraction(other))
        if other.coeffs[0] == 0:
            raise ValueError("division requires a nonzero constant term")
        n = min(self.order, other.order)
        inv0 = Fraction(1) / other.coeffs[0]
        out = []
        for j in range(n + 1):
            acc = self.coeffs[j]
            for i in range(1, j + 1):
                if other.coeffs[i]:
                    acc -= other.coeffs[i] * out[j - i]
            out.append(acc * inv0)
        return Series(out)

    def derivative(self):
        """Formal derivative; the truncation order drops by one (floor 0)."""
        if self.order == 0:
            return Series.zero(0)
        return Series([(j + 1) * c for j, c in enumerate(self.coeffs[1:])])

    def exp(self):
        """Exponential sum_{j>=0} f^j / j!, truncated at this order.

        Requires a zero constant term: a nonzero one would drag in the
        transcendental factor e^c, which exact rationals cannot carry.
        Callers must factor such constants out analytically.
        """
        if self.coeffs[0] != 0:
            raise ValueError("exp requires a zero constant term")
        n = self.order
        # Horner over truncated arithmetic; terms beyond j = n cannot
        # reach coefficients <= n because f has no constant term
        acc = Series.one(n)
        for j in range(n, 0, -1):
            acc = Series.one(n) + (self * acc).scale(Fraction(1, j))
        return acc

    def compose(self, inner):
        """Substitute `inner` (zero constant term) into this series."""
        if inner.coeffs[0] != 0:
            raise ValueError("composition requires a zero constant term inside")
        n = min(self.order, inner.order)
        acc = Series([self.coeffs[n]], order=n)
        for j in range(n - 1, -1, -1):
            acc = acc * inner + Series([self.coeffs[j]], order=n)
        return acc


def expm1_series(order, scale=1):
    """e^(scale*x) - 1 to the given order, straight from factorials.

    Built from 1/j! coefficients rather than via Series.exp so the
    generating-function checks do not lean on exp's own correctness.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    scale = Fraction(scale)
    coeffs = [Fraction(0)]
    for j in range(1, order + 1):
        coeffs.append(scale**j / factorial(j))
    return Series(coeffs)


def gf_bell_check(order):
    """Check exp(e^x - 1) against Bell numbers: coefficient j must be B_j/j!."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    f = expm1_series(order).exp()
    return all(
        f.coeffs[j] == Fraction(bell_classic(j), factorial(j))
        for j in range(order + 1)
    )


def gf_bell_alternating_check(order):
    """Check exp(e^-x - 1): coefficient j must be (-1)^j B_j/j!."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    f = expm1_series(order, -1).exp()
    return all(
        f.coeffs[j] == Fraction((-1) ** j * bell_classic(j), factorial(j))
        for j in range(order + 1)
    )


def gf_stirling_check(k, order):
    """Check (e^x - 1)^k / k!: coefficient n must be S(n,k)/n! (0 below n = k)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if order < k:
        raise ValueError(f"order must be >= k, got order {order} < k {k}")
    base = expm1_series(order)
    power = Series.one(order)
    for _ in range(k):
        power = power * base
    f = power.scale(Fraction(1, factorial(k)))
    for n in range(order + 1):
        want = Fraction(stirling2_recurrence(n, k), factorial(n)) if n >= k else 0
        if f.coeffs[n] != want:
            return False
    return True
