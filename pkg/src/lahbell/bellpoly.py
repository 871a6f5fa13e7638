"""Partial Bell polynomials evaluated exactly over rationals.

The polynomial for indices (n, k) sums over multiplicity vectors
(l_1, ..., l_{n-k+1}) with sum i*l_i = n and sum l_i = k; each term is
n!/(prod l_i!) * prod (x_i/i!)^l_i.  Everything is Fraction arithmetic,
so identities (the a,b scaling law, the all-ones evaluation, the chain
rule for n-th derivatives) can be checked bit-exactly.
"""

from dataclasses import dataclass
from fractions import Fraction

from .tables import CrossCheckError, factorial, stirling2_recurrence


@dataclass(frozen=True)
class PartitionVector:
    """Multiplicity vector for one monomial of a partial Bell polynomial.

    multiplicities[i-1] counts the parts of size i; the vector satisfies
    sum i*l_i = n and sum l_i = k and has length n - k + 1.
    """

    multiplicities: tuple
    n: int
    k: int


def enumerate_partition_vectors(n, k):
    """Yield every multiplicity vector of (n, k), each exactly once.

    Recursive descent over part sizes from largest to smallest, pruning on
    the remaining sum and remaining part count; the yield order is largest
    parts first.  The number of vectors equals the number of integer
    partitions of n into exactly k parts.
    """
    if n < 1 or k < 1 or k > n:
        raise ValueError(f"partition vectors need 1 <= k <= n, got ({n}, {k})")
    width = n - k + 1
    mults = [0] * width

    def descend(size, rem_sum, rem_count):
        if size == 1:
            # all remaining parts have size 1, so they must use up the sum
            if rem_sum == rem_count:
                mults[0] = rem_count
                yield PartitionVector(tuple(mults), n, k)
                mults[0] = 0
            return
        for c in range(min(rem_count, rem_sum // size), -1, -1):
            s, m = rem_sum - size * c, rem_count - c
            # each of the m remaining parts takes between 1 and size-1
            if m <= s <= m * (size - 1):
                mults[size - 1] = c
                yield from descend(size - 1, s, m)
                mults[size - 1] = 0

    yield from descend(width, n, k)


def bell_poly_eval(n, k, xs):
    """Evaluate the partial Bell polynomial B_{n,k} at x_1..x_{n-k+1}.

    xs supplies at least n-k+1 values (ints or Fractions); extra entries
    are ignored.  The combinatorial coefficient of every term,
    n!/(prod l_i! * prod (i!)^l_i), is asserted to divide exactly.
    """
    if n < 1 or k < 1 or k > n:
        raise ValueError(f"bell_poly_eval needs 1 <= k <= n, got ({n}, {k})")
    width = n - k + 1
    if len(xs) < width:
        raise ValueError(f"need {width} arguments x_1..x_{width}, got {len(xs)}")
    args = [Fraction(x) for x in xs[:width]]
    n_fact = factorial(n)
    total = Fraction(0)
    for vec in enumerate_partition_vectors(n, k):
        denom = 1
        monomial = Fraction(1)
        for i, l in enumerate(vec.multiplicities, start=1):
            if l == 0:
                continue
            denom *= factorial(l) * factorial(i) ** l
            monomial *= args[i - 1] ** l
        coeff, rem = divmod(n_fact, denom)
        if rem:
            raise CrossCheckError(
                f"non-integer coefficient {n_fact}/{denom} in B_{{{n},{k}}}"
            )
        total += coeff * monomial
    return total


def bell_poly_scaling_check(n, k, a, b, xs):
    """Check B_{n,k}(a*b*x_1, a*b^2*x_2, ...) == a^k * b^n * B_{n,k}(x_1, ...)."""
    a, b = Fraction(a), Fraction(b)
    width = n - k + 1
    scaled = [a * b**i * Fraction(xs[i - 1]) for i in range(1, width + 1)]
    return bell_poly_eval(n, k, scaled) == a**k * b**n * bell_poly_eval(n, k, xs)


def bell_poly_ones_is_stirling(n, k):
    """Check that B_{n,k} at all-ones arguments equals S(n, k) exactly."""
    value = bell_poly_eval(n, k, [1] * (n - k + 1))
    return value == stirling2_recurrence(n, k)


def faa_di_bruno_nth_derivative(f_derivs, h_derivs, n):
    """n-th derivative of a composition f(h(t)) at a point, by chain rule.

    f_derivs lists f^(1)..f^(n) evaluated at h(t0) and h_derivs lists
    h^(1)..h^(n) at t0.  Returns sum_{k=1..n} f^(k) * B_{n,k}(h', h'', ...)
    as an exact Fraction.
    """
    if n < 1:
        raise ValueError(f"derivative order must be >= 1, got {n}")
    if len(f_derivs) < n or len(h_derivs) < n:
        raise ValueError(f"need at least {n} derivatives of both f and h")
    hs = [Fraction(v) for v in h_derivs[:n]]
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction(f_derivs[k - 1]) * bell_poly_eval(n, k, hs[: n - k + 1])
    return total
