"""Exact integer tables: factorials, binomials, Stirling, Lah and Bell numbers.

Every value is an arbitrary-precision Python int; nothing here ever touches
floating point.  The same quantities are computed by independent routes
(closed forms, recurrences, triangle schemes, brute-force enumeration) so
that each route can serve as an oracle for the others.

Boundary conventions: S(0,0) = 1, S(n,0) = 0 for n >= 1, L(0,0) = 1,
B_0 = 1.  The row-sum identities then hold uniformly from n = 0.
"""

import math

STIRLING2 = "stirling2"
LAH = "lah"

BELL_METHODS = ("classic", "lah_stirling", "triangle", "enumerate")

# Brute-force enumeration is capped here: B_12 is ~4.2 million partitions,
# which keeps a full cross-check run in the low seconds.
ENUMERATION_CAP = 12


class CrossCheckError(ArithmeticError):
    """An internal exactness or cross-method assertion failed.

    This is never expected: it signals an arithmetic bug, not bad input.
    """


def factorial(n):
    """n! as an exact int; factorial(0) == 1."""
    if n < 0:
        raise ValueError(f"factorial requires n >= 0, got {n}")
    return math.factorial(n)


def binomial(n, k):
    """C(n, k) as an exact int; 0 whenever k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def stirling2_explicit(n, k):
    """S(n, k) from the alternating-sum closed form.

    Evaluates (1/k!) * sum_{i=0..k} (-1)^i C(k,i) (k-i)^n entirely in
    integers; the completed sum must be divisible by k! and the division
    is checked exactly.
    """
    if n < 1 or k < 1 or k > n:
        raise ValueError(f"stirling2_explicit requires 1 <= k <= n, got ({n}, {k})")
    total = 0
    for i in range(k + 1):
        term = binomial(k, i) * (k - i) ** n
        total += -term if i % 2 else term
    q, r = divmod(total, factorial(k))
    if r:
        raise CrossCheckError(
            f"alternating sum for S({n},{k}) is not divisible by {k}!"
        )
    return q


def lah(n, k):
    """L(n, k) = C(n-1, k-1) * n!/k!, the Lah closed form."""
    if n < 1 or k < 1 or k > n:
        raise ValueError(f"lah requires 1 <= k <= n, got ({n}, {k})")
    # n!/k! is the exact product (k+1)(k+2)...n
    q = 1
    for i in range(k + 1, n + 1):
        q *= i
    return binomial(n - 1, k - 1) * q


class TriangleTable:
    """Grow-on-demand lower-triangular memo table for S(n,k) or L(n,k).

    Row n holds the n entries k = 1..n; the conventional (0,0) = 1 entry
    is served by entry().  Growth materializes every row up to the request,
    row-major: rows are cheap next to big-int multiplication.  A completed
    table is safe to share across readers; growth itself is not synchronized.
    """

    def __init__(self, kind):
        if kind not in (STIRLING2, LAH):
            raise ValueError(f"unknown triangle kind {kind!r}")
        self.kind = kind
        self._rows = [[]]  # index n; row 0 stays empty, (0,0) handled in entry()
        self._row_sums = [1]  # sum over k = 1..n, with the n = 0 convention

    @property
    def max_row(self):
        return len(self._rows) - 1

    def grow(self, n):
        """Materialize all rows up to and including n."""
        while self.max_row < n:
            m = self.max_row + 1
            prev = self._rows[m - 1]
            row = []
            for k in range(1, m + 1):
                left = prev[k - 1] if k <= m - 1 else 0
                diag = prev[k - 2] if k >= 2 else (1 if m == 1 else 0)
                if self.kind == STIRLING2:
                    row.append(k * left + diag)
                else:
                    row.append((m - 1 + k) * left + diag)
            self._rows.append(row)
            self._row_sums.append(sum(row))

    def entry(self, n, k):
        """Table value at (n, k); 0 outside the triangle, conventions at k=0."""
        if n < 0:
            raise ValueError(f"row index must be >= 0, got {n}")
        if k < 0 or k > n:
            return 0
        if k == 0:
            return 1 if n == 0 else 0
        self.grow(n)
        return self._rows[n][k - 1]

    def row(self, n):
        """Entries k = 1..n of row n, as a fresh list."""
        if n < 1:
            raise ValueError(f"row requires n >= 1, got {n}")
        self.grow(n)
        return list(self._rows[n])

    def row_sum(self, n):
        """Sum over k = 1..n of row n (1 at n = 0 by convention), cached."""
        if n < 0:
            raise ValueError(f"row_sum requires n >= 0, got {n}")
        self.grow(n)
        return self._row_sums[n]


# Shared process-wide tables; the library's pure functions memoize into these.
_STIRLING2 = TriangleTable(STIRLING2)
_LAH = TriangleTable(LAH)


def stirling2_recurrence(n, k, table=None):
    """S(n, k) via the triangle recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1).

    Memoizes into `table` (the shared module table by default).  Defined on
    the closed domain 0 <= k <= n, matching the boundary conventions.
    """
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"stirling2_recurrence requires 0 <= k <= n, got ({n}, {k})")
    t = _STIRLING2 if table is None else table
    return t.entry(n, k)


def lah_row_sum(k, table=None):
    """Sum of the k-th Lah row, sum_{l=1..k} L(k, l)."""
    if k < 1:
        raise ValueError(f"lah_row_sum requires k >= 1, got {k}")
    t = _LAH if table is None else table
    return t.row_sum(k)


def bell_classic(n, table=None):
    """B_n as the Stirling row sum, sum_{k=1..n} S(n, k); B_0 = 1."""
    if n < 0:
        raise ValueError(f"bell_classic requires n >= 0, got {n}")
    t = _STIRLING2 if table is None else table
    return t.row_sum(n)


def bell_lah_stirling(n, stirling_table=None, lah_table=None):
    """B_n from the alternating Lah/Stirling formula.

    Computes sum_{k=1..n} (-1)^(n-k) * [sum_{l=1..k} L(k,l)] * S(n,k).
    Defined for n >= 1 only; callers wanting the n = 0 convention must map
    it themselves before dispatch.
    """
    if n < 1:
        raise ValueError(f"bell_lah_stirling requires n >= 1, got {n}")
    st = _STIRLING2 if stirling_table is None else stirling_table
    lt = _LAH if lah_table is None else lah_table
    st.grow(n)
    lt.grow(n)
    total = 0
    for k in range(1, n + 1):
        term = lt.row_sum(k) * st.entry(n, k)
        total += -term if (n - k) % 2 else term
    return total


def _peirce_next_row(row):
    # next row of the additive Bell triangle: starts with the previous
    # row's last entry, each entry adds its left neighbour and the one above
    nxt = [row[-1]]
    for v in row:
        nxt.append(nxt[-1] + v)
    return nxt


def bell_triangle(n):
    """B_n from the additive Bell (Peirce) triangle, an independent oracle."""
    if n < 0:
        raise ValueError(f"bell_triangle requires n >= 0, got {n}")
    if n == 0:
        return 1
    row = [1]
    for _ in range(n - 1):
        row = _peirce_next_row(row)
    return row[-1]


def restricted_growth_strings(n):
    """Yield every restricted growth string of length n as a tuple.

    A restricted growth string a_1..a_n has a_1 = 0 and each later letter
    at most one above the running maximum; these encode set partitions
    one-to-one, so there are exactly B_n of them.
    """
    if n < 0:
        raise ValueError(f"restricted_growth_strings requires n >= 0, got {n}")
    if n == 0:
        yield ()
        return
    a = [0] * n

    def rec(i, m):
        if i == n:
            yield tuple(a)
            return
        for v in range(m + 2):
            a[i] = v
            yield from rec(i + 1, m if v <= m else v)

    yield from rec(1, 0)


def bell_enumeration_oracle(n):
    """B_n by brute-force count of restricted growth strings.

    Ground truth by direct enumeration; capped at n <= 12 so a full run
    stays in the low seconds.
    """
    if n < 0 or n > ENUMERATION_CAP:
        raise ValueError(
            f"bell_enumeration_oracle requires 0 <= n <= {ENUMERATION_CAP}, got {n}"
        )
    if n == 0:
        return 1

    # counting recursion (deliberately unmemoized: every string is visited)
    def count(i, m):
        if i == n:
            return 1
        total = 0
        for v in range(m + 2):
            total += count(i + 1, m if v <= m else v)
        return total

    return count(1, 0)


def _poly_mul_linear(coeffs, c):
    # multiply a dense int polynomial by (x + c)
    out = [0] * (len(coeffs) + 1)
    for i, a in enumerate(coeffs):
        out[i + 1] += a
        out[i] += c * a
    return out


def rising_factorial_coeffs(n):
    """Coefficients of x(x+1)...(x+n-1), lowest power first."""
    coeffs = [1]
    for i in range(n):
        coeffs = _poly_mul_linear(coeffs, i)
    return coeffs


def falling_factorial_coeffs(n):
    """Coefficients of x(x-1)...(x-n+1), lowest power first."""
    coeffs = [1]
    for i in range(n):
        coeffs = _poly_mul_linear(coeffs, -i)
    return coeffs


def lah_connection_check(n):
    """Check that Lah numbers expand rising factorials in the falling basis.

    Expands (x)_n = x(x+1)...(x+n-1) and sum_{k=1..n} L(n,k) <x>_k as exact
    integer-coefficient polynomials and compares them coefficient-wise.
    """
    if n < 1:
        raise ValueError(f"lah_connection_check requires n >= 1, got {n}")
    rising = rising_factorial_coeffs(n)
    combo = [0] * (n + 1)
    for k in range(1, n + 1):
        lnk = lah(n, k)
        for i, a in enumerate(falling_factorial_coeffs(k)):
            combo[i] += lnk * a
    return rising == combo


class BellCalculator:
    """One Bell-number method with its own fresh memo state.

    Built for batch evaluation (and honest benchmarking): each instance
    owns its tables, so repeated calls across increasing n reuse rows and
    Lah row sums without touching the shared module-level caches.
    """

    def __init__(self, method):
        if method not in BELL_METHODS:
            raise ValueError(f"unknown Bell method {method!r}")
        self.method = method
        if method == "classic":
            self._stirling = TriangleTable(STIRLING2)
        elif method == "lah_stirling":
            self._stirling = TriangleTable(STIRLING2)
            self._lah = TriangleTable(LAH)
        elif method == "triangle":
            self._rows = [[1]]  # Peirce triangle rows, row index n-1

    def __call__(self, n):
        if self.method == "classic":
            return bell_classic(n, table=self._stirling)
        if self.method == "lah_stirling":
            return bell_lah_stirling(n, self._stirling, self._lah)
        if self.method == "enumerate":
            return bell_enumeration_oracle(n)
        # triangle: extend incrementally, B_n is the last entry of row n
        if n < 0:
            raise ValueError(f"bell triangle requires n >= 0, got {n}")
        if n == 0:
            return 1
        while len(self._rows) < n:
            self._rows.append(_peirce_next_row(self._rows[-1]))
        return self._rows[n - 1][-1]
