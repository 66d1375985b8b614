"""Exact combinatorial and polynomial kernel.

Everything downstream reduces to four ingredients, all computed over
arbitrary-precision integers and ``fractions.Fraction`` (aliased ``Rat``):

* truncated binomial coefficients, with the convention ``C(n, m) = 0``
  whenever ``n < m`` (including every negative ``n``);
* streamed enumeration of index subsets of ``{1, ..., c}``;
* signed subset-sum tables, the workhorse behind alternating sums over
  all ``2^c`` subsets without materialising them;
* exact univariate polynomials with rational coefficients, plus Newton
  interpolation.

No floating point is used anywhere in the computation path.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import ceil, comb
from typing import Iterable, Iterator, Sequence

from .errors import InputError

# All rational quantities in the package are stdlib Fractions: exact,
# always stored reduced, with positive denominator.
Rat = Fraction

__all__ = [
    "Rat",
    "binom_trunc",
    "subsets_of_size",
    "signed_subset_tables",
    "RatPoly",
    "interpolate",
]


def binom_trunc(n: int, m: int) -> int:
    """Binomial coefficient C(n, m), truncated to 0 when n < m.

    The truncation (rather than the analytic continuation to negative
    upper index) is what makes the alternating Koszul sums correct
    verbatim: terms whose twist pushes the argument negative must drop
    out entirely.

    >>> binom_trunc(5, 2)
    10
    >>> binom_trunc(1, 3)
    0
    >>> binom_trunc(-2, 4)
    0
    """
    if m < 0:
        raise InputError(f"binom_trunc: lower index must be >= 0, got {m}")
    if n < m:
        return 0
    return comb(n, m)


def subsets_of_size(c: int, size: int) -> Iterator[tuple[int, ...]]:
    """Yield the subsets of {1, ..., c} with ``size`` elements.

    Subsets come out as strictly increasing index tuples, in
    lexicographic order, each exactly once: C(c, size) of them in total.
    """
    if c < 1:
        raise InputError(f"subsets_of_size: ground set size must be >= 1, got {c}")
    if not 0 <= size <= c:
        raise InputError(f"subsets_of_size: size {size} out of range 0..{c}")
    return combinations(range(1, c + 1), size)


def signed_subset_tables(
    weights: Sequence[int], values: Sequence[int]
) -> tuple[list[int], list[int]]:
    """Aggregate (-1)^|I| over subsets I, grouped by the weight sum.

    Returns two lists ``cnt`` and ``val`` indexed by ``s = 0 .. sum(weights)``:

    * ``cnt[s] = sum over subsets I with weight(I) = s of (-1)^|I|``
    * ``val[s] = sum over the same subsets of (-1)^|I| * value(I)``

    where ``weight(I)`` and ``value(I)`` are the coordinate sums of the
    picked indices.  A knapsack-style pass makes alternating sums over
    2^c subsets cost O(c * sum(weights)), which keeps codimensions in
    the tens cheap; for equal weights it degenerates to the classical
    binomial grouping.  Weights must be positive.
    """
    if len(weights) != len(values):
        raise InputError("signed_subset_tables: weight/value length mismatch")
    if any(w <= 0 for w in weights):
        raise InputError("signed_subset_tables: weights must be positive")
    total = sum(weights)
    cnt = [0] * (total + 1)
    val = [0] * (total + 1)
    cnt[0] = 1
    used = 0
    for w, v in zip(weights, values):
        # descending s: cnt[s]/val[s] still refer to subsets of the items
        # already processed, so each item enters a subset at most once
        for s in range(used, -1, -1):
            if cnt[s] or val[s]:
                cnt[s + w] -= cnt[s]
                val[s + w] -= val[s] + v * cnt[s]
        used += w
    return cnt, val


class RatPoly:
    """Univariate polynomial with exact rational coefficients.

    Coefficients are indexed by power of the variable; trailing zeros
    are trimmed on construction, so the zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rat | int]) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __call__(self, x: Rat | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({list(self.coeffs)!r})"

    def sign_stable_from(self) -> int:
        """Integer N such that the sign of self(x) is constant for x > N.

        Uses the Cauchy root bound 1 + max |a_i / a_lead|; any valid
        bound would do since all coefficients are exact.  Returns 0 for
        constant (including zero) polynomials.
        """
        if self.degree <= 0:
            return 0
        lead = self.coeffs[-1]
        bound = 1 + max(abs(c / lead) for c in self.coeffs[:-1])
        return ceil(bound)


def interpolate(samples: Sequence[tuple[Rat | int, Rat | int]]) -> RatPoly:
    """Exact polynomial through the given (x, y) samples.

    Newton's divided differences over Fractions; the result is the
    unique polynomial of degree < len(samples) hitting every sample
    exactly.  Duplicate abscissae are rejected.
    """
    if not samples:
        raise InputError("interpolate: need at least one sample")
    xs = [Fraction(x) for x, _ in samples]
    ys = [Fraction(y) for _, y in samples]
    if len(set(xs)) != len(xs):
        raise InputError("interpolate: duplicate abscissae")
    n = len(xs)
    dd = ys[:]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    # expand the Newton form sum dd[j] * prod_{i<j} (x - xs[i])
    out = [Fraction(0)] * n
    basis = [Fraction(1)]
    for j in range(n):
        for i, b in enumerate(basis):
            out[i] += dd[j] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i] -= b * xs[j]
            nxt[i + 1] += b
        basis = nxt
    return RatPoly(out)
