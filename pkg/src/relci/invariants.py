"""Numerical invariants of relative complete intersections.

The object of study is X, the intersection of c relative hypersurfaces
inside the projective bundle P of a rank-r degree-d bundle E over a
curve, the i-th hypersurface living in the linear system
|k_i * H - y_i * S| with k_i >= 2 (H the tautological divisor, S a
fibre).  The induced fibration f: X -> B has (r-c-1)-dimensional fibres
F, themselves complete intersections of multidegree (k_1, ..., k_c) in
projective (r-1)-space.

Everything here is an exact integer or rational identity in the data
(r, d, k, y, h):

* top self-intersection of the tautological class on X and on F;
* rank and degree of the pushforward of O_X(h), via the alternating
  Koszul sums over index subsets (the degree formula carries a global
  /r that always cancels; this is asserted on every call);
* the positivity margin of O_X(h): the inequality

      h^(r-c) * H_X^(r-c) * rank - (r-c) * h^(r-c-1) * H_F^(r-c-1) * deg  >=  0

  expresses that O_X(h) spreads at least as positively as its fibre
  restriction demands.  Margins are reported in this cleared integer
  form; the rational normalised value (divided by the rank) is derived
  from it, so sign questions never touch a division;
* the alpha invariant  c * prod(k) * d - r * sum_i (prod(k)/k_i) * y_i,
  a positive multiple of  c*mu(E) - sum_i y_i/k_i, whose sign settles
  the small-twist margins outright;
* the relative canonical class (k_J - r) * H_X - (y_J - d) * F, its top
  power, and the margin of the corresponding slope inequality, computed
  both directly and through the twist-invariance of margins (the two
  cleared values agree exactly, and this is asserted);
* closed forms special to balanced data (all k_i equal), including the
  surface case c = r - 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

from .bundles import BundleOverCurve, CycleClass
from .errors import HypothesisError, InputError, InternalCheckError
from .exact import Rat, binom_trunc, signed_subset_tables

__all__ = [
    "RelativeCI",
    "PushforwardSummary",
    "PositivityReport",
    "CanonicalClass",
    "SurfaceFormulaReport",
    "h_top",
    "fibre_deg",
    "pushforward_rank",
    "pushforward_degree",
    "pushforward",
    "alpha_invariant",
    "positivity_margin",
    "canonical_class",
    "canonical_top_power",
    "omega_pushforward",
    "canonical_margin",
    "balanced_margin",
    "surface_formula_check",
    "ci_class",
    "effectivity_violations",
]


@dataclass(frozen=True)
class RelativeCI:
    """A codimension-c complete intersection in the projective bundle of E.

    ``k[i]`` is the tautological degree of the i-th hypersurface and
    ``y[i]`` the degree of its base-curve twist.  Requires
    1 <= c <= rank - 2 (so the fibres have positive dimension) and
    every k[i] >= 2.
    """

    bundle: BundleOverCurve
    k: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", tuple(int(v) for v in self.k))
        object.__setattr__(self, "y", tuple(int(v) for v in self.y))
        if len(self.k) != len(self.y):
            raise InputError("k and y must have the same length")
        c = len(self.k)
        if not 1 <= c <= self.bundle.rank - 2:
            raise InputError(
                f"codimension {c} out of range 1..{self.bundle.rank - 2} "
                f"for rank {self.bundle.rank}"
            )
        if any(ki < 2 for ki in self.k):
            raise InputError("every hypersurface degree k_i must be >= 2")

    @property
    def codim(self) -> int:
        return len(self.k)

    @property
    def rank(self) -> int:
        return self.bundle.rank

    @property
    def degree(self) -> int:
        return self.bundle.degree

    @property
    def dim(self) -> int:
        """Dimension of X (fibre dimension plus one)."""
        return self.rank - self.codim

    @property
    def k_sum(self) -> int:
        return sum(self.k)

    @property
    def y_sum(self) -> int:
        return sum(self.y)

    @property
    def k_prod(self) -> int:
        return prod(self.k)

    @property
    def balanced(self) -> bool:
        return len(set(self.k)) == 1

    @property
    def ratio_sum(self) -> Fraction:
        """sum_i y_i / k_i, the quantity compared against c * mu(E)."""
        return sum((Fraction(yi, ki) for ki, yi in zip(self.k, self.y)), Fraction(0))

    def k_of(self, subset: tuple[int, ...]) -> int:
        """Sum of k over a 1-based index subset (0 for the empty set)."""
        return sum(self.k[i - 1] for i in subset)

    def y_of(self, subset: tuple[int, ...]) -> int:
        return sum(self.y[i - 1] for i in subset)


@lru_cache(maxsize=None)
def _tables(X: RelativeCI) -> tuple[tuple[int, ...], tuple[int, ...]]:
    cnt, val = signed_subset_tables(X.k, X.y)
    return tuple(cnt), tuple(val)


@dataclass(frozen=True)
class PushforwardSummary:
    """Rank and degree of the pushforward of O_X(h) along f."""

    h: int
    rank: int
    degree: int


@dataclass(frozen=True)
class PositivityReport:
    """Positivity margin of O_X(h), cleared and normalised forms.

    ``e_cleared`` is the integer margin (rank times the normalised
    value); ``e_rational`` is the normalised value itself, undefined
    (None) when the rank vanishes.  ``sign`` is -1, 0 or 1 and always
    agrees with both forms.
    """

    h: int
    e_cleared: int
    e_rational: Fraction | None
    sign: int


def h_top(X: RelativeCI) -> int:
    """Top self-intersection of the tautological class on X.

    Expanding the product of the c hypersurface classes against the
    relations S*S = 0, H^r = d, H^(r-1)*S = 1 leaves
    prod(k) * d - sum_i (prod(k)/k_i) * y_i.
    """
    p = X.k_prod
    return p * X.degree - sum((p // ki) * yi for ki, yi in zip(X.k, X.y))


def fibre_deg(X: RelativeCI) -> int:
    """Degree of a fibre of f in its projective space: prod(k)."""
    return X.k_prod


def pushforward_rank(X: RelativeCI, h: int) -> int:
    """Rank of the pushforward of O_X(h); equals h^0 of O_F(h) on a fibre.

    Alternating sum of binom(h - k_I + r - 1, r - 1) over index subsets
    I, with the truncated-binomial convention killing over-twisted
    terms.  Subsets are aggregated by their k-sum, so balanced data
    collapses to binomial weights automatically.
    """
    if h < 0:
        raise InputError(f"twist h must be >= 0, got {h}")
    r = X.rank
    cnt, _ = _tables(X)
    return sum(
        c * binom_trunc(h - s + r - 1, r - 1) for s, c in enumerate(cnt) if c
    )


def pushforward_degree(X: RelativeCI, h: int) -> int:
    """Degree of the pushforward of O_X(h).

    Same alternating Koszul sum with each term weighted by
    ((h - k_I) * d + y_I * r) / r.  The global /r always cancels in the
    total; a non-integral result would mean a transcribed-formula bug
    and aborts hard.
    """
    if h < 0:
        raise InputError(f"twist h must be >= 0, got {h}")
    r, d = X.rank, X.degree
    cnt, val = _tables(X)
    num = 0
    for s, (c, v) in enumerate(zip(cnt, val)):
        if c or v:
            b = binom_trunc(h - s + r - 1, r - 1)
            if b:
                num += b * (c * (h - s) * d + v * r)
    if num % r:
        raise InternalCheckError(
            f"pushforward degree not integral: {num}/{r} for {X!r}, h={h}"
        )
    return num // r


def pushforward(X: RelativeCI, h: int) -> PushforwardSummary:
    return PushforwardSummary(h, pushforward_rank(X, h), pushforward_degree(X, h))


def alpha_invariant(X: RelativeCI) -> int:
    """c * prod(k) * d - r * sum_i (prod(k)/k_i) * y_i.

    Equal to r * prod(k) * (c*mu(E) - sum_i y_i/k_i), so its sign is
    exactly the sign of that slope comparison.  For balanced data it
    factors as k^(c-1) * (c*d*k - r*y_sum).
    """
    p = X.k_prod
    twist = sum((p // ki) * yi for ki, yi in zip(X.k, X.y))
    return X.codim * p * X.degree - X.rank * twist


def positivity_margin(X: RelativeCI, h: int) -> PositivityReport:
    """Margin of the positivity inequality for O_X(h), h >= 1.

    Cleared form:  h^n * h_top * rank - n * h^(n-1) * fibre_deg * deg
    with n = dim X.  The rational form divides by the rank and is left
    undefined when the rank is zero (which does not occur for h >= 1 on
    valid data, but the contract is kept defensive).
    """
    if h < 1:
        raise InputError(f"positivity margin needs h >= 1, got {h}")
    n = X.dim
    rank = pushforward_rank(X, h)
    deg = pushforward_degree(X, h)
    cleared = h**n * h_top(X) * rank - n * h ** (n - 1) * fibre_deg(X) * deg
    rational = Fraction(cleared, rank) if rank > 0 else None
    sign = (cleared > 0) - (cleared < 0)
    return PositivityReport(h, cleared, rational, sign)


@dataclass(frozen=True)
class CanonicalClass:
    """Relative canonical class K_f = h_coeff * H_X - fibre_coeff * F."""

    h_coeff: int
    fibre_coeff: int

    @property
    def general_type_fibres(self) -> bool:
        """True when the canonical class is relatively (very) ample."""
        return self.h_coeff > 0


def canonical_class(X: RelativeCI) -> CanonicalClass:
    """Coefficients (k_sum - r, y_sum - d) of the relative canonical class."""
    return CanonicalClass(X.k_sum - X.rank, X.y_sum - X.degree)


def canonical_top_power(X: RelativeCI) -> int:
    """Top self-intersection of K_f, expanded against F*F = 0.

    (a*H_X - b*F)^n = a^n * h_top - n * a^(n-1) * b * fibre_deg with
    (a, b) the canonical coefficients and n = dim X.
    """
    n = X.dim
    kc = canonical_class(X)
    return (
        kc.h_coeff**n * h_top(X)
        - n * kc.h_coeff ** (n - 1) * kc.fibre_coeff * fibre_deg(X)
    )


def _require_ample_canonical(X: RelativeCI) -> int:
    h0 = X.k_sum - X.rank
    if h0 <= 0:
        raise HypothesisError(
            f"relative canonical class is not ample in the needed sense: "
            f"k_sum = {X.k_sum} <= rank = {X.rank}"
        )
    return h0


def omega_pushforward(X: RelativeCI) -> PushforwardSummary:
    """Rank and degree of the pushforward of the relative dualizing sheaf.

    The canonical class differs from (k_sum - r) * H_X by a pullback
    from the base, so the rank is the plain pushforward rank at
    h = k_sum - r (the geometric genus of a fibre) and the degree picks
    up -(y_sum - d) times that rank.  Needs k_sum > r.
    """
    h0 = _require_ample_canonical(X)
    rank = pushforward_rank(X, h0)
    degree = pushforward_degree(X, h0) - (X.y_sum - X.degree) * rank
    return PushforwardSummary(h0, rank, degree)


def canonical_margin(X: RelativeCI) -> PositivityReport:
    """Margin of the slope inequality for the relative canonical class.

    Computed twice: directly from K_f (top power, fibre restriction
    power, pushforward of the dualizing sheaf) and as the plain margin
    of O_X(k_sum - r).  Margins are invariant under twisting by
    pullbacks from the base, so the two cleared values agree exactly;
    any difference aborts hard.  Needs k_sum > r.
    """
    h0 = _require_ample_canonical(X)
    n = X.dim
    report = positivity_margin(X, h0)
    omega = omega_pushforward(X)
    kf_fibre_power = h0 ** (n - 1) * fibre_deg(X)
    direct = canonical_top_power(X) * omega.rank - n * kf_fibre_power * omega.degree
    if direct != report.e_cleared:
        raise InternalCheckError(
            f"canonical margin mismatch: direct {direct} vs twisted "
            f"{report.e_cleared} for {X!r}"
        )
    return report


def balanced_margin(X: RelativeCI, h: int) -> int:
    """Closed-form margin for balanced data, cleared by a factor r.

    For k_i = k the subset sums collapse and the margin divided by
    h^(n-1) factors through the alpha invariant:

        r * margin(h) / h^(n-1)
            = alpha * [ h * R_c(h) - n * k * R_{c-1}(h - k) ]

    where R_j(m) = sum_i (-1)^i binom(j, i) binom(m - i*k + r - 1, r - 1)
    is the pushforward rank of a balanced intersection of j hypersurfaces
    and n = dim X.  The second sum is the one-fewer-hypersurface rank
    shifted one degree down; for h < k it vanishes and the bracket
    degenerates to the universal small-twist form h * binom(h+r-1, r-1).
    Returns the exact integer value of the right-hand side.
    """
    if not X.balanced:
        raise InputError("balanced_margin needs all k_i equal")
    if h < 1:
        raise InputError(f"balanced_margin needs h >= 1, got {h}")
    r, c, n = X.rank, X.codim, X.dim
    k = X.k[0]
    first = sum(
        (-1) ** i * binom_trunc(c, i) * binom_trunc(h - i * k + r - 1, r - 1)
        for i in range(c + 1)
    )
    second = sum(
        (-1) ** j * binom_trunc(c - 1, j) * binom_trunc(h - (j + 1) * k + r - 1, r - 1)
        for j in range(c)
    )
    return alpha_invariant(X) * (h * first - n * k * second)


@dataclass(frozen=True)
class SurfaceFormulaReport:
    """Closed surface formulas (c = r - 2, balanced) versus direct values.

    ``kf2_formula`` and ``deg_omega_formula`` are the closed forms in
    the reduced invariant c*d*k - r*y_sum; the match flags compare them
    with the independently computed canonical top power and dualizing
    pushforward degree, and ``ratio_holds`` checks the degree-free
    proportionality between the two.
    """

    kf2_formula: int
    deg_omega_formula: Rat
    ratio_holds: bool
    matches_top_power: bool
    matches_pushforward: bool


def surface_formula_check(X: RelativeCI) -> SurfaceFormulaReport:
    """Evaluate the closed surface formulas and compare with direct values.

    Hypotheses: balanced, c = r - 2 (so X is a surface fibration) and
    c*k > r.  With a' = c*d*k - r*y_sum:

        K_f^2          = ((r-2)*k - r) * (k-1) * k^(r-3) * a'
        deg f_* omega  = ((3r-5)*k - 3r + 1) * (k-1) * k^(r-3) * a' / 24

    and the ratio identity
        K_f^2 * ((3r-5)*k - 3r + 1) = 24 * ((r-2)*k - r) * deg f_* omega.
    """
    r, c = X.rank, X.codim
    if not X.balanced:
        raise HypothesisError("surface formulas need balanced degrees")
    if c != r - 2:
        raise HypothesisError(f"surface formulas need codim = rank - 2, got {c}")
    k = X.k[0]
    if c * k <= r:
        raise HypothesisError(f"surface formulas need c*k > r, got {c * k} <= {r}")
    a_red = c * X.degree * k - r * X.y_sum
    kf2 = ((r - 2) * k - r) * (k - 1) * k ** (r - 3) * a_red
    deg_omega = Fraction(((3 * r - 5) * k - 3 * r + 1) * (k - 1) * k ** (r - 3) * a_red, 24)
    direct_kf2 = canonical_top_power(X)
    direct_deg = omega_pushforward(X).degree
    ratio = kf2 * ((3 * r - 5) * k - 3 * r + 1) == 24 * ((r - 2) * k - r) * direct_deg
    return SurfaceFormulaReport(
        kf2_formula=kf2,
        deg_omega_formula=deg_omega,
        ratio_holds=ratio,
        matches_top_power=kf2 == direct_kf2,
        matches_pushforward=deg_omega == direct_deg,
    )


def ci_class(X: RelativeCI) -> CycleClass:
    """Numerical class of X in the codim-c cycle plane.

    Expanding prod_i (k_i * H - y_i * S) with S*S = 0 gives
    p = prod(k) and q = -sum_i (prod(k)/k_i) * y_i.
    """
    p = X.k_prod
    q = -sum((p // ki) * yi for ki, yi in zip(X.k, X.y))
    return CycleClass(X.codim, p, q)


def effectivity_violations(X: RelativeCI) -> tuple[int, ...]:
    """Indices i (1-based) whose hypersurface class cannot be effective.

    A class k*H - y*S moves in a nonempty linear system only if y/k is
    at most the top Harder-Narasimhan slope; offending indices mean no
    such complete intersection exists geometrically.  Empty when the
    bundle carries no Harder-Narasimhan profile (nothing to check).
    """
    if not X.bundle.has_hn:
        return ()
    mu1 = X.bundle.mu_first
    return tuple(
        i + 1
        for i, (ki, yi) in enumerate(zip(X.k, X.y))
        if Fraction(yi, ki) > mu1
    )
