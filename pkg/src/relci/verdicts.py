"""Decision procedures built on top of the invariant formulas.

Each verdict bundles a conclusion with the hypothesis flags that gate
it and the exact witnesses behind it.  No conclusion other than
"Undetermined" / "NoConclusion" is ever reported with a failed
hypothesis flag; the constructor enforces this.

The asymptotic verdict deserves a health warning.  The classical rule
it implements reads the eventual sign of the twist margins off the sign
of the alpha invariant.  For balanced data and for hypersurfaces this
is provably exact, but for unbalanced data in codimension two or more
it can fail: the candidate top coefficient of the stable margin
polynomial cancels identically, and the surviving leading coefficient

    fibre_deg * (alpha * (k_sum - r)
                 + dim X * fibre_deg * (k_sum * d - r * y_sum))
        / (2 * r * (dim X - 1)!)

mixes alpha with a second slope comparison.  The verdict therefore
always carries the exact stable polynomial data among its witnesses,
and ``h_sweep`` computes the true eventual sign from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from .bundles import BundleOverCurve
from .errors import HypothesisError, InputError, InternalCheckError
from .exact import RatPoly, interpolate
from .invariants import (
    PositivityReport,
    RelativeCI,
    alpha_invariant,
    balanced_margin,
    canonical_margin,
    canonical_top_power,
    positivity_margin,
)

__all__ = [
    "VerdictReport",
    "SweepResult",
    "Orientation",
    "small_h_verdict",
    "asymptotic_verdict",
    "slope_verdict",
    "instability_verdict",
    "build_example",
    "h_sweep",
    "stable_margin_poly",
]

_NO_CONCLUSION = ("Undetermined", "NoConclusion")


@dataclass(frozen=True)
class VerdictReport:
    """A theorem-level conclusion with its gates and exact witnesses."""

    theorem: str
    hypotheses: tuple[tuple[str, bool], ...]
    conclusion: str
    witnesses: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if any(not ok for _, ok in self.hypotheses) and self.conclusion not in _NO_CONCLUSION:
            raise InternalCheckError(
                f"verdict {self.theorem!r} concluded {self.conclusion!r} "
                f"with a failed hypothesis"
            )

    @property
    def hypotheses_ok(self) -> bool:
        return all(ok for _, ok in self.hypotheses)


def small_h_verdict(X: RelativeCI) -> VerdictReport:
    """Positivity of O_X(h) throughout the band 1 <= h < min(k).

    In this band only the empty subset survives the Koszul sums and the
    cleared margin collapses to

        h^(dim X - 1) * (h / r) * binom(h + r - 1, r - 1) * alpha,

    so the verdict is equivalent to alpha >= 0, equivalently to
    sum_i y_i/k_i <= c * mu(E).  All three readings are computed
    independently and must agree.
    """
    a = alpha_invariant(X)
    c_mu = X.codim * X.bundle.slope
    margins = {h: positivity_margin(X, h).e_cleared for h in range(1, min(X.k))}
    by_alpha = a >= 0
    by_ratio = X.ratio_sum <= c_mu
    by_margins = all(m >= 0 for m in margins.values())
    if not by_alpha == by_ratio == by_margins:
        raise InternalCheckError(
            f"small-twist equivalence broke on {X!r}: "
            f"alpha {a}, ratio {X.ratio_sum} vs {c_mu}, margins {margins}"
        )
    return VerdictReport(
        theorem="SmallH",
        hypotheses=(),
        conclusion="FPositiveAllSmallH" if by_alpha else "NotFPositiveSmallH",
        witnesses={
            "alpha": a,
            "c_mu": c_mu,
            "ratio_sum": X.ratio_sum,
            "margins": margins,
        },
    )


def stable_margin_poly(X: RelativeCI) -> RatPoly:
    """Exact polynomial giving margin(h) / h^(dim X - 1) for large h.

    For h >= k_sum - r + 1 every truncated binomial agrees with its
    polynomial extension, so sampling the normalised margin at the
    dim X + 2 integers starting at k_sum recovers the polynomial
    exactly.  Its degree is at most dim X - 1: the degree-(dim X)
    coefficient cancels identically between the rank and degree parts.
    """
    n = X.dim
    samples = []
    for h in range(X.k_sum, X.k_sum + n + 2):
        rep = positivity_margin(X, h)
        samples.append((h, Fraction(rep.e_cleared, h ** (n - 1))))
    return interpolate(samples)


def asymptotic_verdict(X: RelativeCI) -> VerdictReport:
    """Eventual positivity of O_X(h) as read off the alpha invariant.

    Strictly positive alpha is reported as eventually strictly
    positive, negative alpha as eventually failing, zero alpha as a
    boundary case whose next coefficient (degree dim X - 1 of the
    stable polynomial) is reported without any label.  The witnesses
    always include the exact stable polynomial degree, leading
    coefficient and true eventual sign; for unbalanced data these can
    contradict the alpha-based label (see the module docstring).
    """
    a = alpha_invariant(X)
    poly = stable_margin_poly(X)
    lead = poly.leading
    if a > 0:
        conclusion = "StrictlyFPositiveEventually"
    elif a < 0:
        conclusion = "NotFPositiveEventually"
    else:
        conclusion = "Boundary"
    return VerdictReport(
        theorem="Asymptotic",
        hypotheses=(),
        conclusion=conclusion,
        witnesses={
            "alpha": a,
            "stable_poly_degree": poly.degree,
            "stable_leading_coeff": lead,
            "next_coeff": poly.coefficient(X.dim - 1),
            "exact_eventual_sign": (lead > 0) - (lead < 0),
        },
    )


def slope_verdict(X: RelativeCI) -> VerdictReport:
    """Slope inequality for balanced data with ample relative canonical class.

    Under the gates (balanced, k > 1, c*k > r) three predicates agree
    on every instance: nonnegative canonical top power, nonnegative
    canonical margin, and mu(E) >= y_sum / (c*k).  They are evaluated
    independently and must coincide.
    """
    r, c = X.rank, X.codim
    gates = (
        ("balanced", X.balanced),
        ("degree_above_one", min(X.k) > 1),
        ("canonical_relatively_ample", X.balanced and c * X.k[0] > r),
    )
    if not all(ok for _, ok in gates):
        return VerdictReport(
            theorem="Slope",
            hypotheses=gates,
            conclusion="Undetermined",
            witnesses={"failed": tuple(name for name, ok in gates if not ok)},
        )
    k = X.k[0]
    kf = canonical_top_power(X)
    margin = canonical_margin(X)
    crit = X.bundle.slope >= Fraction(X.y_sum, c * k)
    if not (kf >= 0) == (margin.e_cleared >= 0) == crit:
        raise InternalCheckError(
            f"slope equivalence broke on {X!r}: kf_top {kf}, "
            f"margin {margin.e_cleared}, criterion {crit}"
        )
    return VerdictReport(
        theorem="Slope",
        hypotheses=gates,
        conclusion="SlopeHolds" if crit else "SlopeFails",
        witnesses={
            "kf_top": kf,
            "margin": margin.e_cleared,
            "mu": X.bundle.slope,
            "ratio": Fraction(X.y_sum, c * k),
        },
    )


def instability_verdict(X: RelativeCI) -> VerdictReport:
    """One-directional instability condition for the fibres.

    When sum_i y_i/k_i strictly exceeds c * mu(E) (the class of X lies
    strictly outside the bridge cone), the fibres are Chow unstable in
    the small-twist band and asymptotically; balanced data with
    c*k > r are additionally unstable with respect to the dualizing
    sheaf.  When the excess fails there is no conclusion either way.
    """
    c_mu = X.codim * X.bundle.slope
    excess = X.ratio_sum > c_mu
    witnesses: dict[str, Any] = {"ratio_sum": X.ratio_sum, "c_mu": c_mu}
    if not excess:
        return VerdictReport(
            theorem="Instability",
            hypotheses=(("ratio_exceeds_bridge", False),),
            conclusion="NoConclusion",
            witnesses=witnesses,
        )
    dualizing = X.balanced and X.codim * X.k[0] > X.rank
    witnesses["unstable_small_h"] = True
    witnesses["unstable_large_h"] = True
    witnesses["unstable_dualizing"] = dualizing
    return VerdictReport(
        theorem="Instability",
        hypotheses=(("ratio_exceeds_bridge", True),),
        conclusion="ChowUnstableFibres",
        witnesses=witnesses,
    )


class Orientation(str, Enum):
    """Which of the two degree/twist readings of the example family to build."""

    AS_WRITTEN = "as-written"
    SWAPPED = "swapped"


def build_example(
    a: int, r: int, c: int, m: int, orientation: Orientation | str
) -> tuple[BundleOverCurve, RelativeCI, VerdictReport]:
    """Candidate unstable family over a genus-0 base, with validation.

    The bundle is O(a)^(r-1) + O(a-1), of degree r*a - 1, whose two
    Harder-Narasimhan slopes are a and a - 1.  The c hypersurfaces all
    sit in |k*H - y*S| with (k, y) = (m*(r*a - 1), m*(r + 1)) as
    written, or the swapped reading.  Three conditions are then checked
    exactly: effectivity (y/k at most the top slope), base locus
    (y/k above the second slope, forcing the singular section) and the
    instability excess (sum y_i/k_i above c*mu).  Neither orientation
    satisfies all three at once; the report carries the diagnosis and
    concludes only if every condition holds.
    """
    if a < 1 or m < 1:
        raise InputError("family parameters a and m must be >= 1")
    if r < 3:
        raise InputError("family needs rank >= 3")
    if not 1 <= c <= r - 2:
        raise InputError(f"codimension {c} out of range 1..{r - 2}")
    orientation = Orientation(orientation)
    bundle = BundleOverCurve(
        rank=r,
        degree=r * a - 1,
        base_genus=0,
        hn=((r - 1, a * (r - 1)), (1, a - 1)),
    )
    big, small = m * (r * a - 1), m * (r + 1)
    k, y = (big, small) if orientation is Orientation.AS_WRITTEN else (small, big)
    X = RelativeCI(bundle, (k,) * c, (y,) * c)
    ratio = Fraction(y, k)
    mu1 = Fraction(a)
    mu2 = Fraction(a - 1)
    checks = (
        ("effective", ratio <= mu1),
        ("base_locus_on_section", ratio > mu2),
        ("instability_excess", X.ratio_sum > c * bundle.slope),
    )
    report = VerdictReport(
        theorem="ExampleFamily",
        hypotheses=checks,
        conclusion="UnstableFamily" if all(ok for _, ok in checks) else "Undetermined",
        witnesses={
            "k": k,
            "y": y,
            "ratio": ratio,
            "mu": bundle.slope,
            "mu_first": mu1,
            "mu_second": mu2,
            "orientation": orientation.value,
        },
    )
    return bundle, X, report


@dataclass(frozen=True)
class SweepResult:
    """Margins over a twist range plus exact stabilisation data."""

    reports: tuple[PositivityReport, ...]
    stable_poly: RatPoly
    sign_stable_from: int
    eventual_sign: int


def h_sweep(X: RelativeCI, h_max: int) -> SweepResult:
    """Margins for h = 1..h_max and the exact eventual behaviour.

    The stable polynomial is the normalised margin for large h
    (see ``stable_margin_poly``); beyond ``sign_stable_from`` (the
    larger of k_sum and a root bound on that polynomial) the sign of
    every margin equals ``eventual_sign``.
    """
    if h_max < 1:
        raise InputError(f"h_max must be >= 1, got {h_max}")
    reports = tuple(positivity_margin(X, h) for h in range(1, h_max + 1))
    poly = stable_margin_poly(X)
    lead = poly.leading
    return SweepResult(
        reports=reports,
        stable_poly=poly,
        sign_stable_from=max(X.k_sum, poly.sign_stable_from()),
        eventual_sign=(lead > 0) - (lead < 0),
    )
