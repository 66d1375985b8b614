"""Vector bundles over a curve and the cone structure of their cycle spaces.

A rank-r bundle E over a smooth curve determines a projective bundle P
whose codimension-c cycle space (modulo numerical equivalence) is
two-dimensional, spanned by H^c and H^(c-1)S, with H the tautological
divisor class and S a fibre of the projection.  Three nested cones live
in each of these planes:

    Nef^c  <=  B  <=  Pseff^c

where the outer two are cut out by partial sums of the *virtual slopes*
of E (the Harder-Narasimhan subquotient slopes, each repeated by its
block rank) and the middle cone B uses c times the ordinary slope
mu = deg/rank.  All three share the ray spanned by H^(c-1)S; the second
extremal ray of each is H^c - t * H^(c-1)S for a rational threshold t.

Virtual slopes are stored in non-increasing order, so that for c = 1 the
Pseff/Nef thresholds reproduce the classical pseudo-effectivity and
nefness bounds mu_1 and mu_last for divisors k*H - m*S.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import InputError
from .exact import Rat

__all__ = [
    "BundleOverCurve",
    "CycleClass",
    "ConeLabel",
    "ConeDescription",
    "Region",
    "DivisorPositivity",
    "virtual_slopes",
    "cone",
    "mn_divisor_test",
    "classify",
    "split_hn_blocks",
]


def split_hn_blocks(line_degrees: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Harder-Narasimhan blocks of a direct sum of line bundles.

    Equal degrees merge into one block; blocks are ordered by strictly
    decreasing degree (= slope, since every summand has rank one).
    """
    if not line_degrees:
        raise InputError("split bundle needs at least one summand")
    blocks: list[tuple[int, int]] = []
    for a in sorted(line_degrees, reverse=True):
        if blocks and Fraction(blocks[-1][1], blocks[-1][0]) == a:
            r, d = blocks[-1]
            blocks[-1] = (r + 1, d + a)
        else:
            blocks.append((1, a))
    return tuple(blocks)


@dataclass(frozen=True)
class BundleOverCurve:
    """Numerical data of a vector bundle E on a smooth projective curve.

    Only rank, degree and (optionally) the Harder-Narasimhan profile
    enter any formula; the base genus is carried along as metadata and
    echoed in reports.  ``hn`` lists the subquotient blocks as
    (rank, degree) pairs, top slope first; a semistable bundle is the
    single-block profile ``((rank, degree),)``.
    """

    rank: int
    degree: int
    base_genus: int = 0
    hn: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self) -> None:
        if self.rank < 2:
            raise InputError(f"bundle rank must be >= 2, got {self.rank}")
        if self.base_genus < 0:
            raise InputError("base genus must be >= 0")
        if self.hn is not None:
            hn = tuple((int(r), int(d)) for r, d in self.hn)
            object.__setattr__(self, "hn", hn)
            if any(r < 1 for r, _ in hn):
                raise InputError("hn block ranks must be >= 1")
            if sum(r for r, _ in hn) != self.rank:
                raise InputError("hn block ranks must sum to the bundle rank")
            if sum(d for _, d in hn) != self.degree:
                raise InputError("hn block degrees must sum to the bundle degree")
            slopes = [Fraction(d, r) for r, d in hn]
            if any(a <= b for a, b in zip(slopes, slopes[1:])):
                raise InputError("hn block slopes must be strictly decreasing")
            if not slopes[-1] <= self.slope <= slopes[0]:
                raise InputError("bundle slope must lie between extreme hn slopes")

    @classmethod
    def semistable(cls, rank: int, degree: int, base_genus: int = 0) -> "BundleOverCurve":
        return cls(rank, degree, base_genus, hn=((rank, degree),))

    @classmethod
    def split(cls, line_degrees: Sequence[int], base_genus: int = 0) -> "BundleOverCurve":
        degs = tuple(int(a) for a in line_degrees)
        return cls(len(degs), sum(degs), base_genus, hn=split_hn_blocks(degs))

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)

    @property
    def has_hn(self) -> bool:
        return self.hn is not None

    @property
    def is_semistable(self) -> bool:
        return self.hn is not None and len(self.hn) == 1

    @property
    def mu_first(self) -> Fraction:
        """Largest Harder-Narasimhan slope."""
        return virtual_slopes(self)[0]

    @property
    def mu_last(self) -> Fraction:
        """Smallest Harder-Narasimhan slope."""
        return virtual_slopes(self)[-1]


def virtual_slopes(bundle: BundleOverCurve) -> tuple[Fraction, ...]:
    """Slope multiset of the bundle: each block slope, repeated block-rank times.

    Sorted non-increasing; the sum always equals the bundle degree.
    Requires the Harder-Narasimhan profile.
    """
    if bundle.hn is None:
        raise InputError(
            "virtual slopes need the Harder-Narasimhan profile; "
            "provide hn (a semistable bundle is hn=[(rank, degree)])"
        )
    out: list[Fraction] = []
    for r, d in bundle.hn:
        out.extend([Fraction(d, r)] * r)
    return tuple(out)


@dataclass(frozen=True)
class CycleClass:
    """A codimension-c numerical class p*H^c + q*H^(c-1)S."""

    codim: int
    p: Rat
    q: Rat

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "q", Fraction(self.q))
        if self.codim < 1:
            raise InputError("cycle codimension must be >= 1")


class ConeLabel(str, Enum):
    NEF = "Nef"
    BRIDGE = "Bridge"
    PSEFF = "Pseff"


@dataclass(frozen=True)
class ConeDescription:
    """A two-dimensional cone <ray1, ray2> in the codim-c cycle plane.

    ray1 is always the common class H^(c-1)S; ray2 is H^c - t*H^(c-1)S
    with t the cone's threshold, kept separately for exact comparisons.
    """

    codim: int
    label: ConeLabel
    threshold: Fraction
    ray1: CycleClass = field(init=False)
    ray2: CycleClass = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "ray1", CycleClass(self.codim, 0, 1))
        object.__setattr__(self, "ray2", CycleClass(self.codim, 1, -self.threshold))


def cone(bundle: BundleOverCurve, c: int, label: ConeLabel) -> ConeDescription:
    """Extremal-ray description of the Nef / bridge / Pseff cone in codim c.

    Thresholds: the sum of the c smallest virtual slopes (Nef), c times
    the slope (bridge), the sum of the c largest virtual slopes (Pseff).
    The bridge cone needs only (rank, degree); the other two need the
    Harder-Narasimhan profile.
    """
    if not 1 <= c <= bundle.rank - 1:
        raise InputError(f"codimension {c} out of range 1..{bundle.rank - 1}")
    label = ConeLabel(label)
    if label is ConeLabel.BRIDGE:
        t = c * bundle.slope
    else:
        slopes = virtual_slopes(bundle)
        t = sum(slopes[:c], Fraction(0)) if label is ConeLabel.PSEFF else sum(
            slopes[-c:], Fraction(0)
        )
    return ConeDescription(c, label, t)


class DivisorPositivity(NamedTuple):
    pseff: bool
    nef: bool


def mn_divisor_test(bundle: BundleOverCurve, k: int, m: int) -> DivisorPositivity:
    """Positivity of the divisor class k*H - m*S on the projective bundle.

    Pseudo-effective iff m/k is at most the largest Harder-Narasimhan
    slope; nef iff m/k is at most the smallest.  Exact comparisons.
    """
    if k <= 0:
        raise InputError(f"divisor H-coefficient must be >= 1, got {k}")
    slopes = virtual_slopes(bundle)
    ratio = Fraction(m, k)
    return DivisorPositivity(pseff=ratio <= slopes[0], nef=ratio <= slopes[-1])


class Region(str, Enum):
    """Position of a class relative to the nested cones Nef <= B <= Pseff."""

    INSIDE_NEF = "InsideNef"
    NEF_BOUNDARY = "NefBoundary"
    INSIDE_BRIDGE_OUTSIDE_NEF = "InsideBridgeOutsideNef"
    BRIDGE_BOUNDARY = "BridgeBoundary"
    INSIDE_PSEFF_OUTSIDE_BRIDGE = "InsidePseffOutsideBridge"
    PSEFF_BOUNDARY = "PseffBoundary"
    OUTSIDE_PSEFF = "OutsidePseff"


#: Regions strictly outside the bridge cone B (ratio -q/p > c*mu).
REGIONS_OUTSIDE_BRIDGE = frozenset(
    {Region.INSIDE_PSEFF_OUTSIDE_BRIDGE, Region.PSEFF_BOUNDARY, Region.OUTSIDE_PSEFF}
)


def classify(bundle: BundleOverCurve, cls: CycleClass) -> Region:
    """Locate a class among the nested cones of its codimension plane.

    Classes with p = 0 sit on the ray common to all three cones and are
    reported as the (innermost) Nef boundary; p < 0 is rejected outright
    since such a class cannot be effective.  The answer is invariant
    under positive rescaling of (p, q).  When the cones coincide
    (semistable bundle) the innermost matching region is reported.
    """
    if not 1 <= cls.codim <= bundle.rank - 1:
        raise InputError(f"codimension {cls.codim} out of range 1..{bundle.rank - 1}")
    if cls.p < 0:
        raise InputError("cycle class with negative H^c coefficient is not a candidate")
    if cls.p == 0:
        return Region.NEF_BOUNDARY
    slopes = virtual_slopes(bundle)
    c = cls.codim
    nef_t = sum(slopes[-c:], Fraction(0))
    bridge_t = c * bundle.slope
    pseff_t = sum(slopes[:c], Fraction(0))
    ratio = -cls.q / cls.p
    if ratio < nef_t:
        return Region.INSIDE_NEF
    if ratio == nef_t:
        return Region.NEF_BOUNDARY
    if ratio < bridge_t:
        return Region.INSIDE_BRIDGE_OUTSIDE_NEF
    if ratio == bridge_t:
        return Region.BRIDGE_BOUNDARY
    if ratio < pseff_t:
        return Region.INSIDE_PSEFF_OUTSIDE_BRIDGE
    if ratio == pseff_t:
        return Region.PSEFF_BOUNDARY
    return Region.OUTSIDE_PSEFF
