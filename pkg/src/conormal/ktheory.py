"""Rational K-theory of the b-compact operators and the Fredholm obstruction verdict.

K_0 and K_1 of the b-compact operators are rationally the even and odd
periodic conormal homology.  The verdict describes the group receiving the
boundary analytic index, never the index of a particular operator.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .complex import build_complex
from .groups import AbelianGroup, direct_sum
from .homology import HomologySummary, full_summary
from .poset import CornerPoset, ensure_valid

__all__ = [
    "PeriodicGroups",
    "periodic_groups",
    "VerdictKind",
    "ObstructionVerdict",
    "obstruction_verdict",
    "IntegralFlags",
    "KTheoryReport",
    "ktheory",
]


@dataclass(frozen=True)
class PeriodicGroups:
    even: AbelianGroup
    odd: AbelianGroup


def periodic_groups(summary: HomologySummary) -> PeriodicGroups:
    return PeriodicGroups(
        even=direct_sum(summary.groups[0::2]),
        odd=direct_sum(summary.groups[1::2]),
    )


class VerdictKind(enum.Enum):
    NO_BOUNDARY = "NO_BOUNDARY"
    RATIONALLY_UNOBSTRUCTED = "RATIONALLY_UNOBSTRUCTED"
    OBSTRUCTED = "OBSTRUCTED"


@dataclass(frozen=True)
class ObstructionVerdict:
    kind: VerdictKind
    k0_rank: int = 0
    torsion_caveat: bool = False

    def __str__(self):
        if self.kind is VerdictKind.OBSTRUCTED:
            return f"OBSTRUCTED(rank {self.k0_rank})"
        if self.kind is VerdictKind.RATIONALLY_UNOBSTRUCTED and self.torsion_caveat:
            return "RATIONALLY_UNOBSTRUCTED+TORSION_CAVEAT"
        return self.kind.value


def obstruction_verdict(n: int, k0_rank: int, even_torsion_present: bool) -> ObstructionVerdict:
    """Classify the receiving group of the boundary analytic index.

    With no boundary hypersurface there is nothing to perturb.  Otherwise
    the boundary index lands in a group rationally isomorphic to K_0 of
    the b-compact operators: rank zero means every boundary index vanishes
    rationally (even torsion leaves an integral caveat), positive rank means
    an obstruction can occur.
    """
    if n == 0:
        return ObstructionVerdict(VerdictKind.NO_BOUNDARY)
    if k0_rank == 0:
        return ObstructionVerdict(VerdictKind.RATIONALLY_UNOBSTRUCTED, 0, bool(even_torsion_present))
    return ObstructionVerdict(VerdictKind.OBSTRUCTED, k0_rank)


def _flag(value: bool | None) -> str:
    return "unknown" if value is None else str(value).lower()


@dataclass(frozen=True)
class IntegralFlags:
    """Situations in which the rational identification is known to be integral.

    ``product_rule`` is ``None`` unless the poset was built with
    :func:`conormal.poset.product`.
    """

    codim_le_3: bool
    even_torsion_free: bool
    product_rule: bool | None = None

    def line(self) -> str:
        return (
            f"integral: codim<=3={_flag(self.codim_le_3)} "
            f"even-torsion-free={_flag(self.even_torsion_free)} "
            f"product-rule={_flag(self.product_rule)}"
        )


@dataclass(frozen=True)
class KTheoryReport:
    periodic: PeriodicGroups
    k0_rank: int
    k1_rank: int
    even_torsion_present: bool
    odd_torsion_present: bool
    integral_flags: IntegralFlags
    verdict: ObstructionVerdict

    def lines(self) -> list[str]:
        return [
            f"K0 ⊗ Q rank = {self.k0_rank}",
            f"K1 ⊗ Q rank = {self.k1_rank}",
            f"H^pcn_ev = {self.periodic.even}",
            f"H^pcn_odd = {self.periodic.odd}",
            self.integral_flags.line(),
            f"verdict = {self.verdict}",
        ]


def _product_rule(factors: tuple[int, ...] | None) -> bool | None:
    if factors is None:
        return None
    return all(c <= 3 for c in factors) and any(c <= 2 for c in factors)


def ktheory(poset: CornerPoset, summary: HomologySummary | None = None) -> KTheoryReport:
    ensure_valid(poset)
    if summary is None:
        summary = full_summary(build_complex(poset))
    periodic = periodic_groups(summary)
    k0 = periodic.even.free_rank
    k1 = periodic.odd.free_rank
    even_torsion = bool(periodic.even.torsion)
    flags = IntegralFlags(
        codim_le_3=poset.d <= 3,
        even_torsion_free=not even_torsion,
        product_rule=_product_rule(poset.factors),
    )
    return KTheoryReport(
        periodic=periodic,
        k0_rank=k0,
        k1_rank=k1,
        even_torsion_present=even_torsion,
        odd_torsion_present=bool(periodic.odd.torsion),
        integral_flags=flags,
        verdict=obstruction_verdict(poset.n, k0, even_torsion),
    )
