"""Lower central quotients of 0-surgery manifolds.

Doing 0-framed surgery on every component of a link presents the
fundamental group's lower central quotient as F/<F_q, w_1, ..., w_m>
with the longitude words as relators.  That quotient is the free
nilpotent group F/F_q exactly when all mu-bar invariants of weight
<= q vanish, equivalently when every relator lies in F_q; both routes
are computed independently here and must agree.

A mutative pair is a ribbon sum alpha # inverse_mirror(alpha) together
with one of its bi-mutants: when a detector index exists, the sum's
quotient is free and the mutant's is not, so the two surgery manifolds
have different q-th lower central quotients.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .brackets import evaluate_detailed, massey_sum
from .corpus import STAR_LINKING_VALUES
from .errors import PreconditionError
from .links import connected_sum, inverse_mirror
from .magnus import lcs_depth
from .milnor import (
    Index,
    LongitudeSystem,
    _first_nonvanishing,
    format_index,
)
from .mutation import MutantReport, apply_mutation, find_detector, mutant_mu


@dataclass(frozen=True)
class LcqReport:
    """Outcome of the free-nilpotence test for one system and depth."""

    q: int
    free: bool
    witness_index: Index | None
    witness_relator: int | None  # 1-based component with lcs_depth < q

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "free": self.free,
            "witness": (
                None
                if self.witness_index is None
                else format_index(self.witness_index)
            ),
            "witness_relator": self.witness_relator,
        }


def lcq_is_free(system: LongitudeSystem, q: int) -> LcqReport:
    """Is pi_1(M_L)/pi_1(M_L)_q free nilpotent of rank m?

    Route A checks that every mu-bar residue of weight <= q vanishes;
    route B checks that every relator has lcs_depth >= q.  The two are
    equivalent and both are evaluated; the report carries the shortlex
    least failing index and the first shallow relator when not free.
    """
    if q < 2:
        raise PreconditionError("q must be at least 2")
    if q > system.depth:
        raise PreconditionError(
            f"depth {system.depth} insufficient for quotient depth {q}"
        )
    witness = _first_nonvanishing(system, q)
    route_a = witness is None

    witness_relator = None
    for i, w in enumerate(system.longitudes, start=1):
        if lcs_depth(w, q + 1) < q:
            witness_relator = i
            break
    route_b = witness_relator is None

    if route_a != route_b:
        raise RuntimeError(
            f"free-nilpotence routes disagree at q={q}: "
            f"mu-bar witness {witness}, relator {witness_relator}"
        )
    return LcqReport(q, route_a, witness, witness_relator)


@dataclass(frozen=True)
class MutativePairReport:
    """A ribbon sum and a bi-mutant with different lower central quotients."""

    q: int
    mutation: str
    found: bool
    detectors: tuple[Index, ...] = ()
    ribbon_sum: LcqReport | None = None
    mutant: LcqReport | None = None
    witnesses: tuple[MutantReport, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "mutation": self.mutation,
            "found": self.found,
            "detectors": [format_index(d) for d in self.detectors],
            "ribbon_sum": None if self.ribbon_sum is None else self.ribbon_sum.to_json(),
            "mutant": None if self.mutant is None else self.mutant.to_json(),
            "witnesses": [r.to_json() for r in self.witnesses],
        }


def mutative_pair_report(
    alpha: LongitudeSystem, q: int, tau: str
) -> MutativePairReport:
    """Exhibit distinct q-th lower central quotients across a mutation.

    Builds L = alpha # inverse_mirror(alpha) and its tau-mutant; when a
    detector index exists the report shows lcq_is_free(L, q) true and
    lcq_is_free(mutant, q) false.  Without a detector the report simply
    states the negative.
    """
    detectors = find_detector(alpha, q, tau)
    if not detectors:
        return MutativePairReport(q=q, mutation=tau, found=False)
    beta = inverse_mirror(alpha)
    ribbon = connected_sum(alpha, beta)
    mutant_sys = connected_sum(alpha, apply_mutation(beta, tau))
    reports = tuple(mutant_mu(alpha, beta, d, tau) for d in detectors)
    return MutativePairReport(
        q=q,
        mutation=tau,
        found=True,
        detectors=tuple(detectors),
        ribbon_sum=lcq_is_free(ribbon, q),
        mutant=lcq_is_free(mutant_sys, q),
        witnesses=reports,
    )


def self_mutation_ninth_quotient(values: dict | None = None) -> dict:
    """The weight-9 self-mutation instance, via minimal linkings.

    A ribbon 2-component link has a positive self-mutant admitting a
    weight-9 surface system whose only nonvanishing minimal linking is
    lk(yyxy,(yxy,xy)) = 1.  Evaluating the bracket expansion of
    mu-bar(122121222) on those values gives -20, so the mutant's
    relators are not in F_9 and the ninth lower central quotient of its
    surgery manifold is not free nilpotent, while the ribbon link's is.
    """
    index = (1, 2, 2, 1, 2, 1, 2, 2, 2)
    expr = massey_sum(index)
    vals = STAR_LINKING_VALUES if values is None else values
    total, missing = evaluate_detailed(expr, vals)
    return {
        "index": format_index(index),
        "weight": len(index),
        "expansion": expr.to_json(),
        "linking_values": dict(vals),
        "assumes_surface_system_of_weight": len(index),
        "mu_bar": total,
        "defaulted_to_zero": missing,
        "ribbon_sum_quotient_free": True,
        "mutant_quotient_free": total == 0,
    }
