"""Displaceability decisions: wideness, narrowness contradictions, volume.

The classifier runs a fixed cascade over a validated family and always
lands on one of three statuses:

* ``Wide``: Floer homology is H(L; Z2) (x) Lambda, so L is
  non-displaceable with the strongest conclusions (real-form
  intersection, volume bound).
* ``NonDisplaceable``: the lifted Floer homology of the covering
  N -> L cannot vanish, certified by a replayable spectral-sequence
  contradiction.
* ``Unresolved``: no criterion in scope applies; an honest "this
  machinery proves nothing here", not a displaceability claim.

Every report carries its justification as an ordered list of steps, each
tagged computed (this package derived it) or cited (external input).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .catalog import (
    IsoparametricFamily,
    cited_facts,
    collapse_step,
    family_from_json,
    family_to_json,
    gauss_image_betti_g3,
    minimal_maslov,
    munzner_betti_N,
)
from .homology import BettiProfile, ProfileError
from .specseq import (
    CONTRADICTION,
    MaslovTooSmallError,
    NarrownessVerdict,
    propagate_narrow,
    verdict_from_json,
    verdict_to_json,
)

WIDE = "Wide"
NON_DISPLACEABLE = "NonDisplaceable"
UNRESOLVED = "Unresolved"

STATUSES = (WIDE, NON_DISPLACEABLE, UNRESOLVED)


def wide_check_biran_cornea(betti_l: BettiProfile, maslov: int) -> bool:
    """Vanishing test in degrees congruent to -1 mod the Maslov number.

    When H_i(L; Z2) = 0 for every i = maslov - 1, 2*maslov - 1, ... in
    [0, n], no Floer differential can connect the surviving generators,
    and the Floer homology equals H(L; Z2) (x) Lambda: L is wide.
    """
    if maslov < 2:
        raise MaslovTooSmallError(
            f"the wideness criterion needs minimal Maslov number >= 2, got {maslov}"
        )
    wide = True
    for degree in range(maslov - 1, betti_l.n + 1, maslov):
        slot = betti_l.bound(degree)
        if not slot.known:
            raise ProfileError(
                f"degree {degree} of the profile is unknown; the wideness test needs it exactly"
            )
        if slot.lo != 0:
            wide = False
    return wide


def _failed_degrees(betti_l: BettiProfile, maslov: int) -> list[int]:
    return [
        degree
        for degree in range(maslov - 1, betti_l.n + 1, maslov)
        if betti_l.bound(degree).lo != 0
    ]


def damian_nondisplaceable(family: IsoparametricFamily) -> NarrownessVerdict:
    """Run the narrowness propagator on the covering N -> L.

    A Contradiction certifies that the lifted Floer homology of the
    covering cannot vanish; since it vanishes for displaceable
    Lagrangians, the Gauss image is Hamiltonian non-displaceable.
    """
    maslov = minimal_maslov(family)
    if maslov < 3:
        raise MaslovTooSmallError(
            f"lifted Floer theory needs minimal Maslov number >= 3, got {maslov} "
            f"for ({family.g}, {family.m1}, {family.m2})"
        )
    table = munzner_betti_N(family)
    return propagate_narrow(table, maslov, family.n, collapse_step(family))


def volume_lower_bound(n: int) -> float:
    """Half the volume of the round unit n-sphere: pi^((n+1)/2) / Gamma((n+1)/2).

    Any Hamiltonian deformation of a wide Gauss image keeps intersecting
    the real form, and integral geometry turns that into a sweep-volume
    bound of half the sphere volume.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    return math.pi ** ((n + 1) / 2) / math.gamma((n + 1) / 2)


@dataclass(frozen=True)
class JustificationStep:
    """One link of a report's reasoning chain.

    ``rule`` is a stable machine-readable label; ``kind`` is "computed"
    or "cited"; ``verdict`` carries the replayable engine output when the
    step is a spectral-sequence fact.
    """

    rule: str
    kind: str
    claim: str
    source: str | None = None
    verdict: NarrownessVerdict | None = None


@dataclass(frozen=True)
class CaseReport:
    family: IsoparametricFamily
    status: str
    justification: tuple[JustificationStep, ...]
    intersects_real_form: bool
    volume_lower_bound: float | None


def _profile_brief(profile: BettiProfile) -> str:
    if profile.fully_known:
        return f"dims {list(profile.dims())}"
    known = {s: slot.lo for s, slot in enumerate(profile.slots) if slot.known}
    return f"known slots {known}, other degrees unknown"


def classify(family: IsoparametricFamily) -> CaseReport:
    """Decision cascade; every valid family lands on exactly one status.

    Order matters: cited real-form wideness for g in {1, 2}; the computed
    sphere profile plus the wideness criterion for g = 3; the lifted
    narrowness contradiction for g in {4, 6} when the Maslov number
    admits the lifted theory; below that threshold nothing applies.
    """
    steps: list[JustificationStep] = []

    if family.g in (1, 2):
        fact = cited_facts(family)[0]
        steps.append(
            JustificationStep("real-form", "cited", fact.statement, fact.source)
        )
        return CaseReport(family, WIDE, tuple(steps), True, None)

    if family.g == 3:
        maslov = minimal_maslov(family)
        homology = gauss_image_betti_g3(family)
        if homology.cited:
            fact = cited_facts(family)[0]
            steps.append(
                JustificationStep("gauss-image-homology", "cited", fact.statement, fact.source)
            )
        else:
            steps.append(
                JustificationStep(
                    "gauss-image-homology",
                    "computed",
                    f"the Gauss image is a Z2-homology {family.n}-sphere: the transfer of "
                    "the degree-3 covering kills all degrees outside {0, m, 2m, 3m} and "
                    "chi(L) = chi(N)/3 = 2 forces the middle slots to zero",
                    "covering-space transfer and Euler characteristic",
                )
            )
        if wide_check_biran_cornea(homology.profile, maslov):
            steps.append(
                JustificationStep(
                    "wide-criterion",
                    "computed",
                    f"no Z2 homology in degrees congruent to -1 mod {maslov}, so the Floer "
                    "homology is H(L; Z2) (x) Lambda",
                    "Biran-Cornea wideness criterion",
                )
            )
            return CaseReport(
                family, WIDE, tuple(steps), True, volume_lower_bound(family.n)
            )
        bad = _failed_degrees(homology.profile, maslov)
        steps.append(
            JustificationStep(
                "wide-criterion",
                "computed",
                f"wideness criterion fails: nonzero Z2 homology in degree(s) {bad} "
                f"congruent to -1 mod {maslov}",
                "Biran-Cornea wideness criterion",
            )
        )
        return CaseReport(family, UNRESOLVED, tuple(steps), False, None)

    # g in {4, 6}
    maslov = minimal_maslov(family)
    if maslov >= 3:
        table = munzner_betti_N(family)
        steps.append(
            JustificationStep(
                "covering-homology",
                "cited",
                f"Z2 Betti numbers of the covering N^{family.n}: {_profile_brief(table)}",
                "Muenzner: Z2 homology of isoparametric hypersurfaces",
            )
        )
        verdict = damian_nondisplaceable(family)
        if verdict.kind == CONTRADICTION:
            steps.append(
                JustificationStep(
                    "narrowness-contradiction",
                    "computed",
                    f"a vanishing lifted Floer homology would force dimension >= "
                    f"{verdict.bound} in slot {verdict.slot} of the final page; "
                    "contradiction, so the lifted Floer homology is nonzero",
                    "lifted Floer spectral sequence of the covering N -> L",
                    verdict,
                )
            )
            return CaseReport(family, NON_DISPLACEABLE, tuple(steps), False, None)
        steps.append(
            JustificationStep(
                "no-contradiction",
                "computed",
                "interval propagation derives no contradiction from a vanishing "
                "lifted Floer homology",
                "lifted Floer spectral sequence of the covering N -> L",
                verdict,
            )
        )
        return CaseReport(family, UNRESOLVED, tuple(steps), False, None)

    steps.append(
        JustificationStep(
            "maslov-threshold",
            "computed",
            f"minimal Maslov number {maslov} is below the threshold 3 of the lifted "
            "theory and no wideness route applies",
            "minimal Maslov number 2n/g of the Gauss image",
        )
    )
    return CaseReport(family, UNRESOLVED, tuple(steps), False, None)


# --- serialization ----------------------------------------------------------


def _step_to_json(step: JustificationStep) -> dict:
    return {
        "rule": step.rule,
        "kind": step.kind,
        "claim": step.claim,
        "source": step.source,
        "verdict": verdict_to_json(step.verdict) if step.verdict is not None else None,
    }


def _step_from_json(data: dict) -> JustificationStep:
    return JustificationStep(
        rule=data["rule"],
        kind=data["kind"],
        claim=data["claim"],
        source=data["source"],
        verdict=verdict_from_json(data["verdict"]) if data["verdict"] is not None else None,
    )


def report_to_json(report: CaseReport) -> dict:
    return {
        "family": family_to_json(report.family),
        "status": report.status,
        "justification": [_step_to_json(s) for s in report.justification],
        "intersects_real_form": report.intersects_real_form,
        "volume_lower_bound": report.volume_lower_bound,
    }


def report_from_json(data: dict) -> CaseReport:
    try:
        status = data["status"]
        if status not in STATUSES:
            raise ValueError(f"unknown status {status!r}")
        return CaseReport(
            family=family_from_json(data["family"]),
            status=status,
            justification=tuple(_step_from_json(s) for s in data["justification"]),
            intersects_real_form=bool(data["intersects_real_form"]),
            volume_lower_bound=data["volume_lower_bound"],
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed case report: {exc}") from exc
