"""Algebraic model of the lifted Floer spectral sequence, in reduced form.

For a closed monotone Lagrangian L with minimal Maslov number N >= 3 and
a finite covering Lbar -> L, the lifted Floer homology of Damian's
construction carries a spectral sequence whose first page is

    E_1^{p,q} = H_{p+q-pN}(Lbar; Z2) (x) A^{pN},

with A the Z2 Laurent coefficient algebra.  Every page keeps the product
shape E_r^{p,q} = V_r^{p,q} (x) A^{pN}, and V_1^{p,q} depends on (p, q)
only through the single index

    s = p + q - p*N.

The recursion V_{r+1} = ker(delta_r) / im(delta_r) preserves that
dependence, because delta_r maps (p, q) to (p-r, q+r-1) and hence sends
s to s + (r*N - 1).  The Laurent factor carries no rank information over
Z2, so the whole bigraded page collapses to a single array of slots
indexed by s, with the page-r differential shifting slots by r*N - 1.
The sequence freezes after nu = floor((dim L + 1)/N) page turns, and the
final page vanishes in total exactly when the lifted Floer homology
does.  Since lifted Floer homology is a Hamiltonian isotopy invariant
that vanishes for displaceable Lagrangians, a certified nonzero slot on
the final page is a non-displaceability proof.

Two deciders answer "can the final page vanish":

* ``propagate_narrow`` pushes interval bounds page by page.  Sound on
  partially known profiles, not complete.
* ``oracle_narrow_feasible`` exhaustively searches differential rank
  assignments.  Complete, but needs finite slot bounds.

They share no decision logic, which is the point: the oracle is the
ground truth the propagator is tested against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .homology import BettiProfile, DimBound, total_betti


class EngineError(ValueError):
    """Anything the spectral-sequence layer refuses to do."""


class MaslovTooSmallError(EngineError):
    """Minimal Maslov number below the threshold of the requested theory."""


class RankViolationError(EngineError):
    """A rank vector breaks a linear-algebra constraint of its page."""


class UnknownSlotsError(EngineError):
    """The oracle needs finite bounds on every slot."""


class SearchCapError(EngineError):
    """Total dimension above the configured search cap."""


class WitnessError(EngineError):
    """A witness is structurally malformed (as opposed to merely wrong)."""


CONTRADICTION = "Contradiction"
NO_CONTRADICTION = "NoContradiction"
FEASIBLE = "Feasible"
INFEASIBLE = "Infeasible"


def _require_maslov(maslov: int) -> None:
    if maslov < 3:
        raise MaslovTooSmallError(
            f"lifted Floer theory needs minimal Maslov number >= 3, got {maslov}"
        )


@dataclass(frozen=True)
class ReducedPage:
    """One page of the reduced sequence: interval dims per slot."""

    r: int
    maslov: int
    slots: tuple[DimBound, ...]

    @property
    def shift(self) -> int:
        """Slot shift of this page's differential: r*N - 1."""
        return self.r * self.maslov - 1

    def bound(self, s: int) -> DimBound:
        if 0 <= s < len(self.slots):
            return self.slots[s]
        return DimBound.exact(0)

    @property
    def fully_known(self) -> bool:
        return all(slot.known for slot in self.slots)

    def dims(self) -> tuple[int, ...]:
        if not self.fully_known:
            raise EngineError("page has unknown slots")
        return tuple(slot.lo for slot in self.slots)


def init_page(profile: BettiProfile, maslov: int) -> ReducedPage:
    """First page: the slots are the homology bounds of the covering."""
    _require_maslov(maslov)
    return ReducedPage(1, maslov, profile.slots)


@dataclass(frozen=True)
class RankVector:
    """Chosen ranks of the page-r differential out of each slot."""

    r: int
    ranks: tuple[int, ...]


def step_page(page: ReducedPage, ranks: RankVector) -> ReducedPage:
    """Turn the page: dim'[s] = dim[s] - a[s] - a[s - shift].

    Legality, for every slot s (with dims and ranks zero out of range):
    a[s] <= dim[s] and a[s] <= dim[s + shift] (a rank is bounded by
    domain and codomain), and a[s] + a[s - shift] <= dim[s] (the incoming
    image must fit inside the outgoing kernel, i.e. d o d = 0).  Any
    rank choice passing these is realizable by honest Z2-linear maps.
    """
    dims = page.dims()
    if ranks.r != page.r:
        raise RankViolationError(f"rank vector for page {ranks.r} applied to page {page.r}")
    width = len(dims)
    if len(ranks.ranks) != width:
        raise RankViolationError(
            f"rank vector has {len(ranks.ranks)} slots, page has {width}"
        )
    shift = page.shift
    a = ranks.ranks

    def a_at(s: int) -> int:
        return a[s] if 0 <= s < width else 0

    def d_at(s: int) -> int:
        return dims[s] if 0 <= s < width else 0

    for s in range(width):
        if a[s] < 0:
            raise RankViolationError(f"slot {s}: negative rank {a[s]}")
        if a[s] > dims[s]:
            raise RankViolationError(
                f"slot {s}: rank {a[s]} exceeds the domain dimension {dims[s]}"
            )
        if a[s] > d_at(s + shift):
            raise RankViolationError(
                f"slot {s}: rank {a[s]} exceeds the codomain dimension "
                f"{d_at(s + shift)} at slot {s + shift}"
            )
        if a[s] + a_at(s - shift) > dims[s]:
            raise RankViolationError(
                f"slot {s}: incoming rank {a_at(s - shift)} plus outgoing rank {a[s]} "
                f"exceeds the dimension {dims[s]} (d o d = 0 fails)"
            )
    new_slots = tuple(
        DimBound.exact(dims[s] - a[s] - a_at(s - shift)) for s in range(width)
    )
    return ReducedPage(page.r + 1, page.maslov, new_slots)


# --- verdicts and witnesses -------------------------------------------------


@dataclass(frozen=True)
class ChainStep:
    """One page of the exact-sequence bound at a fixed slot.

    Exactness of V[left] -> V[s] -> V[right] under a vanishing final page
    gives lower_after = max(0, lower_before - left_hi - right_hi).
    """

    page: int
    shift: int
    left: int
    left_hi: int
    right: int
    right_hi: int
    lower_before: int
    lower_after: int


@dataclass(frozen=True)
class ContradictionWitness:
    slot: int
    bound: int
    chain: tuple[ChainStep, ...]


@dataclass(frozen=True)
class FinalPageWitness:
    slots: tuple[DimBound, ...]


@dataclass(frozen=True)
class FeasibleWitness:
    completion: tuple[int, ...]
    ranks: tuple[RankVector, ...]


@dataclass(frozen=True)
class InfeasibleWitness:
    completions_tried: int
    states_explored: int


@dataclass(frozen=True)
class NarrownessVerdict:
    kind: str
    slot: int | None
    page: int | None
    bound: int | None
    witness: object


def propagate_narrow(
    profile: BettiProfile, maslov: int, n: int, nu: int
) -> NarrownessVerdict:
    """Decide whether a vanishing final page contradicts the profile.

    Interval bounds are pushed from page 1 to page nu+1.  Upper bounds
    never grow (each page is a subquotient of the previous one); lower
    bounds obey the exactness of V[s-shift] -> V[s] -> V[s+shift], so

        lo'[s] >= max(0, lo[s] - hi[s - shift] - hi[s + shift]),

    with unbounded neighbours collapsing the estimate to 0.  A positive
    lower bound on any final-page slot certifies that the lifted Floer
    homology cannot vanish: Contradiction.  Otherwise NoContradiction,
    which is *not* a feasibility proof.

    ``n`` is the dimension of the Lagrangian; it seeds the witness-slot
    tie-break (strongest forced bound, nearest the middle degree n/2,
    then lowest slot) and keeps verdicts invariant under padding the
    profile with zero slots above its top degree.
    """
    _require_maslov(maslov)
    if nu < 0:
        raise EngineError(f"number of page turns must be >= 0, got {nu}")
    width = profile.n + 1
    his = [slot.hi for slot in profile.slots]  # constant across pages

    def hi_at(s: int) -> int | None:
        if 0 <= s < width:
            return his[s]
        return 0

    pages: list[list[int]] = [[slot.lo for slot in profile.slots]]
    for r in range(1, nu + 1):
        shift = r * maslov - 1
        current = pages[-1]
        nxt = []
        for s in range(width):
            left_hi, right_hi = hi_at(s - shift), hi_at(s + shift)
            if left_hi is None or right_hi is None:
                nxt.append(0)
            else:
                nxt.append(max(0, current[s] - left_hi - right_hi))
        pages.append(nxt)

    final = pages[-1]
    positive = [s for s in range(width) if final[s] > 0]
    if not positive:
        witness = FinalPageWitness(
            tuple(DimBound(final[s], his[s]) for s in range(width))
        )
        return NarrownessVerdict(NO_CONTRADICTION, None, nu + 1, None, witness)

    best = max(positive, key=lambda s: (final[s], -abs(2 * s - n), -s))
    chain = []
    for r in range(1, nu + 1):
        shift = r * maslov - 1
        left_hi, right_hi = hi_at(best - shift), hi_at(best + shift)
        # a surviving positive bound never met an unbounded neighbour
        assert left_hi is not None and right_hi is not None
        chain.append(
            ChainStep(
                page=r,
                shift=shift,
                left=best - shift,
                left_hi=left_hi,
                right=best + shift,
                right_hi=right_hi,
                lower_before=pages[r - 1][best],
                lower_after=pages[r][best],
            )
        )
    witness = ContradictionWitness(best, final[best], tuple(chain))
    return NarrownessVerdict(CONTRADICTION, best, nu + 1, final[best], witness)


def oracle_narrow_feasible(
    profile: BettiProfile, maslov: int, nu: int, search_cap: int | None = None
) -> NarrownessVerdict:
    """Exhaustively decide whether some legal rank choice kills the final page.

    Complete where the propagator is only sound.  Unknown slots are
    enumerated over their intervals when every upper end is finite
    (otherwise the search space is infinite and the call is refused);
    ``search_cap`` refuses inputs whose total dimension may exceed it.
    The search runs depth first, slots ascending, ranks descending from
    their caps, memoizing visited (page, dims) states, so a Feasible
    verdict always carries the lexicographically greediest witness.
    """
    _require_maslov(maslov)
    if nu < 0:
        raise EngineError(f"number of page turns must be >= 0, got {nu}")
    total = total_betti(profile)
    if total.hi is None:
        raise UnknownSlotsError(
            "profile has slots with no finite upper bound; completions cannot be enumerated"
        )
    if search_cap is not None and total.hi > search_cap:
        raise SearchCapError(
            f"total dimension may reach {total.hi}, above the search cap {search_cap}"
        )
    width = profile.n + 1
    states_explored = 0
    memo: dict[tuple[int, tuple[int, ...]], tuple[RankVector, ...] | None] = {}

    def legal_rank_vectors(dims: tuple[int, ...], shift: int):
        acc: list[int] = []

        def rec(s: int):
            if s == width:
                yield tuple(acc)
                return
            cap = dims[s] - (acc[s - shift] if s - shift >= 0 else 0)
            cap = min(cap, dims[s + shift] if s + shift < width else 0)
            for a in range(cap, -1, -1):
                acc.append(a)
                yield from rec(s + 1)
                acc.pop()

        yield from rec(0)

    def search(dims: tuple[int, ...], r: int) -> tuple[RankVector, ...] | None:
        nonlocal states_explored
        if r > nu:
            return () if not any(dims) else None
        key = (r, dims)
        if key in memo:
            return memo[key]
        states_explored += 1
        shift = r * maslov - 1
        found = None
        for a in legal_rank_vectors(dims, shift):
            nxt = tuple(
                dims[s] - a[s] - (a[s - shift] if s - shift >= 0 else 0)
                for s in range(width)
            )
            tail = search(nxt, r + 1)
            if tail is not None:
                found = (RankVector(r, a),) + tail
                break
        memo[key] = found
        return found

    ranges = (range(slot.lo, slot.hi + 1) for slot in profile.slots)
    completions_tried = 0
    for completion in itertools.product(*ranges):
        completions_tried += 1
        ranks = search(completion, 1)
        if ranks is not None:
            witness = FeasibleWitness(completion, ranks)
            return NarrownessVerdict(FEASIBLE, None, nu + 1, None, witness)
    witness = InfeasibleWitness(completions_tried, states_explored)
    return NarrownessVerdict(INFEASIBLE, None, nu + 1, None, witness)


# --- replay -----------------------------------------------------------------


def replay_witness(
    verdict: NarrownessVerdict, profile: BettiProfile, maslov: int, nu: int
) -> bool:
    """Re-derive a verdict's witness from scratch; True iff it checks out.

    Contradiction chains are re-walked arithmetically against the profile
    (no call into the propagator); Feasible witnesses are re-run through
    ``step_page`` down to the zero page; the other two kinds are checked
    by recomputation.  Malformed structure raises; wrong values return
    False.
    """
    witness = verdict.witness
    try:
        if verdict.kind == CONTRADICTION:
            if not isinstance(witness, ContradictionWitness):
                raise WitnessError("Contradiction verdict without a chain witness")
            return _replay_contradiction(witness, profile, maslov, nu)
        if verdict.kind == NO_CONTRADICTION:
            if not isinstance(witness, FinalPageWitness):
                raise WitnessError("NoContradiction verdict without a final-page witness")
            fresh = propagate_narrow(profile, maslov, profile.n, nu)
            return fresh.kind == NO_CONTRADICTION and fresh.witness == witness
        if verdict.kind == FEASIBLE:
            if not isinstance(witness, FeasibleWitness):
                raise WitnessError("Feasible verdict without a rank witness")
            return _replay_feasible(witness, profile, maslov, nu)
        if verdict.kind == INFEASIBLE:
            if not isinstance(witness, InfeasibleWitness):
                raise WitnessError("Infeasible verdict without search statistics")
            fresh = oracle_narrow_feasible(profile, maslov, nu)
            return fresh.kind == INFEASIBLE and fresh.witness == witness
    except (TypeError, AttributeError) as exc:
        raise WitnessError(f"malformed witness: {exc}") from exc
    raise WitnessError(f"unknown verdict kind {verdict.kind!r}")


def _replay_contradiction(
    witness: ContradictionWitness, profile: BettiProfile, maslov: int, nu: int
) -> bool:
    slot, bound = witness.slot, witness.bound
    if bound <= 0 or len(witness.chain) != nu:
        return False
    lower = profile.bound(slot).lo
    for r, step in enumerate(witness.chain, start=1):
        shift = r * maslov - 1
        if step.page != r or step.shift != shift:
            return False
        if step.left != slot - shift or step.right != slot + shift:
            return False
        left, right = profile.bound(step.left), profile.bound(step.right)
        # upper bounds are page-invariant, so the profile is the authority
        if left.hi is None or right.hi is None:
            return False
        if step.left_hi != left.hi or step.right_hi != right.hi:
            return False
        if step.lower_before != lower:
            return False
        lower = max(0, lower - left.hi - right.hi)
        if step.lower_after != lower:
            return False
    return lower == bound


def _replay_feasible(
    witness: FeasibleWitness, profile: BettiProfile, maslov: int, nu: int
) -> bool:
    completion = tuple(witness.completion)
    if len(completion) != profile.n + 1:
        return False
    for value, slot in zip(completion, profile.slots):
        if value < slot.lo:
            return False
        if slot.hi is not None and value > slot.hi:
            return False
    if len(witness.ranks) != nu:
        return False
    page = ReducedPage(1, maslov, tuple(DimBound.exact(v) for v in completion))
    try:
        for ranks in witness.ranks:
            page = step_page(page, ranks)
    except EngineError:
        return False
    return not any(page.dims())


# --- serialization ----------------------------------------------------------


def verdict_to_json(verdict: NarrownessVerdict) -> dict:
    """Stable wire form: {"kind", "slot", "page", "bound", "witness"}."""
    witness = verdict.witness
    if isinstance(witness, ContradictionWitness):
        payload = {
            "type": "contradiction-chain",
            "slot": witness.slot,
            "bound": witness.bound,
            "chain": [
                {
                    "page": c.page,
                    "shift": c.shift,
                    "left": c.left,
                    "left_hi": c.left_hi,
                    "right": c.right,
                    "right_hi": c.right_hi,
                    "lower_before": c.lower_before,
                    "lower_after": c.lower_after,
                }
                for c in witness.chain
            ],
        }
    elif isinstance(witness, FinalPageWitness):
        payload = {
            "type": "final-page",
            "slots": [[slot.lo, slot.hi] for slot in witness.slots],
        }
    elif isinstance(witness, FeasibleWitness):
        payload = {
            "type": "rank-assignment",
            "completion": list(witness.completion),
            "ranks": [{"page": rv.r, "ranks": list(rv.ranks)} for rv in witness.ranks],
        }
    elif isinstance(witness, InfeasibleWitness):
        payload = {
            "type": "exhausted-search",
            "completions_tried": witness.completions_tried,
            "states_explored": witness.states_explored,
        }
    else:
        raise WitnessError(f"unserializable witnessType {type(witness).__name__}")
    return {
        "kind": verdict.kind,
        "slot": verdict.slot,
        "page": verdict.page,
        "bound": verdict.bound,
        "witness": payload,
    }


def _as_int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise WitnessError(f"expected an integer, got {value!r}")
    return value


def _as_opt_int(value) -> int | None:
    return None if value is None else _as_int(value)


def verdict_from_json(data: dict) -> NarrownessVerdict:
    if not isinstance(data, dict):
        raise WitnessError("verdict must be a JSON object")
    try:
        kind = data["kind"]
        payload = data["witness"]
        wtype = payload["type"]
        if kind == CONTRADICTION and wtype == "contradiction-chain":
            chain = tuple(
                ChainStep(
                    page=_as_int(c["page"]),
                    shift=_as_int(c["shift"]),
                    left=_as_int(c["left"]),
                    left_hi=_as_int(c["left_hi"]),
                    right=_as_int(c["right"]),
                    right_hi=_as_int(c["right_hi"]),
                    lower_before=_as_int(c["lower_before"]),
                    lower_after=_as_int(c["lower_after"]),
                )
                for c in payload["chain"]
            )
            witness: object = ContradictionWitness(
                _as_int(payload["slot"]), _as_int(payload["bound"]), chain
            )
        elif kind == NO_CONTRADICTION and wtype == "final-page":
            witness = FinalPageWitness(
                tuple(DimBound(_as_int(lo), _as_opt_int(hi)) for lo, hi in payload["slots"])
            )
        elif kind == FEASIBLE and wtype == "rank-assignment":
            witness = FeasibleWitness(
                tuple(_as_int(v) for v in payload["completion"]),
                tuple(
                    RankVector(_as_int(rv["page"]), tuple(_as_int(a) for a in rv["ranks"]))
                    for rv in payload["ranks"]
                ),
            )
        elif kind == INFEASIBLE and wtype == "exhausted-search":
            witness = InfeasibleWitness(
                _as_int(payload["completions_tried"]), _as_int(payload["states_explored"])
            )
        else:
            raise WitnessError(f"verdict kind {kind!r} does not match witness type {wtype!r}")
        return NarrownessVerdict(
            kind=kind,
            slot=_as_opt_int(data["slot"]),
            page=_as_opt_int(data["page"]),
            bound=_as_opt_int(data["bound"]),
            witness=witness,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise WitnessError(f"malformed verdict object: {exc}") from exc
