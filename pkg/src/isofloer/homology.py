"""Graded Z2 Betti profiles with interval-valued entries.

A profile stores dim H_s(X; Z2) for s = 0..n.  Slots may be only
partially known: each one is a closed integer interval, with an open
upper end standing for "nothing known beyond nonnegativity".  Degrees
outside [0, n] always query as exactly zero; the bound computations
downstream lean on that vanishing constantly, so it is part of the
query contract rather than an error.

Everything here is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class ProfileError(ValueError):
    """Bad profile construction, or an exact query against unknown slots."""


@dataclass(frozen=True)
class DimBound:
    """Closed interval [lo, hi] of possible Z2 dimensions.

    ``hi is None`` means unbounded above and compares greater than every
    integer.  A bound is *known* when it pins a single value.
    """

    lo: int
    hi: int | None

    def __post_init__(self) -> None:
        if self.lo < 0:
            raise ProfileError(f"dimension lower bound must be >= 0, got {self.lo}")
        if self.hi is not None and self.hi < self.lo:
            raise ProfileError(f"empty dimension interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, dim: int) -> "DimBound":
        return cls(dim, dim)

    @property
    def known(self) -> bool:
        return self.hi == self.lo

    def __add__(self, other: "DimBound") -> "DimBound":
        if not isinstance(other, DimBound):
            return NotImplemented
        hi = None if self.hi is None or other.hi is None else self.hi + other.hi
        return DimBound(self.lo + other.lo, hi)


ZERO = DimBound.exact(0)


@dataclass(frozen=True)
class BettiProfile:
    """Z2 Betti numbers over degrees 0..n, possibly partially known.

    ``cap``, when present, bounds the *total* Betti number; it is what the
    unknown slots' upper ends were derived from and it tightens
    ``total_betti`` beyond the slotwise sum.
    """

    n: int
    slots: tuple[DimBound, ...]
    cap: int | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ProfileError(f"top degree must be >= 0, got {self.n}")
        if len(self.slots) != self.n + 1:
            raise ProfileError(
                f"profile over degrees 0..{self.n} needs {self.n + 1} slots, got {len(self.slots)}"
            )

    def bound(self, degree: int) -> DimBound:
        """Bound at any integer degree; exactly zero outside [0, n]."""
        if 0 <= degree <= self.n:
            return self.slots[degree]
        return ZERO

    @property
    def fully_known(self) -> bool:
        return all(slot.known for slot in self.slots)

    def dims(self) -> tuple[int, ...]:
        if not self.fully_known:
            raise ProfileError("profile has unknown slots")
        return tuple(slot.lo for slot in self.slots)


def _checked_entries(n: int, entries: Iterable[Sequence[int]]) -> dict[int, int]:
    seen: dict[int, int] = {}
    for degree, dim in entries:
        if not 0 <= degree <= n:
            raise ProfileError(f"degree {degree} outside [0, {n}]")
        if dim < 0:
            raise ProfileError(f"negative dimension {dim} at degree {degree}")
        if degree in seen:
            raise ProfileError(f"duplicate degree {degree}")
        seen[degree] = dim
    return seen


def make_profile(n: int, entries: Iterable[Sequence[int]]) -> BettiProfile:
    """Fully known profile: listed degrees get their dims, the rest are 0."""
    known = _checked_entries(n, entries)
    return BettiProfile(n, tuple(DimBound.exact(known.get(s, 0)) for s in range(n + 1)))


def make_partial_profile(
    n: int, known: Iterable[Sequence[int]], cap: int | None = None
) -> BettiProfile:
    """Profile with listed degrees exactly known and the rest interval-bounded.

    Unlisted slots get [0, cap - sum of known dims] when a cap on the total
    Betti number is supplied, and [0, unbounded) otherwise.  A cap equal to
    the known sum therefore forces every unlisted slot to exactly zero.
    """
    entries = _checked_entries(n, known)
    used = sum(entries.values())
    if cap is not None and used > cap:
        raise ProfileError(f"known dimensions total {used}, exceeding cap {cap}")
    rest = DimBound(0, None if cap is None else cap - used)
    slots = tuple(
        DimBound.exact(entries[s]) if s in entries else rest for s in range(n + 1)
    )
    return BettiProfile(n, slots, cap)


def euler_char(profile: BettiProfile) -> int:
    """Alternating sum of the dimensions; every slot must be known."""
    dims = profile.dims()
    return sum(dim if s % 2 == 0 else -dim for s, dim in enumerate(dims))


def total_betti(profile: BettiProfile) -> DimBound:
    """Interval sum of all slots, tightened by the profile cap if any."""
    total = ZERO
    for slot in profile.slots:
        total = total + slot
    if profile.cap is not None:
        hi = profile.cap if total.hi is None else min(total.hi, profile.cap)
        total = DimBound(total.lo, hi)
    return total


def check_poincare(profile: BettiProfile) -> bool:
    """Z2 Poincare symmetry dim[s] == dim[n-s], a closed-manifold sanity check."""
    dims = profile.dims()
    return all(dims[s] == dims[profile.n - s] for s in range(profile.n + 1))


def profile_to_json(profile: BettiProfile) -> dict:
    """Render as {"n": int, "known": [[degree, dim], ...], "cap": int|null}.

    Only exactly-known slots are listed; parsing reconstructs the unknown
    ones from the cap, so constructor-built profiles round-trip exactly.
    """
    known = [[s, slot.lo] for s, slot in enumerate(profile.slots) if slot.known]
    return {"n": profile.n, "known": known, "cap": profile.cap}


def profile_from_json(data: dict) -> BettiProfile:
    if not isinstance(data, dict):
        raise ProfileError("profile object must be a JSON object")
    try:
        n = data["n"]
        raw = data["known"]
        cap = data.get("cap")
    except (KeyError, TypeError) as exc:
        raise ProfileError(f"malformed profile object: missing {exc}") from exc
    if not isinstance(n, int) or isinstance(n, bool):
        raise ProfileError("profile field 'n' must be an integer")
    if cap is not None and (not isinstance(cap, int) or isinstance(cap, bool)):
        raise ProfileError("profile field 'cap' must be an integer or null")
    try:
        known = [(int(d), int(v)) for d, v in raw]
    except (TypeError, ValueError) as exc:
        raise ProfileError(f"malformed 'known' entries: {exc}") from exc
    return make_partial_profile(n, known, cap)
