"""Milnor invariants mu(I), the indeterminacy Delta(I) and the residue.

A link enters this module as a :class:`LongitudeSystem`: one word per
component expressing its 0-framed longitude in the meridians x1..xm,
valid modulo the lower central subgroup F_depth.  For an index
I = i_1...i_k j, mu(I) is the coefficient of X_{i_1}...X_{i_k} in the
Magnus expansion of the j-th longitude.  Delta(I) is the gcd of mu(J)
over all J obtained by deleting at least one entry of I and cyclically
rotating the rest, and mu-bar is the residue class of mu modulo Delta.

Weight-1 values are taken to be 0 and weight-1 indices are rejected.
An index of weight w is meaningful only when w <= depth - 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product

from .errors import ParseError, PreconditionError
from .magnus import NCSeries, magnus_expand
from .words import Word, format_word

Index = tuple[int, ...]


@dataclass(frozen=True)
class LongitudeSystem:
    """0-framed longitude words of an m-component link, valid mod F_depth."""

    m: int
    depth: int
    longitudes: tuple[Word, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("component count must be positive")
        if self.depth < 2:
            raise ValueError("depth must be at least 2")
        if len(self.longitudes) != self.m:
            raise ValueError(
                f"expected {self.m} longitudes, got {len(self.longitudes)}"
            )
        for i, w in enumerate(self.longitudes, start=1):
            high = w.max_generator()
            if high > self.m:
                raise ValueError(
                    f"longitude {i} uses generator x{high} beyond m={self.m}"
                )
            if w.exponent_sum(i) != 0:
                raise ValueError(
                    f"longitude {i} is not 0-framed: exponent sum of x{i} is "
                    f"{w.exponent_sum(i)}"
                )
        for i in range(1, self.m + 1):
            for j in range(i + 1, self.m + 1):
                lk_ij = self.longitudes[i - 1].exponent_sum(j)
                lk_ji = self.longitudes[j - 1].exponent_sum(i)
                if lk_ij != lk_ji:
                    raise ValueError(
                        f"asymmetric linking numbers: x{j} in longitude {i} gives "
                        f"{lk_ij} but x{i} in longitude {j} gives {lk_ji}"
                    )
        object.__setattr__(self, "_expansions", {})

    def linking(self, i: int, j: int) -> int:
        """Linking number of components i and j (i != j)."""
        return self.longitudes[i - 1].exponent_sum(j)

    def truncate(self, depth: int) -> "LongitudeSystem":
        """The same words viewed at a shallower validity depth."""
        if depth > self.depth:
            raise PreconditionError(
                f"cannot deepen a system: {depth} > {self.depth}"
            )
        return LongitudeSystem(self.m, depth, self.longitudes)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "depth": self.depth,
            "longitudes": [format_word(w) for w in self.longitudes],
        }


@dataclass(frozen=True)
class MuValue:
    """mu with its indeterminacy; residue is normalized to [0, delta)."""

    mu: int
    delta: int
    residue: int


def _expansion(system: LongitudeSystem, j: int) -> NCSeries:
    cache: dict[int, NCSeries] = system._expansions  # type: ignore[attr-defined]
    if j not in cache:
        cache[j] = magnus_expand(system.longitudes[j - 1], system.depth)
    return cache[j]


def validate_index(system: LongitudeSystem, index) -> Index:
    entries = tuple(int(i) for i in index)
    if len(entries) < 2:
        raise PreconditionError(f"index {entries} has weight < 2")
    for i in entries:
        if not 1 <= i <= system.m:
            raise PreconditionError(
                f"index entry {i} out of range for a {system.m}-component link"
            )
    return entries


def _mu_raw(system: LongitudeSystem, index: Index) -> int:
    # Coefficient read without the invariance bound; safe for weights up
    # to depth since degree <= depth-1 terms are determined by the coset.
    return _expansion(system, index[-1]).coefficient(index[:-1])


def mu(system: LongitudeSystem, index) -> int:
    """mu(i_1...i_k j): Magnus coefficient of X_{i_1}..X_{i_k} in w_j."""
    entries = validate_index(system, index)
    if len(entries) > system.depth - 1:
        raise PreconditionError(
            f"weight {len(entries)} exceeds validity (depth {system.depth} "
            f"allows weights up to {system.depth - 1})"
        )
    return _mu_raw(system, entries)


def proper_cyclic_subindices(index: Index) -> set[Index]:
    """All rotations of order-preserving subsequences of length 2..|I|-1."""
    k = len(index)
    out: set[Index] = set()
    for size in range(2, k):
        for positions in combinations(range(k), size):
            sub = tuple(index[p] for p in positions)
            for r in range(size):
                out.add(sub[r:] + sub[:r])
    return out


def delta(system: LongitudeSystem, index) -> int:
    """gcd of mu over proper cyclic subindices; 0 for the empty set."""
    entries = validate_index(system, index)
    if len(entries) > system.depth - 1:
        raise PreconditionError(
            f"weight {len(entries)} exceeds validity (depth {system.depth} "
            f"allows weights up to {system.depth - 1})"
        )
    g = 0
    for sub in proper_cyclic_subindices(entries):
        g = math.gcd(g, _mu_raw(system, sub))
    return g


def mu_bar(system: LongitudeSystem, index) -> MuValue:
    m_val = mu(system, index)
    d_val = delta(system, index)
    residue = m_val % d_val if d_val > 0 else m_val
    return MuValue(m_val, d_val, residue)


def residue_of(value: int, modulus: int) -> int:
    """Normalize an integer the way mu_bar does: mod, or raw if modulus 0."""
    return value % modulus if modulus > 0 else value


def _first_nonvanishing(system: LongitudeSystem, q: int) -> Index | None:
    # Shortlex-least index of weight 2..q with nonzero residue, using raw
    # coefficient reads so that q may equal the system depth.
    for weight in range(2, q + 1):
        for entries in product(range(1, system.m + 1), repeat=weight):
            m_val = _mu_raw(system, entries)
            g = 0
            for sub in proper_cyclic_subindices(entries):
                g = math.gcd(g, _mu_raw(system, sub))
            if residue_of(m_val, g) != 0:
                return entries
    return None


def all_vanish_up_to(system: LongitudeSystem, q: int) -> bool:
    """True iff every mu-bar residue of weight 2..q is zero."""
    if q > system.depth - 1:
        raise PreconditionError(
            f"weight {q} exceeds validity (depth {system.depth} allows "
            f"weights up to {system.depth - 1})"
        )
    return _first_nonvanishing(system, q) is None


def parse_index(text: str) -> Index:
    """Digit string like ``1122``; components > 9 use commas, ``1,2,12``."""
    text = text.strip()
    if not text:
        raise ParseError("empty index")
    try:
        if "," in text:
            entries = tuple(int(part) for part in text.split(","))
        else:
            entries = tuple(int(ch) for ch in text)
    except ValueError as exc:
        raise ParseError(f"bad index {text!r}") from exc
    if any(i < 1 for i in entries):
        raise ParseError(f"index entries must be >= 1 in {text!r}")
    return entries


def format_index(index: Index) -> str:
    if all(i <= 9 for i in index):
        return "".join(str(i) for i in index)
    return ",".join(str(i) for i in index)
