"""Cyclotomic cosets modulo q^m - 1 and exact index sets over [0, q^m - 1].

Cosets are built by rotating digit words rather than by modular
multiplication so that the two fixed points 0 and q^m - 1 come out as
singleton orbits with no special-casing: both are legitimate, distinct
positions of an extended code's defining set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParameterError, ResourceLimitError
from .qadic import expand, rotate, word_value

__all__ = [
    "CyclotomicCoset",
    "DefiningSet",
    "DEFAULT_INDEX_CAP",
    "coset_of",
    "leader",
    "union_cosets",
]

# Largest q^m for which index sets are materialized (bits over [0, q^m - 1]).
DEFAULT_INDEX_CAP = 1 << 28

_BITREV = bytes(int(format(i, "08b")[::-1], 2) for i in range(256))


def _check_range(s: int, q: int, m: int) -> None:
    if not 0 <= s <= q**m - 1:
        raise ParameterError(f"value {s} out of range [0, {q**m - 1}]")


def _check_cap(q: int, m: int, cap: int | None) -> int:
    size = q**m
    limit = DEFAULT_INDEX_CAP if cap is None else cap
    if size > limit:
        raise ResourceLimitError(
            f"q^m = {size} exceeds the materialization cap {limit}"
        )
    return size


@dataclass(frozen=True)
class CyclotomicCoset:
    """Rotation orbit of a digit word; equivalently the orbit of s under
    multiplication by q modulo q^m - 1 (for s strictly between 0 and q^m - 1)."""

    leader: int
    elements: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)


def coset_of(s: int, q: int, m: int) -> CyclotomicCoset:
    """The cyclotomic coset containing s, as a sorted orbit with its leader."""
    _check_range(s, q, m)
    w = expand(s, q, m)
    orbit = {word_value(rotate(w, j)) for j in range(m)}
    elems = tuple(sorted(orbit))
    return CyclotomicCoset(elems[0], elems)


def leader(s: int, q: int, m: int) -> int:
    """Smallest member of the coset of s."""
    return coset_of(s, q, m).leader


class DefiningSet:
    """An exact subset of the index range [0, q^m - 1], bit-packed.

    Instances are immutable; all operations return new sets.  Membership,
    equality and cardinality are exact.  Construction refuses index ranges
    larger than the materialization cap.
    """

    __slots__ = ("q", "m", "_bits", "_card")

    def __init__(self, q: int, m: int, bits: int, cap: int | None = None):
        size = _check_cap(q, m, cap)
        if bits < 0 or bits >> size:
            raise ParameterError("bit mask outside the index range")
        self.q = q
        self.m = m
        self._bits = bits
        self._card = bits.bit_count()

    @classmethod
    def from_members(
        cls, q: int, m: int, members: Iterable[int], cap: int | None = None
    ) -> "DefiningSet":
        _check_cap(q, m, cap)
        buf = bytearray((q**m + 7) // 8)
        top = q**m - 1
        for s in members:
            if not 0 <= s <= top:
                raise ParameterError(f"member {s} out of range [0, {top}]")
            buf[s >> 3] |= 1 << (s & 7)
        return cls(q, m, int.from_bytes(buf, "little"), cap)

    @classmethod
    def empty(cls, q: int, m: int, cap: int | None = None) -> "DefiningSet":
        return cls(q, m, 0, cap)

    @classmethod
    def full(cls, q: int, m: int, cap: int | None = None) -> "DefiningSet":
        return cls(q, m, (1 << q**m) - 1, cap)

    @property
    def n(self) -> int:
        """Largest index, q^m - 1."""
        return self.q**self.m - 1

    @property
    def cardinality(self) -> int:
        return self._card

    def __len__(self) -> int:
        return self._card

    def __contains__(self, s: int) -> bool:
        return 0 <= s <= self.n and (self._bits >> s) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self._bits
        s = 0
        while bits:
            if bits & 1:
                yield s
            bits >>= 1
            s += 1

    def members(self) -> list[int]:
        return list(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DefiningSet):
            return NotImplemented
        return (self.q, self.m, self._bits) == (other.q, other.m, other._bits)

    def __hash__(self) -> int:
        return hash((self.q, self.m, self._bits))

    def __repr__(self) -> str:
        return f"DefiningSet(q={self.q}, m={self.m}, cardinality={self._card})"

    def _compatible(self, other: "DefiningSet") -> None:
        if (self.q, self.m) != (other.q, other.m):
            raise ParameterError("sets live on different index ranges")

    def union(self, other: "DefiningSet") -> "DefiningSet":
        self._compatible(other)
        return DefiningSet(self.q, self.m, self._bits | other._bits)

    def intersection(self, other: "DefiningSet") -> "DefiningSet":
        self._compatible(other)
        return DefiningSet(self.q, self.m, self._bits & other._bits)

    def difference(self, other: "DefiningSet") -> "DefiningSet":
        self._compatible(other)
        return DefiningSet(self.q, self.m, self._bits & ~other._bits)

    def complement(self) -> "DefiningSet":
        size = self.q**self.m
        return DefiningSet(self.q, self.m, ~self._bits & ((1 << size) - 1))

    def reflect(self) -> "DefiningSet":
        """The image under s -> n - s (an involution swapping 0 and n)."""
        size = self.q**self.m
        nbytes = (size + 7) // 8
        raw = self._bits.to_bytes(nbytes, "little")
        rev = int.from_bytes(raw.translate(_BITREV), "big") >> (8 * nbytes - size)
        return DefiningSet(self.q, self.m, rev)

    def is_rotation_closed(self) -> bool:
        """True iff membership is preserved by multiplication by q mod n
        on [1, n-1] (0 and n are always fixed points)."""
        n = self.n
        for s in self:
            if 0 < s < n and ((s * self.q) % n) not in self:
                return False
        return True


def union_cosets(
    seeds: Iterable[int], q: int, m: int, cap: int | None = None
) -> DefiningSet:
    """Union of the cyclotomic cosets of all seeds."""
    _check_cap(q, m, cap)
    members: set[int] = set()
    for s in seeds:
        _check_range(s, q, m)
        if s not in members:
            members.update(coset_of(s, q, m).elements)
    return DefiningSet.from_members(q, m, members, cap)
