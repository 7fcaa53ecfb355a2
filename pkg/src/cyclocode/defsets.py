"""Materialized defining sets and the exact dimension formulas.

build_T constructs T through the digit-pattern characterization; the oracle
module rebuilds it straight from the definition (descendants of rotations)
so the two routes can be compared.  dual_set reflects and complements an
arbitrary set, while dual_set_pattern builds the dual defining set directly
from its own pattern characterization, again giving two independent routes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .cosets import DefiningSet, _check_cap, coset_of
from .counting import CodeParams, closed_size_T
from .errors import ConsistencyError, ParameterError, ZeroCodeError
from .qadic import _matches_exclusion, _profile_counts, expand, pattern_profile

__all__ = [
    "DimensionReport",
    "build_T",
    "descendant_closure",
    "dual_set",
    "dual_set_pattern",
    "bch_set",
    "dimension",
]


def _digit_odometer(q: int, m: int):
    """Yield (s, digits) for s = 0 .. q^m - 1; digits is reused in place."""
    digits = [0] * m
    yield 0, digits
    for s in range(1, q**m):
        i = 0
        while True:
            digits[i] += 1
            if digits[i] < q:
                break
            digits[i] = 0
            i += 1
        yield s, digits


def build_T(params: CodeParams, cap: int | None = None) -> DefiningSet:
    """T as {0} plus every value whose word has an occurrence (k, ell) != (0, 0)
    and all digits <= a."""
    params.require_counting_regime()
    p = params.normalized()
    q, m, t, a, b = p.astuple()
    size = _check_cap(q, m, cap)
    buf = bytearray((size + 7) // 8)
    buf[0] |= 1
    for s, digits in _digit_odometer(q, m):
        if s == 0:
            continue
        k, ell, ok = _profile_counts(digits, m, a, b, t)
        if ok and (k or ell):
            buf[s >> 3] |= 1 << (s & 7)
    return DefiningSet(q, m, int.from_bytes(buf, "little"), cap)


def descendant_closure(D: DefiningSet, cap: int | None = None) -> DefiningSet:
    """All values whose word is digitwise <= the word of some member of D.

    Computed by breadth-first digit decrements: the covering relation of the
    digitwise partial order is "decrease one digit by one", so repeated
    single-digit decrements reach exactly the descendants.
    """
    q, m = D.q, D.m
    _check_cap(q, m, cap)
    powers = [q**i for i in range(m)]
    seen = set(D)
    queue = deque(seen)
    while queue:
        s = queue.popleft()
        rest = s
        for i in range(m):
            rest, digit = divmod(rest, q)
            if digit:
                child = s - powers[i]
                if child not in seen:
                    seen.add(child)
                    queue.append(child)
    return DefiningSet.from_members(q, m, seen, cap)


def dual_set(D: DefiningSet) -> DefiningSet:
    """{s in [0, n] : n - s not in D} (reflection then complement)."""
    return D.reflect().complement()


def dual_set_pattern(params: CodeParams, cap: int | None = None) -> DefiningSet:
    """The dual defining set built directly from its pattern characterization:
    values whose word avoids the full-length forbidden pattern.

    a and b are independent here (no b <= a requirement).
    """
    q, m, t, a, b = params.astuple()
    size = _check_cap(q, m, cap)
    buf = bytearray((size + 7) // 8)
    for s, digits in _digit_odometer(q, m):
        if not _matches_exclusion(digits, q, m, a, b, t):
            buf[s >> 3] |= 1 << (s & 7)
    return DefiningSet(q, m, int.from_bytes(buf, "little"), cap)


def bch_set(q: int, m: int, delta: int, cap: int | None = None) -> DefiningSet:
    """Defining set of the narrow-sense primitive BCH code of designed
    distance delta: the union of the cosets of 1, ..., delta - 1."""
    n = q**m - 1
    if not 2 <= delta <= n:
        raise ParameterError(f"need 2 <= delta <= {n}, got {delta}")
    _check_cap(q, m, cap)
    members: set[int] = set()
    for s in range(1, delta):
        if s not in members:
            members.update(coset_of(s, q, m).elements)
    return DefiningSet.from_members(q, m, members, cap)


@dataclass(frozen=True)
class DimensionReport:
    """Dimension of the length-q^m extended code and its cyclic version
    (they coincide), with the BCH identification when a = q-1."""

    params: CodeParams
    size_T: int
    dim: int
    is_bch: bool
    delta: int | None

    def __post_init__(self) -> None:
        if self.dim != self.params.q**self.params.m - self.size_T:
            raise ConsistencyError("dimension must equal q^m - |T|")


def dimension(params: CodeParams) -> DimensionReport:
    """dim = q^m - |T|, by the closed form; flags the BCH case a = q-1 with
    designed distance (b+1) q^{m-t-1}.

    The formula presumes n is not in T, which fails only at the degenerate
    zero-code point; that point is rejected explicitly.
    """
    params.require_counting_regime()
    p = params.normalized()
    if p.is_degenerate:
        raise ZeroCodeError(
            "a = b = q-1 with t = 0 makes T the whole index range (zero code)"
        )
    # n has the all-(q-1) word; it must sit outside T here.
    top = expand(p.n, p.q, p.m)
    prof = pattern_profile(top, p.a, p.b, p.t)
    if prof.digits_ok and (prof.k, prof.ell) != (0, 0):
        raise ConsistencyError(f"n = {p.n} unexpectedly belongs to T at {p.astuple()}")
    size = closed_size_T(p)
    return DimensionReport(
        params=p,
        size_T=size,
        dim=p.index_size - size,
        is_bch=p.is_bch,
        delta=p.designed_distance if p.is_bch else None,
    )
