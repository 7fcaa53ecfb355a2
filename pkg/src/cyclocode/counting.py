"""Closed-form combinatorics for the defining set built from one digit word.

Everything here is exact integer arithmetic.  The driving object is the
parameter tuple (q, m, t, a, b) describing the word

    u = a ... a b 0 ... 0      (m-t-1 copies of a, one b, t zeros)

whose rotation orbits' descendants form the defining set T.  The counting
layer never materializes T: it computes |T| by classifying words by their
exact pattern-occurrence counts (k, ell), counting a relaxed family in
closed form, and inverting a two-parameter binomial transform.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb

from .errors import ConsistencyError, ParameterError, ZeroCodeError

__all__ = [
    "CodeParams",
    "AdmissiblePair",
    "admissible_pairs",
    "count_pattern_words",
    "count_matrix_entries",
    "count_class",
    "class_sizes",
    "closed_size_T",
]


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True  # n itself is prime


@dataclass(frozen=True)
class CodeParams:
    """Parameter tuple (q, m, t, a, b).

    q is a prime power >= 2, m >= 1, 0 <= t <= m-1, and 1 <= a, b <= q-1.
    The counting and dimension layers additionally require b <= a; the
    bound layer accepts a and b independently but needs m >= 2 and rejects
    the degenerate zero-code point a = b = q-1, t = 0.
    """

    q: int
    m: int
    t: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if not _is_prime_power(self.q):
            raise ParameterError(f"q must be a prime power >= 2, got {self.q}")
        if self.m < 1:
            raise ParameterError(f"m must be >= 1, got {self.m}")
        if not 0 <= self.t <= self.m - 1:
            raise ParameterError(f"need 0 <= t <= m-1, got t={self.t}, m={self.m}")
        for name in ("a", "b"):
            v = getattr(self, name)
            if not 1 <= v <= self.q - 1:
                raise ParameterError(
                    f"need 1 <= {name} <= q-1, got {name}={v}, q={self.q}"
                )

    @property
    def n(self) -> int:
        return self.q**self.m - 1

    @property
    def index_size(self) -> int:
        """Number of indices in [0, n], i.e. q^m."""
        return self.q**self.m

    @property
    def is_bch(self) -> bool:
        """With a = q-1 the cyclic code is the narrow-sense primitive BCH code
        of designed distance (b+1) q^{m-t-1}."""
        return self.a == self.q - 1

    @property
    def designed_distance(self) -> int:
        return (self.b + 1) * self.q ** (self.m - self.t - 1)

    @property
    def is_degenerate(self) -> bool:
        """True for the zero-code point: every index lands in T."""
        return self.a == self.b == self.q - 1 and self.t == 0

    def require_counting_regime(self) -> None:
        if self.b > self.a:
            raise ParameterError(
                f"counting and dimension formulas need b <= a, got a={self.a}, b={self.b}"
            )

    def require_bound_regime(self) -> None:
        if self.m < 2:
            raise ParameterError(f"dual-distance bounds need m >= 2, got m={self.m}")
        if self.is_degenerate:
            raise ZeroCodeError(
                "a = b = q-1 with t = 0 gives the zero code; no dual bound exists"
            )

    def normalized(self) -> "CodeParams":
        """With t = m-1 the word u has no a-digits, so a is immaterial;
        fix a = b to make results independent of the supplied a."""
        if self.t == self.m - 1 and self.a != self.b:
            return replace(self, a=self.b)
        return self

    def astuple(self) -> tuple[int, int, int, int, int]:
        return (self.q, self.m, self.t, self.a, self.b)


#: An admissible occurrence-count pair (k, ell).
AdmissiblePair = tuple[int, int]


def admissible_pairs(m: int, t: int) -> list[AdmissiblePair]:
    """All pairs (k, ell) != (0, 0) with k(t+1) + ell(t+2) <= m.

    Enumerated with ell ascending and k ascending within each ell, matching
    the order the occurrence classes are reported in.
    """
    if m < 1 or not 0 <= t <= m - 1:
        raise ParameterError(f"need 0 <= t <= m-1, got t={t}, m={m}")
    pairs: list[AdmissiblePair] = []
    ell = 0
    while ell * (t + 2) <= m:
        k = 0
        while k * (t + 1) + ell * (t + 2) <= m:
            if (k, ell) != (0, 0):
                pairs.append((k, ell))
            k += 1
        ell += 1
    return pairs


def _check_admissible(k: int, ell: int, m: int, t: int) -> None:
    if m < 1 or not 0 <= t <= m - 1:
        raise ParameterError(f"need 0 <= t <= m-1, got t={t}, m={m}")
    if k < 0 or ell < 0 or (k, ell) == (0, 0):
        raise ParameterError(f"(k, ell) = ({k}, {ell}) is not admissible")
    if k * (t + 1) + ell * (t + 2) > m:
        raise ParameterError(
            f"(k, ell) = ({k}, {ell}) violates k(t+1) + ell(t+2) <= {m}"
        )


def count_pattern_words(k: int, ell: int, m: int, t: int) -> int:
    """Number of length-m cyclic symbol words made of exactly k blocks x0^t,
    ell blocks y0^{t+1} and filler symbols z:

        m / (m - kt - ell(t+1)) * (m - kt - ell(t+1))! / (k! ell! (m - k(t+1) - ell(t+2))!)

    The rational prefactor always cancels; a non-integer result would be an
    internal error.
    """
    _check_admissible(k, ell, m, t)
    blocks = m - k * t - ell * (t + 1)  # block count after collapsing zero runs
    value = Fraction(m, blocks) * comb(blocks, k) * comb(blocks - k, ell)
    if value.denominator != 1:
        raise ConsistencyError(
            f"non-integral word count for (k, ell, m, t) = ({k}, {ell}, {m}, {t})"
        )
    return int(value)


def count_matrix_entries(r: int, s: int, params: CodeParams) -> int:
    """Total entry count A_{r,s} of the occurrence matrix: every pattern word
    with b^r (a-b)^s (a+1)^{m - r(t+1) - s(t+2)} digit assignments."""
    params.require_counting_regime()
    p = params.normalized()
    _check_admissible(r, s, p.m, p.t)
    free = p.m - r * (p.t + 1) - s * (p.t + 2)
    return (
        p.b**r
        * (p.a - p.b) ** s
        * (p.a + 1) ** free
        * count_pattern_words(r, s, p.m, p.t)
    )


def class_sizes(params: CodeParams) -> dict[AdmissiblePair, int]:
    """Exact size B_{k,ell} of every occurrence class, by binomial inversion:

        B_{k,ell} = sum_{(r,s)} (-1)^{r+s-k-ell} C(r,k) C(s,ell) A_{r,s}

    The forward identity A_{r,s} = sum C(k,r) C(ell,s) B_{k,ell} is re-checked
    after inversion; a failure would be an internal error.
    """
    params.require_counting_regime()
    p = params.normalized()
    pairs = admissible_pairs(p.m, p.t)
    a_vals = {rs: count_matrix_entries(rs[0], rs[1], p) for rs in pairs}
    sizes: dict[AdmissiblePair, int] = {}
    for k, ell in pairs:
        total = 0
        for (r, s), a_rs in a_vals.items():
            c = comb(r, k) * comb(s, ell)
            if c:
                total += (-1) ** (r + s - k - ell) * c * a_rs
        if total < 0:
            raise ConsistencyError(
                f"negative class size B_{{{k},{ell}}} = {total} at {p.astuple()}"
            )
        sizes[(k, ell)] = total
    for (r, s), a_rs in a_vals.items():
        forward = sum(
            comb(k, r) * comb(ell, s) * sizes[(k, ell)] for k, ell in pairs
        )
        if forward != a_rs:
            raise ConsistencyError(
                f"binomial inversion round trip failed at (r, s) = ({r}, {s})"
            )
    return sizes


def count_class(k: int, ell: int, params: CodeParams) -> int:
    """Exact number of words whose occurrence profile is exactly (k, ell)."""
    params.require_counting_regime()
    p = params.normalized()
    _check_admissible(k, ell, p.m, p.t)
    return class_sizes(p)[(k, ell)]


def closed_size_T(params: CodeParams) -> int:
    """|T| = 1 + sum of all class sizes (the +1 is the zero word)."""
    return sum(class_sizes(params).values()) + 1
