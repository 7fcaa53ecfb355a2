"""Finite fields GF(q) and GF(q^m), minimal and generator polynomials, and
the evaluation map underlying all code-level verification.

Field elements are integers: an element of GF(p^e) encodes its coefficient
vector over GF(p) in base p (lowest degree first), and an element of
GF(q^m) encodes its coefficient vector over GF(q) in base q.  With this
encoding the subfield GF(q) inside GF(q^m) is exactly the encodings below
q, and codeword symbols embed without translation.

Moduli come from a fixed built-in table: for each supported (q, m) the
lexicographically smallest monic degree-m polynomial over GF(q) (ordered by
the base-q encoding of its non-leading coefficients) for which the class of
x has full multiplicative order q^m - 1.  The table is frozen in source so
fields are identical across runs and platforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cosets import DefiningSet
from .errors import ConsistencyError, ParameterError, ResourceLimitError

__all__ = [
    "SUPPORTED_Q",
    "BaseField",
    "FieldContext",
    "Polynomial",
    "field_make",
    "minimal_polynomial",
    "generator_polynomial",
    "syndrome",
]

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27)

MAX_FIELD_ORDER = 1 << 32

# exp/log tables are built when the field order is at most this.
DEFAULT_TABLE_CAP = 1 << 20

# q = p^e with e > 1: defining polynomial of GF(q) over GF(p), coefficients
# lowest degree first, monic.  Smallest primitive choice per the module rule.
_BASE_MODULI: dict[int, tuple[int, tuple[int, ...]]] = {
    4: (2, (1, 1, 1)),
    8: (2, (1, 1, 0, 1)),
    9: (3, (2, 1, 1)),
    16: (2, (1, 1, 0, 0, 1)),
    25: (5, (2, 1, 1)),
    27: (3, (1, 2, 0, 1)),
}

# (q, m) -> defining polynomial of GF(q^m) over GF(q), coefficients lowest
# degree first (base-field encodings), monic, x primitive.
_EXT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 14): (1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 15): (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 16): (1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 17): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 18): (1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 19): (1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 20): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 7): (1, 2, 1, 0, 0, 0, 0, 1),
    (3, 8): (2, 0, 0, 1, 0, 0, 0, 0, 1),
    (3, 9): (1, 0, 1, 2, 0, 0, 0, 0, 0, 1),
    (3, 10): (2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (3, 11): (1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 12): (2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 1),
    (4, 2): (2, 1, 1),
    (4, 3): (2, 1, 1, 1),
    (4, 4): (3, 2, 1, 0, 1),
    (4, 5): (2, 1, 0, 0, 0, 1),
    (4, 6): (2, 1, 1, 0, 0, 0, 1),
    (4, 7): (3, 2, 1, 0, 0, 0, 0, 1),
    (4, 8): (2, 1, 0, 1, 0, 0, 0, 0, 1),
    (4, 9): (2, 1, 1, 0, 0, 0, 0, 0, 0, 1),
    (4, 10): (3, 0, 2, 1, 0, 0, 0, 0, 0, 0, 1),
    (5, 2): (2, 1, 1),
    (5, 3): (2, 3, 0, 1),
    (5, 4): (2, 2, 1, 0, 1),
    (5, 5): (2, 4, 0, 0, 0, 1),
    (5, 6): (2, 1, 0, 0, 0, 0, 1),
    (5, 7): (2, 3, 0, 0, 0, 0, 0, 1),
    (5, 8): (3, 2, 1, 0, 0, 0, 0, 0, 1),
    (5, 9): (3, 2, 1, 0, 0, 0, 0, 0, 0, 1),
    (5, 10): (3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    (7, 2): (3, 1, 1),
    (7, 3): (2, 3, 0, 1),
    (7, 4): (5, 3, 1, 0, 1),
    (7, 5): (4, 1, 0, 0, 0, 1),
    (7, 6): (5, 1, 3, 0, 0, 0, 1),
    (7, 7): (2, 6, 0, 0, 0, 0, 0, 1),
    (8, 2): (3, 1, 1),
    (8, 3): (2, 1, 0, 1),
    (8, 4): (3, 1, 0, 0, 1),
    (8, 5): (3, 1, 1, 0, 0, 1),
    (8, 6): (2, 1, 0, 0, 0, 0, 1),
    (9, 2): (4, 1, 1),
    (9, 3): (3, 1, 0, 1),
    (9, 4): (3, 1, 0, 0, 1),
    (9, 5): (4, 0, 1, 0, 0, 1),
    (9, 6): (6, 3, 1, 0, 0, 0, 1),
    (11, 2): (7, 1, 1),
    (11, 3): (4, 1, 0, 1),
    (11, 4): (2, 1, 0, 0, 1),
    (11, 5): (4, 1, 1, 0, 0, 1),
    (13, 2): (2, 1, 1),
    (13, 3): (6, 1, 0, 1),
    (13, 4): (2, 1, 1, 0, 1),
    (13, 5): (2, 4, 0, 0, 0, 1),
    (16, 2): (9, 1, 1),
    (16, 3): (9, 1, 0, 1),
    (16, 4): (4, 2, 1, 0, 1),
    (25, 2): (5, 1, 1),
    (25, 3): (10, 1, 0, 1),
    (25, 4): (5, 1, 0, 0, 1),
    (27, 2): (10, 1, 1),
    (27, 3): (9, 2, 0, 1),
    (27, 4): (10, 1, 0, 0, 1),
}


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (fine for n < 2^64-ish)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class BaseField:
    """GF(q) with full multiplication and inverse tables (q <= 27 here)."""

    def __init__(self, q: int):
        if q not in SUPPORTED_Q:
            raise ParameterError(f"unsupported field order {q}; supported: {SUPPORTED_Q}")
        if q in _BASE_MODULI:
            self.p, self.modulus = _BASE_MODULI[q]
        else:
            self.p, self.modulus = q, None
        self.q = q
        self.e = 1 if self.modulus is None else len(self.modulus) - 1
        self._mul = [[self._mul_raw(x, y) for y in range(q)] for x in range(q)]
        self._inv = [0] * q
        for x in range(1, q):
            for y in range(1, q):
                if self._mul[x][y] == 1:
                    self._inv[x] = y
                    break
            else:
                raise ConsistencyError(f"element {x} of GF({q}) has no inverse")

    def _digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.e):
            x, r = divmod(x, self.p)
            out.append(r)
        return out

    def _value(self, digits: Sequence[int]) -> int:
        v = 0
        for d in reversed(digits):
            v = v * self.p + d
        return v

    def add(self, x: int, y: int) -> int:
        if self.e == 1:
            return (x + y) % self.p
        return self._value(
            [(u + v) % self.p for u, v in zip(self._digits(x), self._digits(y))]
        )

    def neg(self, x: int) -> int:
        if self.e == 1:
            return -x % self.p
        return self._value([-d % self.p for d in self._digits(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def _mul_raw(self, x: int, y: int) -> int:
        if self.e == 1:
            return (x * y) % self.p
        a, b = self._digits(x), self._digits(y)
        prod = [0] * (2 * self.e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % self.p
        mod = self.modulus
        for i in range(len(prod) - 1, self.e - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(self.e):
                    prod[i - self.e + j] = (prod[i - self.e + j] - c * mod[j]) % self.p
        return self._value(prod[: self.e])

    def mul(self, x: int, y: int) -> int:
        return self._mul[x][y]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._inv[x]

    def __repr__(self) -> str:
        return f"BaseField(q={self.q})"


@dataclass(frozen=True)
class Polynomial:
    """Polynomial over a base field, coefficients lowest degree first.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ParameterError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{'' if c == 1 else c}x")
            else:
                terms.append(f"{'' if c == 1 else c}x^{i}")
        return " + ".join(terms)


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_mul(base: BaseField, f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            row = base._mul[a]
            for j, b in enumerate(g):
                if b:
                    out[i + j] = base.add(out[i + j], row[b])
    return _trim(out)


def poly_divmod(
    base: BaseField, f: Sequence[int], g: Sequence[int]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    dg = len(g) - 1
    inv_lead = base.inv(g[-1])
    quot = [0] * max(0, len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c:
            factor = base.mul(c, inv_lead)
            quot[i - dg] = factor
            for j in range(dg + 1):
                rem[i - dg + j] = base.sub(rem[i - dg + j], base.mul(factor, g[j]))
    return _trim(quot), _trim(rem)


class FieldContext:
    """GF(q^m) over GF(q) with a fixed primitive element.

    Elements are integers in [0, q^m): base-q encodings of coefficient
    vectors over GF(q).  When the field order fits under the table cap,
    exp/log tables back multiplication; otherwise multiplication falls back
    to polynomial arithmetic modulo the defining polynomial.
    """

    def __init__(self, base: BaseField, m: int, modulus: tuple[int, ...], table_cap: int):
        self.base = base
        self.q = base.q
        self.m = m
        self.order = self.q**m
        self.n = self.order - 1
        self.modulus = modulus
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self.alpha = self._find_alpha()
        if self.order <= table_cap:
            self._build_tables()

    # -- representation ------------------------------------------------

    def coeffs(self, x: int) -> list[int]:
        out = []
        for _ in range(self.m):
            x, r = divmod(x, self.q)
            out.append(r)
        return out

    def from_coeffs(self, digits: Sequence[int]) -> int:
        v = 0
        for d in reversed(digits):
            v = v * self.q + d
        return v

    # -- arithmetic ------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.m == 1:
            return self.base.add(x, y)
        B = self.base
        return self.from_coeffs(
            [B.add(u, v) for u, v in zip(self.coeffs(x), self.coeffs(y))]
        )

    def neg(self, x: int) -> int:
        if self.m == 1:
            return self.base.neg(x)
        B = self.base
        return self.from_coeffs([B.neg(d) for d in self.coeffs(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def _mul_poly(self, x: int, y: int) -> int:
        if self.m == 1:
            return self.base.mul(x, y)
        B = self.base
        a, b = self.coeffs(x), self.coeffs(y)
        prod = [0] * (2 * self.m - 1)
        for i, ai in enumerate(a):
            if ai:
                row = B._mul[ai]
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] = B.add(prod[i + j], row[bj])
        mod = self.modulus
        for i in range(len(prod) - 1, self.m - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(self.m):
                    prod[i - self.m + j] = B.sub(prod[i - self.m + j], B.mul(c, mod[j]))
        return self.from_coeffs(prod[: self.m])

    def mul(self, x: int, y: int) -> int:
        if self._exp is not None:
            if x == 0 or y == 0:
                return 0
            return self._exp[(self._log[x] + self._log[y]) % self.n]
        return self._mul_poly(x, y)

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self._exp is not None:
            return self._exp[(self.n - self._log[x]) % self.n]
        return self.pow(x, self.n - 1)

    def pow(self, x: int, k: int) -> int:
        if self._exp is not None and x != 0:
            return self._exp[(self._log[x] * k) % self.n]
        if k < 0:
            return self.pow(self.inv(x), -k)
        r = 1
        while k:
            if k & 1:
                r = self._mul_poly(r, x)
            x = self._mul_poly(x, x)
            k >>= 1
        return r

    def exp(self, i: int) -> int:
        """alpha^i (i reduced mod n)."""
        if self._exp is not None:
            return self._exp[i % self.n]
        return self.pow(self.alpha, i % self.n)

    def log(self, x: int) -> int:
        if x == 0:
            raise ValueError("zero has no discrete log")
        if self._log is not None:
            return self._log[x]
        # no table: fall back to a scan (only sensible for small orders)
        y = 1
        for i in range(self.n):
            if y == x:
                return i
            y = self._mul_poly(y, self.alpha)
        raise ConsistencyError("element not generated by alpha")

    # -- construction helpers ---------------------------------------------

    def _order_of(self, x: int) -> int | None:
        if self.pow(x, self.n) != 1:
            return None
        o = self.n
        for r in factorize(self.n):
            while o % r == 0 and self.pow(x, o // r) == 1:
                o //= r
        return o

    def _find_alpha(self) -> int:
        if self.m == 1:
            for g in range(2, self.order):
                if self._order_of(g) == self.n:
                    return g
            if self.n == 1:
                return 1
            raise ConsistencyError(f"no generator found in GF({self.q})")
        # the table guarantees the class of x is primitive
        x = self.q
        if self._order_of(x) != self.n:
            raise ConsistencyError(
                f"built-in modulus for ({self.q}, {self.m}) is not primitive"
            )
        return x

    def _build_tables(self) -> None:
        exp = [1] * self.n
        acc = 1
        for i in range(1, self.n):
            acc = self._mul_poly(acc, self.alpha)
            exp[i] = acc
        if self._mul_poly(acc, self.alpha) != 1:
            raise ConsistencyError("exp table does not close at order n")
        log = [0] * self.order
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

    def __repr__(self) -> str:
        return f"FieldContext(q={self.q}, m={self.m}, order={self.order})"


def has_builtin_modulus(q: int, m: int) -> bool:
    """True when field_make(q, m) can be satisfied from the built-in table."""
    return q in SUPPORTED_Q and (m == 1 or (q, m) in _EXT_MODULI)


def field_make(q: int, m: int, table_cap: int = DEFAULT_TABLE_CAP) -> FieldContext:
    """Deterministic GF(q^m): modulus from the built-in table, alpha the
    smallest-valued generator (the class of x for m >= 2)."""
    if q not in SUPPORTED_Q:
        raise ParameterError(f"unsupported field order {q}; supported: {SUPPORTED_Q}")
    if m < 1:
        raise ParameterError(f"extension degree must be >= 1, got {m}")
    if q**m > MAX_FIELD_ORDER:
        raise ResourceLimitError(f"field order {q**m} exceeds {MAX_FIELD_ORDER}")
    base = BaseField(q)
    if m == 1:
        # GF(q) itself; modulus x - 1 is a placeholder, never used by m=1 paths.
        return FieldContext(base, 1, (base.neg(1), 1), table_cap)
    try:
        modulus = _EXT_MODULI[(q, m)]
    except KeyError:
        raise ParameterError(
            f"no built-in defining polynomial for GF({q}^{m})"
        ) from None
    return FieldContext(base, m, modulus, table_cap)


def minimal_polynomial(field: FieldContext, s: int) -> Polynomial:
    """Minimal polynomial of alpha^s over GF(q); degree = coset size of s."""
    if not 0 <= s <= field.n - 1:
        raise ParameterError(f"exponent {s} out of range [0, {field.n - 1}]")
    if s == 0:
        return Polynomial((field.base.neg(1), 1))  # x - 1
    orbit = []
    c = s
    while True:
        orbit.append(c)
        c = (c * field.q) % field.n
        if c == s:
            break
    # product of (x - alpha^j) over the orbit, in GF(q^m)[x]
    poly = [1]
    for j in orbit:
        root = field.exp(j)
        nxt = [0] * (len(poly) + 1)
        for i, ci in enumerate(poly):
            if ci:
                nxt[i + 1] = field.add(nxt[i + 1], ci)
                nxt[i] = field.add(nxt[i], field.mul(field.neg(root), ci))
        poly = nxt
    for c in poly:
        if c >= field.q:
            raise ConsistencyError("minimal polynomial has a coefficient outside GF(q)")
    return Polynomial(tuple(poly))


def _as_exponents(D: "DefiningSet | Iterable[int]") -> list[int]:
    if isinstance(D, DefiningSet):
        return D.members()
    return sorted(set(D))


def generator_polynomial(field: FieldContext, D: "DefiningSet | Iterable[int]") -> Polynomial:
    """Product of the minimal polynomials over the coset leaders of D.

    D must be a rotation-closed subset of [1, n-1]; the degree of the result
    then equals |D|.
    """
    exps = _as_exponents(D)
    n, q = field.n, field.q
    for s in exps:
        if not 1 <= s <= n - 1:
            raise ParameterError(f"exponent {s} outside [1, {n - 1}]")
    expset = set(exps)
    for s in exps:
        if (s * q) % n not in expset:
            raise ParameterError(f"defining set is not rotation-closed at {s}")
    leaders = set()
    for s in exps:
        orbit = []
        c = s
        while True:
            orbit.append(c)
            c = (c * q) % n
            if c == s:
                break
        leaders.add(min(orbit))
    g: tuple[int, ...] = (1,)
    for s in sorted(leaders):
        g = poly_mul(field.base, g, minimal_polynomial(field, s).coeffs)
    poly = Polynomial(g)
    if poly.degree != len(exps):
        raise ConsistencyError("generator degree must equal the defining-set size")
    return poly


def syndrome(field: FieldContext, codeword: Sequence[int], s: int) -> int:
    """Evaluation sum(c_g g^s) over the code's support.

    A length-n codeword is cyclic, coordinate i belonging to alpha^i.  A
    length-(n+1) codeword is extended: coordinate 0 is the zero-element
    position, contributing c_0 only at s = 0 (convention 0^0 = 1), and
    coordinate 1 + i belongs to alpha^i.
    """
    n = field.n
    if not 0 <= s <= n - 1:
        raise ParameterError(f"exponent {s} out of range [0, {n - 1}]")
    if len(codeword) == n:
        cyclic = codeword
        total = 0
    elif len(codeword) == n + 1:
        cyclic = codeword[1:]
        total = codeword[0] if s == 0 else 0
    else:
        raise ParameterError(
            f"codeword length {len(codeword)} is neither n = {n} nor n + 1"
        )
    for i, c in enumerate(cyclic):
        if c:
            total = field.add(total, field.mul(c, field.exp(i * s)))
    return total
