import random

import pytest

from cyclocode.cosets import coset_of, union_cosets
from cyclocode.errors import ParameterError, ResourceLimitError
from cyclocode.galois import (
    _EXT_MODULI,
    SUPPORTED_Q,
    Polynomial,
    factorize,
    field_make,
    generator_polynomial,
    has_builtin_modulus,
    minimal_polynomial,
    poly_divmod,
    poly_mul,
    syndrome,
)


def test_field_make_gf16():
    F = field_make(2, 4)
    assert F.modulus == (1, 1, 0, 0, 1)  # x^4 + x + 1
    assert F.alpha == 2  # the class of x
    order = 1
    x = F.alpha
    while x != 1:
        x = F.mul(x, F.alpha)
        order += 1
    assert order == 15


def test_field_make_gf81_order():
    F = field_make(3, 4)
    seen = set()
    x = 1
    for _ in range(80):
        x = F.mul(x, F.alpha)
        seen.add(x)
    assert len(seen) == 80 and x == 1


def test_field_make_gf16_over_gf4():
    F = field_make(4, 2)
    assert F.base.q == 4 and F.order == 16
    # Frobenius x -> x^4 must have order exactly 2
    for x in range(16):
        assert F.pow(F.pow(x, 4), 4) == x
    assert any(F.pow(x, 4) != x for x in range(16))


def test_field_make_rejects_unsupported():
    with pytest.raises(ParameterError):
        field_make(6, 2)
    with pytest.raises(ParameterError):
        field_make(2, 25)  # no built-in modulus that far out
    with pytest.raises(ResourceLimitError):
        field_make(2, 33, table_cap=1)


def test_every_builtin_modulus_is_primitive():
    # alpha = class of x must have order exactly q^m - 1
    for (q, m), _mod in sorted(_EXT_MODULI.items()):
        F = field_make(q, m, table_cap=1)  # force polynomial arithmetic
        n = F.n
        assert F.pow(F.alpha, n) == 1, (q, m)
        for r in factorize(n):
            assert F.pow(F.alpha, n // r) != 1, (q, m, r)


def test_exp_log_round_trip():
    for q, m in [(2, 6), (3, 4), (4, 3), (5, 3), (9, 2)]:
        F = field_make(q, m)
        for x in range(1, F.order):
            assert F.exp(F.log(x)) == x
        for i in range(F.n):
            assert F.log(F.exp(i)) == i


def test_frobenius_power_is_identity_after_m_steps():
    for q, m in [(2, 5), (3, 3), (4, 2), (8, 2)]:
        F = field_make(q, m)
        for x in range(F.order):
            y = x
            for _ in range(m):
                y = F.pow(y, q)
            assert y == x


def test_minimal_polynomial_examples():
    F = field_make(2, 4)
    assert minimal_polynomial(F, 1).coeffs == (1, 1, 0, 0, 1)
    assert minimal_polynomial(F, 5).coeffs == (1, 1, 1)
    assert minimal_polynomial(F, 0).coeffs == (1, 1)  # x - 1 over GF(2)
    F3 = field_make(3, 2)
    assert minimal_polynomial(F3, 0).coeffs == (2, 1)  # x - 1 = x + 2


def test_minimal_polynomial_degree_is_coset_size():
    for q, m in [(2, 6), (3, 4), (5, 2)]:
        F = field_make(q, m)
        for s in range(F.n):
            assert minimal_polynomial(F, s).degree == coset_of(s, q, m).size


def test_minimal_polynomials_multiply_to_xn_minus_1():
    for q, m in [(2, 5), (3, 3), (4, 2)]:
        F = field_make(q, m)
        leaders = sorted({coset_of(s, q, m).leader for s in range(F.n)})
        prod = (1,)
        for s in leaders:
            prod = poly_mul(F.base, prod, minimal_polynomial(F, s).coeffs)
        expected = [F.base.neg(1)] + [0] * (F.n - 1) + [1]
        assert list(prod) == expected


def test_generator_polynomial_examples():
    F = field_make(2, 4)
    g = generator_polynomial(F, range(1, 15))
    assert g.coeffs == tuple([1] * 15)
    assert generator_polynomial(F, []).coeffs == (1,)
    g = generator_polynomial(F, coset_of(1, 2, 4).elements)
    assert g.coeffs == (1, 1, 0, 0, 1)


def test_generator_polynomial_degree_matches_cardinality():
    rng = random.Random(11)
    for q, m in [(2, 5), (3, 4)]:
        F = field_make(q, m)
        for _ in range(8):
            seeds = [rng.randrange(1, F.n) for _ in range(3)]
            D = union_cosets(seeds, q, m)
            exps = [s for s in D if 0 < s < F.n]
            assert generator_polynomial(F, exps).degree == len(exps)


def test_generator_polynomial_rejects_open_sets():
    F = field_make(2, 4)
    with pytest.raises(ParameterError):
        generator_polynomial(F, [1, 2, 4])  # missing 8
    with pytest.raises(ParameterError):
        generator_polynomial(F, [0, 1, 2, 4, 8])  # 0 out of range


def _random_codeword(F, g, rng):
    """Random multiple of g as a length-n coefficient vector."""
    k = F.n - (len(g) - 1)
    msg = [rng.randrange(F.base.q) for _ in range(k)]
    word = [0] * F.n
    for i, c in enumerate(msg):
        if c:
            for j, gc in enumerate(g):
                word[i + j] = F.base.add(word[i + j], F.base.mul(c, gc))
    return word


def test_syndrome_vanishes_on_defining_set():
    rng = random.Random(5)
    for q, m in [(2, 4), (3, 3)]:
        F = field_make(q, m)
        D = union_cosets([1, 2], q, m)
        exps = [s for s in D if 0 < s < F.n]
        g = generator_polynomial(F, exps).coeffs
        for _ in range(10):
            word = _random_codeword(F, g, rng)
            for s in exps:
                assert syndrome(F, word, s) == 0
            # and the Frobenius law rho_{qs} = rho_s^q on arbitrary exponents
            for s in range(F.n):
                lhs = syndrome(F, word, (s * q) % F.n)
                assert lhs == F.pow(syndrome(F, word, s), q)


def test_syndrome_all_ones_and_extension_position():
    F = field_make(2, 4)
    ones = [1] * 15
    assert syndrome(F, ones, 0) == 1  # 15 ones over GF(2)
    extended = [1] + ones
    assert syndrome(F, extended, 0) == 0  # the zero position counts only at s=0
    assert syndrome(F, extended, 1) == syndrome(F, ones, 1)
    with pytest.raises(ParameterError):
        syndrome(F, [0] * 14, 1)


def test_polynomial_type():
    p = Polynomial((1, 0, 1))
    assert p.degree == 2
    assert Polynomial(()).degree == -1
    with pytest.raises(ParameterError):
        Polynomial((1, 0))
    assert str(Polynomial((2, 1))) == "2 + x"


def test_poly_divmod_round_trip():
    rng = random.Random(3)
    F = field_make(3, 2)
    B = F.base
    for _ in range(20):
        f = tuple(rng.randrange(3) for _ in range(6))
        g = tuple(rng.randrange(3) for _ in range(3)) + (1,)
        quot, rem = poly_divmod(B, f, g)
        recon = list(poly_mul(B, quot, g))
        recon += [0] * (len(f) - len(recon))
        for i, c in enumerate(rem):
            recon[i] = B.add(recon[i], c)
        while recon and recon[-1] == 0:
            recon.pop()
        expect = list(f)
        while expect and expect[-1] == 0:
            expect.pop()
        assert recon == expect


def test_supported_q_and_builtin_coverage():
    assert {q for q, _ in _EXT_MODULI} <= set(SUPPORTED_Q)
    assert has_builtin_modulus(2, 16)
    assert has_builtin_modulus(5, 1)
    assert not has_builtin_modulus(2, 40)
    assert not has_builtin_modulus(6, 2)
