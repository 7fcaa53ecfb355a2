import pytest

from cyclocode.counting import (
    CodeParams,
    admissible_pairs,
    class_sizes,
    closed_size_T,
    count_class,
    count_matrix_entries,
    count_pattern_words,
)
from cyclocode.errors import ParameterError


def test_code_params_validation():
    CodeParams(4, 3, 1, 2, 1)  # prime power q is fine
    with pytest.raises(ParameterError):
        CodeParams(6, 3, 1, 2, 1)  # not a prime power
    with pytest.raises(ParameterError):
        CodeParams(3, 0, 0, 1, 1)
    with pytest.raises(ParameterError):
        CodeParams(3, 3, 3, 1, 1)  # t > m-1
    with pytest.raises(ParameterError):
        CodeParams(3, 3, 1, 3, 1)  # a > q-1
    with pytest.raises(ParameterError):
        CodeParams(3, 3, 1, 1, 0)  # b < 1


def test_counting_regime_requires_b_le_a():
    p = CodeParams(4, 3, 1, 1, 2)
    with pytest.raises(ParameterError):
        closed_size_T(p)


def test_normalized_drops_a_when_t_is_max():
    p = CodeParams(5, 3, 2, 4, 2)
    assert p.normalized().a == 2
    # and the size is a-independent there: |T| = b*m + 1
    for a in range(2, 5):
        assert closed_size_T(CodeParams(5, 3, 2, a, 2)) == 2 * 3 + 1


def test_admissible_pairs_examples():
    assert admissible_pairs(4, 1) == [(1, 0), (2, 0), (0, 1)]
    assert admissible_pairs(1, 0) == [(1, 0)]
    assert admissible_pairs(10, 8) == [(1, 0), (0, 1)]


def test_admissible_pairs_constraint():
    for m, t in [(6, 0), (6, 2), (9, 3)]:
        pairs = admissible_pairs(m, t)
        assert len(set(pairs)) == len(pairs)
        for k, ell in pairs:
            assert (k, ell) != (0, 0)
            assert k * (t + 1) + ell * (t + 2) <= m


def test_count_pattern_words_examples():
    assert count_pattern_words(1, 0, 4, 1) == 4
    assert count_pattern_words(2, 0, 4, 1) == 2
    assert count_pattern_words(0, 1, 4, 1) == 4


def test_count_pattern_words_brute():
    # count length-m cyclic words over symbols {x, y, z, 0} with exactly k
    # blocks x0^t and ell blocks y0^{t+1}, rest z, by direct enumeration
    from itertools import product

    def brute(k, ell, m, t):
        total = 0
        for word in product("xyz0", repeat=m):
            kk = sum(
                1
                for i in range(m)
                if word[i] == "x"
                and all(word[(i + 1 + j) % m] == "0" for j in range(t))
            )
            ll = sum(
                1
                for i in range(m)
                if word[i] == "y"
                and all(word[(i + 1 + j) % m] == "0" for j in range(t + 1))
            )
            # zeros must all belong to the blocks; z fills the rest
            zeros = word.count("0")
            if (
                kk == k
                and ll == ell
                and word.count("x") == k
                and word.count("y") == ell
                and zeros == k * t + ell * (t + 1)
            ):
                total += 1
        return total

    for m, t in [(4, 1), (5, 1), (5, 2), (6, 1)]:
        for k, ell in admissible_pairs(m, t):
            assert count_pattern_words(k, ell, m, t) == brute(k, ell, m, t), (
                k, ell, m, t,
            )


def test_count_pattern_words_rejects_inadmissible():
    with pytest.raises(ParameterError):
        count_pattern_words(0, 0, 4, 1)
    with pytest.raises(ParameterError):
        count_pattern_words(3, 0, 4, 1)  # 3*2 > 4


def test_count_matrix_entries_worked_example():
    p = CodeParams(3, 4, 1, 2, 1)
    assert count_matrix_entries(1, 0, p) == 36
    assert count_matrix_entries(2, 0, p) == 2
    assert count_matrix_entries(0, 1, p) == 12


def test_count_class_worked_example():
    p = CodeParams(3, 4, 1, 2, 1)
    assert count_class(1, 0, p) == 32
    assert count_class(2, 0, p) == 2
    assert count_class(0, 1, p) == 12


def test_count_class_all_heads_word():
    assert count_class(3, 0, CodeParams(3, 3, 0, 1, 1)) == 1


def test_closed_size_examples():
    assert closed_size_T(CodeParams(3, 4, 1, 2, 1)) == 47
    assert closed_size_T(CodeParams(2, 4, 2, 1, 1)) == 9
    # t = m-1 collapses to b*m + 1
    assert closed_size_T(CodeParams(2, 5, 4, 1, 1)) == 6
    assert closed_size_T(CodeParams(5, 4, 3, 3, 3)) == 13


def test_forward_identity_round_trip():
    # reconstructing the matrix totals from the class sizes must be exact
    from math import comb

    for params in [
        CodeParams(3, 4, 1, 2, 1),
        CodeParams(5, 6, 1, 3, 2),
        CodeParams(4, 7, 2, 3, 1),
        CodeParams(2, 9, 3, 1, 1),
    ]:
        sizes = class_sizes(params)
        pairs = list(sizes)
        for r, s in pairs:
            forward = sum(
                comb(k, r) * comb(ell, s) * sizes[(k, ell)] for k, ell in pairs
            )
            assert forward == count_matrix_entries(r, s, params)


def test_class_sizes_match_census_small_grid():
    from cyclocode.oracle import brute_class_census

    for q, mmax in [(2, 6), (3, 4), (5, 3)]:
        for m in range(1, mmax + 1):
            for t in range(m):
                for a in range(1, q):
                    for b in range(1, a + 1):
                        p = CodeParams(q, m, t, a, b)
                        sizes = class_sizes(p)
                        census = brute_class_census(p)
                        assert set(census) <= set(sizes)
                        for kl, v in sizes.items():
                            assert census.get(kl, 0) == v, (p, kl)
