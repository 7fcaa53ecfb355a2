import pytest

from cyclocode.cosets import DefiningSet, union_cosets
from cyclocode.counting import CodeParams, closed_size_T
from cyclocode.defsets import (
    bch_set,
    build_T,
    descendant_closure,
    dimension,
    dual_set,
    dual_set_pattern,
)
from cyclocode.errors import ParameterError, ResourceLimitError, ZeroCodeError

T_LISTING_3_4_1_2_1 = [
    0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19,
    21, 24, 27, 28, 29, 30, 31, 32, 33, 36, 37, 39, 42, 45, 46, 48, 51, 54,
    55, 56, 57, 58, 59, 63, 64, 72, 73,
]


def test_build_T_examples():
    assert build_T(CodeParams(3, 4, 1, 2, 1)).members() == T_LISTING_3_4_1_2_1
    assert build_T(CodeParams(2, 4, 1, 1, 1)).members() == list(range(15))
    assert build_T(CodeParams(2, 1, 0, 1, 1)).members() == [0, 1]


def test_build_T_respects_cap():
    with pytest.raises(ResourceLimitError):
        build_T(CodeParams(2, 10, 1, 1, 1), cap=512)


def test_descendant_closure_examples():
    for params in [CodeParams(3, 4, 1, 2, 1), CodeParams(2, 5, 2, 1, 1)]:
        T = build_T(params)
        assert descendant_closure(T) == T
    zero_only = DefiningSet.from_members(3, 3, [0])
    assert descendant_closure(zero_only) == zero_only
    top_only = DefiningSet.from_members(3, 3, [26])
    assert descendant_closure(top_only) == DefiningSet.full(3, 3)


def test_descendant_closure_matches_naive():
    from cyclocode.qadic import dominates, expand

    q, m = 3, 3
    D = DefiningSet.from_members(q, m, [5, 21])
    naive = {
        s
        for s in range(q**m)
        for d in D
        if dominates(expand(d, q, m), expand(s, q, m))
    }
    assert descendant_closure(D).members() == sorted(naive)


def test_dual_set_examples():
    D = build_T(CodeParams(2, 4, 1, 1, 1))  # [0, 14]
    assert dual_set(D).members() == [0]
    assert dual_set(dual_set(D)) == D
    assert dual_set(DefiningSet.empty(2, 4)) == DefiningSet.full(2, 4)


def test_dual_set_pattern_examples():
    p = CodeParams(3, 4, 1, 2, 1)
    dp = dual_set_pattern(p)
    assert dp == dual_set(build_T(p))
    assert all(s in dp for s in range(7))
    assert 7 not in dp
    assert dual_set_pattern(CodeParams(2, 4, 1, 1, 1)).members() == [0]


def test_dual_set_pattern_matches_reflection_on_small_grid():
    for q, mmax in [(2, 6), (3, 4), (4, 3), (5, 2)]:
        for m in range(1, mmax + 1):
            for t in range(m):
                for a in range(1, q):
                    for b in range(1, a + 1):
                        p = CodeParams(q, m, t, a, b)
                        assert dual_set_pattern(p) == dual_set(build_T(p)), p


def test_bch_set_examples():
    assert bch_set(2, 4, 8).members() == list(range(1, 15))
    assert bch_set(2, 4, 2).members() == [1, 2, 4, 8]
    # delta = 2 always gives the coset of 1
    for q, m in [(2, 4), (3, 3), (5, 2)]:
        from cyclocode.cosets import coset_of

        assert bch_set(q, m, 2).members() == list(coset_of(1, q, m).elements)
    with pytest.raises(ParameterError):
        bch_set(2, 4, 16)
    with pytest.raises(ParameterError):
        bch_set(2, 4, 1)


def test_bch_identity_when_a_is_top():
    # with a = q-1: T minus {0} is exactly the BCH defining set
    for q, mmax in [(2, 6), (3, 4), (5, 3)]:
        for m in range(1, mmax + 1):
            for t in range(m):
                for b in range(1, q):
                    p = CodeParams(q, m, t, q - 1, b)
                    if p.is_degenerate:
                        continue
                    T = build_T(p)
                    zero = DefiningSet.from_members(q, m, [0])
                    assert T.difference(zero) == bch_set(q, m, p.designed_distance), p


def test_dimension_examples():
    rep = dimension(CodeParams(3, 4, 1, 2, 1))
    assert (rep.size_T, rep.dim, rep.is_bch, rep.delta) == (47, 34, True, 18)
    rep = dimension(CodeParams(2, 4, 2, 1, 1))
    assert (rep.dim, rep.delta) == (7, 4)
    rep = dimension(CodeParams(2, 4, 1, 1, 1))
    assert (rep.dim, rep.delta) == (1, 8)
    # a < q-1 is not a BCH point
    rep = dimension(CodeParams(3, 3, 1, 1, 1))
    assert not rep.is_bch and rep.delta is None


def test_dimension_rejects_zero_code():
    with pytest.raises(ZeroCodeError):
        dimension(CodeParams(3, 3, 0, 2, 2))


def test_dimension_matches_materialized_sets():
    for q, mmax in [(2, 7), (3, 4), (4, 3)]:
        for m in range(1, mmax + 1):
            for t in range(m):
                for a in range(1, q):
                    for b in range(1, a + 1):
                        p = CodeParams(q, m, t, a, b)
                        if p.is_degenerate:
                            continue
                        assert dimension(p).dim == p.index_size - len(build_T(p)), p


def test_union_cosets_subsumes_T():
    # T is rotation-closed, so re-seeding from its members is a no-op
    p = CodeParams(3, 4, 1, 2, 1)
    T = build_T(p)
    assert union_cosets(T.members(), 3, 4) == T
    assert closed_size_T(p) == len(T)
