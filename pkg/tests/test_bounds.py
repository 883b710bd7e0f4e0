import pytest

from oracles import dilated_sum
from sumsetlab import bounds
from sumsetlab.core_sets import make_set


def test_chs_and_factorial_examples():
    assert bounds.chs_bound(4, 5) == 19
    assert all(bounds.chs_bound(4, n) == 5 * n - 6 for n in range(1, 101))
    assert bounds.chs_bound(5, 10) == 51
    assert bounds.chs_bound(2, 4) == 10
    assert bounds.factorial_bound(4, 10) == 26
    assert bounds.factorial_bound(2, 5) == 13
    assert bounds.factorial_bound(3, 1) == -2
    with pytest.raises(OverflowError):
        bounds.factorial_bound(21, 5)
    with pytest.raises(ValueError):
        bounds.chs_bound(1, 5)


def test_elementary_and_threshold():
    assert bounds.elementary_bound(6, 3, 6) == 21
    assert bounds.elementary_bound(9, 4, 1) == 9
    assert bounds.elementary_bound(4, 4, 4) == 16
    assert [bounds.threshold(k) for k in (2, 3, 4)] == [2, 24, 216]
    with pytest.raises(OverflowError):
        bounds.threshold(30)


def test_classify():
    assert bounds.classify_k(8) == bounds.PRIME_POWER
    assert bounds.classify_k(6) == bounds.SEMIPRIME
    assert bounds.classify_k(12) == bounds.OTHER
    assert bounds.classify_k(7) == bounds.PRIME
    assert bounds.semiprime_factors(15) == (3, 5)
    assert bounds.semiprime_factors(12) is None
    assert bounds.is_prime_power(9) and not bounds.is_prime_power(10)


def test_bound_report():
    r = bounds.bound_report(4, 5)
    assert (r.chs_bound, r.factorial_bound, r.threshold, r.k_class) == (19, 1, 216, "prime_power")
    assert r.theorem_covers
    assert r.elementary_bound(3, 2) == 8
    r = bounds.bound_report(6, 100)
    assert r.chs_bound == 688 and r.k_class == "semiprime" and not r.theorem_covers
    assert bounds.bound_report(30, 3).factorial_bound is None


def test_extremal_options():
    assert bounds.extremal_h_options(4) == {2, 3}
    assert bounds.extremal_h_options(3) == {2}
    assert bounds.extremal_h_options(2) == {1, 2}


def test_max_deficiency_is_the_chs_constant():
    for k in range(2, 65):
        best = max(bounds.deficiency(k, h) for h in range(1, k + 1))
        assert best == -(-k * (k + 2) // 4)
        assert {h for h in range(1, k + 1) if bounds.deficiency(k, h) == best} == bounds.extremal_h_options(k)


@pytest.mark.parametrize(
    "k,n,h,elements,value",
    [
        (4, 1, 3, [0, 1, 2, 4, 5, 6], 24),
        (3, 1, 2, [0, 1, 3, 4], 12),
        (4, 2, 2, [0, 1, 4, 5, 8, 9], 24),
    ],
)
def test_build_extremal_examples(k, n, h, elements, value):
    fam = bounds.build_extremal(k, n, h)
    assert fam.set == make_set(elements)
    assert len(dilated_sum(fam.set, k, fam.set)) == value == bounds.chs_bound(k, len(elements))
    r = bounds.check_extremal_equality(fam)
    assert r.equal and r.matches_chs


def test_extremal_generic_h_and_regime():
    r = bounds.check_extremal_equality(bounds.build_extremal(6, 3, 3))
    assert r.lhs == 72 and r.equal and r.matches_chs
    r = bounds.check_extremal_equality(bounds.build_extremal(5, 4, 1))
    assert r.equal and not r.matches_chs
    fam = bounds.build_extremal(4, 2, 1)  # n < k - h
    assert not fam.interval_regime
    with pytest.raises(ValueError):
        bounds.check_extremal_equality(fam)
    with pytest.raises(ValueError):
        bounds.build_extremal(4, 1, 5)


def test_extremal_equality_grid_against_oracle():
    for k in range(2, 9):
        for h in bounds.extremal_h_options(k):
            for n in range(k - h, k - h + 4):
                fam = bounds.build_extremal(k, n, h)
                lhs = len(dilated_sum(fam.set, k, fam.set))
                assert lhs == bounds.chs_bound(k, len(fam.set))
                assert bounds.check_extremal_equality(fam).equal
