from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from amplesets import (
    GroundSet,
    SignFamily,
    dress_pajor,
    project,
    restrict,
    sauer_shelah_bound,
    shattered,
    strongly_shattered,
    vc_dimension,
)
from amplesets import oracle

from conftest import SIX_CYCLE, all_families, as_tuples, fam


def sets_of(subset_family):
    return {tuple(int(x[1:]) - 1 for x in labels) for labels in subset_family.labelled()}


def test_projection_examples(six_cycle):
    assert project(six_cycle, ["e3"]) == SignFamily.full(GroundSet(2))
    assert project(six_cycle, 0) == six_cycle
    assert project(fam("+-"), ["e1"]).strings() == ["-"]


def test_restriction_examples(six_cycle):
    assert set(restrict(six_cycle, ["e1"]).strings()) == {"+-", "-+"}
    R = restrict(SignFamily.full(3), ["e2"])
    assert R.strings() == SignFamily.full(2).strings()
    assert R.ground.labels == ("e1", "e3")
    assert len(restrict(six_cycle, ["e1", "e2"])) == 0


def test_bad_subset_is_rejected(six_cycle):
    with pytest.raises(ValueError):
        project(six_cycle, ["e4"])
    with pytest.raises(ValueError):
        restrict(six_cycle, 0b1000)


def test_shattered_examples(six_cycle):
    proper = {A for k in range(3) for A in combinations(range(3), k)}
    assert sets_of(shattered(six_cycle)) == proper
    assert sets_of(shattered(fam("+-+"))) == {()}
    assert len(shattered(SignFamily.empty(3))) == 0


def test_strongly_shattered_examples(six_cycle):
    assert sets_of(strongly_shattered(six_cycle)) == {(), (0,), (1,), (2,)}
    assert len(strongly_shattered(SignFamily.full(2))) == 4
    assert sets_of(strongly_shattered(fam("--", "++"))) == {()}


def test_subset_family_strings_and_membership(six_cycle):
    sh = shattered(six_cycle)
    assert ["e1", "e2"] in sh and ["e1", "e2", "e3"] not in sh and ["zz"] not in sh
    assert sh.strings()[0] == "000"


def test_vc_dimension_examples(six_cycle):
    assert vc_dimension(six_cycle) == 2
    assert vc_dimension(SignFamily.full(4)) == 4
    assert vc_dimension(fam("+-")) == 0
    assert vc_dimension(SignFamily.empty(2)) == -1


def test_dress_pajor_examples(six_cycle):
    assert dress_pajor(six_cycle) == (4, 6, 7)
    assert dress_pajor(SignFamily.full(2)) == (4, 4, 4)
    assert dress_pajor(fam("--", "++")) == (1, 2, 3)
    assert dress_pajor(SignFamily.empty(2)) == (0, 0, 0)


def test_sauer_shelah_bound_values():
    assert sauer_shelah_bound(3, 2) == 7
    assert sauer_shelah_bound(10, 10) == 1024
    assert sauer_shelah_bound(5, -1) == 0


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_shattering_matches_naive_definition(n):
    for L in all_families(n):
        members = as_tuples(L)
        assert sets_of(shattered(L)) == set(oracle.shattered(members, n))
        assert sets_of(strongly_shattered(L)) == set(oracle.strongly_shattered(members, n))


families = st.integers(0, 6).flatmap(
    lambda n: st.sets(st.integers(0, (1 << n) - 1)).map(lambda s: SignFamily(GroundSet(n), s)))


@settings(max_examples=150)
@given(families)
def test_dress_pajor_and_downward_closure(L):
    lower, middle, upper = dress_pajor(L)
    assert lower <= middle <= upper
    strong = set(strongly_shattered(L).masks)
    sh = set(shattered(L).masks)
    assert strong <= sh
    for family in (strong, sh):
        for A in family:
            for e in range(L.n):
                assert A & ~(1 << e) in family


@settings(max_examples=150)
@given(families, st.data())
def test_projection_and_restriction_properties(L, data):
    A = data.draw(st.integers(0, L.ground.full_mask))
    P = project(L, A)
    R = restrict(L, A)
    assert P.n == R.n == L.n - bin(A).count("1")
    assert len(R) <= len(P) <= len(L)
    assert set(R.bits) <= set(P.bits)


@given(families)
def test_sauer_shelah(L):
    assert len(L) <= sauer_shelah_bound(L.n, vc_dimension(L))


masked_families = st.integers(7, 9).flatmap(lambda n: st.tuples(
    st.just(n),
    st.sets(st.integers(0, (1 << n) - 1), max_size=300),
    st.integers(0, (1 << n) - 1),
))


@settings(max_examples=60, deadline=None)
@given(masked_families)
def test_table_routes_agree(data):
    from amplesets.shatter import (
        _grow_down_closed,
        _quantifier_table,
        _within,
        is_shattered_bits,
        is_strongly_shattered_bits,
        proj_bits,
    )
    import numpy as np

    n, members, cleared = data
    live = ((1 << n) - 1) & ~cleared | (1 << (n - 1))
    bits = proj_bits(members, cleared & ~(1 << (n - 1)))
    if not bits:
        return
    fast_sh = _within(_quantifier_table(bits, n, np.logical_or, np.logical_and, False), live)
    fast_st = _within(_quantifier_table(bits, n, np.logical_and, np.logical_or, True), live)
    assert fast_sh == _grow_down_closed(bits, live, is_shattered_bits)
    assert fast_st == _grow_down_closed(bits, live, is_strongly_shattered_bits)
