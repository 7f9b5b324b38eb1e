import json

import pytest
from hypothesis import given, settings, strategies as st

from amplesets import (
    ALL_IDS,
    Characterization,
    GroundSet,
    SignFamily,
    check,
    complement,
    cross_check,
    enumerate_families,
    generate,
    is_ample,
    project,
    restrict,
    sample_families,
    shattered,
)
from amplesets.ample import (
    _connected,
    _isometry_violation,
    family_digest,
    family_from_index,
)
from amplesets.signs import parse_full

from conftest import SIX_CYCLE, all_families, fam


def test_is_ample_examples(six_cycle):
    assert not is_ample(six_cycle)
    assert is_ample(SignFamily.full(3))
    assert is_ample(fam("+-+"))
    assert is_ample(SignFamily.empty(2))
    assert not is_ample(fam("--", "++"))


def test_unknown_id_is_rejected(six_cycle):
    with pytest.raises(ValueError):
        check(six_cycle, "NOPE")
    assert check(six_cycle, "count").holds is False
    assert check(six_cycle, Characterization.COUNT).holds is False


def test_superconnectivity_witness(six_cycle):
    v = check(six_cycle, "SUPERCONNECTIVITY")
    assert not v
    A = v.witness["A"]
    R = restrict(six_cycle, A)
    assert not _connected(R.bits, R.ground.full_mask)
    assert A == ["e1"] and set(R.strings()) == {"+-", "-+"}


def test_lopsided_witness(six_cycle):
    w = check(six_cycle, "LOPSIDED").witness
    A, B = w["A"], w["B"]
    assert sorted(A + B) == ["e1", "e2", "e3"] and len(A) == 2
    # neither side strongly shattered, by the naive definition
    from amplesets import oracle
    from conftest import as_tuples

    idx = lambda labels: tuple(int(x[1:]) - 1 for x in labels)
    assert idx(A) not in oracle.strongly_shattered(as_tuples(six_cycle), 3)
    assert idx(B) not in oracle.strongly_shattered(as_tuples(complement(six_cycle)), 3)


def test_asymmetry_witness(six_cycle):
    w = check(six_cycle, "ASYMMETRY").witness
    assert w["face"] == "000"
    members = set(w["intersection"])
    flip = {"+": "-", "-": "+"}
    assert members == {"".join(flip[c] for c in s) for s in members}
    assert 0 < len(members) < 8


def test_commutativity_witness(six_cycle):
    w = check(six_cycle, "COMMUTATIVITY").witness
    A, B = w["A"], w["B"]
    assert set(A).isdisjoint(B)
    left = project(restrict(six_cycle, A), [b for b in B])
    right = restrict(project(six_cycle, B), A)
    assert left.strings() == w["restrict_then_project"]
    assert right.strings() == w["project_then_restrict"]
    assert left.strings() != right.strings()
    assert w["restrict_then_project"] == [] and w["project_then_restrict"] == ["."]


def test_proj_dim_witness(six_cycle):
    w = check(six_cycle, "PROJ_DIM").witness
    assert len(w["A"]) == 1 and w["dims"] == [1, 2]


def test_superisometry_witness_is_a_real_violation(six_cycle):
    w = check(six_cycle, "SUPERISOMETRY").witness
    R = restrict(six_cycle, w["A"])
    pair = [parse_full(s) for s in w["pair"]]
    assert all(p in R.bits for p in pair)
    assert _isometry_violation(R.bits, R.ground.full_mask) is not None


def test_euler_examples(six_cycle):
    assert check(SignFamily.full(2), "EULER")
    w = check(six_cycle, "EULER").witness
    assert w == {"face": "000", "euler": 0}


def test_sca_witnesses_are_conflicting_pairs(six_cycle):
    for which in ("SCA_BARYC", "SCA_COCIRC", "SCA_CIRC", "SIGNCONV_BARYC"):
        w = check(six_cycle, which).witness
        a, b = w["pair"]
        e = int(w["e"][1:]) - 1
        assert {a[e], b[e]} == {"+", "-"}


def test_witness_order_is_deterministic(six_cycle):
    first = cross_check(six_cycle).to_json()
    again = cross_check(fam(*reversed(SIX_CYCLE))).to_json()
    assert first == again


def test_cross_check_examples(six_cycle):
    r = cross_check(six_cycle)
    assert r.agree and not any(r.verdicts.values())
    assert set(r.witnesses) == {c.value for c in ALL_IDS}
    full = cross_check(SignFamily.full(3))
    assert full.agree and all(full.verdicts.values()) and not full.witnesses


def test_report_json_schema(six_cycle):
    data = cross_check(six_cycle).to_json()
    assert set(data) == {"n", "family", "verdicts", "witnesses", "agree", "dress_pajor", "vc_dimension"}
    assert data["dress_pajor"] == [4, 6, 7] and data["vc_dimension"] == 2
    assert list(data["verdicts"])[1:] == [c.value for c in ALL_IDS]
    json.dumps(data)


def test_family_digest_is_canonical(six_cycle):
    assert family_digest(six_cycle) == family_digest(fam(*reversed(SIX_CYCLE)))
    assert family_digest(six_cycle) != family_digest(SignFamily.full(3))


def test_disagreement_is_reported():
    r = cross_check(fam("+-"))
    r.verdicts["EULER"] = False
    assert not r.agree and r.disagreements() == ["EULER"]


@pytest.mark.parametrize("n", [0, 1])
def test_small_ground_sets(n):
    for L in all_families(n):
        r = cross_check(L)
        assert r.agree and r.verdicts["COUNT"]


def test_generate_kinds():
    assert generate("SIX_CYCLE", 3) == fam(*SIX_CYCLE)
    assert len(generate("FULL", 2)) == 4
    assert len(generate("EMPTY", 2)) == 0
    assert len(generate("SINGLETON", 5)) == 1
    assert generate("RANDOM", 6, seed=4) == generate("RANDOM", 6, seed=4)
    assert generate("DOWNSET", 5, seed=9) == generate("DOWNSET", 5, seed=9)
    with pytest.raises(ValueError):
        generate("SIX_CYCLE", 4)
    with pytest.raises(ValueError):
        generate("RANDOM", 3)
    with pytest.raises(ValueError):
        generate("BOGUS", 3)


@given(st.integers(0, 8), st.integers(0, 10 ** 6))
def test_downsets_are_ample(n, seed):
    L = generate("DOWNSET", n, seed=seed)
    assert is_ample(L)
    # for a down-closed family the shattered sets are the members read as sets
    assert set(shattered(L).masks) == set(L.bits)


def test_enumerate_small_counts():
    assert enumerate_families(0, "COUNT") == 2
    assert enumerate_families(1, "COUNT") == 4
    assert enumerate_families(2, "COUNT") == 14
    assert enumerate_families(2, "SCA_COCIRC") == 14
    assert enumerate_families(3, "LOPSIDED") == 128


def test_enumerate_rejects_large_n():
    with pytest.raises(ValueError, match="sampl"):
        enumerate_families(5, "COUNT")
    with pytest.raises(ValueError):
        enumerate_families(2, "NOPE")


def test_enumerate_in_parallel_matches_serial():
    assert enumerate_families(4, "EULER", jobs=2) == 5530


def test_sampling_is_deterministic():
    a = sample_families(6, "COUNT", 20, seed=1)
    assert a == sample_families(6, "COUNT", 20, seed=1)
    assert 0 <= a <= 20


def test_family_index_bounds():
    with pytest.raises(ValueError):
        family_from_index(GroundSet(2), 1 << 16)


def test_count_and_sparse_always_agree():
    for L in all_families(3):
        assert check(L, "COUNT").holds == check(L, "SPARSE").holds


def test_ample_families_are_isometric_and_connected():
    for L in all_families(3):
        if is_ample(L):
            assert _isometry_violation(L.bits, L.ground.full_mask) is None
            assert _connected(L.bits, L.ground.full_mask)


families5 = st.sets(st.integers(0, 31)).map(lambda s: SignFamily(GroundSet(5), s))


@settings(max_examples=60, deadline=None)
@given(families5)
def test_count_sparse_lopsided_agree_n5(L):
    verdicts = {check(L, c).holds for c in ("COUNT", "SPARSE", "LOPSIDED", "EULER", "GRID_ISO")}
    assert len(verdicts) == 1
