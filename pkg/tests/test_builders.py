import pytest

from bondy import (
    SetSystem,
    SpectrumTarget,
    SubsetMask,
    base_2s,
    build_maximal_bondy,
    build_slender,
    build_slender_2s,
    complement_system,
    disjoint_union,
    extend,
    fixture,
    fixture_ids,
    bondy_verdict,
    is_inclusion_minimal_non_bondy,
    is_slender,
    once_covered_elements,
    replay,
    slender_2s_trace,
    slender_trace,
)
from _support import forked_chains_system

# ---------------------------------------------------------------------------
# catalog


def test_catalog_shape():
    ids = fixture_ids()
    assert len(ids) == 27
    assert (1, 1) in ids and (6, 6) in ids
    per_ground = {s: sum(1 for g, _ in ids if g == s) for s in range(1, 7)}
    assert per_ground == {1: 1, 2: 3, 3: 8, 4: 4, 5: 5, 6: 6}


def test_catalog_systems_are_all_slender():
    for s, index in fixture_ids():
        sys_ = fixture(s, index)
        assert sys_.ground.size == s
        assert is_slender(sys_), (s, index)
        assert is_inclusion_minimal_non_bondy(sys_), (s, index)


def test_catalog_sizes_by_ground():
    assert [len(fixture(6, i)) for i in range(1, 7)] == [7, 8, 9, 10, 11, 12]
    assert [len(fixture(5, i)) for i in range(1, 6)] == [6, 6, 7, 8, 10]
    assert [len(fixture(4, i)) for i in range(1, 5)] == [5, 5, 6, 5]
    assert all(len(fixture(3, i)) == 4 for i in range(1, 9))


def test_catalog_smallest_entries():
    assert fixture(1, 1) == SetSystem.from_sets(1, [(), (1,)])
    assert fixture(2, 2) == SetSystem.from_sets(2, [(), (1,), (2,)])


def test_fixture_unknown_ids():
    with pytest.raises(ValueError, match="ground size 7"):
        fixture(7, 1)
    with pytest.raises(ValueError, match="indices are 1..6"):
        fixture(6, 0)
    with pytest.raises(ValueError):
        fixture(3, 9)


def test_full_set_absent_from_ground_six_entries():
    for i in range(1, 7):
        assert not fixture(6, i).has_full_member


# ---------------------------------------------------------------------------
# disjoint union


def test_disjoint_union_shifts_and_adds():
    a = fixture(3, 7)  # no empty set
    b = fixture(2, 3)
    out = disjoint_union(a, b)
    assert out.ground.size == 5
    assert len(out) == len(a) + len(b)
    assert SubsetMask.from_elements([4]) in out  # shifted {1}
    assert SubsetMask.from_elements([4, 5]) in out  # shifted {1,2}
    assert is_slender(out)


def test_disjoint_union_rejects_empty_member():
    with pytest.raises(ValueError, match="empty set"):
        disjoint_union(fixture(3, 1), fixture(2, 3))
    with pytest.raises(ValueError, match="second.*empty set"):
        disjoint_union(fixture(2, 3), fixture(3, 1))


def test_disjoint_union_rejects_non_minimal_input():
    bondy_no_empty = SetSystem.from_sets(2, [(1,), (2,)])
    with pytest.raises(ValueError, match="not inclusion-minimal"):
        disjoint_union(bondy_no_empty, fixture(2, 3))


def test_disjoint_union_once_covered_union():
    # one operand leaves element 5 covered twice; the gap survives the
    # union, shifted block stays fully once-covered
    left = forked_chains_system()
    out = disjoint_union(left, fixture(5, 5))
    assert out.ground.size == 12
    assert once_covered_elements(out).elements == (1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 12)
    assert is_inclusion_minimal_non_bondy(out)
    assert not is_slender(out)


def test_disjoint_union_of_base_systems_additivity():
    for s1, s2 in ((5, 5), (5, 6), (6, 7)):
        out = disjoint_union(base_2s(s1), base_2s(s2))
        assert out.ground.size == s1 + s2
        assert len(out) == 2 * s1 + 2 * s2
        assert is_slender(out)


# ---------------------------------------------------------------------------
# extend


def test_extend_adds_tagged_member():
    base = fixture(6, 1)
    out = extend(base, SubsetMask(0))
    assert out.ground.size == 7
    assert len(out) == len(base) + 1
    assert SubsetMask.from_elements([7]) in out
    assert is_slender(out)


def test_extend_requires_existing_member():
    with pytest.raises(ValueError, match="not in the system"):
        extend(fixture(6, 2), SubsetMask.from_elements([6]))


def test_extend_keeps_slender_for_every_choice():
    for s, index in fixture_ids():
        sys_ = fixture(s, index)
        for member in sys_.members:
            out = extend(sys_, member)
            assert is_slender(out), (s, index, member)
            assert len(out) == len(sys_) + 1


def test_extend_full_set_tracking():
    base = fixture(3, 7)  # contains {1,2,3}
    grown = extend(base, SubsetMask.from_elements([1, 2, 3]))
    assert grown.has_full_member
    grown2 = extend(base, SubsetMask.from_elements([1, 2]))
    assert not grown2.has_full_member


# ---------------------------------------------------------------------------
# stock 2s-sized systems


def test_base_2s_bounds():
    for bad in (4, 10):
        with pytest.raises(ValueError, match="5..9"):
            base_2s(bad)


def test_base_2s_properties():
    for s in range(5, 10):
        sys_ = base_2s(s)
        assert sys_.ground.size == s
        assert len(sys_) == 2 * s
        assert is_slender(sys_)
        assert not sys_.has_empty_member


def test_base_2s_nesting():
    # each step keeps the previous members and adds exactly two
    for s in range(6, 10):
        prev = set(base_2s(s - 1).member_bits)
        cur = set(base_2s(s).member_bits)
        assert prev < cur
        assert len(cur - prev) == 2


def test_build_slender_2s_variants():
    for s in (5, 7, 10, 11, 14, 20):
        ne = build_slender_2s(s, "no-empty")
        nf = build_slender_2s(s, "no-full")
        assert len(ne) == 2 * s == len(nf)
        assert is_slender(ne) and is_slender(nf)
        assert not ne.has_empty_member
        assert not nf.has_full_member
        assert complement_system(ne) == nf


def test_build_slender_2s_validation():
    with pytest.raises(ValueError, match="at least 5"):
        build_slender_2s(4, "no-empty")
    with pytest.raises(ValueError, match="variant"):
        build_slender_2s(5, "no-ful")


def test_slender_2s_trace_shapes():
    assert slender_2s_trace(7).rule == "base-2s"
    t10 = slender_2s_trace(10)
    assert t10.rule == "disjoint-union"
    assert [c.detail for c in t10.inputs] == [(5,), (5,)]
    t11 = slender_2s_trace(11)
    assert [c.detail for c in t11.inputs] == [(5,), (6,)]
    assert slender_2s_trace(8, "no-full").rule == "complement"


# ---------------------------------------------------------------------------
# arbitrary sizes


def test_spectrum_target_validation():
    with pytest.raises(ValueError, match="at least 6"):
        SpectrumTarget(5, 10)
    with pytest.raises(ValueError, match="s\\+1 <= t <= 2\\*s"):
        SpectrumTarget(6, 6)
    with pytest.raises(ValueError, match="s\\+1 <= t <= 2\\*s"):
        SpectrumTarget(6, 13)
    assert SpectrumTarget(6, 7).t == 7


def test_build_slender_all_desk_scale_targets():
    for s in range(6, 13):
        for t in range(s + 1, 2 * s + 1):
            sys_ = build_slender(SpectrumTarget(s, t))
            assert sys_.ground.size == s
            assert len(sys_) == t
            assert is_slender(sys_), (s, t)
            assert not sys_.has_full_member, (s, t)


def test_build_slender_ground_six_reads_catalog():
    assert build_slender(SpectrumTarget(6, 9)) == fixture(6, 3)
    assert build_slender(SpectrumTarget(6, 12)) == fixture(6, 6)


def test_build_slender_top_size_uses_variant():
    assert build_slender(SpectrumTarget(7, 14)) == build_slender_2s(7, "no-full")


def test_trace_replay_reproduces_builds():
    for target in (SpectrumTarget(6, 8), SpectrumTarget(9, 13), SpectrumTarget(12, 24)):
        assert replay(slender_trace(target)) == build_slender(target)


def test_trace_extend_chain_depth():
    trace = slender_trace(SpectrumTarget(9, 10))
    depth = 0
    while trace.rule == "extend":
        depth += 1
        (trace,) = trace.inputs
    assert depth == 3
    assert trace.rule == "fixture"
    assert trace.detail == (6, 1)


# ---------------------------------------------------------------------------
# maximal bondy systems


def test_build_maximal_bondy_small_cases():
    assert build_maximal_bondy(
        2, 1, SetSystem.from_sets(2, [()])
    ) == SetSystem.from_sets(2, [(), (1, 2)])
    assert build_maximal_bondy(1, 1, SetSystem.from_sets(1, [])) == (
        SetSystem.from_sets(1, [(1,)])
    )


def test_build_maximal_bondy_size_and_verdict():
    for s in (2, 3, 4, 5):
        for w in (1, s):
            kept = SetSystem.from_sets(s, [(), tuple(e for e in range(1, s + 1) if e != w)])
            out = build_maximal_bondy(s, w, kept)
            assert len(out) == 1 << (s - 1)
            verdict = bondy_verdict(out)
            assert verdict.is_bondy and w in verdict.witnesses


def test_build_maximal_bondy_validation():
    with pytest.raises(ValueError, match="witness"):
        build_maximal_bondy(3, 4, SetSystem.from_sets(3, []))
    with pytest.raises(ValueError, match="does not match"):
        build_maximal_bondy(3, 1, SetSystem.from_sets(2, []))
    with pytest.raises(ValueError, match="contains 2"):
        build_maximal_bondy(3, 2, SetSystem.from_sets(3, [(1, 2)]))
