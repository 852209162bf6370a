import itertools
import random

import pytest

from nestlab import CapacityError, InputError
from nestlab.space import (FiniteSpace, PointSet, SubsetFamily, Topology, are_homeomorphic,
                           clopen_masks, components, enumerate_families, enumerate_nests,
                           enumerate_topologies, find_homeomorphism, generate_topology,
                           is_clopen, is_connected, mask_of)

import oracles


def fam(n, *sets, **kw):
    return SubsetFamily.of(FiniteSpace(n), sets, **kw)


def opens_as_sets(t):
    return {frozenset(s) for s in t.opens}


SIERP = Topology.from_opens(FiniteSpace(2), [[], [0], [0, 1]])


# -- points and families ---------------------------------------------------

def test_pointset_basics():
    X = FiniteSpace(4)
    a = PointSet.of(X, [0, 2])
    assert a.members == (0, 2) and len(a) == 2 and 2 in a and 1 not in a
    assert list(a.complement()) == [1, 3]
    assert a & PointSet.of(X, [2, 3]) == PointSet.of(X, [2])
    assert a <= PointSet.of(X, [0, 1, 2])


@pytest.mark.parametrize("bad", [[4], [-1], ["a"]])
def test_pointset_rejects_foreign_points(bad):
    with pytest.raises(InputError):
        PointSet.of(FiniteSpace(4), bad)


def test_family_of_drops_empty_and_collapses_duplicates():
    X = FiniteSpace(2)
    with pytest.warns(UserWarning):
        f = SubsetFamily.of(X, [[0], [], [0]])
    assert f.as_lists() == [[0]]
    assert SubsetFamily.of(X, [[], [1]], allow_empty=True).as_lists() == [[], [1]]
    assert SubsetFamily.of(X, [[0]], include_universe=True).as_lists() == [[0], [0, 1]]


def test_raw_family_constructor_is_strict():
    with pytest.raises(InputError):
        SubsetFamily(FiniteSpace(2), (1, 1))


def test_space_mismatch_is_an_input_error():
    with pytest.raises(InputError):
        generate_topology(FiniteSpace(3), fam(2, [0]))


# -- generate_topology -----------------------------------------------------

@pytest.mark.parametrize("n,subbase,expected", [
    (2, [[0]], [[], [0], [0, 1]]),
    (2, [[0], [1]], [[], [0], [1], [0, 1]]),
    (3, [[0, 1], [1, 2]], [[], [1], [0, 1], [1, 2], [0, 1, 2]]),
])
def test_generate_topology_examples(n, subbase, expected):
    t = generate_topology(FiniteSpace(n), fam(n, *subbase))
    assert opens_as_sets(t) == {frozenset(s) for s in expected}


def test_generate_topology_matches_closure_oracle():
    rng = random.Random(7)
    for n in (1, 2, 3, 4):
        X = FiniteSpace(n)
        for _ in range(150):
            masks = {rng.randint(1, X.full) for _ in range(rng.randint(0, 5))}
            f = SubsetFamily(X, tuple(sorted(masks)))
            got = opens_as_sets(generate_topology(X, f))
            assert got == oracles.close_topology(n, [frozenset(s) for s in f])


def test_generate_is_idempotent_and_monotone():
    rng = random.Random(3)
    X = FiniteSpace(4)
    for _ in range(100):
        a = {rng.randint(1, X.full) for _ in range(3)}
        b = a | {rng.randint(1, X.full) for _ in range(2)}
        ta = generate_topology(X, SubsetFamily(X, tuple(a)))
        tb = generate_topology(X, SubsetFamily(X, tuple(b)))
        assert generate_topology(X, ta.opens) == ta
        assert set(ta.open_masks) <= set(tb.open_masks)


def test_from_opens_validates_closure():
    with pytest.raises(InputError):
        Topology.from_opens(FiniteSpace(3), [[], [0], [1], [0, 1, 2]])
    with pytest.raises(InputError):
        Topology.from_opens(FiniteSpace(2), [[0], [0, 1]])


# -- connectedness ---------------------------------------------------------

def test_connectedness_examples():
    assert is_connected(SIERP)
    assert not is_connected(Topology.discrete(FiniteSpace(2)))
    t = Topology.from_opens(FiniteSpace(3), [[], [1], [0, 1], [1, 2], [0, 1, 2]])
    assert is_connected(t)


def test_clopen_examples():
    X3 = FiniteSpace(3)
    assert is_clopen(SIERP, PointSet.of(FiniteSpace(2), []))
    assert not is_clopen(SIERP, PointSet.of(FiniteSpace(2), [0]))
    assert is_clopen(Topology.discrete(X3), PointSet.of(X3, [0, 2]))


def test_connectedness_matches_oracle_on_all_small_topologies():
    for n in (1, 2, 3, 4):
        for t in enumerate_topologies(FiniteSpace(n)):
            opens = opens_as_sets(t)
            assert is_connected(t) == oracles.is_connected(n, opens)
            comps = components(t)
            assert (len(comps) == 1) == is_connected(t)
            assert all(is_clopen(t, c) for c in comps)
            assert set(clopen_masks(t)) == {mask_of(s) for s in opens
                                            if frozenset(range(n)) - s in opens}


# -- homeomorphism ---------------------------------------------------------

def test_homeomorphism_examples():
    X = FiniteSpace(2)
    other = Topology.from_opens(X, [[], [1], [0, 1]])
    assert not are_homeomorphic(SIERP, Topology.discrete(X))
    assert are_homeomorphic(SIERP, other)
    f = find_homeomorphism(SIERP, other)
    assert f is not None and f[0] == 1


def test_three_point_topologies_form_nine_classes():
    tops = list(enumerate_topologies(FiniteSpace(3)))
    assert len(tops) == 29
    classes = []
    for t in tops:
        for c in classes:
            if are_homeomorphic(c[0], t):
                c.append(t)
                break
        else:
            classes.append([t])
    assert len(classes) == 9


def test_homeomorphism_matches_permutation_oracle():
    tops = list(enumerate_topologies(FiniteSpace(3)))
    sets = [opens_as_sets(t) for t in tops]
    for i, j in itertools.combinations_with_replacement(range(len(tops)), 2):
        assert are_homeomorphic(tops[i], tops[j]) == oracles.homeomorphic(3, sets[i], sets[j])


def test_homeomorphism_is_an_equivalence_on_three_points():
    tops = list(enumerate_topologies(FiniteSpace(3)))
    rel = {(i, j) for i, a in enumerate(tops) for j, b in enumerate(tops) if are_homeomorphic(a, b)}
    idx = range(len(tops))
    assert all((i, i) in rel for i in idx)
    assert all((j, i) in rel for i, j in rel)
    assert all((i, k) in rel for i, j in rel for j2, k in rel if j == j2)


def test_homeomorphism_bound():
    t = Topology.discrete(FiniteSpace(8))
    with pytest.raises(CapacityError):
        are_homeomorphic(t, t)


# -- enumeration -----------------------------------------------------------

def test_enumerate_topologies_matches_brute_force():
    for n in (1, 2, 3, 4):
        got = {frozenset(opens_as_sets(t)) for t in enumerate_topologies(FiniteSpace(n))}
        assert got == set(oracles.all_topologies(n))
    assert [sum(1 for _ in enumerate_topologies(FiniteSpace(n))) for n in (1, 2, 3, 4)] == [1, 4, 29, 355]


def test_finite_t1_topologies_are_discrete():
    for n in (1, 2, 3, 4):
        for t in enumerate_topologies(FiniteSpace(n)):
            t1 = oracles.separation(n, [frozenset(s) for s in t.opens]) == "t1"
            assert t1 == t.is_discrete()


@pytest.mark.parametrize("n,count", [(1, 2), (2, 8), (3, 128)])
def test_family_counts(n, count):
    assert sum(1 for _ in enumerate_families(FiniteSpace(n))) == count


def test_families_match_oracle_and_order():
    X = FiniteSpace(3)
    got = [tuple(f.masks) for f in enumerate_families(X)]
    assert got == sorted(got)
    want = {tuple(sorted(mask_of(s) for s in f)) for f in oracles.all_families(3)}
    assert set(got) == want and len(got) == len(want)


def test_nest_counts_against_oracle():
    for n in (1, 2, 3, 4):
        for allow_empty in (False, True):
            want = sum(1 for f in oracles.all_families(n, allow_empty) if oracles.is_chain(f))
            got = sum(1 for _ in enumerate_nests(FiniteSpace(n), allow_empty=allow_empty))
            assert got == want
    # Chains among {0}, {1}, {0,1}: the empty chain, three singletons and two pairs.
    assert sum(1 for _ in enumerate_nests(FiniteSpace(2))) == 6


def test_enumeration_is_deterministic_and_shards_partition():
    X = FiniteSpace(3)
    once = [f.masks for f in enumerate_families(X)]
    assert once == [f.masks for f in enumerate_families(X)]
    shards = [[f.masks for f in enumerate_families(X, shard=(i, 3))] for i in range(3)]
    assert sorted(sum(shards, [])) == sorted(once)
    a = [f.masks for f in enumerate_families(FiniteSpace(6), sample=50, seed=4)]
    assert a == [f.masks for f in enumerate_families(FiniteSpace(6), sample=50, seed=4)]


def test_enumeration_bounds():
    with pytest.raises(CapacityError):
        list(enumerate_families(FiniteSpace(5)))
    with pytest.raises(CapacityError):
        list(enumerate_families(FiniteSpace(7), sample=1))
    with pytest.raises(CapacityError):
        list(enumerate_families(FiniteSpace(3), bound=9))
