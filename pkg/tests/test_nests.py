import random

import pytest

from nestlab import CapacityError, InputError
from nestlab.nests import (OrderClass, Relation, SeparationKind, classify_order,
                           dense_nest_criterion, has_min_witness_property, incomparable_pair,
                           induced_order, intersection_trigger, interlocking_failure,
                           is_dense_order, is_interlocking, is_nest, maximal_elements,
                           minimal_elements, reverse, scatter_failure, scatters,
                           separation_kind, union_witness, unseparated_pair)
from nestlab.space import FiniteSpace, PointSet, SubsetFamily, enumerate_families, enumerate_nests

import oracles


def fam(n, *sets, **kw):
    return SubsetFamily.of(FiniteSpace(n), sets, **kw)


def fsets(f):
    return [frozenset(s) for s in f]


def ps(n, *pts):
    return PointSet.of(FiniteSpace(n), pts)


# -- examples --------------------------------------------------------------

def test_is_nest_examples():
    assert is_nest(fam(2, [0], [0, 1]))
    assert not is_nest(fam(2, [0], [1]))
    assert is_nest(fam(2))
    a, b = incomparable_pair(fam(2, [0], [1]))
    assert not a <= b and not b <= a


@pytest.mark.parametrize("n,sets,kind", [
    (2, [[0]], SeparationKind.T0),
    (2, [[0], [1]], SeparationKind.T1),
    (3, [[0, 1]], SeparationKind.NONE),
])
def test_separation_examples(n, sets, kind):
    f = fam(n, *sets)
    assert separation_kind(f) == kind
    if kind < SeparationKind.T1:
        x, y = unseparated_pair(f, SeparationKind(kind + 1))
        assert x != y


def test_induced_order_examples():
    assert sorted(induced_order(fam(3, [0], [0, 1])).pairs()) == [(0, 1), (0, 2), (1, 2)]
    assert induced_order(fam(3)).pairs() == []
    assert sorted(induced_order(fam(2, [0], [1])).pairs()) == [(0, 1), (1, 0)]


def test_classify_order_examples():
    X = FiniteSpace(3)
    assert classify_order(Relation.from_pairs(X, [(0, 1), (1, 2)])) == OrderClass.NOT_TRANSITIVE
    assert classify_order(Relation.chain(X)) == OrderClass.WELL
    assert classify_order(Relation(FiniteSpace(2), (0, 0))) == OrderClass.PARTIAL


def test_relation_validation():
    X = FiniteSpace(2)
    with pytest.raises(InputError):
        Relation.from_pairs(X, [(0, 0)])
    assert Relation.from_pairs(X, [(0, 0)], loops=True).holds(0, 0)
    with pytest.raises(InputError):
        Relation.from_pairs(X, [(0, 2)])
    with pytest.raises(InputError):
        Relation.chain(X, [0, 0])


def test_interlocking_examples():
    assert not is_interlocking(fam(3, [0], [0, 1], [0, 1, 2]))
    assert interlocking_failure(fam(3, [0], [0, 1], [0, 1, 2])) == ps(3, 0, 1, 2)
    assert is_interlocking(fam(3, [0], [0, 1]))
    assert is_interlocking(fam(3))


def test_trigger_and_witness_examples():
    f = fam(3, [0], [0, 1], [0, 1, 2])
    assert intersection_trigger(f, ps(3, 0, 1, 2))
    g = fam(3, [0], [0, 1])
    assert not intersection_trigger(g, ps(3, 0, 1))
    assert not union_witness(g, ps(3, 0))
    # With a two-point space the same set is the whole space and triggers.
    assert intersection_trigger(fam(2, [0], [0, 1]), ps(2, 0, 1))
    with pytest.raises(InputError):
        intersection_trigger(g, ps(3, 2))


def test_scatter_examples():
    assert scatters(fam(2, [0], [0, 1]))
    assert not scatters(fam(2, [0]))
    assert scatter_failure(fam(2, [0])) == ps(2, 1)
    assert scatters(fam(2, [0]), adjoin_universe=True)
    assert scatters(fam(1, [0]))
    with pytest.raises(CapacityError):
        scatters(SubsetFamily(FiniteSpace(21), ()))


def test_density_examples():
    X3 = FiniteSpace(3)
    assert not is_dense_order(Relation.chain(X3))
    assert is_dense_order(Relation(FiniteSpace(2), (0, 0)))
    with pytest.raises(InputError):
        is_dense_order(Relation.from_pairs(X3, [(0, 1), (1, 2)]))
    assert not dense_nest_criterion(fam(3, [0], [0, 1]))
    assert dense_nest_criterion(fam(1))
    for f in enumerate_nests(FiniteSpace(2)):
        assert not dense_nest_criterion(f)
    with pytest.raises(InputError):
        dense_nest_criterion(fam(2, [0], [1]))


def test_reverse_examples():
    X = FiniteSpace(2)
    assert reverse(Relation.from_pairs(X, [(0, 1)])).pairs() == [(1, 0)]
    assert reverse(Relation(X, (0, 0))).pairs() == []
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(1, 5)
        pairs = {(x, y) for x in range(n) for y in range(n) if x != y and rng.random() < 0.4}
        r = Relation.from_pairs(FiniteSpace(n), pairs)
        assert reverse(reverse(r)) == r


def test_extremes():
    r = Relation.chain(FiniteSpace(3))
    assert maximal_elements(r, 0b011) == 0b010
    assert minimal_elements(r, 0b110) == 0b010
    assert maximal_elements(Relation(FiniteSpace(2), (0, 0)), 0b11) == 0b11


# -- oracles ---------------------------------------------------------------

def test_predicates_match_frozenset_oracles():
    for n in (1, 2, 3):
        X = FiniteSpace(n)
        for f in enumerate_families(X):
            s = fsets(f)
            assert is_nest(f) == oracles.is_chain(s)
            assert set(induced_order(f).pairs()) == oracles.induced_pairs(n, s)
            assert str(separation_kind(f)) == oracles.separation(n, s)
            assert is_interlocking(f) == oracles.interlocking(n, s)
            assert scatters(f) == oracles.scatters(n, s)


def test_predicates_match_oracles_on_random_larger_families():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(4, 6)
        X = FiniteSpace(n)
        f = SubsetFamily.collapse(X, (rng.randint(1, X.full) for _ in range(rng.randint(0, 6))))
        s = fsets(f)
        assert is_nest(f) == oracles.is_chain(s)
        assert set(induced_order(f).pairs()) == oracles.induced_pairs(n, s)
        assert str(separation_kind(f)) == oracles.separation(n, s)
        assert is_interlocking(f) == oracles.interlocking(n, s)


def test_finite_nest_interlocks_iff_whole_space_absent():
    # A finite nest's top member is the only one whose meet can trigger.
    for n in (1, 2, 3, 4):
        for f in enumerate_nests(FiniteSpace(n)):
            assert is_interlocking(f) == (FiniteSpace(n).full not in f.masks)


def test_min_witness_property_matches_definition():
    for f in enumerate_families(FiniteSpace(3)):
        s = fsets(f)
        want = all(any(all(x in m for m in s if m & a) for x in a)
                   for a in oracles.powerset(range(3)) if a)
        assert has_min_witness_property(f) == want


def test_finite_linear_orders_are_well_orders():
    for n in (1, 2, 3, 4):
        for f in enumerate_nests(FiniteSpace(n)):
            r = induced_order(f)
            if r.is_linear():
                assert classify_order(r) == OrderClass.WELL
