import itertools
import random

import pytest

from nestlab import InputError
from nestlab.nests import SeparationKind, induced_order, is_interlocking, is_nest, separation_kind
from nestlab.products import (ProductSpace, box_family, function_space, is_base_for_some_topology,
                              is_weakly_t0, is_weakly_t1, point_nest, point_open_subbase,
                              preimage_nest, product_topology, project_family, project_nest,
                              projection_condition, projection_condition_failure,
                              weak_separation_kind)
from nestlab.space import FiniteSpace, SubsetFamily, enumerate_nests, generate_topology

X2 = FiniteSpace(2)
P22 = ProductSpace.power(X2, 2)


def tuples(p, *ts):
    return SubsetFamily(p, tuple(p.set_of_tuples(s) for s in ts))


def as_tuples(p, f):
    return [sorted(p.decode(x) for x in range(p.size) if m >> x & 1) for m in f.masks]


def test_encoding_is_a_bijection():
    p = ProductSpace.power(FiniteSpace(3), 3)
    assert sorted(p.encode(p.decode(x)) for x in range(p.size)) == list(range(27))
    assert p.decode(1) == (1, 0, 0)
    with pytest.raises(InputError):
        p.encode((3, 0, 0))
    with pytest.raises(InputError):
        p.check_coordinate(3)


def test_project_nest_examples():
    assert project_nest(tuples(P22, [(0, 0)]), 0).as_lists() == [[0]]
    f = tuples(P22, [(0, 0)], [(0, 0), (1, 0)])
    assert project_nest(f, 0).as_lists() == [[0], [0, 1]]
    assert project_nest(f, 1).as_lists() == [[0]]
    with pytest.raises(InputError):
        project_nest(tuples(P22, [(0, 0)], [(1, 1)]), 0)


def test_preimage_nest_examples():
    f = preimage_nest(SubsetFamily.of(X2, [[0]]), 0, P22)
    assert as_tuples(P22, f) == [[(0, 0), (0, 1)]]
    g = preimage_nest(SubsetFamily.of(X2, [[0], [0, 1]]), 1, P22)
    assert as_tuples(P22, g) == [[(0, 0), (1, 0)], sorted(P22.decode(x) for x in range(4))]
    assert len(preimage_nest(SubsetFamily(X2, ()), 0, P22)) == 0


def test_weak_separation_examples():
    for l in enumerate_nests(X2):
        if separation_kind(l) >= SeparationKind.T0:
            for j in (0, 1):
                assert is_weakly_t0(preimage_nest(l, j, P22), j)
    assert weak_separation_kind(SubsetFamily(P22, (P22.full,)), 0) == SeparationKind.NONE
    l = preimage_nest(SubsetFamily.of(X2, [[0]]), 0, P22)
    r = preimage_nest(SubsetFamily.of(X2, [[1]]), 0, P22)
    assert weak_separation_kind(l, 0, r) == SeparationKind.T1
    with pytest.raises(InputError):
        is_weakly_t1(l, None, 0)


def test_projection_condition_examples():
    for l in enumerate_nests(X2):
        assert projection_condition(preimage_nest(l, 0, P22), 0)
    f = tuples(P22, [(0, 0)])
    assert not projection_condition(f, 0)
    assert projection_condition_failure(f, 0) == ([(0, 0)], (0, 1))
    assert projection_condition(SubsetFamily(P22, ()), 0)


def test_function_space_examples():
    assert function_space(2, X2).size == 4
    assert function_space(1, FiniteSpace(3)).size == 3
    assert function_space(3, X2).size == 8


def test_point_nest_examples():
    fs = function_space(2, X2)
    pn = point_nest(0, SubsetFamily.of(X2, [[0]]), fs)
    assert sorted(fs.decode(f) for f in range(4) if pn.masks[0] >> f & 1) == [(0, 0), (0, 1)]
    assert point_nest(1, SubsetFamily.of(X2, [[0, 1]]), fs).masks == (fs.full,)
    rng = random.Random(5)
    for _ in range(50):
        cod = FiniteSpace(rng.randint(1, 3))
        fs = function_space(rng.randint(1, 3), cod)
        from nestlab.space import random_nest
        l = random_nest(cod, rng)
        x = rng.randrange(fs.index_count)
        assert point_nest(x, l, fs) == preimage_nest(l, x, fs)


def test_point_open_subbase_examples():
    Y = FiniteSpace(3)
    fs = function_space(1, Y)
    ls, rs = SubsetFamily.of(Y, [[0]]), SubsetFamily.of(Y, [[2], [1, 2]])
    assert sorted(point_open_subbase(ls, rs, fs).masks) == sorted(ls.masks + rs.masks)
    fs = function_space(2, X2)
    sub = point_open_subbase(SubsetFamily.of(X2, [[0]]), SubsetFamily.of(X2, [[1]]), fs)
    assert len(sub) == 4 and generate_topology(fs, sub).is_discrete()
    empty = point_open_subbase(SubsetFamily(X2, ()), SubsetFamily(X2, ()), fs)
    assert generate_topology(fs, empty).open_masks == (0, fs.full)


def test_box_family_is_a_base_for_the_product_topology():
    for b in (2, 3):
        X = FiniteSpace(b)
        p = ProductSpace.power(X, 2)
        nests = list(enumerate_nests(X))
        for l, r in itertools.product(nests, repeat=2):
            boxes = box_family(l, r, p)
            assert is_base_for_some_topology(boxes)
            assert generate_topology(p, boxes) == product_topology(l, r, p)


def test_project_family_of_preimage_is_identity():
    for l in enumerate_nests(FiniteSpace(3)):
        p = ProductSpace.power(FiniteSpace(3), 2)
        for j in (0, 1):
            assert project_family(preimage_nest(l, j, p), j).sorted() == l.sorted()


def test_remark_needs_the_projection_condition():
    # Bare weak T0 is not enough for the tuple order to descend to coordinates.
    found = None
    cands = range(1, P22.full + 1)
    for f in enumerate_nests(P22, candidates=cands):
        if is_weakly_t0(f, 0) and not projection_condition(f, 0):
            o, po = induced_order(f), induced_order(project_family(f, 0))
            for y, z in o.pairs():
                a, b = P22.decode(y)[0], P22.decode(z)[0]
                if a != b and not po.holds(a, b):
                    found = (f, y, z)
                    break
        if found:
            break
    assert found is not None


def test_interlocking_preimages():
    for b in (1, 2, 3):
        X = FiniteSpace(b)
        p = ProductSpace.power(X, 2)
        for l in enumerate_nests(X):
            if is_interlocking(l):
                assert all(is_interlocking(preimage_nest(l, j, p)) for j in (0, 1))


def test_projection_is_a_nest_and_preimage_is_a_nest():
    for f in enumerate_nests(P22, candidates=range(1, P22.full + 1)):
        for j in (0, 1):
            assert is_nest(project_nest(f, j))
    for l in enumerate_nests(FiniteSpace(3)):
        p = ProductSpace.power(FiniteSpace(3), 2)
        assert is_nest(preimage_nest(l, 1, p))
