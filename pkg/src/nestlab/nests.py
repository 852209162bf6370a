"""Predicates and constructions on families of subsets.

Conventions used throughout:

* The intersection of an empty collection of sets is the whole space and the
  union of an empty collection is the empty set.
* The order induced by a family is strict: ``x ◁ y`` iff some member
  contains ``x`` and not ``y``.  The reflexive version is
  :meth:`Relation.reflexive_closure`.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import CapacityError, InputError
from .space import FiniteSpace, PointSet, SubsetFamily, bits, is_subset, mask_of

SCATTER_CEILING = 20


class SeparationKind(enum.IntEnum):
    NONE = 0
    T0 = 1
    T1 = 2

    def __str__(self):
        return self.name.lower()


class OrderClass(enum.Enum):
    NOT_TRANSITIVE = "not-transitive"
    PARTIAL = "partial"
    # Every linear order on a finite carrier is a well-order, so LINEAR is
    # never returned by classify_order; it stays for infinite-carrier readers.
    LINEAR = "linear"
    WELL = "well"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Relation:
    """A binary relation stored as successor bitmasks: ``rows[x]`` = {y : x R y}.

    Self-pairs are rejected unless ``loops`` is set.
    """

    space: FiniteSpace
    rows: tuple[int, ...]
    loops: bool = False

    def __post_init__(self):
        if not isinstance(self.rows, tuple):
            object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.rows) != self.space.size:
            raise InputError("a relation needs one row per point")
        for x, row in enumerate(self.rows):
            self.space.check_mask(row)
            if not self.loops and row >> x & 1:
                raise InputError(f"self-pair ({x},{x}) in a relation not flagged with loops")

    @classmethod
    def from_pairs(cls, space: FiniteSpace, pairs: Iterable[tuple[int, int]], loops=False):
        rows = [0] * space.size
        for x, y in pairs:
            for p in (x, y):
                if not isinstance(p, int) or not 0 <= p < space.size:
                    raise InputError(f"pair ({x},{y}) leaves a space of size {space.size}")
            rows[x] |= 1 << y
        return cls(space, tuple(rows), loops)

    @classmethod
    def chain(cls, space: FiniteSpace, order: Iterable[int] | None = None):
        """The strict linear order listing points in ``order`` (default 0 < 1 < ...)."""
        order = list(space.points if order is None else order)
        if sorted(order) != list(space.points):
            raise InputError("order must list every point once")
        return cls.from_pairs(space, itertools.combinations(order, 2))

    def holds(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, row in enumerate(self.rows) for y in bits(row)]

    def predecessors(self, y: int) -> int:
        return mask_of(x for x, row in enumerate(self.rows) if row >> y & 1)

    def is_irreflexive(self) -> bool:
        return all(not row >> x & 1 for x, row in enumerate(self.rows))

    def is_transitive(self) -> bool:
        rows = self.rows
        for x, row in enumerate(rows):
            for y in bits(row):
                if not is_subset(rows[y], row):
                    return False
        return True

    def is_antisymmetric(self) -> bool:
        return all(not (x != y and self.holds(y, x)) for x, y in self.pairs())

    def is_total(self) -> bool:
        """Every two distinct points are comparable."""
        n = self.space.size
        return all(self.holds(x, y) or self.holds(y, x)
                   for x in range(n) for y in range(x + 1, n))

    def is_linear(self) -> bool:
        return self.is_irreflexive() and self.is_transitive() and self.is_total()

    def reflexive_closure(self) -> "Relation":
        return Relation(self.space, tuple(row | 1 << x for x, row in enumerate(self.rows)), True)

    def restricted_to(self, mask: int) -> "Relation":
        return Relation(self.space, tuple(row & mask if mask >> x & 1 else 0
                                          for x, row in enumerate(self.rows)), self.loops)

    def __repr__(self):
        return f"Relation(n={self.space.size}, {self.pairs()})"


def reverse(r: Relation) -> Relation:
    rows = [0] * r.space.size
    for x, y in r.pairs():
        rows[y] |= 1 << x
    return Relation(r.space, tuple(rows), r.loops)


def is_nest(f: SubsetFamily) -> bool:
    ms = sorted(f.masks, key=int.bit_count)
    return all(is_subset(a, b) for a, b in zip(ms, ms[1:]))


def incomparable_pair(f: SubsetFamily):
    """Two members neither of which contains the other, or None."""
    for a, b in itertools.combinations(f.masks, 2):
        if not is_subset(a, b) and not is_subset(b, a):
            return PointSet(f.space, a), PointSet(f.space, b)
    return None


def _signatures(f: SubsetFamily) -> list[int]:
    # Bit i of sig[x] is set iff point x lies in the i-th member.
    sig = [0] * f.space.size
    for i, m in enumerate(f.masks):
        for x in bits(m):
            sig[x] |= 1 << i
    return sig


def separation_kind(f: SubsetFamily) -> SeparationKind:
    sig = _signatures(f)
    t1 = True
    for x, y in itertools.combinations(f.space.points, 2):
        a, b = sig[x], sig[y]
        if a == b:
            return SeparationKind.NONE
        if not (a & ~b and b & ~a):
            t1 = False
    return SeparationKind.T1 if t1 else SeparationKind.T0


def unseparated_pair(f: SubsetFamily, kind: SeparationKind = SeparationKind.T0):
    """A pair witnessing that ``f`` fails ``kind`` separation, or None."""
    sig = _signatures(f)
    for x, y in itertools.permutations(f.space.points, 2):
        a, b = sig[x], sig[y]
        if kind == SeparationKind.T0 and a == b:
            return x, y
        if kind == SeparationKind.T1 and not a & ~b:
            return x, y
    return None


def induced_order(f: SubsetFamily) -> Relation:
    full = f.space.full
    rows = [0] * f.space.size
    for m in f.masks:
        out = full & ~m
        for x in bits(m):
            rows[x] |= out
    return Relation(f.space, tuple(rows))


def classify_order(r: Relation) -> OrderClass:
    if not r.is_transitive():
        return OrderClass.NOT_TRANSITIVE
    if r.is_irreflexive() and r.is_total():
        return OrderClass.WELL
    return OrderClass.PARTIAL


def maximal_elements(r: Relation, mask: int) -> int:
    """Points of ``mask`` with no strict successor inside ``mask``."""
    return mask_of(x for x in bits(mask) if not r.rows[x] & mask & ~(1 << x))


def minimal_elements(r: Relation, mask: int) -> int:
    return mask_of(y for y in bits(mask)
                   if not any(r.rows[x] >> y & 1 for x in bits(mask & ~(1 << y))))


def meet_of_strict_supersets(f: SubsetFamily, t: int) -> int:
    out = f.space.full
    for m in f.masks:
        if m != t and is_subset(t, m):
            out &= m
    return out


def join_of_strict_subsets(f: SubsetFamily, t: int) -> int:
    out = 0
    for m in f.masks:
        if m != t and is_subset(m, t):
            out |= m
    return out


def _member_mask(f: SubsetFamily, t) -> int:
    mask = t.mask if isinstance(t, PointSet) else t
    if mask not in f.masks:
        raise InputError(f"{t!r} is not a member of the family")
    return mask


def intersection_trigger(f: SubsetFamily, t: PointSet) -> bool:
    m = _member_mask(f, t)
    return meet_of_strict_supersets(f, m) == m


def union_witness(f: SubsetFamily, t: PointSet) -> bool:
    m = _member_mask(f, t)
    return join_of_strict_subsets(f, m) == m


def interlocking_failure(f: SubsetFamily) -> PointSet | None:
    """A member equal to the meet of its strict supersets but not to the
    join of its strict subsets, or None when ``f`` is interlocking."""
    for m in f.masks:
        if meet_of_strict_supersets(f, m) == m and join_of_strict_subsets(f, m) != m:
            return PointSet(f.space, m)
    return None


def is_interlocking(f: SubsetFamily) -> bool:
    return interlocking_failure(f) is None


def scatter_failure(f: SubsetFamily, *, adjoin_universe: bool = False) -> PointSet | None:
    """A nonempty set meeting no member in exactly one point, or None."""
    n = f.space.size
    if n > SCATTER_CEILING:
        raise CapacityError("scattering scan", n, SCATTER_CEILING)
    masks = list(f.masks)
    if adjoin_universe:
        masks.append(f.space.full)
    for a in range(1, f.space.full + 1):
        if not any((a & s).bit_count() == 1 for s in masks):
            return PointSet(f.space, a)
    return None


def scatters(f: SubsetFamily, *, adjoin_universe: bool = False) -> bool:
    return scatter_failure(f, adjoin_universe=adjoin_universe) is None


def well_ordered_by_inclusion(f: SubsetFamily) -> bool:
    """Every nonempty subfamily has a ⊆-least member.

    For a finite family this holds iff every two members are comparable:
    two-member subfamilies force comparability and a finite chain has a least
    element in each subfamily.
    """
    return is_nest(f)


def has_min_witness_property(f: SubsetFamily) -> bool:
    """Each nonempty A contains a point lying in every member that meets A."""
    for a in range(1, f.space.full + 1):
        meeting = [m for m in f.masks if m & a]
        common = a
        for m in meeting:
            common &= m
        if not common:
            return False
    return True


def is_dense_order(r: Relation) -> bool:
    if not r.is_transitive():
        raise InputError("density is defined for transitive relations")
    rows = r.rows
    for x, y in r.pairs():
        if not any(rows[z] >> y & 1 for z in bits(rows[x])):
            return False
    return True


def dense_nest_criterion(f: SubsetFamily) -> bool:
    """For all x != y: members L ⊊ M with x in L, y outside M (or the roles swapped)."""
    if not is_nest(f):
        raise InputError("the density criterion needs a nest")
    strict = [(a, b) for a, b in itertools.permutations(f.masks, 2)
              if a != b and is_subset(a, b)]
    for x, y in itertools.combinations(f.space.points, 2):
        if not any((a >> x & 1 and not b >> y & 1) or (a >> y & 1 and not b >> x & 1)
                   for a, b in strict):
            return False
    return True
