"""Finite point sets, subset families and finite topologies.

Points of a space of size ``n`` are the integers ``0..n-1`` and a subset is an
``int`` bitmask (bit ``i`` set iff point ``i`` is a member).  The public types
wrap those masks together with the space they live in; every algorithm works
on the raw masks.

A finite topology is stored by its *minimal open neighbourhoods*: for each
point ``x`` the intersection of all open sets containing ``x``.  Two finite
topologies are equal iff these tuples are equal, a set is open iff it contains
the neighbourhood of each of its points, and the open sets are exactly the
unions of neighbourhoods.  The full list of opens is computed lazily.
"""
from __future__ import annotations

import itertools
import random
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator

from .errors import CapacityError, InputError

# Bounds for exhaustive work.  Each has a hard ceiling that callers may not
# raise past.
EXHAUSTIVE_BOUND = 4
SAMPLED_BOUND = 6
HOMEOMORPHISM_BOUND = 7
OPENS_CEILING = 20


def bits(mask: int) -> Iterator[int]:
    """Yield the points of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


@dataclass(frozen=True)
class FiniteSpace:
    size: int

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise InputError(f"a space needs at least one point, got {self.size!r}")

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    @property
    def points(self) -> range:
        return range(self.size)

    def pointset(self, members) -> "PointSet":
        return PointSet.of(self, members)

    def family(self, sets, **kwargs) -> "SubsetFamily":
        return SubsetFamily.of(self, sets, **kwargs)

    def check_mask(self, mask: int) -> int:
        if mask < 0 or mask & ~self.full:
            raise InputError(f"set {mask:#b} has points outside a space of size {self.size}")
        return mask


@dataclass(frozen=True)
class PointSet:
    space: FiniteSpace
    mask: int

    def __post_init__(self):
        self.space.check_mask(self.mask)

    @classmethod
    def of(cls, space: FiniteSpace, members) -> "PointSet":
        if isinstance(members, PointSet):
            _same_space(space, members.space)
            return members
        members = list(members)
        for p in members:
            if not isinstance(p, int) or not 0 <= p < space.size:
                raise InputError(f"point {p!r} is not in a space of size {space.size}")
        return cls(space, mask_of(members))

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    def __iter__(self):
        return bits(self.mask)

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, point):
        return isinstance(point, int) and point >= 0 and bool(self.mask >> point & 1)

    def complement(self) -> "PointSet":
        return PointSet(self.space, self.space.full & ~self.mask)

    def __le__(self, other: "PointSet") -> bool:
        return is_subset(self.mask, other.mask)

    def __lt__(self, other: "PointSet") -> bool:
        return self.mask != other.mask and is_subset(self.mask, other.mask)

    def __and__(self, other: "PointSet") -> "PointSet":
        _same_space(self.space, other.space)
        return PointSet(self.space, self.mask & other.mask)

    def __or__(self, other: "PointSet") -> "PointSet":
        _same_space(self.space, other.space)
        return PointSet(self.space, self.mask | other.mask)

    def __repr__(self):
        return "{" + ",".join(map(str, self.members)) + "}"


def _same_space(a: FiniteSpace, b: FiniteSpace) -> None:
    if a != b:
        raise InputError(f"mismatched spaces: {a} vs {b}")


def _unique(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(dict.fromkeys(masks))


@dataclass(frozen=True)
class SubsetFamily:
    """An ordered, duplicate-free family of subsets of one space.

    The raw constructor is strict (duplicates are an error).  Use
    :meth:`of` for user input: it collapses duplicates with a warning, drops
    the empty set unless ``allow_empty`` and adjoins the whole space when
    ``include_universe`` is set.
    """

    space: FiniteSpace
    masks: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.masks, tuple):
            object.__setattr__(self, "masks", tuple(self.masks))
        for m in self.masks:
            self.space.check_mask(m)
        if len(set(self.masks)) != len(self.masks):
            raise InputError("a subset family may not repeat a set")

    @classmethod
    def of(cls, space: FiniteSpace, sets, *, allow_empty=False, include_universe=False):
        masks = []
        for s in sets:
            if isinstance(s, PointSet):
                _same_space(space, s.space)
                masks.append(s.mask)
            elif isinstance(s, int):
                masks.append(space.check_mask(s))
            else:
                masks.append(PointSet.of(space, s).mask)
        if not allow_empty and 0 in masks:
            warnings.warn("empty set dropped from family (pass allow_empty=True to keep it)")
            masks = [m for m in masks if m]
        unique = _unique(masks)
        if len(unique) != len(masks):
            warnings.warn("duplicate sets collapsed in family")
        if include_universe and space.full not in unique:
            unique += (space.full,)
        return cls(space, unique)

    @classmethod
    def collapse(cls, space: FiniteSpace, masks: Iterable[int]) -> "SubsetFamily":
        """Build a family from masks, silently dropping repeats."""
        return cls(space, _unique(masks))

    def __iter__(self):
        return (PointSet(self.space, m) for m in self.masks)

    def __len__(self):
        return len(self.masks)

    def __contains__(self, s):
        if isinstance(s, PointSet):
            return s.space == self.space and s.mask in self.masks
        return s in self.masks

    def union(self, other: "SubsetFamily") -> "SubsetFamily":
        _same_space(self.space, other.space)
        return SubsetFamily.collapse(self.space, self.masks + other.masks)

    def with_universe(self) -> "SubsetFamily":
        return SubsetFamily.collapse(self.space, self.masks + (self.space.full,))

    def sorted(self) -> "SubsetFamily":
        return SubsetFamily(self.space, tuple(sorted(self.masks)))

    def as_lists(self) -> list[list[int]]:
        return [list(bits(m)) for m in self.masks]

    def __repr__(self):
        return "{" + ", ".join(repr(s) for s in self) + "}"


def neighbourhoods(space: FiniteSpace, masks: Iterable[int]) -> tuple[int, ...]:
    """Minimal neighbourhood of each point in the topology with subbase ``masks``."""
    nb = [space.full] * space.size
    for m in masks:
        for x in bits(m):
            nb[x] &= m
    return tuple(nb)


@dataclass(frozen=True)
class Topology:
    space: FiniteSpace
    neighborhoods: tuple[int, ...]

    def __post_init__(self):
        nb = self.neighborhoods
        if len(nb) != self.space.size:
            raise InputError("one neighbourhood per point is required")
        for x, u in enumerate(nb):
            self.space.check_mask(u)
            if not u >> x & 1:
                raise InputError(f"neighbourhood of {x} does not contain it")
            if any(not is_subset(nb[y], u) for y in bits(u)):
                raise InputError(f"neighbourhood of {x} is not open")

    @classmethod
    def from_opens(cls, space: FiniteSpace, opens) -> "Topology":
        """Validate a complete list of open sets and convert it."""
        masks = set()
        for s in opens:
            masks.add(s.mask if isinstance(s, PointSet) else
                      space.check_mask(s) if isinstance(s, int) else PointSet.of(space, s).mask)
        if 0 not in masks or space.full not in masks:
            raise InputError("a topology must contain the empty set and the whole space")
        for a, b in itertools.combinations(masks, 2):
            if a | b not in masks:
                raise InputError(f"opens not closed under union: {list(bits(a))} | {list(bits(b))}")
            if a & b not in masks:
                raise InputError(f"opens not closed under intersection: {list(bits(a))} & {list(bits(b))}")
        return cls(space, neighbourhoods(space, masks))

    @classmethod
    def discrete(cls, space: FiniteSpace) -> "Topology":
        return cls(space, tuple(1 << x for x in space.points))

    @classmethod
    def indiscrete(cls, space: FiniteSpace) -> "Topology":
        return cls(space, (space.full,) * space.size)

    def is_open(self, s) -> bool:
        mask = s.mask if isinstance(s, PointSet) else s
        return all(is_subset(self.neighborhoods[x], mask) for x in bits(mask))

    @cached_property
    def open_masks(self) -> tuple[int, ...]:
        if self.space.size > OPENS_CEILING:
            raise CapacityError("open-set listing", self.space.size, OPENS_CEILING)
        found = {0}
        for u in set(self.neighborhoods):
            found |= {v | u for v in found}
        return tuple(sorted(found))

    @property
    def opens(self) -> SubsetFamily:
        return SubsetFamily(self.space, self.open_masks)

    def closed_masks(self) -> tuple[int, ...]:
        return tuple(sorted(self.space.full & ~m for m in self.open_masks))

    def is_discrete(self) -> bool:
        return all(u == 1 << x for x, u in enumerate(self.neighborhoods))

    def is_t1(self) -> bool:
        return self.is_discrete()

    def __repr__(self):
        return f"Topology(n={self.space.size}, nbhds={[list(bits(u)) for u in self.neighborhoods]})"


def generate_topology(space: FiniteSpace, subbase: SubsetFamily) -> Topology:
    """Smallest topology on ``space`` containing every set of ``subbase``."""
    _same_space(space, subbase.space)
    return Topology(space, neighbourhoods(space, subbase.masks))


def _components(t: Topology) -> list[int]:
    parent = list(t.space.points)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, u in enumerate(t.neighborhoods):
        for y in bits(u):
            parent[find(y)] = find(x)
    comps: dict[int, int] = {}
    for x in t.space.points:
        comps[find(x)] = comps.get(find(x), 0) | 1 << x
    return sorted(comps.values())


def components(t: Topology) -> list[PointSet]:
    """Connected components, which in a finite space are the minimal nonempty clopens."""
    return [PointSet(t.space, m) for m in _components(t)]


def is_connected(t: Topology) -> bool:
    return len(_components(t)) == 1


def is_clopen(t: Topology, s: PointSet) -> bool:
    _same_space(t.space, s.space)
    return t.is_open(s.mask) and t.is_open(t.space.full & ~s.mask)


def clopen_masks(t: Topology) -> tuple[int, ...]:
    comps = _components(t)
    out = []
    for pick in range(1 << len(comps)):
        out.append(mask_of_union(comps[i] for i in bits(pick)))
    return tuple(sorted(out))


def mask_of_union(masks: Iterable[int]) -> int:
    m = 0
    for x in masks:
        m |= x
    return m


def _degree_profile(t: Topology) -> list[tuple[int, int]]:
    indeg = [0] * t.space.size
    for u in t.neighborhoods:
        for y in bits(u):
            indeg[y] += 1
    return [(u.bit_count(), indeg[x]) for x, u in enumerate(t.neighborhoods)]


def find_homeomorphism(a: Topology, b: Topology, bound: int = HOMEOMORPHISM_BOUND):
    """Return a point bijection mapping the opens of ``a`` onto those of ``b``, or None.

    A bijection is a homeomorphism of finite spaces iff it carries each
    minimal neighbourhood onto the minimal neighbourhood of the image point.
    Candidates are pruned by (neighbourhood size, in-degree) per point.
    """
    if bound > HOMEOMORPHISM_BOUND:
        raise CapacityError("homeomorphism bound", bound, HOMEOMORPHISM_BOUND)
    n = a.space.size
    if max(n, b.space.size) > bound:
        raise CapacityError("homeomorphism search", max(n, b.space.size), bound)
    if n != b.space.size:
        return None
    if len(a.open_masks) != len(b.open_masks):
        return None
    if sorted(m.bit_count() for m in a.open_masks) != sorted(m.bit_count() for m in b.open_masks):
        return None
    pa, pb = _degree_profile(a), _degree_profile(b)
    if sorted(pa) != sorted(pb):
        return None
    na, nb = a.neighborhoods, b.neighborhoods
    sigma = [-1] * n
    used = [False] * n

    def consistent(x, fx):
        for y in range(x):
            fy = sigma[y]
            if bool(na[x] >> y & 1) != bool(nb[fx] >> fy & 1):
                return False
            if bool(na[y] >> x & 1) != bool(nb[fy] >> fx & 1):
                return False
        return True

    def extend(x):
        if x == n:
            return True
        for fx in range(n):
            if not used[fx] and pa[x] == pb[fx] and consistent(x, fx):
                sigma[x] = fx
                used[fx] = True
                if extend(x + 1):
                    return True
                used[fx] = False
        sigma[x] = -1
        return False

    return tuple(sigma) if extend(0) else None


def are_homeomorphic(a: Topology, b: Topology, bound: int = HOMEOMORPHISM_BOUND) -> bool:
    return find_homeomorphism(a, b, bound) is not None


def _check_bound(n: int, bound: int, ceiling: int, what: str) -> None:
    if bound > ceiling:
        raise CapacityError(f"{what} bound", bound, ceiling)
    if n > bound:
        raise CapacityError(what, n, bound)


def _family_dfs(cands: list[int], chain_only: bool) -> Iterator[tuple[int, ...]]:
    # Yields every sub-list of ``cands`` (sorted ascending) in lexicographic
    # order; with ``chain_only`` only the ⊆-chains.
    stack: list[int] = []

    def rec(start):
        yield tuple(stack)
        for i in range(start, len(cands)):
            c = cands[i]
            if chain_only and stack and not is_subset(stack[-1], c):
                continue
            stack.append(c)
            yield from rec(i + 1)
            stack.pop()

    yield from rec(0)


def enumerate_families(space: FiniteSpace,
                       predicate: Callable[[SubsetFamily], bool] | None = None, *,
                       allow_empty: bool = False, bound: int = EXHAUSTIVE_BOUND,
                       sample: int | None = None, seed: int = 0,
                       shard: tuple[int, int] = (0, 1)) -> Iterator[SubsetFamily]:
    """Stream duplicate-free families of subsets of ``space``.

    Exhaustive mode yields each family of nonempty subsets (the whole space
    included; the empty set only with ``allow_empty``) exactly once, ordered
    lexicographically by sorted mask list.  ``shard=(i, k)`` keeps positions
    ``i, i+k, i+2k, ...`` of that order so ``k`` workers cover it disjointly.

    With ``sample=N`` the stream is ``N`` pseudo-random families drawn with
    ``seed`` (half random chains, half random families), filtered by
    ``predicate``; this mode is allowed up to the sampled bound.
    """
    n = space.size
    lo = 0 if allow_empty else 1
    if sample is None:
        _check_bound(n, bound, EXHAUSTIVE_BOUND, "exhaustive enumeration")
        cands = list(range(lo, space.full + 1))
        i, k = shard
        for pos, masks in enumerate(_family_dfs(cands, chain_only=False)):
            if pos % k != i:
                continue
            fam = SubsetFamily(space, masks)
            if predicate is None or predicate(fam):
                yield fam
        return
    if n > SAMPLED_BOUND:
        raise CapacityError("sampled enumeration", n, SAMPLED_BOUND)
    rng = random.Random(seed)
    for _ in range(sample):
        fam = random_family(space, rng, allow_empty=allow_empty)
        if predicate is None or predicate(fam):
            yield fam


def enumerate_nests(space: FiniteSpace, *, allow_empty: bool = False,
                    bound: int = EXHAUSTIVE_BOUND, candidates: Iterable[int] | None = None
                    ) -> Iterator[SubsetFamily]:
    """Every ⊆-chain of subsets, in the same order as :func:`enumerate_families`.

    ``candidates`` restricts the member sets (e.g. to the opens of a
    topology); the size bound is skipped when it is given.
    """
    if candidates is None:
        _check_bound(space.size, bound, EXHAUSTIVE_BOUND, "nest enumeration")
        cands = list(range(0 if allow_empty else 1, space.full + 1))
    else:
        cands = sorted(set(candidates) - ({0} if not allow_empty else set()))
    for masks in _family_dfs(cands, chain_only=True):
        yield SubsetFamily(space, masks)


def random_family(space: FiniteSpace, rng: random.Random, *, allow_empty: bool = False,
                  max_sets: int = 6) -> SubsetFamily:
    if rng.random() < 0.5:
        return random_nest(space, rng, allow_empty=allow_empty)
    lo = 0 if allow_empty else 1
    k = rng.randint(0, max_sets)
    return SubsetFamily.collapse(space, (rng.randint(lo, space.full) for _ in range(k)))


def random_nest(space: FiniteSpace, rng: random.Random, *, allow_empty: bool = False,
                universe: bool | None = None) -> SubsetFamily:
    """A random sub-chain of a random maximal chain."""
    order = list(space.points)
    rng.shuffle(order)
    prefixes = []
    m = 0
    for p in order:
        m |= 1 << p
        prefixes.append(m)
    if allow_empty:
        prefixes.insert(0, 0)
    keep = [m for m in prefixes if rng.random() < 0.5]
    if universe is not None:
        keep = [m for m in keep if m != space.full] + ([space.full] if universe else [])
    return SubsetFamily(space, tuple(keep))


def enumerate_topologies(space: FiniteSpace, bound: int = 5) -> Iterator[Topology]:
    """Every topology on ``space``, ordered lexicographically by neighbourhood tuple.

    A tuple of neighbourhoods defines a topology iff each contains its point
    and contains the neighbourhood of every member; the search extends tuples
    point by point and checks that condition on the assigned prefix.
    """
    if bound > 5:
        raise CapacityError("topology enumeration bound", bound, 5)
    n = space.size
    if n > bound:
        raise CapacityError("topology enumeration", n, bound)
    full = space.full
    options = [sorted(m for m in range(full + 1) if m >> x & 1) for x in space.points]
    nb = [0] * n

    def ok(x):
        u = nb[x]
        for y in range(x):
            if u >> y & 1 and not is_subset(nb[y], u):
                return False
            if nb[y] >> x & 1 and not is_subset(u, nb[y]):
                return False
        return True

    def rec(x):
        if x == n:
            yield Topology(space, tuple(nb))
            return
        for u in options[x]:
            nb[x] = u
            if ok(x):
                yield from rec(x + 1)

    yield from rec(0)
