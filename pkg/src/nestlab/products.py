"""Nests on finite powers X^I and on function spaces Y^X.

A tuple ``(c_0, ..., c_{I-1})`` of base points is encoded as the integer
``sum(c_j * b**j)`` where ``b`` is the base size, so coordinate 0 is the
least significant digit.  Product spaces are ordinary finite spaces under
this encoding and reuse every other module unchanged.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import InputError
from .nests import SeparationKind, is_nest
from .space import FiniteSpace, SubsetFamily, Topology, bits, generate_topology, is_subset


@dataclass(frozen=True)
class ProductSpace(FiniteSpace):
    base: FiniteSpace = None
    index_count: int = 1

    def __post_init__(self):
        super().__post_init__()
        if not isinstance(self.base, FiniteSpace) or self.index_count < 1:
            raise InputError("a product needs a base space and at least one coordinate")
        if self.size != self.base.size ** self.index_count:
            raise InputError("product size must be base size ** index count")

    @classmethod
    def power(cls, base: FiniteSpace, index_count: int) -> "ProductSpace":
        return cls(base.size ** index_count, base, index_count)

    def encode(self, coords) -> int:
        coords = tuple(coords)
        if len(coords) != self.index_count or not all(0 <= c < self.base.size for c in coords):
            raise InputError(f"{coords} is not a point of {self.base.size}^{self.index_count}")
        return sum(c * self.base.size ** j for j, c in enumerate(coords))

    def decode(self, point: int) -> tuple[int, ...]:
        b = self.base.size
        return tuple(point // b ** j % b for j in range(self.index_count))

    def check_coordinate(self, j: int) -> int:
        if not isinstance(j, int) or not 0 <= j < self.index_count:
            raise InputError(f"coordinate {j!r} out of range 0..{self.index_count - 1}")
        return j

    @cached_property
    def fibres(self) -> tuple[tuple[int, ...], ...]:
        """``fibres[j][v]`` = mask of tuples whose j-th coordinate is v."""
        out = []
        for j in range(self.index_count):
            row = [0] * self.base.size
            for p in range(self.size):
                row[self.decode(p)[j]] |= 1 << p
            out.append(tuple(row))
        return tuple(out)

    def project(self, mask: int, j: int) -> int:
        return sum(1 << v for v, fib in enumerate(self.fibres[j]) if mask & fib)

    def preimage(self, mask: int, j: int) -> int:
        out = 0
        for v in bits(mask):
            out |= self.fibres[j][v]
        return out

    def set_of_tuples(self, tuples) -> int:
        out = 0
        for t in tuples:
            out |= 1 << self.encode(t)
        return out


def _product_of(f: SubsetFamily) -> ProductSpace:
    if not isinstance(f.space, ProductSpace):
        raise InputError("family must live on a product space")
    return f.space


def _require_nest(f: SubsetFamily) -> None:
    if not is_nest(f):
        raise InputError("a nest is required")


def project_nest(f: SubsetFamily, j: int) -> SubsetFamily:
    p = _product_of(f)
    p.check_coordinate(j)
    _require_nest(f)
    return SubsetFamily.collapse(p.base, (p.project(m, j) for m in f.masks))


def preimage_nest(f: SubsetFamily, j: int, p: ProductSpace) -> SubsetFamily:
    p.check_coordinate(j)
    if f.space != p.base:
        raise InputError("family must live on the product's base space")
    _require_nest(f)
    return SubsetFamily(p, tuple(p.preimage(m, j) for m in f.masks))


def project_family(f: SubsetFamily, j: int) -> SubsetFamily:
    """Coordinate image of any family (no nest requirement)."""
    p = _product_of(f)
    return SubsetFamily.collapse(p.base, (p.project(m, j) for m in f.masks))


def _differing_pairs(p: ProductSpace, j: int):
    fib = p.fibres[j]
    for a, b in itertools.combinations(range(p.base.size), 2):
        for x in bits(fib[a]):
            for y in bits(fib[b]):
                yield x, y


def _sig(masks, size):
    sig = [0] * size
    for i, m in enumerate(masks):
        for x in bits(m):
            sig[x] |= 1 << i
    return sig


def is_weakly_t0(l: SubsetFamily, j: int) -> bool:
    p = _product_of(l)
    p.check_coordinate(j)
    sig = _sig(l.masks, p.size)
    return all(sig[x] != sig[y] for x, y in _differing_pairs(p, j))


def is_weakly_t1(l: SubsetFamily, r: SubsetFamily | None, j: int) -> bool:
    """Members of ``l`` and ``r`` together separate every two tuples that
    differ at coordinate ``j`` in both directions."""
    if r is None:
        raise InputError("weak T1 separation needs the second family")
    p = _product_of(l)
    if r.space != p:
        raise InputError("both families must live on the same product space")
    p.check_coordinate(j)
    sig = _sig(l.masks + r.masks, p.size)
    return all(sig[x] & ~sig[y] and sig[y] & ~sig[x] for x, y in _differing_pairs(p, j))


def weak_separation_kind(l: SubsetFamily, j: int, r: SubsetFamily | None = None) -> SeparationKind:
    if r is not None and is_weakly_t1(l, r, j):
        return SeparationKind.T1
    return SeparationKind.T0 if is_weakly_t0(l, j) else SeparationKind.NONE


def projection_condition(f: SubsetFamily, j: int) -> bool:
    """Every tuple outside a member has its j-th coordinate outside the
    member's projection, i.e. every member is a cylinder over coordinate j."""
    p = _product_of(f)
    p.check_coordinate(j)
    return all(p.preimage(p.project(m, j), j) == m for m in f.masks)


def projection_condition_failure(f: SubsetFamily, j: int):
    """(member, tuple) violating :func:`projection_condition`, or None."""
    p = _product_of(f)
    for m in f.masks:
        extra = p.preimage(p.project(m, j), j) & ~m
        if extra:
            x = next(bits(extra))
            return sorted(p.decode(q) for q in bits(m)), p.decode(x)
    return None


def function_space(domain_size: int, codomain: FiniteSpace) -> ProductSpace:
    """Y^X with X = {0..domain_size-1}; the function f is the tuple (f(0), f(1), ...)."""
    if domain_size < 1:
        raise InputError("the domain needs at least one point")
    return ProductSpace.power(codomain, domain_size)


def point_nest(x: int, l: SubsetFamily, fs: ProductSpace) -> SubsetFamily:
    """The sets (x, L) = {f : f(x) in L} for L in ``l``."""
    fs.check_coordinate(x)
    if l.space != fs.base:
        raise InputError("nest must live on the codomain")
    _require_nest(l)
    masks = []
    for m in l.masks:
        masks.append(sum(1 << f for f in range(fs.size) if m >> fs.decode(f)[x] & 1))
    return SubsetFamily(fs, tuple(masks))


def point_open_subbase(ls: SubsetFamily, rs: SubsetFamily, fs: ProductSpace) -> SubsetFamily:
    masks = []
    for x in range(fs.index_count):
        masks += point_nest(x, ls, fs).masks + point_nest(x, rs, fs).masks
    return SubsetFamily.collapse(fs, masks)


def product_topology(l: SubsetFamily, r: SubsetFamily, p: ProductSpace) -> Topology:
    """Topology on X^I generated by preimages of both nests along every coordinate."""
    masks = []
    for j in range(p.index_count):
        masks += [p.preimage(m, j) for m in l.masks + r.masks]
    return generate_topology(p, SubsetFamily.collapse(p, masks))


def box_family(l: SubsetFamily, r: SubsetFamily, p: ProductSpace) -> SubsetFamily:
    """Sets ⋂_{j in J} π_j⁻¹(L_j ∩ R_j) for J ⊆ I, with L_j, R_j drawn from
    each nest plus the whole base (the empty intersection is X^I)."""
    full = p.base.full
    cells = sorted({a & b for a in l.masks + (full,) for b in r.masks + (full,)})
    out = set()
    for choice in itertools.product(cells, repeat=p.index_count):
        m = p.full
        for j, c in enumerate(choice):
            m &= p.preimage(c, j)
        out.add(m)
    return SubsetFamily(p, tuple(sorted(out)))


def is_base_for_some_topology(f: SubsetFamily) -> bool:
    """Members cover the space and each point of a pairwise intersection
    lies in a member inside that intersection."""
    masks = f.masks
    cover = 0
    for m in masks:
        cover |= m
    if cover != f.space.full:
        return False
    for a, b in itertools.combinations_with_replacement(masks, 2):
        inter = a & b
        for x in bits(inter):
            if not any(c >> x & 1 and is_subset(c, inter) for c in masks):
                return False
    return True
