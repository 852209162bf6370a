"""Topologies from orders, and searches for nests realising a topology.

A finite space is homeomorphic to a finite ordinal iff it is discrete: the
order topology of a finite linear order is discrete (each point is the
intersection of an open down-ray and an open up-ray), and a bijection
between discrete spaces is a homeomorphism.  :func:`ordinal_profile` uses
this for its first condition and searches nests for the other four.

The searches for "a nest of clopen sets that scatters" only visit maximal
chains.  Scattering is monotone in the family, every chain extends to a
maximal one, and the extra side conditions (members differ from the union
of their strict subsets; differences form a base) are either automatic for
chains of nonempty sets or monotone too, so nothing is lost.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field

from .errors import CapacityError, InputError
from .nests import (Relation, SeparationKind, induced_order, interlocking_failure,
                    is_dense_order, is_interlocking, is_nest, reverse, scatter_failure,
                    separation_kind, unseparated_pair, well_ordered_by_inclusion)
from .space import (FiniteSpace, PointSet, SubsetFamily, Topology, bits, clopen_masks,
                    enumerate_nests, generate_topology, is_subset)

PROFILE_BOUND = 5
NEIGHT_BOUND = 4
DEFAULT_SEARCH_BOUND = 200_000


def _require_linear(r: Relation) -> None:
    if not r.is_linear():
        raise InputError("a strict linear order is required")


def _require_transitive(r: Relation) -> None:
    if not r.is_transitive():
        raise InputError("a transitive relation is required")


def _strict_rays(r: Relation) -> list[int]:
    downs = [r.predecessors(x) & ~(1 << x) for x in r.space.points]
    ups = [row & ~(1 << x) for x, row in enumerate(r.rows)]
    return downs + ups


def order_topology(r: Relation) -> Topology:
    """Topology generated by the open rays of a strict linear order."""
    _require_linear(r)
    return generate_topology(r.space, SubsetFamily.collapse(r.space, _strict_rays(r)))


def strict_ray_topology(r: Relation) -> Topology:
    """Open-ray topology for any transitive relation (the probe's reading of 𝒯_<)."""
    _require_transitive(r)
    return generate_topology(r.space, SubsetFamily.collapse(r.space, _strict_rays(r)))


def interval_topology(r: Relation) -> Topology:
    """Topology whose closed subbase is every closed ray {y ⊴ x} and {y ⊵ x}."""
    _require_transitive(r)
    le = r.reflexive_closure()
    full = r.space.full
    closed = [le.predecessors(x) for x in r.space.points] + list(le.rows)
    return generate_topology(r.space, SubsetFamily.collapse(r.space, (full & ~c for c in closed)))


def ray_nests(r: Relation) -> tuple[SubsetFamily, SubsetFamily]:
    """Nonempty strict down-rays and up-rays of a linear order, smallest first."""
    _require_linear(r)
    downs = sorted({r.predecessors(x) for x in r.space.points} - {0}, key=int.bit_count)
    ups = sorted({row for row in r.rows} - {0}, key=int.bit_count)
    return SubsetFamily(r.space, tuple(downs)), SubsetFamily(r.space, tuple(ups))


def _down_and_up_sets(r: Relation) -> list[int]:
    le = r.reflexive_closure()
    strict = _strict_rays(r)
    return strict + [le.predecessors(x) for x in r.space.points] + list(le.rows)


@dataclass
class VdwVerdict:
    generated: Topology
    order: Relation
    order_topology: Topology | None
    hypothesis: bool                 # the union of the two nests T1-separates
    claims: dict[int, bool]
    witnesses: dict[int, object] = field(default_factory=dict)
    interlocking: tuple[bool, bool] = (False, False)

    def to_dict(self) -> dict:
        return {
            "hypothesis_t1_union": self.hypothesis,
            "order": self.order.pairs(),
            "claims": {str(k): v for k, v in sorted(self.claims.items())},
            "interlocking": list(self.interlocking),
            "witnesses": {str(k): _jsonable(v) for k, v in sorted(self.witnesses.items())},
        }


def _jsonable(v):
    if isinstance(v, PointSet):
        return list(v)
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    return v


def vdw_verdict(space: FiniteSpace, l: SubsetFamily, r: SubsetFamily) -> VdwVerdict:
    """Evaluate the three nest-characterisation claims for a pair of nests.

    claim 1: every open set of the induced order is in the generated topology;
    claim 2: the generated topology is generated by those down-sets and
    up-sets of the induced order that it contains (its GO form);
    claim 3: both nests interlock and the generated topology is the order
    topology.
    """
    for name, fam in (("L", l), ("R", r)):
        if fam.space != space:
            raise InputError(f"family {name} lives in a different space")
        if not is_nest(fam):
            raise InputError(f"family {name} is not a nest")
    union = l.union(r)
    generated = generate_topology(space, union)
    order = induced_order(l)
    hypothesis = separation_kind(union) == SeparationKind.T1
    claims, witnesses = {}, {}
    otop = order_topology(order) if order.is_linear() else None
    if otop is None:
        pair = unseparated_pair(l)
        for k in (1, 2, 3):
            claims[k] = False
            witnesses[k] = ("order not linear", pair)
    else:
        missing = [u for u in otop.neighborhoods if not generated.is_open(u)]
        claims[1] = not missing
        if missing:
            witnesses[1] = PointSet(space, missing[0])
        rays = [m for m in _down_and_up_sets(order) if generated.is_open(m)]
        go = generate_topology(space, SubsetFamily.collapse(space, rays))
        claims[2] = go == generated
        if not claims[2]:
            witnesses[2] = PointSet(space, next(u for u in generated.neighborhoods if not go.is_open(u)))
        bad = interlocking_failure(l) or interlocking_failure(r)
        claims[3] = bad is None and generated == otop
        if bad is not None:
            witnesses[3] = bad
        elif generated != otop:
            witnesses[3] = PointSet(space, next(a for a, b in zip(generated.neighborhoods,
                                                                  otop.neighborhoods) if a != b))
    return VdwVerdict(generated, order, otop, hypothesis, claims, witnesses,
                      (is_interlocking(l), is_interlocking(r)))


def is_base(t: Topology, masks) -> bool:
    """Whether ``masks`` is a base for ``t``: all open, and each minimal
    neighbourhood is one of them (a finite base must contain those)."""
    ms = set(masks)
    return all(t.is_open(m) for m in ms) and all(u in ms for u in t.neighborhoods)


def _chains(space: FiniteSpace, cands, budget: list[int], bound: int):
    for fam in enumerate_nests(space, candidates=cands):
        budget[0] += 1
        if budget[0] > bound:
            raise CapacityError("nest search", budget[0], bound)
        yield fam


def _maximal_chains(space: FiniteSpace, cands, budget: list[int], bound: int):
    cands = sorted(set(cands) - {0})
    for fam in _chains(space, cands, budget, bound):
        ms = set(fam.masks)
        if not any(c not in ms and all(is_subset(c, m) or is_subset(m, c) for m in ms)
                   for c in cands):
            yield fam


@dataclass
class OrdinalProfile:
    conditions: tuple[bool, bool, bool, bool, bool]
    witnesses: dict[int, object]
    nests_examined: int

    def all_equal(self) -> bool:
        return len(set(self.conditions)) == 1

    def to_dict(self) -> dict:
        wit = {}
        for k, v in sorted(self.witnesses.items()):
            if isinstance(v, tuple):
                wit[str(k)] = [f.as_lists() if isinstance(f, SubsetFamily) else v for f in v]
            elif isinstance(v, SubsetFamily):
                wit[str(k)] = v.as_lists()
            else:
                wit[str(k)] = v
        return {"conditions": list(self.conditions), "witnesses": wit,
                "nests_examined": self.nests_examined}


def _interlocking_pair_search(t: Topology, nests: list[SubsetFamily], extra) -> tuple | None:
    # Pairs (L, R) of interlocking nests with T1 union generating t.  For
    # nests, a T1 union forces both to be T0 with reverse orders, so R is
    # looked up by the reverse of L's order.
    by_order = defaultdict(list)
    for fam in nests:
        if separation_kind(fam) >= SeparationKind.T0 and is_interlocking(fam):
            by_order[induced_order(fam).rows].append(fam)
    for rows, group in by_order.items():
        rev = reverse(Relation(t.space, rows)).rows
        for l in group:
            for r in by_order.get(rev, ()):
                if not extra(l, r):
                    continue
                u = l.union(r)
                if separation_kind(u) == SeparationKind.T1 and generate_topology(t.space, u) == t:
                    return l, r
    return None


def ordinal_profile(t: Topology, search_bound: int = DEFAULT_SEARCH_BOUND, *,
                    adjoin_universe: bool = True) -> OrdinalProfile:
    """Evaluate the five ordinal conditions on a finite space.

    1. homeomorphic to an ordinal (discrete, see module docs);
    2. interlocking nests of opens, T1 union subbase, L scatters;
    3. as 2 with one nest well-ordered by ⊂ or ⊃;
    4. scattered by a clopen nest whose members differ from the union of their
       strict subsets and whose differences L - M form a base;
    5. scattered by a clopen nest (all finite sets are compact).

    Scattering is evaluated with the whole space adjoined unless
    ``adjoin_universe`` is false.  Differences in condition 4 include
    ``L - ∅ = L``.
    """
    n = t.space.size
    if n > PROFILE_BOUND:
        raise CapacityError("ordinal profile", n, PROFILE_BOUND)
    budget = [0]
    witnesses: dict[int, object] = {}
    c1 = t.is_discrete()
    if not c1:
        witnesses[1] = [list(bits(u)) for u in t.neighborhoods if u.bit_count() > 1][0]

    opens = [m for m in t.open_masks if m]
    nests = list(_chains(t.space, opens, budget, search_bound))

    def scat(l, r=None):
        return scatter_failure(l, adjoin_universe=adjoin_universe) is None

    pair2 = _interlocking_pair_search(t, nests, scat)
    if pair2:
        witnesses[2] = pair2

    def one_well_ordered(l, r):
        # ⊃ well-orders a finite family exactly when ⊂ does.
        return well_ordered_by_inclusion(l) or well_ordered_by_inclusion(r)

    pair3 = _interlocking_pair_search(t, nests, one_well_ordered)
    if pair3:
        witnesses[3] = pair3

    clopens = [m for m in clopen_masks(t) if m]
    c4 = c5 = False
    for fam in _maximal_chains(t.space, clopens, budget, search_bound):
        if not scat(fam):
            continue
        if not c5:
            c5 = True
            witnesses[5] = fam
        diffs = set(fam.masks) | {a & ~b for a in fam.masks for b in fam.masks}
        distinct = all(m != _join_below(fam, m) for m in fam.masks)
        if distinct and is_base(t, diffs - {0}):
            c4 = True
            witnesses[4] = fam
            break
    return OrdinalProfile((c1, pair2 is not None, pair3 is not None, c4, c5),
                          witnesses, budget[0])


def _join_below(fam: SubsetFamily, m: int) -> int:
    out = 0
    for k in fam.masks:
        if k != m and is_subset(k, m):
            out |= k
    return out


def cardinal_scatter_check(t: Topology, *, adjoin_universe: bool = False,
                           search_bound: int = DEFAULT_SEARCH_BOUND) -> bool:
    """Is the space scattered by a clopen nest whose members are all smaller
    than the space?  The raw reading (default) does not adjoin the space
    when testing scattering."""
    n = t.space.size
    if n > PROFILE_BOUND:
        raise CapacityError("cardinal scatter check", n, PROFILE_BOUND)
    cands = [m for m in clopen_masks(t) if m and m.bit_count() < n]
    budget = [0]
    for fam in _maximal_chains(t.space, cands, budget, search_bound):
        if scatter_failure(fam, adjoin_universe=adjoin_universe) is None:
            return True
    return False


def _chain_cover(masks: list[int]) -> list[list[int]]:
    """Minimum partition of distinct sets into ⊆-chains (Dilworth, via matching)."""
    k = len(masks)
    succ = [[j for j in range(k) if j != i and is_subset(masks[i], masks[j])] for i in range(k)]
    match_to = [-1] * k

    def augment(i, seen):
        for j in succ[i]:
            if not seen[j]:
                seen[j] = True
                if match_to[j] < 0 or augment(match_to[j], seen):
                    match_to[j] = i
                    return True
        return False

    for i in range(k):
        augment(i, [False] * k)
    nxt = [-1] * k
    for j, i in enumerate(match_to):
        if i >= 0:
            nxt[i] = j
    heads = [j for j in range(k) if match_to[j] < 0]
    chains = []
    for h in heads:
        c, i = [], h
        while i >= 0:
            c.append(masks[i])
            i = nxt[i]
        chains.append(c)
    return chains


def neight(t: Topology):
    """Least k such that k nests of open sets have a union generating ``t``.

    Returns ``(k, nests)``.  The indiscrete topology is generated by the
    empty subbase, so its neight is 0.  Search is exhaustive over subsets of
    the nontrivial opens; a subset is the union of k nests iff its minimum
    chain cover has at most k chains.
    """
    n = t.space.size
    if n > NEIGHT_BOUND:
        raise CapacityError("neight search", n, NEIGHT_BOUND)
    cands = [m for m in t.open_masks if m and m != t.space.full]
    best = None
    for pick in range(1 << len(cands)):
        chosen = [cands[i] for i in bits(pick)]
        if generate_topology(t.space, SubsetFamily(t.space, tuple(chosen))) != t:
            continue
        cover = _chain_cover(chosen)
        if best is None or len(cover) < len(best):
            best = cover
            if not best:
                break
    nests = [SubsetFamily(t.space, tuple(c)) for c in best]
    return len(nests), nests


def neight_search(t: Topology, k: int) -> bool:
    """Whether ``k`` nests of open sets (some possibly empty) can form a subbase."""
    return neight(t)[0] <= k


@dataclass
class ProbeReport:
    relation: Relation
    equal: bool
    only_strict: list[list[int]]      # open for the ray topology, not the interval one
    only_interval: list[list[int]]
    features: dict[str, bool]
    assumption: str = "ray topology generated by strict open rays of the relation"

    def to_dict(self) -> dict:
        return {"pairs": self.relation.pairs(), "equal": self.equal,
                "only_strict": self.only_strict, "only_interval": self.only_interval,
                "features": self.features, "assumption": self.assumption}


def transitive_probe(r: Relation) -> ProbeReport:
    """Compare the strict-ray topology with the interval topology of ``r``."""
    _require_transitive(r)
    a = strict_ray_topology(r)
    b = interval_topology(r)
    oa, ob = set(a.open_masks), set(b.open_masks)
    features = {"antisymmetric": r.is_antisymmetric(), "total": r.is_total(),
                "dense": is_dense_order(r)}
    return ProbeReport(r, a == b, [list(bits(m)) for m in sorted(oa - ob)],
                       [list(bits(m)) for m in sorted(ob - oa)], features)


def enumerate_transitive_relations(space: FiniteSpace, *, loops: bool = False, bound: int = 4):
    """All transitive relations, irreflexive unless ``loops``; by increasing pair code."""
    n = space.size
    if bound > 4:
        raise CapacityError("transitive enumeration bound", bound, 4)
    if n > bound:
        raise CapacityError("transitive enumeration", n, bound)
    slots = [(x, y) for x in range(n) for y in range(n) if loops or x != y]
    for code in range(1 << len(slots)):
        rows = [0] * n
        for i in bits(code):
            x, y = slots[i]
            rows[x] |= 1 << y
        r = Relation(space, tuple(rows), loops)
        if r.is_transitive():
            yield r


def probe_batch(n: int, *, loops: bool = False) -> dict:
    """Bucket every transitive relation on ``n`` points by topology equality."""
    buckets = {"equal": 0, "not_equal": 0}
    features = defaultdict(lambda: {"equal": 0, "not_equal": 0})
    for r in enumerate_transitive_relations(FiniteSpace(n), loops=loops):
        rep = transitive_probe(r)
        key = "equal" if rep.equal else "not_equal"
        buckets[key] += 1
        sig = ",".join(k for k, v in sorted(rep.features.items()) if v) or "-"
        features[sig][key] += 1
    return {"n": n, "loops": loops, "counts": buckets,
            "by_features": {k: features[k] for k in sorted(features)}}
