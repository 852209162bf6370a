"""Exhaustive and seeded-random counterexample searches, one per theorem family.

Each ``*_suite`` function walks an instance pool, evaluates the claimed
equivalences or implications on every instance, and returns a
:class:`SuiteResult`.  Failures carry witnesses that re-verify under the
predicate they falsify.  ``archived`` holds instances worth keeping that are
not failures: convention-sensitive cases, and counterexamples showing a
hypothesis cannot be dropped.

Results contain no timings, so equal parameters give equal reports.
"""
from __future__ import annotations

import itertools
import math
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import fermat as fr
from .nests import (OrderClass, SeparationKind, classify_order, dense_nest_criterion,
                    has_min_witness_property, induced_order, intersection_trigger,
                    is_dense_order, is_interlocking, is_nest, maximal_elements,
                    minimal_elements, reverse, scatters, separation_kind, union_witness,
                    well_ordered_by_inclusion)
from .orderability import ordinal_profile, ray_nests, vdw_verdict
from .products import (ProductSpace, box_family, function_space, is_base_for_some_topology,
                       is_weakly_t0, is_weakly_t1, point_nest, point_open_subbase,
                       preimage_nest, product_topology, project_family, project_nest,
                       projection_condition)
from .space import (FiniteSpace, PointSet, SubsetFamily, Topology, bits, enumerate_families,
                    enumerate_nests, enumerate_topologies, generate_topology, is_connected,
                    random_nest)

DEFAULT_SEED = 20240229
MAX_STORED = 25

# Labelled topology counts on 1..4 points, from enumerate_topologies and
# cross-checked by brute-force closure in the tests.
TOPOLOGY_COUNTS = {1: 1, 2: 4, 3: 29, 4: 355}


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failure_count: int = 0
    failures: list = field(default_factory=list)
    archived_count: int = 0
    archived: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, claim: str, **witness):
        self.failure_count += 1
        if len(self.failures) < MAX_STORED:
            self.failures.append({"claim": claim, **witness})

    def archive(self, kind: str, **data):
        self.archived_count += 1
        self.counts[kind] = self.counts.get(kind, 0) + 1
        if len(self.archived) < MAX_STORED:
            self.archived.append({"kind": kind, **data})

    def bump(self, key: str, by: int = 1):
        self.counts[key] = self.counts.get(key, 0) + by

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "failure_count": self.failure_count, "failures": self.failures,
                "archived_count": self.archived_count, "archived": self.archived,
                "counts": dict(sorted(self.counts.items()))}

    def write(self, directory) -> Path:
        path = Path(directory) / f"{self.name}.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n")
        return path


def _fam(f: SubsetFamily) -> dict:
    return {"n": f.space.size, "sets": f.as_lists()}


def _asymmetric(r) -> bool:
    return all(not r.holds(y, x) for x, y in r.pairs())


# -- nests and orders ------------------------------------------------------

def nest_order_claims(f: SubsetFamily) -> dict[str, bool]:
    """Truth of each nest/order item on ``f`` (True = the item holds here)."""
    r = induced_order(f)
    nest = is_nest(f)
    t0 = separation_kind(f) >= SeparationKind.T0
    return {
        "nest=>transitive": not nest or r.is_transitive(),
        "nest<=>asymmetric": nest == _asymmetric(r),
        "t0<=>total": t0 == r.is_total(),
        "t0 nest<=>linear": (nest and t0) == (classify_order(r) in (OrderClass.LINEAR, OrderClass.WELL)),
    }


def nest_order_suite(sizes=(2, 3), random_count=10_000, random_sizes=(5, 6),
                     seed=DEFAULT_SEED) -> SuiteResult:
    res = SuiteResult("nest_order_theorem")

    def run(f, origin):
        res.checked += 1
        res.bump(f"nests:{is_nest(f)}")
        for claim, ok in nest_order_claims(f).items():
            if not ok:
                res.fail(claim, family=_fam(f), origin=origin)

    for n in sizes:
        for f in enumerate_families(FiniteSpace(n)):
            run(f, "exhaustive")
    for i, n in enumerate(random_sizes):
        share = random_count // len(random_sizes) + (i < random_count % len(random_sizes))
        for f in enumerate_families(FiniteSpace(n), sample=share, seed=seed + n):
            run(f, "random")
    return res


def reverse_nest_suite(max_n=3) -> SuiteResult:
    res = SuiteResult("reverse_nest_theorem")
    for n in range(1, max_n + 1):
        nests = list(enumerate_nests(FiniteSpace(n)))
        for l, r in itertools.product(nests, repeat=2):
            res.checked += 1
            lhs = separation_kind(l.union(r)) == SeparationKind.T1
            rhs = (separation_kind(l) >= SeparationKind.T0 and separation_kind(r) >= SeparationKind.T0
                   and induced_order(l) == reverse(induced_order(r)))
            res.bump(f"t1_union:{lhs}")
            if lhs != rhs:
                res.fail("t1(L∪R) <=> t0(L), t0(R), ◁L = ▷R", L=_fam(l), R=_fam(r))
    return res


def interlocking_claims(f: SubsetFamily) -> dict[str, bool]:
    """Lemma and equivalence items on a T0-separating nest."""
    full = f.space.full
    r = induced_order(f)
    out = {}
    has_max = {m: bool(maximal_elements(r, m)) for m in f.masks}
    comp_has_min = {m: bool(minimal_elements(r, full & ~m)) for m in f.masks}
    lemma1 = all(intersection_trigger(f, PointSet(f.space, m)) == (not comp_has_min[m]) for m in f.masks)
    lemma2 = all(union_witness(f, PointSet(f.space, m)) == (not has_max[m]) for m in f.masks)
    item2 = all(comp_has_min[m] for m in f.masks if has_max[m])
    item3 = all((not has_max[m]) or comp_has_min[m] for m in f.masks)
    il = is_interlocking(f)
    out["lemma: meet trigger <=> complement has no min"] = lemma1
    out["lemma: union witness <=> no max"] = lemma2
    out["interlocking <=> (max => complement min)"] = il == item2
    out["interlocking <=> (no max or complement min)"] = il == item3
    return out


def interlocking_suite(max_n=4) -> SuiteResult:
    """Checks on every T0 nest, with and without the empty set allowed.

    Archived as convention-sensitive: nests where some member's meet trigger
    fires only through the empty-intersection convention (a member with no
    strict superset, i.e. the whole space).  Strict and weak containment in
    the interlocking definition agree, since the definition already removes
    the member itself; that is recorded as a count.
    """
    res = SuiteResult("interlocking_theorem")
    for n in range(1, max_n + 1):
        X = FiniteSpace(n)
        for allow_empty in (False, True):
            for f in enumerate_nests(X, allow_empty=allow_empty):
                if separation_kind(f) < SeparationKind.T0:
                    continue
                res.checked += 1
                for claim, ok in interlocking_claims(f).items():
                    if not ok:
                        res.fail(claim, family=_fam(f), allow_empty=allow_empty)
                if X.full in f.masks:
                    res.archive("empty-meet convention decides the top member", family=_fam(f),
                                allow_empty=allow_empty, interlocking=is_interlocking(f))
                # Reading the containments weakly lets T witness both of its own
                # conditions, so every family interlocks; record where that
                # flips the equivalence theorem.
                res.bump("strict_vs_weak_containment_checked")
                if not is_interlocking(f):
                    res.archive("weak containment reading changes the theorem", family=_fam(f),
                                allow_empty=allow_empty)
    return res


# -- order topologies ------------------------------------------------------

def vdw_suite(linear_max_n=5, pair_max_n=3) -> SuiteResult:
    res = SuiteResult("vdw_theorem")
    for n in range(1, linear_max_n + 1):
        X = FiniteSpace(n)
        for perm in itertools.permutations(range(n)):
            from .nests import Relation
            r = Relation.chain(X, perm)
            l, rr = ray_nests(r)
            v = vdw_verdict(X, l, rr)
            res.checked += 1
            res.bump("linear_orders")
            if not v.claims[3]:
                res.fail("claim 3 on ray nests", order=list(perm), witness=v.to_dict()["witnesses"])
    for n in range(1, pair_max_n + 1):
        X = FiniteSpace(n)
        nests = list(enumerate_nests(X))
        for l, r in itertools.product(nests, repeat=2):
            v = vdw_verdict(X, l, r)
            if not v.hypothesis:
                continue
            res.checked += 1
            res.bump("t1_pairs")
            if not v.claims[1]:
                res.fail("claim 1: order-open sets are open", L=_fam(l), R=_fam(r),
                         witness=v.to_dict()["witnesses"])
            if not v.claims[2]:
                res.fail("claim 2: GO form", L=_fam(l), R=_fam(r))
            if not v.claims[3]:
                res.archive("t1 pair whose claim 3 fails", L=_fam(l), R=_fam(r),
                            interlocking=list(v.interlocking),
                            generated_is_order_topology=v.generated == v.order_topology)
    return res


def well_order_claims(f: SubsetFamily) -> tuple[bool, bool, bool, bool]:
    t0 = separation_kind(f) >= SeparationKind.T0
    return (scatters(f),
            classify_order(induced_order(f)) == OrderClass.WELL,
            t0 and well_ordered_by_inclusion(f),
            t0 and has_min_witness_property(f))


def well_order_suite(max_n=4) -> SuiteResult:
    """Four-way equivalence on every nest with the whole space adjoined;
    raw-form disagreements are archived."""
    res = SuiteResult("well_order_theorem")
    for n in range(1, max_n + 1):
        for f in enumerate_nests(FiniteSpace(n)):
            res.checked += 1
            adj = well_order_claims(f.with_universe())
            if len(set(adj)) != 1:
                res.fail("scatters <=> well-order <=> t0+well-ordered <=> t0+min witness",
                         family=_fam(f.with_universe()), values=list(adj))
            raw = well_order_claims(f)
            if len(set(raw)) != 1:
                res.archive("raw family (space not adjoined) breaks the equivalence",
                            family=_fam(f), values=list(raw))
    return res


def ordinal_profile_suite(max_n=4) -> SuiteResult:
    res = SuiteResult("ordinal_profile")
    for n in range(1, max_n + 1):
        count = 0
        for t in enumerate_topologies(FiniteSpace(n)):
            count += 1
            res.checked += 1
            prof = ordinal_profile(t)
            res.bump(f"profile:{''.join('1' if c else '0' for c in prof.conditions)}")
            if not prof.all_equal():
                res.fail("five ordinal conditions agree", n=n,
                         neighborhoods=[list(bits(u)) for u in t.neighborhoods],
                         profile=prof.to_dict())
        res.counts[f"topologies_n{n}"] = count
        if n in TOPOLOGY_COUNTS and count != TOPOLOGY_COUNTS[n]:
            res.fail("pinned topology count", n=n, found=count, expected=TOPOLOGY_COUNTS[n])
    return res


# -- products and function spaces -----------------------------------------

def _pairs_with(f: SubsetFamily, p: ProductSpace, j: int):
    for y in range(p.size):
        for z in range(p.size):
            if p.decode(y)[j] != p.decode(z)[j]:
                yield y, z


def _remark_holds(f: SubsetFamily, p: ProductSpace, j: int) -> bool:
    o, po = induced_order(f), induced_order(project_family(f, j))
    return all(po.holds(p.decode(y)[j], p.decode(z)[j])
               for y, z in _pairs_with(f, p, j) if o.holds(y, z))


def _single_nest_checks(res: SuiteResult, f: SubsetFamily, j: int, origin: str):
    p = f.space
    pf = project_nest(f, j)
    pc = projection_condition(f, j)
    wt0 = is_weakly_t0(f, j)
    if not is_nest(pf):
        res.fail("projection of a nest is a nest", family=_fam(f), j=j, origin=origin)
    if wt0 and pc and separation_kind(pf) < SeparationKind.T0:
        res.fail("weak t0 + projection condition => projected nest t0", family=_fam(f), j=j,
                 origin=origin)
    if wt0 and pc and not _remark_holds(f, p, j):
        res.fail("remark: tuple order descends to coordinate order", family=_fam(f), j=j,
                 origin=origin)
    if wt0 and not pc and not _remark_holds(f, p, j):
        res.archive("remark fails without projection condition", family=_fam(f), j=j)
    # lemma: projected meet condition lifts to the product
    if pc:
        full_b, full_p = p.base.full, p.full
        for m in f.masks:
            pm = p.project(m, j)
            pmeet, meet = full_b, full_p
            for k in f.masks:
                pk = p.project(k, j)
                if pk != pm and pk & pm == pm:
                    pmeet &= pk
                if k != m and k & m == m:
                    meet &= k
            if pmeet & ~pm == 0 and meet & ~m != 0:
                res.fail("lemma: projected meet condition lifts", family=_fam(f), j=j, origin=origin)
    il = is_interlocking(f)
    if il and pc and not is_interlocking(pf):
        res.fail("interlocking + projection condition => projection interlocking",
                 family=_fam(f), j=j, origin=origin)
    if il and not pc and not is_interlocking(pf):
        res.archive("projection loses interlocking without projection condition",
                    family=_fam(f), j=j)


def _pair_checks(res: SuiteResult, l: SubsetFamily, r: SubsetFamily, j: int, origin: str):
    pcl, pcr = projection_condition(l, j), projection_condition(r, j)
    wt1 = is_weakly_t1(l, r, j)
    pl, pr = project_nest(l, j), project_nest(r, j)
    if wt1 and pcl and pcr and separation_kind(pl.union(pr)) != SeparationKind.T1:
        res.fail("weak t1 + conditions => projected union t1", L=_fam(l), R=_fam(r), j=j,
                 origin=origin)
    if (wt1 and pcl and pcr and is_interlocking(l) and is_interlocking(r)
            and is_weakly_t0(l, j) and is_weakly_t0(r, j)):
        res.bump("final_theorem_instances")
        ok = (is_interlocking(pl) and is_interlocking(pr)
              and separation_kind(pl) >= SeparationKind.T0
              and separation_kind(pr) >= SeparationKind.T0
              and separation_kind(pl.union(pr)) == SeparationKind.T1)
        if not ok:
            res.fail("final transfer theorem", L=_fam(l), R=_fam(r), j=j, origin=origin)


def _base_checks(res: SuiteResult, g: SubsetFamily, h: SubsetFamily, p: ProductSpace, origin: str):
    t1 = separation_kind(g.union(h)) == SeparationKind.T1
    for j in range(p.index_count):
        pg, ph = preimage_nest(g, j, p), preimage_nest(h, j, p)
        if not is_nest(pg):
            res.fail("preimage of a nest is a nest", family=_fam(g), j=j, origin=origin)
        if t1 and not is_weakly_t1(pg, ph, j):
            res.fail("preimages of a t1 pair are weakly t1", L=_fam(g), R=_fam(h), j=j,
                     origin=origin)
        if is_interlocking(g) and not is_interlocking(pg):
            res.fail("interlocking preimage", family=_fam(g), j=j, origin=origin)
    if (t1 and is_interlocking(g) and is_interlocking(h)
            and separation_kind(g) >= SeparationKind.T0 and separation_kind(h) >= SeparationKind.T0):
        res.bump("corollary_instances")
        boxes = box_family(g, h, p)
        if not is_base_for_some_topology(boxes):
            res.fail("box family is a base", L=_fam(g), R=_fam(h), origin=origin)
        elif generate_topology(p, boxes) != product_topology(g, h, p):
            res.fail("box family generates the product topology", L=_fam(g), R=_fam(h),
                     origin=origin)


def transfer_suite(base=2, index_count=2, random_count=1000, random_base=3,
                   interlocking_base_max=3, seed=DEFAULT_SEED) -> SuiteResult:
    res = SuiteResult("product_transfer")
    X = FiniteSpace(base)
    p = ProductSpace.power(X, index_count)
    pnests = list(enumerate_nests(p, candidates=range(1, p.full + 1)))
    for f in pnests:
        for j in range(index_count):
            res.checked += 1
            _single_nest_checks(res, f, j, "exhaustive")
    for l, r in itertools.product(pnests, repeat=2):
        for j in range(index_count):
            res.checked += 1
            _pair_checks(res, l, r, j, "exhaustive")
    for b in range(1, interlocking_base_max + 1):
        Xb = FiniteSpace(b)
        pb = ProductSpace.power(Xb, index_count)
        bnests = list(enumerate_nests(Xb))
        for g, h in itertools.product(bnests, repeat=2):
            res.checked += 1
            _base_checks(res, g, h, pb, "exhaustive")

    rng = random.Random(seed)
    Xr = FiniteSpace(random_base)
    pr = ProductSpace.power(Xr, index_count)

    def product_nest():
        if rng.random() < 0.5:
            g = random_nest(Xr, rng, universe=rng.random() < 0.3)
            return preimage_nest(g, rng.randrange(index_count), pr)
        return random_nest(pr, rng)

    def t1_base_pair():
        from .nests import Relation
        order = list(Xr.points)
        rng.shuffle(order)
        g, h = ray_nests(Relation.chain(Xr, order))
        if rng.random() < 0.3:
            g = g.with_universe()
        if rng.random() < 0.3:
            h = h.with_universe()
        return g, h

    for _ in range(random_count):
        res.checked += 1
        j = rng.randrange(index_count)
        f1, f2 = product_nest(), product_nest()
        _single_nest_checks(res, f1, j, "random")
        _pair_checks(res, f1, f2, j, "random")
        g, h = t1_base_pair() if rng.random() < 0.5 else (random_nest(Xr, rng), random_nest(Xr, rng))
        _base_checks(res, g, h, pr, "random")
    return res


def function_space_suite(max_domain=3, max_codomain=3) -> SuiteResult:
    res = SuiteResult("function_space")
    for dom in range(1, max_domain + 1):
        for cod in range(1, max_codomain + 1):
            Y = FiniteSpace(cod)
            fs = function_space(dom, Y)
            nests = list(enumerate_nests(Y))
            for l in nests:
                for x in range(dom):
                    res.checked += 1
                    pn = point_nest(x, l, fs)
                    if pn != preimage_nest(l, x, fs):
                        res.fail("point nest equals preimage nest", nest=_fam(l), x=x, dom=dom)
                    if not is_nest(pn):
                        res.fail("point nest is a nest", nest=_fam(l), x=x, dom=dom)
                    if is_interlocking(l) and not is_interlocking(pn):
                        res.fail("interlocking point nest", nest=_fam(l), x=x, dom=dom)
                    if not is_interlocking(l) and not is_interlocking(pn):
                        res.archive("point nest of a non-interlocking nest", nest=_fam(l), x=x,
                                    dom=dom)
            for l, r in itertools.product(nests, repeat=2):
                if separation_kind(l.union(r)) != SeparationKind.T1:
                    continue
                sub = point_open_subbase(l, r, fs)
                for x in range(dom):
                    res.checked += 1
                    if not is_weakly_t1(point_nest(x, l, fs), point_nest(x, r, fs), x):
                        res.fail("point nests weakly t1 w.r.t. x", L=_fam(l), R=_fam(r), x=x,
                                 dom=dom)
                if generate_topology(fs, sub) != product_topology(l, r, fs):
                    res.fail("point-open subbase generates the product topology",
                             L=_fam(l), R=_fam(r), dom=dom)
    return res


# -- Fermat reals ----------------------------------------------------------

def random_raw(rng: random.Random, max_terms=5, max_den=6, coef=9):
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        den = rng.randint(1, max_den)
        terms.append((Fraction(rng.randint(-coef, coef)), Fraction(rng.randint(0, 2 * den), den)))
    return terms


def random_fermat(rng: random.Random) -> fr.FermatReal:
    return fr.canonicalize(random_raw(rng))


def _near(rng: random.Random, x: fr.FermatReal) -> fr.FermatReal:
    # Shares a prefix with x so comparisons reach deep terms.
    keep = [(c, e) for e, c in x.terms[:rng.randint(0, len(x.terms))]]
    return fr.canonicalize([(x.standard_part, 0)] + keep + random_raw(rng, max_terms=2))


def oracle_threshold(x: fr.FermatReal, y: fr.FermatReal, expected: int, kmax=64) -> int | None:
    """Least k0 such that exact samples at t = 2^(-k·D) order x, y as
    ``expected`` for every k in k0..kmax; None if k = kmax already disagrees."""
    big_d = math.lcm(x.denominator_lcm(), y.denominator_lcm())
    k0 = None
    for k in range(kmax, 0, -1):
        t = Fraction(1, 2 ** (k * big_d))
        a, b = fr.sample_at(x, t), fr.sample_at(y, t)
        got = (a > b) - (a < b)
        if got != expected:
            break
        k0 = k
    return k0


FERMAT_POOL = ["0", "1", "-1", "1/2", "t", "-t", "t^(1/2)", "-t^(1/2)", "1 + t",
               "1 - t^(1/3)", "2*t^(2/3)", "t^(1/2) + t"]


def fermat_suite(pairs=10_000, triples=10_000, ring_triples=1000, seed=DEFAULT_SEED,
                 bridge_max=5) -> SuiteResult:
    res = SuiteResult("fermat_reals")
    rng = random.Random(seed)
    for _ in range(pairs):
        raw = random_raw(rng)
        x = fr.canonicalize(raw)
        y = _near(rng, x) if rng.random() < 0.5 else random_fermat(rng)
        res.checked += 1
        if fr.canonicalize(fr._raw(x)) != x:
            res.fail("canonicalize idempotent", x=str(x))
        if fr.parse(str(x)) != x:
            res.fail("text round trip", x=str(x))
        c, c2 = fr.compare(x, y), fr.compare(y, x)
        if c != -c2 or (c == 0) != (x == y):
            res.fail("trichotomy / equality by fields", x=str(x), y=str(y))
        if c != 0:
            if fr.lt_f(x, y) == fr.lt_f(y, x):
                res.fail("lt_f totality", x=str(x), y=str(y))
            k0 = oracle_threshold(x, y, c)
            if k0 is None:
                res.fail("sampling oracle agrees", x=str(x), y=str(y))
            else:
                res.counts["oracle_max_k0"] = max(res.counts.get("oracle_max_k0", 0), k0)
        junk_x = raw + [(Fraction(rng.randint(-9, 9)), Fraction(rng.randint(7, 18), 6))]
        junk_y = fr._raw(y) + [(Fraction(rng.randint(-9, 9)), Fraction(rng.randint(7, 18), 6))]
        if fr.mul_raw(junk_x, junk_y) != fr.mul(x, y):
            res.fail("mul ignores o(t) junk", x=str(x), y=str(y))
    for _ in range(triples):
        a = random_fermat(rng)
        b, c = _near(rng, a), _near(rng, a)
        res.checked += 1
        ab, bc, ac = fr.compare(a, b), fr.compare(b, c), fr.compare(a, c)
        if ab < 0 and bc < 0 and not ac < 0:
            res.fail("transitivity", a=str(a), b=str(b), c=str(c))
    for _ in range(ring_triples):
        a, b, c = (random_fermat(rng) for _ in range(3))
        res.checked += 1
        laws = {
            "add associative": (a + b) + c == a + (b + c),
            "add commutative": a + b == b + a,
            "mul associative": (a * b) * c == a * (b * c),
            "mul commutative": a * b == b * a,
            "distributive": a * (b + c) == a * b + a * c,
            "additive inverse": (a + -a).is_zero,
        }
        for law, ok in laws.items():
            if not ok:
                res.fail(law, a=str(a), b=str(b), c=str(c))
    pool = [fr.parse(s) for s in FERMAT_POOL]
    for k in range(1, bridge_max + 1):
        for idx in itertools.combinations(range(len(pool)), k):
            res.checked += 1
            res.bump("bridge_samples")
            order = fr.sample_order([pool[i] for i in idx])
            l, r = ray_nests(order)
            ok = (is_interlocking(l) and is_interlocking(r)
                  and separation_kind(l.union(r)) == SeparationKind.T1
                  and vdw_verdict(order.space, l, r).claims[3])
            if not ok:
                res.fail("sample ray nests interlock with t1 union",
                         sample=[FERMAT_POOL[i] for i in idx])
    return res


# -- connectedness and density --------------------------------------------

def connectedness_suite(max_n=4, pair_max_n=4) -> SuiteResult:
    res = SuiteResult("connectedness")
    for n in range(1, max_n + 1):
        for t in enumerate_topologies(FiniteSpace(n)):
            if separation_kind(t.opens) != SeparationKind.T1:
                continue
            res.checked += 1
            res.bump("t1_subbase_spaces")
            if n >= 2 and is_connected(t):
                res.fail("t1 open subbase with >= 2 points is disconnected",
                         neighborhoods=[list(bits(u)) for u in t.neighborhoods])
    for n in range(1, pair_max_n + 1):
        X = FiniteSpace(n)
        nests = list(enumerate_nests(X))
        for l, r in itertools.product(nests, repeat=2):
            u = l.union(r)
            if separation_kind(u) != SeparationKind.T1:
                continue
            res.checked += 1
            if not is_connected(generate_topology(X, u)):
                continue
            res.bump("connected_instances")
            v = vdw_verdict(X, l, r)
            if not (is_dense_order(induced_order(l)) and is_interlocking(l)
                    and is_interlocking(r) and v.claims[3]):
                if n == 1:
                    # Only a member equal to X can fail here, via the empty meet.
                    res.archive("singleton: empty-meet convention breaks interlocking",
                                L=_fam(l), R=_fam(r))
                else:
                    res.fail("connected => dense, interlocking, LOTS", L=_fam(l), R=_fam(r))
    return res


def density_suite(max_n=3, t0_only=False) -> SuiteResult:
    """Density criterion against density of the induced order, on all nests
    (or only T0-separating ones)."""
    res = SuiteResult("density_lemma_t0" if t0_only else "density_lemma")
    for n in range(1, max_n + 1):
        for f in enumerate_nests(FiniteSpace(n)):
            if t0_only and separation_kind(f) < SeparationKind.T0:
                continue
            res.checked += 1
            lhs = is_dense_order(induced_order(f))
            if lhs != dense_nest_criterion(f):
                res.fail("dense order <=> nest criterion", family=_fam(f), dense=lhs,
                         separation=str(separation_kind(f)))
    return res


def run_all(seed=DEFAULT_SEED) -> dict:
    """Every suite at acceptance size, as one machine report."""
    suites = [
        nest_order_suite(seed=seed), reverse_nest_suite(), interlocking_suite(), vdw_suite(),
        well_order_suite(), ordinal_profile_suite(), transfer_suite(seed=seed),
        function_space_suite(), fermat_suite(seed=seed), connectedness_suite(),
        density_suite(), density_suite(t0_only=True),
    ]
    return {"schema": 1, "seed": seed, "suites": [s.to_dict() for s in suites]}
