"""Command-line front end.

Usage: ``nestlab COMMAND [INSTANCE | EXPR ...] [options]``.  Instances are
JSON documents::

    {"space": 3,
     "families": {"L": [[0], [0, 1]], "R": [[2], [1, 2]]},
     "relation": [[0, 1], [1, 2], [0, 2]],
     "topology": [[1], [0, 1], [1, 2]],
     "fermat": ["t^(1/2)", "1 - 2*t"]}

Every field is optional.  ``topology`` lists a subbase (a full list of
opens is accepted too, since it generates itself).  Fermat commands take
expressions on the command line when no instance file is given.

Exit status: 0 when every claim holds, 1 when a counterexample was found,
2 for malformed input, 3 when a capacity bound is exceeded.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import warnings
from dataclasses import dataclass, field
from pathlib import Path

from . import fermat as fr
from .errors import CapacityError, InputError
from .nests import (Relation, SeparationKind, classify_order, incomparable_pair, induced_order,
                    interlocking_failure, is_interlocking, is_nest, scatter_failure,
                    separation_kind, unseparated_pair)
from .orderability import neight, ordinal_profile, probe_batch, transitive_probe, vdw_verdict
from .products import (ProductSpace, box_family, is_base_for_some_topology, is_weakly_t0,
                       is_weakly_t1, preimage_nest, product_topology, project_nest,
                       projection_condition)
from .space import (EXHAUSTIVE_BOUND, FiniteSpace, PointSet, SubsetFamily, bits,
                    enumerate_families, enumerate_topologies, generate_topology, is_subset)

SCHEMA = 1
EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3

COMMANDS = ("check-nest", "induced-order", "separation", "interlocking", "scatter", "vdw",
            "ordinal-profile", "neight", "probe-transitive", "product-transfer",
            "fermat-compare", "fermat-canon", "enumerate", "run-suites")
FILTERS = ("all", "nest", "t0", "t1", "t0-nest", "interlocking-nest", "scatters", "topology")
FIELDS = ("space", "families", "relation", "topology", "fermat")


# -- instances -------------------------------------------------------------

@dataclass
class Instance:
    space: int | None = None
    families: dict[str, tuple[tuple[int, ...], ...]] = field(default_factory=dict)
    relation: tuple[tuple[int, int], ...] | None = None
    topology: tuple[tuple[int, ...], ...] | None = None
    fermat: tuple[str, ...] | None = None
    warnings: list[str] = field(default_factory=list, compare=False)

    def finite_space(self) -> FiniteSpace:
        if self.space is None:
            raise InputError("instance has no 'space' field")
        return FiniteSpace(self.space)

    def family(self, name: str, *, include_universe=False, allow_empty=False) -> SubsetFamily:
        if name not in self.families:
            raise InputError(f"instance has no family {name!r}")
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            f = SubsetFamily.of(self.finite_space(), self.families[name],
                                include_universe=include_universe, allow_empty=allow_empty)
        self.warnings += [f"families.{name}: {w.message}" for w in caught]
        return f

    def relation_of(self) -> Relation:
        if self.relation is None:
            raise InputError("instance has no 'relation' field")
        return Relation.from_pairs(self.finite_space(), self.relation)


def _fail(path: str, msg: str):
    raise InputError(f"{path}: {msg}")


def _point(v, path: str, n: int | None) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        _fail(path, f"expected an integer point, got {json.dumps(v)}")
    if n is not None and not 0 <= v < n:
        _fail(path, f"point {v} out of range 0..{n - 1}")
    return v


def _set(v, path: str, n: int | None, warn: list[str]) -> tuple[int, ...]:
    if not isinstance(v, list):
        _fail(path, f"expected a list of points, got {json.dumps(v)}")
    pts = [_point(p, f"{path}[{i}]", n) for i, p in enumerate(v)]
    if len(set(pts)) != len(pts):
        warn.append(f"{path}: repeated point collapsed")
    return tuple(sorted(set(pts)))


def _sets(v, path: str, n: int | None, warn: list[str]) -> tuple[tuple[int, ...], ...]:
    if not isinstance(v, list):
        _fail(path, f"expected a list of sets, got {json.dumps(v)}")
    out = []
    for i, s in enumerate(v):
        s = _set(s, f"{path}[{i}]", n, warn)
        if s in out:
            warn.append(f"{path}[{i}]: duplicate set collapsed")
            continue
        out.append(s)
    return tuple(out)


def instance_from_dict(doc) -> Instance:
    if not isinstance(doc, dict):
        _fail("$", "instance must be a JSON object")
    unknown = sorted(set(doc) - set(FIELDS))
    if unknown:
        _fail(unknown[0], f"unknown field (expected one of {', '.join(FIELDS)})")
    inst = Instance()
    n = doc.get("space")
    if n is not None:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            _fail("space", f"expected a positive integer, got {json.dumps(n)}")
        inst.space = n
    if "families" in doc:
        fams = doc["families"]
        if not isinstance(fams, dict):
            _fail("families", "expected an object mapping names to lists of sets")
        if n is None:
            _fail("families", "families need a 'space' field")
        inst.families = {k: _sets(v, f"families.{k}", n, inst.warnings) for k, v in fams.items()}
    if "relation" in doc:
        rel = doc["relation"]
        if n is None:
            _fail("relation", "a relation needs a 'space' field")
        if not isinstance(rel, list):
            _fail("relation", "expected a list of [x, y] pairs")
        pairs = []
        for i, p in enumerate(rel):
            if not isinstance(p, list) or len(p) != 2:
                _fail(f"relation[{i}]", f"expected a pair [x, y], got {json.dumps(p)}")
            pair = (_point(p[0], f"relation[{i}][0]", n), _point(p[1], f"relation[{i}][1]", n))
            if pair[0] == pair[1]:
                _fail(f"relation[{i}]", "self-pairs are not allowed in a strict relation")
            if pair not in pairs:
                pairs.append(pair)
        inst.relation = tuple(sorted(pairs))
    if "topology" in doc:
        if n is None:
            _fail("topology", "a topology needs a 'space' field")
        inst.topology = _sets(doc["topology"], "topology", n, inst.warnings)
    if "fermat" in doc:
        exprs = doc["fermat"]
        if not isinstance(exprs, list):
            _fail("fermat", "expected a list of expression strings")
        out = []
        for i, e in enumerate(exprs):
            if not isinstance(e, str):
                _fail(f"fermat[{i}]", f"expected a string, got {json.dumps(e)}")
            try:
                out.append(str(fr.parse(e)))
            except InputError as err:
                _fail(f"fermat[{i}]", str(err))
        inst.fermat = tuple(out)
    return inst


def parse_instance(text: str) -> Instance:
    """Parse and validate an instance document.

    Errors name the offending line and column (syntax) or field path (schema).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"line {e.lineno}, column {e.colno}: {e.msg}") from e
    return instance_from_dict(doc)


def instance_to_dict(inst: Instance) -> dict:
    doc: dict = {}
    if inst.space is not None:
        doc["space"] = inst.space
    if inst.families:
        doc["families"] = {k: [list(s) for s in v] for k, v in inst.families.items()}
    if inst.relation is not None:
        doc["relation"] = [list(p) for p in inst.relation]
    if inst.topology is not None:
        doc["topology"] = [list(s) for s in inst.topology]
    if inst.fermat is not None:
        doc["fermat"] = list(inst.fermat)
    return doc


def format_instance(inst: Instance) -> str:
    """Canonical text of an instance; ``parse_instance`` inverts it."""
    return json.dumps(instance_to_dict(inst), sort_keys=True, separators=(",", ":"))


def instance_digest(inst: Instance) -> str:
    return hashlib.sha256(format_instance(inst).encode()).hexdigest()


# -- reports ---------------------------------------------------------------

@dataclass
class Report:
    command: str
    digest: str | None
    options: dict
    claims: list[dict] = field(default_factory=list)
    data: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    text: str | None = None          # plain output that replaces the table

    def claim(self, name: str, holds: bool, witness=None, **extra):
        entry = {"claim": name, "holds": bool(holds)}
        if witness is not None:
            entry["witness"] = witness
        entry.update(extra)
        self.claims.append(entry)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if all(c["holds"] for c in self.claims) else EXIT_COUNTEREXAMPLE

    def to_dict(self) -> dict:
        return {"schema": SCHEMA, "command": self.command, "instance_digest": self.digest,
                "options": self.options, "status": "ok" if self.exit_code == 0 else "counterexample",
                "claims": self.claims, "data": self.data, "warnings": self.warnings}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [f"{self.command}" + (f"  [{self.digest[:12]}]" if self.digest else "")]
        width = max([len(c["claim"]) for c in self.claims] + [0])
        for c in self.claims:
            line = f"  {c['claim']:<{width}}  {'holds' if c['holds'] else 'FAILS'}"
            if "witness" in c:
                line += f"  witness={json.dumps(c['witness'])}"
            lines.append(line)
        for k, v in self.data.items():
            lines.append(f"  {k}: {v if isinstance(v, str) else json.dumps(v)}")
        for w in self.warnings:
            lines.append(f"  warning: {w}")
        return "\n".join(lines)


def _lists(f: SubsetFamily) -> list[list[int]]:
    return f.as_lists()


def _nbhds(t) -> list[list[int]]:
    return [list(bits(u)) for u in t.neighborhoods]


def _families(inst: Instance, opts) -> dict[str, SubsetFamily]:
    if not inst.families:
        raise InputError("instance has no families")
    return {k: inst.family(k, include_universe=opts.convention == "include-universe",
                           allow_empty=opts.allow_empty) for k in inst.families}


def _pair(inst: Instance, opts) -> tuple[SubsetFamily, SubsetFamily]:
    fams = _families(inst, opts)
    names = list(fams)
    if "L" in fams and "R" in fams:
        return fams["L"], fams["R"]
    if len(names) != 2:
        raise InputError("need families 'L' and 'R' (or exactly two families)")
    return fams[names[0]], fams[names[1]]


def _topology(inst: Instance, opts):
    X = inst.finite_space()
    if inst.topology is not None:
        sub = SubsetFamily.collapse(X, (PointSet.of(X, s).mask for s in inst.topology))
    else:
        fams = _families(inst, opts)
        sub = SubsetFamily.collapse(X, (m for f in fams.values() for m in f.masks))
    return generate_topology(X, sub)


# -- commands --------------------------------------------------------------

def _cmd_check_nest(inst, opts, rep):
    for name, f in _families(inst, opts).items():
        pair = incomparable_pair(f)
        rep.claim(f"{name} is a nest", pair is None,
                  None if pair is None else [list(pair[0]), list(pair[1])],
                  witness_kind="incomparable", family=name)


def _cmd_induced_order(inst, opts, rep):
    for name, f in _families(inst, opts).items():
        r = induced_order(f)
        rep.data[name] = {"pairs": [list(p) for p in r.pairs()], "class": str(classify_order(r)),
                          "transitive": r.is_transitive(), "total": r.is_total(),
                          "antisymmetric": r.is_antisymmetric()}


def _cmd_separation(inst, opts, rep):
    fams = _families(inst, opts)
    for name, f in fams.items():
        kind = separation_kind(f)
        entry = {"kind": str(kind)}
        if kind < SeparationKind.T1:
            entry["unseparated"] = list(unseparated_pair(f, SeparationKind(kind + 1)))
        rep.data[name] = entry
    if len(fams) > 1:
        u = None
        for f in fams.values():
            u = f if u is None else u.union(f)
        rep.data["union"] = {"kind": str(separation_kind(u))}


def _cmd_interlocking(inst, opts, rep):
    for name, f in _families(inst, opts).items():
        bad = interlocking_failure(f)
        rep.claim(f"{name} is interlocking", bad is None, None if bad is None else list(bad),
                  witness_kind="interlocking-failure", family=name)


def _cmd_scatter(inst, opts, rep):
    for name, f in _families(inst, opts).items():
        bad = scatter_failure(f)
        rep.claim(f"X is scattered by {name}", bad is None, None if bad is None else list(bad),
                  witness_kind="scatter-failure", family=name)


def _cmd_vdw(inst, opts, rep):
    l, r = _pair(inst, opts)
    v = vdw_verdict(inst.finite_space(), l, r)
    d = v.to_dict()
    rep.data["t1_union"] = v.hypothesis
    rep.data["order"] = [list(p) for p in v.order.pairs()]
    rep.data["interlocking"] = d["interlocking"]
    rep.data["generated"] = _nbhds(v.generated)
    names = {1: "order-open sets are open (claim 1)", 2: "GO form (claim 2)",
             3: "interlocking and order topology (claim 3)"}
    for k in (1, 2, 3):
        rep.claim(names[k], v.claims[k], d["witnesses"].get(str(k)))


def _cmd_ordinal_profile(inst, opts, rep):
    t = _topology(inst, opts)
    prof = ordinal_profile(t, adjoin_universe=opts.convention != "raw")
    d = prof.to_dict()
    rep.data["neighbourhoods"] = _nbhds(t)
    rep.data["conditions"] = d["conditions"]
    rep.data["witnesses"] = d["witnesses"]
    rep.claim("five ordinal conditions agree", prof.all_equal())


def _cmd_neight(inst, opts, rep):
    t = _topology(inst, opts)
    k, nests = neight(t)
    rep.data["neighbourhoods"] = _nbhds(t)
    rep.data["neight"] = k
    rep.data["nests"] = [_lists(f) for f in nests]
    union = SubsetFamily.collapse(t.space, (m for f in nests for m in f.masks))
    rep.claim("witness nests generate the topology",
              all(is_nest(f) for f in nests) and generate_topology(t.space, union) == t)


def _cmd_probe_transitive(inst, opts, rep):
    if inst is None or inst.relation is None:
        if opts.n is None:
            raise InputError("probe-transitive needs an instance with a relation, or --n")
        rep.data.update(probe_batch(opts.n))
        return
    rep.data.update(transitive_probe(inst.relation_of()).to_dict())


def _cmd_product_transfer(inst, opts, rep):
    l, r = _pair(inst, opts)
    X = inst.finite_space()
    p = ProductSpace.power(X, opts.index_count)
    t1 = separation_kind(l.union(r)) == SeparationKind.T1
    il = is_interlocking(l) and is_interlocking(r)
    rep.data["base_t1_union"] = t1
    rep.data["base_interlocking"] = [is_interlocking(l), is_interlocking(r)]
    for j in range(p.index_count):
        pl, pr = preimage_nest(l, j, p), preimage_nest(r, j, p)
        rep.claim(f"coordinate {j}: preimages are nests", is_nest(pl) and is_nest(pr))
        rep.claim(f"coordinate {j}: preimages satisfy the projection condition",
                  projection_condition(pl, j) and projection_condition(pr, j))
        rep.claim(f"coordinate {j}: projections recover the nests",
                  project_nest(pl, j).sorted() == l.sorted() and project_nest(pr, j).sorted() == r.sorted())
        if separation_kind(l) >= SeparationKind.T0:
            rep.claim(f"coordinate {j}: preimage of L weakly t0", is_weakly_t0(pl, j))
        if t1:
            rep.claim(f"coordinate {j}: preimages weakly t1", is_weakly_t1(pl, pr, j))
        if is_interlocking(l):
            rep.claim(f"coordinate {j}: preimage of L interlocking", is_interlocking(pl))
        if is_interlocking(r):
            rep.claim(f"coordinate {j}: preimage of R interlocking", is_interlocking(pr))
    if t1 and il:
        boxes = box_family(l, r, p)
        ok = is_base_for_some_topology(boxes) and generate_topology(p, boxes) == product_topology(l, r, p)
        rep.claim("boxes form a base for the product topology", ok)


def _fermat_inputs(inst, opts) -> list[fr.FermatReal]:
    if opts.inputs:
        out = []
        for i, e in enumerate(opts.inputs):
            try:
                out.append(fr.parse(e))
            except InputError as err:
                raise InputError(f"argument {i + 1}: {err}") from err
        return out
    if inst is None or inst.fermat is None:
        raise InputError("give Fermat expressions as arguments or an instance with 'fermat'")
    return [fr.parse(e) for e in inst.fermat]


def _cmd_fermat_compare(inst, opts, rep):
    xs = _fermat_inputs(inst, opts)
    if len(xs) < 2:
        raise InputError("fermat-compare needs at least two values")
    rels = []
    for a, b in zip(xs, xs[1:]):
        c = fr.compare(a, b)
        lo, hi = (a, b) if c <= 0 else (b, a)
        rels.append(f"{lo} {'=' if c == 0 else '<'} {hi}")
    rep.data["comparisons"] = rels
    distinct = len(set(xs)) == len(xs)
    if distinct:
        order = sorted(range(len(xs)), key=lambda i: _FermatKey(xs[i]))
        rep.data["ascending"] = [str(xs[i]) for i in order]
    rep.text = "\n".join(rels)


class _FermatKey:
    __slots__ = ("x",)

    def __init__(self, x):
        self.x = x

    def __lt__(self, other):
        return fr.compare(self.x, other.x) < 0


def _cmd_fermat_canon(inst, opts, rep):
    xs = _fermat_inputs(inst, opts)
    rep.data["canonical"] = [str(x) for x in xs]
    rep.text = "\n".join(str(x) for x in xs)


_FILTER_FNS = {
    "all": None,
    "nest": is_nest,
    "t0": lambda f: separation_kind(f) >= SeparationKind.T0,
    "t1": lambda f: separation_kind(f) == SeparationKind.T1,
    "t0-nest": lambda f: is_nest(f) and separation_kind(f) >= SeparationKind.T0,
    "interlocking-nest": lambda f: is_nest(f) and is_interlocking(f),
    "scatters": lambda f: scatter_failure(f) is None,
}


def _cmd_enumerate(inst, opts, rep):
    n = opts.n if opts.n is not None else (inst.space if inst and inst.space else None)
    if n is None:
        raise InputError("enumerate needs --n or an instance with 'space'")
    X = FiniteSpace(n)
    if opts.filter == "topology":
        bound = opts.bound if opts.bound is not None else 5
        stream = (_nbhds(t) for t in enumerate_topologies(X, bound=bound))
    else:
        bound = opts.bound if opts.bound is not None else EXHAUSTIVE_BOUND
        stream = (f.as_lists() for f in enumerate_families(
            X, _FILTER_FNS[opts.filter], allow_empty=opts.allow_empty, bound=bound,
            sample=opts.sample, seed=opts.seed))
    items = list(stream)
    rep.data["n"] = n
    rep.data["filter"] = opts.filter
    rep.data["count"] = len(items)
    if not opts.count:
        rep.data["items"] = items
    rep.text = str(len(items)) if opts.count else "\n".join(json.dumps(i) for i in items)


def _cmd_run_suites(inst, opts, rep):
    from . import suites
    doc = suites.run_all(seed=opts.seed)
    for s in doc["suites"]:
        rep.claim(s["name"], s["passed"], None if s["passed"] else s["failures"][:3],
                  checked=s["checked"], archived=s["archived_count"])
    if opts.report_dir:
        out = Path(opts.report_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "suites.json").write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n")
        rep.data["report"] = str(out / "suites.json")


_HANDLERS = {
    "check-nest": _cmd_check_nest, "induced-order": _cmd_induced_order,
    "separation": _cmd_separation, "interlocking": _cmd_interlocking, "scatter": _cmd_scatter,
    "vdw": _cmd_vdw, "ordinal-profile": _cmd_ordinal_profile, "neight": _cmd_neight,
    "probe-transitive": _cmd_probe_transitive, "product-transfer": _cmd_product_transfer,
    "fermat-compare": _cmd_fermat_compare, "fermat-canon": _cmd_fermat_canon,
    "enumerate": _cmd_enumerate, "run-suites": _cmd_run_suites,
}
_NO_INSTANCE = {"fermat-compare", "fermat-canon", "enumerate", "probe-transitive", "run-suites"}


def default_convention(command: str) -> str:
    """Scattering checks adjoin the whole space by default; everything else is raw."""
    return "include-universe" if command in ("scatter", "ordinal-profile") else "raw"


def run_command(name: str, inst: Instance | None, opts) -> Report:
    if name not in _HANDLERS:
        raise InputError(f"unknown command {name!r}")
    if inst is None and name not in _NO_INSTANCE:
        raise InputError(f"{name} needs an instance file")
    options = {"convention": opts.convention, "seed": opts.seed}
    for key in ("bound", "filter", "n", "sample", "index_count"):
        v = getattr(opts, key, None)
        if v is not None:
            options[key] = v
    rep = Report(name, instance_digest(inst) if inst is not None else None, options)
    _HANDLERS[name](inst, opts, rep)
    if inst is not None:
        rep.warnings = list(dict.fromkeys(inst.warnings))
    problems = revalidate(rep, inst, opts)
    if problems:
        raise AssertionError(f"witness failed to re-validate: {problems}")
    return rep


def revalidate(rep: Report, inst: Instance | None, opts) -> list[str]:
    """Re-check every typed witness in ``rep`` against its predicate."""
    problems = []
    if inst is None or not inst.families:
        return problems
    fams = _families(inst, opts)
    for c in rep.claims:
        kind, w = c.get("witness_kind"), c.get("witness")
        if w is None or kind is None:
            continue
        f = fams[c["family"]]
        X = f.space
        if kind == "incomparable":
            a, b = (PointSet.of(X, s).mask for s in w)
            ok = a in f.masks and b in f.masks and not is_subset(a, b) and not is_subset(b, a)
        elif kind == "interlocking-failure":
            m = PointSet.of(X, w).mask
            sup, sub = X.full, 0
            for k in f.masks:
                if k != m and is_subset(m, k):
                    sup &= k
                if k != m and is_subset(k, m):
                    sub |= k
            ok = m in f.masks and sup == m and sub != m
        elif kind == "scatter-failure":
            a = PointSet.of(X, w).mask
            ok = a != 0 and not any((a & s).bit_count() == 1 for s in f.masks)
        else:
            ok = True
        if not ok:
            problems.append(c["claim"])
    return problems


# -- entry point -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nestlab", description="Nests, orderability and Fermat reals on finite structures.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("inputs", nargs="*", help="instance file ('-' for stdin), or Fermat expressions")
    ap.add_argument("--json", action="store_true", help="emit the machine-readable report")
    ap.add_argument("--seed", type=int, default=None, help="seed for sampled modes")
    ap.add_argument("--bound", type=int, default=None, help="size bound for exhaustive work")
    ap.add_argument("--filter", choices=FILTERS, default="all")
    ap.add_argument("--convention", choices=("include-universe", "raw"), default=None)
    ap.add_argument("--allow-empty", action="store_true", help="keep the empty set in families")
    ap.add_argument("--count", action="store_true", help="enumerate: print only the count")
    ap.add_argument("--n", type=int, default=None, help="space size for enumerate / probe-transitive")
    ap.add_argument("--sample", type=int, default=None, help="enumerate: draw this many random families")
    ap.add_argument("--index-count", type=int, default=2, help="product-transfer: number of coordinates")
    ap.add_argument("--report-dir", default=None, help="run-suites: write the full report here")
    return ap


def _load(path: str) -> Instance:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text()
        except OSError as e:
            raise InputError(f"{path}: {e.strerror}") from e
    try:
        return parse_instance(text)
    except InputError as e:
        raise InputError(f"{path}: {e}") from e


def main(argv=None) -> int:
    opts = build_parser().parse_args(argv)
    from .suites import DEFAULT_SEED
    if opts.seed is None:
        opts.seed = DEFAULT_SEED
    if opts.convention is None:
        opts.convention = default_convention(opts.command)
    try:
        inst = None
        if opts.command not in ("fermat-compare", "fermat-canon") and opts.inputs:
            if len(opts.inputs) > 1:
                raise InputError(f"{opts.command} takes one instance file")
            inst = _load(opts.inputs[0])
        rep = run_command(opts.command, inst, opts)
    except InputError as e:
        print(f"nestlab: input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as e:
        print(f"nestlab: capacity error: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    if opts.json:
        print(rep.to_json())
    elif rep.text is not None:
        print(rep.text)
        for w in rep.warnings:
            print(f"warning: {w}", file=sys.stderr)
    else:
        print(rep.to_text())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
