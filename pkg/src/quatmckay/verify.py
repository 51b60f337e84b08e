"""Theorem suites run on concrete groups.

Each suite returns a :class:`VerificationReport` listing every check, with
numeric witnesses, whether or not earlier checks failed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import diagram as dg
from . import groups as grp
from . import characters
from .characters import CharacterTable, character_table, orthogonality_errors
from .groups import SU2, FiniteSubgroup
from .mckay import McKayGraph, mckay_graph, reduced

MAX_DIMENSION = 36
ALLOWED_PRIMES = (2, 3, 5)

RULE_MAX = "dimension > 36"
RULE_PRIMES = "prime outside {2,3,5}"
RULE_ODD = "odd > 1 without 3"


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    witnesses: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "witnesses": _jsonable(self.witnesses)}


@dataclass
class VerificationReport:
    group: str
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> str | None:
        return next((c.name for c in self.checks if not c.passed), None)

    def check(self, name: str, fn: Callable[[], tuple]) -> Check:
        """Run ``fn`` -> (passed, detail, witnesses); an exception counts as a failure."""
        try:
            passed, detail, witnesses = fn()
        except Exception as exc:  # noqa: BLE001 - failures become report entries
            passed, detail, witnesses = False, f"{type(exc).__name__}: {exc}", {}
        c = Check(name, bool(passed), detail, witnesses)
        self.checks.append(c)
        return c

    def to_dict(self) -> dict:
        return {"group": self.group, "suite": self.suite, "passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        return round(float(x), 9) + 0.0
    if isinstance(x, dg.DiagramType):
        return str(x)
    return x


@dataclass(eq=False)
class Analysis:
    group: FiniteSubgroup
    table: CharacterTable
    graph: McKayGraph


def analyze(g: FiniteSubgroup, seed: int = 0) -> Analysis:
    table = character_table(g, seed=seed)
    return Analysis(g, table, mckay_graph(g, table))


def _common_checks(rep: VerificationReport, an: Analysis) -> None:
    graph = an.graph
    a = graph.adjacency()
    dims = graph.dims
    lam = graph.dim_w

    def table_quality():
        t = an.table
        row, col = orthogonality_errors(t)
        sq = int((t.degrees**2).sum())
        ok = max(row, col) < characters.ORTHO_TOL and sq == t.order
        return ok, "orthogonality and sum of squared degrees", {"row_error": row, "col_error": col, "sum_sq": sq, "order": t.order}

    rep.check("character table", table_quality)
    rep.check("symmetric", lambda: (all(np.array_equal(m, m.T) for m in graph.colors.values()), "n_ij = n_ji", {}))
    rep.check("connected", lambda: (dg.is_connected(a), "total graph connected", {"vertices": len(graph)}))
    rep.check(
        "dimension eigenvector",
        lambda: (np.array_equal(a @ dims, lam * dims), f"sum_j n_ij dim_j = {lam} dim_i", {"dims": dims}),
    )
    rep.check(
        "eigenspace dimension",
        lambda: ((k := dg.eigenspace_dim(a, lam)) == 1, f"eigenspace at {lam}", {"dimension": k}),
    )


def _order_check(rep: VerificationReport, an: Analysis) -> None:
    def run():
        order = dg.order_from_diagram(an.graph.adjacency(), an.graph.dim_w)
        return order == an.group.order, "sum of squared labels", {"recovered": order, "order": an.group.order}

    rep.check("order recovery", run)


def verify_su2(g: FiniteSubgroup, analysis: Analysis | None = None, seed: int = 0) -> VerificationReport:
    """McKay correspondence checks for a finite subgroup of SU(2)."""
    if g.ambient != SU2:
        raise ValueError("verify_su2 needs an SU(2) group")
    an = analysis or analyze(g, seed)
    rep = VerificationReport(g.name, "su2")
    graph = an.graph
    a = graph.adjacency()
    _common_checks(rep, an)
    full = rep.check("extended type", lambda: ((t := dg.classify(a)).is_extended, "full graph", {"type": t}))
    full_type = full.witnesses.get("type")

    def reduced_check():
        t = dg.classify(reduced(graph).adjacency())
        return full_type is not None and t == full_type.finite_type, "trivial vertex removed", {"type": t}

    rep.check("reduced Dynkin type", reduced_check)

    def labels():
        expected = dg.canonical_null_vector(full_type, a)
        return np.array_equal(graph.dims, expected), "dims equal catalog labels", {"labels": expected}

    rep.check("null vector labels", labels)
    _order_check(rep, an)
    return rep


def _parity_checks(rep: VerificationReport, an: Analysis) -> None:
    graph = an.graph
    par = [v.parity for v in graph.vertices]
    rep.check("parity defined", lambda: (all(p in (1, -1) for p in par), "chi(-1) = +-chi(1)", {"parities": par}))

    def crossing():
        bad = [(u, v) for u, v, _, _ in graph.edges() if par[u] == par[v]]
        return not bad, "edges join opposite parities", {"bad_edges": bad}

    rep.check("edges cross parity", crossing)

    def sums():
        dims = graph.dims
        plus = int(sum(d * d for d, p in zip(dims, par) if p == 1))
        minus = int(sum(d * d for d, p in zip(dims, par) if p == -1))
        half = an.group.order // 2
        witnesses = {
            "plus_dims": sorted(int(d) for d, p in zip(dims, par) if p == 1),
            "minus_dims": sorted(int(d) for d, p in zip(dims, par) if p == -1),
            "plus_sum": plus,
            "minus_sum": minus,
        }
        return plus == minus == half and 2 * half == an.group.order, f"each part sums to |G|/2 = {half}", witnesses

    rep.check("part square sums", sums)

    def structural():
        parts = dg.bipartition(graph.adjacency())
        if parts is None:
            return False, "odd cycle", {}
        plus = {v.id for v in graph.vertices if v.parity == 1}
        return set(parts[0]) in (plus, set(range(len(graph))) - plus), "2-colouring matches parity", {}

    rep.check("structural bipartition", structural)


def verify_parity(g: FiniteSubgroup, analysis: Analysis | None = None, seed: int = 0) -> VerificationReport:
    """Bipartition of the McKay graph by the sign of chi(-1)."""
    if g.minus_one_index is None:
        raise ValueError("-1 is not in the group")
    an = analysis or analyze(g, seed)
    rep = VerificationReport(g.name, "parity")
    _parity_checks(rep, an)
    return rep


def _coloured_checks(rep: VerificationReport, an: Analysis) -> None:
    graph = an.graph
    comps = {}

    def euclidean():
        types = {}
        for k in (1, 2):
            comps[k] = dg.classify_components(graph.adjacency(k))
            types[k] = [t for _, t in comps[k]]
        ok = all(t.is_extended for k in (1, 2) for t in types[k])
        return ok, "every colour component is Euclidean", {"colour1": types[1], "colour2": types[2]}

    rep.check("colour components Euclidean", euclidean)

    def transversal():
        c1 = [set(c.tolist()) for c in dg.components(graph.adjacency(1))]
        c2 = [set(c.tolist()) for c in dg.components(graph.adjacency(2))]
        sizes = [len(x & y) for x in c1 for y in c2]
        witnesses = {"components": [len(c1), len(c2)], "min_intersection": min(sizes), "max_intersection": max(sizes)}
        return min(sizes) > 0, "colour components meet pairwise", witnesses

    rep.check("transversality", transversal)

    def proportional():
        dims = graph.dims
        bad = []
        for k in (1, 2):
            for comp, t in comps.get(k, []):
                label = dg.canonical_null_vector(t, graph.adjacency(k)[np.ix_(comp, comp)])
                scale = dims[comp][np.argmin(label)]
                if not np.array_equal(dims[comp], scale * label):
                    bad.append({"colour": k, "vertices": comp, "dims": dims[comp], "labels": label})
        return not bad and bool(comps), "component dims are multiples of catalog labels", {"failures": bad}

    rep.check("component null vectors", proportional)


def _require_minus_one(g: FiniteSubgroup) -> None:
    if g.ambient == SU2 or g.minus_one_index is None:
        raise ValueError("(-1, -1) is not in the group")


def verify_so4(g: FiniteSubgroup, analysis: Analysis | None = None, seed: int = 0) -> VerificationReport:
    """Coloured McKay graph structure for a subgroup of SU(2) x SU(2) containing (-1, -1)."""
    _require_minus_one(g)
    an = analysis or analyze(g, seed)
    rep = VerificationReport(g.name, "so4")
    _common_checks(rep, an)
    _coloured_checks(rep, an)
    _parity_checks(rep, an)
    _order_check(rep, an)
    return rep


def verify_so4_structure(g: FiniteSubgroup, analysis: Analysis | None = None, seed: int = 0) -> VerificationReport:
    """The parity-free part of :func:`verify_so4`; needs no central -1."""
    if g.ambient == SU2:
        raise ValueError("needs an SU(2) x SU(2) group")
    an = analysis or analyze(g, seed)
    rep = VerificationReport(g.name, "so4-structure")
    _common_checks(rep, an)
    _coloured_checks(rep, an)
    _order_check(rep, an)
    return rep


def _prime_factors(n: int) -> set[int]:
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


def _dimension_rules(rep: VerificationReport, dims) -> None:
    dims = sorted(int(d) for d in dims)
    rep.check(RULE_MAX, lambda: (max(dims) <= MAX_DIMENSION, "largest irreducible dimension", {"max_dim": max(dims)}))

    def primes():
        found = sorted(set().union(*(_prime_factors(d) for d in dims)))
        return set(found) <= set(ALLOWED_PRIMES), "prime divisors of dimensions", {"primes": found}

    rep.check(RULE_PRIMES, primes)

    def odd():
        has_odd = any(d > 1 and d % 2 for d in dims)
        return (not has_odd) or 3 in dims, "odd dimension > 1 forces a 3", {"odd_above_one": has_odd, "has_three": 3 in dims}

    rep.check(RULE_ODD, odd)


def check_dimension_multiset(dims) -> VerificationReport:
    """Necessary conditions on the irreducible dimensions of a finite subgroup of SO(4)."""
    dims = list(dims)
    if not dims:
        raise ValueError("empty dimension multiset")
    rep = VerificationReport("dims" + str(sorted(int(d) for d in dims)).replace(" ", ""), "dimension-rules")
    _dimension_rules(rep, dims)
    return rep


def verify_applications(g: FiniteSubgroup, analysis: Analysis | None = None, seed: int = 0) -> VerificationReport:
    _require_minus_one(g)
    an = analysis or analyze(g, seed)
    rep = VerificationReport(g.name, "apps")
    _dimension_rules(rep, an.table.degrees)
    return rep


def verify_characterization(
    g: FiniteSubgroup,
    kind: str,
    factor_types: tuple[dg.DiagramType, dg.DiagramType] | dg.DiagramType | None = None,
    analysis: Analysis | None = None,
    seed: int = 0,
) -> VerificationReport:
    """Product and doubled detectors must fire exactly on products and diagonals.

    ``kind`` is how the group was built: "product", "diagonal" or "other";
    ``factor_types`` gives the expected McKay types of the factors.
    """
    an = analysis or analyze(g, seed)
    rep = VerificationReport(g.name, "characterization")

    def prod():
        found = dg.detect_product(an.graph)
        got = None if found is None else (found.first, found.second)
        if kind == "product":
            ok = got is not None and (factor_types is None or got == tuple(factor_types))
        else:
            ok = got is None
        return ok, f"product detector on a {kind} group", {"factors": got}

    def doubled():
        found = dg.detect_doubled(an.graph)
        if kind == "diagonal":
            ok = found is not None and (factor_types is None or found == factor_types)
        else:
            ok = found is None
        return ok, f"doubled detector on a {kind} group", {"type": found}

    rep.check("product detection", prod)
    rep.check("doubled detection", doubled)
    return rep


# ---------------------------------------------------------------- corpus

GOURSAT_SETS = ("goursat_c8_twist", "goursat_2t_c3", "goursat_2i_a5")


def su2_corpus_specs() -> list[str]:
    return [f"C{n}" for n in range(2, 25)] + [f"D{n}" for n in range(1, 13)] + ["2T", "2O", "2I"]


def su2_order(spec: str) -> int:
    return {"2T": 24, "2O": 48, "2I": 120}.get(spec) or (int(spec[1:]) * (4 if spec[0] == "D" else 1))


def corpus_specs(max_order: int = grp.ORDER_CAP) -> list[str]:
    """Spec strings of the fixed survey corpus with order at most ``max_order``."""
    base = su2_corpus_specs()
    out = [s for s in base if su2_order(s) <= max_order]
    for i, a in enumerate(base):
        for b in base[i:]:
            if su2_order(a) * su2_order(b) <= max_order:
                out.append(f"prod({a},{b})")
    out += [f"diag({s})" for s in base if su2_order(s) <= max_order]
    goursat_orders = {"goursat_c8_twist": 8, "goursat_2t_c3": 192, "goursat_2i_a5": 240}
    out += [f"gens:{name}.json" for name in GOURSAT_SETS if goursat_orders[name] <= max_order]
    return sorted(out)


def _kind(node) -> str:
    from .specs import Diag, Prod

    if isinstance(node, Prod):
        return "product"
    if isinstance(node, Diag):
        return "diagonal"
    return "other"


def run_suites(spec: str, seed: int = 0, su2_types: dict | None = None) -> tuple[Analysis, list[VerificationReport]]:
    """Every applicable suite for one corpus entry."""
    from .specs import build_group, parse_spec

    node = parse_spec(spec)
    g = build_group(node)
    an = analyze(g, seed)
    reports = []
    minus_one = g.minus_one_index is not None
    if g.ambient == SU2:
        reports.append(verify_su2(g, an))
        if minus_one:
            reports.append(verify_parity(g, an))
        reports.append(check_dimension_multiset(an.table.degrees))
        return an, reports
    reports.append(verify_so4(g, an) if minus_one else verify_so4_structure(g, an))
    reports.append(verify_applications(g, an) if minus_one else check_dimension_multiset(an.table.degrees))
    kind = _kind(node)
    expected = None
    if su2_types is not None and kind == "product":
        expected = (su2_types[str(node.left)], su2_types[str(node.right)])
    elif su2_types is not None and kind == "diagonal":
        expected = su2_types[str(node.family)]
    reports.append(verify_characterization(g, kind, expected, an))
    return an, reports


def su2_types(seed: int = 0) -> dict[str, dg.DiagramType]:
    """McKay type of every SU(2) corpus group."""
    from .specs import build_group

    return {s: dg.classify(analyze(build_group(s), seed).graph.adjacency()) for s in su2_corpus_specs()}


def survey(max_order: int = grp.ORDER_CAP, seed: int = 0, progress: Callable[[str], None] | None = None) -> dict:
    """Run all suites over the fixed corpus, in spec-string order."""
    types = su2_types(seed)
    entries = []
    for spec in corpus_specs(max_order):
        if progress:
            progress(spec)
        an, reports = run_suites(spec, seed, types)
        entries.append(
            {
                "spec": spec,
                "order": an.group.order,
                "ambient": an.group.ambient,
                "classes": len(an.table),
                "dims": sorted(int(d) for d in an.table.degrees),
                "passed": all(r.passed for r in reports),
                "reports": [r.to_dict() for r in reports],
            }
        )
    return {
        "max_order": max_order,
        "seed": seed,
        "groups": len(entries),
        "passed": all(e["passed"] for e in entries),
        "entries": entries,
    }
