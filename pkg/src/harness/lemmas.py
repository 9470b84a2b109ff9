"""Registered lemma checks: hypotheses, the constructive step, and the conclusion test."""

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

import networkx as nx

from ..config import get_settings
from ..generators import clique_join_toughness
from ..graph import (
    Cycle,
    Graph,
    complete_graph,
    components,
    count_components,
    disjoint_union,
    induced,
    is_complete,
    is_connected,
    iter_bits,
    join,
    members,
    neighbors_in,
    popcount,
    vset,
)
from ..invariants import (
    ToughnessCertificate,
    connectivity,
    connectivity_toughness_bound,
    degree_sum_check,
    dirac_type_check,
    exceeds_insertion_threshold,
    independence_number,
    toughness,
)
from ..matching import (
    DeficientSet,
    StarMatching,
    generalized_matching,
    star_matching,
    validate_generalized_matching,
)
from ..oracle import (
    hamiltonian_cycle_oracle,
    min_path_cover_oracle,
    validate_cycle,
    validate_path_cover,
)
from ..paths import (
    SpliceLog,
    chvatal_erdos_construction,
    hamiltonian_path_check,
    insert_vertex,
    is_hamiltonian_connected,
    min_path_cover_p32p1free,
)
from ..patterns import check_lemma21, is_free, is_p3_kp1_free, p2_union_kp1, p3_union_kp1, p4
from ..pipeline import assemble_lemma27, deficiency_split
from ..utils.errors import (
    AnomalyError,
    ConstructionError,
    HypothesisError,
    PreconditionError,
    ToughHamError,
)
from ..utils.helpers import format_rational, parse_rational
from .sources import Instance, SourceSpec

INSERTION_MAX_N = 12


@dataclass
class CheckResult:
    """Outcome of one check on one instance.

    ``tested`` is False when the hypotheses do not hold; ``findings`` lists
    (clause, details) for every failed conclusion.
    """

    tested: bool = False
    findings: List[Tuple[str, Dict[str, Any]]] = field(default_factory=list)
    stats: Counter = field(default_factory=Counter)

    def fail(self, clause: str, **details: Any) -> None:
        self.findings.append((clause, details))


Check = Callable[[Instance], CheckResult]
PlantedSource = Callable[[SourceSpec], Iterator[Instance]]


@dataclass(frozen=True)
class LemmaCheck:
    lemma_id: str
    aliases: Tuple[str, ...]
    description: str
    check: Check
    planted: Optional[PlantedSource] = None
    planted_only: bool = False


def _tau(g: Graph) -> ToughnessCertificate:
    return toughness(g)


def _interesting(g: Graph) -> bool:
    """Connected, noncomplete and at least three vertices."""
    return g.n >= 3 and is_connected(g) and not is_complete(g)


def _cutsets(g: Graph) -> Iterator[int]:
    for s in range(1 << g.n):
        if popcount(s) <= g.n - 2 and count_components(g, s) >= 2:
            yield s


# cutset structure


def check_cutset_structure(inst: Instance) -> CheckResult:
    g = inst.graph
    result = CheckResult()
    for k in inst.params.get("ks", (1, 2, 3)):
        if not is_p3_kp1_free(g, k)[0]:
            continue
        for s in _cutsets(g):
            result.tested = True
            result.stats["cutsets"] += 1
            report = check_lemma21(g, s, k)
            for clause, detail in report.failures().items():
                result.fail(f"k={k}:{clause}", S=members(s), **detail)
    return result


# star matchings against Hall's condition


Sides = Tuple[List[int], List[int], Dict[int, List[int]], Dict[int, int]]


def _bipartite_sides(inst: Instance) -> Sides:
    """X = 0..x-1 with demands f, Y the remaining vertices."""
    g = inst.graph
    a = inst.params["x"]
    xs = list(range(a))
    ys = list(range(a, g.n))
    adj = {x: members(g.adj[x] >> a << a) for x in xs}
    f = dict(zip(xs, inst.params["f"]))
    return xs, ys, adj, f


def check_star_matching(inst: Instance) -> CheckResult:
    xs, ys, adj, f = _bipartite_sides(inst)
    result = CheckResult(tested=True)
    violator = None
    for r in range(1, len(xs) + 1):
        for subset in combinations(xs, r):
            if len({y for x in subset for y in adj[x]}) < sum(f[x] for x in subset):
                violator = subset
                break
        if violator is not None:
            break
    found = star_matching(xs, ys, adj, f)
    if isinstance(found, StarMatching):
        result.stats["matchings"] += 1
        if violator is not None:
            result.fail("hall_agreement", violator=list(violator))
        elif not found.is_valid(adj, f):
            result.fail("invalid_matching", stars={str(x): list(v) for x, v in found.stars.items()})
    elif isinstance(found, DeficientSet):
        result.stats["deficient_sets"] += 1
        if violator is None:
            result.fail("hall_agreement", deficient=list(found.members))
        nbrs = {y for x in found.members for y in adj[x]}
        if not found.members or len(nbrs) >= sum(f[x] for x in found.members):
            result.fail("deficient_set", deficient=list(found.members), neighbors=len(nbrs))
    return result


def bipartite_instances(source: SourceSpec) -> Iterator[Instance]:
    """Random bipartite graphs with |X| <= 8, |Y| <= 16 and demands 1..3."""
    rng = source.rng()
    for _ in range(source.samples):
        a = rng.randint(1, 8)
        b = rng.randint(1, 16)
        p = source.p if source.p is not None else rng.uniform(0.1, 0.6)
        edges = [(x, a + y) for x in range(a) for y in range(b) if rng.random() < p]
        f = [rng.randint(1, 3) for _ in range(a)]
        yield Instance(Graph.from_edges(a + b, edges), {"x": a, "f": f})


# generalized matchings


def _resource_conditions(g: Graph, s_set: int, s: int, min_components: int) -> Optional[str]:
    """
    The first unmet resource condition, or None.

    Hall's condition is checked over sets of trivial components; nontrivial
    ones are assumed fully attached.
    """
    if count_components(g, s_set) < 2:
        return "cutset"
    comps = components(g, s_set)
    if len(comps) < min_components:
        return "component_count"
    if popcount(s_set) < 2 * s * len(comps):
        return "partner_supply"
    attach = [neighbors_in(g, s_set, c) for c in comps]
    if any(popcount(a) < 4 * s for a in attach):
        return "component_attachment"
    trivial = [a for a, c in zip(attach, comps) if popcount(c) == 1]
    for r in range(2, len(trivial) + 1):
        for subset in combinations(trivial, r):
            union = 0
            for a in subset:
                union |= a
            if popcount(union) < 2 * s * r:
                return "hall"
    return None


def check_generalized_matching(inst: Instance) -> CheckResult:
    g = inst.graph
    s_set = vset(*range(inst.params["s_size"]))
    s = inst.params["s"]
    min_components = inst.params.get("min_components", 5)
    result = CheckResult()
    unmet = _resource_conditions(g, s_set, s, min_components)
    if unmet is not None:
        result.stats[f"unmet:{unmet}"] += 1
        return result
    result.tested = True
    try:
        m = generalized_matching(g, s_set, s, min_components=min_components)
    except ToughHamError as e:
        result.fail("construction", error=str(e))
        return result
    verdict = validate_generalized_matching(g, s_set, m)
    if not verdict.ok:
        result.fail("validation", reason=verdict.reason, detail=verdict.detail or {})
    result.stats[f"s={s}"] += 1
    return result


def _star_join_instance(
    rng: Any, s: int, sizes: List[int], s_size: int, min_components: int
) -> Instance:
    """A clique S joined fully to nontrivial cliques and partly to single vertices."""
    n = s_size + sum(sizes)
    edges = list(combinations(range(s_size), 2))
    offset = s_size
    for size in sizes:
        block = range(offset, offset + size)
        edges += combinations(block, 2)
        if size == 1:
            seen = rng.sample(range(s_size), rng.randint(max(4 * s, s_size // 2), s_size))
        else:
            seen = range(s_size)
        edges += [(x, v) for x in seen for v in block]
        offset += size
    params = {"s": s, "s_size": s_size, "min_components": min_components, "components": sizes}
    return Instance(Graph.from_edges(n, edges), params)


def generalized_instances(source: SourceSpec) -> Iterator[Instance]:
    """Five to seven cliques under S with s in {1, 2} and |S| >= 2 s l."""
    rng = source.rng()
    for _ in range(source.samples):
        s = rng.choice((1, 2))
        ell = rng.randint(5, 7)
        sizes = [rng.choice((1, 1, 2, 3)) for _ in range(ell)]
        s_size = 2 * s * ell + rng.randint(0, 2 * s * ell)
        yield _star_join_instance(rng, s, sizes, s_size, 5)


def corollary_instances(source: SourceSpec) -> Iterator[Instance]:
    """Two to four cliques under S with s = 1 and |S| >= 4 l."""
    rng = source.rng()
    for _ in range(source.samples):
        ell = rng.randint(2, 4)
        sizes = [rng.choice((1, 2, 3)) for _ in range(ell)]
        s_size = 4 * ell + rng.randint(0, 4)
        yield _star_join_instance(rng, 1, sizes, s_size, 2)


# hamiltonicity of 1-tough R-free graphs


_SMALL_PATTERNS = {"P4": p4, "P3uP1": lambda: p3_union_kp1(1), "P2u2P1": lambda: p2_union_kp1(2)}


def check_one_tough_free(inst: Instance) -> CheckResult:
    g = inst.graph
    result = CheckResult()
    if g.n < 3 or not is_connected(g):
        return result
    free_for = [name for name, build in _SMALL_PATTERNS.items() if is_free(g, build())[0]]
    if not free_for or _tau(g).value < 1:
        return result
    result.tested = True
    answer = hamiltonian_cycle_oracle(g)
    for name in free_for:
        result.stats[name] += 1
        if not answer.yes:
            result.fail(f"{name}:nonhamiltonian")
    return result


def check_hamiltonian_connected(inst: Instance) -> CheckResult:
    g = inst.graph
    result = CheckResult()
    if g.n < 3 or not is_connected(g) or not is_p3_kp1_free(g, 1)[0] or _tau(g).value <= 1:
        return result
    result.tested = True
    ok, pair = is_hamiltonian_connected(g)
    if not ok:
        result.fail("not_hamiltonian_connected", pair=list(pair))
    return result


# path covers


def check_path_cover(inst: Instance) -> CheckResult:
    g = inst.graph
    result = CheckResult()
    if g.n < 1 or not is_p3_kp1_free(g, 2)[0]:
        return result
    result.tested = True
    try:
        cover = min_path_cover_p32p1free(g)
    except (AnomalyError, ConstructionError) as e:
        result.fail("construction", error=str(e))
        return result
    result.stats[f"method:{cover.method}"] += 1
    paths = [list(p.verts) for p in cover.paths]
    if not validate_path_cover(g, cover.paths):
        result.fail("invalid_cover", paths=paths)
    tau = _tau(g).value
    if tau >= 1:
        if cover.size > 2:
            result.fail("two_paths", paths=paths, toughness=format_rational(tau))
    else:
        alpha, _ = independence_number(g)
        w_set = cover.witness or 0
        bound = count_components(g, w_set) - popcount(w_set)
        if cover.witness is None or cover.size > bound or bound > alpha:
            result.fail(
                "cutset_bound",
                paths=paths,
                witness=members(w_set),
                bound=bound,
                alpha=alpha,
            )
    if g.n <= get_settings().cover_oracle_max_n:
        optimum, _ = min_path_cover_oracle(g)
        if optimum > cover.size:
            result.fail("oracle_optimum", optimum=optimum, size=cover.size)
    return result


# vertex insertion


def _spanning_cycle_without(g: Graph, removed: int) -> Optional[Cycle]:
    sub, mapping = induced(g, g.vertices & ~removed)
    if sub.n < 3:
        return None
    answer = hamiltonian_cycle_oracle(sub)
    if not answer.yes:
        return None
    return Cycle([mapping[v] for v in answer.witness.verts])


def check_insertion(inst: Instance) -> CheckResult:
    g = inst.graph
    result = CheckResult()
    if not _interesting(g):
        return result
    t = _tau(g).value
    if t == 0:
        return result
    for x in range(g.n):
        y = (x + 1) % g.n
        for removed in (vset(x), vset(x, y)):
            cycle = _spanning_cycle_without(g, removed)
            if cycle is None:
                continue
            degree = popcount(g.adj[x] & cycle.vertex_set)
            if not exceeds_insertion_threshold(degree, g.n, t):
                continue
            result.tested = True
            log = SpliceLog(cycle)
            try:
                grown = insert_vertex(g, cycle, x, t, tough=True, log=log)
            except ToughHamError as e:
                result.fail("construction", cycle=list(cycle.verts), vertex=x, error=str(e))
                continue
            result.stats[f"rung:{log.tags[-1]}"] += 1
            spans = grown.vertex_set == cycle.vertex_set | 1 << x
            if not spans or not validate_cycle(g, grown, hamiltonian=False):
                result.fail(
                    "invalid_cycle", cycle=list(cycle.verts), vertex=x, result=list(grown.verts)
                )
    return result


def insertion_instances(source: SourceSpec) -> Iterator[Instance]:
    """Seeded G(n, p) graphs of order at most 12."""
    rng = source.rng()
    low = max(source.n_min, 5)
    high = max(low, min(source.n_max, INSERTION_MAX_N))
    for _ in range(source.samples):
        n = rng.randint(low, high)
        p = source.p if source.p is not None else rng.uniform(0.4, 0.9)
        yield Instance(Graph.from_networkx(nx.gnp_random_graph(n, p, seed=rng.randrange(2**32))))


# degree conditions


def check_dirac(inst: Instance) -> CheckResult:
    g = inst.graph
    result = CheckResult()
    if not _interesting(g):
        return result
    tau = _tau(g).value
    if tau == 0 or not dirac_type_check(g, tau):
        return result
    result.tested = True
    if not hamiltonian_cycle_oracle(g).yes:
        result.fail("nonhamiltonian", toughness=format_rational(tau))
    return result


def check_degree_sum(inst: Instance) -> CheckResult:
    g = inst.graph
    result = CheckResult()
    if not _interesting(g):
        return result
    tau = _tau(g).value
    if tau == 0 or not degree_sum_check(g, tau)[0]:
        return result
    result.tested = True
    if not hamiltonian_cycle_oracle(g).yes:
        result.fail("nonhamiltonian", toughness=format_rational(tau))
    return result


def check_kappa_tau(inst: Instance) -> CheckResult:
    g = inst.graph
    result = CheckResult()
    if not _interesting(g):
        return result
    result.tested = True
    tau = _tau(g).value
    if not connectivity_toughness_bound(g, tau):
        result.fail("kappa_below_2tau", kappa=connectivity(g)[0], toughness=format_rational(tau))
    return result


# component assembly


def check_assembly(inst: Instance) -> CheckResult:
    g = inst.graph
    s_set = vset(*range(inst.params["s_size"]))
    t = parse_rational(inst.params["t"])
    result = CheckResult()
    try:
        # clique joins are (P3 u P1)-free
        outcome = assemble_lemma27(g, s_set, t, check_freeness=False)
    except HypothesisError as e:
        result.stats[f"unmet:{e.condition}"] += 1
        return result
    except AnomalyError as e:
        result.tested = True
        result.fail("anomaly", error=str(e), **e.details)
        return result
    result.tested = True
    for step in outcome.steps:
        if step.startswith(("case_", "insert_component:")):
            result.stats[step] += 1
    if outcome.cycle is None:
        missing = None if outcome.missing_edge is None else list(outcome.missing_edge)
        result.fail("assembly", reason=outcome.reason, missing_edge=missing)
    return result


def assembly_instances(source: SourceSpec) -> Iterator[Instance]:
    """K_m joined to five to seven cliques, three or more nontrivial, with m >= 8 l."""
    rng = source.rng()
    for _ in range(source.samples):
        ell = rng.randint(5, 7)
        sizes = [rng.randint(2, 3) for _ in range(3)] + [rng.randint(1, 3) for _ in range(ell - 3)]
        rng.shuffle(sizes)
        m = 8 * ell + rng.randint(0, ell)
        g = join(complete_graph(m), disjoint_union(complete_graph(c) for c in sizes))
        t = clique_join_toughness(m, sizes)
        yield Instance(g, {"s_size": m, "t": format_rational(t), "components": sizes})


# tough sets of (P3 u P1)-free graphs


def check_tough_set_components(inst: Instance) -> CheckResult:
    g = inst.graph
    result = CheckResult()
    if not _interesting(g) or not is_p3_kp1_free(g, 1)[0]:
        return result
    cert = _tau(g)
    if not 0 < cert.value <= 1:
        return result
    result.tested = True
    alpha, _ = independence_number(g)
    w = count_components(g, cert.tough_set)
    if w != alpha:
        result.fail(
            "components_equal_alpha",
            tough_set=members(cert.tough_set),
            components=w,
            alpha=alpha,
        )
    return result


# connectivity against independence


def check_chvatal_erdos(inst: Instance) -> CheckResult:
    g = inst.graph
    result = CheckResult()
    if g.n < 3 or not is_connected(g):
        return result
    kappa, _ = connectivity(g)
    alpha, _ = independence_number(g)
    if kappa >= alpha - 1:
        result.tested = True
        result.stats["path_case"] += 1
        if hamiltonian_path_check(g) is None:
            result.fail("hamiltonian_path", kappa=kappa, alpha=alpha)
    if kappa >= alpha:
        result.stats["cycle_case"] += 1
        try:
            cycle, log = chvatal_erdos_construction(g)
        except ToughHamError as e:
            result.fail("construction", kappa=kappa, alpha=alpha, error=str(e))
            return result
        if "oracle" in log.tags:
            result.stats["fallback"] += 1
        if not validate_cycle(g, cycle):
            result.fail("invalid_cycle", cycle=list(cycle.verts))
    return result


def check_chvatal_erdos_connected(inst: Instance) -> CheckResult:
    g = inst.graph
    result = CheckResult()
    if g.n < 3 or not is_connected(g):
        return result
    kappa, _ = connectivity(g)
    alpha, _ = independence_number(g)
    if kappa < alpha + 1:
        return result
    result.tested = True
    ok, pair = is_hamiltonian_connected(g)
    if not ok:
        result.fail("not_hamiltonian_connected", pair=list(pair), kappa=kappa, alpha=alpha)
    return result


# maximal deficient subsets


def _q_neighbors(g: Graph, q1: int, subset: Tuple[int, ...]) -> int:
    hit = 0
    for x in subset:
        hit |= g.adj[x] & q1
    return hit


def check_deficiency_split(inst: Instance) -> CheckResult:
    g = inst.graph
    q1 = vset(*range(inst.params["q"]))
    result = CheckResult(tested=True)
    try:
        split = deficiency_split(g, q1)
    except ToughHamError as e:
        result.fail("construction", error=str(e))
        return result
    outside = members(split.s_prime | split.s_double_prime)
    best, union = 0, 0
    for r in range(1, len(outside) + 1):
        for subset in combinations(outside, r):
            value = 2 * r - popcount(_q_neighbors(g, q1, subset))
            if value > best:
                best, union = value, vset(*subset)
            elif value == best and value > 0:
                union |= vset(*subset)
    if split.s_prime != union:
        result.fail("maximal_deficient", s_prime=members(split.s_prime), expected=members(union))
    hit = _q_neighbors(g, q1, tuple(iter_bits(split.s_prime)))
    if split.s_star != hit | split.s_double_prime or split.d1_star != q1 & ~hit:
        result.fail("split_sets", s_star=members(split.s_star), d1_star=members(split.d1_star))
    rest = members(split.s_double_prime)
    for r in range(1, len(rest) + 1):
        for subset in combinations(rest, r):
            if popcount(_q_neighbors(g, q1, subset) & ~hit) < 2 * r:
                result.fail("hall_rest", subset=list(subset))
    used = 0
    for x, leaves in split.matching.items():
        leaf_set = vset(*leaves)
        if len(leaves) != 2 or leaf_set & used or leaf_set & ~(g.adj[x] & split.d1_star):
            result.fail("matching", center=x, leaves=list(leaves))
        used |= leaf_set
    if popcount(split.d1_star) < 2:
        result.fail("d1_star_size", d1_star=members(split.d1_star))
    result.stats["deficient" if split.s_prime else "hall"] += 1
    return result


def deficiency_instances(source: SourceSpec) -> Iterator[Instance]:
    """A clique Q1 of 4..10 vertices and r outside vertices with |Q1| - 2r >= 2."""
    rng = source.rng()
    for _ in range(source.samples):
        q = rng.randint(4, 10)
        r = rng.randint(1, (q - 2) // 2)
        edges = list(combinations(range(q), 2))
        edges += combinations(range(q, q + r), 2)
        for i in range(r):
            seen = rng.sample(range(q), rng.randint(1, q))
            edges += [(v, q + i) for v in seen]
        yield Instance(Graph.from_edges(q + r, edges), {"q": q})


LEMMAS: Tuple[LemmaCheck, ...] = (
    LemmaCheck(
        "2.1",
        ("result0",),
        "cutset structure of (P3 u kP1)-free graphs",
        check_cutset_structure,
    ),
    LemmaCheck(
        "2.2",
        ("result1",),
        "star matchings exist iff Hall's condition holds",
        check_star_matching,
        bipartite_instances,
        planted_only=True,
    ),
    LemmaCheck(
        "2.3",
        ("result6",),
        "generalized K_{1,2s}-matchings under five or more components",
        check_generalized_matching,
        generalized_instances,
        planted_only=True,
    ),
    LemmaCheck(
        "cor2.4",
        ("corollary2.4",),
        "generalized K_{1,2}-matchings under any cutset",
        check_generalized_matching,
        corollary_instances,
        planted_only=True,
    ),
    LemmaCheck("2.5", ("result10",), "1-tough R-free graphs are hamiltonian", check_one_tough_free),
    LemmaCheck(
        "2.6",
        ("result5",),
        "(P3 u P1)-free graphs tougher than 1 are hamiltonian-connected",
        check_hamiltonian_connected,
    ),
    LemmaCheck("pathcover", ("result9",), "(P3 u 2P1)-free path covers", check_path_cover),
    LemmaCheck(
        "2.8",
        ("result4",),
        "a high-degree vertex can be inserted into a cycle",
        check_insertion,
        insertion_instances,
        planted_only=True,
    ),
    LemmaCheck("dirac", ("result2",), "Dirac-type degree bound under toughness", check_dirac),
    LemmaCheck(
        "2.7",
        ("result11",),
        "assembly around a cutset with five or more complete components",
        check_assembly,
        assembly_instances,
        planted_only=True,
    ),
    LemmaCheck(
        "result13",
        (),
        "tough sets of (P3 u P1)-free graphs leave alpha components",
        check_tough_set_components,
    ),
    LemmaCheck("CE", ("result7",), "kappa >= alpha gives a hamiltonian cycle", check_chvatal_erdos),
    LemmaCheck(
        "deficiency-split-maximality",
        (),
        "S' is the maximal deficient set and S'' is matchable",
        check_deficiency_split,
        deficiency_instances,
        planted_only=True,
    ),
    LemmaCheck("2.12", ("result3",), "degree-sum bound under toughness", check_degree_sum),
    LemmaCheck("kappa-tau", (), "kappa >= ceil(2 tau) for noncomplete graphs", check_kappa_tau),
    LemmaCheck(
        "result7ii",
        ("CE-connected",),
        "kappa >= alpha + 1 gives hamiltonian-connectedness",
        check_chvatal_erdos_connected,
    ),
)

_INDEX: Dict[str, LemmaCheck] = {
    name.lower(): lemma for lemma in LEMMAS for name in (lemma.lemma_id, *lemma.aliases)
}


def get_lemma(name: str) -> LemmaCheck:
    """Look a check up by id or alias, case-insensitively."""
    try:
        return _INDEX[name.strip().lower()]
    except KeyError:
        known = sorted(lemma.lemma_id for lemma in LEMMAS)
        raise PreconditionError("lemma_id", f"unknown lemma {name!r}; known: {known}") from None
