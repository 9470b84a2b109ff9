"""Constructive path covers of (P3 u 2P1)-free graphs."""

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..config import get_settings
from ..graph import (
    Graph,
    Path,
    components,
    count_components,
    full_mask,
    induced,
    is_complete,
    iter_bits,
    lift,
    lowest,
    members,
    neighbors,
    popcount,
    vset,
)
from ..invariants import toughness
from ..monitoring.logger import get_logger
from ..monitoring.metrics import get_metrics_collector
from ..oracle import (
    hamiltonian_path_oracle,
    longest_path,
    min_path_cover_oracle,
    validate_path_cover,
)
from ..patterns import is_p3_kp1_free
from ..utils.errors import AnomalyError, ConstructionError, HypothesisError

logger = get_logger(__name__)


@dataclass(frozen=True)
class PathCover:
    """Vertex-disjoint paths covering the host, with the cutset W bounding their number.

    ``witness`` is None when the bound comes from toughness at least 1 (at
    most two paths); otherwise ``bound`` equals w(G - W) - |W|.
    """

    paths: Tuple[Path, ...]
    witness: Optional[int]
    bound: int
    method: str

    @property
    def size(self) -> int:
        return len(self.paths)

    def is_valid_in(self, g: Graph) -> bool:
        return validate_path_cover(g, self.paths)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "paths": [list(p.verts) for p in self.paths],
            "witness": None if self.witness is None else members(self.witness),
            "bound": self.bound,
            "method": self.method,
        }


def _order_piece(piece: int, entry: Optional[int], leave: Optional[int]) -> List[int]:
    middle = [v for v in iter_bits(piece) if v != entry and v != leave]
    head = [entry] if entry is not None else []
    tail = [leave] if leave is not None and leave != entry else []
    return head + middle + tail


def chain_through_cutset(g: Graph, pieces: Sequence[int], cut: int) -> Optional[List[Path]]:
    """
    Link complete pieces into w - |X| paths, each cut vertex joining two pieces.

    Every vertex x of the cut is placed between an end of one piece and an end
    of another, so that the pieces and links form a linear forest. Pieces with
    two or more vertices enter and leave through distinct vertices.

    Args:
        g: Host graph
        pieces: Vertex masks of the complete components of G[H] - X
        cut: The cutset X

    Returns:
        Paths covering the pieces and the cut, or None when no linking exists
    """
    cut_vertices = members(cut)
    m = len(pieces)
    degree = [0] * m
    used = [0] * m
    links: List[Tuple[int, int, int, int, int]] = []

    def linked(i: int, j: int) -> bool:
        seen = {i}
        stack = [i]
        while stack:
            p = stack.pop()
            for _, a, _, b, _ in links:
                for q, r in ((a, b), (b, a)):
                    if q == p and r not in seen:
                        if r == j:
                            return True
                        seen.add(r)
                        stack.append(r)
        return False

    def search(k: int) -> bool:
        if k == len(cut_vertices):
            return True
        x = cut_vertices[k]
        near = neighbors(g, x)
        options = [
            (i, a)
            for i, piece in enumerate(pieces)
            if degree[i] < 2
            for a in iter_bits(piece & near)
            if popcount(piece) == 1 or not used[i] >> a & 1
        ]
        for (i, a), (j, b) in combinations(options, 2):
            if i == j or linked(i, j):
                continue
            links.append((x, i, a, j, b))
            degree[i] += 1
            degree[j] += 1
            used[i] |= 1 << a
            used[j] |= 1 << b
            if search(k + 1):
                return True
            links.pop()
            degree[i] -= 1
            degree[j] -= 1
            used[i] &= ~(1 << a)
            used[j] &= ~(1 << b)
        return False

    if not search(0):
        return None

    incident: Dict[int, List[Tuple[int, int, int, int]]] = {i: [] for i in range(m)}
    for idx, (_, i, a, j, b) in enumerate(links):
        incident[i].append((idx, j, a, b))
        incident[j].append((idx, i, b, a))
    visited = set()
    paths = []
    for start in range(m):
        if start in visited or len(incident[start]) == 2:
            continue
        seq: List[int] = []
        current, came_by, entry = start, -1, None
        while True:
            visited.add(current)
            onward = [e for e in incident[current] if e[0] != came_by]
            leave = onward[0][2] if onward else None
            seq += _order_piece(pieces[current], entry, leave)
            if not onward:
                break
            idx, nxt, _, arrive = onward[0]
            seq.append(links[idx][0])
            current, came_by, entry = nxt, idx, arrive
        paths.append(Path(seq))
    return paths


def _longest_path_cover(g: Graph, h: int) -> List[Path]:
    sub, mapping = induced(g, h)
    path = longest_path(sub)
    lifted = Path([mapping[v] for v in path.verts])
    rest = h & ~lifted.vertex_set
    if rest and not is_complete(g, rest):
        raise AnomalyError(
            "path_cover_longest_path",
            "vertices off a longest path do not induce a clique",
            {"path": list(lifted.verts), "rest": members(rest)},
        )
    return [lifted] + ([Path(members(rest))] if rest else [])


def _through_single_cut_vertex(
    g: Graph, x: int, pieces: Sequence[int], d: int
) -> Optional[List[Path]]:
    """One path: the complete piece, then x, then a hamiltonian path of the noncomplete piece D."""
    others = [p for p in pieces if p != d]
    if len(others) != 1:
        return None
    clique = others[0]
    k_end = lowest(clique & neighbors(g, x))
    if k_end < 0:
        return None
    head = [v for v in iter_bits(clique) if v != k_end] + [k_end]
    sub, mapping = induced(g, d)
    index = {v: i for i, v in enumerate(mapping)}
    for start in iter_bits(d & neighbors(g, x)):
        answer = hamiltonian_path_oracle(sub, u=index[start])
        if answer.yes:
            return [Path(head + [x] + [mapping[v] for v in answer.witness.verts])]
    return None


def _cover_noncomplete_component(
    g: Graph, h: int
) -> Tuple[Optional[List[Path]], Optional[int], str]:
    """Cover the unique noncomplete component H; returns (paths, W, method)."""
    full = full_mask(g.n)
    sub, mapping = induced(g, h)
    cert = toughness(sub)
    if cert.value >= 1:
        return _longest_path_cover(g, h), None, "longest_path"

    s = lift(cert.tough_set, mapping)
    pieces = components(g, removed=(full & ~h) | s)
    if all(is_complete(g, p) for p in pieces):
        return chain_through_cutset(g, pieces, s), s, "tough_set_chain"

    d = next(p for p in pieces if not is_complete(g, p))
    dsub, dmap = induced(g, d)
    dcert = toughness(dsub)
    if dcert.value >= 1 and popcount(s) == 1:
        return _through_single_cut_vertex(g, lowest(s), pieces, d), s, "hamiltonian_piece"

    t = lift(dcert.tough_set or 0, dmap)
    s1 = vset(*(x for x in iter_bits(s) if neighbors(g, x) & d & ~t))
    t1 = s1 | t
    refined = components(g, removed=(full & ~h) | t1)
    if not all(is_complete(g, p) for p in refined):
        return None, t1, "refined_tough_set_chain"
    return chain_through_cutset(g, refined, t1), t1, "refined_tough_set_chain"


def min_path_cover_p32p1free(g: Graph) -> PathCover:
    """
    Cover a (P3 u 2P1)-free graph by few disjoint paths, with a certificate.

    With toughness at least 1 the cover is a longest path plus the clique left
    over. Below 1 the cover links the complete components of H - W through the
    vertices of a tough set W (refined inside a noncomplete component when
    needed) and has w(G - W) - |W| paths, which is optimal.

    Args:
        g: (P3 u 2P1)-free graph

    Returns:
        PathCover

    Raises:
        HypothesisError: g contains an induced P3 u 2P1
        AnomalyError: a construction step met a state the argument excludes
        ConstructionError: linking failed and the graph is beyond the exact cover
    """
    free, witness = is_p3_kp1_free(g, 2)
    if not free:
        raise HypothesisError(
            "p3_2p1_free", "graph contains an induced P3 u 2P1", witness=witness.to_list()
        )
    if g.n == 0:
        return PathCover((), 0, 0, "empty")

    comps = components(g)
    noncomplete = [c for c in comps if not is_complete(g, c)]
    if not noncomplete:
        paths = tuple(Path(members(c)) for c in comps)
        return PathCover(paths, 0, len(comps), "complete_components")

    h = noncomplete[0]
    if len(noncomplete) > 1:
        raise AnomalyError(
            "path_cover_components", "two noncomplete components in a free graph", {}
        )
    rest = [Path(members(c)) for c in comps if c != h]
    h_paths, w_set, method = _cover_noncomplete_component(g, h)

    if h_paths is None:
        limit = get_settings().cover_oracle_max_n
        if popcount(h) > limit:
            raise ConstructionError(
                "min_path_cover_p32p1free",
                "could not link the cutset",
                {"cutset": members(w_set or 0)},
            )
        get_metrics_collector().record_fallback("min_path_cover_p32p1free")
        logger.info("oracle_fallback", operation="min_path_cover_p32p1free", n=g.n, method=method)
        sub, mapping = induced(g, h)
        _, sub_paths = min_path_cover_oracle(sub)
        h_paths = [Path([mapping[v] for v in p.verts]) for p in sub_paths]
        method = "oracle"

    paths = tuple(sorted(rest + h_paths, key=lambda p: min(p.verts)))
    if w_set is None and len(comps) == 1:
        bound = 2
    else:
        w_set = w_set or 0
        bound = count_components(g, removed=w_set) - popcount(w_set)
    if len(paths) > bound:
        raise AnomalyError(
            "path_cover_bound",
            f"{len(paths)} paths exceed the bound {bound}",
            {"paths": [list(p.verts) for p in paths], "witness": members(w_set or 0)},
        )
    logger.debug("min_path_cover_p32p1free", n=g.n, paths=len(paths), bound=bound, method=method)
    return PathCover(paths, w_set, bound, method)
