"""Queen contiguity between precincts and the vote-margin filtration on it.

Two precincts are queen-adjacent when their boundaries come within a
tolerance of touching; a single shared corner point suffices.  The filtered
complex descends the margin scale: a winning precinct enters at the first
threshold its margin clears, an edge when both endpoints are in, and every
pairwise-adjacent triple spans a triangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import Entry, FilteredComplex
from .geometry import segment_segment_distance
from .precincts import Precinct, PrecinctMap, check_candidate, vote_margin, winning_precincts

DEFAULT_TOL = 1e-9
DEFAULT_STEP = 0.05


@dataclass(frozen=True)
class AdjacencyGraph:
    """Undirected graph on precinct ids."""

    nodes: tuple[str, ...]
    edges: frozenset[tuple[str, str]]  # each pair stored sorted

    def has_edge(self, a: str, b: str) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def neighbors(self, a: str) -> set[str]:
        out = set()
        for u, v in self.edges:
            if u == a:
                out.add(v)
            elif v == a:
                out.add(u)
        return out

    def to_edge_list(self) -> str:
        lines = [f"{u}\t{v}" for u, v in sorted(self.edges)]
        return "\n".join(lines) + ("\n" if lines else "")


def _boundary_segments(p: Precinct) -> list[tuple[tuple[float, float], tuple[float, float]]]:
    segs = []
    for ring in p.rings:
        segs.extend(zip(ring[:-1], ring[1:]))
    return segs


def _bbox_gap(a: Precinct, b: Precinct) -> float:
    ax0, ay0, ax1, ay1 = a.bbox()
    bx0, by0, bx1, by1 = b.bbox()
    dx = max(bx0 - ax1, ax0 - bx1, 0.0)
    dy = max(by0 - ay1, ay0 - by1, 0.0)
    return max(dx, dy)


def precincts_touch(a: Precinct, b: Precinct, tol: float = DEFAULT_TOL) -> bool:
    """True when the boundaries come within ``tol`` of each other."""
    if _bbox_gap(a, b) > tol:
        return False
    for s1 in _boundary_segments(a):
        for s2 in _boundary_segments(b):
            if segment_segment_distance(s1[0], s1[1], s2[0], s2[1]) <= tol:
                return True
    return False


def queen_adjacency(m: PrecinctMap, tol: float = DEFAULT_TOL) -> AdjacencyGraph:
    """Adjacency graph over every precinct in the map (sides ignored)."""
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    edges = set()
    for a, b in combinations(m.precincts, 2):
        if precincts_touch(a, b, tol):
            edges.add((min(a.id, b.id), max(a.id, b.id)))
    return AdjacencyGraph(nodes=tuple(p.id for p in m), edges=frozenset(edges))


def margin_level(delta: float, step: float = DEFAULT_STEP) -> float:
    """First threshold the margin clears, descending from 1 in ``step``s.

    Returns the smallest k*step with delta >= 1 - k*step (>= comparison, so
    a margin exactly on a threshold enters there).  A unanimous precinct
    enters at 0.
    """
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"margin {delta} outside [0, 1]")
    if step <= 0.0:
        raise ValueError("step must be positive")
    k = 0
    while delta < 1.0 - k * step - 1e-12:
        k += 1
    return round(k * step, 12)


def build_adjacency_complex(
    m: PrecinctMap,
    g: AdjacencyGraph,
    candidate: str,
    step: float = DEFAULT_STEP,
) -> FilteredComplex:
    """Margin-filtered clique complex of the candidate's winning precincts.

    Vertex i is the i-th winning precinct in id order; use
    :func:`winning_precincts` to recover the correspondence.
    """
    check_candidate(candidate)
    winners = winning_precincts(m, candidate)
    level = {p.id: margin_level(vote_margin(p), step) for p in winners}
    index = {p.id: i for i, p in enumerate(winners)}

    entries: list[Entry] = [((index[p.id],), level[p.id]) for p in winners]
    adjacent: list[list[int]] = [[] for _ in winners]
    for p, q in combinations(winners, 2):
        if g.has_edge(p.id, q.id):
            i, j = index[p.id], index[q.id]
            entries.append(((i, j), max(level[p.id], level[q.id])))
            adjacent[i].append(j)
    for i, nbrs in enumerate(adjacent):
        for j, k in combinations(nbrs, 2):
            if k in adjacent[j]:
                ids = (winners[i].id, winners[j].id, winners[k].id)
                entries.append(((i, j, k), max(level[x] for x in ids)))
    return FilteredComplex(entries)
