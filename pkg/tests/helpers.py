"""Independent reference implementations used to cross-check the library.

Nothing here imports geoph's builders; these are deliberately naive
re-derivations (brute force or textbook formulas) so that agreement with
the package is evidence, not tautology.
"""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np


def naive_vr(points, eps):
    """All-pairs/all-triples Vietoris-Rips reference: {simplex: value}."""
    n = len(points)

    def d(i, j):
        return math.dist(points[i], points[j])

    entries = {(i,): 0.0 for i in range(n)}
    for i, j in combinations(range(n), 2):
        dij = d(i, j)
        if dij <= eps:
            entries[(i, j)] = dij
    for i, j, k in combinations(range(n), 3):
        ds = (d(i, j), d(i, k), d(j, k))
        if max(ds) <= eps:
            entries[(i, j, k)] = max(ds)
    return entries


def hull_point_count(points):
    """Number of input points on the convex hull boundary (collinear included)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return len(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) < 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) < 0:
            upper.pop()
        upper.append(p)
    return len(set(lower[:-1] + upper[:-1]))


def in_circle_det(a, b, c, p):
    """Raw in-circle determinant with abc forced counterclockwise."""
    if (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) < 0:
        b, c = c, b
    m = np.array(
        [
            [a[0] - p[0], a[1] - p[1], (a[0] - p[0]) ** 2 + (a[1] - p[1]) ** 2],
            [b[0] - p[0], b[1] - p[1], (b[0] - p[0]) ** 2 + (b[1] - p[1]) ** 2],
            [c[0] - p[0], c[1] - p[1], (c[0] - p[0]) ** 2 + (c[1] - p[1]) ** 2],
        ]
    )
    return float(np.linalg.det(m))


def circumcircle_has_point_strictly(points, tri, q, rel_tol=1e-9):
    """True when point q sits strictly inside the circumcircle of tri."""
    a, b, c = (points[v] for v in tri)
    det = in_circle_det(a, b, c, points[q])
    scale = max(
        (a[0] - points[q][0]) ** 2 + (a[1] - points[q][1]) ** 2,
        (b[0] - points[q][0]) ** 2 + (b[1] - points[q][1]) ** 2,
        (c[0] - points[q][0]) ** 2 + (c[1] - points[q][1]) ** 2,
        1.0,
    )
    return det > rel_tol * scale * scale


def grid_queen_edges(cells):
    """Queen adjacency between unit grid cells given as (row, col) pairs."""
    cells = set(cells)
    edges = set()
    for r, c in cells:
        for dr in (-1, 0, 1):
            for dc in (-1, 0, 1):
                if (dr, dc) == (0, 0):
                    continue
                other = (r + dr, c + dc)
                if other in cells:
                    edges.add(tuple(sorted([(r, c), other])))
    return edges


def clique_triangles(nodes, edges):
    """Triangles of the clique complex of an undirected graph."""
    edges = {tuple(sorted(e)) for e in edges}
    out = set()
    for a, b, c in combinations(sorted(nodes), 3):
        if (
            tuple(sorted((a, b))) in edges
            and tuple(sorted((a, c))) in edges
            and tuple(sorted((b, c))) in edges
        ):
            out.add((a, b, c))
    return out


def nearest_opposite_distance(cells):
    """For every cell, distance to the nearest cell of the other value.

    Brute-force scan, suitable for small grids only.
    """
    h, w = cells.shape
    rr, cc = np.mgrid[0:h, 0:w]
    true_pts = np.argwhere(cells)
    false_pts = np.argwhere(~cells)
    out = np.full((h, w), np.inf)
    for r in range(h):
        for c in range(w):
            targets = false_pts if cells[r, c] else true_pts
            if len(targets):
                d2 = (targets[:, 0] - r) ** 2 + (targets[:, 1] - c) ** 2
                out[r, c] = math.sqrt(float(d2.min()))
    return out


def dilate_by_disk(cells, radius):
    """Cells within center-to-center distance ``radius`` of a true cell."""
    h, w = cells.shape
    out = np.zeros_like(cells)
    true_pts = np.argwhere(cells)
    if not len(true_pts):
        return out
    for r in range(h):
        for c in range(w):
            d2 = (true_pts[:, 0] - r) ** 2 + (true_pts[:, 1] - c) ** 2
            if float(d2.min()) <= radius * radius + 1e-9:
                out[r, c] = True
    return out


def random_filtered_entries(rng, max_vertices=10):
    """Random raw simplex/value list; close_under_faces makes it a complex."""
    n = rng.randrange(1, max_vertices + 1)
    entries = [((v,), float(rng.randrange(0, 4))) for v in range(n)]
    for i, j in combinations(range(n), 2):
        if rng.random() < 0.35:
            entries.append(((i, j), float(rng.randrange(0, 6))))
    for i, j, k in combinations(range(n), 3):
        if rng.random() < 0.12:
            entries.append(((i, j, k), float(rng.randrange(0, 8))))
    return entries
