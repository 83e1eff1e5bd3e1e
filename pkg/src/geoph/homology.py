"""Persistent homology over F2 for filtered complexes of dimension <= 2.

The boundary matrix is indexed by the canonical filtration order of the
complex (rows and columns alike).  Columns reduce left to right: while a
column shares its lowest row with an earlier reduced column, add that column
into it (symmetric difference over F2).  Surviving lowest rows pair births
with deaths; columns that reduce to zero create classes, and the chain of
same-dimension simplices accumulated while zeroing a column is a
representative cycle for the class it creates.

``betti_oracle`` is a deliberately separate brute-force computation
(Gaussian elimination on the raw boundary maps) used to cross-check the
reduction; it shares no code with it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Iterable, Mapping

from .complexes import Entry, FilteredComplex, Simplex, faces

LONG_PERSISTENCE_THRESHOLD = 0.75


@dataclass(frozen=True)
class BoundaryMatrix:
    """Full boundary matrix of a filtered complex, one column per simplex.

    ``columns[j]`` holds the row indices (filtration positions) of the
    codimension-1 faces of simplex j; vertex columns are empty.
    """

    columns: tuple[frozenset[int], ...]
    entries: tuple[Entry, ...]

    def __len__(self) -> int:
        return len(self.columns)

    def boundary_of_boundary_vanishes(self) -> bool:
        for col in self.columns:
            acc: set[int] = set()
            for r in col:
                acc ^= self.columns[r]
            if acc:
                return False
        return True


def build_boundary_matrix(fc: FilteredComplex) -> BoundaryMatrix:
    cols = []
    for s, _ in fc.entries:
        cols.append(frozenset(fc.position_of(f) for f in faces(s)))
    return BoundaryMatrix(columns=tuple(cols), entries=fc.entries)


@dataclass(frozen=True)
class ReducedMatrix:
    """Result of column reduction: reduced matrix, pairing, chain history."""

    matrix: BoundaryMatrix
    pairs: Mapping[int, int]  # birth column -> death column
    chains: tuple[frozenset[int], ...]  # column j of the accumulated additions

    @property
    def entries(self) -> tuple[Entry, ...]:
        return self.matrix.entries


def _bit_indices(x: int) -> set[int]:
    out = set()
    while x:
        low = x & -x
        out.add(low.bit_length() - 1)
        x ^= low
    return out


def reduce_matrix(bm: BoundaryMatrix) -> ReducedMatrix:
    """Standard left-to-right reduction, deterministic in the column order."""
    n = len(bm.columns)
    r = [sum(1 << row for row in col) for col in bm.columns]
    v = [1 << j for j in range(n)]
    owner_of_low: dict[int, int] = {}
    pairs: dict[int, int] = {}
    for j in range(n):
        while r[j]:
            low = r[j].bit_length() - 1
            k = owner_of_low.get(low)
            if k is None:
                owner_of_low[low] = j
                pairs[low] = j
                break
            r[j] ^= r[k]
            v[j] ^= v[k]
    reduced = BoundaryMatrix(
        columns=tuple(frozenset(_bit_indices(x)) for x in r),
        entries=bm.entries,
    )
    return ReducedMatrix(
        matrix=reduced,
        pairs=pairs,
        chains=tuple(frozenset(_bit_indices(x)) for x in v),
    )


@dataclass(frozen=True)
class PersistencePair:
    """One bar: a homology class born at ``birth``, dead at ``death``.

    ``death`` is None for classes that survive the whole filtration.  The
    generator is a representative cycle at the birth value: the birth vertex
    for dimension 0, a cycle of edges (or triangles) otherwise.
    """

    dimension: int
    birth: float
    death: float | None
    generator: tuple[Simplex, ...]
    birth_position: int
    long_persistence: bool = False

    @property
    def zero_length(self) -> bool:
        return self.death is not None and self.death == self.birth

    @property
    def infinite(self) -> bool:
        return self.death is None

    def persistence(self, horizon: float) -> float:
        death = horizon if self.death is None else self.death
        return death - self.birth


@dataclass(frozen=True)
class Barcode:
    """All persistence pairs of one filtration, in column order.

    ``horizon`` is the maximum filtration value present; it stands in for
    infinite deaths when persistence ratios are needed.
    """

    pairs: tuple[PersistencePair, ...]
    horizon: float

    def max_persistence(self, dimension: int) -> float:
        ps = [
            p.persistence(self.horizon)
            for p in self.pairs
            if p.dimension == dimension and not p.zero_length
        ]
        return max(ps, default=0.0)

    @property
    def max_persistence_per_dim(self) -> dict[int, float]:
        return {d: self.max_persistence(d) for d in (0, 1, 2)}

    def bars_alive_at(self, t: float) -> tuple[int, int, int]:
        alive = [0, 0, 0]
        for p in self.pairs:
            if p.birth <= t and (p.death is None or p.death > t):
                alive[p.dimension] += 1
        return alive[0], alive[1], alive[2]

    def rendered(self, dimension: int | None = None) -> list[PersistencePair]:
        """Pairs that appear in output artifacts: zero-length bars drop out."""
        return [
            p
            for p in self.pairs
            if not p.zero_length and (dimension is None or p.dimension == dimension)
        ]

    def to_records(self) -> list[dict]:
        records = []
        for p in self.rendered():
            records.append(
                {
                    "dimension": p.dimension,
                    "birth": p.birth,
                    "death": p.death,
                    "long_persistence": p.long_persistence,
                    "generator": [list(s) for s in p.generator],
                }
            )
        return records

    def to_json(self) -> str:
        return json.dumps(self.to_records(), indent=2, sort_keys=True) + "\n"


def persistence_pairs(reduced: ReducedMatrix, fc: FilteredComplex) -> Barcode:
    """Read bars off a reduced matrix.

    Zero-length pairs (birth == death) are kept and flagged; rendering and
    export skip them, oracle checks want them present.
    """
    entries = reduced.entries
    if entries != fc.entries:
        raise ValueError("reduced matrix does not belong to this complex")
    cols = reduced.matrix.columns
    pairs: list[PersistencePair] = []
    for j, (s, birth) in enumerate(entries):
        if cols[j]:
            continue  # j kills an earlier class; handled at its birth column
        death_col = reduced.pairs.get(j)
        death = None if death_col is None else entries[death_col][1]
        d = len(s) - 1
        if d == 0:
            generator: tuple[Simplex, ...] = (s,)
        else:
            generator = tuple(sorted(entries[k][0] for k in reduced.chains[j]))
        pairs.append(
            PersistencePair(
                dimension=d,
                birth=birth,
                death=death,
                generator=generator,
                birth_position=j,
            )
        )
    return Barcode(pairs=tuple(pairs), horizon=fc.max_value())


def extract_generator_cycle(
    reduced: ReducedMatrix, pair: PersistencePair
) -> tuple[Simplex, ...]:
    """Representative cycle for a dimension >= 1 class.

    For dimension 0 the generator is simply the birth vertex; asking for a
    cycle there is a usage error.
    """
    if pair.dimension == 0:
        raise ValueError("dimension-0 classes have a vertex generator, not a cycle")
    entries = reduced.entries
    if reduced.matrix.columns[pair.birth_position]:
        raise ValueError("pair does not point at a zeroed column")
    return tuple(sorted(entries[k][0] for k in reduced.chains[pair.birth_position]))


def barcode_of(fc: FilteredComplex) -> Barcode:
    """Convenience: boundary matrix, reduction, and pairing in one call."""
    return persistence_pairs(reduce_matrix(build_boundary_matrix(fc)), fc)


def classify_long_persistence(
    barcode: Barcode, threshold: float = LONG_PERSISTENCE_THRESHOLD
) -> Barcode:
    """Flag dimension-1 bars whose persistence ratio reaches ``threshold``.

    The ratio divides each bar's persistence by the largest dimension-1
    persistence, with infinite deaths standing at the horizon; bars that
    never die are always flagged.  Comparison is >=, so a ratio exactly at
    the threshold counts as long.
    """
    pmax = barcode.max_persistence(1)
    flagged = []
    for p in barcode.pairs:
        if p.dimension != 1 or p.zero_length:
            flagged.append(p)
            continue
        if p.infinite:
            flagged.append(replace(p, long_persistence=True))
            continue
        ratio = p.persistence(barcode.horizon) / pmax if pmax > 0 else 0.0
        flagged.append(replace(p, long_persistence=ratio >= threshold))
    return Barcode(pairs=tuple(flagged), horizon=barcode.horizon)


def _f2_rank(vectors: Iterable[int]) -> int:
    """Rank of a set of F2 vectors given as int bitmasks (Gaussian elimination)."""
    pivots: dict[int, int] = {}
    rank = 0
    for v in vectors:
        while v:
            lead = v.bit_length() - 1
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = v
                rank += 1
                break
            v ^= p
    return rank


def betti_oracle(simplices: Iterable[Simplex]) -> tuple[int, int, int]:
    """Betti numbers (b0, b1, b2) of a plain simplicial complex over F2.

    Brute force: rank the two boundary maps directly and use
    b_k = dim ker d_k - rank d_{k+1}.  Independent of the reduction code on
    purpose; tests lean on that.
    """
    by_dim: dict[int, list[Simplex]] = {0: [], 1: [], 2: []}
    seen = set()
    for s in simplices:
        s = tuple(s)
        if s in seen:
            continue
        seen.add(s)
        by_dim[len(s) - 1].append(s)
    for d in (1, 2):
        for s in by_dim[d]:
            for f in faces(s):
                if f not in seen:
                    raise ValueError(f"not a complex: {s} lacks face {f}")
    vertex_row = {s: i for i, s in enumerate(by_dim[0])}
    edge_row = {s: i for i, s in enumerate(by_dim[1])}
    d1 = [
        (1 << vertex_row[(a,)]) | (1 << vertex_row[(b,)]) for (a, b) in by_dim[1]
    ]
    d2 = [
        sum(1 << edge_row[f] for f in faces(t)) for t in by_dim[2]
    ]
    rank1 = _f2_rank(d1)
    rank2 = _f2_rank(d2)
    n0, n1, n2 = len(by_dim[0]), len(by_dim[1]), len(by_dim[2])
    return n0 - rank1, n1 - rank1 - rank2, n2 - rank2
