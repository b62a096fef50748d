"""Brute-force enumeration of constrained partitions and exact counts.

This is the verification side of the package: restricted-growth-string
enumeration of scattered partitions, exhaustive bijection checks, and the
Bell/Stirling identities they must reproduce.
"""

from dataclasses import dataclass
from typing import Callable, Iterator

from .complexes import SimplicialComplex
from .errors import InputError, OutOfRangeError
from .partitions import (
    GroundKind,
    Partition,
    facet_to_vertex,
    vertex_to_facet,
)
from .paths import facet_distance_matrix, vertex_distance_matrix

MAX_EXACT = 25


def _check_exact_range(n: int, k: int | None = None) -> None:
    if not 0 <= n <= MAX_EXACT:
        raise OutOfRangeError(f"n={n} outside supported range 0..{MAX_EXACT}")
    if k is not None and not 0 <= k <= n:
        raise OutOfRangeError(f"k={k} outside 0..{n}")


def bell(n: int) -> int:
    """Number of set partitions of an n-set, via the Bell triangle."""
    _check_exact_range(n)
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def stirling2(n: int, k: int) -> int:
    """Number of set partitions of an n-set into exactly k blocks."""
    _check_exact_range(n, k)
    row = [1]  # n = 0
    for _ in range(n):
        nxt = [0] * (len(row) + 1)
        for j in range(1, len(nxt)):
            nxt[j] = j * (row[j] if j < len(row) else 0) + row[j - 1]
        row = nxt
    return row[k]


@dataclass(frozen=True)
class EnumerationSpec:
    """Ground set plus part count, scatter, and the distance that defines it."""

    ground: tuple[int, ...]
    parts: int
    scatter: int
    distance: Callable[[int, int], int]
    kind: GroundKind


def vertex_spec(X: SimplicialComplex, parts: int, scatter: int) -> EnumerationSpec:
    matrix = vertex_distance_matrix(X)
    return EnumerationSpec(ground=tuple(range(X.n_vertices)), parts=parts,
                           scatter=scatter,
                           distance=lambda a, b: matrix[a][b], kind="vertices")


def facet_spec(X: SimplicialComplex, parts: int, scatter: int) -> EnumerationSpec:
    matrix = facet_distance_matrix(X)
    return EnumerationSpec(ground=tuple(range(X.n_facets)), parts=parts,
                           scatter=scatter,
                           distance=lambda a, b: matrix[a][b], kind="facets")


def prefix_spec(n: int, parts: int, scatter: int) -> EnumerationSpec:
    """Ground [1..n] with the integer gap as distance."""
    return EnumerationSpec(ground=tuple(range(1, n + 1)), parts=parts,
                           scatter=scatter,
                           distance=lambda a, b: abs(a - b), kind="integers")


def enumerate_partitions(spec: EnumerationSpec) -> Iterator[Partition]:
    """Every partition of the ground set into exactly ``parts`` blocks, each
    ``scatter``-scattered, once each, in canonical (restricted growth) order.

    Scatter is pruned incrementally: an element joins a block only if it
    keeps distance >= scatter to every member already there.
    """
    if spec.parts < 1 or spec.scatter < 1:
        raise InputError("parts and scatter must be >= 1")
    ground = tuple(sorted(spec.ground))
    n = len(ground)
    r = spec.parts
    if r > n:
        return
    s = spec.scatter
    dist = spec.distance
    kind = spec.kind
    blocks: list[list[int]] = []

    def assign(i: int) -> Iterator[Partition]:
        if n - i < r - len(blocks):
            return
        if i == n:
            if len(blocks) == r:
                yield Partition(kind=kind,
                                blocks=tuple(tuple(b) for b in blocks))
            return
        e = ground[i]
        for block in blocks:
            if s > 1 and any(dist(x, e) < s for x in block):
                continue
            block.append(e)
            yield from assign(i + 1)
            block.pop()
        if len(blocks) < r:
            blocks.append([e])
            yield from assign(i + 1)
            blocks.pop()

    yield from assign(0)


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of the exhaustive two-family check for one (X, r, s)."""

    parts: int
    scatter: int
    dim: int
    left_count: int
    right_count: int
    round_trip_failures: int
    image_mismatches: int
    counterexamples: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return (self.left_count == self.right_count
                and self.round_trip_failures == 0
                and self.image_mismatches == 0)

    @property
    def failures(self) -> int:
        return (self.round_trip_failures + self.image_mismatches
                + (0 if self.left_count == self.right_count else 1))

    def lines(self) -> list[str]:
        return [f"leftCount={self.left_count}",
                f"rightCount={self.right_count}",
                f"roundTripFailures={self.round_trip_failures}",
                f"imageMismatches={self.image_mismatches}"]


def verify_bijection(X: SimplicialComplex, r: int, s: int) -> BijectionReport:
    """Enumerate facet partitions (r parts, s-scattered) and vertex
    partitions (r+d parts, s+1-scattered); check that the two maps are
    mutually inverse bijections between the families."""
    if r < 1 or s < 1:
        raise InputError("r and s must be >= 1")
    left = list(enumerate_partitions(facet_spec(X, r, s)))
    right = list(enumerate_partitions(vertex_spec(X, r + X.dim, s + 1)))
    left_set = set(left)
    right_set = set(right)

    round_trips = 0
    mismatches = 0
    examples: list[str] = []

    def note(msg: str) -> None:
        if len(examples) < 3:
            examples.append(msg)

    forward: dict[Partition, Partition] = {}
    for Q in left:
        image = facet_to_vertex(X, Q)
        forward[Q] = image
        if image not in right_set:
            mismatches += 1
            note(f"image of facet partition {Q.blocks} not in vertex family")
        if vertex_to_facet(X, image) != Q:
            round_trips += 1
            note(f"facet partition {Q.blocks} does not round-trip")
    for P in right:
        preimage = vertex_to_facet(X, P)
        if preimage not in left_set:
            mismatches += 1
            note(f"image of vertex partition {P.blocks} not in facet family")
        elif forward[preimage] != P:
            round_trips += 1
            note(f"vertex partition {P.blocks} does not round-trip")

    return BijectionReport(parts=r, scatter=s, dim=X.dim,
                           left_count=len(left), right_count=len(right),
                           round_trip_failures=round_trips,
                           image_mismatches=mismatches,
                           counterexamples=tuple(examples))


@dataclass(frozen=True)
class CensusRow:
    parts: int            # facet parts r
    vertex_parts: int     # r + d
    count: int
    expected: int


@dataclass(frozen=True)
class CensusReport:
    n_facets: int
    dim: int
    rows: tuple[CensusRow, ...]
    total: int
    bell_value: int

    @property
    def failures(self) -> int:
        bad = sum(1 for row in self.rows if row.count != row.expected)
        return bad + (0 if self.total == self.bell_value else 1)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def lines(self) -> list[str]:
        out = [f"r={row.parts} vertexParts={row.vertex_parts} "
               f"count={row.count} stirling={row.expected}"
               for row in self.rows]
        out.append(f"total={self.total}")
        out.append(f"bell={self.bell_value}")
        out.append(f"failures={self.failures}")
        return out


def census(X: SimplicialComplex) -> CensusReport:
    """Count independent vertex partitions of a stacked complex by part
    number; the counts must reproduce Stirling numbers and sum to a Bell
    number."""
    n = X.n_facets
    rows = []
    total = 0
    for r in range(1, n + 1):
        count = sum(1 for _ in enumerate_partitions(vertex_spec(X, r + X.dim, 2)))
        rows.append(CensusRow(parts=r, vertex_parts=r + X.dim, count=count,
                              expected=stirling2(n, r)))
        total += count
    return CensusReport(n_facets=n, dim=X.dim, rows=tuple(rows), total=total,
                        bell_value=bell(n))
