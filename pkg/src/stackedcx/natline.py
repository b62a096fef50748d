"""Prefix computations for the infinite line graph.

Edges and vertices of the line graph are both identified with initial
segments of the positive integers: edge i joins vertices i and i+1.  Under
this identification a partition of [1..n] (read as edges of L_n) refines to
a partition of [1..n+1] (read as vertices) with one more block and scatter
one higher, and the refinement is compatible with growing the prefix.
"""

from dataclasses import dataclass
from typing import Iterable

from .complexes import SimplicialComplex, build_complex
from .errors import InputError, NotAPartitionError
from .partitions import facet_to_vertex, make_partition


@dataclass(frozen=True)
class PrefixPartition:
    """A partition of the integer interval [1..n], canonically ordered."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    def scatter(self) -> int | None:
        """Smallest gap within a block; None when all blocks are singletons
        (every scatter bound holds vacuously then)."""
        gaps = [b - a for block in self.blocks
                for a, b in zip(block, block[1:])]
        return min(gaps) if gaps else None


def make_prefix_partition(n: int,
                          blocks: Iterable[Iterable[int]]) -> PrefixPartition:
    if n < 1:
        raise InputError("prefix length must be >= 1")
    cleaned = []
    seen: set[int] = set()
    for block in blocks:
        items = sorted(block)
        if not items:
            raise NotAPartitionError("empty block")
        for e in items:
            if not 1 <= e <= n:
                raise NotAPartitionError(f"{e} outside [1..{n}]")
            if e in seen:
                raise NotAPartitionError(f"{e} in two blocks")
            seen.add(e)
        cleaned.append(tuple(items))
    if len(seen) != n:
        missing = sorted(set(range(1, n + 1)) - seen)
        raise NotAPartitionError(f"not covered: {missing}")
    cleaned.sort(key=lambda b: b[0])
    return PrefixPartition(n=n, blocks=tuple(cleaned))


def line_graph(n: int) -> SimplicialComplex:
    """The tree with edges {i, i+1} for i = 1..n."""
    if n < 1:
        raise InputError("line graph needs at least one edge")
    return build_complex([(str(i), str(i + 1)) for i in range(1, n + 1)])


def refine_once(P: PrefixPartition) -> PrefixPartition:
    """One refinement step: read [1..n] as edges of L_n, map to the vertex
    partition, and read vertices back as [1..n+1]."""
    X = line_graph(P.n)
    edge_facet = {i: X.facet_from_tokens((str(i), str(i + 1)))
                  for i in range(1, P.n + 1)}
    Q = make_partition("facets",
                       [[edge_facet[e] for e in block] for block in P.blocks],
                       range(X.n_facets))
    V = facet_to_vertex(X, Q)
    blocks = [[int(X.token_of(v)) for v in block] for block in V.blocks]
    return make_prefix_partition(P.n + 1, blocks)


def refine_iter(P: PrefixPartition, steps: int) -> PrefixPartition:
    """Iterate :func:`refine_once`; blocks grow by one and scatter by one
    per step."""
    if steps < 0:
        raise InputError("steps must be >= 0")
    for _ in range(steps):
        P = refine_once(P)
    return P


def restrict_prefix(P: PrefixPartition, n: int) -> PrefixPartition:
    """Intersect every block with [1..n], dropping emptied blocks."""
    if not 1 <= n <= P.n:
        raise InputError(f"cannot restrict prefix of length {P.n} to {n}")
    blocks = [tuple(e for e in block if e <= n) for block in P.blocks]
    return make_prefix_partition(n, [b for b in blocks if b])


def check_colimit_compatibility(P: PrefixPartition) -> bool:
    """Refining then restricting must equal restricting then refining.

    P is read as an edge partition of the line graph one longer than the
    one it restricts to, so its length must be at least 2.
    """
    if P.n < 2:
        raise InputError("compatibility check needs a prefix of length >= 2")
    shorter = refine_once(restrict_prefix(P, P.n - 1))
    longer = restrict_prefix(refine_once(P), P.n)
    return shorter.blocks == longer.blocks
