"""Pure simplicial complexes given by their facet lists.

A complex is immutable once built: every operation here and in the sibling
modules is a pure read.  Vertices are dense integer ids internally; the
original string tokens are kept for display and text round trips.
"""

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import (
    DuplicateFacetError,
    DuplicateVertexError,
    EmptyInputError,
    InputError,
    NotPureError,
    ZeroDimensionError,
)

_NUMERIC = re.compile(r"[0-9]+\Z")


def token_sort_key(token: str) -> tuple:
    """Numeric tokens first, ordered by value; everything else lexicographic."""
    if _NUMERIC.match(token):
        return (0, int(token), token)
    return (1, 0, token)


@dataclass(frozen=True)
class StackingOrder:
    """Certificate of stackedness: a facet ordering plus the vertex each
    facet introduces.  ``free_vertices[p-1]`` belongs to ``order[p]``."""

    order: tuple[int, ...]
    free_vertices: tuple[int, ...]


class SimplicialComplex:
    """A pure complex: facets of equal size d+1 over dense vertex ids."""

    __slots__ = ("labels", "facets", "facet_tuples", "dim", "_token_ids",
                 "_facet_index", "_hash", "_cache")

    def __init__(self, labels: tuple[str, ...],
                 facets: tuple[frozenset[int], ...], dim: int):
        # Internal constructor; use build_complex() for validated input.
        self.labels = labels
        self.facets = facets
        self.facet_tuples = tuple(tuple(sorted(f)) for f in facets)
        self.dim = dim
        self._token_ids = {tok: i for i, tok in enumerate(labels)}
        self._facet_index = {f: i for i, f in enumerate(facets)}
        self._hash = hash((labels, facets))
        self._cache: dict = {}

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    def has_token(self, token: str) -> bool:
        return token in self._token_ids

    def id_of(self, token: str) -> int:
        try:
            return self._token_ids[token]
        except KeyError:
            raise InputError(f"unknown vertex token {token!r}") from None

    def token_of(self, vid: int) -> str:
        return self.labels[vid]

    def facet_tokens(self, i: int) -> tuple[str, ...]:
        return tuple(self.labels[v] for v in self.facet_tuples[i])

    def facet_index(self, vertices: frozenset[int]) -> int:
        try:
            return self._facet_index[vertices]
        except KeyError:
            raise InputError(f"no facet with vertex ids {sorted(vertices)}") from None

    def facet_from_tokens(self, tokens: Iterable[str]) -> int:
        return self.facet_index(frozenset(self.id_of(t) for t in tokens))

    @property
    def facet_masks(self) -> tuple[int, ...]:
        """Vertex bitmask per facet, for fast disjointness tests."""
        masks = self._cache.get("facet_masks")
        if masks is None:
            masks = tuple(sum(1 << v for v in f) for f in self.facets)
            self._cache["facet_masks"] = masks
        return masks

    @property
    def codim1_faces(self) -> dict[frozenset[int], tuple[int, ...]]:
        """Every codimension-one face mapped to the facets containing it."""
        index = self._cache.get("codim1_faces")
        if index is None:
            index = {}
            for i, facet in enumerate(self.facet_tuples):
                for face in combinations(facet, self.dim):
                    index.setdefault(frozenset(face), []).append(i)
            index = {face: tuple(fs) for face, fs in index.items()}
            self._cache["codim1_faces"] = index
        return index

    @property
    def vertex_facets(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex id, the facets containing it."""
        table = self._cache.get("vertex_facets")
        if table is None:
            lists: list[list[int]] = [[] for _ in self.labels]
            for i, facet in enumerate(self.facet_tuples):
                for v in facet:
                    lists[v].append(i)
            table = tuple(tuple(fs) for fs in lists)
            self._cache["vertex_facets"] = table
        return table

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.labels == other.labels and self.facets == other.facets

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return (f"SimplicialComplex(dim={self.dim}, facets={self.n_facets}, "
                f"vertices={self.n_vertices})")


def build_complex(facet_list: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Validate a list of vertex-token sets and build the canonical complex.

    Vertex tokens get dense ids in canonical token order; facets are stored
    sorted, so equal inputs in any order produce identical complexes.
    """
    raw: list[tuple[str, ...]] = []
    for facet in facet_list:
        tokens = tuple(facet)
        for tok in tokens:
            if not isinstance(tok, str) or not tok or tok.split() != [tok]:
                raise InputError(f"invalid vertex token {tok!r}")
        if len(set(tokens)) != len(tokens):
            raise DuplicateVertexError(f"repeated vertex in facet {tokens}")
        raw.append(tokens)
    if not raw:
        raise EmptyInputError("no facets given")

    size = len(raw[0])
    for tokens in raw:
        if len(tokens) != size:
            raise NotPureError(
                f"facet {tokens} has {len(tokens)} vertices, expected {size}")
    if size < 2:
        raise ZeroDimensionError("facets must have at least two vertices")

    seen: set[frozenset[str]] = set()
    for tokens in raw:
        key = frozenset(tokens)
        if key in seen:
            raise DuplicateFacetError(f"facet {sorted(tokens)} appears twice")
        seen.add(key)

    labels = tuple(sorted({tok for tokens in raw for tok in tokens},
                          key=token_sort_key))
    ids = {tok: i for i, tok in enumerate(labels)}
    facet_sets = sorted((tuple(sorted(ids[t] for t in tokens)) for tokens in raw))
    facets = tuple(frozenset(f) for f in facet_sets)
    return SimplicialComplex(labels, facets, size - 1)


def restrict(X: SimplicialComplex, region: Iterable[int]) -> tuple[int, ...]:
    """Facets of X entirely inside the given vertex-id set, in canonical order."""
    keep = frozenset(region)
    return tuple(i for i, f in enumerate(X.facets) if f <= keep)


def dual_adjacency(X: SimplicialComplex) -> tuple[tuple[int, ...], ...]:
    """Undirected facet graph: an edge where two facets share a codim-1 face."""
    adj = X._cache.get("dual_adjacency")
    if adj is not None:
        return adj
    neighbours: list[set[int]] = [set() for _ in X.facets]
    for members in X.codim1_faces.values():
        for a, b in combinations(members, 2):
            neighbours[a].add(b)
            neighbours[b].add(a)
    adj = tuple(tuple(sorted(ns)) for ns in neighbours)
    X._cache["dual_adjacency"] = adj
    return adj


def subcomplex(X: SimplicialComplex, facet_indices: Iterable[int]) -> SimplicialComplex:
    """The complex generated by a subset of X's facets (tokens preserved)."""
    return build_complex([X.facet_tokens(i) for i in sorted(set(facet_indices))])


def find_stacking_order(X: SimplicialComplex) -> StackingOrder | None:
    """Search for a stacking order, or return None when none exists.

    Works by peeling: a facet can come last iff it has exactly one vertex on
    no other remaining facet and its other vertices form a face of another
    remaining facet.  Backtracks over all peelable facets (greedy choice is
    not known to be safe), memoising dead facet sets.
    """
    if "stacking_order" in X._cache:
        return X._cache["stacking_order"]
    result = _search_stacking_order(X)
    X._cache["stacking_order"] = result
    return result


def _search_stacking_order(X: SimplicialComplex) -> StackingOrder | None:
    if X.n_vertices != X.n_facets + X.dim:
        return None
    n = X.n_facets
    if n == 1:
        return StackingOrder(order=(0,), free_vertices=())

    vertex_facets = X.vertex_facets
    dead: set[frozenset[int]] = set()

    def peel(remaining: frozenset[int]) -> list[tuple[int, int]] | None:
        if len(remaining) == 1:
            return []
        if remaining in dead:
            return None
        for f in sorted(remaining):
            facet = X.facets[f]
            free = [v for v in facet
                    if all(g == f or g not in remaining for g in vertex_facets[v])]
            if len(free) != 1:
                continue
            v = free[0]
            base = facet - {v}
            if not any(g != f and base <= X.facets[g] for g in remaining):
                continue
            rest = peel(remaining - {f})
            if rest is not None:
                return rest + [(f, v)]
        dead.add(remaining)
        return None

    seq = peel(frozenset(range(n)))
    if seq is None:
        return None
    order = tuple(i for i in range(n) if i not in {f for f, _ in seq}) \
        + tuple(f for f, _ in seq)
    free = tuple(v for _, v in seq)
    return StackingOrder(order=order, free_vertices=free)


def replay_stacking_order(X: SimplicialComplex, cert: StackingOrder) -> bool:
    """Check a stacking certificate step by step against its definition."""
    n = X.n_facets
    if sorted(cert.order) != list(range(n)) or len(cert.free_vertices) != n - 1:
        return False
    seen = set(X.facets[cert.order[0]])
    for p in range(1, n):
        facet = X.facets[cert.order[p]]
        v = cert.free_vertices[p - 1]
        if v not in facet or v in seen:
            return False
        base = facet - {v}
        if not base <= seen:
            return False
        if not any(base <= X.facets[cert.order[q]] for q in range(p)):
            return False
        seen |= facet
    return len(seen) == X.n_vertices


def is_stacked(X: SimplicialComplex) -> bool:
    """True iff the vertex count matches n + d and a stacking order exists."""
    return (X.n_vertices == X.n_facets + X.dim
            and find_stacking_order(X) is not None)
