"""Gallery walks, unique facet/face paths, and distances.

On a stacked complex every pair of facets has a unique path (a walk whose
consecutive intersections are pairwise distinct), so distances here are
well defined.  Callers are expected to pass stacked complexes to the path
and distance operations; walk reduction itself works on any pure complex.
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexes import SimplicialComplex, dual_adjacency
from .errors import (
    InputError,
    NotAFaceError,
    NotCodimOneFaceError,
    NotSeparatedError,
    PathTooShortError,
)


@dataclass(frozen=True)
class FacetPath:
    """A walk with pairwise distinct consecutive intersections."""

    facets: tuple[int, ...]
    intersections: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.facets)


@dataclass(frozen=True)
class FacePath:
    """A facet path whose first facet contains h and last contains k, with
    neither face swallowed by the adjacent intersection."""

    h: frozenset[int]
    k: frozenset[int]
    path: FacetPath

    @property
    def facets(self) -> tuple[int, ...]:
        return self.path.facets

    def __len__(self) -> int:
        return len(self.path.facets)


def _check_walk(X: SimplicialComplex, walk: Sequence[int]) -> list[frozenset[int]]:
    if not walk:
        raise InputError("empty walk")
    inters = []
    for a, b in zip(walk, walk[1:]):
        g = X.facets[a] & X.facets[b]
        if len(g) != X.dim:
            raise InputError(
                f"facets {X.facet_tokens(a)} and {X.facet_tokens(b)} do not "
                f"share a codimension-one face")
        inters.append(g)
    return inters


def _make_path(X: SimplicialComplex, facets: tuple[int, ...]) -> FacetPath:
    inters = _check_walk(X, facets)
    if len(set(inters)) != len(inters):
        raise InputError("repeated intersection: walk is not a path")
    if len(set(facets)) != len(facets):
        raise InputError("repeated facet in path (is the complex stacked?)")
    return FacetPath(facets=facets, intersections=tuple(inters))


def reduce_walk(X: SimplicialComplex, walk: Sequence[int]) -> FacetPath:
    """Shorten a walk to a path with the same first and last facet.

    Collisions between consecutive-intersection values are resolved left to
    right: the first intersection seen twice triggers a cut.  On a stacked
    complex the result does not depend on this order.
    """
    facets = list(walk)
    _check_walk(X, facets)
    while True:
        inters = [X.facets[a] & X.facets[b] for a, b in zip(facets, facets[1:])]
        first_at: dict[frozenset[int], int] = {}
        hit = None
        for j, g in enumerate(inters):
            if g in first_at:
                hit = (first_at[g], j)
                break
            first_at[g] = j
        if hit is None:
            break
        i, j = hit
        if facets[i] != facets[j + 1]:
            facets = facets[:i + 1] + facets[j + 1:]
        else:
            facets = facets[:i] + facets[j + 1:]
    return _make_path(X, tuple(facets))


def _bfs_walk(X: SimplicialComplex, f: int, g: int) -> list[int]:
    if f == g:
        return [f]
    adj = dual_adjacency(X)
    parent = {f: f}
    queue = deque([f])
    while queue:
        cur = queue.popleft()
        for nxt in adj[cur]:
            if nxt not in parent:
                parent[nxt] = cur
                if nxt == g:
                    queue.clear()
                    break
                queue.append(nxt)
    if g not in parent:
        raise InputError("facets are not gallery-connected")
    walk = [g]
    while walk[-1] != f:
        walk.append(parent[walk[-1]])
    walk.reverse()
    return walk


def facet_path(X: SimplicialComplex, f: int, g: int) -> FacetPath:
    """The unique path between two facets of a stacked complex."""
    table = X._cache.setdefault("facet_paths", {})
    path = table.get((f, g))
    if path is None:
        path = reduce_walk(X, _bfs_walk(X, f, g))
        table[(f, g)] = path
        table[(g, f)] = FacetPath(
            facets=path.facets[::-1], intersections=path.intersections[::-1])
    return path


def end_vertices(X: SimplicialComplex, path: FacetPath) -> tuple[int, int]:
    """The single vertices f_1 \\ f_2 and f_p \\ f_{p-1} of a path, p >= 2."""
    if len(path) < 2:
        raise PathTooShortError("end vertices need a path of length >= 2")
    first, second = X.facets[path.facets[0]], X.facets[path.facets[1]]
    last, before = X.facets[path.facets[-1]], X.facets[path.facets[-2]]
    (left,) = first - second
    (right,) = last - before
    return left, right


def face_path(X: SimplicialComplex, h: Iterable[int], k: Iterable[int]) -> FacePath:
    """The unique path between faces h and k.

    Defined when the pair is separated: h != k and no two facets both
    contain h and k (otherwise there is no single witness path and
    NotSeparatedError is raised).
    """
    h = frozenset(h)
    k = frozenset(k)
    if not h or not k:
        raise NotAFaceError("faces must be non-empty vertex sets")
    containing_h = [i for i, f in enumerate(X.facets) if h <= f]
    if not containing_h:
        raise NotAFaceError(f"{sorted(h)} is not a face")
    containing_k = [i for i, f in enumerate(X.facets) if k <= f]
    if not containing_k:
        raise NotAFaceError(f"{sorted(k)} is not a face")
    if h == k:
        raise NotSeparatedError("equal faces have no path between them")
    both = [i for i in containing_h if k <= X.facets[i]]
    if len(both) >= 2:
        raise NotSeparatedError(
            "face union lies in two facets: no unique path")
    if len(both) == 1:
        return FacePath(h=h, k=k, path=_make_path(X, (both[0],)))

    full = facet_path(X, containing_h[0], containing_k[0])
    i = max(idx for idx, fi in enumerate(full.facets) if h <= X.facets[fi])
    j = min(idx for idx in range(i, len(full.facets))
            if k <= X.facets[full.facets[idx]])
    trimmed = _make_path(X, full.facets[i:j + 1])
    # neither face may sit inside any intersection, ends included
    assert all(not h <= g and not k <= g for g in trimmed.intersections)
    return FacePath(h=h, k=k, path=trimmed)


def vertex_distance(X: SimplicialComplex, v: int, w: int) -> int:
    """0 for equal vertices, 1 for facet mates, otherwise the facet count
    of the unique face path between them."""
    if v == w:
        return 0
    cache = X._cache.setdefault("vertex_dist", {})
    d = cache.get((v, w))
    if d is None:
        if set(X.vertex_facets[v]) & set(X.vertex_facets[w]):
            d = 1
        else:
            d = len(face_path(X, (v,), (w,)))
        cache[(v, w)] = d
        cache[(w, v)] = d
    return d


def facet_distance(X: SimplicialComplex, f: int, g: int) -> int:
    """Length of the unique facet path minus one."""
    return len(facet_path(X, f, g)) - 1


def vertex_distance_matrix(X: SimplicialComplex) -> tuple[tuple[int, ...], ...]:
    matrix = X._cache.get("vertex_dist_matrix")
    if matrix is None:
        n = X.n_vertices
        matrix = tuple(tuple(vertex_distance(X, v, w) for w in range(n))
                       for v in range(n))
        X._cache["vertex_dist_matrix"] = matrix
    return matrix


def facet_distance_matrix(X: SimplicialComplex) -> tuple[tuple[int, ...], ...]:
    matrix = X._cache.get("facet_dist_matrix")
    if matrix is None:
        n = X.n_facets
        matrix = tuple(tuple(facet_distance(X, f, g) for g in range(n))
                       for f in range(n))
        X._cache["facet_dist_matrix"] = matrix
    return matrix


@dataclass(frozen=True)
class DistanceNeighborhood:
    """Facets within distance m of a codim-1 face g, their vertices, and
    for each vertex new at level m its unique containing facet."""

    m: int
    facets: tuple[int, ...]
    vertices: frozenset[int]
    entry_facets: dict[int, int]


def wall_distance(X: SimplicialComplex, f: int, g: frozenset[int]) -> int:
    """Facet count of the unique face path from facet f to codim-1 face g.

    Equals 1 exactly when f contains g.
    """
    cache = X._cache.setdefault("wall_dist", {})
    d = cache.get((f, g))
    if d is None:
        d = len(face_path(X, X.facets[f], g))
        cache[(f, g)] = d
    return d


def distance_neighborhood(X: SimplicialComplex, g: Iterable[int],
                          m: int) -> DistanceNeighborhood:
    """The neighborhood of facets whose distance to g is at most m.

    At m = 0 the facet set is empty and the vertex set is g itself.
    """
    g = frozenset(g)
    if g not in X.codim1_faces:
        raise NotCodimOneFaceError(
            f"{sorted(g)} is not a codimension-one face")
    if m < 0:
        raise InputError("m must be >= 0")
    if m == 0:
        return DistanceNeighborhood(m=0, facets=(), vertices=g, entry_facets={})

    dist = [wall_distance(X, f, g) for f in range(X.n_facets)]
    facets_m = tuple(f for f in range(X.n_facets) if dist[f] <= m)
    vertices_m = frozenset(v for f in facets_m for v in X.facets[f])
    if m == 1:
        prev_vertices = g
    else:
        prev_vertices = frozenset(
            v for f in range(X.n_facets) if dist[f] <= m - 1
            for v in X.facets[f])
    entry: dict[int, int] = {}
    for v in sorted(vertices_m - prev_vertices):
        hosts = [f for f in facets_m if v in X.facets[f]]
        if len(hosts) != 1:
            raise InputError(
                f"vertex {X.token_of(v)} lies on {len(hosts)} facets at "
                f"level {m} (is the complex stacked?)")
        entry[v] = hosts[0]
    return DistanceNeighborhood(m=m, facets=facets_m, vertices=vertices_m,
                                entry_facets=entry)
