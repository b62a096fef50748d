"""Text formats for complexes and partitions, plus DOT export.

Complex files: one facet per line, vertex tokens separated by spaces.
Partition files: one block per line; for facet partitions each token is a
facet written as its vertex tokens joined by commas.  Lines starting with
'#' are comments, blank lines are ignored, encoding is UTF-8.
"""

from .complexes import SimplicialComplex, build_complex, dual_adjacency
from .errors import (
    DuplicateFacetError,
    DuplicateVertexError,
    EmptyInputError,
    InputError,
    MissingElementError,
    NotPureError,
    OverlapError,
    UnknownTokenError,
)
from .natline import PrefixPartition, make_prefix_partition
from .partitions import Partition, make_partition

_PALETTE = ("#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
            "#f781bf", "#17becf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb")


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for ln, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((ln, stripped.split()))
    return out


def parse_complex(text: str) -> SimplicialComplex:
    """Parse the complex text format; errors carry the offending line."""
    entries = _content_lines(text)
    if not entries:
        raise EmptyInputError("no facets in input")
    first_ln, first = entries[0]
    seen: dict[frozenset[str], int] = {}
    for ln, tokens in entries:
        if len(set(tokens)) != len(tokens):
            raise DuplicateVertexError(f"line {ln}: repeated vertex in facet")
        if len(tokens) != len(first):
            raise NotPureError(
                f"line {ln}: facet has {len(tokens)} vertices, line "
                f"{first_ln} has {len(first)}")
        key = frozenset(tokens)
        if key in seen:
            raise DuplicateFacetError(
                f"line {ln}: facet already given on line {seen[key]}")
        seen[key] = ln
    return build_complex([tokens for _, tokens in entries])


def emit_complex(X: SimplicialComplex) -> str:
    """Canonical text for a complex; parse(emit(X)) == X."""
    return "".join(" ".join(X.facet_tokens(i)) + "\n"
                   for i in range(X.n_facets))


def facet_token(X: SimplicialComplex, i: int) -> str:
    return ",".join(X.facet_tokens(i))


def _parse_blocks(text: str, resolve, universe_size: int,
                  describe: str) -> list[list[int]]:
    blocks: list[list[int]] = []
    owner: dict[int, int] = {}
    for ln, tokens in _content_lines(text):
        block = []
        for tok in tokens:
            e = resolve(tok, ln)
            if e in owner:
                raise OverlapError(f"{tok!r} already in the block on line "
                                   f"{owner[e]}", line=ln)
            owner[e] = ln
            block.append(e)
        blocks.append(block)
    if len(owner) < universe_size:
        raise MissingElementError(
            f"{universe_size - len(owner)} {describe} not covered")
    return blocks


def parse_vertex_partition(text: str, X: SimplicialComplex) -> Partition:
    def resolve(tok: str, ln: int) -> int:
        if not X.has_token(tok):
            raise UnknownTokenError(f"unknown vertex {tok!r}", line=ln)
        return X.id_of(tok)

    blocks = _parse_blocks(text, resolve, X.n_vertices, "vertices")
    return make_partition("vertices", blocks, range(X.n_vertices))


def parse_facet_partition(text: str, X: SimplicialComplex) -> Partition:
    def resolve(tok: str, ln: int) -> int:
        try:
            return X.facet_from_tokens(tok.split(","))
        except InputError:
            raise UnknownTokenError(f"unknown facet {tok!r}", line=ln) from None

    blocks = _parse_blocks(text, resolve, X.n_facets, "facets")
    return make_partition("facets", blocks, range(X.n_facets))


def parse_prefix_partition(text: str, n: int) -> PrefixPartition:
    def resolve(tok: str, ln: int) -> int:
        if not tok.isdigit() or not 1 <= int(tok) <= n:
            raise UnknownTokenError(f"token {tok!r} outside [1..{n}]", line=ln)
        return int(tok)

    blocks = _parse_blocks(text, resolve, n, "integers")
    return make_prefix_partition(n, blocks)


def _block_tokens(X: SimplicialComplex | None, P) -> list[list[str]]:
    if isinstance(P, PrefixPartition):
        return [[str(e) for e in block] for block in P.blocks]
    if P.kind == "vertices":
        return [[X.token_of(v) for v in block] for block in P.blocks]
    if P.kind == "facets":
        return [[facet_token(X, f) for f in block] for block in P.blocks]
    return [[str(e) for e in block] for block in P.blocks]


def emit_partition(P, X: SimplicialComplex | None = None) -> str:
    """Partition file format: one block per line."""
    return "".join(" ".join(block) + "\n" for block in _block_tokens(X, P))


def format_partition_line(P, X: SimplicialComplex | None = None) -> str:
    """Single-line rendering, e.g. ``{1 3 5} {2 6} {4}``."""
    return " ".join("{" + " ".join(block) + "}" for block in _block_tokens(X, P))


def export_dot(X: SimplicialComplex, partition: Partition | None = None) -> str:
    """DOT text: the tree itself for dimension 1, the dual facet graph for
    higher dimensions.  Partition blocks become color classes."""
    node_color: dict[str, str] = {}
    edge_color: dict[int, str] = {}
    if partition is not None:
        colors = [_PALETTE[i % len(_PALETTE)]
                  for i in range(partition.n_blocks)]
        if partition.kind == "vertices":
            if X.dim != 1:
                raise InputError(
                    "vertex partitions only color dimension-1 complexes; "
                    "the dual graph drawn for higher dimensions has facet nodes")
            for i, block in enumerate(partition.blocks):
                for v in block:
                    node_color[X.token_of(v)] = colors[i]
        else:
            for i, block in enumerate(partition.blocks):
                for f in block:
                    if X.dim == 1:
                        edge_color[f] = colors[i]
                    else:
                        node_color[facet_token(X, f)] = colors[i]

    lines = ["graph complex {"]
    if X.dim == 1:
        for v in range(X.n_vertices):
            tok = X.token_of(v)
            if tok in node_color:
                lines.append(f'  "{tok}" [style=filled, fillcolor="{node_color[tok]}"];')
            else:
                lines.append(f'  "{tok}";')
        for f in range(X.n_facets):
            a, b = X.facet_tokens(f)
            attr = f' [color="{edge_color[f]}", penwidth=2]' if f in edge_color else ""
            lines.append(f'  "{a}" -- "{b}"{attr};')
    else:
        for f in range(X.n_facets):
            tok = facet_token(X, f)
            if tok in node_color:
                lines.append(f'  "{tok}" [style=filled, fillcolor="{node_color[tok]}"];')
            else:
                lines.append(f'  "{tok}";')
        adj = dual_adjacency(X)
        for f, neighbours in enumerate(adj):
            for g in neighbours:
                if f < g:
                    lines.append(f'  "{facet_token(X, f)}" -- "{facet_token(X, g)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
