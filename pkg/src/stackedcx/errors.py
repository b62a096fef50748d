"""Exception types shared across the package.

Everything user input can trigger derives from :class:`InputError`, so the
CLI can map any of them to exit code 1.
"""


class InputError(ValueError):
    """Base class for rejected input (bad complexes, partitions, text)."""


class EmptyInputError(InputError):
    """A complex was built from an empty facet list."""


class NotPureError(InputError):
    """Facets of differing sizes."""


class ZeroDimensionError(InputError):
    """Facets of size one; paths between facets need dimension >= 1."""


class DuplicateFacetError(InputError):
    """The same facet appears twice in the input."""


class DuplicateVertexError(InputError):
    """A vertex token appears twice within one facet."""


class PathTooShortError(InputError):
    """End vertices are only defined for paths with at least two facets."""


class NotAFaceError(InputError):
    """A vertex set that is not a face of the complex."""


class NotSeparatedError(InputError):
    """Face pair with no well-defined unique path (equal faces, or the
    union lies in two or more facets)."""


class NotCodimOneFaceError(InputError):
    """Expected a codimension-one face of the complex."""


class NotAPartitionError(InputError):
    """Blocks that are empty, overlap, or fail to cover the ground set."""


class NotIndependentError(InputError):
    """A vertex block with two vertices on a common facet."""


class OutOfRangeError(InputError):
    """Argument outside the supported exact-arithmetic range."""


class ParseError(InputError):
    """Text input rejected; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownTokenError(ParseError):
    """Partition token not present in the ground set."""


class OverlapError(ParseError):
    """Partition token assigned to more than one block."""


class MissingElementError(ParseError):
    """Partition does not cover the ground set."""
