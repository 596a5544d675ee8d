"""Exception hierarchy shared across the package."""


class PathCoverError(Exception):
    """Base class for all errors raised by this package."""


class SelfLoopError(PathCoverError):
    """An edge connects a vertex to itself."""

    def __init__(self, u: int):
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class DuplicateEdgeError(PathCoverError):
    """The same unordered vertex pair appears more than once."""

    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge {{{u}, {v}}}")
        self.u = u
        self.v = v


class BadEndpointError(PathCoverError):
    """A vertex index is outside [0, n)."""

    def __init__(self, u: int, n: int):
        super().__init__(f"vertex {u} out of range for graph with {n} vertices")
        self.u = u
        self.n = n


class NonPositiveWeightError(PathCoverError):
    """Edge weights must be strictly positive."""

    def __init__(self, weight: float):
        super().__init__(f"edge weight must be > 0, got {weight!r}")
        self.weight = weight


class BadSpecError(PathCoverError):
    """A generator spec violates its parameter constraints."""


class DegenerateProbabilityError(BadSpecError):
    """The evaluated edge probability left the open interval (0, 1]."""

    def __init__(self, p: float):
        super().__init__(f"edge probability p={p:g} is not in (0, 1]")
        self.p = p


class TooLargeError(PathCoverError):
    """The graph exceeds the size limit of an exact computation."""

    def __init__(self, n: int, limit: int):
        super().__init__(f"graph has {n} vertices, exact search limited to {limit}")
        self.n = n
        self.limit = limit


class InvalidCoverError(PathCoverError):
    """A path cover failed validation where a valid one is required."""


class ParseError(PathCoverError):
    """An edge-list or CSV line could not be parsed."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class EmptyFileError(PathCoverError):
    """An input file contains no data lines."""


class VerificationError(PathCoverError):
    """A benchmark-time invariant check failed."""
