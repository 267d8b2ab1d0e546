"""
stem/exceptions.py

Exception hierarchy for flipcount.
Input problems, size caps and broken identities each get their own class so the
CLI can map them onto exit codes.
"""


class FlipcountError(Exception):
    """Base class for every error raised by flipcount."""


# --- Input validation ---

class ValidationError(FlipcountError):
    """Raised when a raw point list cannot become a PointSet."""


class DuplicatePoint(ValidationError):
    """Raised when two input points coincide."""

    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"points {i} and {j} are equal")


class CollinearTriple(ValidationError):
    """Raised when three input points lie on one line."""

    def __init__(self, i: int, j: int, k: int):
        self.i, self.j, self.k = i, j, k
        super().__init__(f"points {i}, {j}, {k} are collinear")


class CoordinateOverflow(ValidationError):
    """Raised when a coordinate does not fit in 63 signed bits."""


class PointFileError(ValidationError):
    """Raised when a point file line cannot be parsed."""


class SizeError(ValidationError):
    """Raised when a generator is asked for an unsupported size."""


# --- Triangulation ---

class EdgeNotInTriangulation(FlipcountError):
    """Raised when an edge query names an edge the triangulation lacks."""

    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"edge {edge} is not in the triangulation")


class NotFlippable(FlipcountError):
    """Raised when flipping an edge whose quadrilateral is not convex."""

    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"edge {edge} is not flippable")


# --- Caps ---

class InstanceTooLarge(FlipcountError):
    """Raised when an exact computation is asked for beyond its configured cap."""

    def __init__(self, kind: str, n_points: int, cap: int):
        self.kind = kind
        self.n_points = n_points
        self.cap = cap
        super().__init__(
            f"{kind} computation on N={n_points} exceeds cap {cap}; "
            f"raise it with --caps {kind}={n_points} or FLIPCOUNT_CAPS if you can wait"
        )


# --- Violations ---

class IdentityViolation(FlipcountError):
    """Raised when an exact identity fails. Always an implementation bug."""

    def __init__(self, identity: str, detail: str = ""):
        self.identity = identity
        self.detail = detail
        super().__init__(f"identity '{identity}' violated{': ' + detail if detail else ''}")


class BoundViolation(FlipcountError):
    """Raised when a decomposition breaks a counting bound."""

    def __init__(self, identity: str, detail: str = ""):
        self.identity = identity
        self.detail = detail
        super().__init__(f"bound '{identity}' violated{': ' + detail if detail else ''}")


# --- Numerics ---

class DomainError(FlipcountError):
    """Raised when a bound evaluator gets an argument outside its domain."""


class ConvergenceFailure(FlipcountError):
    """Raised when a numeric optimizer does not converge."""


class GeneralPositionFailure(FlipcountError):
    """Raised when a generator cannot place points in general position."""


class ConfigError(FlipcountError):
    """Raised when a cap override string is malformed."""
