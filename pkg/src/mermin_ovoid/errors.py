"""Exception hierarchy shared across the package."""


class GeometryError(ValueError):
    """Base class for every error raised by this package."""


class DimensionError(GeometryError):
    """Operands have incompatible lengths or qubit counts."""


class CapacityError(GeometryError):
    """Requested object is too large to build explicitly."""


class PauliParseError(GeometryError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NoImageError(GeometryError):
    """The identity observable has no projective point."""


class PreconditionError(GeometryError):
    pass


class NotAGeneratorError(PreconditionError):
    pass


class NotALineError(PreconditionError):
    pass


class StructuralError(GeometryError):
    """Pentagram incidence is malformed (counts, duplicates, shared points)."""


class NotAnEdgeError(GeometryError):
    pass


class OffQuadricError(GeometryError):
    pass


class TheoremViolation(GeometryError):
    """A step of the pentagram/ovoid chain failed on input that passed validation."""


class DocumentError(GeometryError):
    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line
