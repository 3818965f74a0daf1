"""Exception types shared across the package."""


class StaformsError(Exception):
    """Base class for all package errors."""


class ExprSyntaxError(StaformsError):
    """Malformed expression text.  ``offset`` is the byte offset of the failure."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class UnknownIdentifierError(StaformsError):
    """Identifier not found among chart coordinates, parameters or builtins."""

    def __init__(self, name: str, offset: int):
        super().__init__(f"unknown identifier '{name}' (offset {offset})")
        self.name = name
        self.offset = offset


class DomainError(StaformsError):
    """Evaluation left the real domain (sqrt of negative, division by zero, ...)."""

    def __init__(self, message: str, fragment: str = ""):
        text = message if not fragment else f"{message} in '{fragment}'"
        super().__init__(text)
        self.fragment = fragment


class JetOrderError(StaformsError):
    """A derivative operator was applied to a field with no jet orders left."""


class SingularTetradError(StaformsError):
    """Tetrad matrix is singular or too ill-conditioned at an evaluation point."""


class MissingFieldError(StaformsError):
    """An operation needs a matter field the scenario does not define."""


class ScenarioError(StaformsError):
    """Invalid scenario file.  ``path`` locates the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.reason = message


class RegionError(StaformsError):
    """Integration region is invalid (singular or out of the tetrad domain)."""


class QuadratureError(StaformsError):
    """Adaptive quadrature failed to converge within the panel budget."""
