"""Exception types shared across the package."""


class GrasscutError(Exception):
    """Base class for all library-specific errors."""


class RankDeficient(GrasscutError):
    """A frame matrix has numerical rank below the requested dimension."""


class NotInChart(GrasscutError):
    """A plane has no representative in the requested affine chart."""


class OutsideOverlap(GrasscutError):
    """A chart transition was requested outside the overlap of its domains."""


class Malformed(GrasscutError):
    """Structurally invalid input (bad symbol, bad coordinate vector, ...)."""


class WrongShape(GrasscutError):
    """An operation specific to one Grassmannian was called on another."""


class AtCutLocus(GrasscutError):
    """A geodesic logarithm was requested at or beyond the cut locus."""


class ConfigError(GrasscutError):
    """Invalid harness configuration."""
