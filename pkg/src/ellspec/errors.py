"""Exception types shared across the package."""


class EllspecError(Exception):
    """Base class for all ellspec-specific errors."""


class SurfaceMismatchError(EllspecError):
    """Two divisor classes from different surfaces were combined."""


class SpanError(EllspecError):
    """A class lies outside the span required by an operation."""


class UnsupportedProductError(EllspecError):
    """A cohomology product fell outside the implemented fragment."""


class PolarizationError(EllspecError):
    """The supplied polarization could not be certified ample."""


class SchemaError(EllspecError):
    """A certificate file is malformed."""


class TamperError(EllspecError):
    """Stored certificate data disagrees with recomputation."""
