"""Exception and warning types shared across the package."""


class DimredError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(DimredError):
    """An argument violates an operation's precondition."""


class IngestionError(DimredError):
    """A CSV file could not be parsed into a numeric table."""


class SchemaError(DimredError):
    """The CSV header is structurally invalid (e.g. duplicate columns)."""


class MetricUndefinedError(DimredError):
    """A metric was requested on input where it has no definition."""


class ConstantColumnWarning(UserWarning):
    """A feature column is constant and was mapped to all zeros."""
