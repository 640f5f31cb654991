"""Exception types shared across the package."""


class GatherplotError(Exception):
    """Base class for all package errors."""


class SchemaError(GatherplotError, ValueError):
    """Tabular input rows disagree about their column labels."""


class EmptyInputError(GatherplotError, ValueError):
    """Tabular input contains no data rows."""


class ConfigError(GatherplotError, ValueError):
    """An axis or layout configuration cannot be satisfied."""


class NoGatherAxisError(GatherplotError, ValueError):
    """Neither axis uses a gather transform; the request belongs to the
    plain scatter/jitter layout path."""


class IdentityMismatchError(GatherplotError, ValueError):
    """Two layouts do not cover the same set of point ids."""
