"""Exception types shared across the package.

The CLI maps these onto exit codes: ConfigError -> 2, PrecisionError -> 3.
"""


class MinorLabError(Exception):
    """Base class for all package errors."""


class ConfigError(MinorLabError):
    """Invalid configuration, parameters or input data."""


class PrecisionError(MinorLabError):
    """A numerical routine could not reach its accuracy contract."""
