"""Exception types shared across the package."""

from __future__ import annotations


class CoursenetError(Exception):
    """Base class for all errors raised by this package."""


class InputFormatError(CoursenetError):
    """An input file does not match its documented schema (bad header, etc.)."""


class DatasetInconsistencyError(CoursenetError):
    """A course key was referenced that the accompanying summaries do not know."""


class ConvergenceError(CoursenetError):
    """An iterative solver exhausted its iteration budget."""

    def __init__(self, message: str, iterations: int):
        super().__init__(message)
        self.iterations = iterations


class ConfigError(CoursenetError):
    """A configuration file (category map, generator config) is invalid."""
