"""Shared exception base for the package."""


class DcbError(Exception):
    """Base class for every error this package raises on purpose.

    The CLI catches this (plus the built-in file errors) to print a short
    message instead of a traceback.
    """
