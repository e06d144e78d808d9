"""Exception hierarchy shared by every module of the package."""


class HammingError(Exception):
    """Base class for all errors raised by :mod:`hammingcode`."""


class InvalidParameterError(HammingError, ValueError):
    """Code parameters (m, k) violate ``2**k - 1 >= m + k`` or the size limits."""


class PositionRangeError(HammingError, IndexError):
    """A 1-indexed bit position lies outside ``1..n``."""


class InvalidInputError(HammingError, ValueError):
    """A bit block has the wrong length or contains non-binary symbols."""


class ResourceLimitError(HammingError):
    """A brute-force enumeration would exceed its configured size guard."""


class FormatError(HammingError, ValueError):
    """A coded byte stream is malformed (magic, version, length or header fields)."""
