"""Semantic exception hierarchy.

Every error raised by this package derives from :class:`GicapError`, so
callers (in particular the CLI) can map library failures to exit codes
without pattern-matching on messages.
"""


class GicapError(Exception):
    """Base class for all errors raised by gicap."""


class InvalidParameterError(GicapError):
    """A channel parameter, gain, power, or constraint is out of domain."""


class DomainError(GicapError):
    """An operation was evaluated outside its mathematical domain."""


class ClassMismatchError(GicapError):
    """A bound or region was requested for the wrong interference class."""


class InvalidSplitError(GicapError):
    """A private-power split is inconsistent with the channel parameters."""


class UnboundedRegionError(GicapError):
    """Vertex enumeration was attempted on an unbounded constraint set."""


class ContainmentError(GicapError):
    """An inner region is not contained in its outer bound.

    This always signals a formula bug somewhere upstream: an achievable
    region can never exceed a valid outer bound.
    """


class NotCoveredError(GicapError):
    """The requested parameter range is not covered by any tight result."""
