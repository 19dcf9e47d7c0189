"""Exception types shared across the toolkit."""


class NetctrlError(Exception):
    """Base class for all toolkit errors."""


class IngestionError(NetctrlError):
    """Edge-list input that cannot be turned into a graph."""


class UsageError(NetctrlError):
    """An operation called with invalid arguments or in an invalid state."""


class ValidationError(NetctrlError):
    """A matching that fails structural validation or is not maximum."""


class UndefinedStatisticError(NetctrlError):
    """A statistic requested for a graph on which it is undefined."""
