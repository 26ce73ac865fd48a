"""Exception types shared across the package."""


class FormatError(ValueError):
    """Malformed edge-list or partition input."""


class IsolatedVertexError(ValueError):
    """A vertex ended up with zero total weighted degree."""


class DisconnectedError(ValueError):
    """Operation requires a connected graph."""


class SizeLimitError(ValueError):
    """Exhaustive enumeration refused because the instance is too large."""


class IllegalStateError(RuntimeError):
    """Engine operation invoked in a state that does not allow it."""
