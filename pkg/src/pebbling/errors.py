"""Exception types shared across the package."""


class PebblingError(Exception):
    """Base class for every package-specific error."""


class UsageError(PebblingError, ValueError):
    """Invalid argument or violated precondition; the caller's mistake."""


class FormatError(UsageError):
    """Malformed textual input. Messages name the offending byte or line."""


class PebbleOverflowError(UsageError):
    """A pebble count exceeded the per-vertex safety cap."""


class SearchLimitError(PebblingError, RuntimeError):
    """An ascending parameter search hit its safety cap without an answer."""
