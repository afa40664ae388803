"""Exception hierarchy shared by all modules; the CLI maps these to exit codes."""


class BGGError(Exception):
    """Base class for every error raised by bggkit."""


class InvalidInputError(BGGError, ValueError):
    """Malformed or out-of-range input (exit code 2)."""


class GuardrailError(BGGError):
    """A configured size limit would be exceeded (exit code 3)."""


class InvariantError(BGGError):
    """An internal identity failed; this is a bug (exit code 4)."""
