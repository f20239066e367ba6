"""Exception types shared across the package."""


class HlagError(Exception):
    """Base class for package errors."""


class HgParseError(HlagError):
    """Malformed .hg or JSON graph input.

    Carries the 1-based line number when the source is line-oriented.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsupportedSizeError(HlagError):
    """Input exceeds a guarded size limit for an exact method."""


class NotFreeError(HlagError):
    """An operation required a freeness precondition that does not hold.

    ``witness`` is the violating substructure (e.g. a list of disjoint
    edges, or a core vertex set).
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)
