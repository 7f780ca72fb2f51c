"""
Base exception for the coded slotted ALOHA toolkit.
"""


class CsaException(Exception):
    """An error was encountered in analyzing or simulating a coded slotted
    ALOHA scheme."""
    pass


class ParseError(CsaException):
    """A text document could not be parsed.

    Parameters
    ----------
    msg : str
        The error message
    lineno : Optional[int]
        The (1-based) line number of the offending line, if known.
    """

    lineno = None
    msg = None

    def __init__(self, msg, lineno=None):
        self.lineno = lineno
        self.msg = msg
        if lineno is not None:
            msg = "line {}: {}".format(lineno, msg)
        super().__init__(msg)
