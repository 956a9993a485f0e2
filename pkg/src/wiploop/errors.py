"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class LoopError(Exception):
    """Base class for all wiploop errors."""


class NotSquare(LoopError):
    pass


class BadEntry(LoopError):
    def __init__(self, msg: str, cell: tuple[int, int]):
        super().__init__(msg)
        self.cell = cell


class NotLatin(LoopError):
    """Some row or column repeats a value; ``cell`` is the first repeat found."""

    def __init__(self, msg: str, cell: tuple[int, int]):
        super().__init__(msg)
        self.cell = cell


class NoIdentity(LoopError):
    """The table is a quasigroup without a two-sided identity."""

    def __init__(self, msg: str, table=None):
        super().__init__(msg)
        self.table = table


class NotBijective(LoopError):
    pass


class DegreeMismatch(LoopError):
    pass


class OrderTooLarge(LoopError):
    pass


class NotAnIsotopism(LoopError):
    pass


class HypothesisUnmet(LoopError):
    """A theorem harness was called on inputs outside its hypotheses."""


class TConditionFails(HypothesisUnmet):
    pass


class NotBothWip(HypothesisUnmet):
    pass


class NotCip(HypothesisUnmet):
    pass


class LoopFormatError(LoopError):
    """A text file could not be parsed; carries the file position of the defect."""

    def __init__(self, msg: str, path: str = "<string>", line: int = 0, column: int = 0):
        super().__init__(f"{path}:{line}:{column}: {msg}")
        self.path = path
        self.line = line
        self.column = column
        self.reason = msg
