class DunwoodyError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DunwoodyError, ValueError):
    """An operation was called outside its domain (bad support, bad level, ...)."""


class LevelMismatch(DomainError):
    def __init__(self, msg: str = "level mismatch"):
        super().__init__(msg)


class EnumerationTooLarge(DunwoodyError):
    pass


class BudgetExceeded(DunwoodyError):
    def __init__(self, msg: str, projected: int | None = None):
        super().__init__(msg if projected is None else f"{msg} (projected {projected} vertices)")
        self.projected = projected


class ParseError(DunwoodyError, ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos
