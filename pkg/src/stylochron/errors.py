"""Exception hierarchy shared by every stylochron module."""


class StylochronError(Exception):
    """Base class; the CLI maps any subclass to exit status 2."""

    def __init__(self, message: str, *, doc_id: str | None = None, stage: str | None = None):
        super().__init__(message)
        self.doc_id = doc_id
        self.stage = stage

    def __str__(self) -> str:
        msg = super().__str__()
        where = [p for p in (self.stage, self.doc_id) if p]
        return f"[{'/'.join(where)}] {msg}" if where else msg


# corpus
class SchemaError(StylochronError, ValueError):
    pass


class DuplicateId(StylochronError, ValueError):
    pass


class MissingFile(StylochronError, FileNotFoundError):
    pass


class EncodingError(StylochronError, UnicodeError):
    pass


class MarkerOrderError(StylochronError, ValueError):
    pass


# textproc / features
class NotCodable(StylochronError, ValueError):
    """Word has no ASCII letter, so it has no Soundex code."""


class NotComputable(StylochronError, ValueError):
    pass


# stats / model
class ShapeError(StylochronError, ValueError):
    pass


class DegenerateInput(StylochronError, ValueError):
    """Zero variance (or zero standard error) where a ratio needs it."""


class InsufficientData(StylochronError, ValueError):
    pass


class IoError(StylochronError, OSError):
    pass
