"""Exception hierarchy.

Every error raised on bad *input* derives from :class:`CvMatchError`, which
the command line maps to exit status 2.
"""


class CvMatchError(Exception):
    """Base class for user/input errors."""


class MalformedHtml(CvMatchError):
    pass


class MissingName(CvMatchError):
    pass


class SchemaError(CvMatchError):
    """A JSONL record failed validation. ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}"
        if line is not None:
            where += f":{line}" if where else f"line {line}"
        super().__init__(f"{where}: {message}" if where else message)


class DuplicateId(CvMatchError):
    def __init__(self, record_id: int, line: int | None = None, path=None):
        self.id = record_id
        self.line = line
        self.path = path
        loc = f" ({path}:{line})" if line is not None else ""
        super().__init__(f"duplicate id {record_id}{loc}")


class DomainError(CvMatchError, ValueError):
    pass


class EmptyQuery(CvMatchError):
    pass


class EmptyCorpus(CvMatchError):
    pass


class AlreadyNormalized(CvMatchError):
    pass


class UnknownJob(CvMatchError, KeyError):
    def __str__(self):
        return f"unknown job id {self.args[0]}"


class UnknownCv(CvMatchError, KeyError):
    def __str__(self):
        return f"unknown cv id {self.args[0]}"


class FormatError(CvMatchError):
    """Malformed matrix CSV. ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
