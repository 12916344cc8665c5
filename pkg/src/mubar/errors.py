"""Exception types shared across the package.

Two failure families matter to callers: input that cannot be parsed at
all, and well-formed input that violates a documented precondition
(insufficient truncation depth, component out of range, and so on).
The CLI maps them to distinct exit codes.
"""


class ParseError(ValueError):
    """Raised when a word, bracket, braid or file cannot be parsed."""


class PreconditionError(ValueError):
    """Raised when an operation's documented precondition is violated."""
