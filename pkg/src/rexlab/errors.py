"""
Exceptions raised by the rexlab library
"""

from typing import TYPE_CHECKING, Optional, Tuple

if TYPE_CHECKING:
    from rexlab.engine.trace import Trace


class RexlabError(Exception):
    """Base class for every rexlab error"""


class PreconditionError(RexlabError, ValueError):
    """An operation was called outside the domain it is defined on"""


class InvalidPosition(RexlabError, ValueError):
    def __init__(self, position: Tuple[str, ...], reason: str = "no such subterm"):
        self.position = tuple(position)
        super().__init__(f"Invalid position {list(self.position)}: {reason}")


class MetaOpError(RexlabError):
    """Failure of a meta-level operator"""


class DecrementUndefined(MetaOpError):
    """Decrement hit the index it removes (the index is free in the term)"""

    def __init__(self, index: int, position: Tuple[str, ...]):
        self.index = index
        self.position = tuple(position)
        super().__init__(
            f"Decrement of index {index} is undefined at position {list(self.position)}"
        )


class ClassCapExceeded(RexlabError, RuntimeError):
    def __init__(self, cap: int, found: int):
        self.cap = cap
        self.found = found
        super().__init__(
            f"Equivalence class exceeds the cap of {cap} members ({found} found)"
        )


class BoundExceeded(RexlabError, RuntimeError):
    """Normalization did not finish within the step bound"""

    def __init__(self, max_steps: int, trace: "Trace"):
        self.max_steps = max_steps
        self.trace = trace
        super().__init__(f"No normal form reached within {max_steps} steps")


class ParseError(RexlabError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        self.reason = message
        super().__init__(f"{message} (line {line}, column {column})")


class TranslationError(RexlabError, ValueError):
    """Translation between named and indexed terms is not defined"""


class FreeVariableNotInList(TranslationError):
    def __init__(self, name: str, variables: Optional[Tuple[str, ...]] = None):
        self.name = name
        self.variables = variables
        super().__init__(f"Free variable '{name}' does not occur in the variable list")


class DuplicateVariableList(TranslationError):
    def __init__(self, duplicates: Tuple[str, ...]):
        self.duplicates = duplicates
        super().__init__(
            f"Variable list must be duplicate-free, repeated: {', '.join(duplicates)}"
        )


class FreeIndexOutOfRange(TranslationError):
    def __init__(self, index: int, length: int):
        self.index = index
        self.length = length
        super().__init__(
            f"Free index {index} is out of range for a list of {length} variables"
        )


class ReplayMismatch(RexlabError):
    """A recorded trace step could not be reproduced"""

    def __init__(self, step: int, reason: str):
        self.step = step
        super().__init__(f"Trace replay failed at step {step}: {reason}")
