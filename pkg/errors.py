"""
Error types for bilat-lp
Every failure carries a detail message and the process exit code it maps to
"""

from typing import Optional


class BilatError(Exception):
    """Base class for all expected failures"""
    exit_code = 1
    default_detail = "bilat-lp error"

    def __init__(self, detail: Optional[str] = None):
        self.detail = detail or self.default_detail
        super().__init__(self.detail)


class ProgramParseError(BilatError):
    """Raised when program or interpretation text does not match the grammar"""
    default_detail = "Syntax error"

    def __init__(self, detail: Optional[str] = None, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        message = detail or self.default_detail
        if line:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class ProgramValidationError(BilatError):
    """Raised when a parsed program violates a well-formedness rule"""
    default_detail = "Invalid program"


class BilatticeKindError(BilatError):
    """Raised when values of different bilattices meet"""
    default_detail = "Bilattice kind mismatch"


class InterpretationError(BilatError):
    """Raised for malformed interpretations"""
    default_detail = "Invalid interpretation"


class SyntaxRestrictionError(BilatError):
    """Raised when an operation needs a syntactic class the program is not in"""
    default_detail = "Program is outside the syntactic class this operation supports"


class LimitExceededError(BilatError):
    """Raised when an enumeration would exceed its configured size limit"""
    exit_code = 2
    default_detail = "Enumeration limit exceeded"


class FuseExceededError(BilatError):
    """Raised when a fixpoint iteration does not converge within the fuse"""
    exit_code = 2
    default_detail = "Iteration fuse exceeded"


class InvariantViolationError(BilatError):
    """Raised when an internal invariant fails; always a bug"""
    exit_code = 3
    default_detail = "Internal invariant violated"


class ConfigurationError(BilatError):
    """Raised for an invalid combination of command options"""
    default_detail = "Invalid options"
