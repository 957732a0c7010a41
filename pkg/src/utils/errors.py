"""
Error handling module.
Provides the toolkit exceptions and command response formatting.
"""
from typing import Any, Dict, Optional
from enum import Enum


class ErrorCode(Enum):
    """Standardized error codes."""
    PARSE_ERROR = "PARSE_ERROR"
    TRIVIAL_INPUT = "TRIVIAL_INPUT"
    COMMON_ROOT = "COMMON_ROOT"
    INDEX_OUT_OF_RANGE = "INDEX_OUT_OF_RANGE"
    NOT_TREE_LIKE = "NOT_TREE_LIKE"
    WRONG_GRAPH = "WRONG_GRAPH"
    INVALID_ARGUMENT = "INVALID_ARGUMENT"
    VERIFICATION_FAILED = "VERIFICATION_FAILED"
    INTERNAL_ERROR = "INTERNAL_ERROR"


# Process exit status for failures that are not GarlandErrors
INTERNAL_EXIT_CODE = 4


class GarlandError(Exception):
    """Base exception for toolkit errors."""

    def __init__(
        self,
        message: str,
        error_code: ErrorCode = ErrorCode.INVALID_ARGUMENT,
        exit_code: int = 2,
        original_error: Optional[Exception] = None
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.exit_code = exit_code
        self.original_error = original_error

    def to_dict(self) -> Dict[str, Any]:
        """Convert error to report format."""
        return {
            "error": self.error_code.value,
            "message": self.message,
            "exit_code": self.exit_code
        }


class ParseError(GarlandError):
    """Raised when a word, graph, surface or command line cannot be parsed."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            error_code=ErrorCode.PARSE_ERROR,
            exit_code=1
        )
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        result = super().to_dict()
        if self.details:
            result["details"] = self.details
        return result


class TrivialInput(GarlandError):
    """Raised when an operation needs a nontrivial word and got the identity."""

    def __init__(self, message: str = "Input word is the identity"):
        super().__init__(message=message, error_code=ErrorCode.TRIVIAL_INPUT)


COMMON_ROOT_HYPOTHESIS = (
    "the loops must not be powers of one class: there must be no loop γ and "
    "integers i, j with w1 freely homotopic to γ^i and w2 to γ^j"
)


class CommonRoot(GarlandError):
    """Raised when two loop classes share a primitive root up to inversion."""

    def __init__(self, first: str, second: str):
        super().__init__(
            message=f"{first} and {second} have conjugate primitive roots; "
                    f"{COMMON_ROOT_HYPOTHESIS}",
            error_code=ErrorCode.COMMON_ROOT
        )
        self.first = first
        self.second = second


class IndexOutOfRange(GarlandError):
    """Raised when a circle index does not exist in a graph."""

    def __init__(self, index: int, upper: int, what: str = "circle index"):
        super().__init__(
            message=f"{what} {index} is outside 1..{upper}",
            error_code=ErrorCode.INDEX_OUT_OF_RANGE
        )


class NotTreeLike(GarlandError):
    """Raised when a chord diagram is not a forest of distinct circles."""

    def __init__(self, message: str):
        super().__init__(message=message, error_code=ErrorCode.NOT_TREE_LIKE)


class WrongGraph(GarlandError):
    """Raised when a term lives on a graph the operation does not accept."""

    def __init__(self, expected: str, got: str):
        super().__init__(
            message=f"expected terms on graph '{expected}', got '{got}'",
            error_code=ErrorCode.WRONG_GRAPH
        )


class InvalidArgument(GarlandError):
    """Raised for structurally invalid arguments (permutations, surfaces)."""

    def __init__(self, message: str):
        super().__init__(message=message, error_code=ErrorCode.INVALID_ARGUMENT)


class VerificationError(GarlandError):
    """Raised when an identity that must hold is found violated."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            error_code=ErrorCode.VERIFICATION_FAILED,
            exit_code=3
        )
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        result = super().to_dict()
        if self.details:
            result["details"] = self.details
        return result


def format_error_response(error: Exception) -> Dict[str, Any]:
    """Format any exception into a standardized command response."""
    if isinstance(error, GarlandError):
        return {
            "exit_code": error.exit_code,
            "body": error.to_dict()
        }

    # Generic error - hide internal details
    return {
        "exit_code": INTERNAL_EXIT_CODE,
        "body": {
            "error": ErrorCode.INTERNAL_ERROR.value,
            "message": "An unexpected error occurred",
            "exit_code": INTERNAL_EXIT_CODE
        }
    }


def format_success_response(data: Dict[str, Any], exit_code: int = 0) -> Dict[str, Any]:
    """Format a command result."""
    return {
        "exit_code": exit_code,
        "body": data
    }
