class InvalidParameterError(ValueError):
    """Raised when an argument violates an operation's precondition."""


class QueryBudgetError(RuntimeError):
    """Raised when a query would exceed its enumeration budget."""


class DatasetError(ValueError):
    """Raised for malformed dataset or archive input.

    ``line`` is the 1-based line number when the error came from a text file.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
