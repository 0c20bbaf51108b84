"""
Error hierarchy shared by every app.

Each error carries the process exit status the CLI reports for it:
1 for validation problems, 2 for numeric failures.
"""

EXIT_VALIDATION = 1
EXIT_NUMERIC = 2


class SgwsError(Exception):
    exit_code = EXIT_VALIDATION


class ContractViolation(SgwsError):
    """An operation was called outside its precondition"""


class ShapeError(SgwsError):
    pass


class SizeLimitError(SgwsError):
    def __init__(self, dimension, limit):
        self.dimension = dimension
        self.limit = limit
        super().__init__(f"dimension {dimension} exceeds the configured cap of {limit}")


class NumericError(SgwsError):
    exit_code = EXIT_NUMERIC

    def __init__(self, message, residual=None):
        self.residual = residual
        if residual is not None:
            message = f"{message} (residual {residual:.3e})"
        super().__init__(message)


class NotPSDError(SgwsError):
    exit_code = EXIT_NUMERIC

    def __init__(self, eigenvalue):
        self.eigenvalue = eigenvalue
        super().__init__(f"matrix is not positive semidefinite: eigenvalue {eigenvalue!r}")
