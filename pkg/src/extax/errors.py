"""Exception types shared across the package."""


class ExtaxError(Exception):
    """Base class for all package errors."""


class UnsupportedField(ExtaxError):
    pass


class FieldMismatch(ExtaxError):
    pass


class FieldTooSmall(ExtaxError):
    pass


class UnknownGroup(ExtaxError):
    pass


class GroupMismatch(ExtaxError):
    pass


class ResourceBudgetExceeded(ExtaxError):
    pass


class NotSimpleInput(ExtaxError):
    pass


class NoSuchPiece(ExtaxError):
    pass


class AmbiguousPiece(ExtaxError):
    pass


class SingularMultiplicityMatrix(ExtaxError):
    pass


class NonIntegralSolution(ExtaxError):
    pass


class SplitFailure(ExtaxError):
    pass


class NotUnipotent(ExtaxError):
    pass


class NotSemisimple(ExtaxError):
    pass


class LiftAmbiguous(ExtaxError):
    pass


class OrderBudgetExceeded(ExtaxError):
    pass


class MissingCentralData(ExtaxError):
    pass


class IncompleteTable(ExtaxError):
    pass


class TableParseError(ExtaxError):
    def __init__(self, msg, line=None):
        super().__init__(msg if line is None else f"line {line}: {msg}")
        self.line = line


class RecipeSyntaxError(ExtaxError):
    pass


class UnknownWeight(ExtaxError):
    pass
