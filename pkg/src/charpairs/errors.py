"""Exception hierarchy shared by every module of the package."""


class CharPairsError(Exception):
    """Base class for all package errors."""


class StructuralError(CharPairsError, ValueError):
    """Operands that cannot be combined (ordering mismatch, arity, bad triangular set)."""


class ConstantPolynomialError(CharPairsError, ValueError):
    """A structural accessor (lv, ini, ...) was applied to a constant."""


class InputError(CharPairsError, ValueError):
    """Malformed user input: zero generators, syntax errors, undeclared names."""


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class CertificateError(CharPairsError, AssertionError):
    """An internal identity guaranteed by theory did not hold (implementation bug)."""


class DecompositionAborted(CharPairsError, RuntimeError):
    """A branch exhausted its variable-reordering budget."""
