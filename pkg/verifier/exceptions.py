"""
Error hierarchy for the verifier app.

Every failure surfaces as a ``ValueError`` subclass with a readable message.
``OperationalError`` covers files and parsing (exit code 1);
``MathematicalError`` covers identities that do not hold (exit code 2).
"""


class HeckeError(ValueError):
    """Base class for all verifier errors."""

    exit_code = 1


class OperationalError(HeckeError):
    exit_code = 1


class OperatorFileError(OperationalError):
    """An operator file is missing, unreadable or violates the schema."""


class ScalarParseError(OperationalError):
    """A scalar, partition or parameter string could not be parsed."""


class MathematicalError(HeckeError):
    exit_code = 2


class DegenerateParameter(MathematicalError):
    def __init__(self, n):
        self.n = n
        if n == 0:
            super().__init__('The parameter q is zero.')
        else:
            super().__init__(f'Quantum integer [{n}]_q vanishes; parameter is degenerate at degree {n}.')


class MixedFieldBackends(MathematicalError):
    pass


class DimensionMismatch(MathematicalError):
    pass


class NotSquare(MathematicalError):
    pass


class RankMismatch(MathematicalError):
    pass


class BlockSeparationFailure(MathematicalError):
    pass


class YangBaxterViolation(MathematicalError):
    pass


class HeckeEquationViolation(MathematicalError):
    pass


class NotClosed(MathematicalError):
    pass


class ParameterMismatch(MathematicalError):
    pass


class NonIntegralMultiplicity(MathematicalError):
    pass


class BirankUndetermined(MathematicalError):
    pass


class KoszulDefect(MathematicalError):
    def __init__(self, n):
        self.n = n
        super().__init__(f'Koszul numeric identity fails in degree {n}.')


class IdentityViolation(MathematicalError):
    def __init__(self, n, lhs, rhs, what='identity'):
        self.n = n
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f'{what} fails in degree {n}: {lhs} != {rhs}.')


class NotInComponent(MathematicalError):
    pass


class BiidealViolation(MathematicalError):
    pass


class EmptyGenerator(MathematicalError):
    pass


class MultiplicityTooHigh(MathematicalError):
    pass


class BadIndexLists(MathematicalError):
    pass
