"""Exception types shared across the package."""


class DivisionByZero(ZeroDivisionError):
    pass


class ShapeMismatch(ValueError):
    pass


class Singular(ArithmeticError):
    pass


class GradeMismatch(ValueError):
    pass


class ParseError(ValueError):
    pass


class UnknownDemo(KeyError):
    pass
