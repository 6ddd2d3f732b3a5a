"""Exception hierarchy shared by every t2interval module."""


class Type2Error(Exception):
    """Base class for all errors raised by t2interval."""


class NonFiniteInput(Type2Error, ValueError):
    """An endpoint or scalar was NaN or infinite."""


class NonFiniteResult(Type2Error, ArithmeticError):
    """An arithmetic result overflowed to infinity or became NaN."""


class OrderingViolation(Type2Error, ValueError):
    """A quadruple failed q1 <= q2 <= q3 <= q4.

    ``pair`` holds the 1-based positions of the first violated pair, e.g. (1, 2).
    """

    def __init__(self, pair, values, where=None):
        self.pair = tuple(pair)
        self.values = tuple(values)
        self.where = where
        i, j = self.pair
        msg = f"ordering violated at (q{i}, q{j}): {self.values[i - 1]!r} > {self.values[j - 1]!r}"
        if where:
            msg += f" ({where})"
        super().__init__(msg)


class ZeroInDenominator(Type2Error, ZeroDivisionError):
    """Division by an interval whose outer hull contains zero, or by a real zero."""


class OutOfDomain(Type2Error, ValueError):
    """A point lies outside the domain of a Type-2 interval-valued function."""


class PointwiseOrderingViolation(Type2Error, ValueError):
    """Component functions are not ordered at some point x."""

    def __init__(self, x, pair, values):
        self.x = x
        self.pair = tuple(pair)
        self.values = tuple(values)
        i, j = self.pair
        super().__init__(
            f"component ordering violated at x={x!r}: "
            f"f{i}={self.values[i - 1]!r} > f{j}={self.values[j - 1]!r}"
        )


class LimitNotApparent(Type2Error):
    """A sequence tail did not settle at the configured tolerance."""


class ComponentNotDifferentiable(Type2Error):
    """Finite-difference probes of a component did not stabilise."""


class SignChangeDetected(Type2Error):
    """A scaling function changes sign on its domain."""


class ExprSyntaxError(Type2Error):
    """Parse failure with 1-based line/column and the set of expected tokens."""

    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        text = f"{message} at line {line}, column {column}"
        if self.expected:
            text += f"; expected one of: {', '.join(self.expected)}"
        super().__init__(text)


class ExprTypeError(Type2Error):
    """A Type-2 value would flow where only a real is allowed."""


class ExprEvalError(Type2Error):
    """Expression evaluation failed (unbound variable, math domain error, ...)."""
