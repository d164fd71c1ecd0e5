"""Exception hierarchy shared by every module of the package."""


class TGWAError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TGWAError, ValueError):
    """Malformed or inconsistent input data."""


class InvalidScalarError(InputError):
    pass


class RootOfUnityError(TGWAError, ArithmeticError):
    """A quantum integer vanished where the factorial formula needs it."""


class ContextMismatchError(InputError):
    pass


class DegreeError(InputError):
    """An element has the wrong degree or is not homogeneous."""


class IndexRangeError(InputError):
    pass


class ParameterError(InputError):
    pass


class UnsupportedShapeError(TGWAError):
    """The input is outside the documented scope of a decision procedure."""


class NotAGCMError(TGWAError):
    pass


class CapExceededError(TGWAError):
    """Forward iteration did not close within the configured cap.

    This never claims that the algebra is not locally finite.
    """


class InternalInconsistencyError(TGWAError, AssertionError):
    """Two independent routes disagreed; this indicates a bug."""


class ParseError(InputError):
    def __init__(self, message, line=None, column=None, expected=None):
        self.message = message
        self.line = line
        self.column = column
        self.expected = list(expected or [])
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        text = where + message
        if self.expected:
            text += " (expected " + ", ".join(self.expected) + ")"
        super().__init__(text)


class SpecValidationError(InputError):
    """A spec file parsed but its data failed the consistency checks."""

    def __init__(self, report):
        self.report = report
        names = ", ".join(c.name for c in report.failures())
        super().__init__(f"data failed validation: {names}")
