class Error(Exception):
    """Generic error class."""


class ArgumentError(Error, ValueError):
    """Raised when an invalid or conflicting function argument is supplied.

    This error generally corresponds to a violated precondition: mismatched
    dimensions, negative degrees, unknown families and the like.
    """


class ArrangementError(ArgumentError):
    """The forms handed over do not make up a valid arrangement."""


class ZeroFormError(ArrangementError):
    """A form with all coefficients zero was supplied."""

    def __init__(self, index):
        self.index = index
        super().__init__(f"form {index} is the zero form")

    def __reduce__(self):
        return type(self), (self.index,)


class ProportionalFormsError(ArrangementError):
    """Two forms define the same hyperplane."""

    def __init__(self, first, second):
        self.pair = (first, second)
        super().__init__(f"forms {first} and {second} are proportional")

    def __reduce__(self):
        return type(self), self.pair


class ParseError(ArgumentError):
    """An arrangement file could not be parsed.

    ``lineno`` is the 1-based line the problem was found on.
    """

    def __init__(self, lineno, msg):
        self.lineno = lineno
        self.msg = msg
        super().__init__(f"line {lineno}: {msg}")

    def __reduce__(self):
        return type(self), (self.lineno, self.msg)


class NotGenericError(ArgumentError):
    """Generic formulas were asked for with fewer forms than dimensions."""


class TooLargeError(Error):
    """An oracle matrix would exceed the configured entry budget."""

    def __init__(self, estimate, budget):
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"estimated {estimate} matrix entries exceeds budget {budget}")

    def __reduce__(self):
        return type(self), (self.estimate, self.budget)


class AmbiguousDecompositionError(Error):
    """The decomposition system has a nontrivial nullspace."""

    def __init__(self, nullity):
        self.nullity = nullity
        super().__init__(
            f"decomposition is not unique, nullspace dimension {nullity}")

    def __reduce__(self):
        return type(self), (self.nullity,)


class VerificationError(Error):
    """A brute-force check disagreed with the combinatorial prediction."""
