class RwError(Exception):
    """Base class for every error raised by ramsey-witness."""


class ValidationError(RwError, ValueError):
    """A graph, coloring or witness is malformed or references
    vertices that do not exist."""


class ParameterError(ValidationError):
    """Parameters violate an operation's precondition."""


class PreconditionError(ParameterError):
    """A structural precondition (e.g. homogeneity) does not hold."""


class FormatError(ValidationError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = 'line {}: {}'.format(line, message)
        super().__init__(message)


class BudgetExceededError(RwError):
    """An enumeration would examine more combinations than allowed."""

    def __init__(self, budget, spent=None, estimate=None, what='search'):
        self.budget = budget
        self.spent = spent
        self.estimate = estimate
        if estimate is not None:
            message = '{} refused: estimated {} checks exceed the ' \
                      'budget of {}.'.format(what, estimate, budget)
        else:
            message = '{} stopped after {} checks: budget of {} ' \
                      'exceeded.'.format(what, spent, budget)
        super().__init__(message)
