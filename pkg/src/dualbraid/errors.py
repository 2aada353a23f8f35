"""Exception hierarchy shared by every module of the package."""


class BraidError(ValueError):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class WordSyntaxError(BraidError):
    pass


class StrandError(BraidError):
    """A letter or word does not fit the requested strand count."""


class NotPositiveError(BraidError):
    pass


class NotADivisorError(BraidError):
    pass


class BudgetExceededError(BraidError):
    """An enumeration or rewriting loop ran past its configured budget."""


class AutomatonError(BraidError):
    pass
