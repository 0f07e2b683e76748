"""Exception hierarchy shared by services and the command-line layer."""


class HstrataError(Exception):
    pass


class InputError(HstrataError):
    """Malformed user input; the CLI maps it to exit code 2."""


class OrderUndefinedError(InputError):
    pass


class EmptyStratumError(InputError):
    pass


class ConsistencyError(HstrataError):
    """An internal identity failed to hold. Signals an arithmetic bug."""


class SamplingError(HstrataError):
    pass


class VerificationFailure(HstrataError):

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample or {}
