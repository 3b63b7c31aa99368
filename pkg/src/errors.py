class KredError(Exception):
    """Base class for every error raised by kred."""


class InvalidPrime(KredError):
    def __init__(self, value):
        super().__init__(f"p must be an odd prime (got {value})")
        self.value = value


class PrimalityUndecided(KredError):
    pass


class IntegralityViolation(KredError):
    pass


class ConsistencyViolation(KredError):
    pass


class NonMonicDivisor(KredError):
    pass


class NonUnitConstantTerm(KredError):
    pass


class StateCorruption(KredError):
    pass
