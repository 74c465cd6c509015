"""Exception hierarchy shared by all modules."""


class HibiError(Exception):
    """Base class for every error raised by this package."""


class ParseError(HibiError, ValueError):
    pass


class CycleError(HibiError, ValueError):
    pass


class UnknownElement(HibiError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class EmptyPoset(HibiError, ValueError):
    pass


class SizeCapExceeded(HibiError):
    """An input exceeds a configured size cap.

    ``cap`` names the cap so the CLI can report it.
    """

    def __init__(self, cap, limit, value):
        super().__init__(f"size cap {cap!r} exceeded: {value} > {limit}")
        self.cap = cap
        self.limit = limit
        self.value = value


class InternalInconsistency(HibiError, AssertionError):
    pass


class NotALattice(HibiError, ValueError):
    pass


class NotDistributive(HibiError, ValueError):
    pass


class MismatchedPair(HibiError, ValueError):
    pass


class NotSimple(HibiError, ValueError):
    pass


class PreconditionViolated(HibiError, ValueError):
    pass


class ArithmeticOverflow(HibiError, OverflowError):
    pass


class StabilizationFailure(HibiError):
    pass
