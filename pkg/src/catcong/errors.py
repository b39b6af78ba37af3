"""Exception types shared across the package."""


class CatcongError(Exception):
    pass


class NotPrime(CatcongError):
    pass


class DenominatorDivisible(CatcongError):
    """A rational was reduced modulo p but its denominator is divisible by p."""


class NegativeValuation(CatcongError):
    """A tracked p-power exponent went negative where the theory forbids it.

    This always signals an implementation bug, never bad input.
    """


class DegenerateX(CatcongError):
    """x = +-1, where alpha = x + sqrt(x^2-1) collapses to a unit."""


class DivisionByZero(CatcongError):
    pass


class NormDivisibleByThree(CatcongError):
    pass


class NormThree(CatcongError):
    pass


class NoRepresentation(CatcongError):
    pass


class ParityViolation(CatcongError):
    pass


class DenominatorNotCoprime(CatcongError):
    pass


class ClassificationFailure(CatcongError):
    pass


class IndexOutOfDomain(CatcongError):
    pass


class PoleInC(CatcongError):
    pass


class ParameterOutOfDomain(CatcongError):
    pass


class ExcludedC(ParameterOutOfDomain):
    """c^2 = -3 mod m: c falls outside every cubic class."""
