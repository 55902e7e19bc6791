"""Exception hierarchy shared by the library and the CLI."""


class InputError(ValueError):
    """Raised for malformed or inadmissible input (CLI exit code 1)."""


class DomainError(InputError):
    """A function was called outside its mathematical domain."""


class ParseError(InputError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class NotRationalZeros(InputError):
    """The denominator does not split into rational linear factors."""


class NotSimpleZeros(InputError):
    """The denominator has a repeated root."""


class DivergentSum(InputError):
    """deg P > deg Q - 2, so the series does not converge."""


class PoleAtIndex(InputError):
    def __init__(self, n):
        super().__init__(f"denominator vanishes at n = {n}")
        self.n = n


class InconsistentInput(InputError):
    """A partial-fraction coefficient vanished although gcd(P, Q) = 1 was assumed."""
