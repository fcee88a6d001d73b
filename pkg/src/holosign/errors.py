"""Exception hierarchy shared by every holosign module."""


class HolosignError(Exception):
    pass


class PoleAtPoint(HolosignError, ZeroDivisionError):
    """A rational function was evaluated at one of its poles."""


class NotProperAtInfinity(HolosignError, ValueError):
    pass


class DomainError(HolosignError, ValueError):
    pass


class DegenerateCoefficient(HolosignError, ValueError):
    """P or Q is the zero function."""


class DegenerateDenominator(HolosignError, ValueError):
    """B^(tau) vanishes identically, so no gap recurrence exists."""


class ContractViolation(HolosignError, ValueError):
    pass


class MixedRadicals(HolosignError, ValueError):
    """Two different square roots were combined in one session."""


class Indeterminate(HolosignError, ArithmeticError):
    pass


class PrecisionCapExceeded(HolosignError, ArithmeticError):
    pass


class ParseError(HolosignError, ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class DivisionByZeroFunction(ParseError):
    pass
