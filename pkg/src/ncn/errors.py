"""Exception types raised across the package."""


class NCNError(Exception):
    """Base class. ``line`` is set when the error comes from a text parser."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DimensionError(NCNError, ValueError):
    pass


class NonUnitaryError(NCNError, ValueError):
    def __init__(self, deviation, message=None):
        self.deviation = float(deviation)
        super().__init__(message or f"matrix is not unitary (max |M^dag M - I| = {deviation:.3e})")


class ArityError(NCNError, ValueError):
    pass


class DialectError(NCNError, ValueError):
    pass


class ParseError(NCNError, ValueError):
    pass


class EntangledAncillaError(NCNError, ValueError):
    """Ancilla is not in a product state with the data register."""

    def __init__(self, purity):
        self.purity = float(purity)
        super().__init__(f"ancilla is entangled with the register (reduced purity {purity:.12f})")


class RuleCheckError(NCNError, RuntimeError):
    pass
