class PolynomialError(Exception):
    """Base class for Laurent polynomial errors"""
    pass


class ArityMismatchError(PolynomialError):
    """Operands live over different variable sets"""
    pass


class InexactDivisionError(PolynomialError):
    """A division that must be exact left a remainder"""
    pass


class ZeroPolynomialError(PolynomialError):
    """Operation undefined on the zero polynomial"""
    pass


class QuiverError(Exception):
    """Invalid quiver operation (unknown or deleted vertex, bad permutation)"""
    pass


class SeedError(Exception):
    """Invalid seed operation"""
    pass
