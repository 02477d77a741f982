"""Exception types shared across the package."""


class OddballError(Exception):
    """Base class for every error raised by this package."""


class ZeroDenominator(OddballError):
    """A rational (number or function) was built with a zero denominator."""


class InexactDivision(OddballError):
    """A division that must be remainder-free left a remainder.

    Fraction-free elimination only ever divides by provably-exact factors,
    so hitting this means the arithmetic itself is broken.  It is never an
    input error.
    """


class EvenDimension(OddballError):
    """An operation restricted to odd ambient dimension got an even one."""


class NonpositiveRadius(OddballError):
    """A radius (or evaluation point) that must be positive was not."""


class NonpolynomialResidue(OddballError):
    """Clearing the exponential/Laurent factors left negative powers behind."""


class TableTooSmall(OddballError):
    """A polynomial table does not cover the indices an operation needs."""


class DimensionTooLarge(OddballError):
    """Cost guard: the cofactor-expansion determinant refuses big matrices."""


class SingularMatrix(OddballError):
    """A linear solve hit a zero determinant."""


class IndexOutOfTriangle(OddballError):
    """Coefficient request outside the valid (j, k) triangle."""


class RouteMismatch(OddballError):
    """Two supposedly-equivalent computation routes disagreed."""


class QuadratureNonconvergence(OddballError):
    """Numerical integration failed to reach the requested accuracy."""


class Disagreement(OddballError):
    """Two magnitude formulas produced different rational functions."""

    def __init__(self, n: int, detail: str = ""):
        self.n = n
        super().__init__(f"magnitude formulas disagree at n={n}" + (f": {detail}" if detail else ""))


class ObservationFails(OddballError):
    """The numerator-proportionality observation failed for some n."""

    def __init__(self, n: int, detail: str = ""):
        self.n = n
        super().__init__(f"observation fails at n={n}" + (f": {detail}" if detail else ""))


class ConjectureFails(OddballError):
    """The magnitude-derivative conjecture failed for some n."""

    def __init__(self, n: int, detail: str = ""):
        self.n = n
        super().__init__(f"derivative conjecture fails at n={n}" + (f": {detail}" if detail else ""))


class IdentityFails(OddballError):
    """The bordered-vs-Hankel determinantal identity failed for some p."""

    def __init__(self, p: int, detail: str = ""):
        self.p = p
        super().__init__(f"determinantal identity fails at p={p}" + (f": {detail}" if detail else ""))


class GoldenMismatch(OddballError):
    """A reproduced table differs from its embedded fixture."""


class ParseError(OddballError):
    """Malformed textual input (rational number or polynomial)."""
