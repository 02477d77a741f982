"""Magnitude of odd-dimensional balls: three exact routes and the
verification campaigns that hold them against each other.

Routes to |B^n_R| as a reduced rational function of the radius:

* det route: a bordered determinant (Hankel rows over an integer border
  row) divided by the plain Hankel determinant, scaled by (-1)^p / (n! R);
* hankel route: the offset-2 Hankel determinant over n! R times the
  offset-0 one;
* boundary route: volume plus boundary integrals of Laplacian powers of the
  potential function, evaluated exactly at enough rational radii to pin the
  rational function.

The campaigns check det = hankel for a range of n, the numerator
proportionality between |B^n| and the leading solve coefficient two
dimensions up, and the conjectured Hankel form of d|B^n|/dR.  Each is exact;
the only numerical check in the package is the quadrature cross-check of the
closed-form integral identity, done at 128-bit precision.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .bessel import BesselTable, reverse_bessel
from .errors import (
    ConjectureFails,
    Disagreement,
    EvenDimension,
    IdentityFails,
    NonpositiveRadius,
    ObservationFails,
    QuadratureNonconvergence,
)
from .explaurent import DEFAULT_PRECISION
from .hankel import PolyMatrix, det_bareiss, hankel_det, unit_solution
from .poly import IntPoly, RatFunc


def _half_dim(n: int) -> int:
    if n < 1 or n % 2 == 0:
        raise EvenDimension(f"dimension must be odd and >= 1, got {n}")
    return (n - 1) // 2


# ---------------------------------------------------------------------------
# border row and determinant routes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BorderRow:
    """Integer polynomials forming the border row of the extended system."""

    p: int
    polys: tuple


def border_polys(p: int, table: BesselTable | None = None) -> BorderRow:
    """Border-row polynomials xi_{p,0..p}.

    xi_{p,i} = R^(2p+2) B_i
             + n * sum_{j=0}^{p-i} 2^j (p-i)!/(p-i-j)! R^(2(p-j)) B_{i+j+1}
    with n = 2p + 1; every coefficient is an integer by construction.
    """
    if p < 0:
        raise ValueError("p must be >= 0")
    n = 2 * p + 1
    tb = table if table is not None else reverse_bessel(p + 1)
    out = []
    for i in range(p + 1):
        xi = tb.poly(i).shift(2 * p + 2)
        for j in range(p - i + 1):
            w = n * (1 << j) * math.factorial(p - i) // math.factorial(p - i - j)
            xi = xi + (w * tb.poly(i + j + 1)).shift(2 * (p - j))
        out.append(xi)
    return BorderRow(p, tuple(out))


def _hdet(size: int, offset: int, table: BesselTable | None) -> IntPoly:
    """Hankel determinant, from the shared cache or an explicit table."""
    if table is None:
        return hankel_det(size, offset)
    if size == 0:
        return IntPoly.one()
    from .hankel import HankelSpec, build_hankel

    return det_bareiss(build_hankel(HankelSpec(size, offset), table))


@lru_cache(maxsize=None)
def _bordered_det_cached(p: int) -> IntPoly:
    return _bordered_det(p, reverse_bessel(2 * p + 1))


def _bordered_det(p: int, table: BesselTable) -> IntPoly:
    """Determinant of the offset-1 Hankel rows stacked on the border row."""
    border = border_polys(p, table).polys
    rows = [[table.poly(i + j + 1) for j in range(p + 1)] for i in range(p)]
    rows.append(list(border))
    return det_bareiss(PolyMatrix(rows))


def magnitude_det(n: int, table: BesselTable | None = None) -> RatFunc:
    """|B^n_R| via the bordered-determinant route, reduced."""
    p = _half_dim(n)
    num = _bordered_det_cached(p) if table is None else _bordered_det(p, table)
    den = (math.factorial(n) * _hdet(p + 1, 0, table)).shift(1)
    return RatFunc(num if p % 2 == 0 else -num, den)


def magnitude_hankel(n: int, table: BesselTable | None = None) -> RatFunc:
    """|B^n_R| via the ratio of offset-2 and offset-0 Hankel determinants."""
    p = _half_dim(n)
    num = _hdet(p + 1, 2, table)
    den = (math.factorial(n) * _hdet(p + 1, 0, table)).shift(1)
    return RatFunc(num, den)


def magnitude_explicit(n: int, radius, table: BesselTable | None = None) -> Fraction:
    """|B^n_R| at one rational radius, from the solved coefficients directly.

    (1/n!) { R^n + n * sum_i a_i sum_j 2^j (p-i)!/(p-i-j)!
                                       R^(2(p-j)-1) B_{i+j+1}(R) }
    where a_i solve the unit-RHS Hankel system at this radius.  Note the
    exponent 2(p-j)-1 hits -1 when j = p; exact rational powers handle it.
    """
    p = _half_dim(n)
    radius = Fraction(radius)
    if radius <= 0:
        raise NonpositiveRadius(f"radius must be positive, got {radius}")
    tb = table if table is not None else reverse_bessel(p + 1)
    coeffs = [f(radius) for f in unit_solution(p)]
    total = radius ** n
    for i, a in enumerate(coeffs):
        inner = Fraction(0)
        for j in range(p - i + 1):
            w = (1 << j) * math.factorial(p - i) // math.factorial(p - i - j)
            inner += w * radius ** (2 * (p - j) - 1) * tb.poly(i + j + 1)(radius)
        total += n * a * inner
    return total / math.factorial(n)


# ---------------------------------------------------------------------------
# boundary-integral route
# ---------------------------------------------------------------------------

def boundary_value_at(n: int, radius) -> Fraction:
    """|B^n_R| at one rational radius via the boundary formula.

    R^n/n! plus R^(n-1)/(n-1)! times the alternating binomial sum of
    (Laplacian^(j-1) h)'(R) over (p+1)/2 < j <= p+1, everything exact.  The
    surface-to-volume constant enters only as the ratio n, which is how the
    dimensional constants cancel.
    """
    from .potential import build_potential  # local import; potential builds on hankel

    p = _half_dim(n)
    radius = Fraction(radius)
    pot = build_potential(n, radius)
    total = Fraction(radius ** n, math.factorial(n))
    acc = Fraction(0)
    for j in range((p + 1) // 2 + 1, p + 2):
        g = pot.exterior
        for _ in range(j - 1):
            g = g.laplacian(n)
        g = g.diff()
        term = g.laurent_at(radius)
        acc += (-1) ** j * math.comb(p + 1, j) * term
    total += radius ** (n - 1) / math.factorial(n - 1) * acc
    return total


def magnitude_boundary(n: int, table: BesselTable | None = None) -> RatFunc:
    """|B^n_R| via the boundary route, certified against the det route.

    The boundary pipeline is evaluated at deg(num) + deg(den) + 2 distinct
    rational radii; pointwise agreement at that many points pins down the
    rational function, so the det-route answer is returned once certified.
    """
    p = _half_dim(n)
    mag = magnitude_det(n)
    needed = mag.num.degree + mag.den.degree + 2
    det0 = hankel_det(p + 1, 0)
    samples = 0
    r = 0
    while samples < needed:
        r += 1
        radius = Fraction(r)
        if det0(radius) == 0 or mag.den(radius) == 0:
            continue
        if boundary_value_at(n, radius) != mag(radius):
            raise Disagreement(n, f"boundary route differs from det route at R={radius}")
        samples += 1
    return mag


# ---------------------------------------------------------------------------
# derivative conjecture
# ---------------------------------------------------------------------------

def derivative_conjecture_rhs(n: int, table: BesselTable | None = None) -> RatFunc:
    """Conjectured d|B^n_R|/dR: squared offset-1 Hankel determinant over
    (2p)! R^2 times the squared offset-0 one.

    The equivalent form R^(n-1)/(n-1)! times the squared boundary limit
    derivative is computed too and must reduce to the identical function.
    """
    from .potential import boundary_limit_derivative

    p = _half_dim(n)
    h1 = _hdet(p + 1, 1, table)
    h0 = _hdet(p + 1, 0, table)
    rhs = RatFunc(h1 * h1, (math.factorial(2 * p) * (h0 * h0)).shift(2))
    bld = boundary_limit_derivative(n)
    other = bld * bld * RatFunc(IntPoly.monomial(n - 1), IntPoly.const(math.factorial(n - 1)))
    assert rhs == other, f"the two conjecture right-hand sides differ at n={n}"
    return rhs


# ---------------------------------------------------------------------------
# campaign reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CampaignEntry:
    n: int
    value: RatFunc
    millis: float
    extra: tuple = ()


@dataclass(frozen=True)
class CampaignReport:
    kind: str
    max_n: int
    entries: tuple

    @property
    def ok(self) -> bool:
        return True  # a failed campaign raises instead of returning


def _equality_job(n: int) -> dict:
    t0 = time.perf_counter()
    d = magnitude_det(n)
    h = magnitude_hankel(n)
    millis = (time.perf_counter() - t0) * 1000.0
    return {
        "n": n,
        "agree": d == h,
        "value": d.as_dict(),
        "other": h.as_dict(),
        "millis": millis,
    }


def _derivative_job(n: int) -> dict:
    t0 = time.perf_counter()
    lhs = magnitude_hankel(n).derivative()
    rhs = derivative_conjecture_rhs(n)
    millis = (time.perf_counter() - t0) * 1000.0
    return {
        "n": n,
        "agree": lhs == rhs,
        "value": rhs.as_dict(),
        "other": lhs.as_dict(),
        "millis": millis,
    }


def _run_jobs(worker, ns, jobs: int) -> list:
    if jobs > 1 and len(ns) > 1:
        try:
            with ProcessPoolExecutor(max_workers=min(jobs, len(ns))) as pool:
                results = list(pool.map(worker, ns))
        except OSError:
            results = [worker(n) for n in ns]
    else:
        results = [worker(n) for n in ns]
    return sorted(results, key=lambda rec: rec["n"])


def verify_formula_equality(max_n: int, jobs: int = 1) -> CampaignReport:
    """Assert det route == hankel route for every odd n <= max_n."""
    _half_dim(max_n)
    ns = list(range(1, max_n + 1, 2))
    entries = []
    for rec in _run_jobs(_equality_job, ns, jobs):
        if not rec["agree"]:
            raise Disagreement(rec["n"], f"det={rec['value']} hankel={rec['other']}")
        entries.append(CampaignEntry(rec["n"], RatFunc.from_dict(rec["value"]), rec["millis"]))
    return CampaignReport("equality", max_n, tuple(entries))


def verify_derivative_conjecture(max_n: int, jobs: int = 1) -> CampaignReport:
    """Assert d/dR of the hankel-route magnitude equals the conjectured form
    for every odd n <= max_n."""
    _half_dim(max_n)
    ns = list(range(1, max_n + 1, 2))
    entries = []
    for rec in _run_jobs(_derivative_job, ns, jobs):
        if not rec["agree"]:
            raise ConjectureFails(rec["n"], f"rhs={rec['value']} d/dR={rec['other']}")
        entries.append(CampaignEntry(rec["n"], RatFunc.from_dict(rec["value"]), rec["millis"]))
    return CampaignReport("derivative", max_n, tuple(entries))


def verify_triple_route(max_n: int) -> CampaignReport:
    """Assert boundary route == det route == hankel route for odd n <= max_n."""
    _half_dim(max_n)
    entries = []
    for n in range(1, max_n + 1, 2):
        t0 = time.perf_counter()
        mag = magnitude_boundary(n)  # certifies against the det route
        if mag != magnitude_hankel(n):
            raise Disagreement(n, "hankel route differs")
        entries.append(CampaignEntry(n, mag, (time.perf_counter() - t0) * 1000.0))
    return CampaignReport("triple-route", max_n, tuple(entries))


# ---------------------------------------------------------------------------
# numerator proportionality observation
# ---------------------------------------------------------------------------

def _strip_poly(poly: IntPoly) -> tuple:
    """Factor poly as content * R^v * primitive-with-positive-lead."""
    v = poly.valuation()
    shifted = poly.shift_down(v)
    c = shifted.content()
    prim = shifted.primitive()
    if prim.leading < 0:
        return -prim, v, -c
    return prim, v, c


@dataclass(frozen=True)
class ObservationEntry:
    """num(|B^n|) = constant * R^power_shift * num(first coeff at n+2)."""

    n: int
    power_shift: int
    constant: Fraction
    millis: float


def verify_observation(max_n: int) -> CampaignReport:
    """Check that the magnitude numerator at n matches the numerator of the
    zeroth solve coefficient at n + 2, up to integer content and a power of
    R; the extracted factors are reported, not assumed."""
    _half_dim(max_n)
    entries = []
    for n in range(1, max_n + 1, 2):
        t0 = time.perf_counter()
        p_up = _half_dim(n + 2)
        mag_num = magnitude_hankel(n).num
        coeff_num = RatFunc(hankel_det(p_up, 2), hankel_det(p_up + 1, 0)).num
        prim_m, v_m, c_m = _strip_poly(mag_num)
        prim_a, v_a, c_a = _strip_poly(coeff_num)
        if prim_m != prim_a:
            raise ObservationFails(n, "primitive numerator parts differ")
        entries.append(
            ObservationEntry(n, v_m - v_a, Fraction(c_m, c_a), (time.perf_counter() - t0) * 1000.0)
        )
    return CampaignReport("observation", max_n, tuple(entries))


# ---------------------------------------------------------------------------
# determinantal identity
# ---------------------------------------------------------------------------

def determinantal_identity_check(p: int) -> bool:
    """(-1)^p det(bordered) == det(offset-2 Hankel), checked exactly."""
    if p < 0:
        raise ValueError("p must be >= 0")
    lhs = _bordered_det_cached(p)
    if p % 2 == 1:
        lhs = -lhs
    rhs = hankel_det(p + 1, 2)
    if lhs != rhs:
        raise IdentityFails(p)
    return True


# ---------------------------------------------------------------------------
# closed-form integral identity, quadrature cross-check
# ---------------------------------------------------------------------------

def verify_integral_lemma(
    i: int,
    b: int,
    radius,
    prec_bits: int = DEFAULT_PRECISION,
    rel_tol=None,
) -> bool:
    """Check int_R^inf e^(-r) B_i(r) r^(2b) dr against its closed form.

    Left side: adaptive quadrature on [R, R + 180] at the working precision;
    the discarded tail is bounded analytically and must be negligible.
    Right side: e^(-R) sum_j 2^j b!/(b-j)! R^(2(b-j)-1) B_{i+j+1}(R), the
    rational part computed exactly and converted once.
    """
    if i < 0 or b < 0:
        raise ValueError("i and b must be >= 0")
    radius = Fraction(radius)
    if radius <= 0:
        raise NonpositiveRadius(f"radius must be positive, got {radius}")
    tb = reverse_bessel(i + b + 1)
    rhs_rational = Fraction(0)
    for j in range(b + 1):
        w = (1 << j) * math.factorial(b) // math.factorial(b - j)
        rhs_rational += w * radius ** (2 * (b - j) - 1) * tb.poly(i + j + 1)(radius)

    integrand_coeffs = tb.poly(i).shift(2 * b).coeffs  # all nonnegative
    guard = 64
    with mpmath.workprec(prec_bits + guard):
        rv = mpmath.mpf(radius.numerator) / radius.denominator
        rhs = mpmath.exp(-rv) * mpmath.mpf(rhs_rational.numerator) / rhs_rational.denominator

        def integrand(r):
            acc = mpmath.mpf(0)
            for c in reversed(integrand_coeffs):
                acc = acc * r + c
            return mpmath.exp(-r) * acc

        cutoff = rv + 180
        # analytic bound on the discarded tail: sum_m a_m e^(-T) sum_{k<=m} m!/k! T^k
        tail = mpmath.mpf(0)
        for m, a in enumerate(integrand_coeffs):
            if a:
                s = mpmath.mpf(0)
                for k in range(m + 1):
                    s += mpmath.mpf(math.factorial(m) // math.factorial(k)) * cutoff ** k
                tail += a * s
        tail *= mpmath.exp(-cutoff)
        if tail > rhs * mpmath.mpf(10) ** (-40):
            raise QuadratureNonconvergence("truncation tail too large for the tolerance")

        points = [rv, rv + 2, rv + 8, rv + 24, rv + 64, cutoff]
        val, err = mpmath.quad(integrand, points, error=True)
        if err > abs(val) * mpmath.mpf(10) ** (-34):
            val, err = mpmath.quad(integrand, points, error=True, maxdegree=10)
            if err > abs(val) * mpmath.mpf(10) ** (-34):
                raise QuadratureNonconvergence(f"estimated error {err} too large")

        tol = mpmath.mpf(10) ** (-30) if rel_tol is None else mpmath.mpf(rel_tol)
        return abs(val - rhs) <= tol * abs(rhs)


# ---------------------------------------------------------------------------
# aggregate report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MagnitudeReport:
    """One n: whichever routes were computed, their agreement, and timings."""

    n: int
    mag_det: RatFunc | None
    mag_hankel: RatFunc | None
    mag_boundary: RatFunc | None
    agree: bool
    derivative: RatFunc | None
    derivative_conjecture_rhs: RatFunc | None
    derivative_agree: bool | None
    timing: dict


def magnitude_report(n: int, routes=("det", "hankel"), with_derivative: bool = False) -> MagnitudeReport:
    values = {}
    timing = {}
    for route in routes:
        t0 = time.perf_counter()
        if route == "det":
            values[route] = magnitude_det(n)
        elif route == "hankel":
            values[route] = magnitude_hankel(n)
        elif route == "boundary":
            values[route] = magnitude_boundary(n)
        else:
            raise ValueError(f"unknown route {route!r}")
        timing[route] = (time.perf_counter() - t0) * 1000.0
    distinct = {v for v in values.values()}
    agree = len(distinct) <= 1
    derivative = rhs = None
    deriv_agree = None
    if with_derivative:
        t0 = time.perf_counter()
        base = values.get("hankel") or values.get("det") or magnitude_hankel(n)
        derivative = base.derivative()
        rhs = derivative_conjecture_rhs(n)
        deriv_agree = derivative == rhs
        timing["derivative"] = (time.perf_counter() - t0) * 1000.0
    return MagnitudeReport(
        n=n,
        mag_det=values.get("det"),
        mag_hankel=values.get("hankel"),
        mag_boundary=values.get("boundary"),
        agree=agree,
        derivative=derivative,
        derivative_conjecture_rhs=rhs,
        derivative_agree=deriv_agree,
        timing=timing,
    )
