"""Hankel matrix construction, the two determinant routes, unit-RHS solves,
and the closed-form first/last coefficient ratios."""

import random

import pytest

from oddball.bessel import reverse_bessel
from oddball.errors import DimensionTooLarge, SingularMatrix, TableTooSmall
from oddball.golden import FIRST_COEFF, LAST_COEFF
from oddball.hankel import (
    HankelSpec,
    PolyMatrix,
    build_hankel,
    det_bareiss,
    det_minor_expansion,
    first_coeff_formula,
    hankel_det,
    last_coeff_formula,
    solve_unit_rhs,
    unit_solution,
)
from oddball.poly import IntPoly, RatFunc

TB = reverse_bessel(40)


class TestBuild:
    def test_two_by_two(self):
        m = build_hankel(HankelSpec(2, 0), TB)
        assert m.rows == (
            (IntPoly([1]), IntPoly([0, 1])),
            (IntPoly([0, 1]), IntPoly([0, 1, 1])),
        )

    def test_one_by_one(self):
        assert build_hankel(HankelSpec(1, 0), TB).rows == ((IntPoly([1]),),)

    def test_offset_two(self):
        m = build_hankel(HankelSpec(2, 2), TB)
        assert m.rows == (
            (IntPoly([0, 1, 1]), IntPoly([0, 3, 3, 1])),
            (IntPoly([0, 3, 3, 1]), IntPoly([0, 15, 15, 6, 1])),
        )

    def test_table_too_small(self):
        with pytest.raises(TableTooSmall):
            build_hankel(HankelSpec(4, 0), reverse_bessel(3))


class TestDeterminants:
    def test_printed_values(self):
        assert det_bareiss(build_hankel(HankelSpec(2, 0), TB)) == IntPoly([0, 1])
        assert det_bareiss(build_hankel(HankelSpec(1, 0), TB)) == IntPoly.one()
        # 2 R^2 (R + 3)
        assert det_bareiss(build_hankel(HankelSpec(3, 0), TB)) == IntPoly([0, 0, 6, 2])

    def test_diagonal(self):
        m = PolyMatrix([[IntPoly([0, 1]), IntPoly.zero()], [IntPoly.zero(), IntPoly([0, 1])]])
        assert det_bareiss(m) == IntPoly([0, 0, 1])
        assert det_minor_expansion(m) == IntPoly([0, 0, 1])

    def test_zero_determinant(self):
        r = IntPoly([0, 1])
        m = PolyMatrix([[r, r], [r, r]])
        assert det_bareiss(m).is_zero

    def test_pivot_swap(self):
        m = PolyMatrix([[IntPoly.zero(), IntPoly([0, 1])], [IntPoly.one(), IntPoly.zero()]])
        assert det_bareiss(m) == IntPoly([0, -1])

    def test_minor_matches_bareiss_on_hankel(self):
        for size in range(1, 7):
            for offset in (0, 1, 2):
                m = build_hankel(HankelSpec(size, offset), TB)
                assert det_minor_expansion(m) == det_bareiss(m)

    def test_minor_matches_bareiss_random(self):
        rng = random.Random(12345)
        for _ in range(5):
            dim = rng.randrange(2, 5)
            m = PolyMatrix([
                [IntPoly([rng.randint(-9, 9) for _ in range(rng.randrange(1, 4))])
                 for _ in range(dim)]
                for _ in range(dim)
            ])
            assert det_minor_expansion(m) == det_bareiss(m)

    def test_dimension_guard(self):
        big = PolyMatrix([[IntPoly.one()] * 14 for _ in range(14)])
        with pytest.raises(DimensionTooLarge):
            det_minor_expansion(big)

    def test_transpose_invariance(self):
        h = build_hankel(HankelSpec(4, 1), TB)
        assert h.transpose() == h  # Hankel matrices are symmetric
        assert det_bareiss(h.transpose()) == det_bareiss(h)
        rng = random.Random(3)
        m = PolyMatrix([
            [IntPoly([rng.randint(-5, 5) for _ in range(3)]) for _ in range(4)]
            for _ in range(4)
        ])
        assert det_bareiss(m.transpose()) == det_bareiss(m)

    def test_hankel_det_cache_and_empty(self):
        assert hankel_det(0, 0) == IntPoly.one()
        assert hankel_det(2, 0) == IntPoly([0, 1])
        assert hankel_det(2, 0) is hankel_det(2, 0)

    def test_hankel_det_nonzero_up_to_31(self):
        # nonzero at R=1 certifies the polynomial itself is nonzero
        for p in range(32):
            size = p + 1
            values = [TB.poly(i)(1) if i <= 40 else reverse_bessel(2 * p).poly(i)(1)
                      for i in range(2 * size - 1)]
            m = PolyMatrix([
                [IntPoly.const(values[i + j]) for j in range(size)]
                for i in range(size)
            ])
            assert not det_bareiss(m).is_zero, p


class TestSolve:
    def test_printed_solutions(self):
        assert unit_solution(0) == (RatFunc.const(1),)
        sol = unit_solution(1)
        assert sol[0] == RatFunc(IntPoly([1, 1]))
        assert sol[1] == RatFunc.const(-1)
        sol = unit_solution(2)
        assert sol[0] == RatFunc(IntPoly([6, 12, 6, 1]), IntPoly([6, 2]))

    def test_singular(self):
        r = IntPoly([0, 1])
        with pytest.raises(SingularMatrix):
            solve_unit_rhs(PolyMatrix([[r, r], [r, r]]))

    def test_residual_is_symbolically_checked(self):
        # fresh solve (not the cached path) exercises the residual assertion
        m = build_hankel(HankelSpec(4, 0), TB)
        sol = solve_unit_rhs(m)
        assert len(sol) == 4

    def test_closed_forms_match_solve(self):
        for p in range(8):
            sol = unit_solution(p)
            assert first_coeff_formula(p, TB) == sol[0]
            assert last_coeff_formula(p, TB) == sol[p]

    def test_golden_first_coefficients(self):
        for n, want in FIRST_COEFF.items():
            assert unit_solution((n - 1) // 2)[0] == want

    def test_golden_last_coefficients(self):
        for n, want in LAST_COEFF.items():
            p = (n - 1) // 2
            assert unit_solution(p)[p] == want
