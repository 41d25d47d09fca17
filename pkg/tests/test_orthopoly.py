import random
from fractions import Fraction

import pytest

from opident.moments import (
    ChebyshevCatalanFunctional,
    FiniteAtomFunctional,
    ModeError,
    PoleAtAtomError,
    SequenceFunctional,
    random_atom_functional,
)
from opident.orthopoly import (
    DegenerateFunctionalError,
    build_ortho_system,
    hankel_product_formula,
    poly_lemma4,
    poly_lemma5,
    q_derivative_exact,
    q_exact,
    q_series,
)
from opident.ring import UniPoly

F = Fraction


def cheb_system(depth=6):
    return build_ortho_system(ChebyshevCatalanFunctional(), depth)


# ---------------------------------------------------------------------------
# Three-term recurrence construction
# ---------------------------------------------------------------------------

def test_chebyshev_system():
    sys = cheb_system(4)
    assert sys.s == (0, 0, 0, 0)
    assert sys.t == (1, 1, 1)
    assert sys.p(2) == UniPoly.from_coeffs([-1, 0, 1])
    assert sys.p(3) == UniPoly.from_coeffs([0, -2, 0, 1])
    assert sys.p(-1).is_zero
    assert sys.p(0) == UniPoly.one()


def test_two_atom_system():
    f = FiniteAtomFunctional([(1, F(1, 2)), (-1, F(1, 2))])
    sys = build_ortho_system(f, 2)
    assert sys.p(1) == UniPoly.variable()
    assert sys.p(2) == UniPoly.from_coeffs([-1, 0, 1])
    assert sys.t == (1,)


def test_first_recurrence_coefficient_is_mu1_over_mu0(rng):
    f = random_atom_functional(rng, 5)
    sys = build_ortho_system(f, 1)
    assert sys.p(1) == UniPoly.from_coeffs([-f.moment(1) / f.moment(0), 1])


def test_orthogonality_and_norms(rng):
    f = random_atom_functional(rng, 7, hankel_nonzero_upto=7)
    sys = build_ortho_system(f, 6)
    for a in range(7):
        for b in range(a):
            assert f.apply(sys.p(a) * sys.p(b)) == 0
    for n in range(6):
        assert sys.norm(n) == f.hankel_det(n + 1) / f.hankel_det(n)


def test_monicity_and_nonzero_t(rng):
    f = random_atom_functional(rng, 8, hankel_nonzero_upto=8)
    sys = build_ortho_system(f, 8)
    for n in range(9):
        p = sys.p(n)
        assert p.degree == n
        if not p.is_zero:
            assert p.leading_coefficient() == 1
    assert all(t != 0 for t in sys.t)


def test_degenerate_functional_reports_index():
    # two atoms: H(3) = 0, so depth 3 must fail naming index 3
    f = FiniteAtomFunctional([(1, F(1, 2)), (-1, F(1, 2))])
    with pytest.raises(DegenerateFunctionalError) as err:
        build_ortho_system(f, 3)
    assert err.value.index == 3


def test_depth_capped_at_atom_count(rng):
    f = random_atom_functional(rng, 5, hankel_nonzero_upto=5)
    sys = build_ortho_system(f, 5)  # p_5 = node polynomial, still fine
    prod = UniPoly.one()
    for u in f.nodes:
        prod = prod * UniPoly.from_coeffs([-u, 1])
    assert sys.p(5) == prod
    with pytest.raises(DegenerateFunctionalError):
        build_ortho_system(f, 6)


def test_hankel_product_formula(rng):
    # H(n) = mu_0^n prod t_i^(n-i-1); with mu_0 = 1 the classical formula
    f = random_atom_functional(rng, 6, hankel_nonzero_upto=6, normalize=True)
    sys = build_ortho_system(f, 6)
    for n in range(7):
        assert f.hankel_det(n) == hankel_product_formula(sys, n)
        prod = F(1)
        for i in range(n - 1):
            prod *= sys.t[i] ** (n - i - 1)
        assert f.hankel_det(n) == prod


# ---------------------------------------------------------------------------
# Determinant formulas for p_n
# ---------------------------------------------------------------------------

def test_poly_lemma4_examples():
    f = ChebyshevCatalanFunctional()
    assert poly_lemma4(f, 0) == UniPoly.one()
    assert poly_lemma4(f, 2) == UniPoly.from_coeffs([-1, 0, 1])
    g = SequenceFunctional([2, 3, 7, 8])
    assert poly_lemma4(g, 1) == UniPoly.from_coeffs([F(-3, 2), 1])


def test_poly_lemma4_equals_recurrence(rng):
    f = random_atom_functional(rng, 8, hankel_nonzero_upto=8)
    sys = build_ortho_system(f, 8)
    for n in range(9):
        assert poly_lemma4(f, n) == sys.p(n)


def test_poly_lemma5_examples():
    f = ChebyshevCatalanFunctional()
    assert poly_lemma5(f, 0) == UniPoly.one()
    assert poly_lemma5(f, 1) == UniPoly.from_coeffs([0, -1])  # mu_1 - mu_0 x
    assert poly_lemma5(f, 2) == UniPoly.from_coeffs([-1, 0, 1])


def test_poly_lemma5_normalization(rng):
    # det(mu_{i+j+1} - mu_{i+j} x) = (-1)^n H(n) p_n(x): the x^n coefficient
    # of the determinant is det(-mu_{i+j}) = (-1)^n H(n).
    f = random_atom_functional(rng, 7, hankel_nonzero_upto=7)
    sys = build_ortho_system(f, 6)
    for n in range(7):
        lhs = poly_lemma5(f, n)
        sign = -1 if n % 2 else 1
        assert lhs == sign * f.hankel_det(n) * sys.p(n)


# ---------------------------------------------------------------------------
# Second-kind functions, exact
# ---------------------------------------------------------------------------

def test_q_exact_examples():
    single = build_ortho_system(FiniteAtomFunctional([(0, 1)]), 0)
    assert q_exact(single, 0, 2) == F(1, 2)
    two = build_ortho_system(FiniteAtomFunctional([(1, F(1, 2)), (-1, F(1, 2))]), 1)
    assert q_exact(two, 1, 3) == F(1, 8)


def test_q_exact_three_term_recurrence(rng):
    f = random_atom_functional(rng, 6, hankel_nonzero_upto=6)
    sys = build_ortho_system(f, 5)
    for y in (F(1, 3), F(22, 7), F(-13, 5)):
        q0 = q_exact(sys, 0, y)
        q1 = q_exact(sys, 1, y)
        assert q1 == (y - sys.s[0]) * q0 - f.moment(0)  # the initial value
        for n in range(2, 6):
            assert q_exact(sys, n, y) == (y - sys.s[n - 1]) * q_exact(
                sys, n - 1, y
            ) - sys.t[n - 2] * q_exact(sys, n - 2, y)


def test_q_exact_mode_and_pole_errors():
    cheb = cheb_system(2)
    with pytest.raises(ModeError):
        q_exact(cheb, 1, F(1, 2))
    f = FiniteAtomFunctional([(2, 1), (3, 1)])
    sys = build_ortho_system(f, 1)
    with pytest.raises(PoleAtAtomError):
        q_exact(sys, 1, 2)


# ---------------------------------------------------------------------------
# Second-kind functions, formal series
# ---------------------------------------------------------------------------

def test_q_series_moment_generating():
    sys = cheb_system(4)
    s = q_series(sys, 0, 5)
    assert s.coefficient((1,)) == 1
    assert s.coefficient((2,)) == 0
    assert s.coefficient((3,)) == 1
    assert s.trunc == 5


def test_q_series_leading_and_vanishing(rng):
    f = random_atom_functional(rng, 10, hankel_nonzero_upto=10)
    sys = build_ortho_system(f, 8)
    for n in range(9):
        s = q_series(sys, n, 14)
        for i in range(1, n + 1):
            assert s.coefficient((i,)) == 0
        assert s.coefficient((n + 1,)) == f.hankel_det(n + 1) / f.hankel_det(n)


def test_q_series_recurrence_coefficientwise(rng):
    f = random_atom_functional(rng, 8, hankel_nonzero_upto=8)
    sys = build_ortho_system(f, 5)
    T = 12
    from opident.ring import InverseSeries

    y = InverseSeries.plain_variable(("y",), 0)
    q0 = q_series(sys, 0, T)
    q1 = q_series(sys, 1, T)
    assert q1.equal_up_to((y - sys.s[0]) * q0 - f.moment(0), T - 1)
    for n in range(2, 6):
        lhs = q_series(sys, n, T)
        rhs = (y - sys.s[n - 1]) * q_series(sys, n - 1, T) - sys.t[n - 2] * q_series(
            sys, n - 2, T
        )
        order = min(lhs.trunc, rhs.trunc)
        assert lhs.equal_up_to(rhs, order)
        assert order >= T - 1


def test_q_series_matches_q_exact_coefficients(rng):
    # partial sums of the series converge to the exact value: the tail is
    # bounded by C sum_{i >= T-1} 9^i / y^(i+1) with C = sum |w_a p_n(u_a)|
    # since all nodes live in [-9, 9]
    f = random_atom_functional(rng, 5, hankel_nonzero_upto=5)
    sys = build_ortho_system(f, 3)
    n, T = 2, 16
    s = q_series(sys, n, T)
    y = F(100)
    partial = sum(s.coefficient((i,)) * y ** (-i) for i in range(1, T))
    err = abs(q_exact(sys, n, y) - partial)
    c_bound = sum(abs(w * sys.p(n).eval(u)) for u, w in f.atoms)
    tail_bound = c_bound * F(9, 100) ** (T - 1) / 91
    assert err <= tail_bound


# ---------------------------------------------------------------------------
# Derivatives of q
# ---------------------------------------------------------------------------

def test_q_derivative_order_zero_and_single_atom():
    single = build_ortho_system(FiniteAtomFunctional([(0, 1)]), 0)
    assert q_derivative_exact(single, 0, 0, 2) == q_exact(single, 0, 2)
    assert q_derivative_exact(single, 0, 1, 2) == F(-1, 4)


def _rational_function_derivative(num, den, order):
    """(num/den)' iterated: exact quotient-rule oracle over UniPoly pairs."""
    for _ in range(order):
        num, den = num.derivative() * den - num * den.derivative(), den * den
    return num, den


def test_q_derivative_against_symbolic_oracle(rng):
    f = random_atom_functional(rng, 6, hankel_nonzero_upto=6)
    sys = build_ortho_system(f, 4)
    y = UniPoly.variable("y")
    for n in range(4):
        # q_n(y) = A(y)/B(y) with B = prod(y - u_a)
        B = UniPoly.one("y")
        for u in f.nodes:
            B = B * (y - u)
        A = UniPoly.zero("y")
        for u, w in f.atoms:
            term = UniPoly.constant(w * sys.p(n).eval(u), "y")
            for v in f.nodes:
                if v != u:
                    term = term * (y - v)
            A = A + term
        for order in (1, 2, 3):
            num, den = _rational_function_derivative(A, B, order)
            for point in (F(1, 3), F(17, 4)):
                assert q_derivative_exact(sys, n, order, point) == num.eval(
                    point
                ) / den.eval(point)


def test_q_derivative_finite_difference(rng):
    # central difference with rational step h = 1/1024 is O(h^2): halving h
    # divides the error by about 4
    f = random_atom_functional(rng, 5, hankel_nonzero_upto=5)
    sys = build_ortho_system(f, 3)
    y = F(31, 3)
    h = F(1, 1024)
    exact = q_derivative_exact(sys, 2, 1, y)

    def fd(step):
        return (q_exact(sys, 2, y + step) - q_exact(sys, 2, y - step)) / (2 * step)

    err_h = abs(fd(h) - exact)
    err_half = abs(fd(h / 2) - exact)
    assert err_h < F(1, 1024)
    if err_half:
        ratio = err_h / err_half
        assert F(7, 2) < ratio < F(9, 2)
