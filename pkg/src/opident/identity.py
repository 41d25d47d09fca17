"""The determinant identity for rationally modified moments, its confluent
variant, the Uvarov construction, and the condensation identities.

Everything here compares two independently computed sides of an exact
identity.  The left-hand side is always a Hankel determinant of modified
moments; the right-hand side is a determinant of orthogonal polynomials p
and second-kind functions q arranged as

    rows:     p_{n-k+j-1}(x_i)  (one row per x), then q_{n-k+j-1}(y_i),
    columns:  j = 1 .. k+m,

with the conventions p_b = 0 and q_b(y) = y^(-b-1) for b < 0, which for
n < k turn the top-left block into the power-column matrix (and make
the n = k boundary case of that matrix coincide with the plain one).  The
right-hand side carries the sign (-1)^(n(m-k)+km) and is divided by the
oriented Vandermonde products prod(x_j - x_i) and prod(y_i - y_j).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .moments import (
    FiniteAtomFunctional,
    ModeError,
    MomentHorizonError,
    PoleAtAtomError,
    random_atom_functional,
    random_sequence_functional,
)
from .orthopoly import (
    DegenerateFunctionalError,
    OrthoSystem,
    build_ortho_system,
    q_derivative_exact,
    q_exact,
    q_series,
)
from .ring import (
    InverseSeries,
    RingMatrix,
    UniPoly,
    binomial,
    det_generic,
    det_rational,
    format_rational,
    interp_unipoly,
    vandermonde_product,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ConfluentRequiredError(ValueError):
    """Coincident x or y parameters in the plain (non-confluent) identity."""


def theorem1_sign(n: int, k: int, m: int) -> int:
    return -1 if (n * (m - k) + k * m) % 2 else 1


def _y_vandermonde(ys) -> Fraction:
    """prod_{i<j} (y_i - y_j) --- note the reversed orientation."""
    ys = list(ys)
    prod = _ONE
    for i in range(len(ys)):
        for j in range(i + 1, len(ys)):
            prod *= ys[i] - ys[j]
    return prod


def _work_truncation(truncation: int, k: int) -> int:
    # Headroom so that multiplying by the Laurent y-Vandermonde (valuation
    # -binom(k,2)) and the power columns of the n < k matrix cannot push the
    # reliable order below the requested one.
    return truncation + binomial(k, 2)


@dataclass(frozen=True)
class IdentityInstance:
    """One (n, k, m) instance of the identity.

    In atom mode the ys are rationals (distinct, away from the atoms); in
    series mode they are the names of formal inverse variables.
    """

    n: int
    xs: tuple = ()
    ys: tuple = ()
    mode: str = "atom"
    truncation: int = 25

    def __post_init__(self):
        if self.mode not in ("atom", "series"):
            raise ValueError("mode must be 'atom' or 'series'")
        xs = tuple(Fraction(x) for x in self.xs)
        object.__setattr__(self, "xs", xs)
        if len(set(xs)) != len(xs):
            raise ConfluentRequiredError("repeated x parameters: use the confluent form")
        if self.mode == "atom":
            ys = tuple(Fraction(y) for y in self.ys)
            object.__setattr__(self, "ys", ys)
            if len(set(ys)) != len(ys):
                raise ConfluentRequiredError("repeated y parameters: use the confluent form")
        else:
            ys = tuple(self.ys)
            object.__setattr__(self, "ys", ys)
            if not ys:
                raise ValueError(
                    "series mode needs at least one formal y; with k = 0 use "
                    "atom mode (it needs no finite-atom backend then)"
                )
            if not all(isinstance(y, str) for y in ys):
                raise ValueError("series mode takes inverse-variable names for ys")
            if len(set(ys)) != len(ys):
                raise ValueError("series variable names must be distinct")

    @property
    def k(self) -> int:
        return len(self.ys)

    @property
    def m(self) -> int:
        return len(self.xs)

    def params(self) -> dict:
        ys = [y if isinstance(y, str) else format_rational(y) for y in self.ys]
        return {
            "n": self.n,
            "k": self.k,
            "m": self.m,
            "xs": [format_rational(x) for x in self.xs],
            "ys": ys,
            "mode": self.mode,
        }


@dataclass
class VerificationReport:
    """Outcome of one identity check: parameters, both sides, exact verdict.

    In series mode ``compared_order`` records the total inverse degree up to
    which the coefficients were actually compared.  ``elapsed`` is wall time
    and is deliberately left out of the JSON form (reports must be
    byte-deterministic for a fixed configuration).
    """

    identity: str
    params: dict
    lhs: object
    rhs: object
    equal: bool
    compared_order: int | None = None
    elapsed: float = 0.0
    note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": self.params,
            "lhs": _jsonify(self.lhs, self.equal),
            "rhs": _jsonify(self.rhs, self.equal),
            "equal": self.equal,
            "compared_order": self.compared_order,
            "note": self.note,
        }


def _jsonify(value, equal: bool):
    if value is None:
        return None
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, InverseSeries):
        # Full series strings only matter for counterexamples.
        return "(series)" if equal else str(value)
    return str(value)


_DOMAIN_ERRORS = (
    PoleAtAtomError,
    DegenerateFunctionalError,
    MomentHorizonError,
    ModeError,
    ConfluentRequiredError,
)


# ---------------------------------------------------------------------------
# Theorem-1 matrices
# ---------------------------------------------------------------------------

def _q_entry_atom(sys: OrthoSystem, b: int, y: Fraction):
    if b < 0:
        return y ** (-b - 1)
    return q_exact(sys, b, y)


def _theorem1_matrix(sys: OrthoSystem, inst: IdentityInstance) -> RingMatrix:
    n, k, m = inst.n, inst.k, inst.m
    size = k + m
    if size == 0:
        return RingMatrix(0, 0, ())
    top = n + m - 1
    if top > sys.depth:
        raise ValueError(f"system depth {sys.depth} < required {top}")
    rows = []
    if inst.mode == "atom":
        for x in inst.xs:
            rows.append([sys.p_value(n - k + j - 1, x) for j in range(1, size + 1)])
        for y in inst.ys:
            rows.append([_q_entry_atom(sys, n - k + j - 1, y) for j in range(1, size + 1)])
        return RingMatrix.from_rows(rows)
    variables = inst.ys
    wt = _work_truncation(inst.truncation, k)
    for x in inst.xs:
        rows.append(
            [
                InverseSeries.constant(variables, sys.p_value(n - k + j - 1, x))
                for j in range(1, size + 1)
            ]
        )
    for slot in range(k):
        row = []
        for j in range(1, size + 1):
            b = n - k + j - 1
            if b < 0:
                exps = [0] * k
                exps[slot] = b + 1  # y^(-b-1) in the Laurent direction
                row.append(InverseSeries.monomial(variables, exps))
            else:
                row.append(q_series(sys, b, wt, variables, slot))
        rows.append(row)
    return RingMatrix.from_rows(rows)


def matrix_M(sys: OrthoSystem, inst: IdentityInstance) -> RingMatrix:
    """The n >= k matrix: p-rows over q-rows, columns indexed n-k .. n+m-1."""
    if inst.n < inst.k:
        raise ValueError("matrix_M needs n >= k; use matrix_N")
    return _theorem1_matrix(sys, inst)


def matrix_N(sys: OrthoSystem, inst: IdentityInstance) -> RingMatrix:
    """The n < k matrix: k-n power columns, then p_0..p_{n+m-1} / q_0..q_{n+m-1}.

    Built through the negative-index conventions, so matrix_N at n = k is
    literally matrix_M (the boundary interpretation the induction needs).
    """
    if inst.n > inst.k:
        raise ValueError("matrix_N needs n <= k; use matrix_M")
    return _theorem1_matrix(sys, inst)


# ---------------------------------------------------------------------------
# The two sides
# ---------------------------------------------------------------------------

def lhs_theorem1(sys: OrthoSystem, inst: IdentityInstance):
    """det of modified moments, divided by H(n-k) when n >= k."""
    f = sys.functional
    n, k = inst.n, inst.k
    if inst.mode == "atom":
        d = f.modified_hankel_det(n, inst.xs, inst.ys)
    else:
        d = f.modified_hankel_det_series(
            n, inst.xs, inst.ys, _work_truncation(inst.truncation, k)
        )
    if n >= k:
        h = f.hankel_det(n - k)
        if not h:
            raise DegenerateFunctionalError(n - k)
        return d * (_ONE / h) if inst.mode == "series" else d / h
    return d


def rhs_theorem1(sys: OrthoSystem, inst: IdentityInstance):
    """(-1)^(n(m-k)+km) det(M or N) / (prod(x_j-x_i) prod(y_i-y_j)).

    Series mode is limited to k <= 1 here: for k >= 2 the y-Vandermonde is
    not invertible in the truncated ring, and verify_theorem1 compares the
    denominator-cleared form instead.
    """
    sign = theorem1_sign(inst.n, inst.k, inst.m)
    mat = _theorem1_matrix(sys, inst)
    if inst.mode == "atom":
        vx = vandermonde_product(inst.xs)
        vy = _y_vandermonde(inst.ys)
        if not vx or not vy:
            raise ConfluentRequiredError("coincident parameters")
        return sign * det_rational(mat) / (vx * vy)
    if inst.k > 1:
        raise ModeError(
            "series-mode rhs needs k <= 1; verify_theorem1 checks the cleared form"
        )
    vx = vandermonde_product(inst.xs)
    one = InverseSeries.one(inst.ys)
    return det_generic(mat, one=one) * (sign / vx)


def _series_cleared_sides(sys: OrthoSystem, inst: IdentityInstance):
    """Denominator-cleared series comparison:

        Vx * Vy * det(modified moments)  ==  sign * H(n-k) * det(M or N)

    (H factor only for n >= k).  Multiplication-only, so both sides stay in
    the Laurent-truncated ring; returns (lhs, rhs, compared order).
    """
    f = sys.functional
    n, k = inst.n, inst.k
    variables = inst.ys
    wt = _work_truncation(inst.truncation, k)
    lhs_det = f.modified_hankel_det_series(n, inst.xs, variables, wt)
    vy = InverseSeries.one(variables)
    for i in range(k):
        for j in range(i + 1, k):
            vy = vy * (
                InverseSeries.plain_variable(variables, i)
                - InverseSeries.plain_variable(variables, j)
            )
    lhs = lhs_det * vy * vandermonde_product(inst.xs)
    rhs = det_generic(_theorem1_matrix(sys, inst), one=InverseSeries.one(variables))
    sign = theorem1_sign(n, k, inst.m)
    factor = Fraction(sign)
    if n >= k:
        h = f.hankel_det(n - k)
        if not h:
            raise DegenerateFunctionalError(n - k)
        factor *= h
    rhs = rhs * factor
    order = inst.truncation
    for side in (lhs, rhs):
        if side.trunc is not None:
            order = min(order, side.trunc)
    return lhs, rhs, order


def verify_theorem1(sys: OrthoSystem, inst: IdentityInstance) -> VerificationReport:
    """Compare both sides of the identity; errors become failed reports."""
    t0 = time.perf_counter()
    params = inst.params()
    try:
        if inst.mode == "atom":
            lhs = lhs_theorem1(sys, inst)
            rhs = rhs_theorem1(sys, inst)
            equal = lhs == rhs
            order = None
            note = ""
        else:
            lhs, rhs, order = _series_cleared_sides(sys, inst)
            diff = lhs.first_difference(rhs, order)
            equal = diff is None
            note = "denominator-cleared comparison"
            if diff is not None:
                note += f"; first differing coefficient at exponents {diff}"
    except _DOMAIN_ERRORS as exc:
        return VerificationReport(
            "theorem1", params, None, None, False,
            elapsed=time.perf_counter() - t0, note=f"error: {exc}",
        )
    return VerificationReport(
        "theorem1", params, lhs, rhs, equal, order,
        elapsed=time.perf_counter() - t0, note=note,
    )


# ---------------------------------------------------------------------------
# Confluent (repeated-parameter) variant
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConfluentInstance:
    """Repeated parameters with multiplicities: xi = ((value, mult), ...),
    omega likewise; values pairwise distinct inside each list."""

    n: int
    xi: tuple = ()
    omega: tuple = ()

    def __post_init__(self):
        xi = tuple((Fraction(v), int(c)) for v, c in self.xi)
        omega = tuple((Fraction(v), int(c)) for v, c in self.omega)
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "omega", omega)
        for values in (xi, omega):
            if any(c < 1 for _, c in values):
                raise ValueError("multiplicities must be >= 1")
            vals = [v for v, _ in values]
            if len(set(vals)) != len(vals):
                raise ValueError("confluent base points must be pairwise distinct")

    @property
    def m(self) -> int:
        return sum(c for _, c in self.xi)

    @property
    def k(self) -> int:
        return sum(c for _, c in self.omega)

    def repeated_xs(self):
        return tuple(v for v, c in self.xi for _ in range(c))

    def repeated_ys(self):
        return tuple(v for v, c in self.omega for _ in range(c))

    def params(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "m": self.m,
            "xi": [[format_rational(v), c] for v, c in self.xi],
            "omega": [[format_rational(v), c] for v, c in self.omega],
        }


def confluent_matrix(sys: OrthoSystem, inst: ConfluentInstance) -> RingMatrix:
    """Stacked derivative blocks: for each xi with multiplicity a the rows
    p^(i-1)_{n-k+j-1}(xi)/(i-1)!, i = 1..a, then the q-analogues; negative
    column indices follow the p_b = 0, q_b(w) = w^(-b-1) conventions."""
    n, k, m = inst.n, inst.k, inst.m
    size = k + m
    if size == 0:
        return RingMatrix(0, 0, ())
    if n + m - 1 > sys.depth:
        raise ValueError(f"system depth {sys.depth} < required {n + m - 1}")
    rows = []
    for xi, mult in inst.xi:
        for i in range(1, mult + 1):
            fact = Fraction(1, _factorial(i - 1))
            row = []
            for j in range(1, size + 1):
                b = n - k + j - 1
                if b < 0:
                    row.append(_ZERO)
                else:
                    row.append(sys.p(b).derivative(i - 1).eval(xi) * fact)
            rows.append(row)
    for omega, mult in inst.omega:
        for i in range(1, mult + 1):
            fact = Fraction(1, _factorial(i - 1))
            row = []
            for j in range(1, size + 1):
                b = n - k + j - 1
                if b < 0:
                    e = -b - 1  # q_b(w) = w^e; scaled derivative is binom(e, i-1) w^(e-i+1)
                    c = binomial(e, i - 1)
                    row.append(Fraction(c) * omega ** (e - (i - 1)) if c else _ZERO)
                else:
                    row.append(q_derivative_exact(sys, b, i - 1, omega) * fact)
            rows.append(row)
    return RingMatrix.from_rows(rows)


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def rhs_prop13(sys: OrthoSystem, inst: ConfluentInstance) -> Fraction:
    """Confluent right-hand side.

    Denominators are prod(xi_j - xi_i)^(m_i m_j) and the reversed
    prod(omega_i - omega_j)^(k_i k_j).  On top of the plain sign, each
    omega-block of multiplicity a contributes (-1)^binom(a, 2): the reversed
    y-orientation flips every second divided-difference row in the limit
    (verified against the directly computed left-hand side; the plain
    statement of the confluent matrix omits this factor).
    """
    n, k, m = inst.n, inst.k, inst.m
    d = det_rational(confluent_matrix(sys, inst))
    den = _ONE
    for i in range(len(inst.xi)):
        for j in range(i + 1, len(inst.xi)):
            den *= (inst.xi[j][0] - inst.xi[i][0]) ** (inst.xi[i][1] * inst.xi[j][1])
    for i in range(len(inst.omega)):
        for j in range(i + 1, len(inst.omega)):
            den *= (inst.omega[i][0] - inst.omega[j][0]) ** (
                inst.omega[i][1] * inst.omega[j][1]
            )
    parity = n * (m - k) + k * m + sum(binomial(c, 2) for _, c in inst.omega)
    sign = -1 if parity % 2 else 1
    return sign * d / den


def verify_prop13(sys: OrthoSystem, inst: ConfluentInstance) -> VerificationReport:
    """Confluent identity vs the directly computed left-hand side.

    The LHS integrand has no Vandermonde singularity, so repeated parameters
    are evaluated directly --- no limits involved.
    """
    t0 = time.perf_counter()
    params = inst.params()
    f = sys.functional
    try:
        d = f.modified_hankel_det(inst.n, inst.repeated_xs(), inst.repeated_ys())
        if inst.n >= inst.k:
            h = f.hankel_det(inst.n - inst.k)
            if not h:
                raise DegenerateFunctionalError(inst.n - inst.k)
            lhs = d / h
        else:
            lhs = d
        rhs = rhs_prop13(sys, inst)
    except _DOMAIN_ERRORS as exc:
        return VerificationReport(
            "prop13", params, None, None, False,
            elapsed=time.perf_counter() - t0, note=f"error: {exc}",
        )
    return VerificationReport(
        "prop13", params, lhs, rhs, lhs == rhs, elapsed=time.perf_counter() - t0
    )


# ---------------------------------------------------------------------------
# Uvarov construction
# ---------------------------------------------------------------------------

def uvarov_polynomial(
    sys: OrthoSystem, n: int, xs_fixed=(), ys=(), var: str = "x1"
) -> tuple[UniPoly, bool]:
    """Right-hand side of the identity with x_1 left formal: a polynomial
    in x_1 that (when its degree is n) is the n-th orthogonal polynomial for
    the modified density prod_{l>=2}(u - x_l) / prod(u - y_l) dmu.

    Returns (polynomial, degree_ok); a degree below n is reported, never
    silently accepted.
    """
    if not isinstance(sys.functional, FiniteAtomFunctional):
        raise ModeError("the Uvarov construction needs a finite-atom functional")
    xs_fixed = tuple(Fraction(x) for x in xs_fixed)
    ys = tuple(Fraction(y) for y in ys)
    m = 1 + len(xs_fixed)
    k = len(ys)
    if n + m - 1 > sys.depth:
        raise ValueError(f"system depth {sys.depth} < required {n + m - 1}")
    size = k + m
    one = UniPoly.one(var)
    rows = []
    formal_row = []
    for j in range(1, size + 1):
        b = n - k + j - 1
        formal_row.append(UniPoly.zero(var) if b < 0 else sys.p(b).rename(var))
    rows.append(formal_row)
    for x in xs_fixed:
        rows.append(
            [UniPoly.constant(sys.p_value(n - k + j - 1, x), var) for j in range(1, size + 1)]
        )
    for y in ys:
        rows.append(
            [
                UniPoly.constant(_q_entry_atom(sys, n - k + j - 1, y), var)
                for j in range(1, size + 1)
            ]
        )
    d = det_generic(RingMatrix.from_rows(rows), one=one)
    # x-Vandermonde with x_1 formal: prod_{j>=2} (x_j - x_1) times the fixed part
    x1 = UniPoly.variable(var)
    vx = one
    for x in xs_fixed:
        vx = vx * (UniPoly.constant(x, var) - x1)
    vx = vx * vandermonde_product(xs_fixed)
    vy = _y_vandermonde(ys)
    sign = theorem1_sign(n, k, m)
    poly = d.exact_div(vx) * (sign / vy)
    return poly, poly.degree == n


@dataclass
class UvarovResult:
    """P_0..P_N for a rationally modified density, with the exact Gram
    matrix of the modified functional as the orthogonality witness."""

    polys: tuple
    degree_ok: tuple
    gram: RingMatrix
    modified: FiniteAtomFunctional

    @property
    def orthogonal(self) -> bool:
        n = self.gram.rows
        return all(
            not self.gram.get(i, j) for i in range(n) for j in range(n) if i != j
        )


def modified_functional(
    f: FiniteAtomFunctional, xs_fixed=(), ys=()
) -> FiniteAtomFunctional:
    """The finite-atom functional of the density prod_{l>=2}(u-x_l)/prod(u-y_l) dmu."""
    xs_fixed = tuple(Fraction(x) for x in xs_fixed)
    ys = tuple(Fraction(y) for y in ys)
    atoms = []
    for u, w in f.atoms:
        for y in ys:
            if u == y:
                raise PoleAtAtomError(f"y = {format_rational(y)} is an atom node")
        scale = _ONE
        for x in xs_fixed:
            scale *= u - x
        for y in ys:
            scale /= u - y
        if not scale:
            raise ValueError(
                f"fixed x = {format_rational(u)} kills the atom at that node"
            )
        atoms.append((u, w * scale))
    return FiniteAtomFunctional(atoms)


def uvarov_system(
    f: FiniteAtomFunctional, ys=(), upto: int = 5, xs_fixed=(), var: str = "x1"
) -> UvarovResult:
    """Construct P_0..P_upto and check L'(P_i P_j) = 0 for i != j exactly."""
    depth = upto + len(xs_fixed)
    sys = build_ortho_system(f, depth)
    results = [uvarov_polynomial(sys, n, xs_fixed, ys, var) for n in range(upto + 1)]
    polys = tuple(p for p, _ in results)
    flags = tuple(ok for _, ok in results)
    mod = modified_functional(f, xs_fixed, ys)
    size = upto + 1
    gram = RingMatrix(
        size,
        size,
        [
            mod.apply((polys[i] * polys[j]).rename("x"))
            for i in range(size)
            for j in range(size)
        ],
    )
    return UvarovResult(polys, flags, gram, mod)


# ---------------------------------------------------------------------------
# Condensation identities (standalone)
# ---------------------------------------------------------------------------

def _hankel_slice_det(c, size: int, shift: int) -> Fraction:
    if size <= 0:
        return _ONE
    return det_rational(
        RingMatrix(size, size, [c[i + j + shift] for i in range(size) for j in range(size)])
    )


def _lin_det(c, size: int, var: str) -> UniPoly:
    """det(v c_{i+j} + c_{i+j+1}) as a polynomial in v (degree <= size)."""
    if size <= 0:
        return UniPoly.one(var)
    pts = [Fraction(t) for t in range(size + 1)]
    vals = []
    for v in pts:
        vals.append(
            det_rational(
                RingMatrix(
                    size,
                    size,
                    [v * c[i + j] + c[i + j + 1] for i in range(size) for j in range(size)],
                )
            )
        )
    return interp_unipoly(pts, vals, var)


def _quad_det(c, size: int) -> UniPoly:
    """det(ab c_{i+j} + (a+b) c_{i+j+1} + c_{i+j+2}) as a nested polynomial:
    outer variable "alpha" with UniPoly("beta") coefficients."""
    if size <= 0:
        return _embed_scalar(_ONE)
    pts = [Fraction(t) for t in range(size + 1)]
    columns = []
    for a0 in pts:
        vals = []
        for b0 in pts:
            vals.append(
                det_rational(
                    RingMatrix(
                        size,
                        size,
                        [
                            a0 * b0 * c[i + j] + (a0 + b0) * c[i + j + 1] + c[i + j + 2]
                            for i in range(size)
                            for j in range(size)
                        ],
                    )
                )
            )
        columns.append(interp_unipoly(pts, vals, "beta"))
    coeffs = interp_unipoly(pts, columns, "alpha").coeffs
    return UniPoly(coeffs, "alpha")


def _embed_scalar(c) -> UniPoly:
    return UniPoly([UniPoly([c], "beta")], "alpha")


def _embed_alpha(p: UniPoly) -> UniPoly:
    return UniPoly([UniPoly([c], "beta") for c in p.coeffs], "alpha")


def _embed_beta(p: UniPoly) -> UniPoly:
    return UniPoly([p], "alpha")


def _coerce_sequence(c, needed: int):
    c = [Fraction(v) for v in c]
    if len(c) < needed:
        raise ValueError(f"sequence too short: need indices up to {needed - 1}")
    return c


def lemma8_check(c, n: int) -> VerificationReport:
    """(b-a) det(ab c + (a+b) c' + c'')_{n-1} det(c)_n
       = det(a c + c')_{n-1} det(b c + c')_n - det(b c + c')_{n-1} det(a c + c')_n
    as exact polynomials in a, b (subscripts are matrix sizes)."""
    t0 = time.perf_counter()
    if n < 1:
        raise ValueError("n must be positive")
    c = _coerce_sequence(c, 2 * n)
    alpha = _embed_alpha(UniPoly.variable("alpha"))
    beta = _embed_beta(UniPoly.variable("beta"))
    lin_a_small = _embed_alpha(_lin_det(c, n - 1, "alpha"))
    lin_a_big = _embed_alpha(_lin_det(c, n, "alpha"))
    lin_b_small = _embed_beta(_lin_det(c, n - 1, "beta"))
    lin_b_big = _embed_beta(_lin_det(c, n, "beta"))
    lhs = (beta - alpha) * _quad_det(c, n - 1) * _embed_scalar(_hankel_slice_det(c, n, 0))
    rhs = lin_a_small * lin_b_big - lin_b_small * lin_a_big
    return VerificationReport(
        "lemma8", {"n": n, "c": [format_rational(v) for v in c]},
        lhs, rhs, lhs == rhs, elapsed=time.perf_counter() - t0,
    )


def lemma9_check(c, n: int) -> VerificationReport:
    """det(a c + c')_n det(b c + c')_n
       = -det(c)_{n+1} det(ab c + (a+b) c' + c'')_{n-1}
         + det(c)_n det(ab c + (a+b) c' + c'')_n
    as exact polynomials in a, b."""
    t0 = time.perf_counter()
    if n < 1:
        raise ValueError("n must be positive")
    c = _coerce_sequence(c, 2 * n + 1)
    lhs = _embed_alpha(_lin_det(c, n, "alpha")) * _embed_beta(_lin_det(c, n, "beta"))
    rhs = _quad_det(c, n) * _embed_scalar(_hankel_slice_det(c, n, 0)) - _quad_det(
        c, n - 1
    ) * _embed_scalar(_hankel_slice_det(c, n + 1, 0))
    return VerificationReport(
        "lemma9", {"n": n, "c": [format_rational(v) for v in c]},
        lhs, rhs, lhs == rhs, elapsed=time.perf_counter() - t0,
    )


def jacobi_check(a: RingMatrix, i1: int, i2: int, j1: int, j2: int) -> VerificationReport:
    """Jacobi / Dodgson condensation (1-based indices):

        det A * det A^{j1,j2}_{i1,i2}
          = det A^{j1}_{i1} det A^{j2}_{i2} - det A^{j2}_{i1} det A^{j1}_{i2}.
    """
    t0 = time.perf_counter()
    if not a.is_square:
        raise ValueError("Jacobi condensation needs a square matrix")
    nn = a.rows
    if not (1 <= i1 < i2 <= nn and 1 <= j1 < j2 <= nn):
        raise ValueError("need 1 <= i1 < i2 <= N and 1 <= j1 < j2 <= N")
    r1, r2, c1, c2 = i1 - 1, i2 - 1, j1 - 1, j2 - 1
    lhs = det_rational(a) * det_rational(a.delete((r1, r2), (c1, c2)))
    rhs = det_rational(a.delete((r1,), (c1,))) * det_rational(
        a.delete((r2,), (c2,))
    ) - det_rational(a.delete((r1,), (c2,))) * det_rational(a.delete((r2,), (c1,)))
    return VerificationReport(
        "jacobi", {"N": nn, "i": [i1, i2], "j": [j1, j2]},
        lhs, rhs, lhs == rhs, elapsed=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# Seeded verification sweeps
# ---------------------------------------------------------------------------

_XS_POOL = tuple(Fraction(p, 2) for p in range(-15, 16))
_YS_POOL = tuple(Fraction(p, 3) for p in range(-16, 17) if p % 3)
# Integer x's keep the whole modified-moment side over plain ints in series
# mode, which the truncated-series products reward handsomely.
_XS_POOL_INT = tuple(Fraction(p) for p in range(-9, 10))


def sweep_theorem1_atom(
    seed: int,
    trials: int = 100,
    max_n: int = 6,
    max_k: int = 3,
    max_m: int = 3,
    functional: FiniteAtomFunctional | None = None,
    atom_count: int = 8,
) -> list[VerificationReport]:
    """Full (n, k, m) grid per trial over seeded random atom functionals
    (y parameters are drawn with denominator 3, so they never hit the
    integer atom nodes)."""
    rng = random.Random(seed)
    depth = max_n + max_m - 1
    reports = []
    for _ in range(trials):
        f = functional
        if f is None:
            f = random_atom_functional(rng, atom_count, hankel_nonzero_upto=depth)
        sys = build_ortho_system(f, depth)
        for n in range(max_n + 1):
            for k in range(max_k + 1):
                for m in range(max_m + 1):
                    xs = tuple(rng.sample(_XS_POOL, m))
                    ys = tuple(rng.sample(_YS_POOL, k))
                    inst = IdentityInstance(n=n, xs=xs, ys=ys, mode="atom")
                    reports.append(verify_theorem1(sys, inst))
    return reports


def sweep_theorem1_series(
    seed: int,
    trials: int = 20,
    truncation: int = 25,
    max_n: int = 4,
    ks=(1, 2),
    max_m: int = 2,
) -> list[VerificationReport]:
    """Formal-series sweep over seeded random moment sequences with
    nonvanishing leading Hankel minors; coefficients are compared for every
    total inverse degree below `truncation`."""
    rng = random.Random(seed)
    depth = max_n + max_m - 1
    wt = _work_truncation(truncation, max(ks))
    horizon = 2 * max_n - 2 + max_m + wt
    reports = []
    for _ in range(trials):
        f = random_sequence_functional(rng, horizon, hankel_nonzero_upto=depth)
        sys = build_ortho_system(f, depth)
        for k in ks:
            for m in range(max_m + 1):
                for n in range(max_n + 1):
                    xs = tuple(rng.sample(_XS_POOL_INT, m))
                    variables = tuple(f"y{i+1}" for i in range(k))
                    inst = IdentityInstance(
                        n=n, xs=xs, ys=variables, mode="series", truncation=truncation
                    )
                    reports.append(verify_theorem1(sys, inst))
    return reports


_CONFLUENT_SHAPES = (
    ((2,), ()),
    ((), (2,)),
    ((2, 1), (1,)),
    ((1,), (2,)),
    ((2,), (2,)),
)


def sweep_prop13(
    seed: int,
    trials: int = 4,
    max_n: int = 5,
    atom_count: int = 8,
) -> list[VerificationReport]:
    """Confluent sweep: double x, double y, and mixed shapes, n <= max_n."""
    rng = random.Random(seed)
    max_m = max(sum(shape[0]) for shape in _CONFLUENT_SHAPES)
    depth = max_n + max_m - 1
    reports = []
    for _ in range(trials):
        f = random_atom_functional(rng, atom_count, hankel_nonzero_upto=depth)
        sys = build_ortho_system(f, depth)
        for n in range(max_n + 1):
            for x_mults, y_mults in _CONFLUENT_SHAPES:
                xs = rng.sample(_XS_POOL, len(x_mults))
                ys = rng.sample(_YS_POOL, len(y_mults))
                inst = ConfluentInstance(
                    n=n,
                    xi=tuple(zip(xs, x_mults)),
                    omega=tuple(zip(ys, y_mults)),
                )
                reports.append(verify_prop13(sys, inst))
    return reports


def sweep_lemmas(
    seed: int,
    trials: int = 10,
    max_n: int = 6,
    bound: int = 9,
) -> list[VerificationReport]:
    """Lemma 8 and Lemma 9 on random integer sequences, all n <= max_n."""
    rng = random.Random(seed)
    reports = []
    for _ in range(trials):
        c = [Fraction(rng.randint(-bound, bound)) for _ in range(2 * max_n + 1)]
        for n in range(1, max_n + 1):
            reports.append(lemma8_check(c, n))
            reports.append(lemma9_check(c, n))
    return reports


def sweep_jacobi(
    seed: int,
    sizes=(5, 6),
    bound: int = 9,
) -> list[VerificationReport]:
    """All admissible index pairs on one random matrix per size."""
    rng = random.Random(seed)
    reports = []
    for nn in sizes:
        mat = RingMatrix(
            nn, nn, [Fraction(rng.randint(-bound, bound)) for _ in range(nn * nn)]
        )
        for i1 in range(1, nn + 1):
            for i2 in range(i1 + 1, nn + 1):
                for j1 in range(1, nn + 1):
                    for j2 in range(j1 + 1, nn + 1):
                        reports.append(jacobi_check(mat, i1, i2, j1, j2))
    return reports
