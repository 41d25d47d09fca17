"""Exact scalar arithmetic, polynomials, truncated inverse-power series and
division-free determinants over generic commutative rings.

The base field is the rationals, provided by :class:`fractions.Fraction`
(arbitrary precision, always reduced to coprime numerator / positive
denominator).  Every value in this module is immutable after construction and
safe to share across threads.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

Rational = Fraction

#: Degree of the zero polynomial.
NEG_INFINITY = float("-inf")

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DimensionError(ValueError):
    """A matrix has the wrong shape for the requested operation."""


def rational(value, den=None) -> Fraction:
    """Coerce ints, strings like ``"3/7"``, or Fractions to a Fraction."""
    if den is not None:
        return Fraction(value, den)
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (whitespace tolerated)."""
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    """Render ``p/q``, or just ``p`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 outside the Pascal triangle."""
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def zero_like(v):
    """Additive identity of the ring *v* lives in."""
    if isinstance(v, UniPoly):
        return UniPoly((), v.var)
    if isinstance(v, InverseSeries):
        return InverseSeries(v.variables, {}, None)
    return _ZERO


def one_like(v):
    """Multiplicative identity of the ring *v* lives in."""
    if isinstance(v, UniPoly):
        inner = one_like(v.coeffs[0]) if v.coeffs else _ONE
        return UniPoly((inner,), v.var)
    if isinstance(v, InverseSeries):
        return InverseSeries.one(v.variables)
    return _ONE


class UniPoly:
    """Dense univariate polynomial; coefficient index = exponent.

    The coefficient ring is whatever the entries are (Fraction, a UniPoly in
    another variable, ...).  In mixed arithmetic, a UniPoly with a *different*
    variable tag is treated as a scalar of the coefficient ring.  Trailing
    zero coefficients are trimmed, so the zero polynomial has an empty
    coefficient tuple and degree ``NEG_INFINITY``.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "x"):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.var = var

    @classmethod
    def zero(cls, var: str = "x") -> "UniPoly":
        return cls((), var)

    @classmethod
    def one(cls, var: str = "x") -> "UniPoly":
        return cls((_ONE,), var)

    @classmethod
    def constant(cls, c, var: str = "x") -> "UniPoly":
        return cls((c,), var)

    @classmethod
    def variable(cls, var: str = "x") -> "UniPoly":
        return cls((_ZERO, _ONE), var)

    @classmethod
    def from_coeffs(cls, coeffs, var: str = "x") -> "UniPoly":
        return cls([Fraction(c) for c in coeffs], var)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def leading_coefficient(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def _is_same_var(self, other) -> bool:
        return isinstance(other, UniPoly) and other.var == self.var

    def __add__(self, other):
        if self._is_same_var(other):
            a, b = self.coeffs, other.coeffs
            if len(a) < len(b):
                a, b = b, a
            out = list(a)
            for i, c in enumerate(b):
                out[i] = out[i] + c
            return UniPoly(out, self.var)
        # scalar from the coefficient ring
        out = list(self.coeffs) if self.coeffs else [other]
        if self.coeffs:
            out[0] = out[0] + other
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-other if isinstance(other, UniPoly) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if self._is_same_var(other):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return UniPoly((), self.var)
            out = [None] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if not x:
                    continue
                for j, y in enumerate(b):
                    p = x * y
                    out[i + j] = p if out[i + j] is None else out[i + j] + p
            return UniPoly([c if c is not None else _ZERO for c in out], self.var)
        if not other:
            return UniPoly((), self.var)
        return UniPoly([c * other for c in self.coeffs], self.var)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = UniPoly.one(self.var)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            if self.coeffs != other.coeffs:
                return False
            return self.var == other.var or len(self.coeffs) <= 1
        # scalar comparison against a constant polynomial
        if not self.coeffs:
            return not other
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs)
        return hash((self.var, self.coeffs))

    def eval(self, v):
        """Horner evaluation at *v* (any ring compatible with the coefficients)."""
        if not self.coeffs:
            return v * 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * v + c
        return acc

    def derivative(self, order: int = 1) -> "UniPoly":
        """Iterated exact formal derivative."""
        if order < 0:
            raise ValueError("derivative order must be non-negative")
        coeffs = self.coeffs
        for _ in range(order):
            coeffs = tuple(i * coeffs[i] for i in range(1, len(coeffs)))
        return UniPoly(coeffs, self.var)

    def shift(self, k: int) -> "UniPoly":
        """Multiply by var**k."""
        if not self.coeffs:
            return self
        return UniPoly((_ZERO,) * k + self.coeffs, self.var)

    def exact_div(self, divisor: "UniPoly") -> "UniPoly":
        """Exact polynomial division; raises if the remainder is nonzero.

        Requires a coefficient ring with true division (Fractions).
        """
        if not isinstance(divisor, UniPoly) or divisor.var != self.var:
            divisor = UniPoly.constant(divisor, self.var)
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dc = divisor.coeffs
        dd = len(dc) - 1
        lead = dc[-1]
        out = [_ZERO] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c / lead
            out[i - dd] = q
            for j, d in enumerate(dc):
                rem[i - dd + j] = rem[i - dd + j] - q * d
        if any(rem):
            raise ValueError("exact_div: nonzero remainder")
        return UniPoly(out, self.var)

    def rename(self, var: str) -> "UniPoly":
        return UniPoly(self.coeffs, var)

    def __repr__(self):
        return f"UniPoly({self.var!r}, {list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = self.var
            else:
                mono = f"{self.var}^{i}"
            cs = str(c)
            if mono and cs == "1":
                cs = ""
            elif mono and cs == "-1":
                cs = "-"
            term = f"{cs}*{mono}" if cs not in ("", "-") and mono else cs + mono
            parts.append(term)
        text = " + ".join(parts).replace("+ -", "- ")
        return text


class InverseSeries:
    """Truncated formal series in inverse variables 1/y_1, ..., 1/y_k.

    A term maps an exponent vector ``e`` to a coefficient; the monomial is
    ``prod y_l^(-e_l)``, so positive exponents are inverse powers.  Negative
    entries (plain powers of y_l) are allowed and stay bounded below --- the
    n < k matrices of the identity need them.  ``trunc`` is the knowledge
    horizon: coefficients are stored and trusted only for total degree
    < trunc, while ``trunc=None`` marks an exact series.  Arithmetic tracks
    the horizon: addition keeps the smaller one, multiplication shifts each
    operand's horizon by the other's valuation and takes the minimum.

    ``cap`` is an optional working ceiling that rides along through
    arithmetic: results never keep terms at or above it.  Discarding that
    knowledge is always sound (trunc is a lower bound on validity); the
    verifiers use it so that intermediate determinant products do not
    accumulate coefficients the final comparison cannot use.  Capped at 4
    variables.
    """

    __slots__ = ("variables", "terms", "trunc", "cap")

    MAX_VARIABLES = 4

    def __init__(self, variables, terms, trunc, cap=None):
        variables = tuple(variables)
        if len(variables) > self.MAX_VARIABLES:
            raise ValueError(f"at most {self.MAX_VARIABLES} inverse variables supported")
        if trunc is not None and trunc <= 0:
            raise ValueError("truncation order must be positive")
        if cap is not None and (trunc is None or trunc > cap):
            trunc = cap
        clean = {}
        for e, c in terms.items():
            if not c:
                continue
            if len(e) != len(variables):
                raise ValueError("exponent vector length does not match variables")
            if trunc is None or sum(e) < trunc:
                clean[tuple(e)] = c
        self.variables = variables
        self.terms = clean
        self.trunc = trunc
        self.cap = cap

    @classmethod
    def _make(cls, variables, terms, trunc, cap):
        # Internal fast constructor: terms already clean (no zeros, inside trunc).
        self = object.__new__(cls)
        self.variables = variables
        self.terms = terms
        self.trunc = trunc
        self.cap = cap
        return self

    @staticmethod
    def _merge_caps(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, variables, trunc=None, cap=None) -> "InverseSeries":
        return cls(variables, {}, trunc, cap)

    @classmethod
    def one(cls, variables) -> "InverseSeries":
        return cls.constant(variables, _ONE)

    @classmethod
    def constant(cls, variables, c, trunc=None, cap=None) -> "InverseSeries":
        zero_exp = (0,) * len(tuple(variables))
        return cls(variables, {zero_exp: c}, trunc, cap)

    @classmethod
    def monomial(cls, variables, exps, coeff=_ONE, trunc=None, cap=None) -> "InverseSeries":
        return cls(variables, {tuple(exps): coeff}, trunc, cap)

    @classmethod
    def inverse_variable(cls, variables, slot: int) -> "InverseSeries":
        """The exact series 1/y_slot."""
        exps = [0] * len(tuple(variables))
        exps[slot] = 1
        return cls.monomial(variables, exps)

    @classmethod
    def plain_variable(cls, variables, slot: int) -> "InverseSeries":
        """The exact series y_slot (Laurent direction)."""
        exps = [0] * len(tuple(variables))
        exps[slot] = -1
        return cls.monomial(variables, exps)

    # -- inspection ---------------------------------------------------
    @property
    def is_exact(self) -> bool:
        return self.trunc is None

    @property
    def is_exact_zero(self) -> bool:
        return self.trunc is None and not self.terms

    def valuation(self):
        """Minimal total degree of a stored term, or None for no terms."""
        if not self.terms:
            return None
        return min(sum(e) for e in self.terms)

    def _val_lb(self) -> int:
        # Lower bound on the valuation, used for truncation bookkeeping.
        v = self.valuation()
        if v is not None:
            return v
        return self.trunc if self.trunc is not None else 0

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), _ZERO)

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, InverseSeries):
            if other.variables != self.variables:
                raise ValueError("series variable mismatch")
            return other
        return InverseSeries.constant(self.variables, other)

    def __add__(self, other):
        other = self._coerce(other)
        if self.trunc is None:
            trunc = other.trunc
        elif other.trunc is None:
            trunc = self.trunc
        else:
            trunc = min(self.trunc, other.trunc)
        cap = self._merge_caps(self.cap, other.cap)
        out = dict(self.terms)
        for e, c in other.terms.items():
            prev = out.get(e)
            s = c if prev is None else prev + c
            if s:
                out[e] = s
            elif prev is not None:
                del out[e]
        if trunc is not None and (self.trunc != trunc or other.trunc != trunc):
            out = {e: c for e, c in out.items() if sum(e) < trunc}
        return InverseSeries._make(self.variables, out, trunc, cap)

    __radd__ = __add__

    def __neg__(self):
        return InverseSeries._make(
            self.variables, {e: -c for e, c in self.terms.items()}, self.trunc, self.cap
        )

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, InverseSeries):
            if not other:
                return InverseSeries._make(self.variables, {}, None, self.cap)
            return InverseSeries._make(
                self.variables,
                {e: c * other for e, c in self.terms.items()},
                self.trunc,
                self.cap,
            )
        if other.variables != self.variables:
            raise ValueError("series variable mismatch")
        cap = self._merge_caps(self.cap, other.cap)
        if self.is_exact_zero or other.is_exact_zero:
            return InverseSeries._make(self.variables, {}, None, cap)
        bounds = []
        if self.trunc is not None:
            bounds.append(self.trunc + other._val_lb())
        if other.trunc is not None:
            bounds.append(other.trunc + self._val_lb())
        trunc = min(bounds) if bounds else None
        if cap is not None and (trunc is None or trunc > cap):
            trunc = cap
        a = [(e, sum(e), c) for e, c in self.terms.items()]
        b = sorted(((e, sum(e), c) for e, c in other.terms.items()), key=lambda t: t[1])
        nvars = len(self.variables)
        out = {}
        get = out.get
        for e1, d1, c1 in a:
            limit = None if trunc is None else trunc - d1
            if nvars == 1:
                x1 = e1[0]
                for e2, d2, c2 in b:
                    if limit is not None and d2 >= limit:
                        break
                    e = (x1 + e2[0],)
                    p = c1 * c2
                    prev = get(e)
                    out[e] = p if prev is None else prev + p
            elif nvars == 2:
                x1, y1 = e1
                for e2, d2, c2 in b:
                    if limit is not None and d2 >= limit:
                        break
                    e = (x1 + e2[0], y1 + e2[1])
                    p = c1 * c2
                    prev = get(e)
                    out[e] = p if prev is None else prev + p
            else:
                for e2, d2, c2 in b:
                    if limit is not None and d2 >= limit:
                        break
                    e = tuple(x + y for x, y in zip(e1, e2))
                    p = c1 * c2
                    prev = get(e)
                    out[e] = p if prev is None else prev + p
        out = {e: c for e, c in out.items() if c}
        return InverseSeries._make(self.variables, out, trunc, cap)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a series")
        out = InverseSeries.one(self.variables)
        for _ in range(e):
            out = out * self
        return out

    # -- comparison ---------------------------------------------------
    def compared_order(self, other) -> int | None:
        other = self._coerce(other)
        if self.trunc is None:
            return other.trunc
        if other.trunc is None:
            return self.trunc
        return min(self.trunc, other.trunc)

    def first_difference(self, other, order=None):
        """First exponent vector (degree-lex order) whose coefficients differ
        below *order*, or None if the series agree there."""
        other = self._coerce(other)
        limit = self.compared_order(other)
        if order is not None:
            limit = order if limit is None else min(limit, order)
        keys = set(self.terms) | set(other.terms)
        for e in sorted(keys, key=lambda e: (sum(e), e)):
            if limit is not None and sum(e) >= limit:
                continue
            if self.terms.get(e, _ZERO) != other.terms.get(e, _ZERO):
                return e
        return None

    def equal_up_to(self, other, order=None) -> bool:
        return self.first_difference(other, order) is None

    def __eq__(self, other):
        if not isinstance(other, InverseSeries):
            try:
                other = self._coerce(other)
            except ValueError:
                return NotImplemented
        if self.variables != other.variables:
            return False
        return self.equal_up_to(other)

    __hash__ = None

    def __str__(self):
        def mono(e):
            bits = []
            for tag, p in zip(self.variables, e):
                if p:
                    bits.append(f"{tag}^{-p}")
            return "*".join(bits) if bits else "1"

        items = sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        body = " + ".join(f"{c}*{mono(e)}" for e, c in items) if items else "0"
        tail = "" if self.trunc is None else f" + O(deg {self.trunc})"
        return body.replace("+ -", "- ") + tail

    def __repr__(self):
        return f"InverseSeries({self.variables!r}, {self.terms!r}, trunc={self.trunc!r})"


class RingMatrix:
    """Immutable row-major matrix over one coefficient ring.

    The 0x0 matrix is valid; its determinant is the ring's one.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionError(f"need {rows}x{cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows) -> "RingMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise DimensionError("ragged rows")
        return cls(n, m, [c for r in rows for c in r])

    def get(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def delete(self, drop_rows=(), drop_cols=()) -> "RingMatrix":
        dr, dc = set(drop_rows), set(drop_cols)
        rows = [
            [self.get(i, j) for j in range(self.cols) if j not in dc]
            for i in range(self.rows)
            if i not in dr
        ]
        return RingMatrix.from_rows(rows) if rows else RingMatrix(0, 0, ())

    def __eq__(self, other):
        return (
            isinstance(other, RingMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    __hash__ = None

    def __repr__(self):
        return f"RingMatrix({self.rows}x{self.cols})"


def _require_square(m: RingMatrix):
    if not m.is_square:
        raise DimensionError(f"determinant of a {m.rows}x{m.cols} matrix")


def det_cofactor(m: RingMatrix, one=_ONE):
    """Plain Laplace expansion along the first row.  The oracle: slow,
    division-free, obviously correct."""
    _require_square(m)

    def rec(rows):
        n = len(rows)
        if n == 0:
            return one
        if n == 1:
            return rows[0][0]
        acc = None
        for j in range(n):
            c = rows[0][j]
            if not c:
                continue
            sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = c * rec(sub)
            if j % 2:
                term = -term
            acc = term if acc is None else acc + term
        return acc if acc is not None else rows[0][0] - rows[0][0]

    return rec(m.to_rows())


def det_berkowitz(m: RingMatrix, one=_ONE):
    """Berkowitz's division-free determinant.

    Works over any commutative ring, including rings with zero divisors
    (truncated series) and rings without division (polynomials).  Computes
    the characteristic polynomial of each trailing principal submatrix via
    Toeplitz products; det A = (-1)^n * (constant coefficient).
    """
    _require_square(m)
    n = m.rows
    if n == 0:
        return one
    a = m.to_rows()
    zero = one - one
    poly = [one, -a[n - 1][n - 1]]
    for i in range(n - 2, -1, -1):
        t = n - 1 - i
        row_i = a[i]
        # First column of the (t+2) x (t+1) Toeplitz factor:
        # [1, -a_ii, -R C, -R B C, ..., -R B^(t-1) C]
        col = [one, -row_i[i]]
        v = [a[r][i] for r in range(i + 1, n)]
        for step in range(t):
            dot = None
            for r in range(t):
                c = row_i[i + 1 + r]
                if not c or not v[r]:
                    continue
                term = c * v[r]
                dot = term if dot is None else dot + term
            col.append(-dot if dot is not None else zero)
            if step < t - 1:
                v = [
                    _dot([a[i + 1 + r][i + 1 + s] for s in range(t)], v, zero)
                    for r in range(t)
                ]
        new = []
        for r in range(t + 2):
            acc = None
            for s in range(min(r, t) + 1):
                if r - s > t + 1 or r - s >= len(col):
                    continue
                c = col[r - s]
                if not c or not poly[s]:
                    continue
                term = c * poly[s]
                acc = term if acc is None else acc + term
            new.append(acc if acc is not None else zero)
        poly = new
    det = poly[-1]
    return -det if n % 2 else det


def _dot(row, vec, zero):
    acc = None
    for c, v in zip(row, vec):
        if not c or not v:
            continue
        term = c * v
        acc = term if acc is None else acc + term
    return acc if acc is not None else zero


def _det_subset_expansion(m: RingMatrix, one):
    """First-row expansion with minors memoized over column subsets.

    n * 2^(n-1) ring multiplications; good for the small series matrices.
    """
    n = m.rows
    if n == 0:
        return one
    a = m.to_rows()
    zero = one - one
    # minors[mask] = det of the submatrix on the last popcount(mask) rows
    # and the column set encoded by mask
    minors = {1 << j: a[n - 1][j] for j in range(n)}
    for r in range(2, n + 1):
        row = a[n - r]
        new = {}
        for cols in combinations(range(n), r):
            mask = 0
            for j in cols:
                mask |= 1 << j
            acc = None
            for idx, j in enumerate(cols):
                c = row[j]
                if not c:
                    continue
                term = c * minors[mask ^ (1 << j)]
                if idx % 2:
                    term = -term
                acc = term if acc is None else acc + term
            new[mask] = acc if acc is not None else zero
        minors = new
    return minors[(1 << n) - 1]


def det_generic(m: RingMatrix, one=_ONE):
    """Division-free determinant over any commutative ring.

    Dimension <= 4 uses memoized cofactor expansion, larger matrices use
    Berkowitz; both agree exactly with the plain cofactor oracle.
    """
    _require_square(m)
    if m.rows <= 4:
        return _det_subset_expansion(m, one)
    return det_berkowitz(m, one)


def det_rational(m: RingMatrix) -> Fraction:
    """Fraction-free Bareiss determinant, fast path for rational matrices.

    Rows are scaled to integers first, so the elimination runs on plain
    Python ints; agrees exactly with det_generic.
    """
    _require_square(m)
    n = m.rows
    if n == 0:
        return _ONE
    a = []
    denom_scale = 1
    for i in range(n):
        row = [Fraction(x) for x in m.row(i)]
        l = 1
        for x in row:
            l = l * x.denominator // math.gcd(l, x.denominator)
        a.append([x.numerator * (l // x.denominator) for x in row])
        denom_scale *= l
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return _ZERO
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1], denom_scale)


def vandermonde_product(values):
    """prod_{i<j} (v_j - v_i); empty and singleton lists give 1."""
    values = list(values)
    prod = None
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            f = values[j] - values[i]
            prod = f if prod is None else prod * f
    return prod if prod is not None else _ONE


def interp_coeffs(xs, ys):
    """Coefficients (ascending) of the unique polynomial of degree < len(xs)
    through the points (xs[i], ys[i]).

    Newton divided differences: the xs must be distinct rationals, while the
    ys may live in any ring that supports addition and scaling by Fractions.
    """
    xs = [Fraction(x) for x in xs]
    k = len(xs)
    if k == 0:
        return []
    dd = list(ys)
    for level in range(1, k):
        for i in range(k - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) * (_ONE / (xs[i] - xs[i - level]))
    coeffs = [dd[k - 1]]
    for i in range(k - 2, -1, -1):
        nxt = [dd[i] + coeffs[0] * (-xs[i])]
        for d in range(1, len(coeffs) + 1):
            prev = coeffs[d] if d < len(coeffs) else None
            shifted = coeffs[d - 1]
            term = shifted if prev is None else prev * (-xs[i]) + shifted
            nxt.append(term)
        coeffs = nxt
    return coeffs


def interp_unipoly(xs, ys, var: str = "x") -> UniPoly:
    """Interpolate rational-valued points into a UniPoly."""
    return UniPoly(interp_coeffs(xs, ys), var)
