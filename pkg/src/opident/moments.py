"""Moment functionals and their Hankel determinants.

A moment functional is a linear map L on polynomials, known through its
moment sequence mu_n = L(x^n).  Three backends:

* finite-atom measures (every integral is a finite rational sum),
* explicit moment sequences with a hard horizon (requests past the horizon
  raise, never silently return zero),
* the Chebyshev weight, whose even moments are the Catalan numbers.

On top of the plain moments sit the rationally modified moments
L(u^i * prod(u - x_l) / prod(u - y_l)), exact for finite-atom measures and
truncated inverse-power series for formal y's, together with the Hankel
determinants of both.
"""

from __future__ import annotations

import json
import threading
from fractions import Fraction

from .ring import (
    InverseSeries,
    RingMatrix,
    UniPoly,
    binomial,
    det_generic,
    det_rational,
    format_rational,
    parse_rational,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


class MomentHorizonError(Exception):
    """A moment beyond the backend's horizon was requested."""


class PoleAtAtomError(Exception):
    """A rational y parameter coincides with an atom node."""


class ModeError(Exception):
    """Operation not available for this backend."""


def catalan(n: int) -> int:
    """C_n = binom(2n, n) / (n + 1)."""
    return binomial(2 * n, n) // (n + 1)


def _compositions(total: int, parts: int):
    """All tuples of `parts` non-negative ints summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


class MomentFunctional:
    """Base class: linearity, Hankel determinants, modified moments."""

    def __init__(self):
        self._hankel_cache = {0: _ONE}
        self._hankel_lock = threading.Lock()

    # -- backend interface ---------------------------------------------
    @property
    def horizon(self) -> int | None:
        """Largest servable moment index, or None when unbounded."""
        return None

    def moment(self, n: int) -> Fraction:
        raise NotImplementedError

    def _require_horizon(self, n: int):
        if n < 0:
            raise ValueError("moment index must be non-negative")
        h = self.horizon
        if h is not None and n > h:
            raise MomentHorizonError(f"moment {n} requested, horizon is {h}")

    # -- linear functional ----------------------------------------------
    def apply(self, p: UniPoly) -> Fraction:
        """L(p) = sum_i coeff_i * mu_i."""
        if p.coeffs:
            self._require_horizon(len(p.coeffs) - 1)
        total = _ZERO
        for i, c in enumerate(p.coeffs):
            if c:
                total += c * self.moment(i)
        return total

    # -- Hankel determinants ---------------------------------------------
    def hankel_matrix(self, n: int) -> RingMatrix:
        if n:
            self._require_horizon(2 * n - 2)
        return RingMatrix(n, n, [self.moment(i + j) for i in range(n) for j in range(n)])

    def hankel_det(self, n: int) -> Fraction:
        """H(n) = det(mu_{i+j}), 0 <= i, j <= n-1; H(0) = 1.  Memoized."""
        cached = self._hankel_cache.get(n)
        if cached is not None:
            return cached
        with self._hankel_lock:
            cached = self._hankel_cache.get(n)
            if cached is None:
                cached = det_rational(self.hankel_matrix(n))
                self._hankel_cache[n] = cached
        return cached

    # -- modified moments --------------------------------------------------
    def modified_moment(self, i: int, xs=(), ys=()) -> Fraction:
        """L(u^i * prod(u - x_l) / prod(u - y_l)), exact.

        Rational y's need a finite-atom backend; with no y's any backend
        works (the integrand is a polynomial).
        """
        if ys:
            raise ModeError("rational y parameters need a finite-atom functional")
        return self.apply(_numerator_poly(i, xs))

    def modified_hankel_det(self, n: int, xs=(), ys=()) -> Fraction:
        if n == 0:
            return _ONE
        mm = [self.modified_moment(s, xs, ys) for s in range(2 * n - 1)]
        return det_rational(RingMatrix(n, n, [mm[i + j] for i in range(n) for j in range(n)]))

    def modified_moment_series(
        self, i: int, xs=(), variables=("y1",), truncation: int = 25
    ) -> InverseSeries:
        """Formal-series mode: each 1/(u - y_l) expands as
        -sum_t u^t y_l^(-t-1), truncated at total inverse degree `truncation`.

        The coefficient of prod y_l^(-e_l) (all e_l >= 1) is
        (-1)^k * L(u^(i + sum(e_l - 1)) * prod(u - x_l)).
        """
        variables = tuple(variables)
        k = len(variables)
        if k == 0:
            raise ValueError("series mode needs at least one inverse variable")
        if truncation <= 0:
            raise ValueError("truncation order must be positive")
        xs = tuple(Fraction(x) for x in xs)
        max_extra = truncation - 1 - k
        if max_extra < 0:
            return InverseSeries.zero(variables, truncation, cap=truncation)
        base = _numerator_poly(0, xs)
        self._require_horizon(i + len(xs) + max_extra)
        rho = [
            sum((c * self.moment(s + r) for r, c in enumerate(base.coeffs) if c), _ZERO)
            for s in range(i, i + max_extra + 1)
        ]
        # Plain ints are an order of magnitude faster than Fractions in the
        # determinant products downstream; use them whenever exactness allows.
        if all(v.denominator == 1 for v in rho):
            rho = [v.numerator for v in rho]
        sign = -1 if k % 2 else 1
        terms = {}
        for d in range(max_extra + 1):
            coeff = sign * rho[d]
            if not coeff:
                continue
            for extra in _compositions(d, k):
                terms[tuple(e + 1 for e in extra)] = coeff
        return InverseSeries(variables, terms, truncation, cap=truncation)

    def modified_hankel_det_series(
        self, n: int, xs=(), variables=("y1",), truncation: int = 25
    ) -> InverseSeries:
        variables = tuple(variables)
        if n == 0:
            return InverseSeries.one(variables)
        mm = [
            self.modified_moment_series(s, xs, variables, truncation)
            for s in range(2 * n - 1)
        ]
        mat = RingMatrix(n, n, [mm[i + j] for i in range(n) for j in range(n)])
        return det_generic(mat, one=InverseSeries.one(variables))

    # -- serialization -----------------------------------------------------
    def to_json_dict(self) -> dict:
        raise NotImplementedError

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _numerator_poly(i: int, xs) -> UniPoly:
    """u^i * prod(u - x_l) as a polynomial in u."""
    p = UniPoly.one("u").shift(i)
    u = UniPoly.variable("u")
    for x in xs:
        p = p * (u - Fraction(x))
    return p


class FiniteAtomFunctional(MomentFunctional):
    """Discrete measure sum w_a * delta(u_a): nodes pairwise distinct,
    weights nonzero.  Every integral of the theory is a finite rational sum,
    so this is the canonical exact-verification backend."""

    def __init__(self, atoms):
        super().__init__()
        atoms = tuple((Fraction(u), Fraction(w)) for u, w in atoms)
        nodes = [u for u, _ in atoms]
        if len(set(nodes)) != len(nodes):
            raise ValueError("atom nodes must be pairwise distinct")
        if any(not w for _, w in atoms):
            raise ValueError("atom weights must be nonzero")
        self.atoms = atoms
        self._moments = [sum((w for _, w in atoms), _ZERO)]
        self._powers = [_ONE] * len(atoms)

    @property
    def nodes(self):
        return tuple(u for u, _ in self.atoms)

    def moment(self, n: int) -> Fraction:
        self._require_horizon(n)
        while len(self._moments) <= n:
            self._powers = [p * u for p, (u, _) in zip(self._powers, self.atoms)]
            self._moments.append(
                sum((w * p for p, (_, w) in zip(self._powers, self.atoms)), _ZERO)
            )
        return self._moments[n]

    def modified_moment(self, i: int, xs=(), ys=()) -> Fraction:
        xs = tuple(Fraction(x) for x in xs)
        ys = tuple(Fraction(y) for y in ys)
        total = _ZERO
        for u, w in self.atoms:
            v = w * u**i
            for x in xs:
                v *= u - x
            for y in ys:
                if u == y:
                    raise PoleAtAtomError(f"y = {format_rational(y)} is an atom node")
                v /= u - y
            total += v
        return total

    def to_json_dict(self) -> dict:
        return {
            "type": "atoms",
            "atoms": [[format_rational(u), format_rational(w)] for u, w in self.atoms],
        }

    def __repr__(self):
        return f"FiniteAtomFunctional({len(self.atoms)} atoms)"


class SequenceFunctional(MomentFunctional):
    """Explicit moment list mu_0..mu_N; indices past N raise, never 0."""

    def __init__(self, moments):
        super().__init__()
        self.moments = tuple(Fraction(m) for m in moments)
        if not self.moments:
            raise ValueError("need at least mu_0")

    @classmethod
    def from_generator(cls, generator, horizon: int) -> "SequenceFunctional":
        """Materialize mu_0..mu_horizon from a callable index -> rational;
        the horizon stays hard afterwards."""
        if horizon < 0:
            raise ValueError("horizon must be non-negative")
        return cls(generator(n) for n in range(horizon + 1))

    @property
    def horizon(self) -> int:
        return len(self.moments) - 1

    def moment(self, n: int) -> Fraction:
        self._require_horizon(n)
        return self.moments[n]

    def to_json_dict(self) -> dict:
        return {"type": "sequence", "moments": [format_rational(m) for m in self.moments]}

    def __repr__(self):
        return f"SequenceFunctional(horizon={self.horizon})"


class ChebyshevCatalanFunctional(MomentFunctional):
    """Moments of the Chebyshev weight: mu_n = C_(n/2) for even n, 0 for odd."""

    def moment(self, n: int) -> Fraction:
        self._require_horizon(n)
        return Fraction(catalan(n // 2)) if n % 2 == 0 else _ZERO

    def to_json_dict(self) -> dict:
        return {"type": "chebyshev"}

    def __repr__(self):
        return "ChebyshevCatalanFunctional()"


def functional_from_json(source) -> MomentFunctional:
    """Build a functional from the JSON wire format.

    ``{"type":"atoms","atoms":[["1/2","1"],...]}`` (node, weight pairs),
    ``{"type":"sequence","moments":["1","0","1/2",...]}`` or
    ``{"type":"chebyshev"}``.  Rationals travel as strings "p/q".
    """
    obj = json.loads(source) if isinstance(source, (str, bytes)) else source
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValueError("functional JSON must be an object with a 'type' field")
    kind = obj["type"]
    if kind == "atoms":
        return FiniteAtomFunctional(
            (parse_rational(u), parse_rational(w)) for u, w in obj["atoms"]
        )
    if kind == "sequence":
        return SequenceFunctional(parse_rational(m) for m in obj["moments"])
    if kind == "chebyshev":
        return ChebyshevCatalanFunctional()
    raise ValueError(f"unknown functional type {kind!r}")


def random_atom_functional(
    rng,
    count: int = 8,
    node_bound: int = 9,
    weight_bound: int = 9,
    hankel_nonzero_upto: int | None = None,
    normalize: bool = False,
) -> FiniteAtomFunctional:
    """Seeded random finite-atom functional: distinct integer nodes in
    [-node_bound, node_bound], nonzero integer weights; redrawn until every
    required H(j) is nonzero.  `normalize` rescales the weights so mu_0 = 1.
    """
    if count > 2 * node_bound + 1:
        raise ValueError("not enough distinct integer nodes available")
    nonzero = [w for w in range(-weight_bound, weight_bound + 1) if w]
    while True:
        nodes = rng.sample(range(-node_bound, node_bound + 1), count)
        weights = [Fraction(rng.choice(nonzero)) for _ in range(count)]
        if normalize:
            total = sum(weights)
            if not total:
                continue
            weights = [w / total for w in weights]
        f = FiniteAtomFunctional(zip(map(Fraction, nodes), weights))
        upto = hankel_nonzero_upto if hankel_nonzero_upto is not None else count
        if all(f.hankel_det(j) for j in range(1, upto + 1)):
            return f


def random_sequence_functional(
    rng,
    horizon: int,
    bound: int = 4,
    hankel_nonzero_upto: int = 6,
) -> SequenceFunctional:
    """Seeded random moment sequence with nonvanishing leading Hankel minors."""
    while True:
        moments = [Fraction(rng.randint(-bound, bound)) for _ in range(horizon + 1)]
        f = SequenceFunctional(moments)
        if all(f.hankel_det(j) for j in range(1, hankel_nonzero_upto + 1)):
            return f
