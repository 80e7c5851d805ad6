"""Univariate polynomials and rational functions over a coefficient field.

These carry the Euclidean machinery (gcd, shifts, dispersion, bounded-degree
linear solving) that the summation algorithms are built on.  Coefficients are
:class:`~catalemma.fields.FieldElement` values, so a polynomial in ``k`` may
freely involve symbolic parameters such as ``s`` or ``l``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .fields import CoefficientField, FieldElement, MPoly


class _NegInfinity:
    """Degree of the zero polynomial; orders below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return not isinstance(other, _NegInfinity)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _NegInfinity)

    def __eq__(self, other):
        return isinstance(other, _NegInfinity)

    def __hash__(self):
        return hash("catalemma-neg-infinity")

    def __repr__(self):
        return "-inf"


NEG_INF = _NegInfinity()


class Polynomial:
    """Sparse univariate polynomial over a :class:`CoefficientField`.

    ``coeffs`` maps degree to a nonzero field element; the zero polynomial
    has an empty map and degree :data:`NEG_INF`.
    """

    __slots__ = ("field", "var", "coeffs", "_hash")

    def __init__(self, field: CoefficientField, var: str, coeffs: Mapping[int, FieldElement]):
        self.field = field
        self.var = var
        self.coeffs = {d: c for d, c in coeffs.items() if not c.is_zero}
        self._hash: int | None = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, field: CoefficientField, var: str) -> "Polynomial":
        return cls(field, var, {})

    @classmethod
    def constant(cls, field: CoefficientField, var: str, value) -> "Polynomial":
        return cls(field, var, {0: field.coerce(value)})

    @classmethod
    def variable(cls, field: CoefficientField, var: str) -> "Polynomial":
        return cls(field, var, {1: field.one})

    @classmethod
    def from_coeffs(cls, field: CoefficientField, var: str, ascending: Sequence) -> "Polynomial":
        return cls(field, var, {d: field.coerce(c) for d, c in enumerate(ascending)})

    # -- structure --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        return max(self.coeffs) if self.coeffs else NEG_INF

    def coeff(self, d: int) -> FieldElement:
        return self.coeffs.get(d, self.field.zero)

    @property
    def leading_coeff(self) -> FieldElement:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[max(self.coeffs)]

    @property
    def is_constant(self) -> bool:
        return self.is_zero or self.degree == 0

    def _check(self, other: "Polynomial") -> None:
        if self.field != other.field or self.var != other.var:
            raise ValueError("polynomials use a different variable or coefficient field")

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.field, self.var, other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        coeffs = dict(self.coeffs)
        for d, c in other.coeffs.items():
            s = coeffs.get(d, self.field.zero) + c
            if s.is_zero:
                coeffs.pop(d, None)
            else:
                coeffs[d] = s
        return Polynomial(self.field, self.var, coeffs)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, self.var, {d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction, FieldElement)):
            factor = self.field.coerce(other)
            return Polynomial(
                self.field, self.var, {d: c * factor for d, c in self.coeffs.items()}
            )
        other = self._coerce(other)
        coeffs: dict[int, FieldElement] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                d = d1 + d2
                s = coeffs.get(d, self.field.zero) + c1 * c2
                if s.is_zero:
                    coeffs.pop(d, None)
                else:
                    coeffs[d] = s
        return Polynomial(self.field, self.var, coeffs)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.field, self.var, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q: dict[int, FieldElement] = {}
        rem = self
        dlead = other.degree
        clead = other.leading_coeff
        while not rem.is_zero and rem.degree >= dlead:
            shift = rem.degree - dlead
            factor = rem.leading_coeff / clead
            q[shift] = q.get(shift, self.field.zero) + factor
            rem = rem - other * Polynomial(self.field, self.var, {shift: factor})
        return Polynomial(self.field, self.var, q), rem

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, self._coerce(other))[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, self._coerce(other))[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("polynomial division is not exact")
        return q

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self * self.leading_coeff.inverse()

    # -- substitution -----------------------------------------------------

    def shift(self, offset: int) -> "Polynomial":
        """p(k) -> p(k + offset), expanded."""
        if offset == 0 or self.is_zero:
            return self
        return self.shift_by(self.field.from_fraction(offset))

    def shift_by(self, offset: FieldElement) -> "Polynomial":
        """Shift by an arbitrary field element (used with symbolic shifts)."""
        if self.is_zero or offset.is_zero:
            return self
        shifted_var = Polynomial(self.field, self.var, {1: self.field.one, 0: offset})
        return self.compose(shifted_var)

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """Horner evaluation of self at another polynomial."""
        self._check(inner)
        acc = Polynomial.zero(self.field, self.var)
        top = self.degree
        if top is NEG_INF:
            return acc
        for d in range(top, -1, -1):
            acc = acc * inner
            if d in self.coeffs:
                acc = acc + self.coeffs[d]
        return acc

    def evaluate(self, point) -> FieldElement:
        """Evaluate at a field element (or int/Fraction) by Horner."""
        point = self.field.coerce(point)
        acc = self.field.zero
        top = self.degree
        if top is NEG_INF:
            return acc
        for d in range(top, -1, -1):
            acc = acc * point
            if d in self.coeffs:
                acc = acc + self.coeffs[d]
        return acc

    def evaluate_rational(self, point: int | Fraction, params: Mapping[str, int | Fraction]) -> Fraction:
        """Evaluate at a rational point with rational parameter values."""
        total = Fraction(0)
        for d, c in self.coeffs.items():
            total += c.evaluate(params) * Fraction(point) ** d
        return total

    def map_coeffs(self, fn: Callable[[FieldElement], FieldElement]) -> "Polynomial":
        return Polynomial(self.field, self.var, {d: fn(c) for d, c in self.coeffs.items()})

    def shift_param(self, name: str, offset: int) -> "Polynomial":
        return self.map_coeffs(lambda c: c.shift_param(name, offset))

    # -- comparisons / formatting -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, FieldElement)):
            other = Polynomial.constant(self.field, self.var, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.field == other.field
            and self.var == other.var
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self.field, self.var, tuple(sorted(self.coeffs.items())))
            )
        return self._hash

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        pieces: list[str] = []
        for d in sorted(self.coeffs, reverse=True):
            c = self.coeffs[d]
            body = _coeff_term_str(c, self.var, d)
            if not pieces:
                pieces.append(body)
            elif body.startswith("-"):
                pieces.append(f"- {body[1:]}")
            else:
                pieces.append(f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _coeff_term_str(c: FieldElement, var: str, d: int) -> str:
    """Render one monomial so that the term parser can read it back."""
    xs = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
    text = str(c)
    if not xs:
        return text
    one = c.field.one
    if c == one:
        return xs
    if c == -one:
        return f"-{xs}"
    simple = c.den.is_constant and c.den.constant_value() == 1 and len(c.num.terms) == 1
    if simple:
        if text.startswith("-"):
            return f"-{text[1:]}*{xs}"
        return f"{text}*{xs}"
    return f"({text})*{xs}"


# ---------------------------------------------------------------------------
# named operations on polynomials
# ---------------------------------------------------------------------------


def poly_to_mpoly(p: Polynomial) -> tuple[MPoly, MPoly]:
    """Clear coefficient denominators: returns (flat, den) with
    den * p = flat, where flat lives in Q[parameters..., var] (the variable
    occupying the last slot) and den in Q[parameters...]."""
    field = p.field
    nv = field.nvars
    den = MPoly.const(nv, 1)
    for c in p.coeffs.values():
        g = fields_gcd(den, c.den)
        den = den.exact_div(g) * c.den
    terms = {}
    for d, c in p.coeffs.items():
        scaled = c.num * den.exact_div(c.den)
        for mono, coef in scaled.terms.items():
            terms[mono + (d,)] = coef
    return MPoly(nv + 1, terms), den


def mpoly_to_poly(flat: MPoly, field: CoefficientField, var: str) -> Polynomial:
    """Inverse of :func:`poly_to_mpoly` (up to the cleared denominator)."""
    nv = field.nvars
    coeffs = {}
    for d, cp in flat.as_univar(nv).items():
        terms = {mono[:-1]: c for mono, c in cp.terms.items()}
        coeffs[d] = field.element(MPoly(nv, terms))
    return Polynomial(field, var, coeffs)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor; gcd(p, 0) is the monic scaling of p.

    Computed in the polynomial ring Q[parameters, var] (primitive PRS) after
    clearing denominators, which avoids the coefficient blowup of a naive
    Euclidean loop over the fraction field.
    """
    if not isinstance(q, Polynomial) or not isinstance(p, Polynomial):
        raise ValueError("poly_gcd expects two polynomials")
    p._check(q)
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    flat_p, _ = poly_to_mpoly(p)
    flat_q, _ = poly_to_mpoly(q)
    from .fields import mpoly_gcd

    g = mpoly_gcd(flat_p, flat_q)
    return mpoly_to_poly(g, p.field, p.var).monic()


def poly_shift(p: Polynomial, offset: int) -> Polynomial:
    """Return p(k + offset) expanded in k."""
    return p.shift(offset)


def resultant(p: Polynomial, q: Polynomial) -> FieldElement:
    """Resultant of two polynomials via fraction-free (Bareiss) elimination
    of the Sylvester matrix, after clearing coefficient denominators.

    Only used up to a nonzero parameter-only factor (clearing denominators
    rescales it), which is all the dispersion computation needs.
    """
    p._check(q)
    if p.is_zero or q.is_zero:
        return p.field.zero
    m, n = p.degree, q.degree
    if m == 0:
        return p.coeff(0) ** n
    if n == 0:
        return q.coeff(0) ** m

    nvars = p.field.nvars

    def cleared(poly: Polynomial) -> list[MPoly]:
        den = MPoly.const(nvars, 1)
        for c in poly.coeffs.values():
            g = fields_gcd(den, c.den)
            den = den.exact_div(g) * c.den
        out = []
        for d in range(poly.degree + 1):
            c = poly.coeff(d)
            if c.is_zero:
                out.append(MPoly.zero(nvars))
            else:
                out.append(c.num * den.exact_div(c.den))
        return out

    pa, qa = cleared(p), cleared(q)
    size = m + n
    matrix: list[list[MPoly]] = []
    for i in range(n):
        row = [MPoly.zero(nvars)] * size
        for j, c in enumerate(reversed(pa)):
            row[i + j] = c
        matrix.append(row)
    for i in range(m):
        row = [MPoly.zero(nvars)] * size
        for j, c in enumerate(reversed(qa)):
            row[i + j] = c
        matrix.append(row)

    det = _bareiss_det(matrix, nvars)
    return p.field.element(det)


def fields_gcd(a: MPoly, b: MPoly) -> MPoly:
    from .fields import mpoly_gcd

    return mpoly_gcd(a, b)


def _bareiss_det(matrix: list[list[MPoly]], nvars: int) -> MPoly:
    n = len(matrix)
    sign = 1
    prev = MPoly.const(nvars, 1)
    for k in range(n - 1):
        if matrix[k][k].is_zero:
            for i in range(k + 1, n):
                if not matrix[i][k].is_zero:
                    matrix[k], matrix[i] = matrix[i], matrix[k]
                    sign = -sign
                    break
            else:
                return MPoly.zero(nvars)
        pivot = matrix[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = matrix[i][j] * pivot - matrix[i][k] * matrix[k][j]
                matrix[i][j] = num.exact_div(prev)
            matrix[i][k] = MPoly.zero(nvars)
        prev = pivot
    det = matrix[n - 1][n - 1]
    return det if sign > 0 else -det


def _integer_roots(coeffs: list[Fraction]) -> set[int]:
    """Nonnegative integer roots of a univariate rational polynomial."""
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        raise ValueError("zero polynomial has every root")
    roots: set[int] = set()
    # strip powers of the variable
    low = 0
    while low < len(coeffs) and not coeffs[low]:
        low += 1
    if low > 0:
        roots.add(0)
        coeffs = coeffs[low:]
    if len(coeffs) <= 1:
        return roots
    bound = 1 + max(abs(c / coeffs[-1]) for c in coeffs[:-1])
    limit = int(bound)
    if limit > 200_000:
        raise RuntimeError("integer-root bound too large for dispersion scan")
    for j in range(0, limit + 1):
        total = Fraction(0)
        for c in reversed(coeffs):
            total = total * j + c
        if not total:
            roots.add(j)
    return roots


def dispersion_set(p: Polynomial, q: Polynomial) -> set[int]:
    """All shifts j >= 0 with deg gcd(p(k), q(k+j)) > 0.

    Candidates come from the nonnegative integer roots (in the shift) of the
    resultant of p(k) and q(k+j); each candidate is confirmed by a direct
    gcd computation before it is reported.
    """
    p._check(q)
    if p.is_zero or q.is_zero:
        raise ValueError("dispersion_set requires nonzero polynomials")
    if p.degree == 0 or q.degree == 0:
        return set()

    field = p.field
    jname = "_shift"
    while jname in field.parameters or jname == p.var:
        jname += "_"
    big = field.extend(jname)

    def lift(poly: Polynomial) -> Polynomial:
        return Polynomial(
            big, poly.var, {d: field.embed(c, big) for d, c in poly.coeffs.items()}
        )

    p2 = lift(p)
    q2 = lift(q).shift_by(big.parameter(jname))
    res = resultant(p2, q2)

    # collect the resultant as a polynomial in the shift symbol: for each
    # monomial in the other parameters, a univariate polynomial in j; a value
    # j0 kills the resultant identically iff it kills every one of them.
    jindex = big.parameters.index(jname)
    buckets: dict[tuple[int, ...], dict[int, Fraction]] = {}
    for mono, c in res.num.terms.items():
        rest = mono[:jindex] + mono[jindex + 1:]
        buckets.setdefault(rest, {})[mono[jindex]] = c

    common: list[Fraction] | None = None
    for by_j in buckets.values():
        top = max(by_j)
        coeffs = [by_j.get(i, Fraction(0)) for i in range(top + 1)]
        if common is None:
            common = coeffs
        else:
            common = _frac_poly_gcd(common, coeffs)
        if len(common) == 1:
            return set()

    if common is None:
        # resultant identically zero cannot happen for nonzero p, q
        raise RuntimeError("vanishing resultant in dispersion computation")

    candidates = _integer_roots(common)
    return {j for j in candidates if poly_gcd(p, q.shift(j)).degree >= 1}


def _frac_poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    from .fields import _int_poly_gcd

    def to_int(p: list[Fraction]) -> list[int]:
        den = 1
        for c in p:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return [int(c * den) for c in p]

    return [Fraction(c) for c in _int_poly_gcd(to_int(a), to_int(b))]


# ---------------------------------------------------------------------------
# linear solving
# ---------------------------------------------------------------------------


def linear_solve(
    rows: list[list[FieldElement]],
    rhs: list[FieldElement],
    field: CoefficientField,
    ncols: int,
) -> list[FieldElement] | None:
    """Solve a linear system over the field by Gaussian elimination.

    Returns the canonical solution with free coordinates set to zero, or
    None when the system is inconsistent.
    """
    aug = [row[:] + [b] for row, b in zip(rows, rhs)]
    nrows = len(aug)
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if not aug[i][col].is_zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        inv = aug[r][col].inverse()
        aug[r] = [c * inv for c in aug[r]]
        for i in range(nrows):
            if i != r and not aug[i][col].is_zero:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[r])]
        pivots.append((r, col))
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if not aug[i][ncols].is_zero:
            return None
    solution = [field.zero] * ncols
    for row, col in pivots:
        solution[col] = aug[row][ncols]
    return solution


def solve_degree_bounded(
    a: Polynomial, b: Polynomial, c: Polynomial, dmax: int
) -> Polynomial | None:
    """Find x with deg x <= dmax and a * x(k+1) - b * x(k) = c, or None.

    When the system is underdetermined the free coordinates are set to
    zero, giving a deterministic canonical solution.
    """
    a._check(b)
    a._check(c)
    if dmax < 0:
        return None
    field = a.field
    var = a.var

    columns: list[Polynomial] = []
    for i in range(dmax + 1):
        basis = Polynomial(field, var, {i: field.one})
        columns.append(a * basis.shift(1) - b * basis)

    degs = [p.degree for p in columns + [c] if not p.is_zero]
    top = max((d for d in degs), default=0)
    rows = []
    rhs = []
    for d in range(int(top) + 1):
        rows.append([col.coeff(d) for col in columns])
        rhs.append(c.coeff(d))
    solution = linear_solve(rows, rhs, field, dmax + 1)
    if solution is None:
        return None
    return Polynomial(field, var, dict(enumerate(solution)))


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RationalFunction:
    """Quotient of polynomials, kept reduced with a monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Polynomial, den: Polynomial, reduce: bool = True):
        num._check(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator in rational function")
        if reduce:
            if num.is_zero:
                den = Polynomial.constant(num.field, num.var, 1)
            else:
                g = poly_gcd(num, den)
                if g.degree >= 1:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                lc = den.leading_coeff
                if not lc.is_one:
                    inv = lc.inverse()
                    num = num * inv
                    den = den * inv
        self.num = num
        self.den = den
        self._hash: int | None = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "RationalFunction":
        return cls(p, Polynomial.constant(p.field, p.var, 1), reduce=False)

    @classmethod
    def constant(cls, field: CoefficientField, var: str, value) -> "RationalFunction":
        return cls.from_polynomial(Polynomial.constant(field, var, value))

    @classmethod
    def one(cls, field: CoefficientField, var: str) -> "RationalFunction":
        return cls.constant(field, var, 1)

    @property
    def field(self) -> CoefficientField:
        return self.num.field

    @property
    def var(self) -> str:
        return self.num.var

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num == self.den

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction.from_polynomial(other)
        return RationalFunction.constant(self.field, self.var, other)

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._coerce(other) / self

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            return (self.inverse()) ** (-exponent)
        return RationalFunction(self.num ** exponent, self.den ** exponent)

    def inverse(self) -> "RationalFunction":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    # -- substitution ---------------------------------------------------------

    def shift(self, offset: int) -> "RationalFunction":
        return RationalFunction(self.num.shift(offset), self.den.shift(offset))

    def shift_param(self, name: str, offset: int) -> "RationalFunction":
        return RationalFunction(
            self.num.shift_param(name, offset), self.den.shift_param(name, offset)
        )

    def evaluate_rational(
        self, point: int | Fraction, params: Mapping[str, int | Fraction]
    ) -> Fraction:
        den = self.den.evaluate_rational(point, params)
        if not den:
            raise ZeroDivisionError("rational function has a pole at the point")
        return self.num.evaluate_rational(point, params) / den

    # -- comparisons / formatting ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, FieldElement, Polynomial)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self) -> str:
        if self.den.degree == 0 and self.den.coeff(0).is_one:
            return f"({self.num})" if " " in str(self.num) else str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"
