"""Exact coefficient arithmetic for polynomials with symbolic parameters.

A :class:`CoefficientField` is the field Q(p1, ..., pn) of rational
functions in a fixed tuple of parameter symbols.  Its elements are reduced
fractions of multivariate polynomials (:class:`MPoly`) with ``Fraction``
coefficients.  The empty parameter tuple degenerates to plain rationals.

Everything here is immutable and exact; there is no floating point.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Mapping, Sequence

Monomial = tuple[int, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class MPoly:
    """Multivariate polynomial over Q, stored as a sparse exponent map.

    ``terms`` maps exponent tuples (one slot per variable) to nonzero
    ``Fraction`` coefficients.  Instances are immutable; arithmetic returns
    new objects.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction]):
        self.nvars = nvars
        self.terms = {m: c for m, c in terms.items() if c}
        self._hash: int | None = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls(nvars, {})

    @classmethod
    def const(cls, nvars: int, value: Fraction | int) -> "MPoly":
        value = Fraction(value)
        if not value:
            return cls(nvars, {})
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MPoly":
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {mono: _ONE})

    # -- predicates ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero:
            return _ZERO
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return self.terms[(0,) * self.nvars]

    def degree_in(self, index: int) -> int:
        if self.is_zero:
            return 0
        return max(m[index] for m in self.terms)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "MPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts")

    def __add__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, _ZERO) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return MPoly(self.nvars, terms)

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(m, _ZERO) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return MPoly(self.nvars, terms)

    def mul_scalar(self, scalar: Fraction | int) -> "MPoly":
        scalar = Fraction(scalar)
        if not scalar:
            return MPoly.zero(self.nvars)
        return MPoly(self.nvars, {m: c * scalar for m, c in self.terms.items()})

    def __pow__(self, exponent: int) -> "MPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(self.nvars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- structure ----------------------------------------------------

    def leading_lex(self) -> tuple[Monomial, Fraction]:
        """Lexicographically largest monomial and its coefficient."""
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms)
        return m, self.terms[m]

    def as_univar(self, index: int) -> dict[int, "MPoly"]:
        """View as a univariate polynomial in variable ``index``.

        Returns a map degree -> coefficient, where each coefficient is an
        MPoly (same variable count) free of variable ``index``.
        """
        out: dict[int, dict[Monomial, Fraction]] = {}
        for m, c in self.terms.items():
            d = m[index]
            rest = m[:index] + (0,) + m[index + 1:]
            out.setdefault(d, {})[rest] = c
        return {d: MPoly(self.nvars, t) for d, t in out.items()}

    @classmethod
    def from_univar(cls, nvars: int, index: int, coeffs: Mapping[int, "MPoly"]) -> "MPoly":
        terms: dict[Monomial, Fraction] = {}
        for d, poly in coeffs.items():
            for m, c in poly.terms.items():
                mono = m[:index] + (m[index] + d,) + m[index + 1:]
                s = terms.get(mono, _ZERO) + c
                if s:
                    terms[mono] = s
                else:
                    terms.pop(mono, None)
        return cls(nvars, terms)

    def embed(self, new_nvars: int, slots: Sequence[int]) -> "MPoly":
        """Reindex variables: old variable i becomes new variable ``slots[i]``."""
        terms: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            mono = [0] * new_nvars
            for i, e in enumerate(m):
                if e:
                    mono[slots[i]] = e
            terms[tuple(mono)] = c
        return MPoly(new_nvars, terms)

    def shift_var(self, index: int, offset: Fraction | int) -> "MPoly":
        """Substitute variable ``index`` -> variable + offset."""
        offset = Fraction(offset)
        if not offset or self.is_zero:
            return self
        by_deg = self.as_univar(index)
        shifted = MPoly.variable(self.nvars, index) + MPoly.const(self.nvars, offset)
        top = max(by_deg)
        acc = MPoly.zero(self.nvars)
        for d in range(top, -1, -1):
            acc = acc * shifted
            if d in by_deg:
                acc = acc + by_deg[d]
        return acc

    def subst_var(self, index: int, value: Fraction | int) -> "MPoly":
        """Substitute a rational value for variable ``index``."""
        value = Fraction(value)
        terms: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            scaled = c * value ** m[index]
            mono = m[:index] + (0,) + m[index + 1:]
            s = terms.get(mono, _ZERO) + scaled
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return MPoly(self.nvars, terms)

    def evaluate(self, values: Sequence[Fraction | int]) -> Fraction:
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = _ZERO
        for m, c in self.terms.items():
            term = c
            for e, v in zip(m, values):
                if e:
                    term *= Fraction(v) ** e
            total += term
        return total

    # -- normalization ------------------------------------------------

    def rational_content(self) -> Fraction:
        """Positive rational c such that self/c has coprime integer coefficients."""
        if self.is_zero:
            return _ONE
        num = 0
        den = 1
        for c in self.terms.values():
            num = _int_gcd(num, c.numerator)
            den = den * c.denominator // _int_gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive_normalized(self) -> tuple["MPoly", Fraction]:
        """Return (primitive part, scale) with self = scale * primitive part.

        The primitive part has coprime integer coefficients and a positive
        lexicographic leading coefficient; the zero polynomial returns itself
        with scale 1.
        """
        if self.is_zero:
            return self, _ONE
        scale = self.rational_content()
        _, lead = self.leading_lex()
        if lead < 0:
            scale = -scale
        return self.mul_scalar(1 / scale), scale

    def exact_div(self, divisor: "MPoly") -> "MPoly":
        """Exact multivariate division; raises ValueError if not exact."""
        self._check(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if divisor.is_constant:
            return self.mul_scalar(1 / divisor.constant_value())
        dm, dc = divisor.leading_lex()
        rem = self
        qterms: dict[Monomial, Fraction] = {}
        while not rem.is_zero:
            rm, rc = rem.leading_lex()
            qm = tuple(a - b for a, b in zip(rm, dm))
            if any(e < 0 for e in qm):
                raise ValueError("division is not exact")
            qc = rc / dc
            qterms[qm] = qterms.get(qm, _ZERO) + qc
            rem = rem - divisor * MPoly(self.nvars, {qm: qc})
        return MPoly(self.nvars, qterms)

    # -- comparisons / formatting --------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(sorted(self.terms.items()))))
        return self._hash

    def __repr__(self) -> str:
        names = tuple(f"x{i}" for i in range(self.nvars))
        return f"MPoly({self.to_string(names)})"

    def to_string(self, names: Sequence[str]) -> str:
        if self.is_zero:
            return "0"
        pieces: list[str] = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, m)
                if e
            ]
            if not factors:
                body = _fraction_str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_fraction_str(abs(c))] + factors)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)


def _fraction_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# gcd of multivariate polynomials over Q
# ---------------------------------------------------------------------------


def _active_vars(f: MPoly, g: MPoly) -> list[int]:
    active = set()
    for poly in (f, g):
        for m in poly.terms:
            for i, e in enumerate(m):
                if e:
                    active.add(i)
    return sorted(active)


def _int_poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive PRS over the integers for dense coefficient lists.

    Integer pseudo-remainders with per-step content removal keep the
    coefficient growth polynomial; plain Euclid over Q explodes.
    """

    def strip_content(p: list[int]) -> list[int]:
        while p and not p[-1]:
            p.pop()
        cont = 0
        for v in p:
            cont = _int_gcd(cont, v)
        if cont > 1:
            p = [v // cont for v in p]
        return p

    a, b = strip_content(a[:]), strip_content(b[:])
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = a[:]
        lb = b[-1]
        while len(r) >= len(b):
            lr = r[-1]
            shift = len(r) - len(b)
            r = [lb * c for c in r]
            for i, c in enumerate(b):
                r[i + shift] -= lr * c
            r.pop()
            r = strip_content(r)
        a, b = b, r
    if a and a[-1] < 0:
        a = [-v for v in a]
    return a


def _univar_gcd_fast(f: MPoly, g: MPoly, index: int) -> MPoly:
    """gcd for polynomials involving a single variable, in integer space."""

    def to_int_list(p: MPoly) -> list[int]:
        by_deg = {d: c.constant_value() for d, c in p.as_univar(index).items()}
        top = max(by_deg)
        fr = [by_deg.get(i, _ZERO) for i in range(top + 1)]
        den = 1
        for c in fr:
            den = den * c.denominator // _int_gcd(den, c.denominator)
        return [int(c * den) for c in fr]

    a = _int_poly_gcd(to_int_list(f), to_int_list(g))
    return MPoly.from_univar(
        f.nvars, index, {d: MPoly.const(f.nvars, c) for d, c in enumerate(a) if c}
    )


def _prem(u: list[MPoly], w: list[MPoly]) -> list[MPoly]:
    """Pseudo-remainder of coefficient lists (dense, low degree first)."""
    r = u[:]
    lw = w[-1]
    dw = len(w) - 1

    def trim(p: list[MPoly]) -> list[MPoly]:
        while p and p[-1].is_zero:
            p.pop()
        return p

    r = trim(r)
    while r and len(r) - 1 >= dw:
        lr = r[-1]
        shift = len(r) - 1 - dw
        new = [lw * c for c in r]
        for i, c in enumerate(w):
            new[i + shift] = new[i + shift] - lr * c
        r = trim(new)
    return r


@functools.lru_cache(maxsize=8192)
def _mpoly_gcd_cached(f: MPoly, g: MPoly) -> MPoly:
    if f.is_zero:
        return g.primitive_normalized()[0]
    if g.is_zero:
        return f.primitive_normalized()[0]
    if f.is_constant or g.is_constant:
        return MPoly.const(f.nvars, 1)
    active = _active_vars(f, g)
    if len(active) == 1:
        return _univar_gcd_fast(f, g, active[0])

    v = active[-1]
    if f.degree_in(v) == 0 or g.degree_in(v) == 0:
        # one operand is free of v: gcd(f, g) = gcd(f, content_v(g))
        if f.degree_in(v) == 0:
            vfree, other = f, g
        else:
            vfree, other = g, f
        cont = MPoly.zero(f.nvars)
        for c in other.as_univar(v).values():
            cont = mpoly_gcd(cont, c)
        return mpoly_gcd(vfree, cont)

    def parts(p: MPoly) -> tuple[MPoly, list[MPoly]]:
        by_deg = p.as_univar(v)
        top = max(by_deg)
        coeffs = [by_deg.get(i, MPoly.zero(p.nvars)) for i in range(top + 1)]
        cont = MPoly.zero(p.nvars)
        for c in coeffs:
            cont = mpoly_gcd(cont, c)
        pp = [c.exact_div(cont) for c in coeffs]
        return cont, pp

    cont_f, u = parts(f)
    cont_g, w = parts(g)
    cgcd = mpoly_gcd(cont_f, cont_g)

    if len(u) < len(w):
        u, w = w, u
    while True:
        if not w:
            pp = u
            break
        if len(w) == 1:
            pp = None
            break
        r = _prem(u, w)
        if r:
            cont_r = MPoly.zero(f.nvars)
            for c in r:
                cont_r = mpoly_gcd(cont_r, c)
            r = [c.exact_div(cont_r) for c in r]
            # drop rational content for stability
            joined = MPoly.from_univar(f.nvars, v, dict(enumerate(r)))
            joined, _ = joined.primitive_normalized()
            by_deg = joined.as_univar(v)
            top = max(by_deg)
            r = [by_deg.get(i, MPoly.zero(f.nvars)) for i in range(top + 1)]
        u, w = w, r

    if pp is None:
        result = cgcd
    else:
        result = cgcd * MPoly.from_univar(f.nvars, v, dict(enumerate(pp)))
    return result.primitive_normalized()[0]


def mpoly_gcd(f: MPoly, g: MPoly) -> MPoly:
    """Greatest common divisor over Q, normalized to a primitive integer
    polynomial with positive leading (lex) coefficient."""
    if f.nvars != g.nvars:
        raise ValueError("mixed variable counts")
    return _mpoly_gcd_cached(f, g)


# ---------------------------------------------------------------------------
# coefficient fields
# ---------------------------------------------------------------------------


class CoefficientField:
    """The field Q(p1, ..., pn) for an ordered tuple of parameter symbols."""

    __slots__ = ("parameters",)

    def __init__(self, parameters: Sequence[str] = ()):
        params = tuple(parameters)
        if len(set(params)) != len(params):
            raise ValueError("parameter symbols must be distinct")
        self.parameters = params

    @property
    def nvars(self) -> int:
        return len(self.parameters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CoefficientField) and self.parameters == other.parameters

    def __hash__(self) -> int:
        return hash(self.parameters)

    def __repr__(self) -> str:
        return f"CoefficientField({', '.join(self.parameters) or 'Q'})"

    # -- element constructors -----------------------------------------

    @property
    def zero(self) -> "FieldElement":
        return self.from_fraction(_ZERO)

    @property
    def one(self) -> "FieldElement":
        return self.from_fraction(_ONE)

    def from_fraction(self, value: Fraction | int) -> "FieldElement":
        return FieldElement(
            self, MPoly.const(self.nvars, value), MPoly.const(self.nvars, 1), reduce=False
        )

    def parameter(self, name: str) -> "FieldElement":
        try:
            index = self.parameters.index(name)
        except ValueError:
            raise ValueError(f"unknown parameter {name!r}") from None
        return FieldElement(
            self, MPoly.variable(self.nvars, index), MPoly.const(self.nvars, 1), reduce=False
        )

    def element(self, num: MPoly, den: MPoly | None = None) -> "FieldElement":
        if den is None:
            den = MPoly.const(self.nvars, 1)
        return FieldElement(self, num, den)

    def coerce(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (int, Fraction)):
            return self.from_fraction(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def extend(self, *names: str) -> "CoefficientField":
        return CoefficientField(self.parameters + names)

    def embed(self, element: "FieldElement", target: "CoefficientField") -> "FieldElement":
        """Map an element of this field into ``target`` (a superset field)."""
        slots = [target.parameters.index(p) for p in self.parameters]
        return FieldElement(
            target,
            element.num.embed(target.nvars, slots),
            element.den.embed(target.nvars, slots),
            reduce=False,
        )


class FieldElement:
    """A reduced fraction of multivariate parameter polynomials."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: CoefficientField, num: MPoly, den: MPoly, reduce: bool = True):
        if den.is_zero:
            raise ZeroDivisionError("zero denominator in coefficient field")
        if reduce:
            if num.is_zero:
                den = MPoly.const(field.nvars, 1)
            else:
                g = mpoly_gcd(num, den)
                if not (g.is_constant and g.constant_value() == 1):
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                den, scale = den.primitive_normalized()
                if scale != 1:
                    num = num.mul_scalar(1 / scale)
        self.field = field
        self.num = num
        self.den = den
        self._hash: int | None = None

    # -- predicates ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num == self.den

    @property
    def is_rational(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("element is not a plain rational")
        return self.num.constant_value() / self.den.constant_value()

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        return self.field.coerce(other)

    def _build(self, num: MPoly, den: MPoly) -> "FieldElement":
        """Assemble an already-reduced fraction, renormalizing only the sign
        and rational content of the denominator."""
        if num.is_zero:
            return self.field.zero
        den, scale = den.primitive_normalized()
        if scale != 1:
            num = num.mul_scalar(1 / scale)
        return FieldElement(self.field, num, den, reduce=False)

    def __add__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        # Henrici's scheme: with both operands reduced, only gcd(t, d) can
        # cancel, where d = gcd of the denominators.
        d = mpoly_gcd(self.den, other.den)
        if d.is_constant:
            num = self.num * other.den + other.num * self.den
            return self._build(num, self.den * other.den)
        d1r = self.den.exact_div(d)
        d2r = other.den.exact_div(d)
        t = self.num * d2r + other.num * d1r
        if t.is_zero:
            return self.field.zero
        g = mpoly_gcd(t, d)
        if g.is_constant:
            return self._build(t, d1r * other.den)
        return self._build(t.exact_div(g), d1r * other.den.exact_div(g))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, -self.num, self.den, reduce=False)

    def __sub__(self, other) -> "FieldElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "FieldElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return self.field.zero
        g1 = mpoly_gcd(self.num, other.den)
        g2 = mpoly_gcd(other.num, self.den)
        num = self.num.exact_div(g1) * other.num.exact_div(g2)
        den = self.den.exact_div(g2) * other.den.exact_div(g1)
        return self._build(num, den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero field element")
        return self * other.inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        return self._coerce(other) / self

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        den, scale = self.num.primitive_normalized()
        num = self.den if scale == 1 else self.den.mul_scalar(1 / scale)
        return FieldElement(self.field, num, den, reduce=False)

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        # powers of a reduced fraction stay reduced (Gauss's lemma)
        return FieldElement(
            self.field, self.num ** exponent, self.den ** exponent, reduce=False
        )

    # -- substitution ---------------------------------------------------

    def shift_param(self, name: str, offset: int) -> "FieldElement":
        """Substitute parameter -> parameter + offset."""
        index = self.field.parameters.index(name)
        return FieldElement(
            self.field,
            self.num.shift_var(index, offset),
            self.den.shift_var(index, offset),
            reduce=False,
        )

    def evaluate(self, values: Mapping[str, Fraction | int]) -> Fraction:
        """Evaluate at rational parameter values; raises ZeroDivisionError
        when the denominator vanishes there."""
        vals = [Fraction(values[p]) for p in self.field.parameters]
        den = self.den.evaluate(vals)
        if not den:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.evaluate(vals) / den

    # -- comparisons / formatting ----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field.from_fraction(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return (
            self.field == other.field
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self.num, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        names = self.field.parameters
        num = self.num.to_string(names)
        if self.den.is_constant and self.den.constant_value() == 1:
            return num
        return f"({num})/({self.den.to_string(names)})"

    def __repr__(self) -> str:
        return f"FieldElement({self})"
