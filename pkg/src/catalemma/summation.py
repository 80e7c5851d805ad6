"""Hypergeometric summation: Gosper antidifferences and creative telescoping.

A :class:`HyperTerm` couples the algebraic view of a summand (its shift
quotient, a rational function) with a direct exact evaluator; the quotient
is undefined where consecutive terms vanish, so the evaluator stays
authoritative for numeric values.  Certificates are checked twice: as exact
rational-function identities and by replaying concrete sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .fields import CoefficientField, FieldElement, MPoly, mpoly_gcd
from .polynomials import (
    Polynomial,
    RationalFunction,
    dispersion_set,
    linear_solve,
    mpoly_to_poly,
    poly_gcd,
    poly_to_mpoly,
    solve_degree_bounded,
)
from .termparse import (
    EvalDomainError,
    TermExpression,
    evaluate,
    ratio_of,
)


class VerificationError(ArithmeticError):
    """A certificate failed its own cross-check during evaluation."""


# ---------------------------------------------------------------------------
# terms
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HyperTerm:
    """Univariate hypergeometric term t(k), possibly with parameters."""

    variable: str
    parameters: tuple[str, ...]
    ratio: RationalFunction
    evaluator: Callable[[int, Mapping[str, int]], Fraction]
    source: TermExpression | None = None

    def value(self, k: int, params: Mapping[str, int] | None = None) -> Fraction:
        return self.evaluator(k, params or {})


def hyperterm(term: TermExpression) -> HyperTerm:
    """Build a HyperTerm (ratio plus direct evaluator) from a parsed summand."""
    ratio = ratio_of(term)

    def evaluator(k: int, params: Mapping[str, int]) -> Fraction:
        return evaluate(term, k, params)

    return HyperTerm(term.variable, term.parameters, ratio, evaluator, term)


@dataclass(frozen=True, eq=False)
class BivariateHyperTerm:
    """Doubly indexed term F(n, k): hypergeometric in both directions.

    Both quotients are rational functions of the summation variable over the
    field extended by the recurrence variable, so that shifts in either
    index are pure substitutions.
    """

    sumvar: str
    recvar: str
    parameters: tuple[str, ...]  # extra parameters, excluding the recurrence variable
    ratio_sum: RationalFunction  # F(n, k+1) / F(n, k)
    ratio_rec: RationalFunction  # F(n+1, k) / F(n, k)
    evaluator: Callable[[int, int, Mapping[str, int]], Fraction]
    source: TermExpression | None = None

    def value(self, n: int, k: int, params: Mapping[str, int] | None = None) -> Fraction:
        return self.evaluator(n, k, params or {})

    def check_compatibility(self) -> bool:
        """Mixed-shift identity: stepping n then k equals stepping k then n."""
        lhs = self.ratio_rec.shift(1) * self.ratio_sum
        rhs = self.ratio_sum.shift_param(self.recvar, 1) * self.ratio_rec
        return lhs == rhs


def _reexpress(rf: RationalFunction, new_var: str, target: CoefficientField) -> RationalFunction:
    """Rewrite a rational function in a different distinguished variable.

    The union of {variable} and field parameters must stay the same; only
    which symbol is 'the' variable changes.
    """
    field = rf.field
    names_in = field.parameters + (rf.var,)
    names_out = target.parameters + (new_var,)
    if set(names_in) != set(names_out):
        raise ValueError("cannot re-express: symbol sets differ")
    num_flat, num_den = poly_to_mpoly(rf.num)
    den_flat, den_den = poly_to_mpoly(rf.den)
    nv = len(names_in)
    identity = list(range(nv - 1))
    big_num = num_flat * den_den.embed(nv, identity)
    big_den = den_flat * num_den.embed(nv, identity)
    perm = [names_out.index(name) for name in names_in]
    out_num = mpoly_to_poly(big_num.embed(nv, perm), target, new_var)
    out_den = mpoly_to_poly(big_den.embed(nv, perm), target, new_var)
    return RationalFunction(out_num, out_den)


def bivariate_hyperterm(term: TermExpression, recvar: str) -> BivariateHyperTerm:
    """Build a bivariate term from a parsed summand.

    ``term.variable`` is the summation variable; ``recvar`` must be one of
    the declared parameters and becomes the recurrence variable.
    """
    if recvar not in term.parameters:
        raise ValueError(f"{recvar!r} is not a parameter of the term")
    ratio_sum = ratio_of(term)  # in sumvar over Q(parameters)
    ratio_rec_raw = ratio_of(term, recvar)  # in recvar over Q(sumvar + rest)
    ratio_rec = _reexpress(ratio_rec_raw, term.variable, ratio_sum.field)
    extra = tuple(p for p in term.parameters if p != recvar)

    def evaluator(n: int, k: int, params: Mapping[str, int]) -> Fraction:
        env = {recvar: n, **{p: params[p] for p in extra}}
        return evaluate(term, k, env)

    return BivariateHyperTerm(
        term.variable, recvar, extra, ratio_sum, ratio_rec, evaluator, term
    )


# ---------------------------------------------------------------------------
# Gosper's algorithm
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GosperCertificate:
    """Rational certificate R with R(k+1) r(k) - R(k) = 1.

    Equivalently z = R * t is an antidifference of t: z(k+1) - z(k) = t(k).
    """

    certificate: RationalFunction


@dataclass(frozen=True)
class NotGosperSummable:
    """Failure verdict carrying the stage of Gosper's algorithm that failed."""

    stage: str  # "degree_bound" | "key_equation"
    detail: str


def _normal_form(ratio: RationalFunction) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Factor r = (a/b) * (c(k+1)/c(k)) with gcd(a(k), b(k+j)) = 1 for j >= 0."""
    if ratio.is_zero:
        raise ValueError("shift quotient is identically zero; not a hypergeometric term")
    a, b = ratio.num, ratio.den
    field, var = a.field, a.var
    c = Polynomial.constant(field, var, 1)
    for j in sorted(dispersion_set(a, b)):
        g = poly_gcd(a, b.shift(j))
        if g.degree < 1:
            continue
        a = a.exact_div(g)
        b = b.exact_div(g.shift(-j))
        for i in range(1, j + 1):
            c = c * g.shift(-i)
    return a, b, c


def _degree_bound(a: Polynomial, bm: Polynomial, deg_c: int) -> int | None:
    """Standard two-case bound for deg x in a x(k+1) - bm x(k) = C(k)."""
    da, db = int(a.degree), int(bm.degree)
    candidates: list[int] = []
    if da != db or a.leading_coeff != bm.leading_coeff:
        candidates.append(deg_c - max(da, db))
    elif da == 0:
        candidates.append(deg_c - da + 1)
        candidates.append(0)
    else:
        candidates.append(deg_c - da + 1)
        e0 = (bm.coeff(da - 1) - a.coeff(da - 1)) / a.leading_coeff
        if e0.is_rational:
            fr = e0.as_fraction()
            if fr.denominator == 1 and fr >= 0:
                candidates.append(int(fr))
    valid = [d for d in candidates if d >= 0]
    return max(valid) if valid else None


def gosper(term: HyperTerm) -> GosperCertificate | NotGosperSummable:
    """Decide indefinite summability of a hypergeometric term.

    Returns a :class:`GosperCertificate` satisfying the antidifference
    identity, or :class:`NotGosperSummable` naming the failing stage.
    """
    a, b, c = _normal_form(term.ratio)
    bm = b.shift(-1)
    d = _degree_bound(a, bm, int(c.degree))
    if d is None:
        return NotGosperSummable(
            "degree_bound", "no nonnegative candidate degree for the key equation"
        )
    x = solve_degree_bounded(a, bm, c, d)
    if x is None or x.is_zero:
        return NotGosperSummable(
            "key_equation", f"no polynomial solution of degree <= {d}"
        )
    return GosperCertificate(RationalFunction(bm * x, c))


def verify_gosper(term: HyperTerm, cert: GosperCertificate) -> bool:
    """Exact check of R(k+1) r(k) - R(k) = 1 as reduced rational functions."""
    r = cert.certificate
    return (r.shift(1) * term.ratio - r) == RationalFunction.one(r.field, r.var)


# ---------------------------------------------------------------------------
# telescoped definite evaluation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TelescopeResult:
    value: Fraction
    endpoint_singular: bool


class TelescopeEvaluator:
    """Evaluates a definite sum by telescoping, cross-checked directly.

    The upper limit is the value of a designated parameter.  If z = R * t is
    undefined at an endpoint, the evaluator falls back to direct summation
    and flags the certificate as endpoint-singular for that instance.
    """

    def __init__(self, term: HyperTerm, cert: GosperCertificate, lower: int, upper_param: str):
        if upper_param not in term.parameters:
            raise ValueError(f"{upper_param!r} is not a parameter of the term")
        self.term = term
        self.certificate = cert
        self.lower = lower
        self.upper_param = upper_param

    def _z(self, k: int, params: Mapping[str, int]) -> Fraction:
        t = self.term.value(k, params)
        r = self.certificate.certificate.evaluate_rational(k, params)
        return r * t

    def evaluate(self, params: Mapping[str, int]) -> TelescopeResult:
        upper = params[self.upper_param]
        if upper < self.lower:
            return TelescopeResult(Fraction(0), endpoint_singular=False)
        direct = Fraction(0)
        for k in range(self.lower, upper + 1):
            direct += self.term.value(k, params)
        try:
            telescoped = self._z(upper + 1, params) - self._z(self.lower, params)
        except (ZeroDivisionError, EvalDomainError):
            return TelescopeResult(direct, endpoint_singular=True)
        if telescoped != direct:
            raise VerificationError(
                f"telescoped value {telescoped} disagrees with direct sum {direct} "
                f"at {dict(params)}"
            )
        return TelescopeResult(telescoped, endpoint_singular=False)


def telescope_definite(term: HyperTerm, lower: int, upper_param: str) -> TelescopeEvaluator:
    """Gosper the term and wrap the certificate in a definite-sum evaluator."""
    result = gosper(term)
    if isinstance(result, NotGosperSummable):
        raise ValueError(f"term is not Gosper-summable ({result.stage}: {result.detail})")
    return TelescopeEvaluator(term, result, lower, upper_param)


# ---------------------------------------------------------------------------
# Zeilberger's algorithm (creative telescoping)
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TelescopedRecurrence:
    """Recurrence sum_j a_j(n) f(n+j) = rhs(n) with telescoping certificate.

    The certificate R satisfies sum_j a_j(n) F(n+j, k) = G(n, k+1) - G(n, k)
    with G = R * F; the inhomogeneous side comes from summing that identity
    over the natural range k = 0..n and is reconstructed from exact samples.
    """

    order: int
    recvar: str
    coefficients: tuple[Polynomial, ...]  # in recvar, ascending shift order
    certificate: RationalFunction  # in the summation variable
    inhomogeneous: Polynomial | None

    def coefficient_values(self, n: int, params: Mapping[str, int]) -> list[Fraction]:
        return [p.evaluate_rational(n, params) for p in self.coefficients]

    def rhs_value(self, n: int, params: Mapping[str, int]) -> Fraction:
        if self.inhomogeneous is None:
            return Fraction(0)
        return self.inhomogeneous.evaluate_rational(n, params)


@dataclass(frozen=True)
class NoRecurrenceFound:
    """All orders up to max_order failed; stages are recorded per order."""

    max_order: int
    stages: tuple[tuple[int, str], ...]


def definite_sum(F: BivariateHyperTerm, n: int, params: Mapping[str, int]) -> Fraction:
    """f(n) = sum of F(n, k) over the natural range k = 0..n."""
    total = Fraction(0)
    for k in range(0, n + 1):
        total += F.value(n, k, params)
    return total


def _shift_products(F: BivariateHyperTerm, order: int) -> list[RationalFunction]:
    """S_j = F(n+j, k) / F(n, k) for j = 0..order."""
    out = [RationalFunction.one(F.ratio_sum.field, F.sumvar)]
    for j in range(order):
        out.append(out[-1] * F.ratio_rec.shift_param(F.recvar, j))
    return out


def _poly_lcm(polys: Sequence[Polynomial]) -> Polynomial:
    acc = polys[0].monic()
    for p in polys[1:]:
        g = poly_gcd(acc, p)
        acc = (acc * p.exact_div(g)).monic()
    return acc


def _try_order(
    F: BivariateHyperTerm, order: int
) -> tuple[list[FieldElement], RationalFunction] | str:
    """One creative-telescoping attempt; returns (alphas, certificate) or a
    failure stage name."""
    K = F.ratio_sum.field
    var = F.sumvar
    shifts = _shift_products(F, order)
    tau = _poly_lcm([s.den for s in shifts])
    sigmas = [s.num * tau.exact_div(s.den) for s in shifts]

    r0 = F.ratio_sum * RationalFunction(tau, tau.shift(1))
    a, b, c = _normal_form(r0)
    bm = b.shift(-1)
    deg_c = int(c.degree) + max(int(s.degree) for s in sigmas)
    d = _degree_bound(a, bm, deg_c)
    if d is None:
        return "degree_bound"

    rhs_polys = [c * s for s in sigmas]
    columns: list[Polynomial] = []
    for i in range(d + 1):
        basis = Polynomial(K, var, {i: K.one})
        columns.append(a * basis.shift(1) - bm * basis)
    for j in range(order):
        columns.append(-rhs_polys[j])
    target = rhs_polys[order]

    degrees = [int(p.degree) for p in columns + [target] if not p.is_zero]
    top = max(degrees, default=0)
    rows = [[col.coeff(t) for col in columns] for t in range(top + 1)]
    rhs = [target.coeff(t) for t in range(top + 1)]
    solution = linear_solve(rows, rhs, K, len(columns))
    if solution is None:
        return "key_equation"
    x = Polynomial(K, var, dict(enumerate(solution[: d + 1])))
    alphas = list(solution[d + 1:]) + [K.one]
    certificate = RationalFunction(bm * x, c * tau)
    return alphas, certificate


def _field_lcm(dens: Sequence[MPoly]) -> MPoly:
    acc = dens[0]
    for d in dens[1:]:
        g = mpoly_gcd(acc, d)
        acc = acc.exact_div(g) * d
    return acc


def _normalize_recurrence(
    alphas: Sequence[FieldElement],
    certificate: RationalFunction,
    K: CoefficientField,
    recvar: str,
) -> tuple[list[Polynomial], RationalFunction]:
    """Clear denominators and content from the recurrence coefficients.

    Returns the coefficients as polynomials in the recurrence variable over
    the remaining parameters, plus the compatibly rescaled certificate.
    """
    common_den = _field_lcm([alpha.den for alpha in alphas])
    numerators = [alpha.num * common_den.exact_div(alpha.den) for alpha in alphas]

    content = numerators[0]
    for numer in numerators[1:]:
        content = mpoly_gcd(content, numer)
    numerators = [numer.exact_div(content) for numer in numerators]

    # joint rational content (gcd of numerators over lcm of denominators),
    # signed by the leading coefficient of the top-order term
    num_gcd, den_lcm = 0, 1
    for numer in numerators:
        c = numer.rational_content()
        num_gcd = math.gcd(num_gcd, c.numerator)
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    scale = Fraction(num_gcd, den_lcm)
    rest_field = CoefficientField(tuple(p for p in K.parameters if p != recvar))
    rec_index = K.parameters.index(recvar)

    def to_poly(numer: MPoly) -> Polynomial:
        coeffs = {}
        for deg, cp in numer.as_univar(rec_index).items():
            terms = {
                mono[:rec_index] + mono[rec_index + 1:]: coef
                for mono, coef in cp.terms.items()
            }
            coeffs[deg] = rest_field.element(MPoly(rest_field.nvars, terms))
        return Polynomial(rest_field, recvar, coeffs)

    lead_poly = to_poly(numerators[-1])
    lead_coeff = lead_poly.leading_coeff
    _, lead_sign = lead_coeff.num.primitive_normalized()
    if lead_sign < 0:
        scale = -scale

    numerators = [numer.mul_scalar(1 / scale) for numer in numerators]
    coeff_polys = [to_poly(numer) for numer in numerators]

    # total multiplier applied to the alpha vector, mirrored on the certificate
    multiplier = (
        K.element(common_den)
        / K.element(content)
        / K.from_fraction(scale)
    )
    return coeff_polys, certificate * multiplier


def _interpolate(points: Sequence[tuple[int, Fraction]]) -> list[Fraction]:
    """Newton interpolation; returns ascending monomial coefficients."""
    xs = [Fraction(x) for x, _ in points]
    dd = [y for _, y in points]
    n = len(points)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [Fraction(0)] * n
    basis = [Fraction(1)] + [Fraction(0)] * (n - 1)  # running product (x-x0)...(x-xi)
    degree = 0
    for i in range(n):
        for t in range(degree + 1):
            coeffs[t] += dd[i] * basis[t]
        if i < n - 1:
            new = [Fraction(0)] * n
            for t in range(degree + 1):
                new[t + 1] += basis[t]
                new[t] -= xs[i] * basis[t]
            basis = new
            degree += 1
    return coeffs


def _determine_rhs(
    F: BivariateHyperTerm,
    rec: TelescopedRecurrence,
    param_samples: Mapping[str, Sequence[int]] | None,
    recvar_samples: Sequence[int] | None,
) -> Polynomial | None:
    """Reconstruct the inhomogeneous side from exact boundary evaluations.

    Samples sum_j a_j(n) f(n+j) on a grid of recurrence-variable values (and
    parameter values, which must all agree), then interpolates a polynomial
    and confirms it on held-out points.  Returns None when no parameter-free
    polynomial fits.
    """
    max_deg = max(
        (int(p.degree) for p in rec.coefficients if not p.is_zero), default=0
    )
    guess = max_deg + 2
    needed = guess + 4
    ns = list(recvar_samples) if recvar_samples is not None else list(range(1, needed + 8))

    if param_samples is None:
        param_samples = {}
    extra = F.parameters
    default_value = 2 * (max(ns) + rec.order) + 3
    combos: list[dict[str, int]] = [{}]
    for p in extra:
        values = list(param_samples.get(p, [default_value, default_value + 1]))
        combos = [dict(c, **{p: v}) for c in combos for v in values]

    points: list[tuple[int, Fraction]] = []
    for n in ns:
        values = set()
        ok = True
        for combo in combos:
            try:
                coeffs = rec.coefficient_values(n, combo)
                total = Fraction(0)
                for j, aj in enumerate(coeffs):
                    if aj:
                        total += aj * definite_sum(F, n + j, combo)
            except (ZeroDivisionError, EvalDomainError):
                ok = False
                break
            values.add(total)
        if not ok:
            continue
        if len(values) != 1:
            return None  # depends on the extra parameters
        points.append((n, values.pop()))
        if len(points) >= needed:
            break

    if len(points) < guess + 2:
        return None
    fit_pts, check_pts = points[: guess + 1], points[guess + 1:]
    coeffs = _interpolate(fit_pts)
    for n, val in check_pts:
        total = Fraction(0)
        for c in reversed(coeffs):
            total = total * n + c
        if total != val:
            return None
    rest_field = rec.coefficients[0].field
    return Polynomial(
        rest_field,
        rec.recvar,
        {d: rest_field.from_fraction(c) for d, c in enumerate(coeffs)},
    )


def zeilberger(
    F: BivariateHyperTerm,
    max_order: int,
    *,
    rhs_param_samples: Mapping[str, Sequence[int]] | None = None,
    rhs_recvar_samples: Sequence[int] | None = None,
) -> TelescopedRecurrence | NoRecurrenceFound:
    """Find a telescoped recurrence of minimal order up to max_order.

    For each order J the parameterized Gosper equation is solved jointly for
    the certificate polynomial and the recurrence coefficients a_0..a_J
    (with a_J normalized to 1 during the solve); coefficients are then
    cleared of denominators and content, with the leading coefficient made
    positive.  The inhomogeneous side is reconstructed from exact sampled
    sums over the natural range k = 0..n.
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    stages: list[tuple[int, str]] = []
    for order in range(1, max_order + 1):
        attempt = _try_order(F, order)
        if isinstance(attempt, str):
            stages.append((order, attempt))
            continue
        alphas, certificate = attempt
        K = F.ratio_sum.field
        coeff_polys, certificate = _normalize_recurrence(
            alphas, certificate, K, F.recvar
        )
        partial = TelescopedRecurrence(
            order, F.recvar, tuple(coeff_polys), certificate, None
        )
        rhs = _determine_rhs(F, partial, rhs_param_samples, rhs_recvar_samples)
        return TelescopedRecurrence(
            order, F.recvar, tuple(coeff_polys), certificate, rhs
        )
    return NoRecurrenceFound(max_order, tuple(stages))


def _poly_as_field_element(poly: Polynomial, K: CoefficientField) -> FieldElement:
    """View a polynomial in the recurrence variable as an element of the
    bigger coefficient field (parameters plus recurrence variable)."""
    flat, den = poly_to_mpoly(poly)  # vars: rest_field.parameters + [recvar]
    names_in = poly.field.parameters + (poly.var,)
    slots = [K.parameters.index(name) for name in names_in]
    num = flat.embed(K.nvars, slots)
    den_emb = den.embed(K.nvars, list(slots[:-1]))
    return K.element(num, den_emb)


def boundary_value(
    F: BivariateHyperTerm, rec: TelescopedRecurrence, n: int, params: Mapping[str, int]
) -> Fraction:
    """Exact boundary side of the telescoped identity summed over k = 0..n.

    Equals G(n, n+1) - G(n, 0) with G = R * F, plus the tail terms of the
    shifted sums f(n+j) that lie beyond k = n.  A certificate pole at a
    boundary point is bridged limit-free through the telescoped identity
    itself: G at the singular point is recovered from the nearest pole-free
    point and the directly evaluated summand combination in between.
    Raises ZeroDivisionError when no pole-free point exists nearby.
    """
    r = rec.certificate
    env = {rec.recvar: n, **params}
    coeffs = rec.coefficient_values(n, params)

    def combo(k: int) -> Fraction:
        total = Fraction(0)
        for j, aj in enumerate(coeffs):
            if aj:
                total += aj * F.value(n + j, k, params)
        return total

    def g_at(k: int) -> Fraction:
        return r.evaluate_rational(k, env) * F.value(n, k, params)

    def g_bridged_up(k0: int) -> Fraction:
        # G(k0) = G(k) - sum_{t=k0}^{k-1} combo(t) for the first pole-free k >= k0
        acc = Fraction(0)
        k = k0
        for _ in range(64):
            try:
                return g_at(k) - acc
            except ZeroDivisionError:
                acc += combo(k)
                k += 1
        raise ZeroDivisionError("certificate has no pole-free point above the boundary")

    def g_bridged_down(k0: int) -> Fraction:
        # G(k0) = G(k) + sum_{t=k}^{k0-1} combo(t) for the first pole-free k <= k0
        acc = Fraction(0)
        k = k0
        for _ in range(64):
            try:
                return g_at(k) + acc
            except ZeroDivisionError:
                k -= 1
                acc += combo(k)
        raise ZeroDivisionError("certificate has no pole-free point below the boundary")

    total = g_bridged_up(n + 1) - g_bridged_down(0)
    for j, aj in enumerate(coeffs):
        if not aj:
            continue
        for k in range(n + 1, n + j + 1):
            total += aj * F.value(n + j, k, params)
    return total


def verify_zeilberger(
    F: BivariateHyperTerm,
    rec: TelescopedRecurrence,
    *,
    recvar_samples: Sequence[int] = (1, 2, 3, 4, 5, 6),
    param_samples: Mapping[str, Sequence[int]] | None = None,
) -> bool:
    """Check a telescoped recurrence both algebraically and numerically.

    Algebraic: sum_j a_j(n) S_j(k) = R(n, k+1) r_k(n, k) - R(n, k) as reduced
    rational functions, with S_j the recurrence-direction shift quotients.
    Numeric: sum_j a_j(n) f(n+j) replays against the stored inhomogeneous
    side, or against the certificate's boundary value when none is stored.
    """
    if len(rec.coefficients) != rec.order + 1:
        return False
    K = F.ratio_sum.field
    shifts = _shift_products(F, rec.order)
    lhs_op = RationalFunction.constant(K, F.sumvar, 0)
    for j, coeff in enumerate(rec.coefficients):
        if coeff.is_zero:
            continue
        lhs_op = lhs_op + shifts[j] * _poly_as_field_element(coeff, K)
    r = rec.certificate
    rhs_op = r.shift(1) * F.ratio_sum - r
    if lhs_op != rhs_op:
        return False

    # numeric replay
    combos: list[dict[str, int]] = [{}]
    if param_samples is None:
        param_samples = {}
    top_n = max(recvar_samples)
    for p in F.parameters:
        values = list(param_samples.get(p, [2 * (top_n + rec.order) + 3]))
        combos = [dict(c, **{p: v}) for c in combos for v in values]
    checked = 0
    for n in recvar_samples:
        for combo in combos:
            try:
                coeffs = rec.coefficient_values(n, combo)
                total = Fraction(0)
                for j, aj in enumerate(coeffs):
                    if aj:
                        total += aj * definite_sum(F, n + j, combo)
                if rec.inhomogeneous is not None:
                    expected = rec.rhs_value(n, combo)
                else:
                    expected = boundary_value(F, rec, n, combo)
            except (ZeroDivisionError, EvalDomainError):
                continue
            if total != expected:
                return False
            checked += 1
    return checked > 0
