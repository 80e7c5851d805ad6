"""Parser and shift-quotient analysis for product-form summand expressions.

The grammar covers integer literals, the summation variable, parameter
symbols, ``+ - * / ^`` (with ``**`` accepted as a synonym for ``^``) and the
builtins ``binomial``, ``factorial`` and ``catalan``.  Builtin arguments
must be integer-linear in the variable and parameters, which is what makes
the shift quotient t(k+1)/t(k) a rational function.

Precedence is ``^`` over unary minus over ``* /`` over ``+ -`` with ``^``
right-associative.  Exponents are integer literals, except for the
geometric case ``c ^ <linear>`` with an integer literal base (used for
alternating signs such as ``(-1)^k``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .fields import CoefficientField
from .identities import binomial_gen, catalan
from .polynomials import Polynomial, RationalFunction


class ParseError(ValueError):
    """Syntax or validation error, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NonHypergeometricError(RuntimeError):
    """Internal error: a subexpression has no rational shift quotient.

    The parse-time restrictions are meant to rule this out; it can still be
    provoked by adding builtin factors, which no fixture does.
    """


class EvalDomainError(ValueError):
    """The term is undefined at the requested integer point."""


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExprNode:
    pos: int = field(compare=False, default=0, kw_only=True)


@dataclass(frozen=True)
class IntLit(ExprNode):
    value: int = 0


@dataclass(frozen=True)
class Sym(ExprNode):
    name: str = ""


@dataclass(frozen=True)
class Neg(ExprNode):
    operand: ExprNode = None  # type: ignore[assignment]


@dataclass(frozen=True)
class BinOp(ExprNode):
    op: str = ""
    left: ExprNode = None  # type: ignore[assignment]
    right: ExprNode = None  # type: ignore[assignment]


@dataclass(frozen=True)
class Call(ExprNode):
    func: str = ""
    args: tuple[ExprNode, ...] = ()


BUILTINS = {"binomial": 2, "factorial": 1, "catalan": 1}


@dataclass(frozen=True)
class TermExpression:
    """A validated summand: AST plus its variable and parameter symbols."""

    root: ExprNode
    variable: str
    parameters: tuple[str, ...]

    def __str__(self) -> str:
        return serialize(self.root)


# ---------------------------------------------------------------------------
# tokenizer
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # "int" | "name" | "op" | "end"
    text: str
    pos: int


_OPS = {"+", "-", "*", "/", "^", "(", ")", ","}


def _tokenize(src: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(src)
    while i < n:
        c = src[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(_Token("int", src[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(_Token("name", src[i:j], i))
            i = j
            continue
        if c == "*" and i + 1 < n and src[i + 1] == "*":
            tokens.append(_Token("op", "^", i))
            i += 2
            continue
        if c in _OPS:
            tokens.append(_Token("op", c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


# ---------------------------------------------------------------------------
# parser (precedence climbing)
# ---------------------------------------------------------------------------

_PREC_ADD = 1
_PREC_MUL = 2
_PREC_UNARY = 3
_PREC_POW = 4


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.index = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect_op(self, text: str) -> _Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != text:
            raise ParseError(f"expected {text!r}", tok.pos)
        return self.advance()

    def parse(self) -> ExprNode:
        node = self.parse_expr(0)
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected token {tok.text!r}", tok.pos)
        return node

    def parse_expr(self, min_prec: int) -> ExprNode:
        node = self.parse_unary()
        while True:
            tok = self.peek()
            if tok.kind != "op":
                break
            if tok.text in ("+", "-"):
                prec = _PREC_ADD
            elif tok.text in ("*", "/"):
                prec = _PREC_MUL
            elif tok.text == "^":
                prec = _PREC_POW
            else:
                break
            if prec < min_prec:
                break
            self.advance()
            if tok.text == "^":
                right = self.parse_power_operand(tok.pos)
            else:
                right = self.parse_expr(prec + 1)
            node = BinOp(op=tok.text, left=node, right=right, pos=tok.pos)
        return node

    def parse_power_operand(self, op_pos: int) -> ExprNode:
        # right-associative; unary minus allowed on the exponent
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return Neg(operand=self.parse_power_operand(op_pos), pos=tok.pos)
        return self.parse_expr(_PREC_POW)

    def parse_unary(self) -> ExprNode:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return Neg(operand=self.parse_unary_tail(), pos=tok.pos)
        return self.parse_unary_tail()

    def parse_unary_tail(self) -> ExprNode:
        # unary minus binds tighter than * and / but looser than ^
        node = self.parse_primary()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            right = self.parse_power_operand(tok.pos)
            return BinOp(op="^", left=node, right=right, pos=tok.pos)
        return node

    def parse_primary(self) -> ExprNode:
        tok = self.advance()
        if tok.kind == "int":
            return IntLit(value=int(tok.text), pos=tok.pos)
        if tok.kind == "name":
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "(":
                if tok.text not in BUILTINS:
                    raise ParseError(f"unknown function {tok.text!r}", tok.pos)
                self.advance()
                args = [self.parse_expr(0)]
                while True:
                    sep = self.peek()
                    if sep.kind == "op" and sep.text == ",":
                        self.advance()
                        args.append(self.parse_expr(0))
                        continue
                    break
                self.expect_op(")")
                if len(args) != BUILTINS[tok.text]:
                    raise ParseError(
                        f"{tok.text} expects {BUILTINS[tok.text]} argument(s)", tok.pos
                    )
                return Call(func=tok.text, args=tuple(args), pos=tok.pos)
            return Sym(name=tok.text, pos=tok.pos)
        if tok.kind == "op" and tok.text == "(":
            node = self.parse_expr(0)
            self.expect_op(")")
            return node
        raise ParseError(
            f"expected a number, symbol, function call or '('", tok.pos
        )


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _linear_form(node: ExprNode, symbols: Sequence[str]) -> dict[str, Fraction] | None:
    """Express a subexpression as const + sum(coeff * symbol), or None.

    Keys are symbol names plus "" for the constant term.
    """

    def combine(a, b, mul):
        out = dict(a)
        for key, val in b.items():
            out[key] = out.get(key, Fraction(0)) + mul * val
        return out

    if isinstance(node, IntLit):
        return {"": Fraction(node.value)}
    if isinstance(node, Sym):
        if node.name not in symbols:
            return None
        return {"": Fraction(0), node.name: Fraction(1)}
    if isinstance(node, Neg):
        inner = _linear_form(node.operand, symbols)
        if inner is None:
            return None
        return {k: -v for k, v in inner.items()}
    if isinstance(node, BinOp):
        if node.op in ("+", "-"):
            left = _linear_form(node.left, symbols)
            right = _linear_form(node.right, symbols)
            if left is None or right is None:
                return None
            return combine(left, right, 1 if node.op == "+" else -1)
        if node.op == "*":
            left = _linear_form(node.left, symbols)
            right = _linear_form(node.right, symbols)
            if left is None or right is None:
                return None
            lconst = all(k == "" for k in left if left[k])
            rconst = all(k == "" for k in right if right[k])
            if lconst:
                c = left.get("", Fraction(0))
                return {k: c * v for k, v in right.items()}
            if rconst:
                c = right.get("", Fraction(0))
                return {k: c * v for k, v in left.items()}
            return None
        if node.op == "/":
            left = _linear_form(node.left, symbols)
            right = _linear_form(node.right, symbols)
            if left is None or right is None:
                return None
            if any(k != "" and v for k, v in right.items()):
                return None
            c = right.get("", Fraction(0))
            if not c:
                return None
            return {k: v / c for k, v in left.items()}
        if node.op == "^":
            base = _linear_form(node.left, symbols)
            expo = _linear_form(node.right, symbols)
            if base is None or expo is None:
                return None
            bconst = all(k == "" for k in base if base[k])
            econst = all(k == "" for k in expo if expo[k])
            if bconst and econst and expo.get("", Fraction(0)).denominator == 1:
                e = int(expo.get("", Fraction(0)))
                if e >= 0:
                    return {"": base.get("", Fraction(0)) ** e}
            return None
    return None


def _validate(node: ExprNode, variable: str, parameters: Sequence[str]) -> None:
    symbols = [variable, *parameters]
    if isinstance(node, Sym):
        if node.name not in symbols:
            raise ParseError(f"unknown symbol {node.name!r}", node.pos)
        return
    if isinstance(node, IntLit):
        return
    if isinstance(node, Neg):
        _validate(node.operand, variable, parameters)
        return
    if isinstance(node, Call):
        for arg in node.args:
            form = _linear_form(arg, symbols)
            if form is None:
                raise ParseError(
                    f"argument of {node.func} must be integer-linear in "
                    f"{', '.join(symbols)}",
                    arg.pos,
                )
            if any(v.denominator != 1 for v in form.values()):
                raise ParseError(
                    f"argument of {node.func} must have integer coefficients", arg.pos
                )
        for arg in node.args:
            _validate_symbols_only(arg, symbols)
        return
    if isinstance(node, BinOp):
        if node.op == "^":
            expo = node.right
            if _int_literal(expo) is not None:
                _validate(node.left, variable, parameters)
                return
            base_int = _int_literal(node.left)
            form = _linear_form(expo, symbols)
            if base_int is not None and form is not None and all(
                v.denominator == 1 for v in form.values()
            ):
                _validate_symbols_only(expo, symbols)
                return
            raise ParseError(
                "exponent must be an integer literal, or the base an integer "
                "literal with an integer-linear exponent",
                node.pos,
            )
        _validate(node.left, variable, parameters)
        _validate(node.right, variable, parameters)
        return
    raise ParseError("malformed expression", getattr(node, "pos", 0))


def _validate_symbols_only(node: ExprNode, symbols: Sequence[str]) -> None:
    if isinstance(node, Sym) and node.name not in symbols:
        raise ParseError(f"unknown symbol {node.name!r}", node.pos)
    if isinstance(node, Neg):
        _validate_symbols_only(node.operand, symbols)
    if isinstance(node, BinOp):
        _validate_symbols_only(node.left, symbols)
        _validate_symbols_only(node.right, symbols)
    if isinstance(node, Call):
        for arg in node.args:
            _validate_symbols_only(arg, symbols)


def _int_literal(node: ExprNode) -> int | None:
    if isinstance(node, IntLit):
        return node.value
    if isinstance(node, Neg):
        inner = _int_literal(node.operand)
        return None if inner is None else -inner
    return None


def parse_term(src: str, variable: str, parameters: Sequence[str] = ()) -> TermExpression:
    """Parse and validate a summand expression.

    Raises :class:`ParseError` with a position on syntax errors, unknown
    symbols/functions, and builtin arguments that are not integer-linear.
    """
    root = _Parser(_tokenize(src)).parse()
    _validate(root, variable, tuple(parameters))
    return TermExpression(root, variable, tuple(parameters))


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def serialize(node: ExprNode) -> str:
    """Canonical text form; parse(serialize(x)) reproduces the AST."""

    def prec(n: ExprNode) -> int:
        if isinstance(n, BinOp):
            if n.op in ("+", "-"):
                return _PREC_ADD
            if n.op in ("*", "/"):
                return _PREC_MUL
            return _PREC_POW
        if isinstance(n, Neg):
            return _PREC_UNARY
        return 9

    def render(n: ExprNode, parent_prec: int, right_side: bool = False) -> str:
        p = prec(n)
        if isinstance(n, IntLit):
            text = str(n.value)
        elif isinstance(n, Sym):
            text = n.name
        elif isinstance(n, Neg):
            text = f"-{render(n.operand, _PREC_UNARY)}"
        elif isinstance(n, Call):
            text = f"{n.func}({', '.join(render(a, 0) for a in n.args)})"
        elif isinstance(n, BinOp):
            if n.op == "^":
                text = f"{render(n.left, _PREC_POW + 1)}^{render(n.right, _PREC_POW)}"
            else:
                lhs = render(n.left, p)
                rhs = render(n.right, p + 1)
                text = f"{lhs}{n.op}{rhs}"
        else:
            raise TypeError(f"cannot serialize {n!r}")
        if p < parent_prec:
            return f"({text})"
        return text

    return render(node, 0)


# ---------------------------------------------------------------------------
# exact evaluation
# ---------------------------------------------------------------------------


def evaluate(term: TermExpression, var_value: int, params: Mapping[str, int]) -> Fraction:
    """Exact value of the summand at integer arguments.

    Binomials use the generalized falling-factorial convention; factorial
    and catalan raise :class:`EvalDomainError` for negative arguments, and
    division by zero raises ZeroDivisionError.
    """
    env = {term.variable: var_value, **{p: params[p] for p in term.parameters}}

    def ev(node: ExprNode) -> Fraction:
        if isinstance(node, IntLit):
            return Fraction(node.value)
        if isinstance(node, Sym):
            return Fraction(env[node.name])
        if isinstance(node, Neg):
            return -ev(node.operand)
        if isinstance(node, Call):
            args = [ev(a) for a in node.args]
            ints = [int(a) for a in args]  # linear validation makes these integral
            if node.func == "binomial":
                return Fraction(binomial_gen(ints[0], ints[1]))
            if node.func == "factorial":
                if ints[0] < 0:
                    raise EvalDomainError(f"factorial({ints[0]}) is undefined")
                return Fraction(math.factorial(ints[0]))
            if node.func == "catalan":
                if ints[0] < 0:
                    raise EvalDomainError(f"catalan({ints[0]}) is undefined")
                return Fraction(catalan(ints[0]))
            raise TypeError(f"unknown builtin {node.func}")
        if isinstance(node, BinOp):
            if node.op == "+":
                return ev(node.left) + ev(node.right)
            if node.op == "-":
                return ev(node.left) - ev(node.right)
            if node.op == "*":
                return ev(node.left) * ev(node.right)
            if node.op == "/":
                return ev(node.left) / ev(node.right)
            if node.op == "^":
                e = _int_literal(node.right)
                if e is None:
                    e_val = ev(node.right)
                    e = int(e_val)
                base = ev(node.left)
                return base ** e
        raise TypeError(f"cannot evaluate {node!r}")

    return ev(term.root)


def to_rational_function(term: TermExpression) -> RationalFunction:
    """Interpret a builtin-free expression as a rational function of the
    term's variable over Q(parameters); used to re-read serialized
    certificates and recurrence coefficients."""
    field = CoefficientField(term.parameters)
    return _to_ratfun(term.root, term.variable, field)


def to_polynomial(term: TermExpression) -> Polynomial:
    """Like :func:`to_rational_function`, but demands a polynomial."""
    rf = to_rational_function(term)
    if rf.den.degree != 0:
        raise ValueError(f"{term} is not a polynomial in {term.variable}")
    return rf.num * rf.den.coeff(0).inverse()


# ---------------------------------------------------------------------------
# shift quotients
# ---------------------------------------------------------------------------


def _contains_call(node: ExprNode) -> bool:
    if isinstance(node, Call):
        return True
    if isinstance(node, Neg):
        return _contains_call(node.operand)
    if isinstance(node, BinOp):
        return _contains_call(node.left) or _contains_call(node.right)
    return False


def _contains_symbolic_pow(node: ExprNode) -> bool:
    if isinstance(node, BinOp):
        if node.op == "^" and _int_literal(node.right) is None:
            return True
        return _contains_symbolic_pow(node.left) or _contains_symbolic_pow(node.right)
    if isinstance(node, Neg):
        return _contains_symbolic_pow(node.operand)
    return False


def _to_ratfun(
    node: ExprNode, variable: str, field: CoefficientField
) -> RationalFunction:
    """Builtin-free subexpression as a rational function of the variable."""
    if isinstance(node, IntLit):
        return RationalFunction.constant(field, variable, node.value)
    if isinstance(node, Sym):
        if node.name == variable:
            return RationalFunction.from_polynomial(Polynomial.variable(field, variable))
        return RationalFunction.constant(field, variable, field.parameter(node.name))
    if isinstance(node, Neg):
        return -_to_ratfun(node.operand, variable, field)
    if isinstance(node, BinOp):
        if node.op == "^":
            e = _int_literal(node.right)
            if e is None:
                raise NonHypergeometricError("symbolic exponent in a rational subtree")
            return _to_ratfun(node.left, variable, field) ** e
        left = _to_ratfun(node.left, variable, field)
        right = _to_ratfun(node.right, variable, field)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if node.op == "/":
            return left / right
    raise NonHypergeometricError(f"cannot interpret {node!r} as a rational function")


def _linear_poly(
    form: Mapping[str, Fraction], variable: str, field: CoefficientField
) -> tuple[Polynomial, int]:
    """Linear form -> (polynomial in the variable, integer variable coefficient)."""
    var_coeff = form.get(variable, Fraction(0))
    const = field.from_fraction(form.get("", Fraction(0)))
    for name, coeff in form.items():
        if name in ("", variable) or not coeff:
            continue
        const = const + field.parameter(name) * field.from_fraction(coeff)
    poly = Polynomial(field, variable, {1: field.coerce(var_coeff), 0: const})
    return poly, int(var_coeff)


def _gamma_ratio(x: Polynomial, step: int) -> RationalFunction:
    """Gamma(X + 1 + step) / Gamma(X + 1) as a rational function.

    For step >= 0 this is (X+1)(X+2)...(X+step); negative steps invert the
    telescoped product.  X is an integer-linear polynomial in the variable.
    """
    field, var = x.field, x.var
    one = RationalFunction.one(field, var)
    if step == 0:
        return one
    if step > 0:
        prod = one
        for i in range(1, step + 1):
            prod = prod * RationalFunction.from_polynomial(x + i)
        return prod
    prod = one
    for i in range(0, -step):
        prod = prod * RationalFunction.from_polynomial(x - i)
    return one / prod


def ratio_of(term: TermExpression, variable: str | None = None) -> RationalFunction:
    """The shift quotient t(k+1)/t(k), fully reduced.

    ``variable`` defaults to the term's own variable; passing another symbol
    treats that symbol as the shifted one and everything else as parameters
    (used to build the recurrence-direction quotient of bivariate terms).
    """
    if variable is None:
        variable = term.variable
    symbols = [term.variable, *term.parameters]
    if variable not in symbols:
        raise ValueError(f"{variable!r} is not a symbol of this term")
    params = tuple(s for s in symbols if s != variable)
    field = CoefficientField(params)

    def ratio(node: ExprNode) -> RationalFunction:
        if not _contains_call(node) and not _contains_symbolic_pow(node):
            # plain rational dependence: quotient of shifted and unshifted
            rf = _to_ratfun(node, variable, field)
            if rf.is_zero:
                raise NonHypergeometricError("identically zero factor")
            return rf.shift(1) / rf
        if isinstance(node, Neg):
            return ratio(node.operand)
        if isinstance(node, Call):
            forms = [_linear_form(a, symbols) for a in node.args]
            polys = [_linear_poly(f, variable, field) for f in forms]
            if node.func == "factorial":
                (x, dx), = polys
                return _gamma_ratio(x, dx)
            if node.func == "catalan":
                (x, dx), = polys
                two_x = x * 2
                return (
                    _gamma_ratio(two_x, 2 * dx)
                    / _gamma_ratio(x, dx)
                    / _gamma_ratio(x + 1, dx)
                )
            if node.func == "binomial":
                (nn, dn), (kk, dk) = polys
                return (
                    _gamma_ratio(nn, dn)
                    / _gamma_ratio(kk, dk)
                    / _gamma_ratio(nn - kk, dn - dk)
                )
            raise NonHypergeometricError(f"unknown builtin {node.func}")
        if isinstance(node, BinOp):
            if node.op == "*":
                return ratio(node.left) * ratio(node.right)
            if node.op == "/":
                return ratio(node.left) / ratio(node.right)
            if node.op == "^":
                e = _int_literal(node.right)
                if e is not None:
                    return ratio(node.left) ** e
                base = _int_literal(node.left)
                form = _linear_form(node.right, symbols)
                if base is None or form is None:
                    raise NonHypergeometricError("unsupported power structure")
                if base == 0:
                    raise NonHypergeometricError("zero base in a geometric factor")
                step = form.get(variable, Fraction(0))
                step_int = int(step)
                value = Fraction(base) ** step_int
                return RationalFunction.constant(field, variable, value)
            raise NonHypergeometricError(
                f"'{node.op}' over builtin factors has no rational shift quotient"
            )
        raise NonHypergeometricError(f"cannot form a shift quotient for {node!r}")

    return ratio(term.root)
