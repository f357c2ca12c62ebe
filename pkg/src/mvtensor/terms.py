"""Term language for many-valued connectives: syntax tree, parser, printer, evaluator.

Connective spelling is ASCII and shell friendly:

    term   := join
    join   := meet ("\\/" meet)*
    meet   := sum ("/\\" sum)*
    sum    := prod ("(+)" prod | "(.)" prod)*
    prod   := scalar ("." scalar)*
    scalar := [rational "*"] atom
    atom   := "neg" "(" term ")" | "gen" "(" int "," int ")"
            | rational | ident | "(" term ")"

Scalar multiplication binds tighter than the ring product ".", which binds
tighter than "(+)" and "(.)"; the lattice connectives bind loosest.  The
``gen(i,j)`` atom names a tensor generator and only occurs in derivation
terms produced by the closure engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import TermSyntaxError, UnboundVariable, UnsupportedConnective
from .rationals import ZERO, ONE, format_rat
from . import rationals


class Term:
    __slots__ = ()


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Const(Term):
    value: Fraction


@dataclass(frozen=True)
class Neg(Term):
    arg: Term


@dataclass(frozen=True)
class Oplus(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Odot(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Meet(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Join(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Scalar(Term):
    coeff: Fraction
    arg: Term


@dataclass(frozen=True)
class Prod(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Gen(Term):
    left_index: int
    right_index: int


# ---------------------------------------------------------------------------
# tokenizer / parser

_SYMBOLS = ("(+)", "(.)", "/\\", "\\/", "*", ".", "(", ")", ",")


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        matched = False
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                tokens.append((sym, sym, i))
                i += len(sym)
                matched = True
                break
        if matched:
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "/" and j + 1 < n and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            tokens.append(("NUM", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("IDENT", text[i:j], i))
            i = j
            continue
        raise TermSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("EOF", "", n))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self, ahead=0):
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok[0] != kind:
            raise TermSyntaxError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def rational(self, tok):
        q = Fraction(tok[1])
        if q < ZERO or q > ONE:
            raise TermSyntaxError(f"rational {tok[1]} lies outside [0, 1]", tok[2])
        return q

    def parse(self):
        t = self.join()
        tok = self.peek()
        if tok[0] != "EOF":
            raise TermSyntaxError(f"trailing input {tok[1]!r}", tok[2])
        return t

    def join(self):
        t = self.meet()
        while self.peek()[0] == "\\/":
            self.advance()
            t = Join(t, self.meet())
        return t

    def meet(self):
        t = self.sum()
        while self.peek()[0] == "/\\":
            self.advance()
            t = Meet(t, self.sum())
        return t

    def sum(self):
        t = self.prod()
        while self.peek()[0] in ("(+)", "(.)"):
            op = self.advance()[0]
            rhs = self.prod()
            t = Oplus(t, rhs) if op == "(+)" else Odot(t, rhs)
        return t

    def prod(self):
        t = self.scalar()
        while self.peek()[0] == ".":
            self.advance()
            t = Prod(t, self.scalar())
        return t

    def scalar(self):
        if self.peek()[0] == "NUM" and self.peek(1)[0] == "*":
            tok = self.advance()
            self.advance()
            return Scalar(self.rational(tok), self.atom())
        return self.atom()

    def atom(self):
        tok = self.advance()
        if tok[0] == "IDENT" and tok[1] == "neg":
            self.expect("(")
            t = self.join()
            self.expect(")")
            return Neg(t)
        if tok[0] == "IDENT" and tok[1] == "gen":
            self.expect("(")
            i = int(self.expect("NUM")[1])
            self.expect(",")
            j = int(self.expect("NUM")[1])
            self.expect(")")
            return Gen(i, j)
        if tok[0] == "IDENT":
            return Var(tok[1])
        if tok[0] == "NUM":
            return Const(self.rational(tok))
        if tok[0] == "(":
            t = self.join()
            self.expect(")")
            return t
        raise TermSyntaxError(f"unexpected token {tok[1]!r}", tok[2])


def parse(text: str) -> Term:
    """Parse a term; raises TermSyntaxError with a position on bad input."""
    return _Parser(text).parse()


# precedence levels used by the printer; larger binds tighter
_LEVEL_JOIN, _LEVEL_MEET, _LEVEL_SUM, _LEVEL_PROD, _LEVEL_ATOM = 1, 2, 3, 4, 6


def _level(t):
    if isinstance(t, Join):
        return _LEVEL_JOIN
    if isinstance(t, Meet):
        return _LEVEL_MEET
    if isinstance(t, (Oplus, Odot)):
        return _LEVEL_SUM
    if isinstance(t, Prod):
        return _LEVEL_PROD
    if isinstance(t, Scalar):
        return 5
    return _LEVEL_ATOM


def _fmt(t, floor):
    lvl = _level(t)
    if isinstance(t, Var):
        out = t.name
    elif isinstance(t, Const):
        out = format_rat(t.value)
    elif isinstance(t, Gen):
        out = f"gen({t.left_index},{t.right_index})"
    elif isinstance(t, Neg):
        out = f"neg({_fmt(t.arg, _LEVEL_JOIN)})"
    elif isinstance(t, Scalar):
        out = f"{format_rat(t.coeff)} * {_fmt(t.arg, _LEVEL_ATOM)}"
    elif isinstance(t, Prod):
        out = f"{_fmt(t.left, lvl)} . {_fmt(t.right, lvl + 1)}"
    elif isinstance(t, Oplus):
        out = f"{_fmt(t.left, lvl)} (+) {_fmt(t.right, lvl + 1)}"
    elif isinstance(t, Odot):
        out = f"{_fmt(t.left, lvl)} (.) {_fmt(t.right, lvl + 1)}"
    elif isinstance(t, Meet):
        out = f"{_fmt(t.left, lvl)} /\\ {_fmt(t.right, lvl + 1)}"
    elif isinstance(t, Join):
        out = f"{_fmt(t.left, lvl)} \\/ {_fmt(t.right, lvl + 1)}"
    else:
        raise TypeError(f"not a term: {t!r}")
    if lvl < floor:
        return f"({out})"
    return out


def format_term(t: Term) -> str:
    """Canonical text form; parse(format_term(t)) == t."""
    return _fmt(t, _LEVEL_JOIN)


# ---------------------------------------------------------------------------
# evaluation

class RatContext:
    """Evaluate terms over exact rationals in [0, 1].

    Scalar and ring-product connectives are rejected unless enabled, so a
    plain MV context stays a plain MV context.
    """

    def __init__(self, scalars=False, products=False):
        self.scalars = scalars
        self.products = products

    def const(self, q):
        return q

    oplus = staticmethod(rationals.oplus)
    neg = staticmethod(rationals.neg)
    odot = staticmethod(rationals.odot)
    meet = staticmethod(rationals.meet)
    join = staticmethod(rationals.join)

    def scalar(self, q, x):
        if not self.scalars:
            raise UnsupportedConnective("scalar multiplication is not available here")
        return q * x

    def prod(self, x, y):
        if not self.products:
            raise UnsupportedConnective("ring product is not available here")
        return x * y

    def gen(self, i, j):
        raise UnsupportedConnective("generator atoms have no meaning here")


def eval_term(term: Term, env: dict, ctx):
    """Structural evaluation of ``term`` in ``ctx`` with variables bound by ``env``."""
    if isinstance(term, Var):
        try:
            return env[term.name]
        except KeyError:
            raise UnboundVariable(f"variable {term.name!r} is not bound") from None
    if isinstance(term, Const):
        return ctx.const(term.value)
    if isinstance(term, Neg):
        return ctx.neg(eval_term(term.arg, env, ctx))
    if isinstance(term, Oplus):
        return ctx.oplus(eval_term(term.left, env, ctx), eval_term(term.right, env, ctx))
    if isinstance(term, Odot):
        return ctx.odot(eval_term(term.left, env, ctx), eval_term(term.right, env, ctx))
    if isinstance(term, Meet):
        return ctx.meet(eval_term(term.left, env, ctx), eval_term(term.right, env, ctx))
    if isinstance(term, Join):
        return ctx.join(eval_term(term.left, env, ctx), eval_term(term.right, env, ctx))
    if isinstance(term, Scalar):
        return ctx.scalar(term.coeff, eval_term(term.arg, env, ctx))
    if isinstance(term, Prod):
        return ctx.prod(eval_term(term.left, env, ctx), eval_term(term.right, env, ctx))
    if isinstance(term, Gen):
        return ctx.gen(term.left_index, term.right_index)
    raise TypeError(f"not a term: {term!r}")


def free_variables(term: Term) -> set:
    if isinstance(term, Var):
        return {term.name}
    if isinstance(term, (Const, Gen)):
        return set()
    if isinstance(term, Neg):
        return free_variables(term.arg)
    if isinstance(term, Scalar):
        return free_variables(term.arg)
    return free_variables(term.left) | free_variables(term.right)


_DEFAULT_SCALARS = (
    Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4),
    Fraction(3, 4), Fraction(1, 6), Fraction(5, 6), ONE,
)

_DEFAULT_CONSTS = (ZERO, ONE, Fraction(1, 2), Fraction(1, 3), Fraction(2, 3))


def random_term(rng, depth, variables=("x",), with_scalars=False,
                with_products=False, scalars=_DEFAULT_SCALARS,
                consts=_DEFAULT_CONSTS):
    """Draw a random term of the given maximum depth; deterministic per rng."""
    if depth <= 0 or rng.random() < 0.18:
        if rng.random() < 0.75:
            return Var(rng.choice(list(variables)))
        return Const(rng.choice(list(consts)))
    kinds = ["neg", "oplus", "odot", "meet", "join"]
    if with_scalars:
        kinds.append("scalar")
    if with_products:
        kinds.append("prod")
    kind = rng.choice(kinds)
    if kind == "neg":
        return Neg(random_term(rng, depth - 1, variables, with_scalars,
                               with_products, scalars, consts))
    if kind == "scalar":
        return Scalar(rng.choice(list(scalars)),
                      random_term(rng, depth - 1, variables, with_scalars,
                                  with_products, scalars, consts))
    left = random_term(rng, depth - 1, variables, with_scalars,
                       with_products, scalars, consts)
    right = random_term(rng, depth - 1, variables, with_scalars,
                        with_products, scalars, consts)
    node = {"oplus": Oplus, "odot": Odot, "meet": Meet,
            "join": Join, "prod": Prod}[kind]
    return node(left, right)
