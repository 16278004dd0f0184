"""Recursive-descent parser for scalar and class expressions.

Grammar (shared by the command line and the check suites)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ['^' ['-'] INT]
    atom   := INT | '(' expr ')' | NAME

Scalar names: ``i``, ``t``, ``zeta``, ``zetabar``.  Class names:
``one``, ``C``, ``F``, ``sigma``, ``sigmabar``, ``eta``; the polyvector
generators are spelled ``sigma^-1``, ``sigma^-1*C``, ``sigma^-1*F`` and
``sigmabar``.  Rationals are written ``p/q``.  Division requires a
single-monomial divisor and the only negative power allowed on a basis
name is ``sigma^-1``.

Parsing is total on the grammar; anything else raises
:class:`ExprSyntaxError` with a position or :class:`UnknownSymbol`.
"""

from __future__ import annotations

from .cohomology import CohClass
from .harmonic import HTClass
from .scalar import NonUnitDivisor, Scalar


class ExprSyntaxError(ValueError):
    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (line 1, column {pos + 1})"
        super().__init__(message)


class UnknownSymbol(ValueError):
    pass


_SCALAR_NAMES = {
    "i": Scalar.i,
    "t": Scalar.t,
    "zeta": Scalar.zeta,
    "zetabar": Scalar.zetabar,
}

_COH_KEYS = ("one", "C", "F", "sigma", "sigmabar", "eta")
_HT_KEYS = ("sigma_inv", "sigma_inv_C", "sigma_inv_F")


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind
        self.text = text
        self.pos = pos


def _tokenize(src: str):
    tokens = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(_Token("int", src[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(_Token("name", src[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", len(src)))
    return tokens


class _Element:
    """Intermediate value: scalar part plus basis-keyed scalar coefficients."""

    __slots__ = ("scalar", "parts")

    def __init__(self, scalar=None, parts=None):
        self.scalar = scalar if scalar is not None else Scalar.zero()
        self.parts = parts or {}

    @classmethod
    def from_scalar(cls, s: Scalar):
        return cls(scalar=s)

    @classmethod
    def from_basis(cls, key: str):
        return cls(parts={key: Scalar.one()})

    def is_scalar(self):
        return not self.parts

    def __add__(self, other):
        parts = dict(self.parts)
        for k, v in other.parts.items():
            s = parts.get(k, Scalar.zero()) + v
            if s:
                parts[k] = s
            else:
                parts.pop(k, None)
        return _Element(self.scalar + other.scalar, parts)

    def __neg__(self):
        return _Element(-self.scalar, {k: -v for k, v in self.parts.items()})

    def scaled(self, s: Scalar):
        return _Element(self.scalar * s, {k: v * s for k, v in self.parts.items()})


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.idx = 0

    def peek(self) -> _Token:
        return self.tokens[self.idx]

    def advance(self) -> _Token:
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect(self, kind) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ExprSyntaxError(
                f"expected {kind!r} but found {tok.text or 'end of input'!r}", tok.pos
            )
        return self.advance()

    # expr := ['-'] term (('+'|'-') term)*
    def parse_expr(self) -> _Element:
        if self.peek().kind == "-":
            self.advance()
            value = -self.parse_term()
        else:
            value = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            term = self.parse_term()
            value = value + (term if op.kind == "+" else -term)
        return value

    # term := factor (('*'|'/') factor)*
    def parse_term(self) -> _Element:
        value = self.parse_factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            rhs = self.parse_factor()
            value = self._combine(value, rhs, op)
        return value

    def _combine(self, lhs: _Element, rhs: _Element, op: _Token) -> _Element:
        if op.kind == "*":
            if rhs.is_scalar():
                return lhs.scaled(rhs.scalar)
            if lhs.is_scalar():
                return rhs.scaled(lhs.scalar)
            # The only basis-by-basis products in the grammar are the
            # compound polyvector names sigma^-1*C and sigma^-1*F.
            if set(lhs.parts) == {"sigma_inv"} and set(rhs.parts) <= {"C", "F"}:
                out = _Element()
                for key, coeff in rhs.parts.items():
                    out = out + _Element(
                        parts={f"sigma_inv_{key}": lhs.parts["sigma_inv"] * coeff}
                    )
                return out
            raise ExprSyntaxError("cannot multiply two basis classes", op.pos)
        if not rhs.is_scalar():
            raise ExprSyntaxError("division by a class is not defined", op.pos)
        try:
            inv = rhs.scalar.unit_inverse()
        except NonUnitDivisor as exc:
            raise ExprSyntaxError(f"divisor is not a unit: {exc}", op.pos) from exc
        return lhs.scaled(inv)

    # factor := atom ['^' ['-'] INT]
    def parse_factor(self) -> _Element:
        base_tok = self.peek()
        value = self.parse_atom()
        if self.peek().kind != "^":
            return value
        caret = self.advance()
        sign = 1
        if self.peek().kind == "-":
            self.advance()
            sign = -1
        exp_tok = self.expect("int")
        n = sign * int(exp_tok.text)
        if value.is_scalar():
            try:
                return _Element.from_scalar(value.scalar**n)
            except NonUnitDivisor as exc:
                raise ExprSyntaxError(
                    f"negative power of a non-monomial: {exc}", caret.pos
                ) from exc
        if set(value.parts) == {"sigma"} and value.parts["sigma"] == Scalar.one():
            if n == -1:
                return _Element.from_basis("sigma_inv")
            if n == 1:
                return value
        raise ExprSyntaxError(
            f"cannot raise {base_tok.text!r} to the power {n}", caret.pos
        )

    # atom := INT | '(' expr ')' | NAME
    def parse_atom(self) -> _Element:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            return _Element.from_scalar(Scalar.from_value(int(tok.text)))
        if tok.kind == "(":
            self.advance()
            value = self.parse_expr()
            self.expect(")")
            return value
        if tok.kind == "name":
            self.advance()
            if tok.text in _SCALAR_NAMES:
                return _Element.from_scalar(_SCALAR_NAMES[tok.text]())
            if tok.text in _COH_KEYS:
                return _Element.from_basis(tok.text)
            raise UnknownSymbol(f"unknown symbol {tok.text!r} at column {tok.pos + 1}")
        raise ExprSyntaxError(
            f"expected a value but found {tok.text or 'end of input'!r}", tok.pos
        )


def _parse(src: str) -> _Element:
    parser = _Parser(src)
    value = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "end":
        raise ExprSyntaxError(f"unexpected trailing {tok.text!r}", tok.pos)
    return value


def parse_scalar_expr(src: str) -> Scalar:
    """Parse an expression that must reduce to a scalar."""
    value = _parse(src)
    if not value.is_scalar():
        raise ExprSyntaxError("expected a scalar expression, found basis classes")
    return value.scalar


def parse_class_expr(src: str, context: str | None = None):
    """Parse a class expression into a CohClass or HTClass.

    ``context`` may be ``"coh"`` or ``"ht"`` to force the target space;
    otherwise the polyvector generators select the HT side and
    everything else (including plain ``sigmabar``) parses as even
    cohomology.
    """
    value = _parse(src)
    ht_used = any(k in value.parts for k in _HT_KEYS)
    if context is None:
        context = "ht" if ht_used else "coh"
    if context == "coh":
        if ht_used:
            raise ExprSyntaxError(
                "polyvector generators are not even-cohomology classes"
            )
        return CohClass(
            a=value.parts.get("one", Scalar.zero()) + value.scalar,
            cC=value.parts.get("C", Scalar.zero()),
            cF=value.parts.get("F", Scalar.zero()),
            cs=value.parts.get("sigma", Scalar.zero()),
            csb=value.parts.get("sigmabar", Scalar.zero()),
            b=value.parts.get("eta", Scalar.zero()),
        )
    if context == "ht":
        stray = set(value.parts) - set(_HT_KEYS) - {"sigmabar"}
        if stray or value.scalar:
            bad = ", ".join(sorted(stray)) or "a scalar term"
            raise ExprSyntaxError(f"{bad} does not lie in the polyvector span")
        return HTClass(
            p=value.parts.get("sigma_inv", Scalar.zero()),
            qC=value.parts.get("sigma_inv_C", Scalar.zero()),
            qF=value.parts.get("sigma_inv_F", Scalar.zero()),
            r=value.parts.get("sigmabar", Scalar.zero()),
        )
    raise ValueError(f"unknown context {context!r}")
