"""Expression grammar and pretty printers for disc and U_q elements.

Shared grammar (both algebras):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | atom ('^' ['-'] INT)?
    atom   := INT | NAME | '(' expr ')'

Disc names: z, zs (= z*), y (= 1 - z*zs), q, i.  U_q names: e, f, k,
kinv, q, i.  Multiplication is noncommutative left-to-right and must be
written explicitly (no juxtaposition).  '/' and negative exponents are
restricted to scalar operands, so rational literals like 3/4 and printed
scalars like (q^4 - 1)/(q^2) parse directly.
"""

from __future__ import annotations

from .disc import DiscElem, YPolynomial, y_elem
from .scalars import GR_ONE, SC_ONE, GaussianRational, Scalar
from .uq import UqElem


class ParseError(ValueError):
    """Malformed expression; carries position and the expected tokens."""

    def __init__(self, message: str, pos: int, expected=()):
        self.pos = pos
        self.expected = tuple(expected)
        tail = f" (expected one of: {', '.join(expected)})" if expected else ""
        super().__init__(f"{message} at position {pos}{tail}")


_SYMBOLS = "+-*/^()"


def _tokenize(text: str):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in _SYMBOLS:
            toks.append((ch, ch, pos))
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            toks.append(("INT", text[start:pos], start))
            continue
        if ch.isalpha():
            start = pos
            while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            toks.append(("NAME", text[start:pos], start))
            continue
        raise ParseError(f"unexpected character {ch!r}", pos)
    toks.append(("END", "", n))
    return toks


class _Parser:
    """Recursive-descent parser over a fixed name table.

    The name table maps identifiers to nullary element constructors; the
    element type must support +, -, *, scale and as_scalar.
    """

    def __init__(self, text: str, names: dict, from_scalar):
        self.toks = _tokenize(text)
        self.idx = 0
        self.names = names
        self.from_scalar = from_scalar

    def peek(self):
        return self.toks[self.idx]

    def advance(self):
        tok = self.toks[self.idx]
        self.idx += 1
        return tok

    def expect(self, kind: str):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"got {tok[1]!r}", tok[2], expected=(kind,))
        return self.advance()

    def parse(self):
        out = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            raise ParseError(f"trailing input {tok[1]!r}", tok[2], expected=("END",))
        return out

    def expr(self):
        out = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self):
        out = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.advance()
            rhs = self.factor()
            if op == "*":
                out = out * rhs
            else:
                s = rhs.as_scalar()
                if s is None:
                    raise ParseError("division by a non-scalar element", pos)
                if s.is_zero():
                    raise ParseError("division by zero", pos)
                out = out.scale(s.inverse())
        return out

    def factor(self):
        tok = self.peek()
        if tok[0] == "-":
            self.advance()
            return -self.factor()
        out = self.atom()
        if self.peek()[0] == "^":
            _, _, pos = self.advance()
            sign = 1
            if self.peek()[0] == "-":
                self.advance()
                sign = -1
            exp_tok = self.expect("INT")
            n = sign * int(exp_tok[1])
            if n >= 0:
                out = out ** n
            else:
                s = out.as_scalar()
                if s is None:
                    raise ParseError("negative power of a non-scalar element", pos)
                if s.is_zero():
                    raise ParseError("negative power of zero", pos)
                out = self.from_scalar(s ** n)
        return out

    def atom(self):
        tok = self.peek()
        if tok[0] == "INT":
            self.advance()
            return self.from_scalar(Scalar.from_int(int(tok[1])))
        if tok[0] == "NAME":
            self.advance()
            ctor = self.names.get(tok[1])
            if ctor is None:
                raise ParseError(
                    f"unknown name {tok[1]!r}", tok[2], expected=tuple(self.names)
                )
            return ctor()
        if tok[0] == "(":
            self.advance()
            out = self.expr()
            self.expect(")")
            return out
        raise ParseError(
            f"got {tok[1]!r}" if tok[0] != "END" else "unexpected end of input",
            tok[2],
            expected=("INT", "NAME", "("),
        )


_DISC_NAMES = {
    "z": DiscElem.z,
    "zs": DiscElem.zs,
    "y": y_elem,
    "q": lambda: DiscElem.from_scalar(Scalar.q_power(1)),
    "i": lambda: DiscElem.from_scalar(Scalar.i_unit()),
}

_UQ_NAMES = {
    "e": UqElem.e,
    "f": UqElem.f,
    "k": UqElem.k,
    "kinv": UqElem.kinv,
    "q": lambda: UqElem.from_scalar(Scalar.q_power(1)),
    "i": lambda: UqElem.from_scalar(Scalar.i_unit()),
}


def parse_disc_expr(text: str) -> DiscElem:
    """Parse a disc expression into normal form."""
    return _Parser(text, _DISC_NAMES, DiscElem.from_scalar).parse()


def parse_uq_expr(text: str) -> UqElem:
    """Parse a U_q expression into PBW normal form."""
    return _Parser(text, _UQ_NAMES, UqElem.from_scalar).parse()


def parse_scalar_expr(text: str) -> Scalar:
    """Parse an expression that must lie in the ground field Q(i)(q)."""
    elem = parse_disc_expr(text)
    s = elem.as_scalar()
    if s is None:
        raise ParseError("expression is not a scalar", 0)
    return s


# --- printers (inverse to the parsers on normal forms) ---


def gauss_str(c: GaussianRational) -> str:
    return str(c)


def _gauss_chunk(c: GaussianRational):
    """(sign, text) with text safe as a product factor."""
    if c.im == 0:
        return ("-", str(-c.re)) if c.re < 0 else ("+", str(c.re))
    if c.re == 0:
        if c.im == 1:
            return "+", "i"
        if c.im == -1:
            return "-", "i"
        return ("-", f"{-c.im}*i") if c.im < 0 else ("+", f"{c.im}*i")
    return "+", f"({c})"


def poly_str(coeffs) -> str:
    """Render a q-polynomial (low-first coefficient tuple), highest first."""
    if not coeffs:
        return "0"
    pieces = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if not c:
            continue
        sign, ctext = _gauss_chunk(c)
        if d == 0:
            body = ctext
        else:
            var = "q" if d == 1 else f"q^{d}"
            body = var if ctext == "1" else f"{ctext}*{var}"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def _num_str(s: Scalar) -> str:
    nonzero = sum(1 for c in s.num if c)
    if nonzero > 1:
        return f"({poly_str(s.num)})"
    return poly_str(s.num)


def scalar_str(s: Scalar) -> str:
    if s.is_zero():
        return "0"
    if s.den == (GR_ONE,):
        return poly_str(s.num)
    return f"{_num_str(s)}/({poly_str(s.den)})"


def _scalar_factor(s: Scalar) -> str:
    """Render a Scalar so that appending '*mono' parses back correctly."""
    if s.den == (GR_ONE,):
        return _num_str(s)
    return f"{_num_str(s)}/({poly_str(s.den)})"


def _join_terms(rendered: list[str]) -> str:
    out = rendered[0]
    for text in rendered[1:]:
        if text.startswith("-"):
            out += f" - {text[1:]}"
        else:
            out += f" + {text}"
    return out


def disc_str(a: DiscElem) -> str:
    if not a.terms:
        return "0"
    rendered = []
    for (i, j) in sorted(a.terms, key=lambda key: (key[0] + key[1], key[0])):
        c = a.terms[(i, j)]
        mono = []
        if i:
            mono.append("z" if i == 1 else f"z^{i}")
        if j:
            mono.append("zs" if j == 1 else f"zs^{j}")
        mtext = "*".join(mono)
        if not mtext:
            rendered.append(_scalar_factor(c))
        elif c == SC_ONE:
            rendered.append(mtext)
        elif c == -SC_ONE:
            rendered.append(f"-{mtext}")
        else:
            rendered.append(f"{_scalar_factor(c)}*{mtext}")
    return _join_terms(rendered)


def uq_str(a: UqElem) -> str:
    if not a.terms:
        return "0"
    rendered = []
    for (i, m, j) in sorted(
        a.terms, key=lambda key: (key[0] + abs(key[1]) + key[2], key)
    ):
        c = a.terms[(i, m, j)]
        mono = []
        if i:
            mono.append("e" if i == 1 else f"e^{i}")
        if m > 0:
            mono.append("k" if m == 1 else f"k^{m}")
        elif m < 0:
            mono.append("kinv" if m == -1 else f"kinv^{-m}")
        if j:
            mono.append("f" if j == 1 else f"f^{j}")
        mtext = "*".join(mono)
        if not mtext:
            rendered.append(_scalar_factor(c))
        elif c == SC_ONE:
            rendered.append(mtext)
        elif c == -SC_ONE:
            rendered.append(f"-{mtext}")
        else:
            rendered.append(f"{_scalar_factor(c)}*{mtext}")
    return _join_terms(rendered)


def ypoly_str(p: YPolynomial) -> str:
    if not p.coeffs:
        return "0"
    rendered = []
    for t in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[t]
        if not c:
            continue
        mono = "" if t == 0 else ("y" if t == 1 else f"y^{t}")
        if not mono:
            rendered.append(_scalar_factor(c))
        elif c == SC_ONE:
            rendered.append(mono)
        elif c == -SC_ONE:
            rendered.append(f"-{mono}")
        else:
            rendered.append(f"{_scalar_factor(c)}*{mono}")
    return _join_terms(rendered)
