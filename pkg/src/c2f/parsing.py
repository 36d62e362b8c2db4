"""Recursive-descent parser for elements, quaternions and forms.

Grammar::

    form    := ("herm" | "quad" | "bilin") "[" expr (";" expr)* "]"
             | "fquad" "[" [block (";" block)*] ["|" expr (";" expr)*] "]"
             | "gram" "[" "[" row (";" row)* "]" "]"
    block   := "[" expr "," expr "]"
    row     := expr ("," expr)*
    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := atom ["^" ["-"] INT]
    atom    := INT | BIN | "t" | "i" | "j" | "k" | "(" expr ")"
             | "q" "{" expr ";" expr ";" expr ";" expr "}"

``INT`` is a decimal and ``BIN`` a ``0b`` literal; both denote GF(2^k)
elements in the power basis of the modulus.  Errors carry the line, column
and the set of tokens that would have been accepted.
"""

import re

from .field import FieldError, FieldElem
from .forms import FormError, HermForm, QBase, QuadFormF, QuadFormQ
from .quaternion import Quaternion

FORM_HEADS = ("herm", "quad", "bilin", "fquad", "gram")

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<bin>0b[01]+)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()\[\]{};,|])
""", re.VERBOSE)


class ParseError(ValueError):
    def __init__(self, message, line, column, expected=()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        exp = f"; expected one of {', '.join(self.expected)}" if self.expected else ""
        super().__init__(f"line {line}, column {column}: {message}{exp}")


class Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column

    def __repr__(self):
        return f"Token({self.kind}, {self.text!r})"


def tokenize(text):
    out = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        s = m.group()
        if kind != "ws":
            out.append(Token(kind, s, line, col))
        for ch in s:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
    out.append(Token("eof", "", line, col))
    return out


class Parser:
    """Parses against a field, and optionally a quaternion algebra with involution."""

    def __init__(self, text, desc, algebra=None, theta=None):
        self.toks = tokenize(text)
        self.pos = 0
        self.desc = desc
        self.algebra = algebra
        self.base = None
        if algebra is not None:
            self.base = QBase(algebra, theta) if theta is not None else QBase.canonical(algebra)

    # -- token helpers
    @property
    def tok(self):
        return self.toks[self.pos]

    def error(self, message, expected=(), tok=None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.column, expected)

    def accept(self, text):
        if self.tok.text == text and self.tok.kind in ("op", "name"):
            self.pos += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            got = self.tok.text or "end of input"
            raise self.error(f"unexpected {got!r}", [repr(text)])

    def finish(self):
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r}", ["end of input"])

    # -- top level
    def parse(self):
        if self.tok.kind == "name" and self.tok.text in FORM_HEADS:
            out = self.form()
        else:
            out = self.expr()
        self.finish()
        return out

    def form(self):
        head = self.tok
        self.pos += 1
        try:
            if head.text == "fquad":
                return self._fquad()
            if head.text == "gram":
                return self._gram(head)
            self.expect("[")
            entries = self._list(";")
            self.expect("]")
            if head.text == "bilin":
                return HermForm(self.desc, [self._scalar(e, head) for e in entries])
            if self.base is None:
                if head.text == "herm":
                    return HermForm(self.desc, [self._scalar(e, head) for e in entries])
                raise self.error("quad[...] needs a quaternion algebra (--quat)", tok=head)
            entries = [self._quat(e) for e in entries]
            if head.text == "herm":
                return HermForm(self.base, entries)
            return QuadFormQ(self.base, entries)
        except FieldError as e:
            raise self.error(str(e), tok=head) from e

    def _fquad(self):
        self.expect("[")
        blocks, diag = [], []
        if self.tok.text == "[":
            blocks.append(self._block())
            while self.accept(";"):
                blocks.append(self._block())
        if self.accept("|") or (not blocks and self.tok.text != "]"):
            diag = self._list(";")
        self.expect("]")
        return QuadFormF(self.desc, blocks, [self._scalar(d) for d in diag])

    def _block(self):
        self.expect("[")
        b = self._scalar(self.expr())
        self.expect(",")
        c = self._scalar(self.expr())
        self.expect("]")
        return b, c

    def _gram(self, head):
        if self.base is None:
            raise self.error("gram[...] needs a quaternion algebra (--quat)", tok=head)
        self.expect("[")
        self.expect("[")
        rows = [self._list(",")]
        while self.accept(";"):
            rows.append(self._list(","))
        self.expect("]")
        self.expect("]")
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise self.error(f"gram matrix must be square ({n} rows)", tok=head)
        return QuadFormQ(self.base, gram=[[self._quat(e) for e in r] for r in rows])

    def _list(self, sep):
        items = [self.expr()]
        while self.accept(sep):
            items.append(self.expr())
        return items

    def _scalar(self, x, tok=None):
        if isinstance(x, Quaternion):
            if not x.is_scalar:
                raise self.error(f"expected a field element, got quaternion {x}", tok=tok)
            return x.coords[0]
        return x

    def _quat(self, x):
        return x if isinstance(x, Quaternion) else self.algebra.scalar(x)

    # -- expressions
    def expr(self):
        x = self.term()
        while self.tok.text in ("+", "-") and self.tok.kind == "op":
            self.pos += 1
            x = self._binop(x, self.term(), "+")
        return x

    def term(self):
        x = self.unary()
        while self.tok.text in ("*", "/") and self.tok.kind == "op":
            op = self.tok
            self.pos += 1
            x = self._binop(x, self.unary(), op.text, op)
        return x

    def unary(self):
        if self.accept("-"):
            return self.unary()  # characteristic 2
        return self.power()

    def power(self):
        x = self.atom()
        if self.accept("^"):
            tok = self.tok
            if self.accept("-"):
                e = -self._int()
            else:
                e = self._int()
            try:
                if isinstance(x, Quaternion):
                    return x ** e if e >= 0 else x.inv() ** (-e)
                return x ** e
            except ZeroDivisionError as err:
                raise self.error(str(err), tok=tok) from err
        return x

    def _int(self):
        if self.tok.kind != "int":
            raise self.error(f"unexpected {self.tok.text!r}", ["integer exponent"])
        v = int(self.tok.text)
        self.pos += 1
        return v

    def atom(self):
        tok = self.tok
        if tok.kind in ("int", "bin"):
            self.pos += 1
            v = int(tok.text, 2) if tok.kind == "bin" else int(tok.text)
            try:
                return self.desc.const(v)
            except FieldError as e:
                raise self.error(str(e), tok=tok) from e
        if tok.kind == "name":
            if tok.text == "t":
                if not self.desc.has_t:
                    raise self.error("t is not available over a finite field", tok=tok)
                self.pos += 1
                return self.desc.t
            if tok.text in ("i", "j", "k"):
                if self.algebra is None:
                    raise self.error(f"{tok.text} needs a quaternion algebra (--quat)", tok=tok)
                self.pos += 1
                return getattr(self.algebra, tok.text)
            if tok.text == "q":
                return self._qliteral()
            raise self.error(f"unknown name {tok.text!r}", ["t", "i", "j", "k", "q{", "number"])
        if self.accept("("):
            x = self.expr()
            self.expect(")")
            return x
        got = tok.text or "end of input"
        raise self.error(f"unexpected {got!r}", ["number", "t", "i", "j", "k", "q{", "(", "-"])

    def _qliteral(self):
        tok = self.tok
        if self.algebra is None:
            raise self.error("q{...} needs a quaternion algebra (--quat)", tok=tok)
        self.pos += 1
        self.expect("{")
        cs = [self._scalar(self.expr())]
        for _ in range(3):
            self.expect(";")
            cs.append(self._scalar(self.expr()))
        self.expect("}")
        return self.algebra(*cs)

    def _binop(self, x, y, op, tok=None):
        if isinstance(x, Quaternion) or isinstance(y, Quaternion):
            x, y = self._quat(x), self._quat(y)
        try:
            if op == "+":
                return x + y
            if op == "*":
                return x * y
            if not y:
                raise ZeroDivisionError("division by zero")
            return x / y if isinstance(x, FieldElem) else x * y.inv()
        except ZeroDivisionError as e:
            raise self.error(str(e), tok=tok) from e


def parse(text, desc, algebra=None, theta=None):
    """Element, quaternion or form described by ``text``."""
    return Parser(text, desc, algebra, theta).parse()


def parse_element(text, desc):
    x = parse(text, desc)
    if not isinstance(x, FieldElem):
        raise ParseError(f"expected a field element, got {x}", 1, 1)
    return x


def parse_quaternion(text, algebra):
    x = Parser(text, algebra.desc, algebra).parse()
    if isinstance(x, FieldElem):
        return algebra.scalar(x)
    if not isinstance(x, Quaternion):
        raise ParseError("expected a quaternion", 1, 1)
    return x


__all__ = ["ParseError", "Parser", "parse", "parse_element", "parse_quaternion", "tokenize",
           "FormError"]
