"""Recursive-descent parser for polynomial expressions.

Grammar::

    expr     := sign? term (('+' | '-') term)*
    term     := factor ('*'? factor)*
    factor   := rational | 'x0' | 'x1' | '(' expr ')' | '[' expr ',' expr ']'
    rational := integer ('/' positive-integer)?

``[a, b]`` is the commutator ``a*b - b*a``.  Juxtaposition is concatenation,
so ``2x0x1`` and ``2*x0*x1`` are the same term.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .series import ONE, NcPoly, Tensor2, bracket, conc, x0, x1

_TOKEN = re.compile(r"\s*(?:(\d+)|(x0|x1)|(\(x\))|([-+*/()\[\],]))")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}: {text!r}")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("letter", m.group(2), start))
        elif m.group(3):
            tokens.append(("tensor", "(x)", start))
        else:
            tokens.append(("op", m.group(4), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value:
            what = "end of input" if kind == "end" else repr(val)
            raise ParseError(f"expected {value!r}, found {what}", self.text, pos)

    def error(self, message: str):
        raise ParseError(message, self.text, self.peek()[2])

    def expr(self) -> NcPoly:
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term().scale(sign)
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def starts_factor(self) -> bool:
        kind, val, _ = self.peek()
        return kind in ("int", "letter") or (kind == "op" and val in ("(", "["))

    def term(self) -> NcPoly:
        if not self.starts_factor():
            self.error("expected a term")
        acc = self.factor()
        while True:
            if self.peek() == ("op", "*", self.peek()[2]):
                self.take()
                if not self.starts_factor():
                    self.error("expected a factor after '*'")
                acc = conc(acc, self.factor())
            elif self.starts_factor():
                acc = conc(acc, self.factor())
            else:
                return acc

    def factor(self) -> NcPoly:
        kind, val, pos = self.take()
        if kind == "int":
            num = int(val)
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                k2, v2, p2 = self.take()
                if k2 != "int":
                    raise ParseError("expected a denominator", self.text, p2)
                den = int(v2)
                if den == 0:
                    raise ParseError("zero denominator", self.text, p2)
                return ONE.scale(Fraction(num, den))
            return ONE.scale(num)
        if kind == "letter":
            return x0 if val == "x0" else x1
        if val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if val == "[":
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect("]")
            return bracket(a, b)
        raise ParseError(f"unexpected {val or 'end of input'!r}", self.text, pos)


def parse_poly(text: str) -> NcPoly:
    """Parse and expand an expression into an :class:`NcPoly`."""
    p = _Parser(text)
    result = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", text, pos)
    return result


def parse_tensor(text: str) -> Tensor2:
    """Parse the grouped text form ``(left) (x) right + ...`` of a tensor."""
    p = _Parser(text)
    out = Tensor2()
    if p.peek()[0] == "int" and p.peek()[1] == "0" and p.tokens[p.i + 1][0] == "end":
        return out
    while True:
        p.expect("(")
        left = p.expr()
        p.expect(")")
        kind, _, pos = p.take()
        if kind != "tensor":
            raise ParseError("expected '(x)'", text, pos)
        right = p.term()
        if len(right) != 1 or right.sorted_items()[0][1] != 1:
            raise ParseError("right factor must be a single word", text, pos)
        out.add_term(left, right.sorted_items()[0][0])
        if p.peek()[0] == "end":
            return Tensor2(dict(out.items()))
        p.expect("+")
