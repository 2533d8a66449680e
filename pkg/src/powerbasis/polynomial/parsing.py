"""Text grammar for integer polynomials.

    poly := [sign] term (sign term)*
    term := INT | [INT] ['*'] 'x' ['^' UINT]
    sign := '+' | '-'

Whitespace is ignored and repeated powers are summed.
"""

from __future__ import annotations

from .dense import IntPolynomial


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}: {text!r}")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def digits(self) -> int | None:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            return None
        return int(self.text[start : self.pos])

    def fail(self, message: str):
        raise ParseError(message, self.pos, self.text)


def parse_polynomial(text: str, var: str = "x") -> IntPolynomial:
    """Parse e.g. ``"x^5+2x+2"`` into an :class:`IntPolynomial`."""
    s = _Scanner(text)
    if not s.peek():
        s.fail("empty polynomial")
    coeffs: dict[int, int] = {}
    sign = 1
    if s.peek() in "+-":
        sign = -1 if s.take() == "-" else 1
    while True:
        coeff, exp = _term(s, var)
        coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
        nxt = s.peek()
        if not nxt:
            break
        if nxt not in "+-":
            s.fail(f"expected '+' or '-', found {nxt!r}")
        sign = -1 if s.take() == "-" else 1
    top = max(coeffs)
    return IntPolynomial([coeffs.get(i, 0) for i in range(top + 1)])


def _term(s: _Scanner, var: str) -> tuple[int, int]:
    coeff = s.digits()
    if s.peek() == "*":
        if coeff is None:
            s.fail("'*' without a coefficient")
        s.take()
        if s.peek() != var:
            s.fail(f"expected {var!r} after '*'")
    if s.peek() != var:
        if coeff is None:
            s.fail("expected a term")
        return coeff, 0
    s.take()
    exp = 1
    if s.peek() == "^":
        s.take()
        e = s.digits()
        if e is None:
            s.fail("expected an exponent after '^'")
        exp = e
    return (1 if coeff is None else coeff), exp
