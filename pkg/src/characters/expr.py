"""Character expressions such as sym(U4,4), ext(W7,3), tensor(W7,W3d), evaluated against a table."""
import re

from ..errors import TextFormatError
from .classfunc import ClassFunction, ext_power, sym_power
from .table import CharacterTable

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_']*)|(\d+)|([(),+]))")


def _tokens(text: str) -> list[str]:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise TextFormatError("Unexpected character at %d in %r" % (pos, text))
        out.append(next(g for g in match.groups() if g is not None))
        pos = match.end()
    return out


class _Parser:
    def __init__(self, text: str, table: CharacterTable):
        self.text = text
        self.tokens = _tokens(text)
        self.pos = 0
        self.table = table

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        token = self.peek()
        if token is None or (expected is not None and token != expected):
            raise TextFormatError("Expected %s in %r" % (expected or "more input", self.text))
        self.pos += 1
        return token

    def integer(self) -> int:
        token = self.take()
        if not token.isdigit():
            raise TextFormatError("Expected an integer, got %r in %r" % (token, self.text))
        return int(token)

    def sum(self) -> ClassFunction:
        total = self.term()
        while self.peek() == "+":
            self.take("+")
            total = total + self.term()
        return total

    def term(self) -> ClassFunction:
        name = self.take()
        if self.peek() != "(":
            return self.table[name]
        self.take("(")
        first = self.sum()
        if name in ("sym", "ext"):
            self.take(",")
            k = self.integer()
            result = sym_power(first, k) if name == "sym" else ext_power(first, k)
        elif name == "tensor":
            result = first
            while self.peek() == ",":
                self.take(",")
                result = result * self.sum()
        elif name in ("conj", "dual"):
            result = first.conj()
        else:
            raise TextFormatError("Unknown operation %r in %r" % (name, self.text))
        self.take(")")
        return result


def parse_character(text: str, table: CharacterTable) -> ClassFunction:
    """Grammar: sum of terms; a term is a table label or op(args) with op in sym, ext, tensor, conj, dual"""
    parser = _Parser(text, table)
    result = parser.sum()
    if parser.peek() is not None:
        raise TextFormatError("Trailing input %r in %r" % (parser.peek(), text))
    return result
