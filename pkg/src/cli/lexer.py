"""
DSL 词法分析

语法按行组织：每行一条语句，# 之后为注释。
Token 记录 1 起始的行号与列号，供错误定位使用。
字符串用双引号，内容不能包含双引号或 #。
"""

import re
from dataclasses import dataclass
from typing import List, Optional

from ..utils.errors import DslLexError, DslSyntaxError

TOKEN_PATTERN = re.compile(
    r"(?P<ws>[ \t]+)"
    r"|(?P<str>\"[^\"]*\")"
    r"|(?P<int>\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<sym>[=*+,(){}^\-])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # str, int, name, sym, eol
    text: str
    line: int
    column: int


def tokenize_line(text: str, line: int, source: str = "<script>") -> List[Token]:
    """切分一行，返回以 eol 结尾的 token 列表"""
    code = text.split("#", 1)[0].rstrip()
    tokens: List[Token] = []
    pos = 0
    while pos < len(code):
        match = TOKEN_PATTERN.match(code, pos)
        if match is None:
            raise DslLexError(f"unexpected character {code[pos]!r}", line, pos + 1, source)
        kind = match.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, match.group(), line, pos + 1))
        pos = match.end()
    tokens.append(Token("eol", "", line, len(code) + 1))
    return tokens


class TokenStream:
    """单行 token 流"""

    def __init__(self, tokens: List[Token], source: str = "<script>"):
        self.tokens = tokens
        self.pos = 0
        self.source = source

    @property
    def peek(self) -> Token:
        return self.tokens[self.pos]

    def peek_at(self, offset: int) -> Token:
        idx = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[idx]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eol":
            self.pos += 1
        return tok

    def at(self, text: str) -> bool:
        tok = self.peek
        return tok.kind in ("sym", "name") and tok.text == text

    def at_end(self) -> bool:
        return self.peek.kind == "eol"

    def report(self, message: str, tok: Optional[Token] = None, error=DslSyntaxError):
        tok = tok or self.peek
        return error(message, tok.line, tok.column, self.source)

    def _describe(self, tok: Token) -> str:
        return "end of line" if tok.kind == "eol" else repr(tok.text)

    def eat(self, text: str) -> Token:
        if not self.at(text):
            raise self.report(f"expected {text!r}, found {self._describe(self.peek)}")
        return self.next()

    def eat_int(self) -> int:
        negative = False
        if self.at("-"):
            self.next()
            negative = True
        tok = self.peek
        if tok.kind != "int":
            raise self.report(f"expected an integer, found {self._describe(tok)}")
        self.next()
        return -int(tok.text) if negative else int(tok.text)

    def eat_str(self) -> str:
        """双引号字符串，返回去掉引号的内容"""
        tok = self.peek
        if tok.kind != "str":
            raise self.report(f"expected a quoted string, found {self._describe(tok)}")
        self.next()
        return tok.text[1:-1]

    def eat_name(self) -> Token:
        tok = self.peek
        if tok.kind != "name":
            raise self.report(f"expected a name, found {self._describe(tok)}")
        return self.next()

    def expect_end(self) -> None:
        if not self.at_end():
            raise self.report(f"unexpected {self._describe(self.peek)} after statement")
