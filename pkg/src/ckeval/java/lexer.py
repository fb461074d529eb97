"""Tokenizer for the supported Java subset.

Comments and whitespace are skipped; every token keeps its 1-based line
and column so diagnostics can point into the file.
"""

from dataclasses import dataclass

KEYWORDS = {
    "abstract", "boolean", "break", "byte", "case", "catch", "char", "class",
    "const", "continue", "default", "do", "double", "else", "enum", "extends",
    "final", "finally", "float", "for", "goto", "if", "implements", "import",
    "instanceof", "int", "interface", "long", "native", "new", "null",
    "package", "private", "protected", "public", "return", "short", "static",
    "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
    "transient", "try", "void", "volatile", "while", "true", "false",
}

PRIMITIVES = {"boolean", "byte", "char", "double", "float", "int", "long",
              "short", "void"}

MODIFIERS = {"abstract", "final", "native", "private", "protected", "public",
             "static", "strictfp", "synchronized", "transient", "volatile"}

PUNCTUATION = {
    "(", ")", "{", "}", "[", "]", ";", ",", ".", "=", "+", "-", "*", "/",
    "%", "<", ">", "!", "&", "|", "^", "~", "?", ":", "@",
}


@dataclass(frozen=True)
class Token:
    kind: str  # ident | keyword | number | string | char | punct | eof
    text: str
    line: int
    column: int


class LexError(Exception):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    line = 1
    col = 1
    n = len(text)

    def advance(count: int) -> None:
        nonlocal i, line, col
        for _ in range(count):
            if text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            advance(1)
            continue
        if ch == "/" and i + 1 < n and text[i + 1] == "/":
            while i < n and text[i] != "\n":
                advance(1)
            continue
        if ch == "/" and i + 1 < n and text[i + 1] == "*":
            start_line, start_col = line, col
            advance(2)
            while i + 1 < n and not (text[i] == "*" and text[i + 1] == "/"):
                advance(1)
            if i + 1 >= n:
                raise LexError("unterminated block comment", start_line, start_col)
            advance(2)
            continue
        if ch.isalpha() or ch == "_" or ch == "$":
            start, start_line, start_col = i, line, col
            while i < n and (text[i].isalnum() or text[i] in "_$"):
                advance(1)
            word = text[start:i]
            kind = "keyword" if word in KEYWORDS else "ident"
            tokens.append(Token(kind, word, start_line, start_col))
            continue
        if ch.isdigit():
            start, start_line, start_col = i, line, col
            while i < n and (text[i].isalnum() or text[i] in "._"):
                # good enough for int/float/hex literals; value is never used
                if text[i] == "." and not (i + 1 < n and text[i + 1].isdigit()):
                    break
                advance(1)
            tokens.append(Token("number", text[start:i], start_line, start_col))
            continue
        if ch == '"' or ch == "'":
            quote = ch
            start, start_line, start_col = i, line, col
            advance(1)
            while i < n and text[i] != quote:
                if text[i] == "\\" and i + 1 < n:
                    advance(2)
                elif text[i] == "\n":
                    raise LexError("unterminated literal", start_line, start_col)
                else:
                    advance(1)
            if i >= n:
                raise LexError("unterminated literal", start_line, start_col)
            advance(1)
            kind = "string" if quote == '"' else "char"
            tokens.append(Token(kind, text[start:i], start_line, start_col))
            continue
        if ch in PUNCTUATION:
            tokens.append(Token("punct", ch, line, col))
            advance(1)
            continue
        raise LexError(f"unexpected character {ch!r}", line, col)

    tokens.append(Token("eof", "", line, col))
    return tokens
