"""Terms of the free one-generated left-distributive algebra.

A word is a binary application tree.  Leaves are positive integers:
1 denotes the generator, and a leaf k abbreviates the left comb
(..((1*1)*1)..)*1 with k leaves, which always evaluates to k mod 2^n.
"""

from __future__ import annotations

from dataclasses import dataclass

from laver.errors import WordSyntaxError
from laver.table import LaverTable


@dataclass(frozen=True)
class App:
    """Application node: left * right."""

    left: "Word"
    right: "Word"


Word = int | App

GENERATOR: Word = 1


def integer_word(k: int) -> Word:
    """The explicit left-comb word for the integer k (k >= 1)."""
    if k < 1:
        raise ValueError("integer words start at 1")
    w: Word = 1
    for _ in range(k - 1):
        w = App(w, 1)
    return w


def eval_word(w: Word, table: LaverTable) -> int:
    """Evaluate w in A_n by a bottom-up (post-order) walk.

    Integer leaves evaluate to k mod 2^n directly; this agrees with the
    left-comb expansion because evaluation of k*1 is k+1 mod 2^n.
    """
    size = table.size
    apply = table.apply
    # iterative post-order: parsed words can be arbitrarily deep
    out: list[int] = []
    todo: list[tuple[Word, bool]] = [(w, False)]
    while todo:
        node, expanded = todo.pop()
        if isinstance(node, int):
            if node < 1:
                raise ValueError("word leaves must be positive integers")
            out.append(node % size)
        elif expanded:
            right = out.pop()
            left = out.pop()
            out.append(apply(left, right))
        else:
            todo.append((node, True))
            todo.append((node.right, False))
            todo.append((node.left, False))
    return out[0]


def format_word(w: Word) -> str:
    """Render with * left-associative; parentheses only where required."""
    if isinstance(w, int):
        return str(w)
    left = format_word(w.left)
    right = format_word(w.right)
    if isinstance(w.right, App):
        right = f"({right})"
    return f"{left}*{right}"


def parse_word(text: str) -> Word:
    """Parse a word expression: positive integers, * (left-associative),
    and parentheses."""
    tokens = _tokenize(text)
    pos = 0

    def term() -> Word:
        nonlocal pos
        if pos >= len(tokens):
            raise WordSyntaxError("unexpected end of expression")
        tok = tokens[pos]
        if tok == "(":
            pos += 1
            inner = expr()
            if pos >= len(tokens) or tokens[pos] != ")":
                raise WordSyntaxError("missing ')'")
            pos += 1
            return inner
        if isinstance(tok, int):
            pos += 1
            return tok
        raise WordSyntaxError(f"unexpected token {tok!r}")

    def expr() -> Word:
        nonlocal pos
        node = term()
        while pos < len(tokens) and tokens[pos] == "*":
            pos += 1
            node = App(node, term())
        return node

    result = expr()
    if pos != len(tokens):
        raise WordSyntaxError(f"trailing input at token {tokens[pos]!r}")
    return result


def _tokenize(text: str):
    tokens: list[object] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()*":
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            value = int(text[i:j])
            if value < 1:
                raise WordSyntaxError("0 is not a word; leaves start at 1")
            tokens.append(value)
            i = j
        else:
            raise WordSyntaxError(f"bad character {ch!r} in word expression")
    if not tokens:
        raise WordSyntaxError("empty word expression")
    return tokens
