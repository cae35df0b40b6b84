"""Canonical text rendering with minimal parentheses.

The output reparses to a structurally identical tree: parentheses are
inserted exactly where precedence, associativity, or the rational-
literal lexing rule would otherwise change the shape.
"""

from __future__ import annotations

from .nodes import (
    Add,
    Ast,
    Call,
    Div,
    Identity,
    IntLit,
    Mul,
    Neg,
    Pow,
    RatLit,
    Sub,
    Sum,
    Var,
)

_ADD, _MUL, _UNARY, _POW, _ATOM = 1, 2, 3, 4, 5


def _render(node) -> tuple[str, int]:
    if isinstance(node, IntLit):
        # a leading sign re-lexes as unary minus, never as part of an atom
        return str(node.value), _ATOM if node.value >= 0 else _UNARY
    if isinstance(node, RatLit):
        return (
            f"{node.value.numerator}/{node.value.denominator}",
            _MUL if node.value >= 0 else _UNARY,
        )
    if isinstance(node, Var):
        return node.name, _ATOM
    if isinstance(node, Call):
        args = ", ".join(_render(a)[0] for a in node.args)
        return f"{node.func}({args})", _ATOM
    if isinstance(node, Sum):
        lo, _ = _render(node.lo)
        hi, _ = _render(node.hi)
        body, _ = _render(node.body)
        return f"sum({node.binder}={lo}..{hi}, {body})", _ATOM
    if isinstance(node, Neg):
        return "-" + _wrap(node.child, _POW), _UNARY
    if isinstance(node, Add):
        return f"{_wrap(node.left, _ADD)} + {_wrap(node.right, _MUL)}", _ADD
    if isinstance(node, Sub):
        return f"{_wrap(node.left, _ADD)} - {_wrap(node.right, _MUL)}", _ADD
    if isinstance(node, Mul):
        return f"{_wrap(node.left, _MUL)}*{_wrap(node.right, _UNARY)}", _MUL
    if isinstance(node, Div):
        left = _wrap(node.left, _MUL)
        right = _wrap(node.right, _UNARY)
        # an INT/INT boundary would re-lex as one rational literal
        if left and left[-1].isdigit() and right and right[0].isdigit():
            right = f"({right})"
        return f"{left}/{right}", _MUL
    if isinstance(node, Pow):
        return f"{_wrap(node.base, _ATOM)}^{_wrap(node.exponent, _ATOM)}", _POW
    if isinstance(node, Identity):
        lhs, _ = _render(node.lhs)
        rhs, _ = _render(node.rhs)
        return f"{lhs} == {rhs}", _ADD
    raise TypeError(f"cannot render {type(node).__name__}")


def _wrap(node, minimum: int) -> str:
    text, level = _render(node)
    if level < minimum:
        return f"({text})"
    return text


def pretty_print(ast: Ast) -> str:
    """Render a tree to source text that reparses to the same tree."""
    return _render(ast)[0]
