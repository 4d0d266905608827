"""Kernel backend selection.

Imports the compiled single-word kernel when the extension was built,
otherwise falls back to the pure-Python implementation. The compiled path
only applies while every mask fits one 64-bit word (atom count <= 64);
wider algebras always use the pure path, whose Python ints grow as needed.
"""

from __future__ import annotations

from typing import Sequence

from . import pure

try:
    from . import _packed
except ImportError:
    _packed = None

ACTIVE_BACKEND = "packed64" if _packed is not None else "pure"

_WORD_BITS = 64


def matmul(n: int, m: int, p: int, a: Sequence[int], b: Sequence[int], atom_count: int) -> list[int]:
    if _packed is not None and atom_count <= _WORD_BITS:
        return _packed.matmul(n, m, p, a, b)
    return pure.matmul(n, m, p, a, b)


def matvec(n: int, m: int, a: Sequence[int], v: Sequence[int], atom_count: int) -> list[int]:
    if _packed is not None and atom_count <= _WORD_BITS:
        return _packed.matvec(n, m, a, v)
    return pure.matvec(n, m, a, v)
