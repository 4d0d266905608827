"""Pure-Python join-meet kernels over packed atom masks.

Masks are plain Python ints, so any atom count works (beyond 64 the ints
simply span several machine words). The compiled backend mirrors these
signatures for the single-word case.
"""

from __future__ import annotations

from typing import Sequence

name = "pure"


def matmul(n: int, m: int, p: int, a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Row-major product: out[i*p+j] = OR_t (a[i*m+t] & b[t*p+j])."""
    out = [0] * (n * p)
    for i in range(n):
        base = i * p
        arow = a[i * m : (i + 1) * m]
        for t in range(m):
            at = arow[t]
            if not at:
                continue
            boff = t * p
            for j in range(p):
                bt = b[boff + j]
                if bt:
                    out[base + j] |= at & bt
    return out


def matvec(n: int, m: int, a: Sequence[int], v: Sequence[int]) -> list[int]:
    """out[i] = OR_t (a[i*m+t] & v[t])."""
    out = [0] * n
    for i in range(n):
        acc = 0
        base = i * m
        for t in range(m):
            acc |= a[base + t] & v[t]
        out[i] = acc
    return out
