"""Finite Boolean algebras of subsets of a named atom set.

An :class:`Algebra` fixes ``k`` named atoms; its elements are the ``2**k``
subsets of that atom set, packed into Python integers (one bit per atom).
Elements are immutable values and all lattice operations are pure, so they
can be shared freely across threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Algebra",
    "Elem",
    "BoolmatError",
    "AlgebraMismatchError",
    "ShapeError",
    "PreconditionError",
    "NotInvertibleError",
]


class BoolmatError(Exception):
    """Base class for all errors raised by this package."""


class AlgebraMismatchError(BoolmatError):
    """Binary operation on values from two different algebras."""


class ShapeError(BoolmatError):
    """Vector lengths or matrix dimensions do not agree."""


class PreconditionError(BoolmatError):
    """An argument does not satisfy an operation's stated precondition."""


class NotInvertibleError(PreconditionError):
    """Inversion requested for a matrix that is not unitary."""


_algebra_ids = itertools.count(1)


class Algebra:
    """The power-set Boolean algebra over ``k >= 1`` named atoms.

    Identity matters: two separately constructed algebras never mix, even
    with equal atom names. Mixing raises :class:`AlgebraMismatchError`.
    """

    __slots__ = ("atom_names", "atom_count", "uid", "_index", "_full", "_zero", "_one")

    def __init__(self, atom_names: Sequence[str]):
        names = tuple(atom_names)
        if not names:
            raise PreconditionError("an algebra needs at least one atom (0 = 1 is rejected)")
        if len(set(names)) != len(names):
            raise PreconditionError(f"duplicate atom names: {names!r}")
        if any(not n or any(c in " ,{}()*" for c in n) for n in names):
            raise PreconditionError("atom names must be non-empty and free of ' ,{}()*'")
        self.atom_names = names
        self.atom_count = len(names)
        self.uid = next(_algebra_ids)
        self._index = {n: i for i, n in enumerate(names)}
        self._full = (1 << len(names)) - 1
        self._zero = Elem(0, self)
        self._one = Elem(self._full, self)

    @property
    def zero(self) -> Elem:
        """The least element (empty atom set)."""
        return self._zero

    @property
    def one(self) -> Elem:
        """The greatest element (full atom set)."""
        return self._one

    def atom(self, index: int) -> Elem:
        """The ``index``-th atom (0-based) as an element."""
        if not 0 <= index < self.atom_count:
            raise PreconditionError(f"atom index {index} out of range 0..{self.atom_count - 1}")
        return Elem(1 << index, self)

    def atoms(self) -> list[Elem]:
        """All atoms, in name order."""
        return [Elem(1 << i, self) for i in range(self.atom_count)]

    def from_atoms(self, names: Iterable[str]) -> Elem:
        """Element with exactly the named atoms."""
        mask = 0
        for n in names:
            try:
                mask |= 1 << self._index[n]
            except KeyError:
                raise PreconditionError(f"unknown atom name {n!r} (atoms: {self.atom_names})") from None
        return Elem(mask, self)

    def from_mask(self, mask: int) -> Elem:
        """Element from a packed bit mask (bit i = atom i)."""
        if mask < 0 or mask > self._full:
            raise PreconditionError(f"mask {mask:#x} outside algebra with {self.atom_count} atoms")
        return Elem(mask, self)

    def elems(self) -> Iterator[Elem]:
        """All ``2**k`` elements, in increasing mask order."""
        for mask in range(self._full + 1):
            yield Elem(mask, self)

    def parse(self, text: str) -> Elem:
        """Parse an element literal: ``{}``, ``{a,b}`` or ``*``.

        Inverse of :func:`format`/``str``: ``parse(str(x)) == x`` bit-exactly.
        """
        t = text.strip()
        if t == "*":
            return self._one
        if not (t.startswith("{") and t.endswith("}")):
            raise PreconditionError(f"bad element literal {text!r} (expected '{{...}}' or '*')")
        body = t[1:-1].strip()
        if not body:
            return self._zero
        parts = [p.strip() for p in body.split(",")]
        if any(not p for p in parts):
            raise PreconditionError(f"bad element literal {text!r} (empty atom name)")
        return self.from_atoms(parts)

    def __repr__(self) -> str:
        return f"Algebra({list(self.atom_names)!r})"

    def __reduce__(self):
        # Pickling would mint a fresh identity, silently breaking mixing checks.
        raise TypeError("Algebra objects are identity-based and cannot be pickled")


@dataclass(frozen=True, slots=True)
class Elem:
    """One element of an :class:`Algebra`: a subset of its atoms, bit-packed.

    Operators: ``&`` meet, ``|`` join, ``-`` difference, ``~`` complement,
    ``<=`` the lattice order.
    """

    mask: int
    algebra: Algebra

    def _check(self, other: Elem) -> None:
        if self.algebra is not other.algebra:
            raise AlgebraMismatchError(
                f"elements from different algebras (uid {self.algebra.uid} vs {other.algebra.uid})"
            )

    def __and__(self, other: Elem) -> Elem:
        self._check(other)
        return Elem(self.mask & other.mask, self.algebra)

    def __or__(self, other: Elem) -> Elem:
        self._check(other)
        return Elem(self.mask | other.mask, self.algebra)

    def __sub__(self, other: Elem) -> Elem:
        self._check(other)
        return Elem(self.mask & ~other.mask, self.algebra)

    def __invert__(self) -> Elem:
        return Elem(self.mask ^ self.algebra._full, self.algebra)

    def __le__(self, other: Elem) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __ge__(self, other: Elem) -> bool:
        return other.__le__(self)

    def __bool__(self) -> bool:
        return self.mask != 0

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    @property
    def is_one(self) -> bool:
        return self.mask == self.algebra._full

    def atom_names(self) -> tuple[str, ...]:
        """Names of the atoms below this element, in name order."""
        return tuple(
            n for i, n in enumerate(self.algebra.atom_names) if self.mask >> i & 1
        )

    def __str__(self) -> str:
        if self.is_one:
            return "*"
        return "{" + ",".join(self.atom_names()) + "}"

    def __repr__(self) -> str:
        return f"Elem({str(self)} over {self.algebra.atom_names})"


def meet(a: Elem, b: Elem) -> Elem:
    """Infimum (set intersection)."""
    return a & b


def join(a: Elem, b: Elem) -> Elem:
    """Supremum (set union)."""
    return a | b


def complement(a: Elem) -> Elem:
    """Complement within the algebra's atom set."""
    return ~a


def diff(a: Elem, b: Elem) -> Elem:
    """Difference ``a`` minus ``b``, i.e. meet of ``a`` with ``b``'s complement."""
    return a - b


def leq(a: Elem, b: Elem) -> bool:
    """Lattice order: is ``a`` below ``b``?"""
    return a <= b


def make_algebra(names: Sequence[str]) -> Algebra:
    """Create the power-set algebra over the given distinct atom names."""
    return Algebra(names)
