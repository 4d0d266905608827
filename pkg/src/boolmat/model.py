"""Text format for algebra models: named matrices and vectors in one file.

Grammar, one item per line, ``#`` starting a comment::

    atoms: 1 2 3 4 5
    matrix A 2x3
    {1} {2,3} {}
    *   {}    {4}
    vector b 3
    {1} {2,3} {4,5}

Element literals are ``{}``, ``{name,name}`` and ``*``; matrix rows list
one line each, vectors sit on a single line. Formatting a parsed model and
parsing it back reproduces every value bit-exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .algebra import Algebra, BoolmatError, PreconditionError
from .bmatrix import BMatrix
from .bvec import BVec

__all__ = ["ModelFile", "ModelSyntaxError", "parse_model", "format_model"]


class ModelSyntaxError(BoolmatError):
    """Parse failure, annotated with 1-based line and column."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, col {column}: {message}")


@dataclass
class ModelFile:
    """Parsed model: one algebra plus named matrices and vectors."""

    algebra: Algebra
    matrices: dict[str, BMatrix] = field(default_factory=dict)
    vectors: dict[str, BVec] = field(default_factory=dict)
    order: list[tuple[str, str]] = field(default_factory=list)

    def matrix(self, name: str) -> BMatrix:
        try:
            return self.matrices[name]
        except KeyError:
            raise PreconditionError(
                f"no matrix named {name!r}; have: {', '.join(self.matrices) or 'none'}"
            ) from None

    def vector(self, name: str) -> BVec:
        try:
            return self.vectors[name]
        except KeyError:
            raise PreconditionError(
                f"no vector named {name!r}; have: {', '.join(self.vectors) or 'none'}"
            ) from None


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_SHAPE_RE = re.compile(r"(\d+)x(\d+)$")


def _strip_comment(line: str) -> str:
    cut = re.search(r"(^|\s)#", line)
    return line[: cut.start()] if cut else line


def _tokenize(line: str) -> list[tuple[int, str]]:
    """(1-based column, token) pairs for one line."""
    out = []
    for match in re.finditer(r"\S+", line):
        out.append((match.start() + 1, match.group()))
    return out


def parse_model(text: str) -> ModelFile:
    """Parse model text; raises :class:`ModelSyntaxError` with position."""
    lines = text.splitlines()
    meaningful: list[tuple[int, list[tuple[int, str]]]] = []
    for lineno, raw in enumerate(lines, start=1):
        tokens = _tokenize(_strip_comment(raw))
        if tokens:
            meaningful.append((lineno, tokens))
    if not meaningful:
        raise ModelSyntaxError(1, 1, "empty model: expected an 'atoms:' line")

    lineno, tokens = meaningful[0]
    if tokens[0][1] != "atoms:":
        raise ModelSyntaxError(lineno, tokens[0][0], f"expected 'atoms:', got {tokens[0][1]!r}")
    names = [t for _, t in tokens[1:]]
    if not names:
        raise ModelSyntaxError(lineno, tokens[0][0], "at least one atom name is required")
    try:
        algebra = Algebra(names)
    except PreconditionError as exc:
        raise ModelSyntaxError(lineno, tokens[1][0], str(exc)) from None

    model = ModelFile(algebra=algebra)
    pos = 1

    def parse_elements(expected: int, what: str) -> list[int]:
        nonlocal pos
        if pos >= len(meaningful):
            raise ModelSyntaxError(len(lines), 1, f"unexpected end of file inside {what}")
        elno, eltokens = meaningful[pos]
        pos += 1
        if len(eltokens) != expected:
            raise ModelSyntaxError(
                elno, eltokens[0][0],
                f"{what}: expected {expected} elements, got {len(eltokens)}",
            )
        masks = []
        for col, tok in eltokens:
            try:
                masks.append(algebra.parse(tok).mask)
            except PreconditionError as exc:
                raise ModelSyntaxError(elno, col, str(exc)) from None
        return masks

    while pos < len(meaningful):
        lineno, tokens = meaningful[pos]
        pos += 1
        kind = tokens[0][1]
        if kind not in ("matrix", "vector"):
            raise ModelSyntaxError(lineno, tokens[0][0], f"expected 'matrix' or 'vector', got {kind!r}")
        if len(tokens) != 3:
            raise ModelSyntaxError(lineno, tokens[0][0], f"{kind} header needs a name and a shape")
        name = tokens[1][1]
        if not _NAME_RE.match(name):
            raise ModelSyntaxError(lineno, tokens[1][0], f"bad name {name!r}")
        if name in model.matrices or name in model.vectors:
            raise ModelSyntaxError(lineno, tokens[1][0], f"duplicate name {name!r}")
        shape_col, shape = tokens[2]
        if kind == "matrix":
            m = _SHAPE_RE.match(shape)
            if not m:
                raise ModelSyntaxError(lineno, shape_col, f"bad shape {shape!r}, expected like 3x4")
            rows, cols = int(m.group(1)), int(m.group(2))
            if rows < 1 or cols < 1:
                raise ModelSyntaxError(lineno, shape_col, "matrix dimensions must be positive")
            masks: list[int] = []
            for _ in range(rows):
                masks.extend(parse_elements(cols, f"matrix {name}"))
            model.matrices[name] = BMatrix(rows, cols, tuple(masks), algebra)
        else:
            if not shape.isdigit() or int(shape) < 1:
                raise ModelSyntaxError(lineno, shape_col, f"bad vector length {shape!r}")
            length = int(shape)
            model.vectors[name] = BVec(tuple(parse_elements(length, f"vector {name}")), algebra)
        model.order.append((kind, name))
    return model


def format_model(model: ModelFile) -> str:
    """Canonical text for a model; ``parse_model`` inverts it bit-exactly."""
    out = ["atoms: " + " ".join(model.algebra.atom_names)]
    for kind, name in model.order:
        out.append("")
        if kind == "matrix":
            mat = model.matrices[name]
            out.append(f"matrix {name} {mat.rows}x{mat.cols}")
            cells = [
                [str(mat[i, j]) for j in range(mat.cols)] for i in range(mat.rows)
            ]
            widths = [max(len(cells[i][j]) for i in range(mat.rows)) for j in range(mat.cols)]
            for row in cells:
                out.append(" ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        else:
            vec = model.vectors[name]
            out.append(f"vector {name} {len(vec)}")
            out.append(" ".join(str(e) for e in vec.entries()))
    return "\n".join(out) + "\n"
