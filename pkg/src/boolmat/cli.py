"""Command-line interface: inspect models, run reductions, verify theorems.

Exit codes: 0 for success or a passing verdict, 1 for a negative verdict
(not stochastic, no invariant vector, not reducible, failed check), 2 for
usage, parse, precondition and budget errors.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from typing import Iterable, Sequence

from . import chains, oracle
from .algebra import BoolmatError, PreconditionError
from .bmatrix import (
    BMatrix,
    find_invariant_stochastic,
    is_stochastic_matrix,
    is_unitary,
    joint_trace,
    reduce_unitary,
    trace,
)
from .bvec import extend_to_basis
from .model import ModelFile, ModelSyntaxError, parse_model

__all__ = ["main", "fixture_path"]


def fixture_path(name: str) -> str:
    """Absolute path of a bundled example model file."""
    return str(resources.files("boolmat").joinpath("fixtures", name))


def _load(path: str) -> ModelFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise PreconditionError(f"cannot read {path}: {exc}") from None
    return parse_model(text)


def _pick_matrices(model: ModelFile, names: Sequence[str]) -> list[tuple[str, BMatrix]]:
    if names:
        return [(n, model.matrix(n)) for n in names]
    found = [(n, model.matrices[n]) for _, n in model.order if n in model.matrices]
    if not found:
        raise PreconditionError("the model contains no matrices")
    return found


def _matrix_lines(mat: BMatrix) -> list[str]:
    cells = [[str(mat[i, j]) for j in range(mat.cols)] for i in range(mat.rows)]
    if not cells:
        return ["(empty)"]
    widths = [max(len(cells[i][j]) for i in range(mat.rows)) for j in range(mat.cols)]
    return [
        " ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in cells
    ]


def _emit_matrix(prefix: str, mat: BMatrix, porcelain: bool, indent: str = "  ") -> None:
    if porcelain:
        for i in range(mat.rows):
            row = " ".join(str(mat[i, j]) for j in range(mat.cols))
            print(f"{prefix}.row{i + 1}={row}")
    else:
        for line in _matrix_lines(mat):
            print(indent + line)


def _cmd_check(args) -> int:
    model = _load(args.file)
    bad = 0
    for name, mat in _pick_matrices(model, args.names):
        stoch = mat.is_square() and is_stochastic_matrix(mat)
        unit = is_unitary(mat)
        if args.porcelain:
            print(f"{name}.stochastic={int(stoch)}")
            print(f"{name}.unitary={int(unit)}")
        else:
            print(
                f"{name}: {mat.rows}x{mat.cols}, "
                f"stochastic {'yes' if stoch else 'no'}, unitary {'yes' if unit else 'no'}"
            )
        if not stoch:
            bad += 1
    return 1 if bad else 0


def _cmd_invariant(args) -> int:
    model = _load(args.file)
    picked = _pick_matrices(model, args.names)
    mats = [m for _, m in picked]
    joint = joint_trace(mats)
    vec = find_invariant_stochastic(mats)
    if args.porcelain:
        print(f"trace={joint}")
        print(f"invariant={'none' if vec is None else vec}")
    else:
        label = ", ".join(n for n, _ in picked)
        if vec is None:
            print(f"{label}: none (trace = {joint})")
        else:
            print(f"{label}: invariant vector {vec}")
    return 0 if vec is not None else 1


def _cmd_reduce(args) -> int:
    model = _load(args.file)
    picked = _pick_matrices(model, args.names)
    mats = [m for _, m in picked]
    joint = joint_trace(mats)
    reductions = reduce_unitary(mats)
    if reductions is None:
        if args.porcelain:
            print(f"trace={joint}")
            print("reducible=0")
        else:
            print(f"not reducible: joint trace = {joint} (need *)")
        return 1
    conj = reductions[0].conjugator
    full_trace = conj.algebra.one
    if args.porcelain:
        print(f"trace={joint}")
        print("reducible=1")
        print(f"fixed={reductions[0].fixed_count}")
        _emit_matrix("conjugator", conj, True)
        for (name, _), red in zip(picked, reductions):
            _emit_matrix(f"{name}.core", red.core, True)
            core_trace = red.core.algebra.zero if red.core.rows == 0 else trace(red.core)
            print(f"{name}.core.trace={core_trace}")
            print(f"{name}.further={int(core_trace == full_trace)}")
    else:
        print(f"joint trace = {joint}")
        print("conjugator (symmetric reflection):")
        _emit_matrix("conjugator", conj, False)
        for (name, _), red in zip(picked, reductions):
            core_trace = red.core.algebra.zero if red.core.rows == 0 else trace(red.core)
            print(f"core of {name} ({red.core.rows}x{red.core.cols}), trace {core_trace}:")
            _emit_matrix(f"{name}.core", red.core, False)
            if core_trace == full_trace:
                print(f"{name}: further reduction possible (core trace = *)")
            else:
                print(f"{name}: no further reduction possible (core trace = {core_trace})")
    return 0


def _cmd_powers(args) -> int:
    model = _load(args.file)
    failures = 0
    for name, mat in _pick_matrices(model, args.names):
        n = mat.rows
        ok = chains.verify_power_theorem(mat)
        exponent = chains.lcm_upto(n) + n - 1
        if args.porcelain:
            print(f"{name}.identity=A^{exponent}=A^{n - 1}")
            print(f"{name}.ok={int(ok)}")
        else:
            verdict = "holds" if ok else "FAILS (library bug)"
            print(f"{name}: {n}x{n} stochastic, A^{exponent} = A^{n - 1} {verdict}")
        failures += 0 if ok else 1
    return 1 if failures else 0


def _cmd_period(args) -> int:
    model = _load(args.file)
    for name, mat in _pick_matrices(model, args.names):
        profile = chains.power_profile(mat)
        if args.porcelain:
            print(f"{name}.exponent={profile.exponent}")
            print(f"{name}.period={profile.period}")
            print(f"{name}.distinct={len(profile.powers)}")
        else:
            print(
                f"{name}: exponent {profile.exponent}, period {profile.period} "
                f"({len(profile.powers)} distinct powers)"
            )
    return 0


def _cmd_atoms(args) -> int:
    model = _load(args.file)
    for name, mat in _pick_matrices(model, args.names):
        atoms = chains.matrix_atoms(mat)
        if args.porcelain:
            print(f"{name}.count={len(atoms)}")
            print(f"{name}.atoms=" + " ".join(str(a) for a in atoms.atoms))
        else:
            listing = ", ".join(str(a) for a in atoms.atoms)
            print(f"{name}: {len(atoms)} atoms: {listing}")
    return 0


def _fmt_pairs(pairs: Iterable[tuple[int, int]], arrow: str) -> str:
    return ", ".join(f"{a}{arrow}{b}" for a, b in sorted(pairs))


def _cmd_reach(args) -> int:
    model = _load(args.file)
    for name, mat in _pick_matrices(model, args.names):
        report = chains.relation_report(mat)
        if args.porcelain:
            print(f"{name}.sites={report.site_count}")
            print(f"{name}.arrows=" + " ".join(f"{a}>{b}" for a, b in sorted(report.arrows)))
            print(f"{name}.mutual=" + " ".join(f"{a}<>{b}" for a, b in sorted(report.mutual)))
            print(f"{name}.transitive={int(report.transitive)}")
            print(f"{name}.equivalence={int(report.equivalence)}")
        else:
            print(
                f"{name}: sites 1..{report.site_count}, "
                f"exponent {report.exponent}, period {report.period}"
            )
            print(f"  arrows: {_fmt_pairs(report.arrows, '->') or 'none'}")
            print(f"  mutual: {_fmt_pairs(report.mutual, '<->') or 'none'}")
            if report.transitive:
                print("  arrow relation transitive: yes")
            else:
                x, y, z = report.transitivity_witness
                print(f"  arrow relation not transitive: {x}->{y} and {y}->{z} but not {x}->{z}")
            if report.equivalence:
                print("  mutual relation is an equivalence")
            else:
                print(f"  mutual relation not an equivalence: {report.equivalence_witness}")
    return 0


def _cmd_basis_extend(args) -> int:
    model = _load(args.file)
    if args.names:
        vectors = [model.vector(n) for n in args.names]
    else:
        vectors = [model.vectors[n] for _, n in model.order if n in model.vectors]
        if not vectors:
            raise PreconditionError("the model contains no vectors")
    basis = extend_to_basis(vectors)
    if args.porcelain:
        for i, v in enumerate(basis, start=1):
            print(f"basis.{i}={v}")
    else:
        print(f"extended basis ({len(basis)} vectors):")
        for v in basis:
            print(f"  {v}")
    return 0


def _cmd_verify(args) -> int:
    theorem = args.theorem.upper()
    if theorem not in oracle.THEOREMS:
        raise PreconditionError(
            f"unknown theorem {theorem!r}; registered: {', '.join(sorted(oracle.THEOREMS))}"
        )
    spec = oracle.EnumSpec(args.n, args.atoms, oracle.THEOREM_KINDS[theorem])
    if args.samples:
        verdict = oracle.sample_check(theorem, spec, args.samples, seed=args.seed)
    else:
        verdict = oracle.brute_check(theorem, spec, budget=args.budget)
    if args.porcelain:
        print(f"theorem={verdict.theorem}")
        print(f"n={verdict.n}")
        print(f"atoms={verdict.k}")
        print(f"mode={verdict.mode}")
        print(f"checked={verdict.checked}")
        print(f"verdict={'pass' if verdict.passed else 'fail'}")
        if verdict.counterexample:
            print(f"counterexample={verdict.counterexample}")
    else:
        print(str(verdict))
    return 0 if verdict.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolmat",
        description="Boolean-algebra linear algebra: stochastic and unitary matrices, "
        "invariant vectors, reductions, and Markov power analysis.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--porcelain", action="store_true", help="stable key=value output")

    sub = parser.add_subparsers(dest="command", required=True)

    def model_cmd(name: str, help_text: str, func, names_help: str = "matrix names (default: all)"):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("file", help="model file path")
        p.add_argument("names", nargs="*", help=names_help)
        p.set_defaults(func=func)
        return p

    model_cmd("check", "report stochastic/unitary verdicts per matrix", _cmd_check)
    model_cmd("invariant", "common invariant stochastic vector of the matrices", _cmd_invariant)
    model_cmd("reduce", "block-diagonalize unitary matrices by a shared reflection", _cmd_reduce)
    model_cmd("powers", "verify the stochastic power identity", _cmd_powers)
    model_cmd("period", "exponent and period of the power sequence", _cmd_period)
    model_cmd("atoms", "atoms of a stochastic matrix", _cmd_atoms)
    model_cmd("reach", "site accessibility report", _cmd_reach)
    model_cmd(
        "basis-extend",
        "extend stochastic orthonormal vectors to a basis",
        _cmd_basis_extend,
        names_help="vector names (default: all)",
    )

    v = sub.add_parser("verify", parents=[common], help="run a brute-force theorem check")
    v.add_argument("--theorem", required=True, help="registered theorem id, e.g. POWER")
    v.add_argument("--n", type=int, required=True, help="vector length / matrix size")
    v.add_argument("--atoms", type=int, required=True, help="atom count k")
    v.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET, help="object budget for exhaustive runs")
    v.add_argument("--samples", type=int, default=0, help="use randomized sampling with this many draws")
    v.add_argument("--seed", type=int, default=0, help="seed for sampled runs")
    v.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ModelSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except BoolmatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
