"""Command line interface.

Subcommands
    solve PROBLEM.json           solve X - A @ j_conjugate(X) @ B = C
    coneig A.json                coneigenvalues and recovered coneigenvectors
    inverse A.json               matrix inverse
    classify SCALAR.json         causal character of one scalar
    consim-check A.json B.json P.json
                                 verify j_conjugate(P) @ A @ P^-1 = B
    scalar OP COEFFS...          scalar helpers (mul, inverse, sqrt,
                                 witness, consim)

Wire formats (JSON):
    scalar   [q0, q1, q2, q3]
    matrix   {"rows": m, "cols": n, "entries": [[q0, q1, q2, q3], ...]}
             with entries row-major, one coefficient quadruple per entry
    problem  {"A": matrix, "B": matrix, "C": matrix}

Exit codes:
    0 success, 2 parse error, 3 shape or domain error, 4 no solution,
    5 singular or zero-divisor input, 6 numeric failure.

Output goes to stdout (or --output FILE) as JSON by default; --format text
switches to a line-oriented rendering.  SQMAT_FORMAT provides the default
for --format.  Numbers are printed with 12 significant digits.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from . import densemat, scalar, spectral, stein
from .densemat import SQMatrix
from .errors import (
    DegenerateDenominatorError,
    EmptyNullSpaceError,
    FormulaInapplicableError,
    InternalResidualError,
    MixedCharacterError,
    NoConvergenceError,
    NonComplexLambdaError,
    NotSquareError,
    NotStructuredError,
    NullDivisorError,
    RealInputError,
    ShapeMismatchError,
    SingularError,
    SqmatError,
    ZeroNormError,
    ZeroVectorError,
)
from .scalar import ConsimKind, SplitQuaternion
from .stein import SteinProblem, Uniqueness

__all__ = ["main", "JobSpec"]

_EXIT_PARSE = 2
_EXIT_SHAPE = 3
_EXIT_NO_SOLUTION = 4
_EXIT_SINGULAR = 5
_EXIT_NUMERIC = 6

_SHAPE_ERRORS = (ShapeMismatchError, NotSquareError, RealInputError,
                 ZeroNormError, DegenerateDenominatorError,
                 MixedCharacterError, ZeroVectorError, NonComplexLambdaError)
_SINGULAR_ERRORS = (SingularError, NullDivisorError)

_SCALAR_ARITY = {"mul": 8, "inverse": 4, "sqrt": 4, "witness": 4,
                 "consim": 8}


class ParseError(Exception):
    """Bad file, bad JSON, or a schema violation."""


@dataclass
class JobSpec:
    """One parsed invocation: what to run, on which files, how to report."""

    subcommand: str
    inputs: tuple = ()
    output: str | None = None
    fmt: str = "json"
    null_tol: float = 0.0
    tol_residual: float | None = None
    tol_rank: float = 1e-10
    scalar_op: str | None = None
    coeffs: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.fmt not in ("json", "text"):
            raise ParseError("format must be json or text, got %r"
                             % (self.fmt,))
        if self.null_tol < 0 or self.tol_rank <= 0:
            raise ParseError("tolerances must be positive")
        if self.tol_residual is not None and self.tol_residual <= 0:
            raise ParseError("tolerances must be positive")


# -- input parsing -------------------------------------------------------

def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc)) from exc
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON in %s: %s" % (path, exc)) from exc


def _quadruple(obj, where):
    if (not isinstance(obj, (list, tuple)) or len(obj) != 4
            or not all(isinstance(c, (int, float)) and not isinstance(c, bool)
                       for c in obj)):
        raise ParseError("%s must be a list of 4 numbers" % where)
    try:
        return SplitQuaternion(*obj)
    except ValueError as exc:
        raise ParseError("%s: %s" % (where, exc)) from exc


def parse_scalar_json(obj) -> SplitQuaternion:
    return _quadruple(obj, "a scalar")


def parse_matrix_json(obj) -> SQMatrix:
    if not isinstance(obj, dict):
        raise ParseError("a matrix must be a JSON object")
    try:
        rows = obj["rows"]
        cols = obj["cols"]
        entries = obj["entries"]
    except KeyError as exc:
        raise ParseError("matrix object lacks key %s" % exc) from exc
    if not isinstance(rows, int) or not isinstance(cols, int) \
            or rows < 1 or cols < 1:
        raise ParseError("rows and cols must be positive integers")
    if not isinstance(entries, list) or len(entries) != rows * cols:
        raise ParseError("expected %d entries, got %s"
                         % (rows * cols,
                            len(entries) if isinstance(entries, list)
                            else "a non-list"))
    data = np.zeros((rows, cols, 4))
    for idx, item in enumerate(entries):
        q = _quadruple(item, "entry %d" % idx)
        data[idx // cols, idx % cols] = q.coeffs
    return SQMatrix(data)


def parse_problem_json(obj) -> SteinProblem:
    if not isinstance(obj, dict):
        raise ParseError("a problem must be a JSON object")
    missing = [key for key in ("A", "B", "C") if key not in obj]
    if missing:
        raise ParseError("problem object lacks %s" % ", ".join(missing))
    return SteinProblem(A=parse_matrix_json(obj["A"]),
                        B=parse_matrix_json(obj["B"]),
                        C=parse_matrix_json(obj["C"]))


# -- output rendering ----------------------------------------------------

def _fmt_num(x) -> str:
    s = format(float(x), ".12g")
    return "0" if s == "-0" else s


def _render_json(obj) -> str:
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_num(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if obj is None:
        return "null"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_render_json(v) for v in obj) + "]"
    if isinstance(obj, dict):
        return "{" + ", ".join(
            "%s: %s" % (json.dumps(k), _render_json(v))
            for k, v in obj.items()) + "}"
    raise TypeError("cannot render %r" % (obj,))


def _fmt_quat(coeffs) -> str:
    q0, q1, q2, q3 = coeffs
    out = _fmt_num(q0)
    for coeff, unit in ((q1, "i"), (q2, "j"), (q3, "k")):
        sign = "-" if coeff < 0 else "+"
        out += " %s %s%s" % (sign, _fmt_num(abs(coeff)), unit)
    return out


def _matrix_json(M: SQMatrix):
    return {"rows": M.rows, "cols": M.cols,
            "entries": [list(M.entry(i, j).coeffs)
                        for i in range(M.rows) for j in range(M.cols)]}


def _matrix_text(M: SQMatrix, indent="  "):
    lines = []
    for i in range(M.rows):
        cells = ", ".join(_fmt_quat(M.entry(i, j).coeffs)
                          for j in range(M.cols))
        lines.append("%s[%s]" % (indent, cells))
    return lines


def _is_matrix_obj(obj) -> bool:
    return isinstance(obj, dict) and set(obj) == {"rows", "cols", "entries"}


def _is_quad(obj) -> bool:
    return (isinstance(obj, (list, tuple)) and len(obj) == 4
            and all(isinstance(c, (int, float, np.integer, np.floating))
                    and not isinstance(c, bool) for c in obj))


# Report keys whose values are quaternion coefficient quadruples (or lists
# of them); in text mode these print as signed terms, not raw lists.
_QUAT_KEYS = frozenset({"product", "inverse", "roots", "witness",
                        "generator", "value"})


def _render_text(report) -> str:
    lines = []

    def walk(obj, key, depth):
        pad = "  " * depth
        if _is_matrix_obj(obj):
            lines.append("%s%s:" % (pad, key))
            cols = obj["cols"]
            for i in range(obj["rows"]):
                row = obj["entries"][i * cols:(i + 1) * cols]
                lines.append("%s  [%s]" % (
                    pad, ", ".join(_fmt_quat(q) for q in row)))
        elif key in _QUAT_KEYS and _is_quad(obj):
            lines.append("%s%s: %s" % (pad, key, _fmt_quat(obj)))
        elif (key in _QUAT_KEYS and isinstance(obj, (list, tuple))
                and obj and all(_is_quad(v) for v in obj)):
            lines.append("%s%s:" % (pad, key))
            for v in obj:
                lines.append("%s  %s" % (pad, _fmt_quat(v)))
        elif isinstance(obj, dict):
            if key:
                lines.append("%s%s:" % (pad, key))
                depth += 1
            for k, v in obj.items():
                walk(v, k, depth)
        elif isinstance(obj, (list, tuple)) and obj \
                and isinstance(obj[0], dict):
            lines.append("%s%s:" % (pad, key))
            for idx, item in enumerate(obj):
                walk(item, "- %d" % idx, depth + 1)
        elif isinstance(obj, (list, tuple)):
            lines.append("%s%s: %s" % (pad, key, _render_json(list(obj))))
        elif isinstance(obj, bool):
            lines.append("%s%s: %s" % (pad, key, "yes" if obj else "no"))
        elif isinstance(obj, (int, np.integer)):
            lines.append("%s%s: %d" % (pad, key, int(obj)))
        elif isinstance(obj, (float, np.floating)):
            lines.append("%s%s: %s" % (pad, key, _fmt_num(obj)))
        elif obj is None:
            lines.append("%s%s: none" % (pad, key))
        else:
            lines.append("%s%s: %s" % (pad, key, obj))

    for k, v in report.items():
        walk(v, k, 0)
    return "\n".join(lines) + "\n"


def _render(report, spec: JobSpec) -> str:
    if spec.fmt == "json":
        return _render_json(report) + "\n"
    return _render_text(report)


# -- subcommand implementations ------------------------------------------

def _cmd_classify(spec: JobSpec):
    q = parse_scalar_json(_load_json(spec.inputs[0]))
    character = scalar.classify(q, null_tol=spec.null_tol)
    return {"value": list(q.coeffs),
            "quadratic_form": scalar.quadratic_form(q),
            "norm": scalar.norm(q),
            "character": character.value}, 0


def _cmd_inverse(spec: JobSpec):
    A = parse_matrix_json(_load_json(spec.inputs[0]))
    X = densemat.inverse(A, rtol=spec.tol_rank)
    return {"inverse": _matrix_json(X)}, 0


def _cmd_solve(spec: JobSpec):
    prob = parse_problem_json(_load_json(spec.inputs[0]))
    kwargs = {"rtol": spec.tol_rank}
    if spec.tol_residual is not None:
        kwargs["residual_rtol"] = spec.tol_residual
    sol = stein.solve(prob, **kwargs)
    if sol.uniqueness is Uniqueness.NO_SOLUTION:
        print("no solution: the real linear system is inconsistent "
              "(nullity %d)" % sol.nullity, file=sys.stderr)
        return None, _EXIT_NO_SOLUTION
    return {"uniqueness": sol.uniqueness.value,
            "nullity": sol.nullity,
            "residual": sol.residual,
            "X": _matrix_json(sol.X)}, 0


def _cmd_coneig(spec: JobSpec):
    A = parse_matrix_json(_load_json(spec.inputs[0]))
    spectrum = spectral.coneigenvalues(A)
    verify_tol = spec.tol_residual
    if verify_tol is None:
        verify_tol = 1e-7 * (1.0 + densemat.frobenius_norm(A))
    values = [[v.real, v.imag] for v in spectrum.values]
    grouped = []
    for v in spectrum.values:
        for g in grouped:
            if abs(v - g["key"]) <= 1e-9 * (1.0 + abs(v)):
                g["multiplicity"] += 1
                break
        else:
            grouped.append({"key": v, "multiplicity": 1})
    recovered = []
    empty = 0
    for g in grouped:
        v = g["key"]
        lam = SplitQuaternion(v.real, v.imag, 0.0, 0.0)
        entry = {"value": [v.real, v.imag],
                 "multiplicity": g["multiplicity"],
                 "recovered": True,
                 "vectors": [], "residuals": [], "verified": True}
        try:
            vectors = spectral.coneigenvectors(A, v)
        except EmptyNullSpaceError:
            # Expected at nonreal candidate values: the coneigenvalue
            # circles only pass through the real part of the spectrum.
            entry["recovered"] = False
            entry["verified"] = False
            empty += 1
            recovered.append(entry)
            continue
        for x in vectors:
            lhs = densemat.matmul(A, densemat.j_conjugate(x))
            rhs = densemat.matmul(x, SQMatrix.scalar_diag(lam, 1))
            res = densemat.frobenius_norm(lhs - rhs)
            entry["vectors"].append(_matrix_json(x))
            entry["residuals"].append(res)
            if not spectral.verify_coneigenpair(A, x, lam, verify_tol):
                entry["verified"] = False
        recovered.append(entry)
    return {"size": A.rows,
            "coneigenvalues": values,
            "recovered": recovered,
            "empty_null_spaces": empty}, 0


def _cmd_consim_check(spec: JobSpec):
    A = parse_matrix_json(_load_json(spec.inputs[0]))
    B = parse_matrix_json(_load_json(spec.inputs[1]))
    P = parse_matrix_json(_load_json(spec.inputs[2]))
    tol = spec.tol_residual
    if tol is None:
        tol = 1e-9 * (1.0 + densemat.frobenius_norm(A))
    transported = densemat.consim_transform(A, P)
    res = densemat.frobenius_norm(transported - B)
    return {"consimilar": bool(res <= tol),
            "residual": res,
            "tolerance": tol}, 0


def _cmd_scalar(spec: JobSpec):
    op = spec.scalar_op
    coeffs = spec.coeffs
    if op not in _SCALAR_ARITY:
        raise ParseError("unknown scalar op %r (choose from %s)"
                         % (op, ", ".join(sorted(_SCALAR_ARITY))))
    if len(coeffs) != _SCALAR_ARITY[op]:
        raise ParseError("scalar %s takes %d coefficients, got %d"
                         % (op, _SCALAR_ARITY[op], len(coeffs)))
    a = SplitQuaternion(*coeffs[:4])
    if op == "mul":
        b = SplitQuaternion(*coeffs[4:])
        return {"op": "mul",
                "product": list(scalar.mul(a, b).coeffs)}, 0
    if op == "inverse":
        return {"op": "inverse",
                "inverse": list(scalar.inverse(a).coeffs)}, 0
    if op == "sqrt":
        roots = scalar.sqrt(a)
        return {"op": "sqrt",
                "roots": [list(r.coeffs) for r in roots]}, 0
    if op == "witness":
        p = scalar.canonical_witness(a)
        return {"op": "witness", "norm": scalar.norm(a),
                "witness": list(p.coeffs)}, 0
    b = SplitQuaternion(*coeffs[4:])
    family = scalar.solve_consimilarity(a, b)
    report = {"op": "consim", "kind": family.kind.value}
    if family.kind is ConsimKind.SLICE:
        report["generator"] = list(family.generator.coeffs)
    elif family.kind is ConsimKind.HYPERPLANE:
        report["constraint"] = list(family.constraint)
    return report, 0


_DISPATCH = {
    "solve": (_cmd_solve, 1),
    "coneig": (_cmd_coneig, 1),
    "inverse": (_cmd_inverse, 1),
    "classify": (_cmd_classify, 1),
    "consim-check": (_cmd_consim_check, 3),
    "scalar": (_cmd_scalar, 0),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sqmat",
        description="Split quaternion matrix computations.")
    parser.add_argument("--format", choices=("json", "text"),
                        default=os.environ.get("SQMAT_FORMAT", "json"),
                        help="output format (default: json, or SQMAT_FORMAT)")
    parser.add_argument("-o", "--output", default=None,
                        help="write the report to this file instead of stdout")
    parser.add_argument("--null-tol", type=float, default=0.0,
                        help="classify: half-width of the null band")
    parser.add_argument("--tol-residual", type=float, default=None,
                        help="override residual verification tolerances")
    parser.add_argument("--tol-rank", type=float, default=1e-10,
                        help="relative pivot and rank threshold")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sub.add_parser("solve").add_argument("problem")
    sub.add_parser("coneig").add_argument("matrix")
    sub.add_parser("inverse").add_argument("matrix")
    sub.add_parser("classify").add_argument("value")
    pc = sub.add_parser("consim-check")
    pc.add_argument("matrix_a")
    pc.add_argument("matrix_b")
    pc.add_argument("transform")
    ps = sub.add_parser("scalar")
    ps.add_argument("op")
    ps.add_argument("coeffs", nargs="*", type=float)
    return parser


def _job_from_args(args) -> JobSpec:
    if args.subcommand == "solve":
        inputs = (args.problem,)
    elif args.subcommand in ("coneig", "inverse"):
        inputs = (args.matrix,)
    elif args.subcommand == "classify":
        inputs = (args.value,)
    elif args.subcommand == "consim-check":
        inputs = (args.matrix_a, args.matrix_b, args.transform)
    else:
        inputs = ()
    return JobSpec(subcommand=args.subcommand,
                   inputs=inputs,
                   output=args.output,
                   fmt=args.format,
                   null_tol=args.null_tol,
                   tol_residual=args.tol_residual,
                   tol_rank=args.tol_rank,
                   scalar_op=getattr(args, "op", None),
                   coeffs=tuple(getattr(args, "coeffs", ()) or ()))


def _emit(text: str, spec: JobSpec):
    if spec.output:
        with open(spec.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        spec = _job_from_args(args)
        for path in spec.inputs:
            if not os.path.exists(path):
                raise ParseError("no such file: %s" % path)
        handler, _ = _DISPATCH[spec.subcommand]
        report, code = handler(spec)
        if report is not None:
            _emit(_render(report, spec), spec)
        return code
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return _EXIT_PARSE
    except _SHAPE_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return _EXIT_SHAPE
    except _SINGULAR_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return _EXIT_SINGULAR
    except (NoConvergenceError, FormulaInapplicableError, NotStructuredError,
            EmptyNullSpaceError, InternalResidualError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return _EXIT_NUMERIC
    except SqmatError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return _EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
