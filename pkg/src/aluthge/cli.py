"""Command-line front end.

Subcommands operate on matrix documents (see :mod:`aluthge.matrixio`)
read from a path or stdin (``-``) and emit JSON on stdout or to
``--out``. Exit codes: 0 success / verified, 1 verification failure,
2 usage or input error. The environment variable ``ALUTHGE_TOL``
overrides the residual tolerance; ``--tol`` overrides both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import inf

from .commutant import commutant_basis, fp_property
from .linalg import DEFAULT_TOL, Tolerances, op_norm
from .matrixio import matrix_from_doc, matrix_to_doc
from .polar import MODE_PARTIAL, MODE_UNITARY, aluthge_iterate, aluthge_st, polar_decompose
from .schatten import (
    aluthge_commutator_bound,
    aluthge_intertwiner_bound,
    approx_commutator_bound,
    schatten_norm,
)
from .suites import SUITE_IDS, run_suite

_SLACK_REL = 1e-9


def _read_doc(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fp:
        return json.load(fp)


def _read_one_matrix(path: str):
    return matrix_from_doc(_read_doc(path))


def _read_named(path: str, names: tuple[str, ...]) -> dict:
    doc = _read_doc(path)
    if not isinstance(doc, dict):
        raise ValueError("expected a JSON object of named matrix documents")
    missing = [name for name in names if name not in doc]
    if missing:
        raise ValueError(f"missing matrices {missing} in input document")
    return {name: matrix_from_doc(doc[name]) for name in names}


def _emit(doc, out: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fp:
            fp.write(text)


def _tolerances(args) -> Tolerances:
    residual = args.tol
    if residual is None:
        env = os.environ.get("ALUTHGE_TOL")
        if env is not None:
            try:
                residual = float(env)
            except ValueError as exc:
                raise ValueError(f"ALUTHGE_TOL must be a decimal string, got {env!r}") from exc
    if residual is None:
        return DEFAULT_TOL
    return Tolerances(residual_rel=residual)


def _cmd_polar(args) -> int:
    tol = _tolerances(args)
    M = _read_one_matrix(args.input)
    mode = MODE_PARTIAL if args.mode == "partial" else MODE_UNITARY
    parts = polar_decompose(M, mode, tol)
    residual = op_norm(parts.angular @ parts.positive - M)
    _emit(
        {
            "mode": parts.mode,
            "rank": parts.rank,
            "angular": matrix_to_doc(parts.angular),
            "positive": matrix_to_doc(parts.positive),
            "reconstruction_residual": residual,
        },
        args.out,
    )
    return 0


def _cmd_aluthge(args) -> int:
    tol = _tolerances(args)
    M = _read_one_matrix(args.input)
    if args.iterate is not None:
        trajectory = aluthge_iterate(M, args.iterate, tol)
        doc = {
            "norms": trajectory.norms,
            "radius": trajectory.radius,
            "final": matrix_to_doc(trajectory.iterates[-1]),
        }
        if args.full:
            doc["iterates"] = [matrix_to_doc(it) for it in trajectory.iterates]
        _emit(doc, args.out)
        return 0
    _emit(matrix_to_doc(aluthge_st(M, args.s, args.t, tol)), args.out)
    return 0


def _cmd_commutant(args) -> int:
    tol = _tolerances(args)
    mats = _read_named(args.input, ("A", "B"))
    cb = commutant_basis(mats["A"], mats["B"], tol)
    _emit(
        {
            "dim_domain": list(cb.dim_domain),
            "nullity": cb.nullity,
            "residuals": cb.residuals,
            "basis": [matrix_to_doc(X) for X in cb.basis],
        },
        args.out,
    )
    return 0


def _cmd_fp_check(args) -> int:
    tol = _tolerances(args)
    mats = _read_named(args.input, ("A", "B"))
    rep = fp_property(mats["A"], mats["B"], tol)
    _emit(
        {
            "holds": rep.holds,
            "com_dim": rep.com_dim,
            "max_residual": rep.max_residual,
            "witness": None if rep.witness is None else matrix_to_doc(rep.witness),
        },
        args.out,
    )
    return 0 if rep.holds else 1


def _cmd_schatten(args) -> int:
    M = _read_one_matrix(args.input)
    _emit({"p": "inf" if args.p == inf else args.p, "norm": schatten_norm(M, args.p)}, args.out)
    return 0


def _cmd_inequality(args) -> int:
    tol = _tolerances(args)
    if args.which == "lemma41":
        mats = _read_named(args.input, ("A", "X"))
        rep = aluthge_commutator_bound(mats["A"], mats["X"], args.p, tol)
        satisfied = rep.hypotheses_ok and rep.slack >= -_SLACK_REL * max(1.0, rep.lhs, rep.rhs)
    elif args.which == "thm42":
        mats = _read_named(args.input, ("A", "B", "X"))
        rep = aluthge_intertwiner_bound(mats["A"], mats["B"], mats["X"], args.p, tol)
        satisfied = rep.hypotheses_ok and rep.slack >= -_SLACK_REL * max(1.0, rep.lhs, rep.rhs)
    else:
        if args.delta is None:
            raise ValueError("inequality moore requires --delta")
        mats = _read_named(args.input, ("A", "X"))
        rep = approx_commutator_bound(mats["A"], mats["X"], args.delta, tol)
        satisfied = rep.slack <= _SLACK_REL * max(1.0, rep.lhs, rep.rhs)
    _emit(
        {
            "which": args.which,
            "lhs": rep.lhs,
            "rhs": rep.rhs,
            "slack": rep.slack,
            "hypotheses_ok": rep.hypotheses_ok,
            "a_value": rep.a_value,
            "p": "inf" if rep.p == inf else rep.p,
            "details": {k: v for k, v in rep.details.items() if isinstance(v, (bool, int, float, str))},
        },
        args.out,
    )
    return 0 if satisfied else 1


def _cmd_suite(args) -> int:
    tol = _tolerances(args)
    report = run_suite(args.suite_id, args.seed, args.trials, tol)
    _emit(report.to_doc(), args.out)
    return 0 if report.passed else 1


def _float_or_inf(text: str) -> float:
    return float(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aluthge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", default="-", help="input document path, or - for stdin")
        p.add_argument("--out", default=None, help="write the result document here instead of stdout")
        p.add_argument("--tol", type=float, default=None, help="residual tolerance override")

    p_polar = sub.add_parser("polar", help="polar decomposition of one matrix")
    add_common(p_polar)
    p_polar.add_argument("--mode", choices=("unitary", "partial"), default="unitary")
    p_polar.set_defaults(func=_cmd_polar)

    p_al = sub.add_parser("aluthge", help="(s,t) transform or iterated transforms of one matrix")
    add_common(p_al)
    p_al.add_argument("--s", type=float, default=0.5)
    p_al.add_argument("--t", type=float, default=0.5)
    p_al.add_argument("--iterate", type=int, default=None, metavar="N", help="emit N iterates with norm diagnostics")
    p_al.add_argument("--full", action="store_true", help="include every iterate matrix in the output")
    p_al.set_defaults(func=_cmd_aluthge)

    p_com = sub.add_parser("commutant", help="orthonormal basis of {X : AX = XB}")
    add_common(p_com)
    p_com.set_defaults(func=_cmd_commutant)

    p_fp = sub.add_parser("fp-check", help="adjoint-intertwining verdict for a pair document {A, B}")
    add_common(p_fp)
    p_fp.set_defaults(func=_cmd_fp_check)

    p_sch = sub.add_parser("schatten", help="Schatten p-norm of one matrix")
    add_common(p_sch)
    p_sch.add_argument("--p", type=_float_or_inf, required=True, help="order, 1 <= p <= inf")
    p_sch.set_defaults(func=_cmd_schatten)

    p_ineq = sub.add_parser("inequality", help="evaluate one of the norm inequalities")
    p_ineq.add_argument("which", choices=("lemma41", "thm42", "moore"))
    add_common(p_ineq)
    p_ineq.add_argument("--p", type=_float_or_inf, default=2.0)
    p_ineq.add_argument("--delta", type=float, default=None)
    p_ineq.set_defaults(func=_cmd_inequality)

    p_suite = sub.add_parser("suite", help="run a registered verification suite")
    p_suite.add_argument("suite_id", choices=SUITE_IDS, metavar="suite_id", help=", ".join(SUITE_IDS))
    p_suite.add_argument("--trials", type=int, default=100)
    p_suite.add_argument("--seed", type=int, default=0)
    p_suite.add_argument("--tol", type=float, default=None)
    p_suite.add_argument("--out", default=None)
    p_suite.set_defaults(func=_cmd_suite)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
