"""Command-line front end.

Exit codes: 0 ok, 1 parse/usage error, 2 not Hermitian, 3 trace not one,
4 not positive semidefinite, 5 indeterminate strong-subadditivity verdict.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

import numpy as np

from . import matrixio, plotting, reporting
from .embedding import (
    DEFAULT_TRIPARTITE_ZEROS,
    PartitionScheme,
    ReductionMode,
    TripartiteReductions,
    ZeroEmbedding,
    embed_with_zeros,
    reduce_first_factor,
    reduce_second_factor,
    tripartite_reduce,
)
from .errors import DensityMatrixError, ParseError
from .hermlin import (
    STRICT_TOL,
    eigvals_hermitian,
    hermiticity_violation,
    hermitian_part,
    validate_density,
    von_neumann_entropy,
)
from .inequalities import (
    INDETERMINATE,
    check_strong_subadditivity,
    check_subadditivity,
    strong_subadditivity_from_reductions,
    subadditivity_from_reductions,
    sweep_zero_position,
)
from .randstates import StateKind, StateRecipe, generate

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INDETERMINATE = 5

PUBLISHED_TOL = 0.02

SCHEMES = {
    "qubit-qutrit": PartitionScheme.QUBIT_QUTRIT,
    "qutrit-qubit": PartitionScheme.QUTRIT_QUBIT,
    "three-qubit": PartitionScheme.THREE_QUBIT,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which is taken by NotHermitian
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_tolerances(p):
    g = p.add_argument_group("tolerances")
    g.add_argument("--herm-tol", type=float, default=None, help=f"max |M - M^H| entry (default {STRICT_TOL:g})")
    g.add_argument("--trace-tol", type=float, default=None, help=f"max |Tr M - 1| (default {STRICT_TOL:g})")
    g.add_argument("--psd-tol", type=float, default=None, help=f"max negative eigenvalue (default {STRICT_TOL:g})")
    g.add_argument("--published", action="store_true",
                   help=f"loose Hermiticity/trace tolerance {PUBLISHED_TOL:g} for truncated printed matrices")


def _tolerances(args):
    loose = PUBLISHED_TOL if args.published else STRICT_TOL
    herm = args.herm_tol if args.herm_tol is not None else loose
    trace = args.trace_tol if args.trace_tol is not None else loose
    psd = args.psd_tol if args.psd_tol is not None else STRICT_TOL
    return herm, trace, psd


def _tol_diagnostics(args):
    herm, trace, psd = _tolerances(args)
    return {"herm_tol": herm, "trace_tol": trace, "psd_tol": psd}


def _load(path):
    """Return ``("matrix", array)`` or ``("tripartite"|"bipartite", bundle)``."""
    path = Path(path)
    if path.suffix.lower() != ".csv":
        text = path.read_text()
        if text.lstrip().startswith("{"):
            obj = matrixio.read_json_object(path)
            kind = matrixio.bundle_kind(obj)
            if kind:
                return kind, dict(matrixio.read_bundle(obj), meta=obj)
            return "matrix", matrixio.matrix_from_dm_json(obj)
    return "matrix", matrixio.read_matrix(path)


def _load_state(args, expect_dim=None):
    kind, payload = _load(args.file)
    if kind != "matrix":
        raise UsageError(f"{args.file} is a {kind} reduction bundle, a full state is needed here")
    rho = validate_density(payload, *_tolerances(args))
    if expect_dim is not None and rho.dim != expect_dim:
        raise UsageError(f"expected a {expect_dim}x{expect_dim} state, got {rho.dim}x{rho.dim}")
    return rho


def _emit(text, out=None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args):
    kind, m = _load(args.file)
    if kind != "matrix":
        raise UsageError("validate expects a single matrix, not a reduction bundle")
    herm = hermiticity_violation(m)
    h = hermitian_part(m)
    trace_dev = abs(float(np.trace(h).real) - 1.0)
    lam_min = eigvals_hermitian(h).eigenvalues[-1]
    print(f"dimension              {m.shape[0]}")
    print(f"hermiticity deviation  {herm:.3e}")
    print(f"trace deviation        {trace_dev:.3e}")
    print(f"min eigenvalue         {lam_min:.6e}")
    try:
        validate_density(m, *_tolerances(args))
    except DensityMatrixError as exc:
        print(f"INVALID: {exc}")
        return exc.exit_code
    print("VALID")
    return EXIT_OK


def cmd_entropy(args):
    rho = _load_state(args)
    print(f"{von_neumann_entropy(rho)!r}" if args.full else f"{von_neumann_entropy(rho):.6f}")
    return EXIT_OK


def cmd_subadd(args):
    scheme = SCHEMES[args.scheme]
    if scheme is PartitionScheme.THREE_QUBIT:
        raise UsageError("subadd needs a bipartite scheme (qubit-qutrit or qutrit-qubit)")
    kind, payload = _load(args.file)
    diagnostics = _tol_diagnostics(args)
    if kind == "bipartite":
        if args.s_total is None:
            raise UsageError("a reduction bundle has no whole state; pass --s-total")
        meta = payload["meta"]
        rep = subadditivity_from_reductions(
            args.s_total, payload["first"], payload["second"], psd_tol=_tolerances(args)[2],
            scheme=meta.get("scheme", ""), zero_position=meta.get("zero_position"),
        )
        diagnostics["s_total_override"] = args.s_total
    elif kind == "matrix":
        rho = validate_density(payload, *_tolerances(args))
        rep = check_subadditivity(rho, args.zero_pos, scheme)
    else:
        raise UsageError(f"{args.file} is a {kind} bundle")
    _emit(reporting.render(rep, args.format, diagnostics), args.out)
    return EXIT_OK


def cmd_sweep(args):
    rho = _load_state(args, expect_dim=5)
    table = sweep_zero_position(rho)
    _emit(reporting.render(table, args.format, _tol_diagnostics(args)), args.out)
    if args.plot:
        plotting.plot_sweep(table, args.plot)
    return EXIT_OK


def cmd_ssa(args):
    kind, payload = _load(args.file)
    mode = ReductionMode(args.mode)
    diagnostics = _tol_diagnostics(args)
    psd_tol = _tolerances(args)[2]
    if kind == "tripartite":
        if args.s_total is None:
            raise UsageError("a reduction bundle has no whole state; pass --s-total")
        mode = ReductionMode(payload["meta"].get("mode", args.mode))
        red = TripartiteReductions(payload["rho12"], payload["rho23"], payload["r2"], mode)
        rep = strong_subadditivity_from_reductions(args.s_total, red, psd_tol=psd_tol)
        diagnostics["s_total_override"] = args.s_total
    elif kind == "matrix":
        rho = validate_density(payload, *_tolerances(args))
        if rho.dim != 5:
            raise UsageError(f"expected a 5x5 state, got {rho.dim}x{rho.dim}")
        zeros = args.zero_pos or DEFAULT_TRIPARTITE_ZEROS
        if args.s_total is None:
            rep = check_strong_subadditivity(rho, mode, zero_positions=zeros)
        else:
            rho8 = embed_with_zeros(rho, ZeroEmbedding(5, 8, zeros))
            red = tripartite_reduce(rho8, mode, zeros)
            rep = strong_subadditivity_from_reductions(args.s_total, red, psd_tol=psd_tol, zero_positions=zeros)
            diagnostics["s_total_override"] = args.s_total
    else:
        raise UsageError(f"{args.file} is a {kind} bundle")
    _emit(reporting.render(rep, args.format, diagnostics), args.out)
    return EXIT_INDETERMINATE if rep.status == INDETERMINATE else EXIT_OK


def cmd_reduce(args):
    scheme = SCHEMES[args.scheme]
    rho = _load_state(args, expect_dim=5)
    if scheme is PartitionScheme.THREE_QUBIT:
        if args.subsystem not in ("12", "23", "2"):
            raise UsageError("three-qubit scheme: --subsystem must be 12, 23 or 2")
        zeros = args.zero_pos or DEFAULT_TRIPARTITE_ZEROS
        if len(zeros) != 3:
            raise UsageError("three-qubit scheme needs three zero positions")
        rho8 = embed_with_zeros(rho, ZeroEmbedding(5, 8, zeros))
        red = tripartite_reduce(rho8, ReductionMode(args.mode), zeros)
        out = {"12": red.rho12, "23": red.rho23, "2": red.r2}[args.subsystem]
    else:
        if args.subsystem not in ("1", "2"):
            raise UsageError("bipartite schemes: --subsystem must be 1 or 2")
        zeros = args.zero_pos or (6,)
        if len(zeros) != 1:
            raise UsageError("bipartite schemes take a single zero position")
        rho6 = embed_with_zeros(rho, ZeroEmbedding(5, 6, zeros))
        reducer = reduce_first_factor if args.subsystem == "1" else reduce_second_factor
        out = reducer(rho6, scheme)
    text = matrixio.dumps_dm_csv(out) if args.format == "csv" else matrixio.dumps_dm_json(out)
    _emit(text, args.out)
    return EXIT_OK


def cmd_random(args):
    kind = StateKind(args.kind)
    if kind is StateKind.PRODUCT:
        if not args.dims:
            raise UsageError("--kind product needs --dims, e.g. --dims 2,3")
        seed = args.seed if len(args.seed) > 1 else args.seed[0]
        recipe = StateRecipe(kind, factor_dims=args.dims, seed=seed)
    else:
        if args.dim is None:
            raise UsageError(f"--kind {args.kind} needs --dim")
        if len(args.seed) != 1:
            raise UsageError("only product states take several seeds")
        recipe = StateRecipe(kind, dim=args.dim, seed=args.seed[0])
    m = generate(recipe).matrix
    text = matrixio.dumps_dm_csv(m) if args.format == "csv" else matrixio.dumps_dm_json(m)
    _emit(text, args.out)
    return EXIT_OK


def cmd_plot(args):
    kind, payload = _load(args.file)
    if kind != "matrix":
        raise UsageError("plot expects a single matrix file")
    plotting.plot_matrix(payload, args.out, part=args.part, title=args.title)
    return EXIT_OK


def build_parser():
    p = _Parser(prog="qudit-ineq", description="Entropic inequalities for a single qudit via artificial subsystems.")
    p.add_argument("-v", "--verbose", action="store_true", help="log eigenvalue clamping and other details")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check Hermiticity, unit trace and positivity")
    s.add_argument("file")
    _add_tolerances(s)
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("entropy", help="von Neumann entropy in nats")
    s.add_argument("file")
    s.add_argument("--full", action="store_true", help="print every digit")
    _add_tolerances(s)
    s.set_defaults(func=cmd_entropy)

    fmt = dict(choices=("table", "csv", "json"), default="table")

    s = sub.add_parser("subadd", help="subadditivity for one zero position and one ordering")
    s.add_argument("file", help="5x5 state, or a bipartite reduction bundle (needs --s-total)")
    s.add_argument("--scheme", choices=("qubit-qutrit", "qutrit-qubit"), default="qubit-qutrit")
    s.add_argument("--zero-pos", type=int, default=6, choices=range(1, 7), metavar="K")
    s.add_argument("--s-total", type=float, help="entropy of the whole state when only reductions are given")
    s.add_argument("--format", **fmt)
    s.add_argument("--out")
    _add_tolerances(s)
    s.set_defaults(func=cmd_subadd)

    s = sub.add_parser("sweep", help="entropies and mutual information for zero rows at 1..6")
    s.add_argument("file")
    s.add_argument("--format", **fmt)
    s.add_argument("--out", help="write the table here instead of stdout")
    s.add_argument("--plot", help="also write a figure (.svg, .png, .pdf)")
    _add_tolerances(s)
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("ssa", help="strong subadditivity on the three-qubit embedding")
    s.add_argument("file", help="5x5 state, or a tripartite reduction bundle (needs --s-total)")
    s.add_argument("--mode", choices=("paper", "canonical"), default="paper")
    s.add_argument("--zero-pos", type=_int_list, help="three zero positions (default 1,5,8)")
    s.add_argument("--s-total", type=float,
                   help="override the entropy of the whole state (required for bundles)")
    s.add_argument("--format", **fmt)
    s.add_argument("--out")
    _add_tolerances(s)
    s.set_defaults(func=cmd_ssa)

    s = sub.add_parser("reduce", help="emit a reduced matrix as DM-JSON")
    s.add_argument("file")
    s.add_argument("--scheme", choices=tuple(SCHEMES), default="qubit-qutrit")
    s.add_argument("--subsystem", default="1", help="1 or 2 (bipartite); 12, 23 or 2 (three-qubit)")
    s.add_argument("--zero-pos", type=_int_list, help="zero position(s); default 6 or 1,5,8")
    s.add_argument("--mode", choices=("paper", "canonical"), default="paper")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--out")
    _add_tolerances(s)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("random", help="write a seeded random density matrix")
    s.add_argument("--kind", choices=[k.value for k in StateKind], default="ginibre")
    s.add_argument("--dim", type=int)
    s.add_argument("--dims", type=_int_list, help="factor dimensions for --kind product")
    s.add_argument("--seed", type=_int_list, default=(0,), help="seed, or one seed per factor")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--out")
    s.set_defaults(func=cmd_random)

    s = sub.add_parser("plot", help="heat map of matrix entries")
    s.add_argument("file")
    s.add_argument("--out", required=True, help="output image (.svg recommended)")
    s.add_argument("--part", choices=tuple(plotting.PARTS), default="abs")
    s.add_argument("--title")
    s.set_defaults(func=cmd_plot)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except DensityMatrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (ParseError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
