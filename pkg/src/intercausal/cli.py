"""Command-line front end.

Four subcommands: ``analyze`` summarizes a matrix JSON file, ``surface``
emits belief grids as CSV (optionally with rendered figures), ``verify``
runs the invariant suite, and ``convert`` translates between the three
model parameterizations.

Exit codes: 0 success, 1 verification failure, 2 unparseable input,
3 domain error (invalid probabilities, out-of-range conversions),
4 usage error.  Output is plain text, so NO_COLOR needs no handling.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .bounds import factored_symmetric_matrix
from .cici import (
    classify_swap,
    factorize,
    is_cici,
    is_degenerate_double_cici,
    noisy_or_matrix,
    noisy_or_to_singular,
    noisy_or_to_symmetric,
    singular_to_noisy_or,
    symmetric_to_noisy_or,
)
from .core import (
    FactoredSymmetric,
    LikelihoodMatrix,
    NoisyOrParams,
    SingularFactorization,
)
from .errors import DegenerateEntriesError, IntercausalError, ParseError
from .inference import belief_surface, edge_csv, edge_curve, surface_csv
from .synergy import synergy_report
from .verify import DEFAULT_SEED, run_all

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_USAGE = 4

# Sentinel for a bare --plot with no path of its own.
_PLOT_FROM_OUT = ""


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as exit code 4, not 2."""

    def error(self, message):
        raise _UsageError(message)


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _load_matrix(path: str) -> LikelihoodMatrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as err:
        raise ParseError(f"cannot read {path}: {err}") from err
    except json.JSONDecodeError as err:
        raise ParseError(f"{path} is not valid JSON: {err}") from err
    return LikelihoodMatrix.from_json(data)


def _factorization_entry(table: LikelihoodMatrix) -> Optional[dict]:
    if not is_cici(table):
        return None
    try:
        f = factorize(table)
    except DegenerateEntriesError:
        return {"identifiable": False}
    cls = classify_swap(f)
    return {
        "identifiable": True,
        "a": f.a,
        "b": f.b,
        "c": f.c,
        "swap_class": cls.value,
        "swap_class_name": cls.name,
    }


def cmd_analyze(args) -> int:
    m = _load_matrix(args.matrix)
    pos = m.pos_table()
    neg = m.neg_table()
    rep = synergy_report(pos)
    info = {
        "classification": rep.classification.value,
        "det_pos": rep.det_pos,
        "det_neg": rep.det_neg,
        "y_pos": rep.y_pos,
        "y_neg": rep.y_neg,
        "cici_pos": is_cici(pos),
        "cici_neg": is_cici(neg),
        "degenerate_double_cici": is_degenerate_double_cici(m),
        "factorizations": {
            "pos": _factorization_entry(pos),
            "neg": _factorization_entry(neg),
        },
    }
    if args.json:
        print(json.dumps(info, indent=2))
        return EXIT_OK
    print(f"classification: {rep.classification.name}")
    print(f"det e+: {_fmt(rep.det_pos)}")
    print(f"det e-: {_fmt(rep.det_neg)}")
    print(f"Y e+: {_fmt(rep.y_pos)}")
    print(f"Y e-: {_fmt(rep.y_neg)}")
    print(f"CICI at e+: {'yes' if info['cici_pos'] else 'no'}")
    print(f"CICI at e-: {'yes' if info['cici_neg'] else 'no'}")
    print(f"degenerate double CICI: {'yes' if info['degenerate_double_cici'] else 'no'}")
    for label, entry in (("e+", info["factorizations"]["pos"]), ("e-", info["factorizations"]["neg"])):
        if entry is None:
            continue
        if not entry["identifiable"]:
            print(f"factorization {label}: not identifiable (zero entries)")
            continue
        print(
            f"factorization {label}: a={_fmt(entry['a'])}, b={_fmt(entry['b'])}, "
            f"c={_fmt(entry['c'])}"
        )
        print(f"swap class {label}: {entry['swap_class']} ({entry['swap_class_name']})")
    return EXIT_OK


def _surface_table(args) -> LikelihoodMatrix:
    """Resolve the one table source among --k/--w, --q0/--q1/--q2, --matrix."""
    sym_given = args.k is not None or args.w is not None
    nor_given = any(v is not None for v in (args.q0, args.q1, args.q2))
    mat_given = args.matrix is not None
    if sym_given + nor_given + mat_given != 1:
        raise _UsageError(
            "exactly one table source required: --k/--w, --q0/--q1/--q2, or --matrix"
        )
    if sym_given:
        if args.k is None or args.w is None:
            raise _UsageError("the symmetric source needs both --k and --w")
        return factored_symmetric_matrix(FactoredSymmetric(args.k, args.w)).pos_table()
    if nor_given:
        if args.q0 is None or args.q1 is None or args.q2 is None:
            raise _UsageError("the noisy-or source needs --q0, --q1 and --q2")
        return noisy_or_matrix(NoisyOrParams(args.q0, args.q1, args.q2))
    return _load_matrix(args.matrix).pos_table()


def cmd_surface(args) -> int:
    pos = _surface_table(args)
    if args.edge:
        curve = edge_curve(pos, args.prior_b, args.grid)
        text = edge_csv(curve)
    else:
        surface = belief_surface(pos, args.prior_b, args.grid)
        text = surface_csv(surface)

    plot_path = args.plot
    if plot_path == _PLOT_FROM_OUT:
        if args.out is None:
            raise _UsageError("--plot without a path requires --out to derive one from")
        plot_path = os.path.splitext(args.out)[0] + ".png"

    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    if plot_path is not None:
        from .report import render_edge, render_surface

        if args.edge:
            render_edge(curve, plot_path)
        else:
            render_surface(surface, plot_path)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_all(seed=args.seed, samples=args.samples)
    failed = [r for r in results if not r.passed]
    if args.json:
        print(
            json.dumps(
                {
                    "checks": [
                        {"name": r.name, "passed": r.passed, "detail": r.detail}
                        for r in results
                    ],
                    "all_passed": not failed,
                },
                indent=2,
            )
        )
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}")
        if failed:
            print(f"{len(failed)} of {len(results)} checks FAILED")
        else:
            print(f"all {len(results)} checks passed")
    return EXIT_VERIFY if failed else EXIT_OK


_MODEL_FLAGS = {
    "noisy-or": ("q0", "q1", "q2"),
    "singular": ("a", "b", "c"),
    "symmetric": ("k", "w"),
}


def _convert_source(args):
    needed = _MODEL_FLAGS[args.source]
    for flag in needed:
        if getattr(args, flag) is None:
            raise _UsageError(
                f"source '{args.source}' needs --" + ", --".join(needed)
            )
    for model, flags in _MODEL_FLAGS.items():
        if model == args.source:
            continue
        for flag in flags:
            if flag not in needed and getattr(args, flag) is not None:
                raise _UsageError(f"--{flag} does not belong to source '{args.source}'")
    if args.source == "noisy-or":
        return NoisyOrParams(args.q0, args.q1, args.q2)
    if args.source == "singular":
        return SingularFactorization(args.a, args.b, args.c)
    return FactoredSymmetric(args.k, args.w)


def _as_noisy_or(src) -> NoisyOrParams:
    if isinstance(src, NoisyOrParams):
        return src
    if isinstance(src, SingularFactorization):
        return singular_to_noisy_or(src)
    return symmetric_to_noisy_or(src)


def cmd_convert(args) -> int:
    src = _convert_source(args)
    if args.target == "noisy-or":
        p = _as_noisy_or(src)
        out = {"model": "noisy-or", "q0": p.q0, "q1": p.q1, "q2": p.q2}
    elif args.target == "singular":
        f = src if isinstance(src, SingularFactorization) else noisy_or_to_singular(_as_noisy_or(src))
        out = {"model": "singular", "a": f.a, "b": f.b, "c": f.c}
    else:
        s = src if isinstance(src, FactoredSymmetric) else noisy_or_to_symmetric(_as_noisy_or(src))
        out = {"model": "symmetric", "k": s.k, "w": s.w}
    print(json.dumps(out, indent=2))
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="intercausal",
        description="Inter-causal structure of two binary causes with shared evidence.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p_analyze = sub.add_parser(
        "analyze", help="summarize a likelihood matrix from a JSON file"
    )
    p_analyze.add_argument("matrix", help="path to a matrix JSON file")
    p_analyze.add_argument("--json", action="store_true", help="machine-readable output")
    p_analyze.set_defaults(func=cmd_analyze)

    p_surface = sub.add_parser(
        "surface", help="emit the belief surface (or its f=1 edge) as CSV"
    )
    p_surface.add_argument("--k", type=float, help="symmetric link term")
    p_surface.add_argument("--w", type=float, help="symmetric leak complement")
    p_surface.add_argument("--q0", type=float, help="noisy-or leak complement")
    p_surface.add_argument("--q1", type=float, help="noisy-or reliability for A")
    p_surface.add_argument("--q2", type=float, help="noisy-or reliability for B")
    p_surface.add_argument("--matrix", help="path to a matrix JSON file")
    p_surface.add_argument(
        "--prior-b", type=float, default=0.5, help="prior on B (default 0.5)"
    )
    p_surface.add_argument(
        "--grid", type=int, default=41, help="points per axis, at least 2 (default 41)"
    )
    p_surface.add_argument("--out", help="write CSV here instead of stdout")
    p_surface.add_argument(
        "--edge", action="store_true", help="emit the f=1 exclusion curve instead"
    )
    p_surface.add_argument(
        "--plot",
        nargs="?",
        const=_PLOT_FROM_OUT,
        default=None,
        metavar="PNG",
        help="also render a figure (default path: --out with a .png suffix)",
    )
    p_surface.set_defaults(func=cmd_surface)

    p_verify = sub.add_parser("verify", help="run the invariant suite")
    p_verify.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help=f"RNG seed (default {DEFAULT_SEED})"
    )
    p_verify.add_argument(
        "--samples",
        type=int,
        default=None,
        help="override each sampling check's draw count (smoke runs)",
    )
    p_verify.add_argument("--json", action="store_true", help="machine-readable output")
    p_verify.set_defaults(func=cmd_verify)

    p_convert = sub.add_parser(
        "convert", help="translate between model parameterizations"
    )
    p_convert.add_argument(
        "--from",
        dest="source",
        required=True,
        choices=sorted(_MODEL_FLAGS),
        help="source model",
    )
    p_convert.add_argument(
        "--to",
        dest="target",
        required=True,
        choices=sorted(_MODEL_FLAGS),
        help="target model",
    )
    p_convert.add_argument("--q0", type=float, help="noisy-or leak complement")
    p_convert.add_argument("--q1", type=float, help="noisy-or reliability for A")
    p_convert.add_argument("--q2", type=float, help="noisy-or reliability for B")
    p_convert.add_argument("--a", type=float, help="singular parameter a")
    p_convert.add_argument("--b", type=float, help="singular parameter b")
    p_convert.add_argument("--c", type=float, help="singular scale c")
    p_convert.add_argument("--k", type=float, help="symmetric link term")
    p_convert.add_argument("--w", type=float, help="symmetric leak complement")
    p_convert.set_defaults(func=cmd_convert)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        return args.func(args)
    except _UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as err:
        print(f"i/o error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except IntercausalError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
