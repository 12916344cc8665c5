"""Command-line interface.

Every verb is a thin shell over one library operation and emits a JSON
report on stdout (sorted keys, canonical term orders, so identical
invocations are byte-identical); ``--format text`` renders the same
report as indented key/value lines.  Exit codes: 0 success, 1 bad
usage, 2 unparsable input file, 3 violated precondition.

Link inputs may be longitude-system JSON ({m, depth, longitudes}),
PD-code JSON ({m, components, crossings}) or braid text (``n; A12
...``); diagram and braid inputs are expanded at a depth chosen from
the requested computation unless ``--depth`` overrides it.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import corpus
from .brackets import evaluate_detailed, massey_sum
from .errors import ParseError, PreconditionError
from .links import artin_longitudes, load_pd, longitudes_mod_q, parse_braid
from .milnor import (
    LongitudeSystem,
    all_vanish_up_to,
    delta,
    format_index,
    mu,
    mu_bar,
    parse_index,
)
from .mutation import csum_mu, find_detector, mutant_mu
from .surgery import lcq_is_free, mutative_pair_report
from .words import parse_word

DEFAULT_SEED = corpus.DEFAULT_SEED


@dataclass(frozen=True)
class RunConfig:
    verb: str
    fmt: str
    seed: int
    args: argparse.Namespace


class UsageError(Exception):
    """Usage problems detected after argparse (still exit code 1)."""


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract reserves 2 for
    # input-file parse errors and uses 1 for bad usage.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def load_system(path: str, depth: int) -> LongitudeSystem:
    """Read a longitude system from any of the three input formats."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if not stripped:
        raise ParseError(f"{path}: empty input")
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc}") from exc
        if "longitudes" in data:
            try:
                system = LongitudeSystem(
                    m=int(data["m"]),
                    depth=int(data["depth"]),
                    longitudes=tuple(
                        parse_word(w) for w in data["longitudes"]
                    ),
                )
            except (KeyError, TypeError, ValueError) as exc:
                if isinstance(exc, (ParseError, PreconditionError)):
                    raise
                raise ParseError(f"{path}: {exc}") from exc
            return system
        if "crossings" in data:
            return longitudes_mod_q(load_pd(data), depth)
        raise ParseError(
            f"{path}: JSON is neither a longitude system nor a PD code"
        )
    return artin_longitudes(parse_braid(text), depth)


def _depth_for(args, minimum: int) -> int:
    if getattr(args, "depth", None) is not None:
        if args.depth < minimum:
            raise PreconditionError(
                f"--depth {args.depth} is below the required {minimum}"
            )
        return args.depth
    return minimum


def _maybe_truncate(system: LongitudeSystem, args) -> LongitudeSystem:
    depth = getattr(args, "depth", None)
    if depth is not None and depth < system.depth:
        return system.truncate(depth)
    return system


def _load_for_index(args, weight: int) -> LongitudeSystem:
    depth = _depth_for(args, weight + 1)
    return _maybe_truncate(load_system(args.link, depth), args)


def cmd_mu(args) -> dict:
    index = parse_index(args.index)
    system = _load_for_index(args, len(index))
    return {
        "index": format_index(index),
        "mu": mu(system, index),
    }


def cmd_delta(args) -> dict:
    index = parse_index(args.index)
    system = _load_for_index(args, len(index))
    return {
        "index": format_index(index),
        "delta": delta(system, index),
    }


def cmd_mu_bar(args) -> dict:
    index = parse_index(args.index)
    system = _load_for_index(args, len(index))
    value = mu_bar(system, index)
    return {
        "index": format_index(index),
        "mu": value.mu,
        "delta": value.delta,
        "residue": value.residue,
    }


def cmd_vanish_up_to(args) -> dict:
    depth = _depth_for(args, args.weight + 1)
    system = _maybe_truncate(load_system(args.link, depth), args)
    return {
        "weight": args.weight,
        "all_vanish": all_vanish_up_to(system, args.weight),
    }


def cmd_mutate_report(args) -> dict:
    index = parse_index(args.index)
    depth = _depth_for(args, len(index) + 1)
    alpha = _maybe_truncate(load_system(args.alpha, depth), args)
    beta = _maybe_truncate(load_system(args.beta, depth), args)
    if alpha.depth != beta.depth:
        shared = min(alpha.depth, beta.depth)
        alpha, beta = alpha.truncate(shared), beta.truncate(shared)
    if args.type is None:
        report = csum_mu(alpha, beta, index)
    else:
        report = mutant_mu(alpha, beta, index, args.type)
    return report.to_json()


def cmd_find_detector(args) -> dict:
    depth = _depth_for(args, args.weight + 1)
    alpha = _maybe_truncate(load_system(args.alpha, depth), args)
    detectors = find_detector(alpha, args.weight, args.type)
    return {
        "weight": args.weight,
        "mutation": args.type,
        "detectors": [format_index(d) for d in detectors],
    }


def cmd_massey_sum(args) -> dict:
    index = parse_index(args.index)
    expr = massey_sum(index)
    out = {
        "index": format_index(index),
        "terms": expr.to_json(),
    }
    if args.values is not None:
        try:
            values = json.loads(Path(args.values).read_text())
        except json.JSONDecodeError as exc:
            raise ParseError(f"{args.values}: {exc}") from exc
        total, missing = evaluate_detailed(expr, values)
        out["value"] = total
        out["defaulted_to_zero"] = missing
        # the numeric reading presumes the link admits a surface system
        # of this weight; that hypothesis is the caller's to assert
        out["assumes_surface_system_of_weight"] = len(index)
    return out


def cmd_lcq(args) -> dict:
    if (args.link is None) == (args.mutant_of is None):
        raise UsageError(
            "exactly one of --link and --mutant-of is required"
        )
    if args.mutant_of is not None:
        if args.type is None:
            raise UsageError("--mutant-of needs --type")
        depth = _depth_for(args, args.q + 1)
        alpha = _maybe_truncate(load_system(args.mutant_of, depth), args)
        return mutative_pair_report(alpha, args.q, args.type).to_json()
    depth = _depth_for(args, args.q)
    system = _maybe_truncate(load_system(args.link, depth), args)
    return lcq_is_free(system, args.q).to_json()


def cmd_corpus_install(args) -> dict:
    return {"written": corpus.corpus_install(args.directory)}


def _render_text(data, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(data, dict):
        for key in sorted(data):
            value = data[key]
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {value}")
    elif isinstance(data, list):
        for item in data:
            if isinstance(item, (dict, list)):
                lines.extend(_render_text(item, indent + 1))
                lines.append("")
            else:
                lines.append(f"{pad}- {item}")
        while lines and lines[-1] == "":
            lines.pop()
    else:
        lines.append(f"{pad}{data}")
    return lines


def emit(report: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(_render_text(report)))


def build_parser() -> _Parser:
    parser = _Parser(
        prog="mubar",
        description="Milnor mu-bar invariants, mutation calculus and "
        "minimal linkings",
    )
    parser.add_argument(
        "--format", choices=("json", "text"), default="json",
        help="output format (text is derived from the JSON report)",
    )
    parser.add_argument(
        "--seed", type=int, default=DEFAULT_SEED,
        help="seed reserved for randomized suites (current verbs are "
        "deterministic)",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_link_verb(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--link", required=True, help="system/PD/braid file")
        p.add_argument("--index", required=True, help="index sequence, e.g. 1122")
        p.add_argument("--depth", type=int, help="expansion depth override")
        p.set_defaults(func=func)
        return p

    add_link_verb("mu", cmd_mu, "Milnor mu of one index")
    add_link_verb("delta", cmd_delta, "indeterminacy of one index")
    add_link_verb("mu-bar", cmd_mu_bar, "mu, Delta and the residue")

    p = sub.add_parser("vanish-up-to", help="do all residues of weight <= q vanish")
    p.add_argument("--link", required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--depth", type=int)
    p.set_defaults(func=cmd_vanish_up_to)

    p = sub.add_parser("mutate-report", help="connected-sum / mutant congruence report")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--index", required=True)
    p.add_argument("--type", choices=("F", "R", "FR"))
    p.add_argument("--depth", type=int)
    p.set_defaults(func=cmd_mutate_report)

    p = sub.add_parser("find-detector", help="indices with mu(I) != mu(I^tau)")
    p.add_argument("--alpha", required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--type", choices=("F", "R", "FR"), required=True)
    p.add_argument("--depth", type=int)
    p.set_defaults(func=cmd_find_detector)

    p = sub.add_parser("massey-sum", help="bracket expansion of mu-bar(I)")
    p.add_argument("--index", required=True)
    p.add_argument("--values", help="JSON file of minimal-linking values")
    p.set_defaults(func=cmd_massey_sum)

    p = sub.add_parser("lcq", help="free-nilpotence of the surgery group quotient")
    p.add_argument("--link")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--mutant-of", dest="mutant_of", help="alpha file for the mutative pair")
    p.add_argument("--type", choices=("F", "R", "FR"))
    p.add_argument("--depth", type=int)
    p.set_defaults(func=cmd_lcq)

    p = sub.add_parser("corpus-install", help="write the bundled corpus files")
    p.add_argument("directory")
    p.set_defaults(func=cmd_corpus_install)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    config = RunConfig(verb=args.verb, fmt=args.format, seed=args.seed, args=args)
    try:
        report = args.func(config.args)
    except UsageError as exc:
        print(f"mubar: error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"mubar: parse error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"mubar: precondition violated: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"mubar: {exc}", file=sys.stderr)
        return 2
    emit(report, config.fmt)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
