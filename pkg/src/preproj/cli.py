"""Command-line driver.

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass

from . import export
from .context import Context
from .errors import MalformedSpecError, NonDynkinError
from .gfan import chamber_fan, g_matrix
from .linalg import DEFAULT_PRIME, QQ, Field, is_prime
from .tilting import exchange_quiver, ideal_closure
from .verify import DEFAULT_SEED, run_all
from .weyl import WeylElement, closed_form_order

OK, FAILED, INVALID = 0, 1, 2

# above these sizes counts switch to cheaper methods
IDEAL_COUNT_LIMIT = 1920
WEYL_COUNT_LIMIT = 51840


class InvalidInput(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    quiver: str
    prime: int | None = None
    jobs: int = 1
    fmt: str | None = None
    level: str = "fast"
    seed: int = DEFAULT_SEED
    out: str | None = None

    def __post_init__(self):
        if self.prime is not None and (self.prime <= 2 or not is_prime(self.prime)):
            raise InvalidInput(f"--prime must be a prime greater than 2, got {self.prime}")
        if self.jobs < 1:
            raise InvalidInput("--jobs must be at least 1")

    @property
    def field(self) -> Field:
        return QQ if self.prime is None else Field(self.prime)

    def context(self) -> Context:
        try:
            ctx = Context(self.quiver, self.field)
        except (NonDynkinError, MalformedSpecError) as exc:
            raise InvalidInput(str(exc)) from exc
        return ctx


def parse_word(text: str) -> list[int]:
    """Generator indices separated by whitespace or commas; '' is the identity."""
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise InvalidInput(f"invalid word {text!r}") from exc


def _check_prime(ctx: Context) -> None:
    # the indecomposability test needs characteristic 0 or p > dim
    p = ctx.field.prime
    if p is not None and p <= ctx.algebra.dim:
        raise InvalidInput(f"--prime {p} must exceed dim Lambda = {ctx.algebra.dim}")


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_word(w: WeylElement) -> str:
    return " ".join(map(str, w.word)) or "e"


def _matrix_str(M) -> str:
    return "[" + ", ".join("[" + ",".join(map(str, r)) + "]" for r in M) + "]"


# -- commands -------------------------------------------------------------------------


def cmd_counts(cfg: RunConfig) -> int:
    ctx = cfg.context()
    expected = closed_form_order(ctx.quiver.type_tag)
    kind = ctx.quiver.type_tag[0]
    order = ctx.W.order()
    if kind in "AD" and order <= IDEAL_COUNT_LIMIT:
        _check_prime(ctx)
        found, method = len(ideal_closure(ctx)), "ideal-closure"
    elif order <= WEYL_COUNT_LIMIT:
        found, method = len(ctx.W.enumerate()), "weyl-enumeration"
    else:
        found, method = order, "orbit-stabilizer"
    if cfg.fmt == "json":
        _emit(cfg, export.dumps({"quiver": ctx.quiver.type_tag, "count": found,
                                 "expected": expected, "method": method,
                                 "match": found == expected}))
    else:
        rel = "=" if found == expected else "!="
        _emit(cfg, f"{ctx.quiver.type_tag}: {found} {rel} {expected} ({method})\n")
    return OK if found == expected else FAILED


def cmd_verify(cfg: RunConfig) -> int:
    ctx = cfg.context()
    _check_prime(ctx)
    try:
        results = run_all(ctx, cfg.level, cfg.seed, cfg.jobs)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc
    if cfg.fmt == "json":
        _emit(cfg, export.dumps({"quiver": ctx.quiver.type_tag, "level": cfg.level,
                                 "seed": cfg.seed, "results": [r.to_json() for r in results]}))
    else:
        lines = [f"{r.name}: {'PASS' if r.passed else 'FAIL'} ({r.checked} checked)"
                 for r in results]
        _emit(cfg, "\n".join(lines) + "\n")
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"first failing invariant: {failed[0].name} at {failed[0].failures[0]}",
              file=sys.stderr)
        return FAILED
    return OK


def cmd_hasse(cfg: RunConfig) -> int:
    ctx = cfg.context()
    _check_prime(ctx)
    G = exchange_quiver(ctx)
    if cfg.fmt == "json":
        _emit(cfg, export.dumps(export.torsion_poset_json(ctx, G)))
    elif cfg.fmt in (None, "dot"):
        _emit(cfg, export.exchange_quiver_dot(G))
    else:
        raise InvalidInput("hasse supports --format dot or json")
    return OK


def cmd_gfan(cfg: RunConfig, coords: str | None = None) -> int:
    ctx = cfg.context()
    fan = chamber_fan(ctx)
    if cfg.fmt == "csv":
        _emit(cfg, export.fan_csv(fan))
    elif cfg.fmt in (None, "json"):
        _emit(cfg, export.dumps(export.fan_json(fan)))
    else:
        raise InvalidInput("gfan supports --format json or csv")
    if coords:
        if ctx.n != 2:
            raise InvalidInput("--coords needs a rank-2 quiver")
        with open(coords, "w") as fh:
            fh.write(export.fan_coordinates_csv(fan))
    return OK


def cmd_info(cfg: RunConfig, word: str) -> int:
    ctx = cfg.context()
    _check_prime(ctx)
    try:
        w = ctx.element(parse_word(word))
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc
    I = ctx.ideal_of(w)
    ann = w.inverse() * ctx.W.longest_element()
    g = g_matrix(ctx, w)
    info = {
        "quiver": ctx.quiver.type_tag,
        "reduced_word": list(w.word),
        "length": w.length,
        "dim": I.dim,
        "dim_vector": list(I.dim_vector),
        "projectors": sorted(ctx.projectors(w)),
        "g_matrix": [list(r) for r in g],
        "annihilator_word": list(ann.word),
    }
    if cfg.fmt == "json":
        _emit(cfg, export.dumps(info))
    else:
        lines = [
            f"quiver: {info['quiver']}",
            f"reduced word: {_fmt_word(w)}",
            f"length: {w.length}",
            f"dim I: {I.dim}",
            f"dimension vector: {tuple(I.dim_vector)}",
            f"projectors: {{{', '.join(map(str, info['projectors']))}}}",
            f"g-matrix: {_matrix_str(g)}",
            f"annihilator word: {_fmt_word(ann)}",
        ]
        _emit(cfg, "\n".join(lines) + "\n")
    return OK


# -- argument parsing -----------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--quiver", "-q", required=True,
                   help="type code (A3, D4, E6), JSON edge list, or path to one")
    p.add_argument("--field", choices=("rational", "prime"), default="rational")
    p.add_argument("--prime", type=int, default=None,
                   help=f"characteristic for --field prime (default {DEFAULT_PRIME})")
    p.add_argument("--jobs", "-j", type=int, default=1)
    p.add_argument("--format", "-f", dest="fmt", choices=("dot", "json", "csv", "text"))
    p.add_argument("--level", choices=("fast", "exhaustive"), default="fast")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", "-o", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="preproj",
                                     description="Preprojective algebras, tau-tilting "
                                                 "and Weyl groups of Dynkin quivers.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in [("counts", "count support tau-tilting modules"),
                       ("verify", "run the invariant suites"),
                       ("hasse", "export the exchange quiver"),
                       ("gfan", "export the g-vector fan"),
                       ("info", "describe one Weyl group element")]:
        p = sub.add_parser(name, help=text)
        _common(p)
        if name == "gfan":
            p.add_argument("--coords", default=None,
                           help="also write rank-2 plotting coordinates to this file")
        if name == "info":
            p.add_argument("word", nargs="?", default="",
                           help="generator indices, e.g. '1 2 1' or '1,2,1'")
    return parser


def config_from(args: argparse.Namespace) -> RunConfig:
    prime = None
    if args.field == "prime":
        prime = args.prime if args.prime is not None else DEFAULT_PRIME
    elif args.prime is not None:
        raise InvalidInput("--prime requires --field prime")
    return RunConfig(args.quiver, prime, args.jobs, None if args.fmt == "text" else args.fmt,
                     args.level, args.seed, args.out)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else INVALID
    try:
        cfg = config_from(args)
        if args.command == "counts":
            return cmd_counts(cfg)
        if args.command == "verify":
            return cmd_verify(cfg)
        if args.command == "hasse":
            return cmd_hasse(cfg)
        if args.command == "gfan":
            return cmd_gfan(cfg, args.coords)
        return cmd_info(cfg, args.word)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
