"""Named invariant suites, run exhaustively or on a seeded sample."""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .context import Context
from .errors import GMismatch
from .gfan import chamber_fan, chamber_report, cone_of, g_matrix, pairing, sign_vector
from .pairs import annihilator_matches, check_pair, dual_dim_check, pair_data
from .tilting import order_isomorphism_holds
from .weyl import WeylElement

EXHAUSTIVE_LIMIT = 1152
SAMPLE_SIZE = 200
DEFAULT_SEED = 20240601
MAX_WORDS = 4

SUITES = ("braid-invariance", "tau-rigidity", "order-isomorphism", "g-agreement",
          "chamber-disjointness", "annihilator", "dual-dim")


@dataclass
class SuiteResult:
    name: str
    checked: int
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "failures": self.failures}


# -- per-item checks (module level so they pickle) ------------------------------------


def _braid(ctx: Context, w: WeylElement) -> bool:
    I = ctx.ideal_of(w)
    words = itertools.islice(ctx.W.reduced_words(w), MAX_WORDS)
    return all(ctx.ideal_of_word(word) == I for word in words)


def _tau(ctx: Context, w: WeylElement) -> bool:
    return not check_pair(ctx, pair_data(ctx, w))


def _order(ctx: Context, pair: tuple[WeylElement, WeylElement]) -> bool:
    return order_isomorphism_holds(ctx, *pair)


def _g(ctx: Context, w: WeylElement) -> bool:
    try:
        g_matrix(ctx, w)
    except GMismatch:
        return False
    return True


CHECKS = {
    "braid-invariance": _braid,
    "tau-rigidity": _tau,
    "order-isomorphism": _order,
    "g-agreement": _g,
    "annihilator": annihilator_matches,
    "dual-dim": dual_dim_check,
}


def _label(item) -> str:
    if isinstance(item, tuple):
        return "(" + ", ".join(str(x) for x in item) + ")"
    return str(item)


def _run_chunk(ctx: Context, name: str, items: list) -> list[str]:
    check = CHECKS[name]
    return [_label(x) for x in items if not check(ctx, x)]


def _chunks(items: list, k: int) -> list[list]:
    return [items[j::k] for j in range(k)] if items else []


# -- sampling -------------------------------------------------------------------------


@dataclass
class Plan:
    elements: list[WeylElement]
    pairs: list[tuple[WeylElement, WeylElement]]
    exhaustive: bool


def plan(ctx: Context, level: str, seed: int = DEFAULT_SEED) -> Plan:
    if level == "exhaustive":
        if ctx.W.order() > EXHAUSTIVE_LIMIT:
            raise ValueError(f"exhaustive level needs |W| <= {EXHAUSTIVE_LIMIT}, "
                             f"{ctx.quiver.type_tag} has {ctx.W.order()}")
        elems = ctx.W.enumerate()
        return Plan(elems, list(itertools.product(elems, elems)), True)
    if level != "fast":
        raise ValueError(f"unknown level {level!r}")
    rng = random.Random(seed)
    if ctx.W.order() <= SAMPLE_SIZE:
        elems = ctx.W.enumerate()
    else:
        elems = [ctx.W.random_element(rng) for _ in range(SAMPLE_SIZE)]
    pairs = [(ctx.W.random_element(rng), ctx.W.random_element(rng)) for _ in range(SAMPLE_SIZE)]
    return Plan(elems, pairs, False)


def _chambers(ctx: Context, p: Plan) -> SuiteResult:
    if p.exhaustive:
        rep = chamber_report(chamber_fan(ctx))
        fails = [] if rep.ok else [f"{rep}"]
        return SuiteResult("chamber-disjointness", rep.count, fails)
    roots = ctx.W.roots()
    signs: dict[tuple, WeylElement] = {}
    fails = []
    for w in dict.fromkeys(p.elements):
        C = cone_of(w)
        y = C.witness
        if any(pairing(y, x) == 0 for x in roots.roots):
            fails.append(f"{w}: witness on a wall")
        s = sign_vector(y, roots.positives)
        if s in signs and signs[s] != w:
            fails.append(f"{w} and {signs[s]} share a sign vector")
        signs[s] = w
    return SuiteResult("chamber-disjointness", len(signs), fails)


def run_suite(ctx: Context, name: str, p: Plan, jobs: int = 1) -> SuiteResult:
    if name == "chamber-disjointness":
        return _chambers(ctx, p)
    items = p.pairs if name == "order-isomorphism" else p.elements
    if jobs > 1 and len(items) > jobs:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_run_chunk, itertools.repeat(ctx), itertools.repeat(name),
                             _chunks(items, jobs))
            fails = [f for part in parts for f in part]
    else:
        fails = _run_chunk(ctx, name, items)
    return SuiteResult(name, len(items), fails)


def run_all(ctx: Context, level: str = "fast", seed: int = DEFAULT_SEED, jobs: int = 1,
            suites: tuple[str, ...] = SUITES) -> list[SuiteResult]:
    p = plan(ctx, level, seed)
    return [run_suite(ctx, name, p, jobs) for name in suites]
