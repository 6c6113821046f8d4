"""Generators of DPS_n, submonoid closure and exhaustive rank search."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, List, Optional, Sequence

from . import kernels
from .core_maps import PartialInjection, compose, identity
from .errors import DegreeMismatch, LimitExceeded, Unsupported

__all__ = [
    "standard_generators",
    "closure",
    "find_generating_set",
    "GeneratingSetResult",
    "pruning_categories",
    "DEFAULT_SUBSET_BUDGET",
]

DEFAULT_SUBSET_BUDGET = 5_000_000


def standard_generators(n: int) -> List[PartialInjection]:
    """``[a1, a2, b1, b2, c]`` for ``n >= 4``; ``[a1, b2, c]`` for ``n == 3``.

    ``a1`` cycles the leaves ``1 -> 2 -> ... -> n-1 -> 1``, ``a2`` swaps
    leaves 1 and 2, ``b1`` is the partial identity missing ``n-1``, ``b2``
    the partial identity missing the centre and ``c`` swaps 0 and 1 on
    ``{0, 1}``.
    """
    if n < 3:
        raise Unsupported("standard generators are defined for n >= 3")
    a1 = PartialInjection([0] + list(range(2, n)) + [1])
    a2 = PartialInjection([0, 2, 1] + list(range(3, n)))
    b1 = PartialInjection(list(range(n - 1)) + [None])
    b2 = PartialInjection([None] + list(range(1, n)))
    c = PartialInjection([1, 0] + [None] * (n - 2))
    if n == 3:
        return [a1, b2, c]
    return [a1, a2, b1, b2, c]


def closure(n: int, gens: Iterable[PartialInjection], limit: int = 10_000_000) -> set:
    """The submonoid of partial injections of degree ``n`` generated by ``gens``."""
    gens = list(gens)
    for g in gens:
        if g.degree != n:
            raise DegreeMismatch(f"generator of degree {g.degree}, expected {n}")
    start = identity(n)
    seen = {start}
    queue = [start]
    for x in queue:
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
                if len(seen) > limit:
                    raise LimitExceeded(f"closure exceeds {limit} elements", len(seen))
    return seen


@dataclass
class GeneratingSetResult:
    witness: Optional[List[PartialInjection]]
    examined: int
    pruned: bool

    @property
    def found(self) -> bool:
        return self.witness is not None


def pruning_categories(n: int, elements: Sequence[PartialInjection]) -> dict:
    """Element indices grouped by the roles any generating set must fill.

    For ``n >= 4``: units, centre-fixing maps of rank ``n-1``, the rank-2
    maps swapping the centre with a leaf, and leaf-only maps of rank ``n-1``.
    For ``n == 3`` the only requirement is the non-identity unit.
    """
    cats: dict = {"units": [], "fixed_corank1": [], "swap": [], "leaf_corank1": []}
    for i, f in enumerate(elements):
        r = f.rank
        z = f.images[0]
        if r == n:
            if f != identity(n):
                cats["units"].append(i)
        elif r == n - 1 and z == 0:
            cats["fixed_corank1"].append(i)
        elif r == n - 1 and z is None and 0 not in f.image():
            cats["leaf_corank1"].append(i)
        if r == 2 and z is not None and z != 0 and 0 in f.image():
            cats["swap"].append(i)
    return cats


def _pruned_candidates(n, elements, k):
    cats = pruning_categories(n, elements)
    size = len(elements)
    if n == 3:
        required = [(cats["units"], 1)]
    else:
        required = [
            (cats["units"], 2),
            (cats["fixed_corank1"], 1),
            (cats["swap"], 1),
            (cats["leaf_corank1"], 1),
        ]
    need = sum(c for _, c in required)
    if k < need:
        return
    seen = set()

    def rec(i, chosen):
        if i == len(required):
            rest_pool = [x for x in range(size) if x not in chosen]
            for extra in combinations(rest_pool, k - need):
                s = frozenset(chosen) | frozenset(extra)
                if s not in seen:
                    seen.add(s)
                    yield tuple(sorted(s))
            return
        pool, cnt = required[i]
        for pick in combinations(pool, cnt):
            yield from rec(i + 1, chosen + list(pick))

    yield from rec(0, [])


def _balanced_ranges(size, k, parts):
    weights = [comb(size - 1 - i, k - 1) for i in range(size)]
    total = sum(weights)
    ranges, lo, acc = [], 0, 0
    for i, w in enumerate(weights):
        acc += w
        if acc >= total * (len(ranges) + 1) / parts and len(ranges) < parts - 1:
            ranges.append((lo, i + 1))
            lo = i + 1
    ranges.append((lo, size))
    return [r for r in ranges if r[0] < r[1]]


def _search_chunk(args):
    table, ident, pool, k, target, lo, hi = args
    return kernels.search_subsets(table, ident, pool, k, target, lo, hi)


def find_generating_set(
    n: int,
    k: int,
    prune: bool = False,
    jobs: int = 1,
    budget: int = DEFAULT_SUBSET_BUDGET,
) -> GeneratingSetResult:
    """Search for ``k`` elements generating all of DPS_n.

    Unpruned, every ``k``-subset is tried in lexicographic order and the
    answer is a proof either way. Pruned, only subsets meeting the
    necessary conditions of :func:`pruning_categories` are tried, so an
    absent result there relies on those conditions being necessary.
    """
    from .monoid import enumerate_dps
    from .tables import MultiplicationTable

    elements = enumerate_dps(n)
    mt = MultiplicationTable(elements)
    target = len(elements)

    if prune and n >= 3:
        examined = 0
        rows = mt.table
        for subset in _pruned_candidates(n, elements, k):
            examined += 1
            if kernels.closure_size(rows, mt.identity, list(subset)) == target:
                return GeneratingSetResult([elements[i] for i in subset], examined, True)
        return GeneratingSetResult(None, examined, True)

    space = comb(target, k)
    if space > budget:
        raise LimitExceeded(f"{space} subsets exceed the budget of {budget}", space)
    pool = list(range(target))
    if jobs <= 1:
        witness, examined = kernels.search_subsets(mt.table, mt.identity, pool, k, target)
    else:
        ranges = _balanced_ranges(target, k, jobs * 4)
        tasks = [(mt.table, mt.identity, pool, k, target, lo, hi) for lo, hi in ranges]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_search_chunk, tasks))
        witness, examined = None, 0
        for w, e in results:
            examined += e
            if w is not None and witness is None:
                witness = w
    found = None if witness is None else [elements[i] for i in witness]
    return GeneratingSetResult(found, examined, False)
