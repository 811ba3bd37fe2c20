"""Anti-forcing and forcing numbers via two independent exact routes.

Route one (af_subset_search) is the definition itself: iterative
deepening over edge subsets, testing whether deletion leaves a unique
perfect matching. Route two (af_via_matchings) minimizes, over perfect
matchings M, the smallest set of non-M edges meeting every M-alternating
cycle; forcing numbers use the matched-edge side of the same cycles.
The two routes share no search code, so their agreement is a meaningful
cross-check.

Convention: a graph with no perfect matching gets af = |E| with an empty
witness, tagged method "convention_no_pm".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Sequence

from .budget import Budget, BudgetExceededError
from .graph import Edge, Graph, edge
from .matching import (
    Matching,
    alternating_cycles,
    count_pms_excluding,
    enumerate_perfect_matchings,
)

Method = Literal["subset_search", "via_matchings", "convention_no_pm"]


class NoPerfectMatchingError(Exception):
    """Raised by operations that require at least one perfect matching."""


@dataclass(frozen=True)
class AntiForcingResult:
    value: int
    witness: frozenset[Edge]
    method: Method

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError("anti-forcing number is non-negative")
        if self.method != "convention_no_pm" and len(self.witness) != self.value:
            raise ValueError("witness size must equal the reported value")


@dataclass(frozen=True)
class MatchingAnalysis:
    matching: Matching
    af_of_m: int
    f_of_m: int


def is_anti_forcing_set(g: Graph, s: frozenset[Edge] | set[Edge]) -> bool:
    """True iff g minus s has exactly one perfect matching."""
    norm = frozenset(edge(u, v) for u, v in s)
    extra = norm - g.edges
    if extra:
        raise ValueError(f"edges not in graph: {sorted(extra)}")
    return count_pms_excluding(g, norm, cap=2) == 1


def af_subset_search(g: Graph, budget: Budget | None = None) -> AntiForcingResult:
    """Ground-truth oracle: deepen over subset sizes 0, 1, 2, ...

    Subsets of each size are scanned in lexicographic order over the
    sorted edge list, so the first witness found is the smallest one.
    Raises BudgetExceededError carrying the verified lower bound when
    the scan cannot finish.
    """
    if g.n % 2 or (g.n > 0 and count_pms_excluding(g, frozenset(), cap=1) == 0):
        return AntiForcingResult(len(g.edges), frozenset(), "convention_no_pm")
    edges = g.sorted_edges
    for size in range(len(edges) + 1):
        for subset in combinations(edges, size):
            if budget is not None:
                try:
                    budget.tick()
                except BudgetExceededError as exc:
                    raise BudgetExceededError(
                        str(exc), lower=size, nodes_used=budget.nodes
                    ) from None
            if count_pms_excluding(g, frozenset(subset), cap=2) == 1:
                return AntiForcingResult(size, frozenset(subset), "subset_search")
    raise AssertionError("a graph with a perfect matching has an anti-forcing set")


# Exact minimum hitting set over bitmask-encoded sets. Elements are edge
# ranks in a sorted universe, so ascending bit index is ascending edge
# order and the lexicographic refinement below is straightforward.


def _drop_dominated(masks: list[int]) -> list[int]:
    masks = sorted(set(masks), key=lambda s: (s.bit_count(), s))
    kept: list[int] = []
    for s in masks:
        if not any(s & t == t for t in kept):
            kept.append(s)
    return kept


def _packing_bound(masks: Sequence[int]) -> int:
    taken = 0
    count = 0
    for s in sorted(masks, key=lambda x: x.bit_count()):
        if not s & taken:
            count += 1
            taken |= s
    return count


def _greedy_cover_size(masks: Sequence[int], nbits: int) -> int:
    remaining = list(masks)
    size = 0
    while remaining:
        freq = [0] * nbits
        for s in remaining:
            t = s
            while t:
                low = t & -t
                freq[low.bit_length() - 1] += 1
                t ^= low
        e = max(range(nbits), key=lambda i: freq[i])
        remaining = [s for s in remaining if not (s >> e) & 1]
        size += 1
    return size


def _min_cover_value(masks: Sequence[int], nbits: int, budget: Budget | None) -> int:
    """Exact minimum hitting set size, branch and bound."""
    masks = _drop_dominated(list(masks))
    if not masks:
        return 0
    best = _greedy_cover_size(masks, nbits)

    def bb(remaining: list[int], depth: int) -> None:
        nonlocal best
        if budget is not None:
            budget.tick()
        if not remaining:
            if depth < best:
                best = depth
            return
        if depth + _packing_bound(remaining) >= best:
            return
        pivot = min(remaining, key=lambda s: s.bit_count())
        t = pivot
        while t:
            low = t & -t
            e = low.bit_length() - 1
            bb([s for s in remaining if not (s >> e) & 1], depth + 1)
            t ^= low
    bb(masks, 0)
    return best


def _exists_cover(masks: list[int], k: int, budget: Budget | None) -> bool:
    if not masks:
        return True
    if k <= 0:
        return False
    if budget is not None:
        budget.tick()
    if _packing_bound(masks) > k:
        return False
    pivot = min(masks, key=lambda s: s.bit_count())
    t = pivot
    while t:
        low = t & -t
        e = low.bit_length() - 1
        if _exists_cover([s for s in masks if not (s >> e) & 1], k - 1, budget):
            return True
        t ^= low
    return False


def _lex_min_cover(
    masks: Sequence[int], value: int, nbits: int, budget: Budget | None
) -> list[int]:
    """Lexicographically smallest hitting set of exactly the optimal size."""
    masks = _drop_dominated(list(masks))
    chosen: list[int] = []
    floor = -1
    remaining = masks
    while remaining:
        found = False
        for e in range(floor + 1, nbits):
            rest = [s for s in remaining if not (s >> e) & 1]
            above = ~((1 << (e + 1)) - 1)
            filtered = [s & above for s in rest]
            if any(f == 0 for f in filtered):
                continue
            if _exists_cover(filtered, value - len(chosen) - 1, budget):
                chosen.append(e)
                floor = e
                remaining = rest
                found = True
                break
        if not found:
            raise AssertionError("no completion at the proven optimum")
    if len(chosen) != value:
        raise AssertionError("optimum not attained by lexicographic refinement")
    return chosen


def _min_hitting_set(
    sets: Sequence[frozenset[Edge]], budget: Budget | None
) -> tuple[int, frozenset[Edge]]:
    if not sets:
        return 0, frozenset()
    universe = sorted(set().union(*sets))
    rank = {e: i for i, e in enumerate(universe)}
    masks = [sum(1 << rank[e] for e in s) for s in sets]
    value = _min_cover_value(masks, len(universe), budget)
    picks = _lex_min_cover(masks, value, len(universe), budget)
    return value, frozenset(universe[i] for i in picks)


def _hitting_value_only(sets: Sequence[frozenset[Edge]], budget: Budget | None) -> int:
    if not sets:
        return 0
    universe = sorted(set().union(*sets))
    rank = {e: i for i, e in enumerate(universe)}
    masks = [sum(1 << rank[e] for e in s) for s in sets]
    return _min_cover_value(masks, len(universe), budget)


def _analyze(g: Graph, m: Matching, budget: Budget | None) -> MatchingAnalysis:
    cycles = alternating_cycles(g, m, budget)
    af = _hitting_value_only([c.free for c in cycles], budget)
    f = _hitting_value_only([c.matched for c in cycles], budget)
    return MatchingAnalysis(frozenset(m), af, f)


def af_of_matching(g: Graph, m: Matching, budget: Budget | None = None) -> MatchingAnalysis:
    """Fewest non-m edges whose removal leaves m as the unique PM."""
    return _analyze(g, m, budget)


def forcing_of_matching(g: Graph, m: Matching, budget: Budget | None = None) -> MatchingAnalysis:
    """Smallest subset of m contained in no other perfect matching."""
    return _analyze(g, m, budget)


def af_via_matchings(g: Graph, budget: Budget | None = None) -> AntiForcingResult:
    """Minimum over perfect matchings of the free-edge hitting number.

    The reported witness is the lexicographically smallest one among all
    optimal matchings, so repeated runs agree byte for byte.
    """
    pms = enumerate_perfect_matchings(g, budget=budget)
    if not pms:
        return AntiForcingResult(len(g.edges), frozenset(), "convention_no_pm")
    values = [
        _hitting_value_only(
            [c.free for c in alternating_cycles(g, m, budget)], budget
        )
        for m in pms
    ]
    best = min(values)
    witness: tuple[Edge, ...] | None = None
    for m, value in zip(pms, values):
        if value != best:
            continue
        free_sets = [c.free for c in alternating_cycles(g, m, budget)]
        _, w = _min_hitting_set(free_sets, budget)
        key = tuple(sorted(w))
        if witness is None or key < witness:
            witness = key
    assert witness is not None
    return AntiForcingResult(best, frozenset(witness), "via_matchings")


def forcing_number(g: Graph, budget: Budget | None = None) -> int:
    """Minimum forcing number over all perfect matchings."""
    pms = enumerate_perfect_matchings(g, budget=budget)
    if not pms:
        raise NoPerfectMatchingError("forcing number needs a perfect matching")
    return min(
        _hitting_value_only(
            [c.matched for c in alternating_cycles(g, m, budget)], budget
        )
        for m in pms
    )
