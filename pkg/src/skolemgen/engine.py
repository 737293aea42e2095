"""Generating-tree traversal: counting open Skolem sequences, exhaustive
enumeration of Skolem sequences, and feasibility pruning.

The tree rooted at the empty state (see ``core``) has the open Skolem
sequences of order n as its level-n nodes.  Storing whole levels is what
kills naive traversals: level counts grow by roughly x3.7 per level, so a
level-storing search runs out of memory long before it runs out of time.
Everything here therefore walks depth first by default, with memory
proportional to the depth; a level-synchronised mode over compressed states
exists for cross-checks at small orders.

For counting, a node is carried in compressed form.  Open values are pinned
to their positions (an open arc at position i of a length-n state carries
value n - i, 0-based), so the multiset of open positions plus the set of
used lengths determines every child and the "tick all open values up" step
of the growth rules becomes implicit.  Full entry sequences are materialised
only when enumerating.

Pruning against a target order N cuts subtrees that cannot reach a Skolem
leaf: length/parity bookkeeping, used lengths within 1..N, and a greedy
matching of open values into the unused lengths.  Each test is individually
sound, so pruned and unpruned enumeration emit the same sequences.
"""

from __future__ import annotations

import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .core import OpenState, SkolemSequence, children

PROGRESS_INTERVAL = 10_000_000  # visited-node liveness signal, stderr


class ResourceExhaustedError(RuntimeError):
    """Counting ran out of memory; carries the completed per-level counts."""

    def __init__(self, partial_counts: list[int]):
        super().__init__(
            f"out of memory after {len(partial_counts)} completed level(s)"
        )
        self.partial_counts = partial_counts


@dataclass
class EnumerationReport:
    """Outcome of one tree traversal towards a target order."""

    target_order: int
    per_level_counts: list[int] = field(default_factory=list)
    skolem_count: int = 0
    pruned_nodes: int = 0
    elapsed: float = 0.0  # seconds

    def summary(self) -> str:
        """Human-readable run report, including the classical-search comparison."""
        n2 = 2 * self.target_order
        searched = self.per_level_counts[-1] if self.per_level_counts else 0
        lines = [
            f"target order {self.target_order}: {self.skolem_count} Skolem sequence(s)",
            "nodes visited per level: "
            + ",".join(str(c) for c in self.per_level_counts),
            f"open states searched at level {n2}: {searched}",
            f"classical permutation search space {n2}! = {math.factorial(n2)}",
            f"pruned nodes: {self.pruned_nodes}",
            f"elapsed: {self.elapsed:.3f} s",
        ]
        return "\n".join(lines)


def _require_order(n: int) -> None:
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")


# ---------------------------------------------------------------------------
# counting

def _iter_counts_dfs(max_order: int) -> Iterator[int]:
    """Level counts by repeated bounded-depth DFS over compressed states.

    Each level is completed before the next begins (so partial results are
    well defined) at the price of re-walking shallower levels; the growth
    factor makes that overhead a constant ~1.4x.
    """
    open_pos: list[int] = []
    used: set[int] = set()
    progress = [0]

    def count_at(limit: int) -> int:
        def walk(n: int) -> int:
            t = progress[0] + 1
            progress[0] = t
            if not t % PROGRESS_INTERVAL:
                print(f"skolemgen: visited {t} nodes", file=sys.stderr)
            if n == limit:
                return 1
            total = 0
            open_pos.append(n)
            total += walk(n + 1)
            open_pos.pop()
            for idx in range(len(open_pos) - 1, -1, -1):
                pos = open_pos[idx]
                j = n - pos
                if j not in used:
                    del open_pos[idx]
                    used.add(j)
                    total += walk(n + 1)
                    used.discard(j)
                    open_pos.insert(idx, pos)
            return total

        return walk(0)

    for limit in range(1, max_order + 1):
        yield count_at(limit)


def _iter_counts_levels(max_order: int) -> Iterator[int]:
    """Level counts by a level-synchronised sweep over compressed states.

    Keeps one level of (open values, used lengths) keys with multiplicities.
    Cheap for small orders, but key counts still explode past level ~14;
    this mode exists to cross-check the depth-first counts.
    """
    level: dict[tuple[tuple[int, ...], frozenset[int]], int] = {
        ((), frozenset()): 1
    }
    for _ in range(max_order):
        nxt: dict[tuple[tuple[int, ...], frozenset[int]], int] = {}
        get = nxt.get
        for (stars, used), mult in level.items():
            key = ((1,) + tuple(k + 1 for k in stars), used)
            nxt[key] = get(key, 0) + mult
            for j in stars:
                if j not in used:
                    key = (tuple(k + 1 for k in stars if k != j), used | {j})
                    nxt[key] = get(key, 0) + mult
        level = nxt
        yield sum(level.values())


def iter_open_counts(max_order: int, *, method: str = "dfs") -> Iterator[int]:
    """Yield the number of open Skolem sequences of order 1..max_order."""
    _require_order(max_order)
    if method == "dfs":
        yield from _iter_counts_dfs(max_order)
    elif method == "levels":
        yield from _iter_counts_levels(max_order)
    else:
        raise ValueError(f"unknown counting method {method!r}")


def count_open_levels(max_order: int, *, method: str = "dfs") -> list[int]:
    """Exact count of open Skolem sequences per order, 1..max_order.

    On memory exhaustion raises ResourceExhaustedError carrying the counts of
    every level that did complete.
    """
    counts: list[int] = []
    try:
        for c in iter_open_counts(max_order, method=method):
            counts.append(c)
    except MemoryError as exc:
        raise ResourceExhaustedError(counts) from exc
    return counts


def iter_level_states(max_order: int) -> Iterator[list[OpenState]]:
    """Full states level by level, in canonical order. Test-scale only:
    memory grows with the level size."""
    _require_order(max_order)
    level = [OpenState()]
    for _ in range(max_order):
        level = [child for state in level for child in children(state)]
        yield level


# ---------------------------------------------------------------------------
# pruning

def prune_feasible(state: OpenState, target_order: int) -> bool:
    """Sound filter: False only if no descendant of ``state`` at length
    2*target_order can be a Skolem sequence of that order.

    Tests, each individually sound:
      * room and parity: closing the p open arcs and pairing up whatever
        positions remain needs 2N - n - p >= 0 and even;
      * every used length must lie in 1..N;
      * no open value may exceed N;
      * the open values, which must eventually close at distinct unused
        lengths no smaller than their current value, must match injectively
        into {1..N} minus the used set (greedy largest-to-largest check).
    """
    _require_order(target_order)
    n = state.order
    stars = sorted(state.open_values(), reverse=True)
    p = len(stars)
    rem = 2 * target_order - n - p
    if rem < 0 or rem % 2:
        return False
    used = state.used
    if used and max(used) > target_order:
        return False
    if stars and stars[0] > target_order:
        return False
    avail = target_order
    for j in stars:
        while avail and avail in used:
            avail -= 1
        if avail < j:
            return False
        avail -= 1
    return True


# ---------------------------------------------------------------------------
# enumeration

def _leaf_walk(
    entries: list[int],
    target_order: int,
    prune: bool,
    visits: list[int],
    pruned_cell: list[int],
    progress_cell: list[int],
) -> Iterator[tuple[int, ...]]:
    """Depth-first walk from ``entries`` (0 marks an open arc) to length
    2*target_order, yielding Skolem leaves in canonical child order.

    ``visits[n]`` counts nodes entered at length n, including nodes that the
    feasibility filter then refuses to expand (those also bump
    ``pruned_cell[0]``).  The walk mutates its state in place and undoes
    every step, so a single entries/positions/used triple serves the whole
    traversal.
    """
    two_n = 2 * target_order
    target = target_order
    open_pos = [i for i, v in enumerate(entries) if v == 0]
    used = {v for v in entries if v}

    def walk(n: int, used_max: int) -> Iterator[tuple[int, ...]]:
        visits[n] += 1
        t = progress_cell[0] + 1
        progress_cell[0] = t
        if not t % PROGRESS_INTERVAL:
            print(
                f"skolemgen: visited {t} nodes (currently at level {n} of {two_n})",
                file=sys.stderr,
            )
        if n == two_n:
            # p = 2N - 2|used| here, so |used| = N already implies no open
            # arcs remain; with max = N the used lengths are exactly 1..N.
            if len(used) == target and used_max == target:
                yield tuple(entries)
            return
        if prune:
            p = len(open_pos)
            rem = two_n - n - p
            if rem < 0 or rem & 1 or used_max > target:
                pruned_cell[0] += 1
                return
            if p and n - open_pos[0] > target:
                pruned_cell[0] += 1
                return
            avail = target
            for pos in open_pos:
                j = n - pos
                while avail and avail in used:
                    avail -= 1
                if avail < j:
                    pruned_cell[0] += 1
                    return
                avail -= 1
        # opener child first,
        entries.append(0)
        open_pos.append(n)
        yield from walk(n + 1, used_max)
        open_pos.pop()
        entries.pop()
        # then closers by increasing open value (decreasing position).
        for idx in range(len(open_pos) - 1, -1, -1):
            pos = open_pos[idx]
            j = n - pos
            if j in used:
                continue
            del open_pos[idx]
            entries[pos] = j
            entries.append(j)
            used.add(j)
            yield from walk(n + 1, used_max if used_max >= j else j)
            used.discard(j)
            entries.pop()
            entries[pos] = 0
            open_pos.insert(idx, pos)

    yield from walk(len(entries), max(used, default=0))


def enumerate_skolem(order: int, prune: bool = True) -> Iterator[SkolemSequence]:
    """Stream every Skolem sequence of the given order exactly once, in
    canonical child order.  Pruning never changes the emitted set."""
    _require_order(order)
    visits = [0] * (2 * order + 1)
    for vals in _leaf_walk([], order, prune, visits, [0], [0]):
        yield SkolemSequence(vals)


def dfs_enumerate(
    target_order: int,
    prune: bool = True,
    sink: Callable[[SkolemSequence], None] | None = None,
) -> EnumerationReport:
    """Walk the tree to depth 2*target_order, deliver each Skolem leaf to
    ``sink``, and report visited/pruned node counts per level.

    Sink failures abort the traversal and propagate to the caller.
    """
    _require_order(target_order)
    visits = [0] * (2 * target_order + 1)
    pruned = [0]
    count = 0
    t0 = time.perf_counter()
    for vals in _leaf_walk([], target_order, prune, visits, pruned, [0]):
        seq = SkolemSequence(vals)
        count += 1
        if sink is not None:
            sink(seq)
    return EnumerationReport(
        target_order=target_order,
        per_level_counts=visits[1:],
        skolem_count=count,
        pruned_nodes=pruned[0],
        elapsed=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# parallel traversal
#
# Subtrees rooted at a fixed split depth are independent, so workers share
# nothing and per-level counts merge by elementwise addition: results are
# identical for any worker count and any scheduling.

def _next_compressed_level(
    level: dict[tuple[tuple[int, ...], frozenset[int]], int],
) -> dict[tuple[tuple[int, ...], frozenset[int]], int]:
    nxt: dict[tuple[tuple[int, ...], frozenset[int]], int] = {}
    get = nxt.get
    for (stars, used), mult in level.items():
        key = ((1,) + tuple(k + 1 for k in stars), used)
        nxt[key] = get(key, 0) + mult
        for j in stars:
            if j not in used:
                key = (tuple(k + 1 for k in stars if k != j), used | {j})
                nxt[key] = get(key, 0) + mult
    return nxt


def _count_subtree(job: tuple[tuple[int, ...], tuple[int, ...], int, int, int]) -> list[int]:
    """Count nodes per level below one compressed seed; scaled by multiplicity."""
    stars, used_t, mult, depth, max_order = job
    open_pos = sorted(depth - k for k in stars)
    used = set(used_t)
    counts = [0] * (max_order - depth)

    def walk(n: int) -> None:
        if n > depth:
            counts[n - depth - 1] += 1
            if n == max_order:
                return
        open_pos.append(n)
        walk(n + 1)
        open_pos.pop()
        for idx in range(len(open_pos) - 1, -1, -1):
            pos = open_pos[idx]
            j = n - pos
            if j not in used:
                del open_pos[idx]
                used.add(j)
                walk(n + 1)
                used.discard(j)
                open_pos.insert(idx, pos)

    walk(depth)
    return [c * mult for c in counts]


def parallel_count(max_order: int, workers: int = 1) -> list[int]:
    """count_open_levels with the tree split across worker processes.

    The split sits at the first level holding at least 4x workers nodes;
    output is identical to the sequential count for any worker count.
    """
    _require_order(max_order)
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if workers == 1:
        return count_open_levels(max_order)

    threshold = 4 * workers
    prefix: list[int] = []
    level: dict[tuple[tuple[int, ...], frozenset[int]], int] = {
        ((), frozenset()): 1
    }
    depth = 0
    while depth < max_order:
        level = _next_compressed_level(level)
        depth += 1
        prefix.append(sum(level.values()))
        if prefix[-1] >= threshold and depth < max_order:
            break
    if depth == max_order:
        return prefix

    jobs = [
        (stars, tuple(sorted(used)), mult, depth, max_order)
        for (stars, used), mult in sorted(
            level.items(), key=lambda kv: (kv[0][0], tuple(sorted(kv[0][1])))
        )
    ]
    tail = [0] * (max_order - depth)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for res in pool.map(_count_subtree, jobs):
            tail = [a + b for a, b in zip(tail, res)]
    return prefix + tail


def _int_children(ent: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Children of an integer-encoded state (0 = open), canonical order."""
    n = len(ent)
    out = [ent + (0,)]
    used = {v for v in ent if v}
    for p in range(n - 1, -1, -1):
        if ent[p]:
            continue
        j = n - p
        if j in used:
            continue
        out.append(ent[:p] + (j,) + ent[p + 1 :] + (j,))
    return out


def _enumerate_subtree(job: tuple[tuple[int, ...], int, bool]) -> list[tuple[int, ...]]:
    ent, target, prune = job
    visits = [0] * (2 * target + 1)
    return list(_leaf_walk(list(ent), target, prune, visits, [0], [0]))


def parallel_enumerate(
    order: int, prune: bool = True, workers: int = 1
) -> Iterator[SkolemSequence]:
    """enumerate_skolem with subtrees distributed across worker processes.

    The emitted multiset is identical to the sequential walk; results are
    yielded subtree by subtree in canonical seed order.
    """
    _require_order(order)
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if workers == 1:
        yield from enumerate_skolem(order, prune)
        return

    threshold = 4 * workers
    level: list[tuple[int, ...]] = [()]
    depth = 0
    while depth < 2 * order and len(level) < threshold:
        level = [child for ent in level for child in _int_children(ent)]
        depth += 1
    if depth >= 2 * order:
        yield from enumerate_skolem(order, prune)
        return

    jobs = [(ent, order, prune) for ent in level]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for leaves in pool.map(_enumerate_subtree, jobs):
            for vals in leaves:
                yield SkolemSequence(vals)
