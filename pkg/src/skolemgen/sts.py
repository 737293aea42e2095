"""Steiner triple systems of order 6n+1 from Skolem sequences.

A Skolem sequence of order n pins down, for each length k, two positions
i < j with j - i = k.  Each such pair gives a base block (x, x+k, x+j+n);
developing the n base blocks additively mod v = 6n+1 covers every point
pair exactly once.  The verifier checks that claim by brute-force pair
counting rather than trusting the construction.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .core import SkolemSequence

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class TripleSystem:
    """Points 0..v-1 and a list of 3-element blocks.

    Holding a TripleSystem does not certify the Steiner property; that is
    what verify_sts is for.
    """

    v: int
    blocks: tuple[Triple, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "blocks", tuple(tuple(int(p) for p in b) for b in self.blocks)
        )


def base_blocks(w: SkolemSequence | Sequence[int], x: int = 0) -> list[Triple]:
    """The n base blocks (x, x+k, x+j+n) of a Skolem sequence, one per
    length k sitting at positions i < j (1-based).

    Blocks come out in first-occurrence order of k, matching a left-to-right
    read of the sequence.  Plain integer arithmetic; reduction mod 6n+1
    happens in develop_sts.
    """
    if not isinstance(w, SkolemSequence):
        w = SkolemSequence(tuple(w))
    n = w.order
    if not 0 <= x < 6 * n + 1:
        raise ValueError(f"x must lie in 0..{6 * n}, got {x}")
    second: dict[int, int] = {}
    order_seen: list[int] = []
    for pos, k in enumerate(w.values, start=1):
        if k in second:
            second[k] = pos
        else:
            second[k] = 0
            order_seen.append(k)
    return [(x, x + k, x + second[k] + n) for k in order_seen]


def develop_sts(base: Iterable[Triple], n: int) -> TripleSystem:
    """Translate each base block by t = 0..v-1 mod v = 6n+1.

    Emits v*n blocks, translate-major, duplicates kept: a bad base fails in
    verify_sts instead of being silently papered over.
    """
    base = [tuple(b) for b in base]
    if len(base) != n:
        raise ValueError(f"expected {n} base blocks, got {len(base)}")
    v = 6 * n + 1
    blocks = [
        tuple((p + t) % v for p in b) for t in range(v) for b in base
    ]
    return TripleSystem(v=v, blocks=tuple(blocks))


def verify_sts(system: TripleSystem) -> bool:
    """True iff every unordered point pair lies in exactly one block and the
    block count is v(v-1)/6.  Exact counting over all pairs; no shortcuts."""
    v = system.v
    if v < 1 or len(system.blocks) * 6 != v * (v - 1):
        return False
    cover: Counter[tuple[int, int]] = Counter()
    for b in system.blocks:
        if len(set(b)) != 3 or not all(0 <= p < v for p in b):
            return False
        for p, q in combinations(sorted(b), 2):
            cover[(p, q)] += 1
    return all(
        cover[(p, q)] == 1 for p, q in combinations(range(v), 2)
    ) and sum(cover.values()) == v * (v - 1) // 2


def format_triple_system(system: TripleSystem) -> str:
    """Text form: header "v=<v>", then one block per line as three
    space-separated integers."""
    lines = [f"v={system.v}"]
    lines.extend(" ".join(str(p) for p in b) for b in system.blocks)
    return "\n".join(lines)


def parse_triple_system(text: str) -> TripleSystem:
    """Inverse of format_triple_system."""
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("v="):
        raise ValueError("triple system text must start with a v=<v> header")
    v = int(lines[0][2:])
    blocks = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError(f"block line must have 3 integers: {ln!r}")
        blocks.append(tuple(int(p) for p in parts))
    return TripleSystem(v=v, blocks=tuple(blocks))
