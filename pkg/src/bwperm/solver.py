"""Scanline dynamic programs for black-and-white colorings of permutation graphs.

Two solve paths compute the same exact frontier:

``piece_table``
    The piece recursion.  A piece is the region between two ordered
    scanlines.  Its table is the union of the all-black and all-white
    colorings with every split ``table(lo, s) (+) table(s, hi)`` over scanlines
    ``s`` strictly between the borders; segments crossing ``s`` stay
    uncolored.  Memoized, roughly O(n^8) in the worst case.  Kept as the
    reference path for small instances.

``chain_frontier``
    The production path.  Colored components are separated by a chain of
    pairwise non-crossing scanlines, so ``F(s)`` (colorings left of ``s``)
    extends ``F(s')`` for every ``s' < s`` by one monochromatic block.
    O(n^5) with the inner step vectorized.

Both produce downward-closed frontiers.  Every valid coloring extends to a
maximal one whose structure the recursions enumerate, and the feasible set
is closed under uncoloring, so the closure is the exact answer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .frontier import Frontier, maxplus
from .model import (
    Color,
    Coloring,
    Permutation,
    Piece,
    Scanline,
    ScanlineChain,
    inside,
)


class MemoRevisitError(AssertionError):
    """A piece table was requested while being built, or built twice."""


def _union_into(acc: list[int], fw: tuple[int, ...]) -> None:
    for b, w in enumerate(fw):
        if w > acc[b]:
            acc[b] = w


class PieceSolver:
    """Memoized piece tables for one permutation.

    Pieces with the same inside set share a table, so the memo key is that
    set as a bitmask over labels (bit ``k - 1`` for vertex ``k``).  It is in
    one-to-one correspondence with the piece tightened to its extreme
    segments, see ``tighten``.
    """

    def __init__(self, p: Permutation):
        self.p = p
        n = p.n
        self._top_le = [(1 << a) - 1 for a in range(n + 1)]
        bot_le = [0] * (n + 1)
        for j, label in enumerate(p.bottom, start=1):
            bot_le[j] = bot_le[j - 1] | (1 << (label - 1))
        self._bot_le = bot_le
        self._memo: dict[int, tuple[int, ...]] = {}
        self._active: set[int] = set()
        self.evaluations = 0
        self.lookups = 0

    def mask(self, pc: Piece) -> int:
        lo, hi = pc.lo, pc.hi
        if not (0 <= lo.a and 0 <= lo.b and hi.a <= self.p.n and hi.b <= self.p.n):
            raise ValueError(f"piece {pc} outside gap range 0..{self.p.n}")
        tl, bl = self._top_le, self._bot_le
        return tl[hi.a] & ~tl[lo.a] & bl[hi.b] & ~bl[lo.b]

    def labels(self, mask: int) -> list[int]:
        return [k for k in range(1, self.p.n + 1) if mask >> (k - 1) & 1]

    def tighten(self, mask: int) -> Piece | None:
        """Smallest piece with this inside set; ``None`` for the empty set."""
        if not mask:
            return None
        labels = self.labels(mask)
        bottoms = [self.p.pos[k] for k in labels]
        return Piece(
            Scanline(labels[0] - 1, min(bottoms) - 1),
            Scanline(labels[-1], max(bottoms)),
        )

    def key(self, pc: Piece) -> tuple[int, int, int, int] | None:
        """Tightened border quadruple ``(lo.a, lo.b, hi.a, hi.b)`` used for the memo."""
        tight = self.tighten(self.mask(pc))
        if tight is None:
            return None
        return (tight.lo.a, tight.lo.b, tight.hi.a, tight.hi.b)

    def table(self, pc: Piece) -> Frontier:
        mask = self.mask(pc)
        return Frontier(mask.bit_count(), self._solve(mask))

    def cuts(self, mask: int) -> list[tuple[int, int]]:
        """Distinct (left, right) inside sets over scanlines strictly between the borders.

        Cuts leaving one side empty only reproduce a sub-frontier and are skipped.
        """
        tight = self.tighten(mask)
        assert tight is not None
        lo, hi = tight.lo, tight.hi
        tl, bl = self._top_le, self._bot_le
        seen: dict[tuple[int, int], None] = {}
        for a in range(lo.a, hi.a + 1):
            left_a = mask & tl[a]
            right_a = mask & ~tl[a]
            for b in range(lo.b, hi.b + 1):
                if (a, b) == (lo.a, lo.b) or (a, b) == (hi.a, hi.b):
                    continue
                left = left_a & bl[b]
                right = right_a & ~bl[b]
                if left and right:
                    seen[(left, right)] = None
        return list(seen)

    def _solve(self, mask: int) -> tuple[int, ...]:
        self.lookups += 1
        cached = self._memo.get(mask)
        if cached is not None:
            return cached
        if mask in self._active:
            raise MemoRevisitError(f"piece {self.tighten(mask)} requested while under construction")
        m = mask.bit_count()
        if m <= 1:
            result: tuple[int, ...] = (m,) + (0,) * m
        else:
            self._active.add(mask)
            acc = [m] + [0] * m
            for left, right in self.cuts(mask):
                _union_into(acc, maxplus(self._solve(left), self._solve(right)))
            self._active.discard(mask)
            result = tuple(acc)
        if mask in self._memo:
            raise MemoRevisitError(f"piece {self.tighten(mask)} built twice")
        self._memo[mask] = result
        self.evaluations += 1
        return result

    @property
    def memo_size(self) -> int:
        return len(self._memo)


def piece_table(p: Permutation, pc: Piece, solver: PieceSolver | None = None) -> Frontier:
    """Exact frontier of the subgraph induced by the segments inside ``pc``."""
    return (solver or PieceSolver(p)).table(pc)


def prefix_counts(p: Permutation) -> np.ndarray:
    """``P[a, b]`` = number of segments with top position <= a and bottom position <= b."""
    n = p.n
    grid = np.zeros((n + 1, n + 1), dtype=np.int64)
    for k in p.vertices():
        grid[k, p.pos[k]] = 1
    return grid.cumsum(axis=0).cumsum(axis=1)


def block_size(P: np.ndarray, lo: Scanline, hi: Scanline) -> int:
    return int(P[hi.a, hi.b] - P[lo.a, hi.b] - P[hi.a, lo.b] + P[lo.a, lo.b])


@lru_cache(maxsize=32)
def chain_table(p: Permutation) -> np.ndarray:
    """``F[a, b, k]``: max whites with exactly ``k`` blacks left of scanline ``(a, b)``, or -1.

    The returned array is read-only and shared between callers.
    """
    n = p.n
    P = prefix_counts(p)
    F = np.full((n + 1, n + 1, n + 1), -1, dtype=np.int64)
    F[0, 0, 0] = 0
    cols = np.arange(n + 1)
    for a in range(n + 1):
        for b in range(n + 1):
            if a == 0 and b == 0:
                continue
            # predecessors are the rectangle below (a, b), minus (a, b) itself
            prev = F[: a + 1, : b + 1].reshape(-1, n + 1)[:-1]
            sizes = (P[a, b] - P[: a + 1, b][:, None] - P[a, : b + 1][None, :] + P[: a + 1, : b + 1])
            sizes = sizes.reshape(-1)[:-1]
            white = np.where(prev >= 0, prev + sizes[:, None], -1).max(axis=0)
            src = cols[None, :] - sizes[:, None]
            black = np.take_along_axis(prev, np.maximum(src, 0), axis=1)
            black = np.where(src >= 0, black, -1).max(axis=0)
            F[a, b] = np.maximum(white, black)
    F.setflags(write=False)
    return F


def chain_frontier(p: Permutation) -> Frontier:
    """Exact feasibility frontier of the whole permutation graph."""
    F = chain_table(p)
    return Frontier.from_raw(p.n, F[p.n, p.n].tolist())


def decide(p: Permutation, b: int, w: int) -> bool:
    if b < 0 or w < 0:
        raise ValueError("counts are non-negative")
    return b <= p.n and (b, w) in chain_frontier(p)


@dataclass(frozen=True)
class Block:
    lo: Scanline
    hi: Scanline
    color: Color
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class Witness:
    coloring: Coloring
    chain: ScanlineChain
    blocks: tuple[Block, ...]
    # block coloring before surplus vertices were uncolored
    dominating: Coloring

    def to_text(self) -> str:
        c = self.coloring
        lines = [
            "black: " + " ".join(map(str, c.black)),
            "white: " + " ".join(map(str, c.white)),
            "uncolored: " + " ".join(map(str, c.uncolored)),
            "scanlines: " + " ".join(map(str, self.chain)),
        ]
        return "\n".join(line.rstrip() for line in lines) + "\n"


def _backtrack(p: Permutation, black: int, white: int) -> list[tuple[Scanline, Scanline, Color]]:
    """Blocks of a chain coloring with exactly ``black`` blacks and at least ``white`` whites.

    Back-choices are recomputed from the table; the first predecessor in
    lexicographic order that still reaches the target wins, black before white.
    """
    F = chain_table(p)
    P = prefix_counts(p)
    n = p.n
    s = Scanline(n, n)
    need_b, need_w = black, white
    blocks = []
    while s != Scanline(0, 0):
        for a2, b2 in itertools.product(range(s.a + 1), range(s.b + 1)):
            prev = Scanline(a2, b2)
            if prev == s:
                continue
            size = block_size(P, prev, s)
            if need_b >= size and F[a2, b2, need_b - size] >= need_w:
                blocks.append((prev, s, Color.BLACK))
                need_b -= size
                break
            if F[a2, b2, need_b] >= 0 and F[a2, b2, need_b] + size >= need_w:
                blocks.append((prev, s, Color.WHITE))
                need_w = max(0, need_w - size)
                break
        else:
            raise AssertionError(f"no back-choice at {s} for ({need_b}, {need_w})")
        s = prev
    assert need_b == 0 and need_w == 0
    blocks.reverse()
    return blocks


def witness(p: Permutation, b: int, w: int) -> Witness | None:
    """A valid coloring with exactly ``b`` black and ``w`` white vertices, or ``None``."""
    if not decide(p, b, w):
        return None
    raw = chain_table(p)[p.n, p.n]
    # smallest black count at or above b whose raw entry dominates w
    target_b = next(k for k in range(b, p.n + 1) if raw[k] >= w)

    colors = [Color.UNCOLORED] * p.n
    blocks = []
    for lo, hi, color in _backtrack(p, target_b, w):
        verts = tuple(sorted(inside(p, Piece(lo, hi))))
        for k in verts:
            colors[k - 1] = color
        blocks.append(Block(lo, hi, color, verts))
    dominating = Coloring(tuple(colors))

    # uncolor surplus, lowest labels first
    for color, want in ((Color.BLACK, b), (Color.WHITE, w)):
        have = dominating.labels(color)
        for k in have[: len(have) - want]:
            colors[k - 1] = Color.UNCOLORED

    chain = ScanlineChain(tuple(blk.hi for blk in blocks[:-1]))
    return Witness(Coloring(tuple(colors)), chain, tuple(blocks), dominating)
