"""Downward-closed sets of feasible (black, white) counts.

A frontier over ``m`` vertices stores ``maxw[b]``, the largest white count
achievable together with ``b`` black vertices.  Black counts past the end of
``maxw`` are infeasible.  For the exact frontier of a graph ``len(maxw) ==
m + 1`` and ``maxw[0] == m``; intermediate frontiers built by ``shift`` may
be shorter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class Frontier:
    m: int
    maxw: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "maxw", tuple(int(x) for x in self.maxw))
        if not self.maxw:
            raise ValueError("a frontier holds at least one point")
        if len(self.maxw) > self.m + 1:
            raise ValueError(f"{len(self.maxw)} black counts exceed scope {self.m}")
        for b, w in enumerate(self.maxw):
            if w < 0 or b + w > self.m:
                raise ValueError(f"point ({b}, {w}) outside scope {self.m}")
        for b in range(1, len(self.maxw)):
            if self.maxw[b] > self.maxw[b - 1]:
                raise ValueError(f"maxw increases at b={b}: {self.maxw}")

    @classmethod
    def point(cls) -> Frontier:
        """The frontier of the empty vertex set: only ``(0, 0)``."""
        return cls(0, (0,))

    @classmethod
    def monochrome(cls, m: int) -> Frontier:
        """All-black or all-white colorings of ``m`` vertices, closed downward."""
        return cls(m, (m,) + (0,) * m)

    @classmethod
    def from_points(cls, m: int, points: Iterable[tuple[int, int]]) -> Frontier:
        best: dict[int, int] = {}
        for b, w in points:
            if best.get(b, -1) < w:
                best[b] = w
        if not best:
            raise ValueError("no points given")
        top = max(best)
        maxw = [0] * (top + 1)
        running = -1
        for b in range(top, -1, -1):
            running = max(running, best.get(b, -1))
            maxw[b] = running
        return cls(m, tuple(maxw))

    @classmethod
    def from_raw(cls, m: int, raw: Iterable[int]) -> Frontier:
        """Close a per-black-count array where negative entries mean infeasible."""
        return cls.from_points(m, ((b, w) for b, w in enumerate(raw) if w >= 0))

    def __contains__(self, bw: tuple[int, int]) -> bool:
        b, w = bw
        return 0 <= b < len(self.maxw) and 0 <= w <= self.maxw[b]

    def points(self) -> list[tuple[int, int]]:
        """Pareto-maximal points, ascending in black count."""
        out = []
        for b, w in enumerate(self.maxw):
            if b + 1 == len(self.maxw) or self.maxw[b + 1] < w:
                out.append((b, w))
        return out

    def is_exact_shape(self) -> bool:
        """Shape every whole-graph frontier has: full length and ``maxw[0] == m``."""
        return len(self.maxw) == self.m + 1 and self.maxw[0] == self.m

    def to_tsv(self) -> str:
        lines = ["b\tmax_w"]
        lines.extend(f"{b}\t{w}" for b, w in enumerate(self.maxw))
        return "\n".join(lines) + "\n"


def frontier_shift(f: Frontier, db: int, dw: int) -> Frontier:
    """Add a monochromatic block of ``db`` black or ``dw`` white vertices."""
    if db < 0 or dw < 0:
        raise ValueError("block sizes are non-negative")
    if db and dw:
        raise ValueError("a block has a single color")
    if db:
        maxw = (f.maxw[0],) * db + f.maxw
    else:
        maxw = tuple(w + dw for w in f.maxw)
    return Frontier(f.m + db + dw, maxw)


def frontier_union(f: Frontier, g: Frontier) -> Frontier:
    if f.m != g.m:
        raise ValueError(f"scope mismatch: {f.m} vs {g.m}")
    if len(f.maxw) < len(g.maxw):
        f, g = g, f
    maxw = list(f.maxw)
    for b, w in enumerate(g.maxw):
        if w > maxw[b]:
            maxw[b] = w
    return Frontier(f.m, tuple(maxw))


def frontier_convolve(f: Frontier, g: Frontier) -> Frontier:
    """Max-plus convolution: colorings of two disjoint, non-adjacent parts."""
    return Frontier(f.m + g.m, maxplus(f.maxw, g.maxw))


def maxplus(fw: tuple[int, ...], gw: tuple[int, ...]) -> tuple[int, ...]:
    out = [-1] * (len(fw) + len(gw) - 1)
    for b1, w1 in enumerate(fw):
        for b2, w2 in enumerate(gw, start=b1):
            if w1 + w2 > out[b2]:
                out[b2] = w1 + w2
    return tuple(out)
