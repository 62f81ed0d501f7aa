"""Exhaustive black-and-white solvers for arbitrary graphs.

Exponential on purpose.  These are ground truth for the scanline solver and
never take any shortcut that relies on the graph being a permutation graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .frontier import Frontier
from .model import ParseError, Permutation

DEFAULT_GUARD = 20
EXHAUSTIVE_GUARD = 10


class OracleGuardError(ValueError):
    """The instance is too large for exhaustive search; shrink it."""


@dataclass(frozen=True)
class GeneralGraph:
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count is non-negative")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge {u}-{v} out of range 1..{self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_permutation(cls, p: Permutation, labels: Iterable[int] | None = None) -> GeneralGraph:
        """Intersection graph of ``p``, optionally induced on ``labels`` (relabeled 1..m)."""
        keep = list(p.vertices()) if labels is None else sorted(set(labels))
        index = {k: i for i, k in enumerate(keep, start=1)}
        edges = {
            (index[u], index[v])
            for u in keep
            for v in p.neighbors[u]
            if v in index and u < v
        }
        return cls(len(keep), frozenset(edges))

    def neighbors(self) -> list[set[int]]:
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return nbrs

    def to_text(self) -> str:
        lines = [f"{self.n} {len(self.edges)}"]
        lines.extend(f"{u} {v}" for u, v in sorted(self.edges))
        return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> GeneralGraph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` lines are skipped."""
    rows = [
        (lineno, line.split())
        for lineno, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise ParseError("empty edge list")

    def ints(lineno: int, toks: list[str]) -> list[int]:
        if len(toks) != 2:
            raise ParseError(f"expected 2 integers, got {len(toks)} tokens", line=lineno)
        try:
            return [int(t) for t in toks]
        except ValueError:
            raise ParseError(f"not an integer pair: {' '.join(toks)!r}", line=lineno) from None

    header_line, header = rows[0]
    n, m = ints(header_line, header)
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", line=header_line)
    if len(rows) - 1 != m:
        raise ParseError(f"header announces {m} edges, found {len(rows) - 1}")
    edges = set()
    for lineno, toks in rows[1:]:
        u, v = ints(lineno, toks)
        if u == v:
            raise ParseError(f"self-loop at {u}", line=lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"edge {u}-{v} out of range 1..{n}", line=lineno)
        edges.add((min(u, v), max(u, v)))
    return GeneralGraph(n, frozenset(edges))


def _check_guard(n: int, guard: int) -> None:
    if n > guard:
        raise OracleGuardError(f"oracle refuses n={n} > {guard}")


def oracle_frontier(g: GeneralGraph, guard: int = DEFAULT_GUARD) -> Frontier:
    """Max whites per black count: for each black set B, whites are V minus N[B]."""
    _check_guard(g.n, guard)
    n = g.n
    if n == 0:
        return Frontier.point()
    closed = [1 << i for i in range(n)]
    for u, v in g.edges:
        closed[u - 1] |= 1 << (v - 1)
        closed[v - 1] |= 1 << (u - 1)

    # covered[mask] = closed neighborhood of the black set ``mask``
    covered = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        half = 1 << i
        covered[half : 2 * half] = covered[:half] | closed[i]
    sizes = np.bitwise_count(np.arange(1 << n, dtype=np.int64))
    whites = n - np.bitwise_count(covered).astype(np.int64)

    maxw = np.full(n + 1, -1, dtype=np.int64)
    np.maximum.at(maxw, sizes.astype(np.int64), whites)
    return Frontier(n, tuple(int(w) for w in maxw))


def oracle_decide(g: GeneralGraph, b: int, w: int, guard: int = DEFAULT_GUARD) -> bool:
    if b < 0 or w < 0:
        raise ValueError("counts are non-negative")
    f = oracle_frontier(g, guard)
    return b <= g.n and (b, w) in f


def exhaustive_check(g: GeneralGraph, guard: int = EXHAUSTIVE_GUARD) -> Frontier:
    """Enumerate every assignment in {uncolored, black, white}^n and keep the valid ones."""
    _check_guard(g.n, guard)
    best = [-1] * (g.n + 1)
    for colors in itertools.product((0, 1, 2), repeat=g.n):
        if any(
            {colors[u - 1], colors[v - 1]} == {1, 2} for u, v in g.edges
        ):
            continue
        b = colors.count(1)
        w = colors.count(2)
        if w > best[b]:
            best[b] = w
    return Frontier(g.n, tuple(best))
