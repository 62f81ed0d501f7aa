"""Permutation diagrams, scanlines, pieces and colorings.

Vertex ``k`` is the segment joining top position ``k`` to bottom position
``pos[k]``.  A scanline is stored by its gap indices ``(a, b)``: it leaves the
top rail between positions ``a`` and ``a + 1`` and the bottom rail between
positions ``b`` and ``b + 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class ParseError(ValueError):
    """Malformed instance text.  ``line`` and ``token`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, token: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if token is not None:
            where.append(f"token {token}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.line = line
        self.token = token


class Color(enum.Enum):
    BLACK = "black"
    WHITE = "white"
    UNCOLORED = "uncolored"


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    CROSSING = "crossing"


@dataclass(frozen=True)
class Permutation:
    bottom: tuple[int, ...]

    def __post_init__(self):
        bottom = tuple(int(x) for x in self.bottom)
        object.__setattr__(self, "bottom", bottom)
        n = len(bottom)
        if n < 1:
            raise ValueError("a permutation needs at least one element")
        seen = set()
        for idx, label in enumerate(bottom, start=1):
            if not 1 <= label <= n:
                raise ValueError(f"position {idx}: label {label} out of range 1..{n}")
            if label in seen:
                raise ValueError(f"position {idx}: duplicate label {label}")
            seen.add(label)

    @property
    def n(self) -> int:
        return len(self.bottom)

    @cached_property
    def pos(self) -> tuple[int, ...]:
        """``pos[k]`` is the bottom position of label ``k``; index 0 is unused."""
        pos = [0] * (self.n + 1)
        for idx, label in enumerate(self.bottom, start=1):
            pos[label] = idx
        return tuple(pos)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nb) for nb in adjacency(self))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def reversal(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in self.vertices() for j in self.neighbors[i] if i < j]

    def to_text(self) -> str:
        return f"{self.n}\n{' '.join(map(str, self.bottom))}\n"

    def __str__(self) -> str:
        return " ".join(map(str, self.bottom))


@dataclass(frozen=True, order=True)
class Scanline:
    """Gap coordinates; ordering is lexicographic, ``precedes`` is the chain order."""

    a: int
    b: int

    def precedes(self, other: Scanline) -> bool:
        """Componentwise ``<=``: ``self`` lies weakly left of ``other``."""
        return self.a <= other.a and self.b <= other.b

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class Piece:
    lo: Scanline
    hi: Scanline

    def __post_init__(self):
        if not self.lo.precedes(self.hi):
            raise ValueError(f"piece borders {self.lo} and {self.hi} are not ordered")

    @classmethod
    def extreme(cls, n: int) -> Piece:
        return cls(Scanline(0, 0), Scanline(n, n))


@dataclass(frozen=True)
class Coloring:
    """Colors indexed by vertex label; ``colors[0]`` is vertex 1."""

    colors: tuple[Color, ...]

    @classmethod
    def from_sets(cls, n: int, black: Iterable[int] = (), white: Iterable[int] = ()) -> Coloring:
        colors = [Color.UNCOLORED] * n
        for k in black:
            colors[k - 1] = Color.BLACK
        for k in white:
            if colors[k - 1] is Color.BLACK:
                raise ValueError(f"vertex {k} is both black and white")
            colors[k - 1] = Color.WHITE
        return cls(tuple(colors))

    @property
    def n(self) -> int:
        return len(self.colors)

    def __getitem__(self, k: int) -> Color:
        return self.colors[k - 1]

    def labels(self, color: Color) -> list[int]:
        return [k for k, c in enumerate(self.colors, start=1) if c is color]

    @property
    def black(self) -> list[int]:
        return self.labels(Color.BLACK)

    @property
    def white(self) -> list[int]:
        return self.labels(Color.WHITE)

    @property
    def uncolored(self) -> list[int]:
        return self.labels(Color.UNCOLORED)

    def counts(self) -> tuple[int, int]:
        return len(self.black), len(self.white)

    def swapped(self) -> Coloring:
        swap = {Color.BLACK: Color.WHITE, Color.WHITE: Color.BLACK, Color.UNCOLORED: Color.UNCOLORED}
        return Coloring(tuple(swap[c] for c in self.colors))


@dataclass(frozen=True)
class ScanlineChain:
    chain: tuple[Scanline, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "chain", tuple(self.chain))
        for s, t in zip(self.chain, self.chain[1:]):
            if s == t or not s.precedes(t):
                raise ValueError(f"chain not strictly increasing at {s}, {t}")

    def __iter__(self) -> Iterator[Scanline]:
        return iter(self.chain)

    def __len__(self) -> int:
        return len(self.chain)


def parse_permutation(text: str) -> Permutation:
    """Read ``n`` followed by ``n`` labels.  Lines starting with ``#`` are skipped."""
    tokens: list[tuple[str, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith("#"):
            continue
        tokens.extend((tok, lineno) for tok in line.split())
    if not tokens:
        raise ParseError("empty input")

    values = []
    for idx, (tok, lineno) in enumerate(tokens, start=1):
        try:
            values.append(int(tok))
        except ValueError:
            raise ParseError(f"not an integer: {tok!r}", line=lineno, token=idx) from None

    n = values[0]
    if n < 1:
        raise ParseError(f"n must be positive, got {n}", line=tokens[0][1], token=1)
    if len(values) != n + 1:
        raise ParseError(f"expected {n} labels after n, got {len(values) - 1}")

    seen: dict[int, int] = {}
    for idx, label in enumerate(values[1:], start=2):
        lineno = tokens[idx - 1][1]
        if not 1 <= label <= n:
            raise ParseError(f"label {label} out of range 1..{n}", line=lineno, token=idx)
        if label in seen:
            raise ParseError(f"duplicate label {label}", line=lineno, token=idx)
        seen[label] = idx
    return Permutation(tuple(values[1:]))


def parse_bottom_order(text: str) -> Permutation:
    """Parse a bare label sequence such as ``"3 5 1 4 2"`` (``n`` is implied)."""
    tokens = text.replace(",", " ").split()
    return parse_permutation(f"{len(tokens)}\n{' '.join(tokens)}")


def _check_label(p: Permutation, k: int) -> None:
    if not 1 <= k <= p.n:
        raise ValueError(f"vertex {k} out of range 1..{p.n}")


def crosses(p: Permutation, i: int, j: int) -> bool:
    _check_label(p, i)
    _check_label(p, j)
    if i == j:
        raise ValueError("a segment does not cross itself")
    return (i - j) * (p.pos[i] - p.pos[j]) < 0


def adjacency(p: Permutation) -> list[list[int]]:
    """Sorted neighbor lists; index 0 is an empty placeholder."""
    nbrs: list[list[int]] = [[] for _ in range(p.n + 1)]
    pos = p.pos
    for i in range(1, p.n + 1):
        for j in range(i + 1, p.n + 1):
            if pos[i] > pos[j]:
                nbrs[i].append(j)
                nbrs[j].append(i)
    for nb in nbrs:
        nb.sort()
    return nbrs


def all_scanlines(n: int) -> list[Scanline]:
    return [Scanline(a, b) for a in range(n + 1) for b in range(n + 1)]


def segment_side(p: Permutation, s: Scanline, k: int) -> Side:
    _check_label(p, k)
    if not (0 <= s.a <= p.n and 0 <= s.b <= p.n):
        raise ValueError(f"scanline {s} outside gap range 0..{p.n}")
    top_left = k <= s.a
    bottom_left = p.pos[k] <= s.b
    if top_left and bottom_left:
        return Side.LEFT
    if not top_left and not bottom_left:
        return Side.RIGHT
    return Side.CROSSING


def crossing_set(p: Permutation, s: Scanline) -> set[int]:
    return {k for k in p.vertices() if segment_side(p, s, k) is Side.CROSSING}


def compatible(s: Scanline, t: Scanline) -> bool:
    # Scanlines sharing a gap can be drawn disjoint inside it.
    return s.precedes(t) or t.precedes(s)


def inside(p: Permutation, pc: Piece) -> set[int]:
    lo, hi = pc.lo, pc.hi
    return {k for k in range(lo.a + 1, hi.a + 1) if lo.b < p.pos[k] <= hi.b}


def verify_coloring(p: Permutation, c: Coloring) -> tuple[bool, tuple[int, int]]:
    ok, _ = find_conflict(p, c)
    return ok, c.counts()


def find_conflict(p: Permutation, c: Coloring) -> tuple[bool, tuple[int, int] | None]:
    """Return ``(True, None)`` or ``(False, (u, v))`` for the first black-white edge."""
    if c.n != p.n:
        raise ValueError(f"coloring has {c.n} entries, permutation has {p.n}")
    for u in c.black:
        for v in p.neighbors[u]:
            if c[v] is Color.WHITE:
                return False, (min(u, v), max(u, v))
    return True, None


def components(p: Permutation, active: Iterable[int]) -> list[list[int]]:
    """Connected components of the induced subgraph, ordered by smallest label."""
    active = set(active)
    seen: set[int] = set()
    result = []
    for start in sorted(active):
        if start in seen:
            continue
        seen.add(start)
        stack, comp = [start], []
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in p.neighbors[u]:
                if v in active and v not in seen:
                    seen.add(v)
                    stack.append(v)
        result.append(sorted(comp))
    return result


def restrict(p: Permutation, labels: Iterable[int]) -> tuple[Permutation, list[int]]:
    """Induced sub-permutation on ``labels``, relabeled to ``1..m`` in top order.

    Returns the new permutation and the map from new label (index - 1) back to
    the original label.
    """
    keep = sorted(set(labels))
    if not keep:
        raise ValueError("cannot restrict to an empty label set")
    new_label = {k: i for i, k in enumerate(keep, start=1)}
    bottom = tuple(new_label[k] for k in p.bottom if k in new_label)
    return Permutation(bottom), keep


def mirror(p: Permutation) -> Permutation:
    """Reflect the diagram left to right; vertex ``k`` becomes ``n + 1 - k``."""
    n = p.n
    return Permutation(tuple(n + 1 - k for k in reversed(p.bottom)))


def direct_sum(*parts: Permutation) -> Permutation:
    """Place diagrams side by side; the result has one component block per part."""
    bottom: list[int] = []
    offset = 0
    for part in parts:
        bottom.extend(k + offset for k in part.bottom)
        offset += part.n
    return Permutation(tuple(bottom))


def separating_chain(p: Permutation, c: Coloring) -> ScanlineChain:
    """Scanlines between consecutive components of the colored vertices.

    For a maximal coloring the segments crossing the returned chain are
    exactly the uncolored vertices.
    """
    colored = [k for k in p.vertices() if c[k] is not Color.UNCOLORED]
    comps = components(p, colored)
    chain = []
    max_a = max_b = 0
    for comp in comps[:-1]:
        max_a = max(max_a, max(comp))
        max_b = max(max_b, max(p.pos[k] for k in comp))
        chain.append(Scanline(max_a, max_b))
    return ScanlineChain(tuple(chain))


def chain_crossers(p: Permutation, chain: Sequence[Scanline] | ScanlineChain) -> set[int]:
    out: set[int] = set()
    for s in chain:
        out |= crossing_set(p, s)
    return out
