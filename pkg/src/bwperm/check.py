"""Differential testing of the scanline solver against the exhaustive oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .frontier import Frontier
from .instances import MASK64, GeneratorConfig, generate_random
from .model import Permutation, restrict
from .oracle import GeneralGraph, oracle_frontier
from .solver import chain_frontier

Solver = Callable[[Permutation], Frontier]


def reference(p: Permutation) -> Frontier:
    return oracle_frontier(GeneralGraph.from_permutation(p))


@dataclass(frozen=True)
class Mismatch:
    trial: int
    seed: int
    original: Permutation
    minimized: Permutation
    solver: Frontier
    oracle: Frontier

    def report(self) -> str:
        return (
            f"MISMATCH trial={self.trial} seed={self.seed}\n"
            f"# original: {self.original}\n"
            f"{self.minimized.to_text()}"
            f"# solver maxw: {list(self.solver.maxw)}\n"
            f"# oracle maxw: {list(self.oracle.maxw)}\n"
        )


def shrink(p: Permutation, fails: Callable[[Permutation], bool]) -> Permutation:
    """Drop one label at a time while ``fails`` still holds."""
    current = p
    progress = True
    while progress and current.n > 1:
        progress = False
        for k in current.vertices():
            candidate, _ = restrict(current, [x for x in current.vertices() if x != k])
            if fails(candidate):
                current = candidate
                progress = True
                break
    return current


def crosscheck(
    n: int, trials: int, seed: int, solver: Solver = chain_frontier
) -> tuple[int, Mismatch | None]:
    """Run ``trials`` random instances of size ``n``; stop at the first mismatch."""

    def fails(q: Permutation) -> bool:
        return solver(q) != reference(q)

    for trial in range(trials):
        trial_seed = (seed + trial) & MASK64
        p = generate_random(GeneratorConfig(n, trial_seed))
        if fails(p):
            small = shrink(p, fails)
            return trial, Mismatch(trial, trial_seed, p, small, solver(small), reference(small))
    return trials, None
