import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bwperm import (
    Color,
    Coloring,
    Frontier,
    Permutation,
    Piece,
    PieceSolver,
    Scanline,
    chain_frontier,
    components,
    decide,
    frontier_convolve,
    inside,
    piece_table,
    verify_coloring,
    witness,
)
from bwperm.model import chain_crossers, direct_sum, mirror, restrict
from bwperm.solver import MemoRevisitError, chain_table

from conftest import is_maximal, oracle_of, permutations, pieces, valid_colorings


def check_witness(p, wit, b, w):
    ok, counts = verify_coloring(p, wit.coloring)
    assert ok and counts == (b, w)
    crossers = chain_crossers(p, wit.chain)
    # before surplus removal the uncolored vertices are exactly the chain crossers
    assert set(wit.dominating.uncolored) == crossers
    assert crossers <= set(wit.coloring.uncolored)
    for blk in wit.blocks:
        assert set(blk.vertices) == inside(p, Piece(blk.lo, blk.hi))
        assert {wit.dominating[k] for k in blk.vertices} <= {blk.color}
        assert {wit.coloring[k] for k in blk.vertices} <= {blk.color, Color.UNCOLORED}
    for k in wit.coloring.uncolored:
        nb = {wit.coloring[j] for j in p.neighbors[k]}
        if Color.BLACK in nb and Color.WHITE in nb:
            assert k in crossers


class TestPieceTable:
    def test_single_segment(self, fig1):
        # top 3 sits at bottom 1; the piece ((2,0),(3,1)) holds only it
        pc = Piece(Scanline(2, 0), Scanline(3, 1))
        assert inside(fig1, pc) == {3}
        assert piece_table(fig1, pc) == Frontier(1, (1, 0))

    def test_empty_piece(self, fig1):
        s = Scanline(2, 3)
        assert piece_table(fig1, Piece(s, s)) == Frontier.point()

    def test_figure1_extreme(self, fig1):
        expected = oracle_of(fig1)
        assert expected.maxw == (5, 2, 1, 0, 0, 0)
        assert piece_table(fig1, Piece.extreme(5)) == expected

    @settings(max_examples=80, deadline=None)
    @given(permutations(max_n=8), st.data())
    def test_matches_oracle(self, p, data):
        solver = PieceSolver(p)
        for _ in range(5):
            pc = data.draw(pieces(p.n))
            assert solver.table(pc) == oracle_of(p, inside(p, pc))

    @settings(max_examples=40, deadline=None)
    @given(permutations(max_n=8))
    def test_cuts_shrink(self, p):
        solver = PieceSolver(p)
        mask = solver.mask(Piece.extreme(p.n))
        for left, right in solver.cuts(mask):
            assert left & right == 0
            assert 0 < left < mask and right and (left | right) & ~mask == 0
            for part in (left, right):
                tight = solver.tighten(part)
                outer = solver.tighten(mask)
                size = lambda pc: (pc.hi.a - pc.lo.a) + (pc.hi.b - pc.lo.b)  # noqa: E731
                assert size(tight) < size(outer)

    def test_key_is_tight_quadruple(self, fig1):
        solver = PieceSolver(fig1)
        # ((1,3),(5,5)) holds {2, 4}: tops 2..4, bottoms 4..5
        assert solver.key(Piece(Scanline(1, 3), Scanline(5, 5))) == (1, 3, 4, 5)
        assert solver.key(Piece(Scanline(1, 3), Scanline(4, 5))) == (1, 3, 4, 5)
        assert solver.key(Piece(Scanline(2, 2), Scanline(2, 2))) is None

    def test_out_of_range_piece(self, fig1):
        with pytest.raises(ValueError):
            piece_table(fig1, Piece(Scanline(0, 0), Scanline(6, 6)))


class TestMemo:
    def test_each_key_built_once(self):
        rng = random.Random(5)
        for _ in range(30):
            bottom = list(range(1, 11))
            rng.shuffle(bottom)
            solver = PieceSolver(Permutation(tuple(bottom)))
            solver.table(Piece.extreme(10))
            assert solver.evaluations == solver.memo_size
            assert solver.lookups > solver.evaluations

    def test_revisit_is_detected(self, fig1):
        class Forgetful(PieceSolver):
            def __init__(self, p):
                super().__init__(p)
                self._memo = _NeverHit()

        with pytest.raises(MemoRevisitError):
            Forgetful(fig1).table(Piece.extreme(5))


class _NeverHit(dict):
    def get(self, key, default=None):
        return default


class TestChainFrontier:
    def test_identity(self):
        assert chain_frontier(Permutation.identity(4)).maxw == (4, 3, 2, 1, 0)

    def test_reversal(self):
        assert chain_frontier(Permutation((4, 3, 2, 1))).maxw == (4, 0, 0, 0, 0)

    def test_figure1(self, fig1):
        assert chain_frontier(fig1) == oracle_of(fig1)

    def test_singleton(self):
        assert chain_frontier(Permutation((1,))).maxw == (1, 0)

    @settings(max_examples=100, deadline=None)
    @given(permutations(max_n=9))
    def test_matches_oracle(self, p):
        assert chain_frontier(p) == oracle_of(p)

    @settings(max_examples=60, deadline=None)
    @given(permutations(max_n=10))
    def test_matches_piece_table(self, p):
        assert chain_frontier(p) == piece_table(p, Piece.extreme(p.n))

    def test_table_is_read_only(self, fig1):
        with pytest.raises(ValueError):
            chain_table(fig1)[0, 0, 0] = 3


class TestDecide:
    def test_figure1(self, fig1):
        assert decide(fig1, 1, 2)
        assert not decide(fig1, 2, 2)

    @given(permutations(max_n=9))
    def test_all_white(self, p):
        assert decide(p, 0, p.n)
        assert decide(p, p.n, 0)
        assert not decide(p, p.n + 1, 0)

    def test_negative(self, fig1):
        with pytest.raises(ValueError):
            decide(fig1, -1, 0)

    @settings(max_examples=60, deadline=None)
    @given(permutations(max_n=10))
    def test_metamorphic(self, p):
        n = p.n
        q = mirror(p)
        for b, w in itertools.product(range(n + 2), repeat=2):
            got = decide(p, b, w)
            assert got == decide(p, w, b)
            assert got == decide(q, b, w)
            if got and b:
                assert decide(p, b - 1, w)
            if got and w:
                assert decide(p, b, w - 1)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(permutations(max_n=4), min_size=2, max_size=3))
    def test_disconnected_composition(self, parts):
        p = direct_sum(*parts)
        expected = Frontier.point()
        for comp in components(p, p.vertices()):
            sub, _ = restrict(p, comp)
            expected = frontier_convolve(expected, chain_frontier(sub))
        assert chain_frontier(p) == expected


class TestWitness:
    def test_figure1(self, fig1):
        wit = witness(fig1, 2, 1)
        check_witness(fig1, wit, 2, 1)

    def test_all_black(self, fig1):
        wit = witness(fig1, 5, 0)
        assert wit.coloring.black == [1, 2, 3, 4, 5]
        assert len(wit.chain) == 0

    def test_infeasible(self, fig1):
        assert witness(fig1, 3, 1) is None
        assert witness(fig1, 6, 0) is None

    def test_text(self, fig1):
        text = witness(fig1, 2, 1).to_text()
        lines = text.splitlines()
        assert [line.split(":")[0] for line in lines] == ["black", "white", "uncolored", "scanlines"]
        assert text.endswith("\n")

    def test_deterministic(self, fig1):
        assert witness(fig1, 1, 2) == witness(fig1, 1, 2)

    @settings(max_examples=60, deadline=None)
    @given(permutations(max_n=10), st.data())
    def test_sound_on_frontier(self, p, data):
        f = chain_frontier(p)
        b = data.draw(st.integers(0, p.n))
        w = data.draw(st.integers(0, f.maxw[b]))
        check_witness(p, witness(p, b, w), b, w)
        assert witness(p, b, f.maxw[b] + 1) is None


class TestMaximalExtension:
    @staticmethod
    def extend(p, coloring):
        colors = list(coloring.colors)
        changed = True
        while changed:
            changed = False
            for k in p.vertices():
                if colors[k - 1] is not Color.UNCOLORED:
                    continue
                nb = {colors[j - 1] for j in p.neighbors[k]}
                if Color.BLACK not in nb:
                    colors[k - 1] = Color.WHITE
                    changed = True
                elif Color.WHITE not in nb:
                    colors[k - 1] = Color.BLACK
                    changed = True
        return Coloring(tuple(colors))

    @pytest.mark.slow
    def test_exhaustive_small(self):
        from conftest import mask_coloring

        for n in range(1, 7):
            for bottom in itertools.permutations(range(1, n + 1)):
                p = Permutation(bottom)
                for black, white, valid in valid_colorings(p):
                    if not valid:
                        continue
                    c = mask_coloring(p, black, white)
                    ext = self.extend(p, c)
                    ok, (b2, w2) = verify_coloring(p, ext)
                    b1, w1 = c.counts()
                    assert ok and b2 >= b1 and w2 >= w1
                    for k in ext.uncolored:
                        nb = {ext[j] for j in p.neighbors[k]}
                        assert {Color.BLACK, Color.WHITE} <= nb
                    bm = sum(1 << (k - 1) for k in ext.black)
                    wm = sum(1 << (k - 1) for k in ext.white)
                    assert is_maximal(p, bm, wm)
