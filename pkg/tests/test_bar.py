import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_shuffles
from strategies import bar_tuple, chain, free_word, nontrivial_dihedral, nontrivial_pair
from tccert.bar import (
    BarChain,
    BiChain,
    alpha_cycle,
    aw,
    beta_cycle,
    bichain_of,
    boundary,
    boundary_or_zero,
    constant_cycle,
    ez,
    free_alpha_cycle,
    free_beta_cycle,
    gamma_cycle,
    kunneth_project,
    shuffle_tuples,
)
from tccert.groups import DihedralGroup, FreeProduct, Pair, ParseError

D = DihedralGroup()
x, y, yx = D.x, D.y, D.parse("yx")


class TestChains:
    def test_parse_and_format(self):
        c = BarChain.parse("[x|yx] + [y|y]", D)
        assert c.terms == {(x, yx), (y, y)}
        assert BarChain.parse(str(c), D) == c

    def test_parse_pairs(self):
        c = BarChain.parse("[(x,1)|(1,yx)]", D, pairs=True)
        one = D.identity
        assert c.terms == {(Pair(x, one), Pair(one, yx))}

    def test_parse_cancels_and_normalizes(self):
        assert not BarChain.parse("[x|y] + [x|y]", D)
        assert not BarChain.parse("[x|1]", D)

    @pytest.mark.parametrize("text", ["[x|y] + [x]", "[x|y] junk"])
    def test_parse_rejects(self, text):
        with pytest.raises(ParseError):
            BarChain.parse(text, D)

    def test_zero_needs_degree(self):
        with pytest.raises(ParseError):
            BarChain.parse("0", D)
        assert BarChain.parse("0", D, degree=3) == BarChain(3)

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            BarChain(1, frozenset({(D.identity,)}))

    def test_boundary_by_hand(self):
        # d[g|h] = [h] + [gh] + [g]
        c = BarChain.parse("[y|x]", D)
        assert boundary(c) == BarChain.from_tuples(1, [(x,), (y * x,), (y,)])
        # [x|x]: the middle face is degenerate, the outer faces cancel
        assert not boundary(alpha_cycle(2))
        with pytest.raises(ValueError):
            boundary(BarChain.unit())
        assert boundary_or_zero(BarChain.unit()) == BarChain(0)

    @settings(max_examples=300)
    @given(chain(nontrivial_dihedral(), min_degree=2, max_degree=6))
    def test_boundary_squared_zero(self, c):
        assert not boundary(boundary(c))


class TestCycles:
    @pytest.mark.parametrize("i", range(0, 11))
    def test_alpha_beta(self, i):
        for c in (alpha_cycle(i), beta_cycle(i), free_alpha_cycle(i), free_beta_cycle(i)):
            assert len(c) == 1
            assert not boundary_or_zero(c)

    @pytest.mark.parametrize("i", range(1, 11))
    def test_gamma(self, i):
        assert len(gamma_cycle(i)) == 2
        assert not boundary(gamma_cycle(i))

    def test_gamma_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            gamma_cycle(0)

    def test_non_involution_is_not_a_cycle(self):
        assert boundary(constant_cycle(y, 2))


class TestShuffle:
    @settings(max_examples=200)
    @given(st.integers(0, 4), st.integers(0, 4), st.data())
    def test_matches_brute_force(self, i, j, data):
        g = data.draw(bar_tuple(nontrivial_dihedral(), i))
        h = data.draw(bar_tuple(nontrivial_dihedral(), j))
        got = list(shuffle_tuples(g, h, D.identity))
        assert len(got) == len(set(got))
        assert set(got) == brute_shuffles(g, h, D.identity)

    def test_example_count(self):
        assert len(ez(alpha_cycle(2), beta_cycle(2))) == 6

    def test_unit(self):
        assert ez(BarChain.unit(), BarChain.unit()) == BarChain.unit()
        one = D.identity
        assert ez(alpha_cycle(1), BarChain.unit()).terms == {(Pair(x, one),)}

    @settings(max_examples=200)
    @given(chain(nontrivial_dihedral(), max_degree=3), chain(nontrivial_dihedral(), max_degree=3))
    def test_chain_map(self, c, d):
        lhs = boundary(ez(c, d))
        rhs = ez(boundary(c), d) + ez(c, boundary(d))
        assert lhs == rhs

    def test_free_product_chain_map(self):
        G = FreeProduct(3)
        c = BarChain.parse("[a|b a] + [c|a]", G)
        d = BarChain.parse("[b|c|a]", G)
        assert boundary(ez(c, d)) == ez(boundary(c), d) + ez(c, boundary(d))


def _aw_twice_left(t):
    out = []
    for front, back in aw(BarChain(len(t), frozenset({t}))).terms:
        for f1, f2 in aw(BarChain(len(front), frozenset({front}))).terms:
            out.append((f1, f2, back))
    return sorted(out)


def _aw_twice_right(t):
    out = []
    for front, back in aw(BarChain(len(t), frozenset({t}))).terms:
        for b1, b2 in aw(BarChain(len(back), frozenset({back}))).terms:
            out.append((front, b1, b2))
    return sorted(out)


class TestAlexanderWhitney:
    def test_by_hand(self):
        c = BarChain.parse("[x|y]", D)
        assert aw(c).terms == {((), (x, y)), ((x,), (y,)), ((x, y), ())}
        assert aw(c).bidegrees() == {(0, 2), (1, 1), (2, 0)}
        assert kunneth_project(aw(c), 1, 1).terms == {((x,), (y,))}

    @settings(max_examples=300)
    @given(chain(nontrivial_dihedral(), max_degree=5))
    def test_chain_map(self, c):
        assert aw(boundary(c)) == aw(c).boundary()

    @settings(max_examples=200)
    @given(st.integers(0, 5).flatmap(lambda n: bar_tuple(nontrivial_dihedral(), n)))
    def test_coassociative(self, t):
        assert _aw_twice_left(t) == _aw_twice_right(t)

    def test_bichain_of(self):
        b = bichain_of(alpha_cycle(1), beta_cycle(2))
        assert b.terms == {((x,), (yx, yx))}
        assert not b.boundary()

    @settings(max_examples=100)
    @given(chain(nontrivial_pair(), min_degree=2, max_degree=4))
    def test_over_pairs(self, c):
        assert not boundary(boundary(c))
        assert aw(boundary(c)) == aw(c).boundary()


def test_free_words_in_chains():
    G = FreeProduct(2)
    c = BarChain.from_tuples(2, [(G.parse("a b"), G.parse("b"))])
    assert boundary(c).terms == {(G.parse("b"),), (G.parse("a"),), (G.parse("a b"),)}


@settings(max_examples=100)
@given(chain(free_word(3).filter(lambda w: not w.is_identity), min_degree=2, max_degree=5))
def test_free_product_boundary_squared(c):
    assert not boundary(boundary(c))


def test_bichain_addition_cancels():
    b = aw(alpha_cycle(2))
    assert not (b + b)
    assert isinstance(b + b, BiChain)
