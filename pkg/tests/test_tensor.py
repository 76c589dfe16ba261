import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import abelianized_dimension, dense_coinvariant_dimension, dense_is_zero
from strategies import nontrivial_dihedral, pair
from tccert.groups import DihedralGroup, Pair, project_to_y, project_to_z, to_quotient
from tccert.ring import RingElement, minus_one
from tccert.tensor import (
    CoinvariantSpace,
    DimensionCapExceeded,
    TensorElement,
    WedgeElement,
    coinvariant_reduce,
    coinvariant_space,
    diagonal_action,
    expand,
    finite_quotient,
    map_factors,
    s_element,
    s_element_nonzero,
    sorted_wedge,
    standard_generators,
    verify_witness,
    wedge3,
    wedge_project,
)

D = DihedralGroup()
one, x, y, yx = D.identity, D.x, D.y, D.parse("yx")


def tensors(arity, mod=0, span=2, max_terms=4):
    entries = nontrivial_dihedral(mod, span)
    return st.lists(
        st.lists(entries, min_size=arity, max_size=arity).map(tuple), max_size=max_terms
    ).map(lambda ts: TensorElement.from_tuples(arity, ts))


class TestTensors:
    def test_expand(self):
        t = expand([RingElement.of(yx, x), minus_one(y)])
        assert t.terms == {(yx, y), (x, y)}

    def test_identity_entries_rejected(self):
        with pytest.raises(ValueError):
            TensorElement(1, frozenset({(one,)}))
        with pytest.raises(ValueError):
            TensorElement(2, frozenset({(x,)}))

    def test_map_factors_kills_trivial_images(self):
        # x -> 1 in the first slot and yx -> 1 in the second
        t = TensorElement(2, frozenset({(x, y), (y, yx), (y, x)}))
        assert map_factors(t, [project_to_y, project_to_z]).terms == {
            (project_to_y(y), project_to_z(x))
        }
        with pytest.raises(ValueError):
            map_factors(t, [project_to_y])

    @settings(max_examples=200)
    @given(pair(), tensors(3))
    def test_diagonal_action_matches_ring_arithmetic(self, p, t):
        expected = TensorElement(3)
        for b in t.terms:
            factors = [p.left * minus_one(g) * p.right.inverse() for g in b]
            expected = expected + expand(factors)
        assert diagonal_action(p, t) == expected

    @settings(max_examples=200)
    @given(pair(), pair(), tensors(2))
    def test_diagonal_action_is_an_action(self, p, q, t):
        assert diagonal_action(p, diagonal_action(q, t)) == diagonal_action(p * q, t)

    @settings(max_examples=100)
    @given(st.integers(1, 5), pair(), tensors(2))
    def test_quotient_is_equivariant(self, m, p, t):
        q = to_quotient(m)
        pm = Pair(q(p.left), q(p.right))
        assert finite_quotient(m, diagonal_action(p, t)) == diagonal_action(pm, finite_quotient(m, t))


class TestWedges:
    def test_sorted_wedge(self):
        assert sorted_wedge([y, x, yx]) == tuple(sorted([x, y, yx]))
        assert sorted_wedge([x, y, x]) is None

    def test_wedge3_alternating(self):
        r = RingElement.of(yx, x)
        assert not wedge3(r, r, minus_one(y))
        assert wedge3(minus_one(x), minus_one(y), minus_one(yx)) == wedge3(
            minus_one(yx), minus_one(x), minus_one(y)
        )

    def test_s_element(self):
        nonzero, s = s_element_nonzero()
        assert nonzero and len(s) == 2
        assert s == {tuple(sorted([x, yx, y])), tuple(sorted([x, yx, y.inverse()]))}
        assert s_element() == s

    def test_projection(self):
        t = TensorElement(4, frozenset({(x, y, x, yx), (x, y, yx, x), (y, x, x, y)}))
        # the first two collapse to the same wedge and cancel; the third has a repeat
        assert not wedge_project(t)
        with pytest.raises(ValueError):
            wedge_project(TensorElement(3))

    def test_map_first_and_coefficient(self):
        w = WedgeElement(frozenset({(x, (x, y, yx)), (yx, (x, y, yx))}))
        assert w.map_first(project_to_y).terms == {(project_to_y(yx), (x, y, yx))}
        assert w.coefficient(x) == {(x, y, yx)}


class TestCoinvariants:
    @pytest.mark.parametrize("m", range(1, 7))
    def test_arity_one_matches_abelianization(self, m):
        assert coinvariant_space(m, 1).coinvariant_dimension == abelianized_dimension(m)

    @pytest.mark.parametrize("m, arity", [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (5, 2)])
    def test_dimension_matches_dense_oracle(self, m, arity):
        assert coinvariant_space(m, arity).coinvariant_dimension == dense_coinvariant_dimension(m, arity)

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from([(2, 2), (2, 3), (3, 2)]), st.data())
    def test_zero_test_matches_dense_oracle(self, case, data):
        m, arity = case
        t = data.draw(tensors(arity, mod=m, max_terms=6))
        assert coinvariant_reduce(t, m).is_zero == dense_is_zero(m, t)

    def test_trivial_quotient(self):
        D1 = DihedralGroup(1)
        t = TensorElement(4, frozenset({(D1.x,) * 4}))
        cls = coinvariant_reduce(t, 1)
        assert not cls.is_zero and cls.coinvariant_dimension == 1

    def test_redundant_generators_do_not_change_residue(self):
        D3 = DihedralGroup(3)
        t = TensorElement(2, frozenset({(D3.x, D3.y), (D3.y, D3.y)}))
        gens = tuple(standard_generators(3)) + (Pair(D3.y, D3.x), Pair(D3.x, D3.x))
        assert coinvariant_reduce(t, 3).residue == coinvariant_reduce(t, 3, gens).residue

    def test_cap(self):
        with pytest.raises(DimensionCapExceeded):
            CoinvariantSpace(5, 4, cap=1000)

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            CoinvariantSpace(0, 1)

    def test_witness(self):
        D2 = DihedralGroup(2)
        space = coinvariant_space(2, 2)
        nonzero = [b for b in space.basis if not space.reduce(TensorElement(2, frozenset({b}))).is_zero]
        t = TensorElement(2, frozenset({nonzero[0]}))
        w = space.dual_witness(t)
        assert w is not None and verify_witness(w, t, 2)
        assert space.dual_witness(TensorElement(2)) is None
        # a relation b + p.b pairs to zero with any invariant functional
        b = TensorElement(2, frozenset({(D2.x, D2.y)}))
        relation = b + diagonal_action(Pair(D2.y, D2.identity), b)
        assert relation and not verify_witness(w, relation, 2)

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from([2, 3, 4]), pair(span=3), tensors(2, span=3))
    def test_residue_invariant_under_action(self, m, p, t):
        moved = diagonal_action(p, t)
        assert coinvariant_reduce(moved, m).residue == coinvariant_reduce(t, m).residue

    def test_residue_is_canonical_for_infinite_input(self):
        t = TensorElement(2, frozenset({(x, y)}))
        assert coinvariant_reduce(t, 3) == coinvariant_reduce(finite_quotient(3, t), 3)

