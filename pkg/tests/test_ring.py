import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import dihedral
from tccert.groups import DihedralGroup, ParseError, project_to_z
from tccert.ring import RingElement, minus_one, xor_support

D = DihedralGroup()
ring = st.lists(dihedral(span=3), max_size=5).map(lambda gs: RingElement.of(*gs))


def test_xor_support_counts_mod_two():
    assert xor_support([1, 2, 1, 3, 3, 3]) == {2, 3}


def test_parse_and_signs():
    r = RingElement.parse("yx - x", D)
    assert r == RingElement.parse("x + yx", D) == RingElement.parse("-x + yx", D)
    assert RingElement.parse("y^-1 - 1", D) == minus_one(D.y.inverse())
    assert RingElement.parse("x + x", D) == RingElement.zero()
    with pytest.raises(ParseError):
        RingElement.parse("x + + y", D)


def test_basis_coordinates():
    r = RingElement.parse("yx - x", D)
    # (yx - 1) + (x - 1)
    assert r.basis_coordinates() == {D.parse("yx"), D.x}
    assert minus_one(D.y).basis_coordinates() == {D.y}
    with pytest.raises(ValueError):
        RingElement.of(D.x).basis_coordinates()


@settings(max_examples=200)
@given(ring, ring, ring)
def test_ring_axioms(r, s, t):
    assert (r * s) * t == r * (s * t)
    assert r * (s + t) == r * s + r * t
    assert (r + s) * t == r * t + s * t
    assert r + r == RingElement.zero()


@settings(max_examples=200)
@given(ring, ring)
def test_augmentation_and_maps_are_ring_maps(r, s):
    assert (r * s).augmentation() == (r.augmentation() * s.augmentation()) % 2
    assert (r * s).map(project_to_z) == r.map(project_to_z) * s.map(project_to_z)


@settings(max_examples=200)
@given(ring, dihedral(), dihedral(), dihedral())
def test_biaction(r, a, b, g):
    assert r.biaction(a, b) == a * r * b.inverse()
    assert (r * g).biaction(a, b) == a * r * g * b.inverse()
