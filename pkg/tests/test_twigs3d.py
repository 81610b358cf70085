import pytest

from growthbound.animals import Animal
from growthbound.bounds import general_weight_formula
from growthbound.geom import Orientation, lex_key, orientation_table
from growthbound.oracle import enumerate_fixed
from growthbound.polyalg import BiPoly
from growthbound.twigs import InvalidSequenceError, sequence_weight
from growthbound.twigs3d import CONTEXT_3D, canonical_twigs_3d, decode_twigs_3d, encode_polycube, plus_l_context


def test_seventeen_twigs():
    twigs = canonical_twigs_3d()
    assert len(twigs) == 17
    whites = sorted(len(t.whites) for t in twigs)
    assert [whites.count(k) for k in range(5)] == [1, 4, 7, 4, 1]
    expected = BiPoly({(0, 1): 1, (1, 1): 4, (2, 1): 7, (3, 1): 4, (4, 1): 1})
    assert twigs.weight_sum() == expected == general_weight_formula(3)


def test_twig_cells_disjoint():
    for t in canonical_twigs_3d():
        whites = [c for c, _ in t.whites]
        assert t.root not in whites and len(set(whites)) == len(whites)
        assert not t.forbidden & ({t.root} | set(whites))


def test_plus_l_context():
    ident = plus_l_context((0, 0, 0), Orientation.identity(3))
    assert ident == CONTEXT_3D
    assert {(-1, 0, 1), (-1, 0, -1)} <= ident
    for o in orientation_table(3).elements:
        assert len(plus_l_context((2, -1, 5), o)) == 6
    assert all(lex_key(c) < (0, 0, 0) for c in CONTEXT_3D)


def test_single_cube():
    seq = encode_polycube(Animal.of([(0, 0, 0)]))
    assert len(seq) == 1
    assert canonical_twigs_3d()[seq.items[0]].whites == ()


@pytest.mark.parametrize("n", range(1, 6))
def test_round_trip_and_injectivity(n):
    seen = set()
    count = 0
    for p in enumerate_fixed(3, n):
        root = min(p.cells, key=lex_key)
        assert not plus_l_context(root, Orientation.identity(3)) & p.cells
        seq = encode_polycube(p)
        assert decode_twigs_3d(seq) == p
        assert sequence_weight(seq) == (n, n)
        seen.add(seq.items)
        count += 1
    assert len(seen) == count


def test_invalid_3d_sequence():
    leaf = next(t.name for t in canonical_twigs_3d() if not t.whites)
    with pytest.raises(InvalidSequenceError):
        decode_twigs_3d([leaf, leaf])
