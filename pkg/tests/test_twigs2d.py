import pytest

from growthbound.animals import Animal, InvalidAnimalError, format_animal, parse_animal
from growthbound.bounds import general_weight_formula
from growthbound.formats import ten_cell_polyomino_text
from growthbound.geom import Orientation, lex_key
from growthbound.oracle import enumerate_fixed
from growthbound.polyalg import BiPoly
from growthbound.twigs import InvalidSequenceError, Monomial, TwigSequence, sequence_weight
from growthbound.twigs2d import (
    canonical_twigs_2d,
    decode_eden,
    decode_twigs,
    encode_eden,
    encode_polyomino,
    l_context,
)

TEN_CELL = ("L5", "L4", "L3", "L5", "L1", "L1", "L2", "L1", "L4", "L1")


def test_canonical_set():
    twigs = canonical_twigs_2d()
    assert [t.name for t in twigs] == ["L1", "L2", "L3", "L4", "L5"]
    assert [t.weight for t in twigs] == [(0, 1), (1, 1), (2, 1), (1, 1), (2, 1)]
    assert twigs.weight_sum() == BiPoly({(0, 1): 1, (1, 1): 2, (2, 1): 2})
    assert twigs.weight_sum() == general_weight_formula(2)
    assert twigs.weight_sum().evaluate(1, 1) == 5


def test_twig_cells_disjoint():
    for t in canonical_twigs_2d():
        whites = [c for c, _ in t.whites]
        assert t.root not in whites and len(set(whites)) == len(whites)
        assert not t.forbidden & ({t.root} | set(whites))


def test_small_encodings():
    assert encode_polyomino(Animal.of([(0, 0)])).items == ("L1",)
    seq = encode_polyomino(Animal.of([(0, 0), (0, 1)]))
    assert len(seq) == 2 and seq.items[1] == "L1"
    assert sequence_weight(seq) == (2, 2)
    assert decode_twigs(seq) == Animal.of([(0, 0), (0, 1)])


def test_ten_cell_sequence_round_trip():
    p = decode_twigs(TEN_CELL)
    assert len(p) == 10
    assert encode_polyomino(p).items == TEN_CELL
    assert sequence_weight(TwigSequence(2, TEN_CELL)) == (10, 10)
    assert parse_animal(ten_cell_polyomino_text()) == p


def test_sequence_weight_edges():
    assert sequence_weight(TwigSequence(2, ())) == Monomial(1, 0)
    assert sequence_weight(TwigSequence(2, ("L1",))) == Monomial(1, 1)


@pytest.mark.parametrize(
    "seq,step",
    [(("L1", "L1"), 1), (("L2",), 1), (("L2", "L2"), 2), (("L9",), 0)],
)
def test_invalid_sequences(seq, step):
    with pytest.raises(InvalidSequenceError) as err:
        decode_twigs(seq)
    assert err.value.step == step


def test_overlap_and_forbidden_are_reported():
    with pytest.raises(InvalidSequenceError, match="occupied") as err:
        decode_twigs(("L3", "L2", "L4", "L4"))
    assert err.value.step == 3
    with pytest.raises(InvalidSequenceError, match="forbidden"):
        decode_twigs(("L3", "L2", "L1", "L4"))


@pytest.mark.parametrize("n", range(1, 9))
def test_round_trip_and_injectivity(n):
    seen = set()
    count = 0
    for p in enumerate_fixed(2, n):
        seq = encode_polyomino(p)  # raises unless exactly one twig matches at every step
        assert len(seq) == n
        assert decode_twigs(seq) == p
        assert sequence_weight(seq) == (n, n)
        seen.add(seq.items)
        count += 1
    assert len(seen) == count


@pytest.mark.parametrize("n", range(1, 9))
def test_root_context_is_empty(n):
    for p in enumerate_fixed(2, n):
        root = min(p.cells, key=lex_key)
        assert not l_context(root, Orientation.identity(2)) & p.cells


def test_eden_examples():
    assert encode_eden(Animal.of([(0, 0)])) == "00"
    for p in enumerate_fixed(2, 2):
        bits = encode_eden(p)
        assert len(bits) == 5 and bits.count("1") == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_eden_exhaustive(n):
    seen = set()
    for p in enumerate_fixed(2, n):
        bits = encode_eden(p)
        assert len(bits) == 3 * n - 1
        assert bits.count("1") == n - 1
        assert decode_eden(bits) == p
        seen.add(bits)
    assert len(seen) == sum(1 for _ in enumerate_fixed(2, n))


def test_invalid_animals():
    with pytest.raises(InvalidAnimalError):
        Animal.of([(0, 0), (2, 0)])
    with pytest.raises(InvalidAnimalError):
        Animal.of([])
    with pytest.raises(InvalidAnimalError):
        parse_animal("0 0\n0 x\n")


def test_animal_text_format():
    p = parse_animal("# a tromino\n5 5\n6 5\n6 6\n")
    assert p == Animal.of([(0, 0), (1, 0), (1, 1)])
    assert format_animal(p) == "0 0\n1 0\n1 1\n"
