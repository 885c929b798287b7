"""Tests for partitions, tableaux, RS insertion and signed diagrams."""

from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from aiii_steinberg.exceptions import (
    SteinbergInconsistencyError,
    SteinbergRefusalError,
    SteinbergValidationError,
)
from aiii_steinberg.tableau import (
    BijectionWord,
    Partition,
    SignedYoungDiagram,
    SkewTableau,
    StandardTableau,
    count_standard_tableaux,
    is_column_strip,
    partitions,
    rs_correspondence,
    signed_diagram_from_counts,
    standard_tableaux,
    star,
    star_product,
)


@st.composite
def partition_strategy(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return Partition(tuple(sorted(Counter(bins).values(), reverse=True)))


@st.composite
def bijection_strategy(draw, max_n=9):
    n = draw(st.integers(min_value=0, max_value=max_n))
    sources = draw(st.lists(st.integers(min_value=-20, max_value=20), min_size=n, max_size=n, unique=True))
    targets = draw(st.lists(st.integers(min_value=-20, max_value=20), min_size=n, max_size=n, unique=True))
    return BijectionWord(tuple(zip(sources, targets)))


@st.composite
def disjoint_tableaux_strategy(draw, count=3, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    values = draw(st.permutations(range(1, n + 1)))
    cuts = sorted(draw(st.lists(st.integers(min_value=0, max_value=n), min_size=count - 1, max_size=count - 1)))
    bounds = [0, *cuts, n]
    tableaux = []
    for start, stop in zip(bounds, bounds[1:]):
        chunk = values[start:stop]
        tableaux.append(rs_correspondence(BijectionWord.from_one_line(chunk))[0])
    return tableaux


def test_partition_validation():
    """Assert partitions are validated."""
    assert Partition.of(2, 1, 0).parts == (2, 1)
    with pytest.raises(SteinbergValidationError):
        Partition((1, 2))
    with pytest.raises(SteinbergValidationError):
        Partition((2, -1))


def test_partition_basics():
    """Assert size, conjugate and column counts."""
    lam = Partition((3, 1, 1))
    assert lam.size == 5
    assert lam.conjugate() == Partition((3, 1, 1))
    assert Partition((2, 1, 1, 1)).conjugate() == Partition((4, 1))
    assert lam.first_columns_count(1) == 3
    assert lam.first_columns_count(2) == 4
    assert str(lam) == "(3,1,1)"
    assert Partition().conjugate() == Partition()


def test_partitions_in_reverse_lexicographic_order():
    """Assert partitions are listed in reverse lexicographic order."""
    assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions(0) == [Partition()]
    assert [len(partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_dominance_order():
    """Assert the dominance order."""
    assert Partition((3, 1)).dominates(Partition((2, 2)))
    assert not Partition((2, 2)).dominates(Partition((3, 1)))
    assert not Partition((3, 3)).dominates(Partition((4, 1)))
    assert not Partition((3,)).dominates(Partition((2, 2)))


def test_column_strips():
    """Assert column strip detection."""
    assert is_column_strip(Partition((1,)), Partition((2, 1)))
    assert is_column_strip(Partition(), Partition((1, 1, 1)))
    assert not is_column_strip(Partition(), Partition((2,)))
    assert not is_column_strip(Partition((2,)), Partition((1, 1)))


def test_hook_length_known_values():
    """Assert known hook length counts."""
    assert count_standard_tableaux(Partition((2, 1))) == 2
    assert count_standard_tableaux(Partition((3, 2))) == 5
    assert count_standard_tableaux(Partition((2, 2, 2))) == 5
    assert count_standard_tableaux(Partition((3, 2, 1))) == 16
    assert count_standard_tableaux(Partition()) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_hook_length_counts_listed_tableaux(n):
    """The hook length formula counts the listed tableaux."""
    for shape in partitions(n):
        listed = standard_tableaux(shape)
        assert len(listed) == count_standard_tableaux(shape)
        assert len(set(listed)) == len(listed)
        assert all(t.shape == shape and t.entries == frozenset(range(1, n + 1)) for t in listed)


def test_standard_tableaux_refuses_large_shapes():
    """Assert large shapes are refused."""
    with pytest.raises(SteinbergRefusalError):
        standard_tableaux(Partition((7, 6)), bound=12)


def test_standard_tableau_validation():
    """Assert rows and columns must increase."""
    StandardTableau(((1, 3), (2,)))
    with pytest.raises(SteinbergValidationError):
        StandardTableau(((1, 2), (1,)))
    with pytest.raises(SteinbergValidationError):
        StandardTableau(((2, 1),))
    with pytest.raises(SteinbergValidationError):
        StandardTableau(((1,), (2, 3)))
    with pytest.raises(SteinbergValidationError):
        StandardTableau(((2, 3), (1, 4), (5,), (4,)))


def test_column_and_row_tableaux():
    """Assert single column and single row tableaux."""
    assert StandardTableau.column([5, 2]).rows == ((2,), (5,))
    assert StandardTableau.row([3, 1]).rows == ((1, 3),)
    assert StandardTableau.column([]) == StandardTableau()


def test_rs_known_word():
    """Assert RS on a known word."""
    insertion, recording = rs_correspondence(BijectionWord.from_one_line([5, 4, 2, 3, 1]))
    assert insertion.rows == ((1, 3), (2,), (4,), (5,))
    assert recording.rows == ((1, 4), (2,), (3,), (5,))


def test_rs_keeps_source_labels():
    """Assert the recording tableau keeps the source labels."""
    word = BijectionWord(((1, 4), (3, 2)))
    insertion, recording = rs_correspondence(word)
    assert insertion.rows == ((2,), (4,))
    assert recording.rows == ((1,), (3,))


@given(bijection_strategy())
def test_rs_shapes_and_entries(word):
    """Both RS tableaux share a shape and carry the right entries."""
    insertion, recording = rs_correspondence(word)
    assert insertion.shape == recording.shape
    assert insertion.entries == frozenset(word.word)
    assert recording.entries == frozenset(word.sources)


@given(bijection_strategy())
def test_rs_inverse_transposes_tableaux(word):
    """Inverting the bijection swaps the RS tableaux."""
    insertion, recording = rs_correspondence(word)
    inverse_insertion, inverse_recording = rs_correspondence(word.inverse())
    assert inverse_insertion == recording
    assert inverse_recording == insertion


def test_bijection_word_rejects_duplicates():
    """Assert duplicate sources or targets are rejected."""
    with pytest.raises(SteinbergValidationError):
        BijectionWord(((1, 2), (1, 3)))
    with pytest.raises(SteinbergValidationError):
        BijectionWord(((1, 2), (3, 2)))


def test_bijection_word_json():
    """Assert bijection JSON."""
    word = BijectionWord.from_mapping({3: 2, 1: 4})
    assert word.sources == (1, 3)
    assert word.word == (4, 2)
    assert word.to_json() == {"1": 4, "3": 2}
    assert str(word) == "{1->4, 3->2}"


def test_star_product_worked_example():
    """Assert a worked star product."""
    left = StandardTableau(((1, 3), (6,)))
    right = StandardTableau(((2, 4, 5), (7,)))
    assert star_product(left, right) == StandardTableau(((1, 2, 4, 5), (3, 7), (6,)))


def test_star_product_of_columns():
    """Assert star products with column tableaux."""
    assert star(StandardTableau.column([5]), StandardTableau(((2,), (4,)))).rows == ((2,), (4,), (5,))
    head = StandardTableau(((2,), (4,), (5,)))
    assert star_product(head, StandardTableau.column([1, 3])).rows == ((1, 3), (2,), (4,), (5,))


def test_star_product_with_empty_sides():
    """The empty tableau is a unit."""
    tableau = StandardTableau(((1, 2),))
    assert star_product(tableau, StandardTableau()) == tableau
    assert star_product(StandardTableau(), tableau) == tableau


def test_star_product_requires_disjoint_entries():
    """Assert overlapping entries are rejected."""
    with pytest.raises(SteinbergValidationError):
        star_product(StandardTableau(((1,),)), StandardTableau(((1, 2),)))


def test_skew_rectification():
    """Assert rectification of a small skew tableau."""
    skew = SkewTableau(inner=Partition((1,)), rows=((2,), (1,)))
    assert skew.rectify().rows == ((1, 2),)


@settings(max_examples=1000, deadline=None)
@given(disjoint_tableaux_strategy())
def test_star_product_is_associative(tableaux):
    """Assert associativity of the star product."""
    t, s, u = tableaux
    assert star_product(star_product(t, s), u) == star_product(t, star_product(s, u))


@st.composite
def split_word_strategy(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    values = draw(st.permutations(range(1, n + 1)))
    cut = draw(st.integers(min_value=0, max_value=n))
    return list(values[:cut]), list(values[cut:])


def insertion_tableau(word):
    return rs_correspondence(BijectionWord.from_one_line(word))[0]


@settings(max_examples=500)
@given(split_word_strategy())
def test_star_product_matches_insertion_of_concatenated_words(words):
    """P(u) * P(v) is the insertion tableau of the word uv."""
    u, v = words
    assert star_product(insertion_tableau(u), insertion_tableau(v)) == insertion_tableau(u + v)


@given(split_word_strategy())
def test_star_product_with_a_column_adds_a_column_strip(words):
    """Multiplying by a column tableau adds at most one box to each row."""
    u, column_entries = words
    tableau = insertion_tableau(u)
    product = star_product(tableau, StandardTableau.column(column_entries))
    assert product.size == tableau.size + len(column_entries)
    assert is_column_strip(tableau.shape, product.shape)


def test_signed_diagram_parsing_and_signature():
    """Assert parsing, signature and star of a signed diagram."""
    diagram = SignedYoungDiagram.from_strings(["+", "-+", "-", "+", "-+", "+"])
    assert diagram.row_strings() == ["-+", "-+", "+", "+", "+", "-"]
    assert diagram.signature == (5, 3)
    assert diagram.shape == Partition((2, 2, 1, 1, 1, 1))
    assert diagram.star().row_strings() == ["+-", "+-", "+", "-", "-", "-"]
    assert diagram.star().signature == (3, 5)


@pytest.mark.parametrize("rows", [[""], ["++"], ["+x"]])
def test_signed_diagram_rejects_bad_rows(rows):
    """Assert empty, non-alternating or foreign rows are rejected."""
    with pytest.raises(SteinbergValidationError):
        SignedYoungDiagram.from_strings(rows)


def test_signed_diagram_column_counts():
    """Assert cumulative column sign counts."""
    diagram = SignedYoungDiagram.from_strings(["-+", "-+", "+", "+", "+", "-"])
    assert diagram.column_counts(4) == ([3, 5, 5, 5], [3, 3, 3, 3])


def test_signed_diagram_from_counts():
    """Assert a diagram is rebuilt from its counts."""
    diagram = signed_diagram_from_counts([3, 5, 5, 5], [3, 3, 3, 3], signature=(5, 3))
    assert diagram.row_strings() == ["-+", "-+", "+", "+", "+", "-"]


def test_signed_diagram_from_counts_rejects_inconsistent_counts():
    """Assert counts of no signed diagram are rejected."""
    with pytest.raises(SteinbergInconsistencyError):
        signed_diagram_from_counts([1, 1], [0, 1], signature=(2, 1))
    with pytest.raises(SteinbergInconsistencyError):
        signed_diagram_from_counts([0, 2], [0, 0])
    with pytest.raises(SteinbergInconsistencyError):
        signed_diagram_from_counts([2], [0, 0])


@pytest.mark.parametrize(
    ("plus_cum", "minus_cum"),
    [([1, 3], [0, 0]), ([1, 2, 4], [1, 1, 1]), ([0, 1], [1, 2])],
)
def test_signed_diagram_from_counts_rejects_growing_columns(plus_cum, minus_cum):
    """Column heights that increase from left to right are refused."""
    with pytest.raises(SteinbergInconsistencyError):
        signed_diagram_from_counts(plus_cum, minus_cum)


@st.composite
def signed_diagram_strategy(draw):
    rows = draw(
        st.lists(
            st.tuples(st.integers(min_value=1, max_value=5), st.sampled_from(["+", "-"])),
            max_size=6,
        )
    )
    return SignedYoungDiagram(tuple(rows))


@given(signed_diagram_strategy())
def test_signed_diagram_counts_round_trip(diagram):
    """Counts rebuild the diagram."""
    columns = max((length for length, _ in diagram.rows), default=0) + 1
    plus_cum, minus_cum = diagram.column_counts(columns)
    assert signed_diagram_from_counts(plus_cum, minus_cum, signature=diagram.signature) == diagram
    assert diagram.star().star() == diagram
