"""Tests for the symmetrized and exotic Steinberg maps."""

from collections import Counter

import pytest

from aiii_steinberg.exceptions import SteinbergValidationError
from aiii_steinberg.orbit import dual, enumerate_parameters
from aiii_steinberg.steinberg import (
    KTypePair,
    phi_k,
    phi_s,
    phi_s_column_counts,
    star_identity_tableaux,
    steinberg_json,
    wk_permutations,
    ws_bijections,
    ws_shapes,
)
from aiii_steinberg.tableau import Partition, SignedYoungDiagram, signed_diagram_from_counts

STAR_SIZES = [(p, q, r) for p in range(5) for q in range(5) for r in range(p + q + 1)]


def _pair(lam, mu):
    return KTypePair(Partition(lam), Partition(mu))


def test_example_permutations(example_omega, example_data):
    """Assert the bijections of the worked example."""
    wk_plus, wk_minus = wk_permutations(example_omega)
    assert list(wk_plus.word) == example_data["wkPlus"]
    assert list(wk_minus.word) == example_data["wkMinus"]
    ws_plus, ws_minus = ws_bijections(example_omega)
    assert ws_plus.to_json() == example_data["wsPlus"]
    assert ws_minus.to_json() == example_data["wsMinus"]


def test_example_images(example_omega, example_data):
    """Assert both images of the worked example."""
    target = phi_k(example_omega)
    assert target.to_json() == {"lambda": example_data["lambda"], "mu": example_data["mu"]}
    assert [shape.to_json() for shape in ws_shapes(example_omega)] == example_data["wsShapes"]
    assert phi_s(example_omega).to_json() == example_data["Lambda"]
    assert phi_s_column_counts(example_omega) == ([3, 5, 5, 5], [3, 3, 3, 3])


def test_steinberg_json(example_omega, example_data):
    """Assert the Steinberg payload of the worked example."""
    assert steinberg_json(example_omega) == {
        "omega": example_data["omega"],
        "lambda": example_data["lambda"],
        "mu": example_data["mu"],
        "Lambda": example_data["Lambda"],
    }


def test_k_type_pair():
    """Assert K-type pair validation."""
    pair = KTypePair((2, 1), (1,))
    assert pair.lam == Partition((2, 1))
    assert pair.swapped() == _pair((1,), (2, 1))
    assert str(pair) == "(2,1),(1)"
    pair.check_sizes(3, 1)
    with pytest.raises(SteinbergValidationError):
        pair.check_sizes(2, 2)


def test_multisets_222(enumeration_222):
    """Assert the image multisets for (2, 2, 2)."""
    targets = Counter(phi_k(omega) for omega in enumeration_222)
    assert targets == {
        _pair((1, 1), (1, 1)): 6,
        _pair((2,), (2,)): 4,
        _pair((1, 1), (2,)): 3,
        _pair((2,), (1, 1)): 3,
    }
    signed = Counter(tuple(phi_s(omega).row_strings()) for omega in enumeration_222)
    expected = {
        ("+", "+", "-", "-"): 1,
        ("+-", "+", "-"): 3,
        ("-+", "+", "-"): 3,
        ("+-", "-+"): 5,
        ("+-", "+-"): 2,
        ("-+", "-+"): 2,
    }
    assert signed == expected


@pytest.mark.parametrize(("p", "q"), [(2, 2), (3, 1), (1, 3), (4, 2)])
def test_degenerate_images(p, q):
    """Assert the images at r = 0 and r = p + q."""
    for r in (0, p + q):
        (omega,) = enumerate_parameters(p, q, r)
        assert phi_k(omega) == _pair((1,) * p, (1,) * q)
        diagram = phi_s(omega)
        assert diagram.shape == Partition((1,) * (p + q))
        assert diagram == SignedYoungDiagram(((1, "+"),) * p + ((1, "-"),) * q)


@pytest.mark.parametrize(("p", "q", "r"), STAR_SIZES)
def test_star_product_identities(p, q, r):
    """Assert the star product identities on every small parameter."""
    for omega in enumerate_parameters(p, q, r):
        for product, insertion in star_identity_tableaux(omega):
            assert product == insertion


@pytest.mark.parametrize(("p", "q", "r"), [(2, 2, 2), (3, 2, 2), (3, 3, 3), (2, 3, 1)])
def test_images_have_right_sizes_and_swap_under_duality(p, q, r):
    """Assert sizes and duality of the images."""
    for omega in enumerate_parameters(p, q, r):
        target = phi_k(omega)
        target.check_sizes(p, q)
        diagram = phi_s(omega)
        assert diagram.signature == (p, q)
        mirrored = dual(omega)
        assert phi_k(mirrored) == target.swapped()
        assert phi_s(mirrored) == diagram.star()


@pytest.mark.parametrize(("p", "q", "r"), [(2, 2, 2), (3, 2, 2), (3, 3, 3)])
def test_exotic_bijections_determine_the_parameter(p, q, r):
    """The exotic bijections are injective."""
    graphs = enumerate_parameters(p, q, r)
    assert len({ws_bijections(omega) for omega in graphs}) == len(graphs)


@pytest.mark.parametrize(("p", "q", "r"), [(2, 2, 2), (3, 2, 2), (3, 3, 2)])
def test_exotic_image_refines_the_symmetrized_image(p, q, r):
    """Assert the exotic image refines the symmetrized one."""
    # Even columns of the signed diagram count the first c columns of lambda and mu.
    for omega in enumerate_parameters(p, q, r):
        target = phi_k(omega)
        diagram = phi_s(omega)
        columns = max(diagram.shape.part(0), 1) + 1
        plus_cum, minus_cum = diagram.column_counts(columns)
        for c in range(2, columns + 1, 2):
            assert plus_cum[c - 1] == target.lam.first_columns_count(c)
            assert minus_cum[c - 1] == target.mu.first_columns_count(c)


@pytest.mark.parametrize(("p", "q"), [(p, q) for p in range(4) for q in range(4)])
def test_exotic_column_counts_round_trip(p, q):
    """The exotic column counts rebuild the exotic image and have weakly decreasing heights."""
    for r in range(p + q + 1):
        for omega in enumerate_parameters(p, q, r):
            plus_cum, minus_cum = phi_s_column_counts(omega)
            diagram = phi_s(omega)
            assert signed_diagram_from_counts(plus_cum, minus_cum, signature=(p, q)) == diagram
            assert diagram.column_counts(len(plus_cum)) == (list(plus_cum), list(minus_cum))
            totals = [0] + [a + b for a, b in zip(plus_cum, minus_cum, strict=True)]
            heights = [totals[c + 1] - totals[c] for c in range(len(plus_cum))]
            assert heights == sorted(heights, reverse=True)
