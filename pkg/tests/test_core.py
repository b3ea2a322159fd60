import json
from collections import Counter, deque

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from coxeter_excess.core import (
    CoxeterMatrix,
    Element,
    build_group,
    element_from_word,
    format_word,
    inverse,
    inversion_set,
    length,
    longest_element,
    multiply,
    parse_word,
    reduced_word,
)
from coxeter_excess.errors import BadLetter, InvalidMatrix, NonFiniteGroup
from coxeter_excess.typea import cycles, from_cycles, root_index
from coxeter_excess.types import group_of_type, load_matrix, type_matrix

from conftest import CI_TYPES
from oracles import DEGREES, poincare


def test_a3_roots_and_order(A3):
    assert A3.num_positive_roots == 6
    assert A3.order == 24


def test_rank_one():
    g = build_group([[1]])
    assert (g.num_positive_roots, g.order) == (1, 2)


def test_affine_a2_rejected():
    with pytest.raises(NonFiniteGroup):
        build_group([[1, 3, 3], [3, 1, 3], [3, 3, 1]], root_cap=500)


@pytest.mark.parametrize("rows", [
    [[1, 3], [2, 1]],          # not symmetric
    [[2, 3], [3, 1]],          # bad diagonal
    [[1, 1], [1, 1]],          # off-diagonal < 2
    [[1, 3, 2], [3, 1]],       # ragged
    [[1, float("inf")], [float("inf"), 1]],
    [[1, None], [None, 1]],
    [[1, 2.5], [2.5, 1]],
    [],
])
def test_invalid_matrices(rows):
    with pytest.raises(InvalidMatrix):
        CoxeterMatrix.from_rows(rows)


def test_matrix_json_round_trip(tmp_path):
    m = type_matrix("B3")
    path = tmp_path / "b3.json"
    path.write_text(json.dumps(m.to_json()))
    assert load_matrix(path) == m
    path.write_text(json.dumps({"rank": 2, "m": [[1, 3, 2], [3, 1, 3], [2, 3, 1]]}))
    with pytest.raises(InvalidMatrix):
        load_matrix(path)


@pytest.mark.parametrize("symbol", sorted(DEGREES))
def test_order_roots_and_length_generating_function(symbol):
    # independent check: the length histogram must be the product of q-integers [d_i]
    g = group_of_type(symbol)
    degrees = DEGREES[symbol]
    assert g.order == int(np.prod(degrees))
    assert g.num_positive_roots == sum(d - 1 for d in degrees)
    hist = Counter(w.length for w in g.elements)
    assert [hist[k] for k in range(g.num_positive_roots + 1)] == poincare(degrees)


@pytest.mark.parametrize("symbol", ["A3", "B3", "H3", "I2(7)", "D4"])
def test_length_equals_cayley_distance(symbol):
    # breadth-first search over right multiplication gives word length directly
    g = group_of_type(symbol)
    dist = {g.identity: 0}
    queue = deque([g.identity])
    while queue:
        w = queue.popleft()
        for s in g.generators:
            u = w * s
            if u not in dist:
                dist[u] = dist[w] + 1
                queue.append(u)
    assert len(dist) == g.order
    assert all(length(g, w) == d for w, d in dist.items())


@pytest.mark.parametrize("symbol", CI_TYPES)
def test_form_preserved_on_simple_roots(symbol):
    g = group_of_type(symbol)
    B = g.bilinear_form
    for r in range(g.rank):
        S = np.eye(g.rank)
        S[r] -= 2 * B[r]
        for i in range(g.rank):
            for j in range(g.rank):
                assert abs(S[:, i] @ B @ S[:, j] - B[i, j]) < 1e-9


@pytest.mark.parametrize("symbol", CI_TYPES)
def test_roots_have_one_sign(symbol):
    g = group_of_type(symbol)
    assert np.all(g.roots >= -1e-9)
    assert np.all(g.roots.sum(axis=1) > 0.5)


def test_element_from_word(A3):
    assert element_from_word(A3, []) == A3.identity
    assert element_from_word(A3, "") == A3.identity
    assert cycles(A3, element_from_word(A3, [1, 2, 3])) == "(1234)"
    A2 = group_of_type("A2")
    assert A2.element([1, 2, 1]) == A2.element([2, 1, 2])


@pytest.mark.parametrize("word", [[4], [0], [1, -2], ["1"]])
def test_bad_letter(A3, word):
    with pytest.raises(BadLetter):
        A3.element(word)


def test_parse_and_format_word():
    assert parse_word("1 2 3") == (1, 2, 3)
    assert parse_word("1,2, 3") == (1, 2, 3)
    assert parse_word("  ") == ()
    assert format_word((3, 1)) == "3 1"
    with pytest.raises(BadLetter):
        parse_word("1 x")


def test_multiply(A3):
    for s in A3.generators:
        assert multiply(A3, s, s) == A3.identity
    a, b = from_cycles(A3, "(12)(34)"), from_cycles(A3, "(13)")
    assert multiply(A3, multiply(A3, a, b), inverse(A3, b)) == a
    # Table 1 reads products left to right; composed as functions this is (12)(34) o (24)
    assert multiply(A3, from_cycles(A3, "(12)(34)"), from_cycles(A3, "(24)")) == from_cycles(A3, "(1234)")


def test_inverse(A3):
    assert inverse(A3, A3.identity) == A3.identity
    for s in A3.generators:
        assert inverse(A3, s) == s
    w = from_cycles(A3, "(1234)")
    assert cycles(A3, inverse(A3, w)) == "(1432)"
    assert length(A3, inverse(A3, w)) == length(A3, w) == 3


def test_inversion_set(A3):
    assert inversion_set(A3, A3.identity) == frozenset()
    for r, s in enumerate(A3.generators):
        assert inversion_set(A3, s) == {r}
    w = from_cycles(A3, "(1234)")
    assert inversion_set(A3, w) == {root_index(A3, i, 4) for i in (1, 2, 3)}


def test_lengths_from_table_1(A3):
    assert length(A3, from_cycles(A3, "(13)")) == 3
    assert length(A3, from_cycles(A3, "(14)(23)")) == 6
    assert length(A3, from_cycles(A3, "(24)")) == 3
    assert length(A3, from_cycles(A3, "(12)(34)")) == 2
    assert length(A3, A3.identity) == 0


def test_reduced_word(A3):
    assert reduced_word(A3, A3.identity) == ()
    w = A3.element("1 2 3")
    assert reduced_word(A3, w) == (1, 2, 3)
    t13 = from_cycles(A3, "(13)")
    word = reduced_word(A3, t13)
    assert len(word) == 3 and A3.element(word) == t13
    assert word == (1, 2, 1)  # smallest descent stripped first, from the right


def test_longest_element():
    A1 = group_of_type("A1")
    assert longest_element(A1) == A1.generators[0]
    A3 = group_of_type("A3")
    assert cycles(A3, longest_element(A3)) == "(14)(23)"
    assert longest_element(group_of_type("B2")).length == 4


def test_element_pickles(A3):
    import pickle

    w = A3.element("1 2 3")
    assert pickle.loads(pickle.dumps(w)) == w


# -- properties over sampled elements -------------------------------------------

PROPERTY_TYPES = ["A4", "B3", "D4", "F4", "H3", "I2(8)"]


def elements_of(symbol):
    return st.sampled_from(group_of_type(symbol).elements)


@pytest.mark.parametrize("symbol", PROPERTY_TYPES)
def test_product_length_formula(symbol):
    g = group_of_type(symbol)

    @settings(max_examples=300, deadline=None)
    @given(elements_of(symbol), elements_of(symbol))
    def check(a, b):
        b_inv = b.inverse()
        assert (a * b).length == a.length + b.length - 2 * len(a.inversions() & b_inv.inversions())
        # N(ab) = (N(b) \ -b^-1 N(a)) u b^-1 (N(a) \ N(b^-1)), computed via the action on signed indices
        minus = {~b_inv.act(i) for i in a.inversions() if b_inv.act(i) < 0}
        plus = {b_inv.act(i) for i in a.inversions() - b_inv.inversions()}
        assert (a * b).inversions() == (b.inversions() - minus) | plus

    check()


@pytest.mark.parametrize("symbol", PROPERTY_TYPES)
def test_word_and_inverse_properties(symbol):
    g = group_of_type(symbol)

    @settings(max_examples=200, deadline=None)
    @given(elements_of(symbol), elements_of(symbol), elements_of(symbol))
    def check(a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * g.identity == a == g.identity * a
        assert a * a.inverse() == g.identity
        assert a.inverse().length == a.length
        word = g.reduced_word(a)
        assert len(word) == a.length and g.element(word) == a
        assert (a * g.longest).length == g.longest.length - a.length

    check()


@pytest.mark.parametrize("symbol", PROPERTY_TYPES)
def test_two_sided_descent(symbol):
    g = group_of_type(symbol)
    for w in g.elements:
        for r, s in enumerate(g.generators):
            if (s * w).length < w.length and (w * s).length < w.length:
                u = s * w * s
                assert u == w or u.length == w.length - 2


def test_descent_criterion(group):
    # l(w r) < l(w) iff alpha_r in N(w)
    g = group("F4")
    for w in g.elements:
        for r, s in enumerate(g.generators):
            assert ((w * s).length < w.length) == (r in w.inversions())


def test_element_bijection_invariant(group):
    g = group("H3")
    for w in g.elements:
        assert sorted(s if s >= 0 else ~s for s in w.images) == list(range(g.num_positive_roots))


def test_type_symbols():
    assert type_matrix("a5") == type_matrix("A_5")
    assert type_matrix("I2(7)").entries == ((1, 7), (7, 1))
    d4 = type_matrix("D4").entries
    assert d4[1][2] == d4[1][3] == 3 and d4[2][3] == 2
    for bad in ["A0", "F5", "H5", "I3(4)", "E6", "B1", "I2"]:
        with pytest.raises(InvalidMatrix):
            type_matrix(bad)


def test_repr(A3):
    assert "order 24" in repr(A3)
    assert isinstance(repr(A3.identity), str)
    assert Element([0]) != "x"
