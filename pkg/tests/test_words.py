import pytest
from hypothesis import given, strategies as st

from geodetic import (
    Alphabet,
    WordEquationError,
    commuting_common_root,
    format_word,
    free_reduce,
    parse_word,
    primed_alphabet,
    primitive_root,
    solve_zx_eq_yz,
)
from geodetic.words import EMPTY_WORD, factors_of_length, is_factor

from oracles import brute_primitive_root

ab_words = st.lists(st.sampled_from("ab"), min_size=0, max_size=12).map(tuple)


def test_parse_and_format():
    assert parse_word("") == ()
    assert parse_word("λ") == ()
    assert parse_word("ab'a") == ("a", "b'", "a")
    assert format_word(()) == "λ"
    assert format_word(("a", "b'", "a")) == "ab'a"


def test_parse_with_alphabet_longest_match():
    alpha = Alphabet(frozenset({"a1", "a3", "a13"}), {"a1": "a3", "a3": "a1", "a13": "a13"})
    assert parse_word("a13a1", alpha) == ("a13", "a1")
    with pytest.raises(ValueError):
        parse_word("a2", alpha)


def test_alphabet_requires_involution():
    with pytest.raises(ValueError):
        Alphabet(frozenset({"a", "b"}), {"a": "b", "b": "a'"})


def test_primed_alphabet():
    alpha = primed_alphabet(["a", "b"])
    assert alpha.inv("a") == "a'"
    assert alpha.inv("b'") == "b"


@given(st.lists(st.sampled_from("ab"), min_size=1, max_size=12).map(tuple))
def test_primitive_root_matches_divisor_scan(w):
    assert primitive_root(w) == brute_primitive_root(w)


def test_primitive_root_knowns():
    assert primitive_root(("a", "b", "a", "b")) == (("a", "b"), 2)
    assert primitive_root(("a",) * 5) == (("a",), 5)
    assert primitive_root(("a", "b", "a")) == (("a", "b", "a"), 1)
    with pytest.raises(ValueError):
        primitive_root(())


@given(ab_words, ab_words, st.integers(0, 4))
def test_solve_round_trip(s, t, q):
    x = s + t
    if not x:
        return
    y = t + s
    z = (t + s) * q + t
    sol = solve_zx_eq_yz(x, y, z)
    assert sol.x == x and sol.y == y and sol.z == z
    assert z + x == y + z


def test_solve_canonical_witness():
    sol = solve_zx_eq_yz(("a", "b"), ("b", "a"), ("b", "a", "b", "a", "b"))
    assert sol.q == 2 and sol.t == ("b",) and sol.s == ("a",)


def test_solve_rejects_non_solutions():
    with pytest.raises(WordEquationError):
        solve_zx_eq_yz(("a", "b"), ("a", "b"), ("a",))
    with pytest.raises(ValueError):
        solve_zx_eq_yz((), ("a",), ("a",))


def test_commuting_common_root():
    assert commuting_common_root(("a", "b", "a", "b"), ("a", "b")) == ("a", "b")
    assert commuting_common_root(("a", "a"), ("a", "a", "a")) == ("a",)
    with pytest.raises(WordEquationError):
        commuting_common_root(("a", "b"), ("b", "a"))
    with pytest.raises(ValueError):
        commuting_common_root((), ("a",))


@given(ab_words, st.integers(1, 3), st.integers(1, 3))
def test_common_root_on_generated_powers(u, i, j):
    if not u:
        return
    x, y = u * i, u * j
    root = commuting_common_root(x, y)
    assert x == root * (len(x) // len(root))
    assert y == root * (len(y) // len(root))


def test_free_reduce():
    alpha = primed_alphabet(["a", "b"])
    assert free_reduce(("a", "a'"), alpha) == ()
    assert free_reduce(("a", "b", "b'", "a'"), alpha) == ()
    assert free_reduce(("a", "b", "a"), alpha) == ("a", "b", "a")
    with pytest.raises(ValueError):
        free_reduce(("c",), alpha)


@given(st.lists(st.sampled_from(["a", "a'", "b", "b'"]), max_size=20).map(tuple))
def test_free_reduce_idempotent_and_parity(w):
    alpha = primed_alphabet(["a", "b"])
    r = free_reduce(w, alpha)
    assert free_reduce(r, alpha) == r
    assert (len(w) - len(r)) % 2 == 0


def test_factors():
    w = ("a", "b", "a")
    assert is_factor(EMPTY_WORD, w)
    assert is_factor(("b", "a"), w)
    assert not is_factor(("a", "a"), w)
    assert factors_of_length(w, 2) == {("a", "b"), ("b", "a")}
    assert factors_of_length(w, 0) == {EMPTY_WORD}
    assert factors_of_length(w, 5) == set()
