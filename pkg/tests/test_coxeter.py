import itertools

from quiverhecke.coxeter import (
    Permutation,
    is_reduced,
    poincare_polynomial,
    poincare_product_form,
    segments_of_canonical_word,
)
from quiverhecke.laurent import Laurent


def brute_force_length(w):
    """Shortest word length by BFS over generator multiplication."""
    n = w.n
    frontier = {Permutation.identity(n)}
    seen = set(frontier)
    depth = 0
    while True:
        if w in frontier:
            return depth
        depth += 1
        nxt = set()
        for u in frontier:
            for i in range(1, n):
                v = u * Permutation.simple(i, n)
                if v not in seen:
                    seen.add(v)
                    nxt.add(v)
        frontier = nxt


def test_length_is_inversion_count():
    for n in (2, 3, 4):
        for w in Permutation.all(n):
            assert w.length() == brute_force_length(w)


def test_composition_convention():
    # (v*w)(i) = v(w(i))
    v = Permutation([2, 3, 1])
    w = Permutation([1, 3, 2])
    vw = v * w
    for i in (1, 2, 3):
        assert vw(i) == v(w(i))


def test_canonical_word_round_trip():
    for n in (2, 3, 4, 5):
        for w in Permutation.all(n):
            word = w.canonical_word()
            assert len(word) == w.length()
            assert Permutation.from_word(word, n) == w


def test_canonical_word_segment_shape():
    # segments are ascending consecutive runs with strictly decreasing tops
    for n in (3, 4, 5):
        for w in Permutation.all(n):
            segs = segments_of_canonical_word(w.canonical_word())
            tops = [s[-1] for s in segs]
            assert tops == sorted(tops, reverse=True)
            for s in segs:
                assert list(s) == list(range(s[0], s[-1] + 1))


def test_longest_element():
    for n in (2, 3, 4, 5, 6):
        w0 = Permutation.longest(n)
        assert w0.length() == n * (n - 1) // 2
        for w in Permutation.all(n) if n <= 4 else []:
            assert (w0 * w.inverse()).length() == w0.length() - w.length()


def test_longest_element_canonical_word_s3():
    assert Permutation.longest(3).canonical_word() == (1, 2, 1)


def test_inverse_and_identity():
    for w in Permutation.all(4):
        assert (w * w.inverse()).is_identity()
        assert (w.inverse() * w).is_identity()


def test_is_reduced():
    assert is_reduced((1, 2, 1), 3)
    assert not is_reduced((1, 1), 3)
    assert is_reduced((2, 1, 2), 3)


def test_poincare_polynomial_matches_product_form():
    for n in range(1, 7):
        assert poincare_polynomial(n) == poincare_product_form(n)


def test_poincare_small_values():
    assert poincare_polynomial(2) == Laurent({0: 1, 1: 1})
    assert poincare_polynomial(3) == Laurent({0: 1, 1: 2, 2: 2, 3: 1})


def test_act_on_list():
    w = Permutation([2, 3, 1])
    assert w.act_on_list(("a", "b", "c")) == ("c", "a", "b")
    # action is compatible with composition
    v = Permutation([1, 3, 2])
    seq = ("p", "q", "r")
    assert (v * w).act_on_list(seq) == v.act_on_list(w.act_on_list(seq))


def test_act_on_list_simple_swap():
    s1 = Permutation.simple(1, 3)
    assert s1.act_on_list((10, 20, 30)) == (20, 10, 30)
