import itertools
import json
from math import comb

import pytest

from oracles import bfs_word_lengths, grassmann_elements
from typeb_bruhat.errors import ValidationError
from typeb_bruhat.grassmannian import (
    GrassmannPerm,
    dual,
    dual_by_product,
    enumerate_grassmannian,
    from_blocks,
    from_signed,
    identity_element,
    is_grassmannian,
    is_palindromic,
    length_grass,
    longest_element,
    longest_length,
    minimal_coset_representative,
    partition_pair,
    quotient_size,
    rank_generating_function,
    to_signed,
)
from typeb_bruhat.signed_perm import (
    SignedPermutation,
    all_signed_permutations,
    apply_simple,
    identity,
    length_full,
)

RUNNING = from_blocks(8, 3, (2, 5, 6), (1, 4, 7, 8), (3,))
SMALL = [(n, k) for n in range(1, 7) for k in range(n + 1)]


def test_running_example_blocks():
    assert RUNNING.entries == (2, 5, 6, -8, -7, -4, -1, 3)
    assert RUNNING.oneline == "2 5 6 | -8 -7 -4 -1 3"
    assert RUNNING.r == 4


def test_k_equals_n_is_identity():
    g = from_blocks(3, 3, (1, 2, 3), (), ())
    assert to_signed(g) == identity(3)
    assert list(enumerate_grassmannian(3, 3)) == [g]


@pytest.mark.parametrize(
    "blocks, needle",
    [
        ((2, 1, (1,), (1,), ()), "more than one block"),
        ((3, 1, (1,), (3, 2), ()), "strictly increasing"),
        ((3, 1, (1, 2), (3,), ()), "expected k=1"),
        ((3, 1, (1,), (2,), ()), "do not add up"),
        ((3, 1, (1,), (4,), (2,)), "outside"),
    ],
)
def test_from_blocks_rejects(blocks, needle):
    with pytest.raises(ValidationError, match=needle):
        from_blocks(*blocks)


def test_to_signed_examples():
    assert to_signed(RUNNING).entries == (2, 5, 6, -8, -7, -4, -1, 3)
    assert to_signed(identity_element(5, 2)) == identity(5)
    assert to_signed(from_blocks(4, 2, (1, 2), (3, 4), ())).entries == (1, 2, -4, -3)
    assert from_blocks(4, 2, (1, 2), (3, 4), ()) == longest_element(4, 2)


def test_is_grassmannian_examples():
    assert is_grassmannian(to_signed(RUNNING), 3)
    for k in range(5):
        assert is_grassmannian(identity(4), k)
    assert not is_grassmannian(SignedPermutation((3, 2, 1)), 1)
    with pytest.raises(ValidationError, match="increasing"):
        from_signed(SignedPermutation((3, 2, 1)), 1)
    with pytest.raises(ValidationError, match="positive"):
        from_signed(SignedPermutation((-1, 2)), 1)
    with pytest.raises(ValidationError, match="one block"):
        from_signed(SignedPermutation((1, -2, 3, -4)), 1)


@pytest.mark.parametrize("n, k", [(n, k) for n in range(1, 5) for k in range(n + 1)])
def test_structural_test_matches_definition(n, k):
    # definition: l(w) < l(w s_i) for every i != k
    expected = grassmann_elements(n, k)
    got = sorted(w.entries for w in all_signed_permutations(n) if is_grassmannian(w, k))
    assert got == expected
    assert [g.entries for g in enumerate_grassmannian(n, k)] == expected


def test_minimal_coset_representative_example():
    w = SignedPermutation((-5, 2, 6, 3, -4, -1, -7, -8))
    assert minimal_coset_representative(w, 3) == RUNNING
    assert minimal_coset_representative(to_signed(RUNNING), 3) == RUNNING


def _parabolic_subgroup(n, k):
    """W_(k) generated by s_i, i != k, closed under right multiplication."""
    gens = [i for i in range(n) if i != k]
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for x in frontier:
            for i in gens:
                y = apply_simple(x, i)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def test_coset_of_size_four():
    from typeb_bruhat.signed_perm import compose

    sub = _parabolic_subgroup(3, 1)
    assert len(sub) == 2 * 1 * 2
    for g in enumerate_grassmannian(3, 1):
        coset = {compose(to_signed(g), h) for h in sub}
        assert {minimal_coset_representative(x, 1) for x in coset} == {g}


@pytest.mark.parametrize("n, k", [(n, k) for n in range(1, 5) for k in range(n + 1)])
def test_minimal_representative_constant_on_cosets(n, k):
    from typeb_bruhat.signed_perm import compose

    sub = _parabolic_subgroup(n, k)
    assert len(sub) == 2**k * _fact(k) * _fact(n - k)
    reps = set()
    for g in enumerate_grassmannian(n, k):
        w = to_signed(g)
        assert minimal_coset_representative(w, k) == g
        for h in sub:
            x = compose(w, h)
            assert minimal_coset_representative(x, k) == g
            assert length_full(x) >= length_full(w)
        reps.add(g)
    assert len(reps) * len(sub) == 2**n * _fact(n)


def _fact(m):
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out


def test_partition_pair_examples():
    pp = partition_pair(RUNNING)
    assert pp.alpha == (4, 5, 5)
    assert pp.lam == (1, 4, 7, 8)
    assert pp.strict_partition == (8, 7, 4, 1)
    assert pp.mu == (1, 0, 0)
    assert pp.d == (3, 2, 2)
    ident = partition_pair(identity_element(6, 3))
    assert ident.alpha == (0, 0, 0) and ident.lam == ()
    top = partition_pair(longest_element(6, 2))
    assert top.alpha == (4, 4) and top.lam == (3, 4, 5, 6)


@pytest.mark.parametrize("n, k", SMALL)
def test_partition_identities_and_two_length_formulas(n, k):
    for g in enumerate_grassmannian(n, k):
        pp = partition_pair(g)
        for i in range(k):
            assert pp.alpha[i] == g.u[i] - (i + 1) + pp.d[i]
            assert pp.alpha[i] == n - k - pp.mu[i]
            assert g.u[i] == n - k + (i + 1) - pp.d[i] - pp.mu[i]
        assert length_grass(g) == length_full(to_signed(g))


def test_length_examples():
    assert length_grass(RUNNING) == 34
    assert length_grass(identity_element(8, 3)) == 0
    assert length_grass(longest_element(4, 2)) == 11


@pytest.mark.parametrize("n, k", [(n, k) for n in range(1, 5) for k in range(n + 1)])
def test_lengths_equal_word_lengths(n, k):
    dist, _ = bfs_word_lengths(n)
    for g in enumerate_grassmannian(n, k):
        assert length_grass(g) == dist[g.entries]


def test_longest_element_examples():
    w0 = longest_element(2, 1)
    assert w0.entries == (1, -2) and length_grass(w0) == 3 == longest_length(2, 1)
    assert longest_element(4, 2).entries == (1, 2, -4, -3)
    assert length_grass(longest_element(4, 2)) == 11
    assert longest_element(3, 3) == identity_element(3, 3)
    assert length_grass(longest_element(3, 3)) == 0


@pytest.mark.parametrize("n, k", SMALL)
def test_longest_is_maximum(n, k):
    elems = list(enumerate_grassmannian(n, k))
    top = max(elems, key=length_grass)
    assert top == longest_element(n, k)
    assert length_grass(top) == longest_length(n, k)
    assert [g for g in elems if length_grass(g) == longest_length(n, k)] == [top]


def test_dual_examples():
    d = dual(RUNNING)
    assert d.entries == (2, 5, 6, -3, 1, 4, 7, 8)
    assert dual(identity_element(4, 2)) == longest_element(4, 2)
    assert dual(longest_element(4, 2)) == identity_element(4, 2)


@pytest.mark.parametrize("n, k", SMALL)
def test_dual_properties(n, k):
    elems = list(enumerate_grassmannian(n, k))
    images = {dual(g) for g in elems}
    assert images == set(elems)
    for g in elems:
        assert dual(dual(g)) == g
        assert dual(g) == dual_by_product(g)
        assert length_grass(g) + length_grass(dual(g)) == longest_length(n, k)


@pytest.mark.parametrize("n, k", SMALL)
def test_enumeration_count_order_and_palindrome(n, k):
    elems = list(enumerate_grassmannian(n, k))
    assert len(elems) == quotient_size(n, k) == 2 ** (n - k) * comb(n, k)
    assert len(set(elems)) == len(elems)
    assert [g.entries for g in elems] == sorted(g.entries for g in elems)
    rgf = rank_generating_function(n, k)
    assert sum(rgf) == len(elems)
    assert is_palindromic(rgf)


def test_enumerate_small_examples():
    got = {g.entries for g in enumerate_grassmannian(2, 1)}
    assert got == {(1, 2), (2, 1), (2, -1), (1, -2)}
    assert len(list(enumerate_grassmannian(4, 2))) == 24
    assert len(list(enumerate_grassmannian(5, 5))) == 1


@pytest.mark.parametrize("n, k", SMALL)
def test_round_trips(n, k):
    for g in enumerate_grassmannian(n, k):
        assert from_signed(to_signed(g), k) == g
        assert GrassmannPerm.from_json(g.to_json()) == g


def test_json_form():
    doc = json.loads(RUNNING.to_json())
    assert doc == {"n": 8, "k": 3, "u": [2, 5, 6], "lambda": [1, 4, 7, 8], "v": [3]}


def test_degenerate_k_zero():
    elems = list(enumerate_grassmannian(3, 0))
    assert len(elems) == 8
    assert all(g.u == () for g in elems)
    assert partition_pair(elems[0]).alpha == ()
    assert set(itertools.chain.from_iterable(g.lam for g in elems)) <= {1, 2, 3}
