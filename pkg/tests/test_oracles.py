"""Independent baseline algorithms and primality predicates."""

import itertools
import random

from ratword import (
    brute_force_factorize,
    duval_factorize,
    is_prime_finite,
    is_prime_rational,
    longest_prime_prefix_finite,
    parse_expr,
    primitive_root,
    word_equal,
)
from ratword.ordinal import ONE, OMEGA, Ordinal
from ratword.gen import random_finite_word

E = parse_expr


def test_duval_examples():
    assert duval_factorize("aabab") == ["aabab"]
    assert duval_factorize("abaab") == ["ab", "aab"]
    assert duval_factorize("bbb") == ["b", "b", "b"]
    assert duval_factorize("abab") == ["ab", "ab"]
    assert duval_factorize("a") == ["a"]


def test_duval_matches_brute_force_exhaustive():
    for n in range(1, 10):
        for tup in itertools.product("ab", repeat=n):
            word = "".join(tup)
            assert duval_factorize(word) == brute_force_factorize(word)


def test_prime_finite_examples():
    assert is_prime_finite("aabab")
    assert is_prime_finite("aab")
    assert not is_prime_finite("aba")
    assert not is_prime_finite("abab")
    assert not is_prime_finite("ba")


def test_prime_rational_table():
    prime = ["aab", "aabab", "ab^w", "a^wb", "(a^wb)^wb"]
    not_prime = ["aba", "abab", "ba^w", "(ab)^w", "a^w"]
    for text in prime:
        assert is_prime_rational(E(text)), text
    for text in not_prime:
        assert not is_prime_rational(E(text)), text


def test_primitive_root_examples():
    root, alpha = primitive_root(E("a^w"))
    assert word_equal(root, E("a")) and alpha == OMEGA
    root, alpha = primitive_root(E("(ab)^w"))
    assert word_equal(root, E("ab")) and alpha == OMEGA
    root, alpha = primitive_root(E("abab"))
    assert word_equal(root, E("ab")) and alpha == Ordinal.from_int(2)
    root, alpha = primitive_root(E("(aa)^w"))
    assert word_equal(root, E("a")) and alpha == OMEGA
    root, alpha = primitive_root(E("aabab"))
    assert word_equal(root, E("aabab")) and alpha == ONE


def test_primitive_root_reconstructs():
    rng = random.Random(17)
    from ratword import power
    from ratword.gen import random_expr
    for _ in range(200):
        e = random_expr(rng, max_size=8, max_depth=2, letters="ab")
        root, alpha = primitive_root(e)
        assert word_equal(power(root, alpha), e)


def test_longest_prime_prefix():
    assert longest_prime_prefix_finite("abaab") == "ab"
    assert longest_prime_prefix_finite("aabab") == "aabab"
    assert longest_prime_prefix_finite("ba") == "b"
    rng = random.Random(19)
    for _ in range(300):
        word = random_finite_word(rng, 12, "ab") or "a"
        best = max((word[:i] for i in range(1, len(word) + 1)
                    if is_prime_finite(word[:i])), key=len)
        assert longest_prime_prefix_finite(word) == best == duval_factorize(word)[0]
