"""
Permutation strings, restriction, base-q position indexing, and the Ulam
distance.

Permutations of [n] = {0, ..., n-1} are handled in word form: the tuple
(pi[0], ..., pi[n-1]). Distance computations accept the wider class of
distinct-symbol strings, so restrictions of permutations to symbol subsets
can be compared directly.

The Ulam distance of two strings over the same symbol set is the least
number of single-symbol relocations turning one into the other, which
equals the common length minus the length of a longest common subsequence.
For distinct-symbol strings the LCS reduces, after relabeling one string
by positions in the other, to a longest increasing subsequence, computed
here by patience sorting in O(m log m). The quadratic dynamic program is
kept alongside permanently as an independent oracle.

All functions are pure and operate on immutable values; they are safe to
call concurrently.
"""
from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Sequence


def check_distinct(s: Sequence[int], name: str = "string") -> None:
    """Raise ValueError if s contains a repeated symbol."""
    if len(set(s)) != len(s):
        raise ValueError(f"{name} has repeated symbols: {tuple(s)!r}")


def is_permutation(word: Sequence[int]) -> bool:
    """
    Check that word is a permutation of [n] in word form, n = len(word).

    >>> [is_permutation(w) for w in [(), (0,), (1, 0), (0, 2), (0, 0, 1)]]
    [True, True, True, False, False]
    """
    n = len(word)
    return len(set(word)) == n and all(0 <= x < n for x in word)


def validate_permutation(word: Sequence[int], name: str = "permutation") -> None:
    """Raise ValueError unless word is a permutation of [len(word)]."""
    if not is_permutation(word):
        raise ValueError(f"{name} is not a permutation of [{len(word)}]: {tuple(word)!r}")


def identity(n: int) -> tuple[int, ...]:
    """
    The identity permutation of [n].

    >>> identity(4)
    (0, 1, 2, 3)
    """
    if n < 1:
        raise ValueError(f"permutation length must be >= 1, got {n}")
    return tuple(range(n))


def inverse(word: Sequence[int]) -> tuple[int, ...]:
    """Positions of each symbol: inverse(word)[s] = index of s in word."""
    inv = [0] * len(word)
    for i, x in enumerate(word):
        inv[x] = i
    return tuple(inv)


def lcs_length(a: Sequence[int], b: Sequence[int]) -> int:
    """
    Length of a longest common subsequence of two distinct-symbol strings.

    Symbols present in only one string are permitted (they can never
    match). Shared symbols of b are relabeled by their position in a,
    and the answer is the longest increasing subsequence of that
    relabeling, found by patience sorting.

    >>> lcs_length((0, 1, 2, 3), (0, 1, 2, 3))
    4
    >>> lcs_length((0, 1, 2, 3), (3, 2, 1, 0))
    1
    >>> lcs_length((0, 2, 1, 3), (3, 0, 1, 2))
    2
    """
    check_distinct(a, "first string")
    check_distinct(b, "second string")
    pos_in_a = {sym: i for i, sym in enumerate(a)}
    piles: list[int] = []
    for sym in b:
        i = pos_in_a.get(sym)
        if i is None:
            continue
        j = bisect_left(piles, i)
        if j == len(piles):
            piles.append(i)
        else:
            piles[j] = i
    return len(piles)


def lcs_length_dp(a: Sequence[int], b: Sequence[int]) -> int:
    """
    The same LCS length by the classical O(|a|*|b|) dynamic program.

    Retained permanently as an independent oracle for lcs_length; the two
    implementations share no code path.
    """
    check_distinct(a, "first string")
    check_distinct(b, "second string")
    m = len(b)
    prev = [0] * (m + 1)
    for x in a:
        cur = [0] * (m + 1)
        for j in range(1, m + 1):
            if x == b[j - 1]:
                cur[j] = prev[j - 1] + 1
            else:
                pj, cj = prev[j], cur[j - 1]
                cur[j] = pj if pj >= cj else cj
        prev = cur
    return prev[m]


def ulam_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """
    Ulam distance between two distinct-symbol strings over the same
    symbol set: len(a) - lcs_length(a, b).

    >>> ulam_distance((0, 1, 2, 3), (0, 1, 2, 3))
    0
    >>> ulam_distance((0, 1, 2, 3), (3, 2, 1, 0))
    3
    """
    if set(a) != set(b):
        raise ValueError("ulam_distance needs equal symbol sets")
    return len(a) - lcs_length(a, b)


def restrict(s: Sequence[int], symbols: Iterable[int]) -> tuple[int, ...]:
    """
    The subsequence of s consisting of the given symbols, order preserved.

    >>> restrict((3, 1, 8, 6, 4, 5, 0, 7, 2), {3, 6, 0})
    (3, 6, 0)
    >>> restrict((0, 1, 2, 3), set())
    ()
    """
    keep = set(symbols)
    return tuple(x for x in s if x in keep)


def to_digits(m: int, q: int, length: int) -> tuple[int, ...]:
    """
    Base-q digits of m, most significant first, padded to `length`.

    >>> to_digits(5, 2, 3)
    (1, 0, 1)
    >>> to_digits(7, 3, 2)
    (2, 1)
    """
    if q < 2:
        raise ValueError(f"base must be >= 2, got {q}")
    if not 0 <= m < q**length:
        raise ValueError(f"value {m} out of range [0, {q}^{length})")
    digits = []
    for _ in range(length):
        m, r = divmod(m, q)
        digits.append(r)
    return tuple(reversed(digits))


def from_digits(digits: Sequence[int], q: int) -> int:
    """
    Integer value of base-q digits, most significant first.

    >>> from_digits((1, 0, 1), 2)
    5
    """
    if q < 2:
        raise ValueError(f"base must be >= 2, got {q}")
    value = 0
    for d in digits:
        if not 0 <= d < q:
            raise ValueError(f"digit {d} out of range [0, {q})")
        value = value * q + d
    return value


# -- text format: one permutation per line, space-separated decimal symbols --

def format_permutation(word: Sequence[int]) -> str:
    return " ".join(str(x) for x in word)


def parse_permutation(line: str) -> tuple[int, ...]:
    """Parse one line of the permutation text format and validate it."""
    try:
        word = tuple(int(tok) for tok in line.split())
    except ValueError as exc:
        raise ValueError(f"not a permutation line: {line!r}") from exc
    validate_permutation(word)
    return word


def read_permutations(path: str) -> list[tuple[int, ...]]:
    """Read all permutations from a text file, one per line; blank lines skipped."""
    perms = []
    with open(path, encoding="ascii") as fh:
        for line in fh:
            if line.strip():
                perms.append(parse_permutation(line))
    return perms


def write_permutations(path: str, perms: Iterable[Sequence[int]]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for word in perms:
            fh.write(format_permutation(word) + "\n")
