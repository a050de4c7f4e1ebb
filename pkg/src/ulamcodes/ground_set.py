"""
Ground permutation sets: small sets of permutations of [q] with a
certified maximum pairwise LCS.

Two constructions are provided. The XOR route takes a binary block code
G of length log2(q) and maps each codeword g to the permutation
sigma_g[i] = i XOR g; any two codewords agreeing on |I| bit positions
yield permutations with LCS at most 2^|I|, so G's minimum distance caps
the pairwise LCS at q / 2^dmin. The brute-force route greedily scans
permutations of [q] (lexicographically, or random samples under a seeded
budget) keeping those whose LCS with every kept permutation stays within
a bound.

Certification is always exhaustive: the stored maximum pairwise LCS is
recomputed over all pairs at construction time.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .block_codes import BlockCode
from .errors import ParameterError
from .perm_core import from_digits, lcs_length, validate_permutation


@dataclass(frozen=True)
class GroundSet:
    """p distinct permutations of [q] plus their exact max pairwise LCS."""

    q: int
    perms: tuple[tuple[int, ...], ...]
    certified_max_lcs: int
    worst_pair: tuple[int, int] | None

    @property
    def p(self) -> int:
        return len(self.perms)

    def __repr__(self) -> str:
        return f"GroundSet(q={self.q}, p={self.p}, max_lcs={self.certified_max_lcs})"


@dataclass(frozen=True)
class GroundSetReport:
    max_pairwise_lcs: int
    worst_pair: tuple[int, int] | None
    threshold: int
    passed: bool


def _certify(q: int, perms: Sequence[tuple[int, ...]]) -> GroundSet:
    seen = set()
    for word in perms:
        validate_permutation(word, "ground permutation")
        if len(word) != q:
            raise ParameterError(f"ground permutation of length {len(word)}, expected {q}")
        if word in seen:
            raise ParameterError(f"duplicate ground permutation {word!r}")
        seen.add(word)
    max_lcs, worst = 0, None
    for i, j in itertools.combinations(range(len(perms)), 2):
        l = lcs_length(perms[i], perms[j])
        if l > max_lcs:
            max_lcs, worst = l, (i, j)
    return GroundSet(q=q, perms=tuple(perms), certified_max_lcs=max_lcs, worst_pair=worst)


def ground_set_from_perms(q: int, perms: Iterable[Sequence[int]]) -> GroundSet:
    """Certify an explicitly given family of permutations of [q]."""
    return _certify(q, [tuple(w) for w in perms])


def xor_ground_set(q: int, code: BlockCode) -> GroundSet:
    """
    Build {sigma_g : g in code} with sigma_g[i] = i XOR value(g), for q a
    power of two and a binary code of block length log2(q).
    """
    r = q.bit_length() - 1
    if q < 2 or q != 1 << r:
        raise ParameterError(f"q must be a power of two, got {q}")
    if code.alphabet_size != 2:
        raise ParameterError("XOR construction needs a binary code")
    if code.block_length != r:
        raise ParameterError(
            f"code length {code.block_length} != log2(q) = {r}"
        )
    perms = [
        tuple(i ^ from_digits(g, 2) for i in range(q)) for g in code.codewords()
    ]
    return _certify(q, perms)


def brute_force_ground_set(
    q: int,
    target_p: int | None,
    max_lcs: int,
    *,
    seed: int | None = None,
    sample_budget: int = 100_000,
) -> GroundSet:
    """
    Greedy search for permutations of [q] with pairwise LCS <= max_lcs.

    Default mode scans all q! permutations in lexicographic order; with a
    seed, random permutations are sampled instead, up to sample_budget
    draws. Stops once target_p permutations are found; target_p=None
    keeps everything the greedy scan admits. Raises ParameterError if the
    budget ends before target_p is reached.
    """
    if q < 1:
        raise ParameterError(f"q must be >= 1, got {q}")
    if max_lcs < 0:
        raise ParameterError(f"max_lcs must be >= 0, got {max_lcs}")
    chosen: list[tuple[int, ...]] = []
    chosen_set: set[tuple[int, ...]] = set()

    def admit(word: tuple[int, ...]) -> bool:
        if word in chosen_set:
            return False
        return all(lcs_length(word, c) <= max_lcs for c in chosen)

    if seed is None:
        candidates: Iterable[tuple[int, ...]] = itertools.permutations(range(q))
    else:
        rng = random.Random(seed)

        def _sampled():
            base = list(range(q))
            for _ in range(sample_budget):
                rng.shuffle(base)
                yield tuple(base)

        candidates = _sampled()

    for word in candidates:
        if admit(word):
            chosen.append(word)
            chosen_set.add(word)
            if target_p is not None and len(chosen) == target_p:
                break
    if target_p is not None and len(chosen) < target_p:
        raise ParameterError(
            f"search exhausted with {len(chosen)} permutations, target was {target_p} "
            f"(q={q}, max_lcs={max_lcs})"
        )
    return _certify(q, chosen)


def verify_ground_set(ground: GroundSet, threshold: int) -> GroundSetReport:
    """Exhaustively recompute the max pairwise LCS and compare with threshold."""
    max_lcs, worst = 0, None
    for i, j in itertools.combinations(range(ground.p), 2):
        l = lcs_length(ground.perms[i], ground.perms[j])
        if l > max_lcs:
            max_lcs, worst = l, (i, j)
    return GroundSetReport(
        max_pairwise_lcs=max_lcs,
        worst_pair=worst,
        threshold=threshold,
        passed=max_lcs <= threshold,
    )


# ------------------------------------------------------------ text interface
# Header "q p certified_max_lcs", then one permutation per line.

def save_ground_set(path: str, ground: GroundSet) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{ground.q} {ground.p} {ground.certified_max_lcs}\n")
        for word in ground.perms:
            fh.write(" ".join(str(x) for x in word) + "\n")


def load_ground_set(path: str) -> GroundSet:
    with open(path, encoding="ascii") as fh:
        header = fh.readline().split()
        if len(header) != 3:
            raise ValueError(f"bad ground-set header in {path!r}")
        q, p, claimed = (int(tok) for tok in header)
        perms = []
        for line in fh:
            if line.strip():
                perms.append(tuple(int(tok) for tok in line.split()))
    if len(perms) != p:
        raise ValueError(f"ground-set body of {path!r} disagrees with header")
    ground = _certify(q, perms)
    if ground.certified_max_lcs != claimed:
        raise ValueError(
            f"stored max LCS {claimed} != recomputed {ground.certified_max_lcs} in {path!r}"
        )
    return ground
