"""
The staged-shuffle permutation codec: message <-> shuffler tuple <->
permutation of [q^ell].

Positions of a length-n permutation, n = q^ell, are addressed by their
base-q digit strings (most significant first). Stage i groups the
positions that agree on every digit except digit i; each group holds q
positions, there are n/q groups, and the group whose fixed digits are
alpha (before digit i) and beta (after) lives at shuffler slot
value_q(alpha + beta). A shuffler is a length-n/q string over [p]
choosing, per group, which of the p ground permutations reorders that
group's contents:

    pi_new[alpha x beta] = pi_old[alpha sigma_c[x] beta],  c = w[(alpha, beta)].

Encoding folds ell such stages over the identity permutation, with the
stage shufflers drawn as codewords of a Hamming-metric block code C over
[p]; a message in [|C|^ell] picks the ell codewords by mixed radix.
Distinct messages end up at Ulam distance at least
C.min_distance * (q - max_lcs(D)).

Decoding reverses the stages: at stage i each group's symbols are
located in the received permutation, the ground permutation whose
reordering of the reconstructed stage-(i-1) prefix best matches their
received relative order is guessed per group, and the guessed shuffler
string is corrected with C's Hamming decoder. When C decodes up to half
its distance, any input strictly within a quarter of the distance bound
of a codeword decodes to exactly that codeword.

Everything here is pure; params objects are immutable after validation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import log
from typing import NamedTuple, Sequence

from .block_codes import BlockCode, DecodeFailure
from .errors import ParameterError
from .ground_set import GroundSet
from .perm_core import (
    from_digits,
    identity,
    inverse,
    restrict,
    to_digits,
    ulam_distance,
    validate_permutation,
)

ShufflerTuple = tuple[tuple[int, ...], ...]


class GroupKey(NamedTuple):
    """A stage-i group: digit prefix alpha (i-1 digits), suffix beta (ell-i digits)."""

    stage: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]


def group_slot(key: GroupKey, q: int) -> int:
    """Shuffler slot of a group: the base-q value of alpha followed by beta."""
    return from_digits(key.alpha + key.beta, q)


def slot_group(stage: int, slot: int, q: int, ell: int) -> GroupKey:
    """Inverse of group_slot for the given stage."""
    digits = to_digits(slot, q, ell - 1) if ell > 1 else ()
    return GroupKey(stage=stage, alpha=digits[: stage - 1], beta=digits[stage - 1 :])


def group_positions(key: GroupKey, q: int, ell: int) -> tuple[int, ...]:
    """The q positions alpha x beta, in increasing x order."""
    step = q ** (ell - key.stage)
    base = from_digits(key.alpha, q) * q * step + from_digits(key.beta, q)
    return tuple(base + x * step for x in range(q))


@dataclass(frozen=True)
class UlamCodeParams:
    """
    Validated instance parameters: alphabet root q, stage count ell,
    ground set D over [q] with |D| = p, and shuffler code C over [p] of
    block length n/q.

    Derived: n = q^ell, message count M = |C|^ell, distance_bound =
    C.min_distance * (q - max_lcs(D)) (a lower bound on the pairwise
    Ulam distance of distinct codewords), and decode_guarantee, the
    strict Ulam-weight threshold below which decoding is certain. With a
    shuffler code that uniquely decodes anything strictly below half its
    min distance, decode_guarantee equals distance_bound / 4.
    """

    q: int
    ell: int
    ground: GroundSet
    code: BlockCode

    def __post_init__(self):
        if self.q < 2:
            raise ParameterError(f"q must be >= 2, got {self.q}")
        if self.ell < 1:
            raise ParameterError(f"ell must be >= 1, got {self.ell}")
        if self.ground.q != self.q:
            raise ParameterError(
                f"ground set is over [{self.ground.q}], expected [{self.q}]"
            )
        if self.ground.p < 1:
            raise ParameterError("ground set is empty")
        if self.code.alphabet_size != self.ground.p:
            raise ParameterError(
                f"shuffler code alphabet {self.code.alphabet_size} != |ground| = {self.ground.p}"
            )
        if self.code.block_length != self.q ** (self.ell - 1):
            raise ParameterError(
                f"shuffler code length {self.code.block_length} != n/q = {self.q ** (self.ell - 1)}"
            )

    @property
    def n(self) -> int:
        return self.q**self.ell

    @property
    def p(self) -> int:
        return self.ground.p

    @property
    def message_count(self) -> int:
        return self.code.size**self.ell

    @property
    def distance_bound(self) -> int:
        return self.code.min_distance * (self.q - self.ground.certified_max_lcs)

    @property
    def decode_guarantee(self) -> Fraction:
        per_stage = Fraction(
            (self.code.decoding_radius + 1) * (self.q - self.ground.certified_max_lcs), 2
        )
        return min(Fraction(self.distance_bound, 4), per_stage)

    def __repr__(self) -> str:
        return (
            f"UlamCodeParams(q={self.q}, ell={self.ell}, n={self.n}, p={self.p}, "
            f"|C|={self.code.size}, M={self.message_count}, "
            f"distance_bound={self.distance_bound})"
        )


@dataclass(frozen=True)
class CodeBounds:
    """Instance-specific evaluations of the construction's guarantees."""

    lcs_upper: Fraction
    dist_lower: Fraction
    rate_lower: float


def code_bounds(params: UlamCodeParams) -> CodeBounds:
    """
    Evaluate the guaranteed bounds from the instance's actual parameters:
    relative code distance delta_C = d_C / (n/q) and ground LCS cap
    max_lcs(D). Distinct codewords have LCS at most
    (delta_C * max_lcs/q + (1 - delta_C)) * n, hence Ulam distance at
    least delta_C * (1 - max_lcs/q) * n; the rate (log of the codeword
    count over log n!) is at least log_q(|C|) / n.
    """
    n, q = params.n, params.q
    delta_c = Fraction(params.code.min_distance, params.code.block_length)
    lcs_frac = Fraction(params.ground.certified_max_lcs, q)
    lcs_upper = (delta_c * lcs_frac + (1 - delta_c)) * n
    dist_lower = delta_c * (1 - lcs_frac) * n
    rate_lower = log(params.code.size) / (n * log(q))
    return CodeBounds(lcs_upper=lcs_upper, dist_lower=dist_lower, rate_lower=rate_lower)


# ------------------------------------------------------------------- stages

def apply_stage(
    pi: Sequence[int], stage: int, shuffler: Sequence[int], ground: GroundSet
) -> tuple[int, ...]:
    """
    One shuffle stage: reorder each stage-i group of pi by its selected
    ground permutation. Positions only move within their group, so
    digits other than digit i are untouched and the output is again a
    permutation.
    """
    q = ground.q
    n = len(pi)
    groups = len(shuffler)
    if q * groups != n:
        raise ParameterError(f"shuffler length {groups} != n/q = {n // q if q else 0}")
    ell = 0
    size = 1
    while size < n:
        size *= q
        ell += 1
    if size != n:
        raise ParameterError(f"permutation length {n} is not a power of q={q}")
    if not 1 <= stage <= ell:
        raise ParameterError(f"stage must be in 1..{ell}, got {stage}")
    step = q ** (ell - stage)
    out = [0] * n
    for slot in range(groups):
        hi, lo = divmod(slot, step)
        base = hi * q * step + lo
        c = shuffler[slot]
        if not 0 <= c < ground.p:
            raise ParameterError(f"shuffler symbol {c} out of range [0, {ground.p})")
        sigma = ground.perms[c]
        for x in range(q):
            out[base + x * step] = pi[base + sigma[x] * step]
    return tuple(out)


def run_stages(shufflers: Sequence[Sequence[int]], q: int, ground: GroundSet) -> tuple[int, ...]:
    """Fold apply_stage over stages 1..len(shufflers), starting from identity."""
    ell = len(shufflers)
    if ell < 1:
        raise ParameterError("need at least one stage")
    pi = identity(q**ell)
    for i, w in enumerate(shufflers, start=1):
        pi = apply_stage(pi, i, w, ground)
    return pi


def encode_shufflers(shufflers: Sequence[Sequence[int]], params: UlamCodeParams) -> tuple[int, ...]:
    """
    The permutation produced by an explicit shuffler tuple (one length-n/q
    string over [p] per stage). The strings need not be codewords of C.
    """
    if len(shufflers) != params.ell:
        raise ParameterError(f"expected {params.ell} shufflers, got {len(shufflers)}")
    for w in shufflers:
        if len(w) != params.code.block_length:
            raise ParameterError(
                f"shuffler length {len(w)} != n/q = {params.code.block_length}"
            )
    return run_stages(shufflers, params.q, params.ground)


# ------------------------------------------------------------------ encoding

def message_to_shufflers(x: int, params: UlamCodeParams) -> ShufflerTuple:
    """
    Split x in [M] into ell stage coordinates by mixed radix base |C|
    (most significant = stage 1) and encode each with C.
    """
    m = params.message_count
    if not 0 <= x < m:
        raise ParameterError(f"message {x} out of range [0, {m})")
    coords = []
    for _ in range(params.ell):
        x, r = divmod(x, params.code.size)
        coords.append(r)
    coords.reverse()
    return tuple(params.code.encode_index(c) for c in coords)


def shufflers_to_message(shufflers: Sequence[Sequence[int]], params: UlamCodeParams) -> int:
    """Inverse of message_to_shufflers; every stage string must be a codeword."""
    if len(shufflers) != params.ell:
        raise ParameterError(f"expected {params.ell} shufflers, got {len(shufflers)}")
    x = 0
    for w in shufflers:
        idx = params.code.decode_word(w)
        if isinstance(idx, DecodeFailure) or params.code.encode_index(idx) != tuple(w):
            raise ParameterError(f"stage string {tuple(w)!r} is not a codeword")
        x = x * params.code.size + idx
    return x


def encode(x: int, params: UlamCodeParams) -> tuple[int, ...]:
    """Codeword permutation of message x; injective over [M]."""
    return encode_shufflers(message_to_shufflers(x, params), params)


# ------------------------------------------------------------------ decoding

def _best_symbol(received_order: Sequence[int], group_by_x: Sequence[int], ground: GroundSet) -> int:
    """
    The index c minimizing the Ulam distance between the received relative
    order of a group's symbols and the order sigma_c would produce; ties
    go to the smallest c.
    """
    best_c, best_d = 0, None
    for c, sigma in enumerate(ground.perms):
        candidate = tuple(group_by_x[y] for y in sigma)
        d = ulam_distance(received_order, candidate)
        if best_d is None or d < best_d:
            best_c, best_d = c, d
            if d == 0:
                break
    return best_c


def guess_shuffler_symbol(
    received: Sequence[int],
    prev_star: Sequence[int],
    key: GroupKey,
    ground: GroundSet,
) -> int:
    """
    Guess one shuffler symbol: restrict the received permutation to the
    group's symbol set A = {prev_star[alpha x beta]} and pick the ground
    permutation minimizing the Ulam distance to its reordering of
    prev_star.
    """
    q = ground.q
    if len(key.alpha) != key.stage - 1:
        raise ParameterError("group key needs len(alpha) == stage - 1")
    ell = len(key.alpha) + 1 + len(key.beta)
    positions = group_positions(key, q, ell)
    group_by_x = tuple(prev_star[m] for m in positions)
    received_order = restrict(received, group_by_x)
    if len(received_order) != q:
        raise ParameterError("received permutation misses group symbols")
    return _best_symbol(received_order, group_by_x, ground)


@dataclass(frozen=True)
class DecodeResult:
    message: int
    codeword: tuple[int, ...]


def decode(pi: Sequence[int], params: UlamCodeParams) -> DecodeResult | DecodeFailure:
    """
    Stage-wise decoding. Returns the message and its codeword whenever
    the input lies strictly within distance_bound/4 of one (unique
    decoding); returns DecodeFailure when a stage's Hamming decode fails
    or the final candidate is not within that radius of the input.

    Every stage guesses from the original received permutation: a stage-i
    group's relative order in the full codeword is already fixed by stage
    i (later stages never move a symbol across its digit-i slot), so per
    group the received order is compared against each ground permutation's
    reordering of the reconstructed stage-(i-1) prefix, and the subadditive
    partition bound keeps the guessed shuffler within the Hamming decoding
    radius of the true one for inputs inside the radius.
    """
    validate_permutation(pi)
    q, ell, n = params.q, params.ell, params.n
    if len(pi) != n:
        raise ParameterError(f"permutation length {len(pi)} != n = {n}")
    ground = params.ground
    groups = params.code.block_length
    pos_of = inverse(pi)
    prev_star = identity(n)
    stage_indices = []
    for i in range(1, ell + 1):
        step = q ** (ell - i)
        guessed = []
        for slot in range(groups):
            hi, lo = divmod(slot, step)
            base = hi * q * step + lo
            group_by_x = tuple(prev_star[base + x * step] for x in range(q))
            spots = sorted(pos_of[sym] for sym in group_by_x)
            received_order = tuple(pi[j] for j in spots)
            guessed.append(_best_symbol(received_order, group_by_x, ground))
        idx = params.code.decode_word(tuple(guessed))
        if isinstance(idx, DecodeFailure):
            return DecodeFailure(f"stage {i}: {idx.reason}")
        w_star = params.code.encode_index(idx)
        stage_indices.append(idx)
        prev_star = apply_stage(prev_star, i, w_star, ground)
    x_star = 0
    for idx in stage_indices:
        x_star = x_star * params.code.size + idx
    if 4 * ulam_distance(pi, prev_star) >= params.distance_bound:
        return DecodeFailure(
            "no codeword within a quarter of the distance bound of the input"
        )
    return DecodeResult(message=x_star, codeword=prev_star)
