import itertools

import pytest

from ulamcodes.block_codes import greedy_gv_code, hamming_distance, identity_code
from ulamcodes.errors import ParameterError
from ulamcodes.ground_set import (
    brute_force_ground_set,
    ground_set_from_perms,
    load_ground_set,
    save_ground_set,
    verify_ground_set,
    xor_ground_set,
)
from ulamcodes.perm_core import lcs_length_dp, to_digits


class TestXorConstruction:
    def test_two_codeword_example(self):
        ground = xor_ground_set(4, greedy_gv_code(2, 2, 2))  # {00, 11}
        assert ground.perms == ((0, 1, 2, 3), (3, 2, 1, 0))
        assert ground.certified_max_lcs == 1

    def test_full_code_example(self):
        ground = xor_ground_set(4, identity_code(2, 2))
        assert ground.perms == (
            (0, 1, 2, 3),
            (1, 0, 3, 2),
            (2, 3, 0, 1),
            (3, 2, 1, 0),
        )
        assert ground.certified_max_lcs == 2

    def test_zero_codeword_gives_identity(self):
        ground = xor_ground_set(8, identity_code(2, 3))
        assert ground.perms[0] == tuple(range(8))

    def test_rejects_bad_parameters(self):
        with pytest.raises(ParameterError):
            xor_ground_set(6, identity_code(2, 2))
        with pytest.raises(ParameterError):
            xor_ground_set(8, identity_code(2, 2))  # length 2 != log2 8
        with pytest.raises(ParameterError):
            xor_ground_set(4, identity_code(3, 2))  # not binary

    @pytest.mark.parametrize("q", [4, 8, 16, 32, 64])
    def test_relative_order_determined_by_first_differing_bit(self, q):
        r = q.bit_length() - 1
        ground = xor_ground_set(q, identity_code(2, r))
        for g_value, sigma in zip(range(q), ground.perms):
            pos = {sym: i for i, sym in enumerate(sigma)}
            g_bits = to_digits(g_value, 2, r)
            for x, y in itertools.combinations(range(q), 2):
                xb, yb = to_digits(x, 2, r), to_digits(y, 2, r)
                m = next(i for i in range(r) if xb[i] != yb[i])
                # ascending exactly when x's bit m agrees with g's bit m == 0
                expected_x_first = (xb[m] ^ g_bits[m]) == 0
                assert (pos[x] < pos[y]) == expected_x_first

    @pytest.mark.parametrize("q", [4, 8, 16, 32])
    def test_pairwise_lcs_capped_by_agreeing_positions(self, q):
        r = q.bit_length() - 1
        for d in range(1, r + 1):
            code = greedy_gv_code(2, r, d)
            if code.size < 2:
                continue
            ground = xor_ground_set(q, code)
            words = list(code.codewords())
            for (i, gi), (j, gj) in itertools.combinations(enumerate(words), 2):
                agreeing = r - hamming_distance(gi, gj)
                assert (
                    lcs_length_dp(ground.perms[i], ground.perms[j]) <= 2**agreeing
                )
            assert ground.certified_max_lcs <= 2 ** (r - code.min_distance)


class TestBruteForce:
    def test_exhaustive_truth_q3(self):
        # all 6 permutations of [3]: only a permutation and its reversal
        # have LCS 1, so the maximum admissible family has size 2
        perms = list(itertools.permutations(range(3)))
        best = 0
        for r in range(1, 7):
            for sub in itertools.combinations(perms, r):
                if all(lcs_length_dp(a, b) <= 1 for a, b in itertools.combinations(sub, 2)):
                    best = max(best, r)
        assert best == 2
        ground = brute_force_ground_set(3, None, 1)
        assert ground.perms == ((0, 1, 2), (2, 1, 0))

    def test_q2(self):
        ground = brute_force_ground_set(2, None, 1)
        assert ground.perms == ((0, 1), (1, 0))

    def test_vacuous_constraint_admits_everything(self):
        ground = brute_force_ground_set(3, None, 3)
        assert ground.p == 6

    def test_target_reached_stops_early(self):
        ground = brute_force_ground_set(4, 2, 2)
        assert ground.p == 2
        assert ground.certified_max_lcs <= 2

    def test_unreachable_target_raises(self):
        with pytest.raises(ParameterError):
            brute_force_ground_set(3, 3, 1)

    def test_random_mode_deterministic(self):
        a = brute_force_ground_set(5, 3, 2, seed=17, sample_budget=5000)
        b = brute_force_ground_set(5, 3, 2, seed=17, sample_budget=5000)
        assert a.perms == b.perms
        assert a.certified_max_lcs <= 2


class TestCertification:
    def test_certified_value_matches_dp_oracle(self):
        for ground in [
            xor_ground_set(8, greedy_gv_code(2, 3, 2)),
            brute_force_ground_set(4, None, 2),
        ]:
            if ground.p < 2:
                continue
            recomputed = max(
                lcs_length_dp(a, b)
                for a, b in itertools.combinations(ground.perms, 2)
            )
            assert ground.certified_max_lcs == recomputed

    def test_verify_pass_and_fail(self):
        ground = xor_ground_set(4, greedy_gv_code(2, 2, 2))
        report = verify_ground_set(ground, 1)
        assert report.passed and report.max_pairwise_lcs == 1

        single = ground_set_from_perms(4, [(0, 1, 2, 3)])
        assert verify_ground_set(single, 0).passed  # no pairs at all

        close = ground_set_from_perms(4, [(0, 1, 2, 3), (0, 1, 3, 2)])
        report = verify_ground_set(close, 2)
        assert not report.passed
        assert report.max_pairwise_lcs == 3
        assert report.worst_pair == (0, 1)

    def test_rejects_malformed_members(self):
        with pytest.raises(ParameterError):
            ground_set_from_perms(3, [(0, 1, 2), (0, 1, 2)])
        with pytest.raises(ParameterError):
            ground_set_from_perms(3, [(0, 1)])
        with pytest.raises(ValueError):
            ground_set_from_perms(3, [(0, 1, 1)])


class TestFileFormat:
    def test_round_trip(self, tmp_path):
        ground = xor_ground_set(8, greedy_gv_code(2, 3, 2))
        path = tmp_path / "ground.txt"
        save_ground_set(str(path), ground)
        loaded = load_ground_set(str(path))
        assert loaded == ground

    def test_reload_recertifies(self, tmp_path):
        path = tmp_path / "ground.txt"
        path.write_text("3 2 1\n0 1 2\n0 2 1\n")  # true max LCS is 2, header lies
        with pytest.raises(ValueError):
            load_ground_set(str(path))
