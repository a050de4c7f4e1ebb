import pytest

from ulamcodes.cli import main, parse_shufflers

Q4_FLAGS = ["--q", "4", "--ell", "2", "--ground-set", "xor:all", "--code", "gv:4,4,2"]


def test_parse_shufflers():
    assert parse_shufflers("1 0 0 1; 1 1 1 0; 0 0 0 1") == (
        (1, 0, 0, 1),
        (1, 1, 1, 0),
        (0, 0, 0, 1),
    )
    assert parse_shufflers("3,0,1/2,2,3") == ((3, 0, 1), (2, 2, 3))


def test_gen_ground_set_and_reuse(tmp_path, capsys):
    out = tmp_path / "ground.txt"
    assert main(["gen-ground-set", "--q", "8", "--ground-set", "xor:gv:2", "--out", str(out)]) == 0
    captured = capsys.readouterr().out
    assert "q=8 p=4 certified_max_lcs=2" in captured
    # the saved file works as a descriptor
    assert (
        main(
            ["build", "--q", "8", "--ell", "2", "--ground-set", f"file:{out}",
             "--code", "gv:4,8,5"]
        )
        == 0
    )
    assert "distance_bound=30" in capsys.readouterr().out


def test_build_prints_derived_parameters(capsys):
    assert main(["build", *Q4_FLAGS]) == 0
    out = capsys.readouterr().out
    assert "n=16" in out
    assert "message_count=4096" in out
    assert "distance_bound=4" in out


def test_build_json(capsys):
    assert main(["build", "--json", *Q4_FLAGS]) == 0
    out = capsys.readouterr().out
    assert '"distance_bound": 4' in out


def test_build_reports_constraint_violation(capsys):
    assert main(["build", "--q", "4", "--ell", "2", "--ground-set", "xor:all",
                 "--code", "gv:4,5,2"]) == 1
    err = capsys.readouterr().err
    assert err.startswith("error:")
    assert "n/q" in err


def test_raw_shuffler_encode_binary_example(capsys):
    assert (
        main(
            ["encode", "--q", "2", "--ground-set", "bruteforce:1",
             "--raw-shufflers", "1 0 0 1; 1 1 1 0; 0 0 0 1"]
        )
        == 0
    )
    assert capsys.readouterr().out.strip() == "2 7 4 1 6 5 3 0"


def test_raw_shuffler_encode_ternary_example(tmp_path, capsys):
    # explicit ground-set file carrying the four named permutations
    path = tmp_path / "ground3.txt"
    path.write_text("3 4 2\n0 1 2\n2 1 0\n1 0 2\n1 2 0\n")
    assert (
        main(
            ["encode", "--q", "3", "--ground-set", f"file:{path}",
             "--raw-shufflers", "3 0 1; 2 2 3"]
        )
        == 0
    )
    assert capsys.readouterr().out.strip() == "1 3 8 4 6 5 7 2 0"


def test_encode_decode_round_trip(tmp_path, capsys):
    out = tmp_path / "word.txt"
    assert main(["encode", "--msg", "1234", "--out", str(out), *Q4_FLAGS]) == 0
    capsys.readouterr()
    assert main(["decode", "--perm", str(out), *Q4_FLAGS]) == 0
    assert capsys.readouterr().out.strip() == "1234"


def test_encode_requires_exactly_one_source(capsys):
    assert main(["encode", *Q4_FLAGS]) == 1
    assert "error:" in capsys.readouterr().err
    assert main(["encode", "--msg", "1", "--raw-shufflers", "0 0 0 0", *Q4_FLAGS]) == 1


def test_decode_failure_exit_code(tmp_path, capsys):
    perm = tmp_path / "far.txt"
    perm.write_text("15 3 7 11 1 5 9 13 2 6 10 14 0 4 8 12\n")
    code = main(["decode", "--perm", str(perm), *Q4_FLAGS])
    captured = capsys.readouterr()
    if code == 1:
        assert captured.err.startswith("error: decode failed")
    else:
        assert code == 0  # landed within the radius of some codeword


def test_ground_set_file_q_mismatch(tmp_path, capsys):
    path = tmp_path / "ground3.txt"
    path.write_text("3 2 1\n0 1 2\n2 1 0\n")
    assert main(["encode", "--q", "4", "--ground-set", f"file:{path}",
                 "--raw-shufflers", "0 0 0; 0 0 0"]) == 1
    assert "expected [4]" in capsys.readouterr().err


def test_distance_identical_files(tmp_path, capsys):
    a = tmp_path / "a.txt"
    a.write_text("0 1 2 3\n")
    assert main(["distance", str(a), str(a)]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_corrupt_deterministic(tmp_path, capsys):
    perm = tmp_path / "p.txt"
    perm.write_text("0 1 2 3 4 5 6 7\n")
    trace = tmp_path / "trace.txt"
    assert main(["corrupt", "--perm", str(perm), "--t", "2", "--seed", "5",
                 "--trace-out", str(trace)]) == 0
    first = capsys.readouterr().out
    assert main(["corrupt", "--perm", str(perm), "--t", "2", "--seed", "5"]) == 0
    assert capsys.readouterr().out == first
    assert trace.read_text().count("\n") == 2


def test_corrupt_requires_seed():
    with pytest.raises(SystemExit) as exc:
        main(["corrupt", "--perm", "x.txt", "--t", "2"])
    assert exc.value.code == 2


def test_audit_swap_instance(capsys):
    flags = ["--q", "2", "--ell", "3", "--ground-set", "bruteforce:1", "--code", "gv:2,4,2"]
    assert main(["audit", *flags]) == 0
    out = capsys.readouterr().out
    assert "passed=True" in out
    assert "injective=True" in out


def test_audit_output_byte_identical_across_runs(capsys):
    flags = ["audit", "--sample", "200", "--seed", "4", *Q4_FLAGS]
    assert main(flags) == 0
    first = capsys.readouterr().out
    assert main(flags) == 0
    assert capsys.readouterr().out == first
    assert "elapsed" not in first


def test_audit_sample_requires_seed(capsys):
    assert main(["audit", "--sample", "10", *Q4_FLAGS]) == 1
    assert "seed" in capsys.readouterr().err


def test_sweep_json(capsys):
    flags = ["--q", "2", "--ell", "3", "--ground-set", "bruteforce:1", "--code", "gv:2,4,2"]
    assert main(["sweep", "--t-list", "0", "--trials", "5", "--seed", "3", "--json", *flags]) == 0
    out = capsys.readouterr().out
    assert '"radius_violations": 0' in out


def test_config_file_with_flag_override(tmp_path, capsys):
    cfg = tmp_path / "instance.cfg"
    cfg.write_text(
        "# audit instance\nq=4\nell=2\nground_set=xor:all\ncode=gv:4,4,2\n"
    )
    assert main(["build", "--config", str(cfg)]) == 0
    assert "n=16" in capsys.readouterr().out
    # flag overrides the file (and breaks the length constraint)
    assert main(["build", "--config", str(cfg), "--ell", "3"]) == 1


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_unknown_config_key(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("qq=4\n")
    assert main(["build", "--config", str(cfg)]) == 1
    assert "unknown config key" in capsys.readouterr().err
