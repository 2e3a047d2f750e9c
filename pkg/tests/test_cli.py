import io
import json
import subprocess
import sys

import pytest

from primesig.cli import main, parse_params_file, verify_number


def test_verify_perrin_full_worked_example(capsys):
    assert main(["verify", "7", "--test", "perrin-full"]) == 0
    out = capsys.readouterr().out
    assert "(5, 6, 5, 5, 0, 3)" in out
    assert "Q[a=5]" in out
    record = json.loads(out.split("record: ")[1])
    assert record == {
        "n": "7",
        "test": "perrin-full",
        "rs": "0,-1",
        "verdict": "pass",
        "class": "Q[a=5]",
        "jacobi": "-1",
    }


def test_verify_korselt_certificate(capsys):
    assert main(["verify", "561", "--test", "korselt"]) == 0
    out = capsys.readouterr().out
    assert "validates" in out
    record = json.loads(out.split("record: ")[1])
    assert record["factors"] == "3:1,11:1,17:1"
    assert record["verdict"] == "pass"


def test_verify_korselt_failure_reason(capsys):
    assert main(["verify", "8", "--test", "korselt"]) == 0
    out = capsys.readouterr().out
    assert "not-squarefree" in out


def test_verify_frobenius(capsys):
    assert main(["verify", "9", "--test", "frobenius", "--poly=1,0,1"]) == 0
    out = capsys.readouterr().out
    record = json.loads(out.split("record: ")[1])
    assert record["verdict"] == "probable-prime"
    assert record["degrees"] == "2,0"


def test_verify_weak_census_number(capsys):
    assert main(["verify", "271441", "--test", "perrin-weak"]) == 0
    record = json.loads(capsys.readouterr().out.split("record: ")[1])
    assert record["verdict"] == "pass"


def test_verify_custom_rs(capsys):
    assert main(["verify", "11", "--test", "perrin-weak", "--rs", "1,2"]) == 0
    record = json.loads(capsys.readouterr().out.split("record: ")[1])
    assert record["rs"] == "1,2"


def test_verify_domain_error_exits_one(capsys):
    assert main(["verify", "46", "--test", "perrin-full"]) == 1
    assert "error:" in capsys.readouterr().err


def test_verify_bad_rs_exits_one(capsys):
    assert main(["verify", "7", "--test", "perrin-weak", "--rs", "zero,cat"]) == 1


def test_verify_number_function_returns_record():
    sink = io.StringIO()
    record = verify_number(59, "frobenius", poly=(-1, -1, 0, 1), out=sink)
    assert record["degrees"] == "3,0,0"
    assert "jacobi stage" in sink.getvalue()


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_search_cli_roundtrip(tmp_path):
    out = tmp_path / "hits.jsonl"
    ckpt = tmp_path / "scan.ckpt"
    rc = main([
        "search", "--from", "3", "--to", "2000",
        "--test", "frobenius", "--poly=1,0,1",
        "--out", str(out), "--checkpoint", str(ckpt),
    ])
    assert rc == 0
    lines = out.read_text().splitlines()
    assert any(json.loads(l)["n"] == "341" for l in lines)
    # Identical rerun: same bytes.
    blob = out.read_bytes()
    rc = main([
        "search", "--from", "3", "--to", "2000",
        "--test", "frobenius", "--poly=1,0,1",
        "--out", str(out), "--checkpoint", str(ckpt),
    ])
    assert rc == 0
    assert out.read_bytes() == blob


def test_search_resume_without_checkpoint_fails(tmp_path, capsys):
    rc = main([
        "search", "--from", "3", "--to", "100", "--test", "perrin-weak",
        "--out", str(tmp_path / "x.jsonl"), "--resume",
    ])
    assert rc == 1
    assert "error:" in capsys.readouterr().err


def test_search_resume_hash_mismatch_fails(tmp_path, capsys):
    out = tmp_path / "o.jsonl"
    ckpt = tmp_path / "o.ckpt"
    assert main([
        "search", "--from", "3", "--to", "1000", "--test", "perrin-weak",
        "--out", str(out), "--checkpoint", str(ckpt),
    ]) == 0
    rc = main([
        "search", "--from", "3", "--to", "2000", "--test", "perrin-weak",
        "--out", str(out), "--checkpoint", str(ckpt), "--resume",
    ])
    assert rc == 1
    assert "refusing to resume" in capsys.readouterr().err


def test_construct_preset_exit_codes(tmp_path, capsys):
    out = tmp_path / "certs.jsonl"
    assert main(["construct", "--preset", "classic-Q", "--out", str(out)]) == 0
    records = [json.loads(l) for l in out.read_text().splitlines()]
    assert [r["n"] for r in records] == ["10267951", "23729234761"]
    capsys.readouterr()

    assert main(["construct", "--preset", "empty-range",
                 "--out", str(tmp_path / "none.jsonl")]) == 2
    assert "harvest" in capsys.readouterr().err


def test_construct_unknown_preset(capsys):
    assert main(["construct", "--preset", "nope"]) == 1
    assert "unknown preset" in capsys.readouterr().err


def test_construct_requires_exactly_one_source(capsys):
    assert main(["construct"]) == 1
    assert main(["construct", "--preset", "classic-Q", "--params", "x"]) == 1


def test_construct_params_file(tmp_path, capsys):
    cfg = tmp_path / "job.cfg"
    cfg.write_text(
        "y=3\nq_min=3\nq_max=8\nk_min=1\nk_max=100\n"
        "x_bound=3000\nt_max=5\npoly=-1,1\nbudget=100000\n"
    )
    out = tmp_path / "c.jsonl"
    assert main(["construct", "--params", str(cfg), "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 2


def test_construct_params_file_t_max_two_exits_two(tmp_path):
    cfg = tmp_path / "job.cfg"
    cfg.write_text(
        "y=3\nq_min=3\nq_max=8\nk_min=1\nk_max=100\n"
        "x_bound=3000\nt_max=2\npoly=-1,1\nbudget=100000\n"
    )
    assert main(["construct", "--params", str(cfg),
                 "--out", str(cfg.with_suffix(".jsonl"))]) == 2


def test_construct_malformed_params_exit_one(tmp_path, capsys):
    bad1 = tmp_path / "bad1.cfg"
    bad1.write_text("y=3\nwhat=ever\n")
    assert main(["construct", "--params", str(bad1)]) == 1
    bad2 = tmp_path / "bad2.cfg"
    bad2.write_text("y=3\nq_min=3\n")  # required keys missing
    assert main(["construct", "--params", str(bad2)]) == 1
    bad3 = tmp_path / "bad3.cfg"
    bad3.write_text("y=three\nq_min=3\nq_max=8\nk_min=1\nk_max=4\n"
                    "x_bound=300\nt_max=5\npoly=-1,1\n")
    assert main(["construct", "--params", str(bad3)]) == 1
    assert main(["construct", "--params", str(tmp_path / "absent.cfg")]) == 1


def test_parse_params_file_round_trip(tmp_path):
    cfg = tmp_path / "p.cfg"
    cfg.write_text(
        "y=5\nq_min=10\nq_max=60\nk_min=2\nk_max=40\n"
        "x_bound=500\nt_max=4\npoly=-1,-1,1\nbudget=777\n"
    )
    params = parse_params_file(str(cfg))
    assert params.y == 5
    assert params.q_range == (10, 60)
    assert params.poly == (-1, -1, 1)
    assert params.budget == 777


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "primesig.cli", "verify", "7", "--test", "perrin-full"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "Q[a=5]" in proc.stdout
