import io
import json
import os

import pytest

from qgroups.cache import ResultCache, descriptor_hash
from qgroups.cli import (
    EXIT_INCONCLUSIVE,
    EXIT_OK,
    EXIT_USAGE,
    main,
    parse_theta,
    parse_weight,
)


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_parse_helpers():
    assert parse_weight("1,2", 2) == (1, 2)
    assert parse_theta("", 3) == ()
    assert parse_theta("2,1", 3) == (1, 2)
    with pytest.raises(Exception):
        parse_weight("1,2", 3)


def test_irrep_command(capsys):
    code, out = run_cli(["irrep", "--algebra", "A1", "--weight", "3"], capsys)
    assert code == EXIT_OK
    assert "dimension: 4" in out
    code, out = run_cli(["irrep", "--algebra", "A2", "--weight", "1,1",
                         "--format", "json"], capsys)
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["dimension"] == 8
    assert obj["relations_ok"] is True
    qd = obj["quantum_dimension"]
    assert qd == json.loads(out)["quantum_dimension"]


def test_irrep_rejects_non_dominant(capsys):
    code = main(["irrep", "--algebra", "A1", "--weight", "-1"])
    capsys.readouterr()
    assert code == EXIT_USAGE


def test_irrep_rejects_unknown_algebra(capsys):
    code = main(["irrep", "--algebra", "Z9", "--weight", "1"])
    capsys.readouterr()
    assert code == EXIT_USAGE


def test_irrep_cache_cold_warm_identical(tmp_path, capsys):
    args = ["irrep", "--algebra", "A1", "--weight", "2", "--format", "json",
            "--cache-dir", str(tmp_path)]
    code1, out1 = run_cli(args, capsys)
    assert code1 == EXIT_OK
    assert list(tmp_path.glob("*.json"))
    code2, out2 = run_cli(args, capsys)
    assert code2 == EXIT_OK
    assert out1 == out2


def test_corrupted_cache_is_an_integrity_error(tmp_path, capsys):
    args = ["irrep", "--algebra", "A1", "--weight", "2", "--cache-dir", str(tmp_path)]
    assert main(args) == EXIT_OK
    capsys.readouterr()
    entry = next(tmp_path.glob("*.json"))
    entry.write_text("{\"descriptor\": {\"bogus\": 1}, \"payload\": {}}")
    assert main(args) == EXIT_USAGE
    capsys.readouterr()


def test_cache_store_and_load_round_trip(tmp_path):
    cache = ResultCache(str(tmp_path))
    descriptor = {"kind": "irrep", "algebra": "A1", "weight": [1]}
    assert cache.load(descriptor) is None
    cache.store(descriptor, {"x": 1})
    assert cache.load(descriptor) == {"x": 1}
    other = {"kind": "irrep", "algebra": "A1", "weight": [2]}
    assert descriptor_hash(descriptor) != descriptor_hash(other)


def test_verify_quick_json_deterministic(capsys):
    args = ["verify", "--quick", "--check", "dimensions", "--check",
            "haar_positivity", "--format", "json"]
    code1, out1 = run_cli(args, capsys)
    code2, out2 = run_cli(args, capsys)
    assert code1 == code2 == EXIT_OK
    assert out1.encode() == out2.encode()
    report = json.loads(out1)
    assert report["passed"] is True
    assert [c["name"] for c in report["checks"]] == ["dimensions", "haar_positivity"]


def test_verify_unknown_check(capsys):
    code = main(["verify", "--check", "nonsense"])
    capsys.readouterr()
    assert code == EXIT_USAGE


def test_sections_command(capsys):
    code, out = run_cli(["sections", "--algebra", "A2", "--theta", "1",
                         "--v", "trivial", "--trunc", "2", "--format", "json"], capsys)
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["dimensions"]["(1, 1)"] == 8
    assert obj["dimensions"]["(1, 0)"] == 0


def test_borel_weil_command(capsys):
    code, out = run_cli(["borel-weil", "--algebra", "A1", "--theta", "",
                         "--mu", "-2", "--trunc", "3"], capsys)
    assert code == EXIT_OK
    assert "dimension: 3" in out
    assert "(2,)" in out
    # truncation too small: distinct exit code
    code, out = run_cli(["borel-weil", "--algebra", "A1", "--theta", "",
                         "--mu", "-9", "--trunc", "2"], capsys)
    assert code == EXIT_INCONCLUSIVE


def test_frobenius_command(capsys):
    code, out = run_cli(["frobenius", "--algebra", "A1", "--theta", "",
                         "--w", "2", "--v", "0", "--trunc", "3",
                         "--format", "json"], capsys)
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["dims_equal"] is True and obj["dim_reductive"] == 1


def test_haar_command(capsys):
    code, out = run_cli(["haar", "--algebra", "A1", "--pair",
                         "t(1)[1,1]", "star t(1)[1,1]", "--v0", "2"], capsys)
    assert code == EXIT_OK
    assert "16/17" in out
    code, out = run_cli(["haar", "--algebra", "A1", "--pair",
                         "t(1)[1,2]", "t(1)[2,1]", "--format", "json"], capsys)
    assert code == EXIT_OK
    json.loads(out)


def test_haar_rejects_bad_expression(capsys):
    code = main(["haar", "--algebra", "A1", "--pair", "nonsense", "t(1)[1,1]"])
    capsys.readouterr()
    assert code == EXIT_USAGE


def test_config_file_defaults(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"format": "json"}))
    code, out = run_cli(["--config", str(cfg), "irrep", "--algebra", "A1",
                         "--weight", "1"], capsys)
    assert code == EXIT_OK
    assert json.loads(out)["dimension"] == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["irrep", "--algebra", "A1", "--weight", "1",
                 "--format", "json", "--out", str(target)])
    capsys.readouterr()
    assert code == EXIT_OK
    assert json.loads(target.read_text())["dimension"] == 2


def test_frobenius_inconclusive_when_truncation_too_small(capsys):
    code = main(["frobenius", "--algebra", "A1", "--theta", "", "--w", "5",
                 "--v", "1", "--trunc", "2"])
    capsys.readouterr()
    assert code == EXIT_INCONCLUSIVE
