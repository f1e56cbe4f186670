import json
import subprocess
import sys

import pytest

from ultrametric import jsonio, validate_ultrametric
from ultrametric.cli import main

from cli_corpus import CASES, EXPECTED, GOLDEN, run_case


@pytest.mark.parametrize("name,argv,want_code", CASES, ids=[c[0] for c in CASES])
def test_corpus_matches_golden_bytes(name, argv, want_code, tmp_path):
    code, out, err, written = run_case(argv, tmp_path)
    assert code == want_code
    assert out == (EXPECTED / f"{name}.out").read_text(encoding="utf-8")
    assert err == (EXPECTED / f"{name}.err").read_text(encoding="utf-8")
    for file_name, content in written.items():
        assert content == (EXPECTED / f"{name}.{file_name}").read_text(encoding="utf-8")


@pytest.mark.parametrize("name,argv,want_code", CASES, ids=[c[0] for c in CASES])
def test_corpus_is_deterministic_across_runs(name, argv, want_code, tmp_path):
    (tmp_path / "first").mkdir()
    (tmp_path / "second").mkdir()
    first = run_case(argv, tmp_path / "first")
    second = run_case(argv, tmp_path / "second")
    assert first == second


def test_every_emitted_space_revalidates(tmp_path):
    emits_space = [
        "validate_ok", "validate_merge", "glue", "amalgam", "gen_two_point",
        "gen_crowd", "gen_cauchy", "gen_random", "cluster", "cluster_merge",
        "quotient",
    ]
    by_name = {name: argv for name, argv, _ in CASES}
    for name in emits_space:
        _, out, _, _ = run_case(by_name[name], tmp_path)
        obj = json.loads(out)
        jsonio.space_from_obj(obj)


def test_output_file_flag(tmp_path):
    target = tmp_path / "result.json"
    code, out, err, _ = run_case(
        ["spectrum", "isosceles.json", "-o", str(target)], tmp_path
    )
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8") == '["0", "1", "2"]\n'


def test_reads_stdin_dash(monkeypatch, capsys):
    monkeypatch.setattr(
        "sys.stdin", type("S", (), {"read": staticmethod(lambda: (GOLDEN / "isosceles.json").read_text())})()
    )
    assert main(["spectrum", "-"]) == 0
    assert capsys.readouterr().out == '["0", "1", "2"]\n'


def test_subset_from_file(tmp_path):
    subset = tmp_path / "a.json"
    subset.write_text('["a", "c"]', encoding="utf-8")
    code, out, _, _ = run_case(
        ["hausdorff", "isosceles.json", "--a", f"@{subset}", "--b", '["b"]'], tmp_path
    )
    assert code == 0
    assert out == '{"value": "2"}\n'


def test_help_exits_zero():
    assert main(["--help"]) == 0


def test_diagnostics_plain_when_no_color(monkeypatch, capsys):
    monkeypatch.setenv("NO_COLOR", "1")
    monkeypatch.setattr(sys.stderr, "isatty", lambda: True, raising=False)
    code = main(["validate", str(GOLDEN / "bad_triangle.json")])
    assert code == 1
    err = capsys.readouterr().err
    assert err.startswith('{"error": "TriangleViolation"')
    assert "\x1b[" not in err


def test_diagnostics_colored_on_tty_without_no_color(monkeypatch, capsys):
    monkeypatch.delenv("NO_COLOR", raising=False)
    monkeypatch.setattr(sys.stderr, "isatty", lambda: True, raising=False)
    code = main(["validate", str(GOLDEN / "bad_triangle.json")])
    assert code == 1
    assert capsys.readouterr().err.startswith("\x1b[31merror:\x1b[0m ")


def test_module_entrypoint_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "ultrametric", "validate", "isosceles.json"],
        cwd=GOLDEN,
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout == (EXPECTED / "validate_ok.out").read_text(encoding="utf-8")
    assert result.stderr == ""


def test_exit_code_three_on_forced_oracle_mismatch(monkeypatch, capsys):
    # No real input can trigger exit 3 (that is the point of the gate), so
    # fault-inject an oracle that lies.
    from fractions import Fraction
    import ultrametric.cli as cli_module

    monkeypatch.setattr(cli_module, "ugh_oracle", lambda a, b: Fraction(99))
    code = main(
        [
            "ugh",
            str(GOLDEN / "x_half.json"),
            str(GOLDEN / "x_three_quarters.json"),
            "--oracle",
        ]
    )
    assert code == 3
    assert '"error": "OracleMismatch"' in capsys.readouterr().err


def test_certificate_file_revalidates(tmp_path):
    code, _, _, written = run_case(
        ["ugh", "x_half.json", "x_three_quarters.json", "--certificate", "{tmp}/cert.json"],
        tmp_path,
    )
    assert code == 0
    cert = jsonio.certificate_from_obj(json.loads(written["cert.json"]))
    validate_ultrametric(cert.space.labels, cert.space.dist)
