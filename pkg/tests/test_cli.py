import subprocess
import sys
import time

CLI = [sys.executable, "-m", "hyperfold.cli"]


def run_cli(*args, stdin=None, timeout=120):
    return subprocess.run(
        CLI + list(args),
        input=stdin,
        capture_output=True,
        text=True,
        timeout=timeout,
    )


def test_eval_success_and_stats_line():
    proc = run_cli("eval", "3->3->2")
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert lines[0] == "7625597484987"
    assert lines[1].startswith("steps=") and " peak_digits=" in lines[1]


def test_eval_quiet_prints_value_only():
    proc = run_cli("--quiet", "eval", "ack(3,3)")
    assert proc.returncode == 0
    assert proc.stdout == "61\n"


def test_eval_is_byte_identical_across_runs():
    first = run_cli("eval", "2^^4")
    second = run_cli("eval", "2^^4")
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0
    assert first.stdout.splitlines()[0] == "65536"


def test_parse_error_exit_2_with_position():
    proc = run_cli("eval", "3->->2")
    assert proc.returncode == 2
    assert proc.stdout == ""
    assert "offset 3" in proc.stderr


def test_budget_exit_3_and_steps_report():
    proc = run_cli("--max-steps", "1000", "eval", "3->3->3")
    assert proc.returncode == 3
    assert "step budget" in proc.stderr
    steps_line = [l for l in proc.stderr.splitlines() if l.startswith("steps=")]
    assert steps_line, proc.stderr
    steps_used = int(steps_line[0].split()[0].split("=")[1])
    assert steps_used <= 1000


def test_domain_error_exit_4():
    proc = run_cli("eval", "conway(0)")
    assert proc.returncode == 4
    assert proc.stdout == ""


def test_form_flags():
    for form in ("reference", "primitive", "both"):
        proc = run_cli("--form", form, "--quiet", "eval", "2->3->2")
        assert proc.returncode == 0
        assert proc.stdout == "16\n"


def test_magnitude_cap_exits_3():
    proc = run_cli("--max-digits", "3", "eval", "knuth(10,1,50)")
    assert proc.returncode == 3
    assert "digits" in proc.stderr


def test_repl_session():
    proc = run_cli("--quiet", "repl", stdin="2^^4\n\n1->2\n:quit\nignored\n")
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["65536", "1"]


def test_repl_recovers_from_errors():
    proc = run_cli("--quiet", "repl", stdin="3->\nbad(\n5->2\n:quit\n")
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["25"]
    assert proc.stderr.count("parse error") == 2


def test_repl_eof_ends_cleanly():
    proc = run_cli("--quiet", "repl", stdin="7\n")
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["7"]


def test_repl_unknown_colon_command():
    proc = run_cli("--quiet", "repl", stdin=":help\n:quit\n")
    assert proc.returncode == 0
    assert "unknown command" in proc.stderr


def test_selftest_quick_passes_within_a_second():
    start = time.perf_counter()
    proc = run_cli("selftest", "quick")
    elapsed = time.perf_counter() - start
    assert proc.returncode == 0
    assert "0 failed" in proc.stdout
    assert elapsed < 1.0, f"selftest quick took {elapsed:.2f} s"


def test_selftest_full_passes_within_a_minute():
    start = time.perf_counter()
    proc = run_cli("selftest", "full")
    elapsed = time.perf_counter() - start
    assert proc.returncode == 0
    assert "0 failed" in proc.stdout
    assert elapsed < 60.0, f"selftest full took {elapsed:.2f} s"


def test_selftest_fails_under_tiny_budget():
    proc = run_cli("--max-steps", "100", "selftest", "full")
    assert proc.returncode == 1
    assert "FAIL" in proc.stdout


def test_flag_validation():
    proc = run_cli("--max-steps", "0", "eval", "1->2")
    assert proc.returncode == 2


def test_big_output_prints_in_full():
    # 2^^5 = 2^65536: 19729 digits of plain decimal on one line
    proc = run_cli("--quiet", "eval", "2^^5")
    assert proc.returncode == 0
    value = proc.stdout.strip()
    assert len(value) == 19729
    assert value.startswith("200352993") and value.endswith("19156736")
