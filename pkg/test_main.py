"""
Command-line tests for bilat-lp
Golden outputs, exit codes and option validation through click's test runner
"""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

import config
import runner
import semantics
from main import cli
from models.interpretation import Interpretation
from semantics import WellFoundedRoute

FIXTURES = Path(__file__).parent / "fixtures"
RUNNING = str(FIXTURES / "running.blp")
EXMY = str(FIXTURES / "exmy.blp")
RUNEX6 = str(FIXTURES / "runex6.blp")
EXMY_KK = str(FIXTURES / "exmy_kk.interp")


@pytest.fixture
def cli_runner():
    return CliRunner()


def invoke(cli_runner, *args):
    return cli_runner.invoke(cli, [str(a) for a in args])


def golden(name):
    return json.loads((FIXTURES / name).read_text())


def without_hash(report):
    assert len(report.pop("program_hash")) == 64
    return report


def test_classify_running_example_json(cli_runner):
    """Test classify matches the committed running-example report"""
    result = invoke(cli_runner, "classify", RUNNING, "--format", "json")
    assert result.exit_code == 0
    assert without_hash(json.loads(result.stdout)) == golden("running.classify.json")


def test_classify_is_deterministic(cli_runner):
    """Test identical inputs give identical bytes"""
    first = invoke(cli_runner, "classify", RUNNING, "--format", "json", "--workers", "3")
    second = invoke(cli_runner, "classify", RUNNING, "--format", "json")
    assert first.stdout == second.stdout


def test_classify_table(cli_runner):
    """Test the aligned classification table"""
    result = invoke(cli_runner, "classify", RUNNING)
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0].split() == [
        "I", "p", "q", "r", "Sp(p)", "Sp(q)", "Sp(r)", "U",
        "model", "cl", "sup", "ded", "stable", "KK", "WF",
    ]
    assert lines[4].split() == [
        "I3", "f", "bot", "bot", "f", "bot", "bot", "{p}", "x", "x", "x", "x", "x", "-", "x",
    ]
    assert "KK:" in lines
    assert "stable models:" in lines


def test_exmy_support_json(cli_runner):
    """Test support at the exmy Kripke-Kleene model"""
    result = invoke(cli_runner, "support", EXMY, "--kind", "interval", "--at", EXMY_KK,
                    "--format", "json")
    assert result.exit_code == 0
    assert without_hash(json.loads(result.stdout)) == golden("exmy.support.json")


def test_runex6_wf_json(cli_runner):
    """Test the well-founded model of runex6"""
    result = invoke(cli_runner, "wf", RUNEX6, "--kind", "interval", "--format", "json")
    assert result.exit_code == 0
    assert without_hash(json.loads(result.stdout)) == golden("runex6.wf.json")


def test_kk_text(cli_runner):
    """Test the Kripke-Kleene model in text form"""
    result = invoke(cli_runner, "kk", EXMY, "--kind", "interval")
    assert result.exit_code == 0
    assert result.stdout == "a = [0,1]\nb = [0,1]\nc = [0.7,1]\nd = [0.7,0.7]\n"


def test_wf_trace_text(cli_runner):
    """Test the nested trace dump of the Ψ′ route"""
    result = invoke(cli_runner, "wf", RUNEX6, "--kind", "interval", "--route", "psi-prime", "--trace")
    assert result.exit_code == 0
    out = result.stdout
    assert out.startswith("a = [0.3,0.5]\nb = [0.3,0.5]\nc = [0.5,0.7]\n")
    assert "# well_founded[psi-prime] (k-increasing, converged after 3 iterations)\n" in out
    assert "## well_founded[psi-prime] application 1: psi_prime (t-increasing, converged after 3 iterations)\n" in out
    assert "## well_founded[psi-prime] step 1\na = [0.3,0.5]\nb = [0.3,0.5]\nc = [0.2,1]\n" in out


def test_wf_all_routes(cli_runner):
    """Test --route all compares every route"""
    result = invoke(cli_runner, "wf", RUNNING, "--route", "all", "--format", "json")
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["route"] == "all"
    assert report["routes_checked"] == ["psi-prime", "pi", "pi-tilde", "phi-prime", "w-p"]
    assert report["model"] == {"p": "f", "q": "bot", "r": "bot"}


def test_stable_enumeration_table(cli_runner):
    """Test the stable-model table"""
    result = invoke(cli_runner, "stable", RUNNING)
    assert result.exit_code == 0
    assert result.stdout == (
        "stable models:\n"
        "M   p  q    r\n"
        "--  -  ---  ---\n"
        "M1  f  bot  bot\n"
        "M2  f  f    t\n"
        "M3  f  t    f\n"
        "M4  f  top  top\n"
    )


@pytest.mark.parametrize("method", ["psi-prime", "phi-prime", "kk-completion", "min-k", "gl-reduct"])
def test_stable_check_at(cli_runner, tmp_path, method):
    """Test --at checks one interpretation with each method"""
    at = tmp_path / "i4.interp"
    at.write_text("p = f\nq = f\nr = t\n")
    result = invoke(cli_runner, "stable", RUNNING, "--at", at, "--method", method)
    assert result.exit_code == 0
    assert result.stdout == f"stable ({method})\n"


def test_stable_check_json_interpretation(cli_runner, tmp_path):
    """Test JSON interpretation files"""
    at = tmp_path / "i7.json"
    at.write_text(json.dumps({"p": "t", "q": "t", "r": "f"}))
    result = invoke(cli_runner, "stable", RUNNING, "--at", at, "--format", "json")
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["is_stable"] is False
    assert report["method"] == "psi-prime"


def test_eval(cli_runner, tmp_path):
    """Test Φ(I) and the flags of one interpretation"""
    at = tmp_path / "i8.interp"
    at.write_text("p = top\nq = t\nr = f\n")
    result = invoke(cli_runner, "eval", RUNNING, "--at", at)
    assert result.exit_code == 0
    out = result.stdout
    assert out.startswith("# phi\np = top\nq = t\nr = f\n# support\np = f\nq = bot\nr = f\n")
    assert "supported = true\n" in out
    assert "deductively_closed = false\n" in out
    assert out.endswith("# unfounded\np r\n")


def test_support_with_oracle(cli_runner):
    """Test --oracle on a classical program"""
    result = invoke(cli_runner, "support", RUNNING, "--oracle")
    assert result.exit_code == 0
    assert result.stdout == (
        "# support\np = f\nq = bot\nr = bot\n"
        "# completed\np = f\nq = bot\nr = bot\n"
        "# unfounded\np\n"
        "# oracle agrees\n"
    )


def test_trace_support(cli_runner):
    """Test the h-sequence dump"""
    result = invoke(cli_runner, "trace", EXMY, "--kind", "interval", "--at", EXMY_KK,
                    "--operator", "support")
    assert result.exit_code == 0
    assert result.stdout.startswith("# support (k-decreasing, converged after 3 iterations)\n")
    assert "## support step 2\na = [0,0]\nb = [0,0.3]\nc = [0,0.7]\nd = [0,0.7]\n" in result.stdout


def test_trace_phi_prime_json(cli_runner):
    """Test the Φ′ trace carries its support computation"""
    result = invoke(cli_runner, "trace", RUNEX6, "--kind", "interval", "--operator", "phi-prime",
                    "--format", "json")
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["label"] == "phi_prime"
    assert report["start"]["label"] == "support"
    assert report["steps"][-1] == {"a": "[0.3,0.5]", "b": "[0.3,0.5]", "c": "[0.5,0.7]"}


def test_crosscheck_program(cli_runner):
    """Test crosscheck on one program"""
    result = invoke(cli_runner, "crosscheck", RUNNING)
    assert result.exit_code == 0
    assert result.stdout == "seed 0: 1 programs, 64 interpretations, 0 divergences\n"


def test_crosscheck_corpus(cli_runner):
    """Test crosscheck on a small seeded corpus"""
    result = invoke(cli_runner, "crosscheck", "--seed", "5", "--count", "4", "--atoms", "2",
                    "--format", "json")
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["programs"] == 4
    assert report["divergences"] == []


def test_verbose_flag(cli_runner):
    """Test -v keeps stdout clean"""
    try:
        result = invoke(cli_runner, "-vv", "kk", RUNNING)
    finally:
        config.configure_logging()
    assert result.exit_code == 0
    assert result.stdout == "p = bot\nq = bot\nr = bot\n"


# Exit codes

def test_syntax_error_exit_1(cli_runner, tmp_path):
    """Test parse errors exit 1 with the position"""
    program = tmp_path / "bad.blp"
    program.write_text("p <- q.\nr <- & s.\n")
    result = invoke(cli_runner, "kk", program)
    assert result.exit_code == 1
    assert result.stdout == ""
    assert result.stderr.startswith("error: line 2")


def test_interval_constant_under_four_exit_1(cli_runner):
    """Test kind mismatch exits 1"""
    result = invoke(cli_runner, "kk", EXMY)
    assert result.exit_code == 1


def test_missing_file_exit_1(cli_runner, tmp_path):
    """Test unreadable input exits 1"""
    result = invoke(cli_runner, "kk", tmp_path / "missing.blp")
    assert result.exit_code == 1
    assert "cannot read" in result.stderr


def test_invalid_option_combination_exit_1(cli_runner):
    """Test classify refuses the interval bilattice"""
    result = invoke(cli_runner, "classify", EXMY, "--kind", "interval")
    assert result.exit_code == 1
    assert "needs --kind four" in result.stderr


def test_unknown_route_exit_1(cli_runner):
    """Test route validation"""
    result = invoke(cli_runner, "wf", RUNNING, "--route", "sideways")
    assert result.exit_code == 1
    assert "route must be one of" in result.stderr


def test_route_not_applicable_exit_1(cli_runner):
    """Test W_P refuses interval programs"""
    result = invoke(cli_runner, "wf", RUNEX6, "--kind", "interval", "--route", "w-p")
    assert result.exit_code == 1


def test_limit_exceeded_exit_2(cli_runner):
    """Test enumeration limits exit 2"""
    result = invoke(cli_runner, "classify", RUNNING, "--limit", "2")
    assert result.exit_code == 2
    assert "limit" in result.stderr


def test_route_divergence_exit_3(cli_runner, monkeypatch):
    """Test disagreeing routes exit 3"""
    original = semantics.well_founded

    def broken(g, route=WellFoundedRoute.PSI_PRIME):
        model, trace = original(g, route)
        if route is WellFoundedRoute.W_P:
            return Interpretation.bottom_k(g.base, g.kind), trace
        return model, trace

    monkeypatch.setattr(semantics, "well_founded", broken)
    result = invoke(cli_runner, "wf", RUNNING, "--route", "all")
    assert result.exit_code == 3
    assert "disagree" in result.stderr


def test_unexpected_exception_exit_3(cli_runner, monkeypatch):
    """Test crashes are reported as internal errors"""

    def crash(*args, **kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr(runner, "execute", crash)
    result = invoke(cli_runner, "kk", RUNNING)
    assert result.exit_code == 3
    assert "internal error: boom" in result.stderr


def test_format_choices(cli_runner):
    """Test --format accepts table and json only"""
    default = invoke(cli_runner, "kk", RUNNING)
    table = invoke(cli_runner, "kk", RUNNING, "--format", "table")
    assert table.exit_code == 0
    assert table.stdout == default.stdout
    result = invoke(cli_runner, "kk", RUNNING, "--format", "text")
    assert result.exit_code == 1
    assert "--format" in result.stderr


def test_seed_is_crosscheck_only(cli_runner):
    """Test commands other than crosscheck reject --seed"""
    result = invoke(cli_runner, "kk", RUNNING, "--seed", "1")
    assert result.exit_code == 1
    assert "--seed" in result.stderr


def test_classify_computes_kk_and_wf_once(cli_runner, monkeypatch):
    """Test classify reuses one Kripke-Kleene and one well-founded computation"""
    calls = {"kk": 0, "wf": 0}
    original_kk, original_wf = semantics.kripke_kleene, semantics.well_founded

    def counting_kk(g):
        calls["kk"] += 1
        return original_kk(g)

    def counting_wf(g, route=WellFoundedRoute.PSI_PRIME):
        calls["wf"] += 1
        return original_wf(g, route)

    for module in (semantics, runner):
        monkeypatch.setattr(module, "kripke_kleene", counting_kk)
        monkeypatch.setattr(module, "well_founded", counting_wf)
    result = invoke(cli_runner, "classify", RUNNING, "--format", "json")
    assert result.exit_code == 0
    assert without_hash(json.loads(result.stdout)) == golden("running.classify.json")
    assert calls == {"kk": 1, "wf": 1}

def test_version(cli_runner):
    """Test the version option"""
    result = invoke(cli_runner, "--version")
    assert result.exit_code == 0
    assert "bilat-lp" in result.stdout


if __name__ == "__main__":
    pytest.main([__file__])
