import json

import pytest

import run_experiments
import run_symbolic
from symbolic_powers import Calculator, RunConfig
from symbolic_powers.engine.betti import clear_recursion_cache


@pytest.fixture(autouse=True)
def fresh_cache():
    clear_recursion_cache()


def run(capsys, *argv):
    code = run_symbolic.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ============================================
# gens
# ============================================

def test_gens_pretty(capsys):
    code, out, _ = run(capsys, "gens", "--graph", "complete:3", "--power", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "𝒢(I(G)^(2)): 4 generatori"
    assert any(line.split()[-1] == "x1*x2*x3" for line in lines[1:])


def test_gens_json_for_parallelization(capsys):
    code, out, _ = run(capsys, "gens", "-g", "complete:2", "-s", "2", "--alpha", "2,2",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["alpha"] == [2, 2]
    assert data["graph"]["vertices"] == 4
    assert {g["degree"] for g in data["generators"]} == {4}
    assert all("_" in g["monomial"] for g in data["generators"])


def test_gens_output_is_deterministic(capsys):
    first = run(capsys, "gens", "-g", "cycle:5", "-s", "3", "--format", "csv")
    second = run(capsys, "gens", "-g", "cycle:5", "-s", "3", "--format", "csv")
    assert first == second
    assert first[1].splitlines()[0] == "monomial,degree"


# ============================================
# betti
# ============================================

def test_betti_json_quotient(capsys):
    code, out, _ = run(capsys, "betti", "-g", "complete:3", "-s", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["convention"] == "quotient"
    entries = {(e["i"], e["j"]): e["beta"] for e in data["entries"]}
    assert entries == {(0, 0): 1, (1, 3): 1, (1, 4): 3, (2, 5): 3}


def test_betti_ideal_convention_csv(capsys):
    code, out, _ = run(capsys, "betti", "-g", "complete:3", "-s", "2", "--format", "csv",
                       "--convention", "ideal")
    assert code == 0
    assert out.splitlines() == ["i,j,beta", "0,3,1", "0,4,3", "1,5,3"]


def test_betti_pretty_has_banner(capsys):
    code, out, _ = run(capsys, "betti", "-g", "path:4", "-s", "2")
    assert code == 0
    assert out.startswith("convenzione: quotient")


@pytest.mark.parametrize("method,other", [("recursive", "oracle"), ("formula", "oracle"),
                                          ("formula", "recursive")])
def test_betti_compare_methods(capsys, method, other):
    code, out, _ = run(capsys, "betti", "-g", "complete:3", "-s", "4", "--method", method,
                       "--compare", other)
    assert code == 0
    assert f"confronto {method} vs {other}: uguali" in out


def test_betti_formula_needs_complete_graph(capsys):
    code, _, err = run(capsys, "betti", "-g", "path:3", "-s", "2", "--method", "formula")
    assert code == 2
    assert "errore" in err


def test_betti_degree_cap(capsys):
    code, _, err = run(capsys, "betti", "-g", "complete:3", "-s", "2", "--degree-cap", "4")
    assert code == 3
    assert "Limite superato" in err


def test_betti_field_option(capsys):
    code, out, _ = run(capsys, "betti", "-g", "complete:3", "-s", "3", "--field", "qq",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["field"] == "qq"


# ============================================
# split
# ============================================

def test_split_verify(capsys):
    code, out, _ = run(capsys, "split", "--m", "3", "--r", "3", "--power", "3", "--verify")
    assert code == 0
    assert "|𝒢(L1∩L2)|=1" in out
    assert "valido (esaustiva" in out


def test_split_chain_json(capsys):
    code, out, _ = run(capsys, "split", "--m", "3", "--power", "2", "--chain", "--verify",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert [p["certificate"]["r"] for p in payload] == [3, 2, 1]
    assert all(p["verdict"]["valid"] for p in payload)


def test_split_excluded_is_usage_error(capsys):
    code, _, err = run(capsys, "split", "--m", "5", "--r", "2", "--power", "2")
    assert code == 2
    assert "r = m - s - 1" in err


def test_split_excluded_forced_fails_verification(capsys):
    code, out, _ = run(capsys, "split", "--m", "5", "--r", "2", "--power", "2",
                       "--allow-excluded", "--verify")
    assert code == 1
    assert "violazione" in out


def test_split_chain_broken(capsys):
    code, _, err = run(capsys, "split", "--m", "4", "--power", "2", "--chain")
    assert code == 2
    assert "r=1" in err


def test_split_sample_needs_seed(capsys):
    code, _, err = run(capsys, "split", "--m", "3", "--r", "3", "--power", "2", "--sample", "5")
    assert code == 2
    assert "--seed" in err


# ============================================
# socle / parallel / profiles
# ============================================

def test_socle_k3_cube(capsys):
    code, out, _ = run(capsys, "socle", "-g", "complete:3", "-s", "3")
    assert code == 0
    assert out.splitlines()[0] == "min_socle_degree: 4"


@pytest.mark.parametrize("s", [1, 3, 6])
def test_socle_k2(capsys, s):
    code, out, _ = run(capsys, "socle", "-g", "complete:2", "-s", str(s), "--method", "formula",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["min_socle_degree"] == 2 * s - 1


def test_socle_rejects_non_complete_graphs(capsys):
    code, out, err = run(capsys, "socle", "-g", "path:3", "-s", "2")
    assert code == 2
    assert out == ""
    assert "grafo completo" in err


def test_parallel_check_bound(capsys):
    code, out, _ = run(capsys, "parallel", "-g", "complete:3", "-s", "2", "--alpha", "2,1,1",
                       "--check-bound")
    assert code == 0
    assert "limite dimostrato: vale" in out


def test_parallel_csv(capsys):
    code, out, _ = run(capsys, "parallel", "-g", "complete:2", "-s", "2", "--alpha", "2,2",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "i,j,base,parallel,proven,conjectured,weak"


def test_parallel_requires_alpha(capsys):
    code, _, _ = run(capsys, "parallel", "-g", "complete:3", "-s", "2")
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["gens", "-s", "2", "--alpha", "0,1"],
    ["gens", "-g", "complete:3"],
    ["gens", "-g", "complete:3", "--power", "0"],
    ["betti", "-g", "complete:3", "--power", "-2"],
    ["split", "--m", "3", "--r", "3", "--power", "0"],
    ["betti", "-s", "2", "--method", "magic"],
    ["nope"],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_profiles(capsys):
    code, out, _ = run(capsys, "profiles")
    assert code == 0
    assert "  - desk:" in out


def test_log_file_and_verbose(capsys, tmp_path):
    log = tmp_path / "events.json"
    code, out, err = run(capsys, "betti", "-g", "complete:3", "-s", "3", "--method", "recursive",
                         "--log", str(log), "--verbose")
    assert code == 0
    assert "▶ betti" in err
    assert "▶" not in out
    summary = json.loads(log.read_text(encoding="utf-8"))
    assert summary["run_id"] == "betti"
    assert summary["by_type"]["recursion_step"] >= 1


# ============================================
# CALCOLATORE ED ESPERIMENTI
# ============================================

def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(method="magic")
    with pytest.raises(ValueError):
        RunConfig(sample=10)
    with pytest.raises(ValueError):
        RunConfig(threads=0)
    with pytest.raises(ValueError):
        RunConfig(s=0)


def test_survey_kpis():
    plan = {
        "recursion": [{"m": 3, "s": 2}, {"m": 3, "s": 3}],
        "parallel": [{"graph": "complete:2", "alpha": [2, 2], "s": 2}],
    }
    survey = Calculator().run_survey(plan)
    assert survey.kpis["recursion"]["cases"] == 2
    assert survey.kpis["recursion"]["agreement_rate"] == 1.0
    assert survey.kpis["parallel"]["proven_bound_rate"] == 1.0
    assert len(survey.to_frame()) == 3


def test_run_experiments(tmp_path, capsys):
    plan = tmp_path / "plan.yaml"
    plan.write_text(
        "name: prova\n"
        "recursion:\n"
        "  - m: 3\n"
        "    s: [2, 3]\n"
        "parallel:\n"
        "  - graph: complete:3\n"
        "    alpha: [2, 1, 1]\n"
        "    s: 2\n",
        encoding="utf-8",
    )
    output = tmp_path / "out.json"
    table = tmp_path / "out.csv"
    code = run_experiments.main(["--plan", str(plan), "--output", str(output), "--csv", str(table)])
    assert code == 0
    data = json.loads(output.read_text(encoding="utf-8"))
    assert len(data["records"]) == 3
    assert data["kpis"]["recursion"]["agreement_rate"] == 1.0
    assert table.read_text(encoding="utf-8").splitlines()[0].startswith("kind,case")
    assert "📊 REPORT: prova" in capsys.readouterr().out


def test_run_experiments_rejects_incomplete_plan(tmp_path, capsys):
    plan = tmp_path / "plan.yaml"
    plan.write_text("parallel:\n  - graph: complete:3\n    s: 2\n", encoding="utf-8")
    assert run_experiments.main(["--plan", str(plan)]) == 2
    assert run_experiments.main(["--plan", str(tmp_path / "missing.yaml")]) == 2
