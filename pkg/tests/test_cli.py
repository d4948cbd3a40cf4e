import subprocess
import sys

import pytest

from rainbowtrees import count_rst_jl, load_ecg, verify_jl
from rainbowtrees.cli import main

K3_RAINBOW_ECG = "n 3\ne 0 1 1\ne 0 2 2\ne 1 2 3\n"
K4_PROPER_ECG = "n 4\ne 0 1 1\ne 2 3 1\ne 0 2 2\ne 1 3 2\ne 0 3 3\ne 1 2 3\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# mu-table
# ---------------------------------------------------------------------------

def test_mu_table_csv_rows(capsys):
    code, out, _ = run(capsys, "mu-table", "--max", "14", "--csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,mu,mu_over_n,tau_num,tau_den,beta_num,beta_den"
    row14 = lines[13].split(",")
    assert row14[0] == "14" and row14[2] == "393216"
    row13 = lines[12].split(",")
    assert (row13[5], row13[6]) == ("2535", "2048")


def test_mu_table_single_row(capsys):
    code, out, _ = run(capsys, "mu-table", "--max", "2", "--csv")
    assert code == 0
    assert out.strip().split("\n")[1:] == ["2,2,1,2,1,1,1"]


def test_mu_table_plain(capsys):
    code, out, _ = run(capsys, "mu-table", "--max", "3")
    assert code == 0
    assert "16/3" in out and "9/8" in out


def test_mu_table_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["mu-table", "--max", "1"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# beta-plot
# ---------------------------------------------------------------------------

def test_beta_plot_writes_csv(tmp_path, capsys):
    target = tmp_path / "beta.csv"
    code, out, err = run(capsys, "beta-plot", "--max", "8", "-o", str(target))
    assert code == 0
    lines = target.read_text().strip().split("\n")
    assert lines[0] == "n,beta,beta_decimal"
    assert len(lines) == 9
    assert lines[4] == "4,1,1.000000000000"
    assert lines[5] == "5,75/64,1.171875000000"
    assert out == ""  # payload goes to the file, diagnostics to stderr


def test_beta_plot_byte_stable(tmp_path, capsys):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    run(capsys, "beta-plot", "--max", "32", "-o", str(a))
    run(capsys, "beta-plot", "--max", "32", "-o", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_beta_plot_full_range(tmp_path, capsys):
    target = tmp_path / "beta256.csv"
    code, _, _ = run(capsys, "beta-plot", "--max", "256", "-o", str(target))
    assert code == 0
    lines = target.read_text().strip().split("\n")
    assert len(lines) == 257  # header + one row per n
    assert lines[256] == "256,1,1.000000000000"


def test_beta_plot_alternation_report(tmp_path, capsys):
    code, _, err = run(
        capsys, "beta-plot", "--max", "40", "-o", str(tmp_path / "x.csv"), "--alternation"
    )
    assert code == 0
    assert "alternation:" in err and "no violations" in err


def test_beta_plot_unwritable(tmp_path, capsys):
    code, _, err = run(capsys, "beta-plot", "--max", "4", "-o", str(tmp_path / "no" / "x.csv"))
    assert code == 1
    assert err.strip()


# ---------------------------------------------------------------------------
# count / verify-jl
# ---------------------------------------------------------------------------

@pytest.fixture
def min23_file(tmp_path, capsys):
    path = tmp_path / "min23.ecg"
    code, out, _ = run(capsys, "bip", "--n", "2", "--m", "3", "--ecg", "min")
    assert code == 0
    path.write_text(out)
    return str(path)


def test_count_all_methods_agree(min23_file, capsys):
    answers = []
    for method in ("jl", "brute", "mtt"):
        code, out, _ = run(capsys, "count", "--input", min23_file, "--method", method)
        assert code == 0
        answers.append(out.strip())
    assert answers == ["3", "3", "3"]


def test_count_jl_fails_on_non_jl(tmp_path, capsys):
    path = tmp_path / "k3.ecg"
    path.write_text(K3_RAINBOW_ECG)
    code, out, err = run(capsys, "count", "--input", str(path), "--method", "jl")
    assert code == 1
    assert "not JL" in err and "3 colors" in err
    code, out, _ = run(capsys, "count", "--input", str(path), "--method", "brute")
    assert code == 0 and out.strip() == "3"


def test_count_parse_error_carries_line(tmp_path, capsys):
    path = tmp_path / "bad.ecg"
    path.write_text("n 3\ne 0 9 1\n")
    code, _, err = run(capsys, "count", "--input", str(path), "--method", "brute")
    assert code == 1
    assert "line 2" in err


def test_count_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["count", "--input", "x", "--method", "bogus"])
    assert exc.value.code == 2


def test_verify_jl_success(min23_file, capsys):
    code, out, _ = run(capsys, "verify-jl", "--input", min23_file)
    assert code == 0
    assert out.startswith("JL: 5 vertices")


def test_verify_jl_witness_dot(min23_file, capsys):
    code, out, _ = run(capsys, "verify-jl", "--input", min23_file, "--witness")
    assert code == 0
    assert out.startswith("digraph")
    assert "cut=" in out


def test_verify_jl_failures(tmp_path, capsys):
    proper = tmp_path / "k4.ecg"
    proper.write_text(K4_PROPER_ECG)
    code, _, err = run(capsys, "verify-jl", "--input", str(proper))
    assert code == 1 and "no monochromatic cut" in err
    disc = tmp_path / "disc.ecg"
    disc.write_text("n 4\ne 0 1 1\ne 2 3 2\n")
    code, _, err = run(capsys, "verify-jl", "--input", str(disc))
    assert code == 1 and "disconnected" in err


# ---------------------------------------------------------------------------
# bip / tree constructors
# ---------------------------------------------------------------------------

def test_bip_formats(capsys):
    code, out, _ = run(capsys, "bip", "--n", "3", "--m", "2")
    assert code == 0 and out.strip() == "min=3 max=4"
    code, out, _ = run(capsys, "bip", "--n", "2", "--m", "3")
    assert code == 0 and out.strip() == "min=3 max=4"  # orientation-normalized
    code, out, _ = run(capsys, "bip", "--n", "3", "--m", "2", "--csv")
    assert out == "n,m,nu_min,nu_max\n3,2,3,4\n"


def test_bip_ecg_constructors(capsys):
    for mode, expected in (("min", 3), ("max", 4)):
        code, out, _ = run(capsys, "bip", "--n", "3", "--m", "2", "--ecg", mode)
        assert code == 0
        g = load_ecg(out)
        assert verify_jl(g).ok
        assert count_rst_jl(g) == expected


def test_tree_default_output(capsys):
    code, out, _ = run(capsys, "tree", "--kind", "max", "--n", "5")
    assert code == 0
    assert "rst_count=24" in out
    assert "(5 (4 (3 (2 1 1) 1) 1) 1)" in out


def test_tree_dot_output(capsys):
    code, out, _ = run(capsys, "tree", "--kind", "max", "--n", "5", "--dot")
    assert code == 0
    for label in ("5", "4", "3", "2"):
        assert f'[label="{label}"]' in out
    assert out.count('[label="1"]') == 5


def test_tree_ecg_output(capsys):
    code, out, _ = run(capsys, "tree", "--kind", "min", "--n", "5", "--ecg")
    assert code == 0
    g = load_ecg(out)
    assert verify_jl(g).ok
    assert count_rst_jl(g) == 12


def test_constructor_files_agree_across_methods(tmp_path, capsys):
    # every ECG the CLI can construct counts identically by jl, brute and mtt
    commands = [
        ("tree", "--kind", "min", "--n", "6", "--ecg"),
        ("tree", "--kind", "max", "--n", "5", "--ecg"),
        ("bip", "--n", "3", "--m", "2", "--ecg", "min"),
        ("bip", "--n", "4", "--m", "2", "--ecg", "max"),
    ]
    for i, command in enumerate(commands):
        code, out, _ = run(capsys, *command)
        assert code == 0
        path = tmp_path / f"g{i}.ecg"
        path.write_text(out)
        answers = set()
        for method in ("jl", "brute", "mtt"):
            code, out, _ = run(capsys, "count", "--input", str(path), "--method", method)
            assert code == 0
            answers.add(out.strip())
        assert len(answers) == 1, command


# ---------------------------------------------------------------------------
# montecarlo
# ---------------------------------------------------------------------------

def test_montecarlo_output(capsys):
    code, out, _ = run(capsys, "montecarlo", "--n", "4", "--samples", "2000", "--seed", "42")
    assert code == 0
    assert "exact_expectation=32/9" in out
    assert "exact_expectation_decimal=3.555555555556" in out
    assert "markov_bound=5.436563656918" in out


def test_montecarlo_deterministic(capsys):
    _, first, _ = run(capsys, "montecarlo", "--n", "5", "--samples", "500", "--seed", "9")
    _, second, _ = run(capsys, "montecarlo", "--n", "5", "--samples", "500", "--seed", "9")
    assert first == second


def test_montecarlo_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["montecarlo", "--n", "3", "--samples", "10", "--seed", "0"])
    assert exc.value.code == 2


def test_montecarlo_scale_guard(capsys):
    code, _, err = run(capsys, "montecarlo", "--n", "9", "--samples", "10", "--seed", "0")
    assert code == 1
    assert "guard" in err


# ---------------------------------------------------------------------------
# module entry point
# ---------------------------------------------------------------------------

def test_module_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "rainbowtrees", "mu-table", "--max", "3", "--csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("n,mu,")
