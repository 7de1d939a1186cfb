import csv
import io
import shutil
import subprocess
import sys
from importlib import resources

import pytest
from conftest import CASE_I, MORSE, solved

from tietzhua import cli, spectrum
from tietzhua.catalog import CatalogError, bundled_table1, load_catalog, parse_catalog
from tietzhua.errors import ConvergenceError
from tietzhua.model import potential_th

TABLE1_NAMES = ["HF", "N2", "I2", "H2", "O2", "O2+"]


def block(name, D, r_e, b_h, c_h, mu, source="synthetic test well"):
    return f"name={name}\nD_cm1={D}\nre_A={r_e}\nbh_invA={b_h}\nch={c_h}\nmu_amu={mu}\nsource={source}\n\n"


@pytest.fixture
def synthetic(tmp_path):
    path = tmp_path / "synthetic.cat"
    text = "# synthetic wells\n\n"
    for p in (CASE_I[0], CASE_I[1], MORSE):
        text += block(p.name, p.D, p.r_e, p.b_h, p.c_h, p.mu)
    path.write_text(text, encoding="utf-8")
    return str(path)


def run(args, capsys):
    code = cli.main(args)
    out, err = capsys.readouterr()
    return code, out, err


def rows(text, delimiter):
    return list(csv.reader(io.StringIO(text), delimiter=delimiter))


# catalog


def test_bundled_fixture_has_six_threshold_only_entries():
    entries = bundled_table1()
    assert [e.name for e in entries] == TABLE1_NAMES
    assert all(e.threshold_only for e in entries)
    assert all(e.D is None and e.mu is None for e in entries)


def test_fixture_file_loads_from_path():
    path = resources.files("tietzhua").joinpath("data/table1.cat")
    with resources.as_file(path) as real:
        assert [e.name for e in load_catalog(real)] == TABLE1_NAMES


def test_fixture_shape_values():
    hf = bundled_table1()[0]
    assert (hf.b_h, hf.r_e) == (1.94207, 0.917)


def test_empty_file(tmp_path):
    path = tmp_path / "empty.cat"
    path.write_text("", encoding="utf-8")
    assert load_catalog(path) == []
    assert parse_catalog("# only a comment\n\n") == []


def test_complete_entry_round_trips_to_params(synthetic):
    entries = load_catalog(synthetic)
    assert [e.name for e in entries] == ["I-shallow", "I-mid", "V"]
    assert not entries[0].threshold_only
    assert entries[0].params() == CASE_I[0]
    assert entries[0].params(0.5).c_h == 0.5


def test_rejects_ch_out_of_range():
    with pytest.raises(CatalogError, match=r"line 5: ch must satisfy \|ch\| < 1"):
        parse_catalog(block("x", 1000, 1.0, 1.0, 1.5, 1.0))


def test_duplicate_name_names_the_line():
    text = block("x", 1000, 1.0, 1.0, 0.1, 1.0) + block("x", 1000, 1.0, 1.0, 0.2, 1.0)
    with pytest.raises(CatalogError, match=r"line 9: duplicate molecule 'x' \(first defined on line 1\)"):
        parse_catalog(text)


@pytest.mark.parametrize("text, message", [
    ("name=x\nre_A\n", "line 2: expected key=value"),
    ("name=x\nfoo=1\n", "line 2: unknown key 'foo'"),
    ("name=x\nre_A=abc\nbh_invA=1\n", "line 2: re_A is not a number"),
    ("name=x\nre_A=1\nre_A=2\n", "line 3: re_A repeated"),
    ("name=x\nbh_invA=1\n", "missing re_A"),
    ("name=x\nre_A=1\nbh_invA=1\nD_cm1=100\nmu_amu=1\n", "source= is required"),
    ("name=x\nre_A=1\nbh_invA=1\nD_cm1=-5\nsource=s\n", "line 4: D_cm1 must be positive"),
    ("name=x\nre_A=?\nbh_invA=1\n", "re_A is required"),
    ("name=x\nre_A=1\nbh_invA=inf\n", "line 3: bh_invA must be finite"),
])
def test_parse_errors_carry_line_numbers(text, message):
    with pytest.raises(CatalogError, match=message.replace("(", r"\(").replace(")", r"\)")):
        parse_catalog(text)


def test_threshold_only_entry_cannot_be_solved():
    with pytest.raises(CatalogError, match="D_cm1, mu_amu, ch not given"):
        bundled_table1()[0].params()


def test_missing_catalog_file(tmp_path):
    with pytest.raises(CatalogError, match="cannot read catalog"):
        load_catalog(tmp_path / "nope.cat")


# classify and table1


@pytest.mark.parametrize("ch, case", [("0.2", "I"), ("-0.1", "IV"), ("0", "V"), ("0.1", "III")])
def test_classify_hf(capsys, ch, case):
    code, out, _ = run(["classify", "--molecule", "HF", "--ch", ch], capsys)
    table = rows(out, "\t")
    assert code == 0
    assert table[0] == ["name", "case", "threshold", "r0"]
    assert table[1][:3] == ["HF", case, "%.10e" % 0.16849011594]
    assert (table[1][3] == "-") == (case in ("IV", "V"))


def test_classify_requires_ch_for_threshold_only_entries(capsys):
    code, _, err = run(["classify", "--molecule", "HF"], capsys)
    assert code == 2 and "pass --ch" in err


def test_table1_self_test_passes(capsys):
    code, out, _ = run(["table1"], capsys)
    table = rows(out, "\t")
    assert code == 0
    assert [r[0] for r in table[1:]] == TABLE1_NAMES
    assert all(r[-1] == "ok" for r in table[1:])
    assert max(float(r[5]) for r in table[1:]) <= 1e-8


def test_table1_self_test_detects_mismatch(tmp_path, capsys):
    path = tmp_path / "bad.cat"
    path.write_text("name=HF\nre_A=0.917\nbh_invA=1.9421\n", encoding="utf-8")
    code, out, _ = run(["table1", "--catalog", str(path)], capsys)
    assert code == 4
    assert rows(out, "\t")[1][-1] == "MISMATCH"


# spectrum, validate, curves


def test_spectrum_morse_ladder_is_byte_identical(synthetic, capsys):
    code, out, _ = run(["spectrum", "--catalog", synthetic, "--molecule", "V"], capsys)
    table = rows(out, "\t")
    assert code == 0
    assert table[0] == ["n_r", "E_cm1", "method"]
    expected = [[str(s.n_r), "%.10e" % s.E, "morse_closed"] for s in solved(MORSE).states]
    assert table[1:] == expected


def test_spectrum_case_i_closed_form(synthetic, capsys):
    code, out, _ = run(["spectrum", "--catalog", synthetic, "--molecule", "I-mid"], capsys)
    table = rows(out, "\t")
    assert code == 0
    assert [r[1] for r in table[1:]] == ["%.10e" % e for e in solved(CASE_I[1]).energies]
    assert {r[2] for r in table[1:]} == {"closed_form"}


def test_spectrum_validate_column(synthetic, capsys):
    code, out, _ = run(["spectrum", "--catalog", synthetic, "--molecule", "I-shallow", "--validate"], capsys)
    table = rows(out, "\t")
    assert code == 0
    assert table[0] == ["n_r", "E_cm1", "method", "oracle_E_cm1", "rel_diff"]
    assert len(table) == 4
    assert all(float(r[4]) <= 1e-6 for r in table[1:])


def test_validate_command(synthetic, capsys):
    code, out, _ = run(["validate", "--catalog", synthetic, "--molecule", "V"], capsys)
    assert code == 0
    assert rows(out, "\t")[0][-1] == "rel_diff"


def test_spectrum_ch_override(synthetic, capsys):
    code, out, _ = run(["spectrum", "--catalog", synthetic, "--molecule", "I-mid", "--ch", "0.6"], capsys)
    assert code == 0
    expected = spectrum.solve(CASE_I[1].with_ch(0.6)).energies
    assert [r[1] for r in rows(out, "\t")[1:]] == ["%.10e" % e for e in expected]


def test_potential_curve_minimum_and_asymptote(synthetic, capsys):
    p = CASE_I[1]
    code, out, _ = run(["curve", "--catalog", synthetic, "--molecule", p.name, "--what", "potential",
                        "--r-min", "0.7", "--r-max", "1.7", "--samples", "101"], capsys)
    table = rows(out, ",")
    assert code == 0 and table[0] == ["r_A", "potential"]
    values = [float(r[1]) for r in table[1:]]
    assert min(values) == 0.0 and float(table[1 + values.index(0.0)][0]) == pytest.approx(p.r_e, abs=1e-12)
    code, out, _ = run(["curve", "--catalog", synthetic, "--molecule", p.name], capsys)
    last = rows(out, ",")[-1]
    assert float(last[0]) == pytest.approx(p.r_e + 60 / p.b_h, rel=1e-10)
    assert float(last[1]) == pytest.approx(p.D, rel=1e-6)
    assert last[1] == "%.10e" % potential_th(p, float(last[0]))


def test_case_i_wavefunction_curve_has_two_sign_changes(synthetic, capsys):
    code, out, _ = run(["curve", "--catalog", synthetic, "--molecule", "I-mid", "--what", "wavefunction",
                        "--n", "2"], capsys)
    values = [float(r[1]) for r in rows(out, ",")[1:]]
    assert code == 0 and len(values) == cli.CURVE_SAMPLES
    assert sum(1 for a, b in zip(values, values[1:]) if a * b < 0) == 2


def test_wavefunction_command_writes_lf_file(synthetic, tmp_path, capsys):
    target = tmp_path / "psi.csv"
    code, out, _ = run(["wavefunction", "--catalog", synthetic, "--molecule", "V", "--n", "1",
                        "--samples", "50", "--out", str(target)], capsys)
    data = target.read_bytes()
    assert code == 0 and out == ""
    assert b"\r" not in data and data.endswith(b"\n")
    lines = data.decode("utf-8").splitlines()
    assert lines[0] == "r_A,wavefunction" and len(lines) == 51
    first = lines[1].split(",")
    assert first[0] == "%.10e" % float(first[0])


# exit codes


def test_exit_code_for_unknown_molecule(synthetic, capsys):
    code, _, err = run(["spectrum", "--catalog", synthetic, "--molecule", "nope"], capsys)
    assert code == 2 and "not in catalog" in err


def test_exit_code_for_bad_catalog(tmp_path, capsys):
    path = tmp_path / "bad.cat"
    path.write_text(block("x", 1000, 1.0, 1.0, 1.5, 1.0), encoding="utf-8")
    code, _, err = run(["classify", "--catalog", str(path)], capsys)
    assert code == 2 and "line 5" in err


def test_exit_code_for_missing_arguments(synthetic, capsys):
    assert run(["spectrum", "--catalog", synthetic], capsys)[0] == 2
    assert run(["spectrum", "--molecule", "x"], capsys)[0] == 2
    assert run(["wavefunction", "--catalog", synthetic, "--molecule", "V", "--n", "99"], capsys)[0] == 2
    with pytest.raises(SystemExit) as info:
        cli.main(["bogus"])
    assert info.value.code == 2


def test_exit_code_for_numerical_failure(synthetic, capsys, monkeypatch):
    def fail(params):
        raise ConvergenceError("series not converged", partial=0.0, terms=20000)

    monkeypatch.setattr(cli.spectrum, "solve", fail)
    code, _, err = run(["spectrum", "--catalog", synthetic, "--molecule", "V"], capsys)
    assert code == 3 and "numerical failure" in err


def test_console_script():
    exe = shutil.which("th")
    command = [exe] if exe else [sys.executable, "-m", "tietzhua.cli"]
    done = subprocess.run(command + ["table1"], capture_output=True, text=True, check=False)
    assert done.returncode == 0
    assert done.stdout.splitlines()[0].startswith("name\tb_h\tr_e")
