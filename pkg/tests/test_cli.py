"""Command line behavior: output formats, files, and exit codes."""

import io

import pytest

from railcirc import parse_netlist, stats
from railcirc.cli import main

from helpers import FIXTURES

CONTAINS_ONE = str(FIXTURES / "contains_one.tm")
EQ_NOT = str(FIXTURES / "eq_not.net")


def test_flatten_bits_subcommand(capsys):
    assert main(["flatten", "--bits", "0110"]) == 0
    assert capsys.readouterr().out == "10010110\n"


def test_flatten_circuit_subcommand(capsys):
    assert main(["flatten", EQ_NOT]) == 0
    flat = parse_netlist(capsys.readouterr().out)
    s = stats(flat)
    assert s.not_count == 0 and s.input_count == 4


def test_compile_tm_stdout(capsys):
    assert main(["compile-tm", CONTAINS_ONE, "-n", "2", "-t", "4"]) == 0
    c = parse_netlist(capsys.readouterr().out)
    assert c.inputs == ("x0", "x1")
    assert c.outputs == ("accepted",)
    assert stats(c).not_count == 2


def test_compile_tm_flattened_and_out_file(tmp_path, capsys):
    out = tmp_path / "m.net"
    assert main(["compile-tm", CONTAINS_ONE, "-n", "2", "-t", "4",
                 "--flattened", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    c = parse_netlist(out.read_text())
    assert stats(c).not_count == 0
    assert c.inputs == ("x0__0", "x0__1", "x1__0", "x1__1")


def test_compile_tm_gate_cap(capsys):
    assert main(["--gate-cap", "50", "compile-tm", CONTAINS_ONE,
                 "-n", "2", "-t", "4"]) == 2
    assert "error:" in capsys.readouterr().err


def test_stats_line(capsys):
    assert main(["stats", EQ_NOT]) == 0
    assert capsys.readouterr().out == \
        "inputs=2 consts=0 and=2 or=1 not=2 outputs=1 depth=3 total=7\n"


def test_emit_dot(tmp_path, capsys):
    assert main(["emit-dot", EQ_NOT]) == 0
    assert capsys.readouterr().out.startswith("digraph circuit {")
    out = tmp_path / "c.dot"
    assert main(["emit-dot", EQ_NOT, "--out", str(out)]) == 0
    assert out.read_text().rstrip().endswith("}")


def test_verify_equiv_raw(tmp_path, capsys):
    assert main(["verify", "equiv", EQ_NOT, EQ_NOT]) == 0
    assert capsys.readouterr().out == "equivalent\n"
    other = tmp_path / "xor.net"
    other.write_text("input x\ninput y\nnot nx x\nnot ny y\nand a x ny\n"
                     "and b nx y\nor g a b\noutput g\n")
    assert main(["verify", "equiv", EQ_NOT, str(other)]) == 1
    line = capsys.readouterr().out
    assert line.startswith("kind=EQUIVALENCE witness=")


def test_verify_equiv_flattened(tmp_path, capsys):
    flat = tmp_path / "flat.net"
    assert main(["compile-tm", CONTAINS_ONE, "-n", "2", "-t", "4",
                 "--flattened", "--out", str(flat)]) == 0
    raw = tmp_path / "raw.net"
    assert main(["compile-tm", CONTAINS_ONE, "-n", "2", "-t", "4",
                 "--out", str(raw)]) == 0
    capsys.readouterr()
    assert main(["verify", "equiv", "--flattened", str(raw), str(flat)]) == 0
    assert capsys.readouterr().out == "equivalent\n"


def test_verify_monotone(tmp_path, capsys):
    mono = tmp_path / "mono.net"
    mono.write_text("input x\ninput y\nor g x y\noutput g\n")
    assert main(["verify", "monotone", str(mono)]) == 0
    assert capsys.readouterr().out == "monotone\n"
    assert main(["verify", "monotone", EQ_NOT]) == 1
    line = capsys.readouterr().out
    assert line == "kind=MONOTONICITY witness=00<=10 expected=1,1 observed=1,0\n"


def test_verify_census(capsys):
    assert main(["verify", "census", "-n", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["0000", "0001", "0101", "0011", "0111", "1111"]
    assert main(["verify", "census", "-n", "1"]) == 0
    assert capsys.readouterr().out.splitlines() == ["00", "01", "11"]


def test_verify_census_rejects_large_arity(capsys):
    assert main(["verify", "census", "-n", "9"]) == 2
    assert "error:" in capsys.readouterr().err


def test_verify_eq_refute(capsys):
    assert main(["verify", "eq-refute"]) == 0
    out = capsys.readouterr().out
    assert "(0,0) <= (0,1) <= (1,1)" in out
    assert out.splitlines()[-1] == \
        "kind=MONOTONICITY witness=00<=01<=11 expected=1,1,1 observed=1,0,1"


def test_verify_eq_refute_two_bits(capsys):
    assert main(["verify", "eq-refute", "-n", "2"]) == 0
    out = capsys.readouterr().out
    assert "(0,0,0,0) <= (0,0,0,1) <= (0,1,0,1)" in out


def test_stream_flatten(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("0110\n"))
    assert main(["stream-flatten"]) == 0
    captured = capsys.readouterr()
    assert captured.out == "10010110"
    assert captured.err.strip() == "read=4 written=8 peak_state_bits=5"


def test_stream_flatten_rejects_junk(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("01a1\n"))
    assert main(["stream-flatten"]) == 2
    assert "error:" in capsys.readouterr().err


def test_missing_file_is_a_usage_error(capsys):
    assert main(["stats", "/nonexistent/nothing.net"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_bad_netlist_is_a_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.net"
    bad.write_text("input x\nand g x ghost\noutput g\n")
    assert main(["stats", str(bad)]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error: line 2")


def test_unknown_subcommand_exits_2(capsys):
    assert main(["explode"]) == 2
    assert main([]) == 2
    capsys.readouterr()


def test_seed_flag_is_accepted(capsys):
    assert main(["--seed", "7", "verify", "census", "-n", "1"]) == 0
    capsys.readouterr()
