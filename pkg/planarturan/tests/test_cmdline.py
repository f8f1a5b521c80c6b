# -*- coding: utf-8 -*-
import json
import os
import tempfile
from warnings import catch_warnings, filterwarnings

import pytest

from planarturan import (
    PatternSpec,
    certify,
    graph6_decode,
    icosa_union_witness,
    icosahedron,
    load_certificate,
    write_certificate,
    write_graph6,
)
from planarturan.__main__ import COMMANDS, EXIT_DATA, EXIT_FAILED, EXIT_FOUND, EXIT_USAGE, main


def run(argv):
    """Run the command line and return its exit status"""
    with pytest.raises(SystemExit) as info:
        main(argv)
    return info.value.code


def test_no_command(capsys):
    assert run([]) == EXIT_USAGE


def test_subcommands():
    assert set(COMMANDS) == {"witness", "check", "ex-exact", "bounds", "verify-lemmas", "gen"}


def test_bad_flag():
    assert run(["bounds", "--h", "x", "--k", "2", "--n", "10"]) == EXIT_USAGE


def test_bounds(capsys):
    assert run(["bounds", "--h", "1", "--k", "5", "--n", "12"]) == 0
    out = capsys.readouterr().out
    assert "lower ........... 30" in out
    assert "upper ........... 30" in out
    assert "equality ........ yes" in out


def test_bounds_json(capsys):
    assert run(["bounds", "--h", "2", "--k", "5", "--n", "12", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["upper"] == [34, 1]
    assert payload["lower_floor"] == 30


def test_bounds_unsupported(capsys):
    assert run(["bounds", "--h", "3", "--k", "3", "--n", "10"]) == EXIT_DATA
    assert "1 <= h <= 2 <= k <= 5" in capsys.readouterr().err


def test_witness(capsys):
    """Test that the witness command prints graph6 and writes a verifiable certificate"""
    with tempfile.TemporaryDirectory() as dname:
        path = os.path.join(dname, "witness.json")
        assert run(["witness", "--h", "2", "--k", "5", "--n", "24", "--out", path]) == 0
        certificate = load_certificate(path)
    g = graph6_decode(capsys.readouterr().out)
    assert g.m == 60
    assert certificate.graph == g


def test_check_graph6(capsys):
    """Test that a graph containing the pattern sets the exit status"""
    with tempfile.TemporaryDirectory() as dname:
        path = os.path.join(dname, "graphs.g6")
        with open(path, "w") as file:
            write_graph6([icosahedron()], file)
        assert run(["check", "--h", "1", "--k", "2", "--in", path]) == EXIT_FOUND
        assert run(["check", "--h", "1", "--k", "5", "--in", path]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("1: n=12 m=30 planar=True free=False")
    assert "copy=" in out[0]
    assert "free=True" in out[1]


def test_check_certificate(capsys):
    certificate = certify(icosa_union_witness(1, 24), PatternSpec(1, 5))
    with tempfile.TemporaryDirectory() as dname:
        path = os.path.join(dname, "witness.json")
        write_certificate(certificate, path)
        assert run(["check", "--h", "5", "--k", "1", "--in", path]) == 0
        # certificate for another pattern
        assert run(["check", "--h", "1", "--k", "4", "--in", path]) == EXIT_DATA


def test_check_malformed(capsys):
    with tempfile.TemporaryDirectory() as dname:
        path = os.path.join(dname, "graphs.g6")
        with open(path, "w") as file:
            file.write("Bw\nBx\n")
        assert run(["check", "--h", "1", "--k", "2", "--in", path]) == EXIT_DATA
    assert "Line 2" in capsys.readouterr().err


def test_check_missing_file():
    assert run(["check", "--h", "1", "--k", "2", "--in", "does-not-exist.g6"]) == EXIT_DATA


def test_ex_exact(capsys):
    assert run(["ex-exact", "--h", "1", "--k", "2", "--n", "5", "--threads", "1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["m"] == 9
    assert payload["provenance"] == "search result"
    assert payload["search"]["value"] == 9
    assert payload["search"]["exact"]


def test_ex_exact_derived(capsys):
    """Test that exact values not covered by an equality are labelled as derived"""
    assert run(["ex-exact", "--h", "1", "--k", "2", "--n", "6", "--threads", "1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert "derived" in payload["labels"]


def test_ex_exact_partial(capsys):
    with catch_warnings():
        filterwarnings("ignore", category=UserWarning)
        assert run(["ex-exact", "--h", "1", "--k", "2", "--n", "7", "--max-nodes", "3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert "partial" in payload["labels"]
    assert not payload["search"]["exact"]


def test_ex_exact_out_of_range(capsys):
    assert run(["ex-exact", "--h", "1", "--k", "2", "--n", "11"]) == EXIT_USAGE
    assert run(["ex-exact", "--h", "3", "--k", "3", "--n", "5"]) == EXIT_DATA


def test_gen(capsys):
    assert run(["gen", "--n", "4"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 11
    assert run(["gen", "--n", "5", "--planar"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 33


def test_gen_free(capsys):
    assert run(["gen", "--n", "5", "--free", "1,1"]) == 0
    graphs = [graph6_decode(line) for line in capsys.readouterr().out.splitlines()]
    assert graphs
    assert all(g.n == 5 for g in graphs)
    assert run(["gen", "--n", "5", "--free", "1"]) == EXIT_USAGE


def test_verify_lemmas(capsys):
    assert run(["verify-lemmas", "--h", "1", "--k", "2", "--samples", "10", "--seed", "0", "--lemma", "euler"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("euler")
    assert "violations=0" in out


def test_verify_lemmas_json(capsys):
    status = run(
        ["verify-lemmas", "--h", "1", "--k", "2", "--samples", "5", "--seed", "0", "--lemma", "euler", "--json"]
    )
    assert status in (0, EXIT_FAILED)
    reports = json.loads(capsys.readouterr().out)
    assert [r["lemma"] for r in reports] == ["euler"]
    assert reports[0]["violations"] == 0


def test_verify_lemmas_unknown():
    assert run(["verify-lemmas", "--h", "1", "--k", "2", "--lemma", "nope"]) == EXIT_USAGE


def test_verify_lemmas_default_seed(capsys):
    """Test that runs without a seed are reproducible"""
    argv = ["verify-lemmas", "--h", "1", "--k", "3", "--samples", "12", "--lemma", "component", "--json"]
    run(argv)
    first = capsys.readouterr().out
    run(argv)
    assert capsys.readouterr().out == first
    assert json.loads(first)[0]["instances"] > 0
