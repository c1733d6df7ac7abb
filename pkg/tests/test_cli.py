from __future__ import annotations

import json
import subprocess
import sys

import pytest

from lieaffine.cli import (
    EXIT_INPUT, EXIT_INTERNAL, EXIT_OK, EXIT_OUT_OF_SCOPE, bundled_fixtures, render_text, run,
)

HEAD = "format 1\ndim 2\n"
ONE = "format 1\ndim 1\n"


def write(tmp_path, text: str, name: str = "doc.lie") -> str:
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def fixture_path(tmp_path, name: str) -> str:
    return write(tmp_path, dict(bundled_fixtures())[name], name)


def test_structure_text_and_json(tmp_path):
    f = fixture_path(tmp_path, "sl2_torus.lie")
    code, out = run(["structure", f])
    assert code == EXIT_OK and out.startswith("structure: sl2-torus")
    code, out = run(["structure", f, "--json"])
    d = json.loads(out)
    assert d["command"] == "structure" and d["summary"]["structure"] == "3 0 0 3"


def test_decide_exit_codes(tmp_path):
    code, out = run(["decide", fixture_path(tmp_path, "affine_group_orbit.lie"), "--json", "--verify"])
    d = json.loads(out)
    assert code == EXIT_OK and d["summary"]["decide"] == "affinely_closed"
    assert d["data"]["verification"] == "passed"
    code, out = run(["decide", fixture_path(tmp_path, "sl2_finite_subgroup.lie"), "--json"])
    d = json.loads(out)
    assert code == EXIT_OUT_OF_SCOPE and d["summary"]["decide.lie_level"] == "not_affinely_closed"


@pytest.mark.parametrize("text,fragment", [
    ("format 1\n", "missing 'dim'"),
    (HEAD + "[group]\n[1 0; 0 x]\n", "line 4, col 9"),
    (HEAD + "[group]\n[0 1; 0 0]\n[representation]\nstandard +\n[vector]\n1 0\n", "representation"),
    (HEAD + "[group]\n[0 1; 0 0]\n[representation]\nsquare\n[vector]\n1 0\n", "unknown term"),
    (HEAD + "[group]\n[0 1; 0 0]\n[representation]\nstandard\n[vector]\n1 0 0\n", "vector has length"),
    (HEAD + "[group]\n[0 1; 0 0]\n[vector]\n[1 0; 0 0]\n", "adjoint"),
])
def test_input_errors_exit_3(tmp_path, text, fragment):
    cmd = "orbit" if "[vector]" in text else "structure"
    code, out = run([cmd, write(tmp_path, text)])
    assert code == EXIT_INPUT
    assert out.startswith("input error:") and fragment in out


def test_missing_file_is_input_error(tmp_path):
    code, out = run(["structure", str(tmp_path / "nope.lie")])
    assert code == EXIT_INPUT


def test_polyprobe_errors(tmp_path):
    bad_action = ONE + "[polynomial]\nvars x y\naction x = x\n"
    assert run(["polyprobe", write(tmp_path, bad_action)])[0] == EXIT_INPUT
    bad_poly = ONE + "[polynomial]\nvars x\ngenerators x +\n"
    assert run(["polyprobe", write(tmp_path, bad_poly)])[0] == EXIT_INPUT


def test_degree_cap_flag(tmp_path):
    f = fixture_path(tmp_path, "poly_invariants.lie")
    code, out = run(["polyprobe", f, "--json", "--degree-cap", "5"])
    d = json.loads(out)
    assert code == EXIT_OK
    assert d["data"]["invariants"] == ["1", "y", "y^2", "y^3", "y^4", "y^5"]


def test_explicit_representation(tmp_path):
    # the Borel subalgebra acting on k^1 through the character diag(a, -a) -> 2a
    text = HEAD + ("[group]\n[1 0; 0 -1]\n[0 1; 0 0]\n[representation]\nexplicit(1)\n[2]\n[0]\n"
                   "[vector]\n1\n")
    code, out = run(["orbit", write(tmp_path, text), "--json"])
    d = json.loads(out)
    assert code == EXIT_OK
    assert d["summary"]["orbit.stabilizer_dim"] == "1"
    # weights inconsistent with the bracket are rejected
    bad = text.replace("[2]\n[0]", "[2]\n[1]")
    code, out = run(["orbit", write(tmp_path, bad, "bad.lie")])
    assert code == EXIT_INPUT and "homomorphism" in out


def test_explicit_representation_matches_standard(tmp_path):
    base = HEAD + "[group]\n[1 0; 0 0]\n[0 1; 0 0]\n[vector]\n1 1\n[representation]\n"
    std = json.loads(run(["orbit", write(tmp_path, base + "standard\n", "a.lie"), "--json"])[1])
    exp = json.loads(run(["orbit", write(tmp_path, base + "explicit(2)\n[1 0; 0 0]\n[0 1; 0 0]\n", "b.lie"),
                          "--json"])[1])
    assert std["data"]["stabilizer"] == exp["data"]["stabilizer"]


def test_representation_algebra(tmp_path):
    text = HEAD + "[group]\n[1 0; 0 -1]\n[0 1; 0 0]\n[0 0; 1 0]\n[representation]\n" \
                  "(standard * dual(standard)) + trivial(1)\n[vector]\n1 0 0 1 5\n"
    d = json.loads(run(["orbit", write(tmp_path, text), "--json"])[1])
    # identity of V (x) V* plus a trivial vector: fixed by all of sl2
    assert d["data"]["representation_dim"] == 5 and d["data"]["fixed_by_group"]
    assert d["summary"]["orbit.stabilizer_dim"] == "3"


def test_out_flag(tmp_path):
    target = tmp_path / "report.json"
    code, out = run(["structure", fixture_path(tmp_path, "sl3_torus.lie"), "--json", "--out", str(target)])
    assert code == EXIT_OK and out == ""
    assert json.loads(target.read_text())["summary"]["structure"] == "8 0 0 8"


def test_corpus_passes_and_is_deterministic():
    code, first = run(["corpus", "--json", "--verify"])
    assert code == EXIT_OK
    d = json.loads(first)
    assert d["data"]["passed"] == d["data"]["total"] == len(bundled_fixtures())
    assert run(["corpus", "--json", "--verify"])[1] == first


def test_corpus_failure_exits_4(tmp_path):
    text = dict(bundled_fixtures())["sl2_torus.lie"].replace("decide affinely_closed", "decide not_affinely_closed")
    write(tmp_path, text, "broken.lie")
    code, out = run(["corpus", str(tmp_path)])
    assert code == EXIT_INTERNAL and "FAIL" in out
    code, out = run(["corpus", str(tmp_path / "broken.lie"), "--json"])
    assert code == EXIT_INTERNAL and json.loads(out)["data"]["passed"] == 0


def test_corpus_reports_parse_errors(tmp_path):
    write(tmp_path, "garbage\n", "bad.lie")
    code, out = run(["corpus", str(tmp_path), "--json"])
    entry = json.loads(out)["data"]["fixtures"][0]
    assert code == EXIT_INTERNAL and entry["error"].startswith("input error")


def test_stdin_and_module_entry(tmp_path):
    text = dict(bundled_fixtures())["sl2_torus.lie"]
    proc = subprocess.run([sys.executable, "-m", "lieaffine", "decide", "-", "--json"], input=text,
                          capture_output=True, text=True)
    assert proc.returncode == EXIT_OK
    assert json.loads(proc.stdout)["summary"]["decide"] == "affinely_closed"
    proc = subprocess.run([sys.executable, "-m", "lieaffine", "structure", "-"], input="format 1\n",
                          capture_output=True, text=True)
    assert proc.returncode == EXIT_INPUT and proc.stdout == "" and "input error" in proc.stderr


def test_version():
    proc = subprocess.run([sys.executable, "-m", "lieaffine", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and "kernel" in proc.stdout


def test_render_text_shapes():
    out = render_text({"a": [1, 2], "b": {"c": "x y"}, "d": ["p q", "r"]})
    assert "a: [1 2]" in out and "c: x y" in out and "- p q" in out


def test_empty_generator_list(tmp_path):
    f = write(tmp_path, HEAD + "[group]\n")
    code, out = run(["structure", f, "--json"])
    assert code == EXIT_OK and json.loads(out)["summary"]["structure"] == "0 0 0 0"


def test_decide_requires_connected_flag(tmp_path):
    code, out = run(["decide", write(tmp_path, HEAD + "[group]\n[0 1; 0 0]\n[subgroup]\n")])
    assert code == EXIT_INPUT and "connected" in out
    code, out = run(["decide", write(tmp_path, HEAD + "connected yes\n[group]\n[0 1; 0 0]\n", "b.lie")])
    assert code == EXIT_INPUT and "subgroup" in out


def test_zero_vector_orbits_closed(tmp_path):
    text = HEAD + "[group]\n[1 0; 0 -1]\n[0 1; 0 0]\n[representation]\nstandard\n[vector]\n0 0\n" \
                  "[torus-weights]\n1\n0\n[metabelian]\n1 -1\n"
    d = json.loads(run(["orbit", write(tmp_path, text), "--json"])[1])
    assert d["summary"]["orbit.torus"] == d["summary"]["orbit.group"] == "closed"
    assert d["summary"]["orbit.stabilizer_dim"] == "2"
