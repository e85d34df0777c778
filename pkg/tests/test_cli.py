import sys
import os
import io
import json
import logging
from contextlib import redirect_stderr, redirect_stdout

# Add project root to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from modules.cli import main, parse_args

# Configure logging
logging.basicConfig(level=logging.INFO)


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        status = main(list(argv))
    return status, out.getvalue(), err.getvalue()


def test_parse_args():
    print("[TEST] Argument parsing...")
    command, positional, overrides, quiet = parse_args(["expand", "[t", "r", "s]", "--graph", "rst", "--quiet"])
    assert command == "expand"
    assert positional == ["[t r s]"]
    assert overrides == {"graph_path": "rst"}
    assert quiet
    print("[PASS] Parsing verified.")


def test_mult():
    print("[TEST] mult [a] [a]...")
    status, out, _ = run("mult", "[a]", "[a]", "--graph", "free2", "--format", "text", "--quiet")
    assert status == 0
    assert out == "1 + p [a]\n"
    print("[PASS] Product printed.")


def test_expand():
    print("[TEST] expand [a]...")
    status, out, _ = run("expand", "[a]", "--graph", "free2", "--quiet")
    assert status == 0
    data = json.loads(out)
    assert set(data["terms"]) == {"T1[a]", "p P[a]"}
    print("[PASS] Expansion printed.")


def test_classify_and_hypotheses():
    print("[TEST] classify and hypotheses...")
    status, out, _ = run("classify", "--graph", "free3", "--q", "1", "--quiet")
    assert status == 0
    assert json.loads(out)["classification"] == "Factor"

    status, out, _ = run("hypotheses", "--graph", "k23", "--quiet")
    assert status == 0
    data = json.loads(out)
    assert data["hyperbolic"] is False
    assert data["reduced"] is False
    assert data["separating_vertex"] is None

    status, out, _ = run("hypotheses", "--graph", "rst", "--quiet")
    assert json.loads(out)["separating_vertex"] == "s"
    print("[PASS] Classification verified.")


def test_crossover():
    print("[TEST] crossover...")
    status, out, _ = run("crossover", "--graph", "free3", "--quiet")
    assert status == 0 and json.loads(out)["d_star"] == 15
    status, out, _ = run("crossover", "--graph", "rst", "--variant", "rst", "--format", "text", "--quiet")
    assert status == 0 and out == "d* = 79\n"
    status, out, _ = run("crossover", "--graph", "free3", "--q", "4", "--quiet")
    data = json.loads(out)
    assert status == 0 and abs(data["p"] - 1.5) < 1e-12
    assert data["d_star"] > 15
    status, out, _ = run("crossover", "--graph", "free3", "--q", "0.25", "--quiet")
    assert abs(json.loads(out)["p"] - 1.5) < 1e-12
    status, out, _ = run("crossover", "--graph", "free3", "--q", "4", "--p", "0", "--quiet")
    assert json.loads(out)["d_star"] == 15
    status, _, err = run("crossover", "--graph", "free2", "--quiet")
    assert status == 2 and "[Error]" in err
    print("[PASS] Crossover verified.")


def test_growth_and_khintchine():
    print("[TEST] growth and khintchine...")
    status, out, _ = run("growth", "--graph", "free3", "--K", "4", "--quiet")
    assert status == 0 and json.loads(out)["counts"] == [1, 3, 6, 12, 24]
    status, out, _ = run("growth", "--graph", "free3", "--K", "2", "--format", "csv", "--quiet")
    assert out == "k,a_k\n0,1\n1,3\n2,6\n"

    status, out, _ = run("khintchine", "3", "--graph", "free3", "--quiet")
    data = json.loads(out)
    assert status == 0 and data["family"]["size"] == 4
    status, out, _ = run("khintchine", "2", "--graph", "rst", "--variant", "rst", "--quiet")
    assert status == 0 and json.loads(out)["family"] is None
    print("[PASS] growth and khintchine verified.")


def test_verify():
    print("[TEST] verify kraus...")
    status, out, _ = run("verify", "kraus", "--graph", "free2", "--quiet")
    assert status == 0
    assert json.loads(out)["status"] == "success"
    status, _, err = run("verify", "nothing", "--graph", "free2", "--quiet")
    assert status == 2 and "Unknown suite" in err
    print("[PASS] verify verified.")


def test_usage_errors():
    print("[TEST] Usage errors exit with 2...")
    assert run("mult", "[a]", "--bogus", "1")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("classify", "--q", "abc")[0] == 2
    assert run("classify", "--graph", "no_such_graph", "--quiet")[0] == 2
    assert run("classify", "--q", "-1", "--quiet")[0] == 2
    assert run("--help")[0] == 0
    status, out, _ = run("graphs", "--format", "text", "--quiet")
    assert status == 0 and "free3" in out.split()
    print("[PASS] Usage errors verified.")


if __name__ == "__main__":
    test_parse_args()
    test_mult()
    test_expand()
    test_classify_and_hypotheses()
    test_crossover()
    test_growth_and_khintchine()
    test_verify()
    test_usage_errors()
