#!/usr/bin/env python3
"""End-to-end checks for the tracelab command line tool.

Usage: cli_driver.py /path/to/tracelab
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = Path(sys.argv[1]).resolve()
CHECKS = 0


def run(*args, expect_rc=0):
    global CHECKS
    proc = subprocess.run([str(BIN), *args], capture_output=True, text=True, timeout=300)
    if proc.returncode != expect_rc:
        raise AssertionError(
            f"tracelab {' '.join(args)}: expected rc {expect_rc}, got {proc.returncode}\n"
            f"stdout:\n{proc.stdout}\nstderr:\n{proc.stderr}"
        )
    CHECKS += 1
    return proc


def check(cond, msg):
    global CHECKS
    if not cond:
        raise AssertionError(msg)
    CHECKS += 1


def main():
    tmp = Path(tempfile.mkdtemp(prefix="tracelab_cli_"))
    s345 = tmp / "s345.json"
    s345.write_text(json.dumps({"generators": [3, 4, 5]}))
    m345 = tmp / "m345.json"
    m345.write_text(json.dumps({"semigroup": {"generators": [3, 4, 5]}, "values": [3, 4, 5]}))
    chain = tmp / "chain3.json"
    chain.write_text(json.dumps({"p": 101, "vars": ["x"], "monomial_relations": ["x^3"]}))
    sq0 = tmp / "sq0.json"
    sq0.write_text(
        json.dumps({"p": 2, "vars": ["x", "y"], "monomial_relations": ["x^2", "x*y", "y^2"]})
    )

    # sgp info: invariants and flags
    out = run("sgp", "info", str(s345)).stdout
    check("semigroup <3,4,5>" in out, "info header")
    check("frobenius: 2" in out, "info frobenius")
    check("minimal_multiplicity=yes" in out, "info flag")
    j = json.loads(run("sgp", "info", str(s345), "--json", "--quiet").stdout)
    check(j["gaps"] == [1, 2] and j["flags"]["symmetric"] is False, "info json")

    # sgp trace: pinned human line, and the machine block must re-parse to
    # an input that produces the identical trace
    out = run("sgp", "trace", str(m345)).stdout
    check("trace = {3,4,5,...} (= m) full-trace: yes" in out, "trace line")
    j = json.loads(run("sgp", "trace", str(m345), "--json", "--quiet").stdout)
    check(j["full_trace"] is True and j["window"] == {"min": 3, "sporadic": [], "conductor": 3},
          "trace json window")
    roundtrip = tmp / "roundtrip.json"
    roundtrip.write_text(json.dumps(j["trace"]))
    again = json.loads(run("sgp", "trace", str(roundtrip), "--json", "--quiet").stdout)
    check(again["trace"] == j["trace"], "trace of trace round trip (idempotent)")

    # enum-ftu and canonical
    j = json.loads(run("sgp", "enum-ftu", str(s345), "--json", "--quiet").stdout)
    check(j["count"] == 1 and j["minimal_multiplicity"] is True, "enum-ftu count")
    out = run("sgp", "canonical", str(s345)).stdout
    check("symmetric: no" in out and "nearly Gorenstein: yes" in out, "canonical flags")

    # art resolve: chain algebra gives the all-ones Betti row
    out = run("art", "resolve", str(chain), "--steps", "4").stdout
    check(out.splitlines()[0] == "Betti 1 1 1 1 1", "chain Betti row")
    j = json.loads(run("art", "resolve", str(chain), "--steps", "4", "--json", "--quiet").stdout)
    check(j["betti"] == [1, 1, 1, 1, 1] and len(j["maps"]) == 4, "resolve json")
    check(j["maps"][0] == [["x"]] and j["maps"][1] == [["x^2"]], "resolve maps alternate")

    # art trace and check
    j = json.loads(run("art", "trace", str(sq0), "--json", "--quiet").stdout)
    check(j["full_trace"] is True and j["trace"]["dim"] == 2, "k over m^2=0 is full trace")
    mod = tmp / "mod.json"
    mod.write_text(json.dumps({"kind": "presentation", "matrix": [["x", "y"], ["0", "x"]]}))
    j = json.loads(
        run("art", "trace", str(sq0), "--module", str(mod), "--json", "--quiet").stdout
    )
    check(j["module_dim"] >= 1, "presentation module accepted")
    out = run("art", "check", str(sq0), "--trials", "20", "--seed", "7").stdout
    check("FAIL" not in out and out.count("pass") == 4, "art check all pass")

    # koszul
    out = run("koszul", "--n", "4", "--check").stdout
    check("Betti 1 4 6 4 1" in out, "koszul Betti")
    check("d o d = 0: yes" in out, "koszul verify")
    check("d_2 variables: x1 x2 x3 x4" in out, "koszul variable ideal")

    # suite run: json file target, exit 0, passed flag
    report = tmp / "report.json"
    out = run("suite", "run", "--all", "--seed", "5", "--json", str(report)).stdout
    check("all suites passed" in out, "suite summary")
    j = json.loads(report.read_text())
    check(j["passed"] is True and len(j["suites"]) == 12 and j["seed"] == 5, "suite report")
    check([s["id"] for s in j["suites"]][:2] == ["pir", "syzygy_full_trace"], "suite order")
    # same seed, byte-identical report
    report2 = tmp / "report2.json"
    run("suite", "run", "--all", "--seed", "5", "--quiet", "--json", str(report2))
    check(report.read_text() == report2.read_text(), "deterministic suite report")

    # exit codes: usage 2, guard 3
    run("sgp", "info", str(tmp / "nope.json"), expect_rc=2)
    bad = tmp / "bad.json"
    bad.write_text(json.dumps({"generators": [2, 4]}))
    run("sgp", "info", str(bad), expect_rc=2)
    run("koszul", "--n", "11", expect_rc=3)
    run("art", "resolve", str(chain), "--steps", "13", expect_rc=3)
    huge = tmp / "huge.json"
    huge.write_text(json.dumps({"generators": list(range(25, 50))}))
    run("sgp", "enum-ftu", str(huge), expect_rc=3)
    run("sgp", expect_rc=2)
    run("suite", "run", expect_rc=2)
    proc = run("--help", expect_rc=0)
    check("sgp" in proc.stdout and "koszul" in proc.stdout, "help text")

    print(f"cli_driver: {CHECKS} checks passed")


if __name__ == "__main__":
    main()
