#!/usr/bin/env python3
"""End-to-end checks of the crysref CLI: examples, exit-code contract and JSON reports."""
import json
import os
import re
import subprocess
import sys
import tempfile

EXE = sys.argv[1]
FAMILIES = ["A_alpha", "C_alpha", "G311", "G411", "G412", "G421", "G422", "G611", "G621", "G631"]
MATRIX_FAMILIES = {"A_alpha", "C_alpha", "G311", "G411", "G611"}
failures = []


def run(*args, env=None):
    e = dict(os.environ)
    e.update(env or {})
    p = subprocess.run([EXE, *args], capture_output=True, text=True, env=e, timeout=600)
    return p.returncode, p.stdout, p.stderr


def expect(cond, what):
    if not cond:
        failures.append(what)
        print("FAILED:", what)


def report(*args, env=None):
    code, out, err = run("--json", *args, env=env)
    if code == 64:
        return code, None
    try:
        r = json.loads(out)
    except json.JSONDecodeError:
        expect(False, f"{args}: not JSON ({err.strip()})")
        return code, None
    expect(r.get("schema") == 1, f"{args}: schema")
    expect(json.loads(json.dumps(r)) == r, f"{args}: round trip")
    expect(set(r) == {"schema", "command", "checks", "output", "wall_time_s", "exit_code"}, f"{args}: keys")
    statuses = [c["status"] for c in r["checks"]]
    expect(all(s in ("pass", "fail", "unknown") for s in statuses), f"{args}: status values")
    want = 1 if "fail" in statuses else 2 if "unknown" in statuses else 0
    expect(code == want == r["exit_code"], f"{args}: exit {code}, report {r['exit_code']}, statuses imply {want}")
    return code, r


def stable(r):
    r = dict(r)
    r.pop("wall_time_s")
    return r


# examples
code, out, _ = run("verify", "C_alpha", "3", "--what", "all")
expect(code == 0, "verify C_alpha 3 --what all")
code, _, _ = run("verify", "A_alpha", "4", "--what", "x-relation")
expect(code == 0, "verify A_alpha 4 --what x-relation")
code, _, _ = run("verify", "C_alpha", "0")
expect(code == 64, "verify C_alpha 0 is a usage error")
code, _, _ = run("verify", "Z_beta", "2")
expect(code == 64, "unknown family is a usage error")
code, _, _ = run("frobnicate")
expect(code == 64, "unknown subcommand is a usage error")
code, out, _ = run("abelianize", "C_alpha", "2")
expect(code == 0 and out.strip() == "2 2 2 2", "abelianize C_alpha 2")
for n in ("2", "3"):
    code, _, _ = run("braid", "C_alpha", n, "--direction", "both")
    expect(code == 0, f"braid C_alpha {n}")
for n in ("3", "4"):
    code, _, _ = run("braid", "A_alpha", n, "--direction", "both")
    expect(code == 0, f"braid A_alpha {n}")
code, out, _ = run("braid", "A_alpha", "2")
expect(code == 0 and "free group" in out, "braid A_alpha 2 routes to the free case")
code, _, _ = run("braid", "C_alpha", "3", "--mode", "replay")
expect(code == 0, "braid C_alpha 3 in replay mode")
code, _, _ = run("braid", "C_alpha", "5")
expect(code == 64, "braid above the rank budget")
code, _, _ = run("hecke", "gdaha-check", "D4", "2")
expect(code == 0, "hecke gdaha-check D4 2")
for t in ("E6", "E7", "E8"):
    for n in ("1", "2"):
        code, _, _ = run("hecke", "gdaha-check", t, n)
        expect(code == 0, f"hecke gdaha-check {t} {n}")
code, _, _ = run("hecke", "rank-one")
expect(code == 0, "hecke rank-one")
code, _, _ = run("hecke", "rank-one", "--flip")
expect(code == 1, "hecke rank-one --flip fails")
code, _, _ = run("hecke", "triple-dot", "4")
expect(code == 0, "hecke triple-dot 4")
code, out, _ = run("export", "A_alpha", "3", "--dot")
expect(code == 0 and 'label="x"' in out, "export A_alpha 3 --dot has the x-edge")
code, out, _ = run("export", "C_alpha", "2", "--hecke")
expect(code == 0 and "charpoly: S0" in out, "export --hecke")
code, out, _ = run("classes", "C_alpha", "2")
expect(code == 0 and out.splitlines()[0] == "5", "classes C_alpha 2")

# prove, certificates and replay
with tempfile.TemporaryDirectory() as d:
    code, _, _ = run("prove", "--artin", "C_alpha", "2", "s1 s2 s1 s2", "s2 s1 s2 s1", "--cert-dir", d)
    expect(code == 0, "prove a braid relation")
    cert = os.path.join(d, "cert_1.txt")
    expect(os.path.exists(cert), "certificate written")
    code, _, _ = run("replay", cert)
    expect(code == 0, "certificate replays")
    text = open(cert).read()
    bad = os.path.join(d, "bad.txt")
    rels = text.count("\nrel: ")
    corrupted = re.sub(r"insert R(\d+)", lambda m: f"insert R{(int(m.group(1)) + 1) % rels}", text, count=1)
    expect(corrupted != text, "certificate has an insertion step")
    open(bad, "w").write(corrupted)
    code, _, _ = run("replay", bad)
    expect(code == 1, "corrupted certificate is rejected")
code, _, _ = run("prove", "--artin", "C_alpha", "2", "s1 s1")
expect(code == 1, "s1^2 is nontrivial in the Artin group")
code, _, _ = run("prove", "C_alpha", "2", "s1 s2 s1^-1 s2^-1")
expect(code == 1, "non-commuting generators are refuted by matrices")
deep = "s2 s4 s1 s2 s1 s2 s1^-1 s2^-1 s1^-1 s2^-1 s4^-1 s2^-1 s5 s3 s4 s3^-1 s5 s3 s4^-1 s3^-1 s5^-1 s5^-1"
code, _, _ = run("prove", "--artin", "C_alpha", "3", deep)
expect(code == 0, "search proof")
code, _, _ = run("prove", "--artin", "C_alpha", "3", deep, env={"CRYSREF_BUDGET_SCALE": "0.0001"})
expect(code == 2, "budget scale starves the search")
code, _, _ = run("--max-depth", "1", "prove", "--artin", "C_alpha", "3", deep)
expect(code == 2, "--max-depth limits the search")

# family x rank matrix
scaled = {"CRYSREF_BUDGET_SCALE": "0.05"}
for f in FAMILIES:
    for n in range(1, 5):
        code, r = report("abelianize", f, str(n))
        if code == 64:
            continue
        expect(code == 0, f"abelianize {f} {n}")
        _, r2 = report("abelianize", f, str(n))
        expect(r2 is not None and stable(r) == stable(r2), f"abelianize {f} {n} deterministic")
        code, _ = report("export", f, str(n))
        expect(code == 0, f"export {f} {n}")
        if f in MATRIX_FAMILIES:
            code, _ = report("verify", f, str(n), "--what", "all")
            expect(code == 0, f"verify {f} {n}")
        else:
            code, _ = report("verify", f, str(n))
            expect(code == 64, f"verify {f} {n} has no matrices")
        if f in ("A_alpha", "C_alpha"):
            code, r = report("braid", f, str(n), env=scaled)
            expect(code in (0, 2), f"braid {f} {n}")

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
