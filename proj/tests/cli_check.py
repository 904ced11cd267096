"""CLI end-to-end checks: exit codes, schema validity, classify goldens.

usage: cli_check.py <cubiclab binary> <source dir>
"""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

BIN, SRC = sys.argv[1], Path(sys.argv[2])
REPORT = json.loads((SRC / "schema/report.v1.json").read_text())
EXAMPLE = json.loads((SRC / "schema/example.v1.json").read_text())
failures = []


def run(*args):
    p = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=120)
    return p.returncode, p.stdout


def check(name, cond):
    print(("ok   " if cond else "FAIL ") + name)
    if not cond:
        failures.append(name)


def report(name, args, code):
    rc, out = run(*args)
    check(f"{name}: exit {code}", rc == code)
    try:
        doc = json.loads(out)
        jsonschema.validate(doc, REPORT)
        check(f"{name}: schema", True)
        return doc
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        check(f"{name}: schema ({str(e).splitlines()[0]})", False)
        return {}


for fam in ("m12", "m20"):
    doc = report(f"classify {fam}", ["classify", "--family", fam, "--json"], 0)
    golden = json.loads((SRC / f"tests/golden/classify_{fam}.json").read_text())
    check(f"classify {fam}: matches golden", doc == golden)
    _, again = run("classify", "--family", fam, "--json")
    check(f"classify {fam}: stable across runs", json.loads(again) == doc)

doc = report("classify m20 shape", ["classify", "--family", "m20", "--json"], 0)
empty = [r["param"] for r in doc.get("reports", []) if not r["nonempty"]]
check("classify m20: 8 reports, only gamma=5 empty", len(doc.get("reports", [])) == 8 and empty == [5])

doc = report("verify appendix", ["verify", "--examples", str(SRC / "data/appendix"), "--json"], 0)
check("verify appendix: 14/14", doc.get("passed") == 14 and doc.get("total") == 14)

doc = report("excess", ["excess", "--preset", "cubic-fourfold", "--d", "2", "--g", "0", "--k1c", "-3", "--k2c", "-6",
                        "--json"], 0)
check("excess: cubic-fourfold -1, projected-p4 3",
      doc.get("mult") == -1 and doc.get("mult_by_preset", {}).get("projected-p4") == 3)

doc = report("shortroots", ["lattice", "shortroots", "--gram", "[[3,1,2],[1,3,2],[2,2,3]]", "--json"], 0)
check("shortroots: (0,1,-1) first", doc.get("short_root") == [0, 1, -1])
report("overlattices", ["lattice", "overlattices", "--family", "m12", "--param", "1", "--json"], 0)

report("error: bad gram", ["lattice", "shortroots", "--gram", "3,x", "--json"], 3)
report("error: budget", ["construct", "--family", "m12", "--param", "2", "--seed", "7", "--budget", "0", "--json"], 4)
report("error: empty component", ["construct", "--family", "m12", "--param", "4", "--seed", "7", "--json"], 1)

rc, out = run("construct", "--family", "m12", "--param", "2", "--seed", "7")
check("construct: exit 0", rc == 0)
ex = json.loads(out)
jsonschema.validate(ex, EXAMPLE)
check("construct: example schema", True)
check("construct: deterministic", run("construct", "--family", "m12", "--param", "2", "--seed", "7")[1] == out)

with tempfile.TemporaryDirectory() as tmp:
    (Path(tmp) / "built.json").write_text(out)
    doc = report("verify constructed", ["verify", "--examples", tmp, "--json"], 0)
    bad = dict(ex, cubic=ex["cubic"] + "+x_0^3")
    (Path(tmp) / "built.json").write_text(json.dumps(bad))
    report("verify corrupted: exit 2", ["verify", "--examples", tmp, "--json"], 2)
    (Path(tmp) / "built.json").write_text(json.dumps(dict(ex, cubic="x_0^^2")))
    doc = report("verify unparsable: exit 3", ["verify", "--examples", tmp, "--json"], 3)
    err = doc.get("error", {})
    check("parse error position", err.get("line") == 1 and err.get("column") == 5)

for f in sorted((SRC / "data/appendix").glob("*.json")):
    try:
        jsonschema.validate(json.loads(f.read_text()), EXAMPLE)
        check(f"fixture {f.name}: schema", True)
    except jsonschema.ValidationError as e:
        check(f"fixture {f.name}: schema ({e.message})", False)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
