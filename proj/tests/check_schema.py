#!/usr/bin/env python3
"""Runs every command on the fixture files and validates the JSON reports.

Also checks that text and JSON output agree on exit codes and on the headline verdicts.
usage: check_schema.py <ybx> <schema> <data-dir>
"""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

ybx, schema_path, data = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
schema = json.loads(schema_path.read_text())
validator = jsonschema.Draft202012Validator(schema)
problems = []


def run(args):
    p = subprocess.run([ybx, *args], capture_output=True, text=True)
    return p.returncode, p.stdout


def check(args):
    code, out = run([*args, "--format", "json"])
    if code == 1:
        problems.append(f"{args}: usage error")
        return None
    report = json.loads(out)
    for err in validator.iter_errors(report):
        problems.append(f"{args}: {err.message} at {list(err.absolute_path)}")
    if report["exit_code"] != code:
        problems.append(f"{args}: exit {code} but report says {report['exit_code']}")
    text_code, text = run(args)
    if text_code != code:
        problems.append(f"{args}: text exit {text_code}, json exit {code}")
    return report, text


files = sorted(data.glob("*.json"))
count = 0
for f in files:
    for cmd in ["validate", "classify", "growth", "gk", "spec", "congruence", "diagnose", "omega"]:
        res = check([cmd, str(f), "--max-length", "5"])
        count += 1
        if res is None:
            continue
        report, text = res
        if cmd == "diagnose" and "summary" in report["result"]:
            verdict = report["result"]["summary"]["verdict"]
            first = text.splitlines()[0]
            expect = {"Proved": ": YES", "RefutedWithWitness": ": NO", "EvidenceAtDepth": "evidence supports"}[verdict]
            if expect not in first:
                problems.append(f"diagnose {f.name}: text '{first}' vs json {verdict}")
        if cmd == "gk" and "gk" in report["result"]:
            if text.splitlines()[0] != f"GK = {report['result']['gk']}":
                problems.append(f"gk {f.name}: text and json disagree")
    check(["congruence", str(f), "-f", "A"])
    check(["growth", str(f), "--flavor", "A", "--max-length", "5"])
    count += 2

check(["canon", str(data / "abex.json"), "22", "120"])
check(["growth", str(data / "free2.json"), "--max-length", "12", "--node-budget", "100"])
check(["atlas", "n=2", "--check", "r1", "--check", "involutive-gk", "--check", "archimedean"])
check(["atlas", "n=1"])
with tempfile.TemporaryDirectory() as d:
    check(["growth", str(data / "abex.json"), "--cache-dir", d])
    check(["cache", "info", "--cache-dir", d])
    check(["cache", "clear", "--cache-dir", d])
count += 7

for p in problems:
    print("FAIL", p)
print(f"{count} reports checked, {len(problems)} problems")
sys.exit(1 if problems else 0)
