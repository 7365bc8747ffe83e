#!/usr/bin/env python3
"""Golden tests for the qchar command-line tool.

Each case runs the binary twice (outputs must be byte-identical), checks the
exit status and, depending on the keys present, the exact stdout, the parsed
JSON, a subset of it, or approximate numeric fields. A "roundtrip" entry feeds
the JSON output back into another invocation as its final argument.
"""
import json
import subprocess
import sys


def run(binary, args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout


def is_subset(expected, actual):
    if isinstance(expected, dict):
        return isinstance(actual, dict) and all(
            k in actual and is_subset(v, actual[k]) for k, v in expected.items())
    return expected == actual


def main():
    binary, cases_path = sys.argv[1], sys.argv[2]
    with open(cases_path) as f:
        cases = json.load(f)
    failures = 0
    for case in cases:
        code, out = run(binary, case["args"])
        code2, out2 = run(binary, case["args"])
        problems = []
        if (code, out) != (code2, out2):
            problems.append("output is not deterministic")
        if code != case["exit"]:
            problems.append(f"exit {code}, expected {case['exit']}")
        try:
            doc = json.loads(out)
        except json.JSONDecodeError:
            doc = None
            problems.append("stdout is not JSON")
        if "stdout" in case and out != case["stdout"]:
            problems.append(f"stdout {out!r}, expected {case['stdout']!r}")
        if "json" in case and doc != case["json"]:
            problems.append(f"json {doc}, expected {case['json']}")
        if "json_subset" in case and not is_subset(case["json_subset"], doc):
            problems.append(f"json {doc} lacks {case['json_subset']}")
        if "json_approx" in case and doc is not None:
            for key, value in case["json_approx"].items():
                if abs(doc.get(key, float("inf")) - value) > 1e-12:
                    problems.append(f"{key}={doc.get(key)}, expected {value}")
        if "roundtrip" in case and doc is not None:
            rc, _ = run(binary, [*case["roundtrip"], json.dumps(doc)])
            if rc != 0:
                problems.append(f"round-trip through {case['roundtrip'][0]} exited {rc}")
        status = "FAIL" if problems else "PASS"
        print(f"[{status}] {case['name']}" + ("" if not problems else ": " + "; ".join(problems)))
        failures += bool(problems)
    print(f"{len(cases) - failures}/{len(cases)} CLI cases passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
