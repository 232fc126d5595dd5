#!/usr/bin/env python3
# Copyright 2026 The qinterleave Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Runs each CLI subcommand in JSON mode and validates the report schema.

Also checks that the JSON verdict, the text verdict and the exit code agree.
Usage: check_report_schema.py <qinterleave executable> <schema file>
"""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["demo"],
    ["demo", "--seed", "7"],
    ["verify", "--code", "phase3", "--degree", "3", "--burst", "3", "--kind", "phase", "--method", "statevector"],
    ["verify", "--code", "phase3", "--degree", "3", "--burst", "4", "--kind", "phase"],
    ["verify", "--code", "five", "--degree", "2", "--kind", "colocated"],
    ["enumerate", "--qubits", "6", "--burst", "2", "--kind", "independent"],
]


def run(exe, args):
    return subprocess.run([exe] + args, capture_output=True, text=True, check=False)


def main():
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    failures = 0
    for args in COMMANDS + [["synth", "-n", "3", "-m", "4"]]:
        json_args = args + ["--format", "json"]
        proc = run(exe, json_args)
        report = json.loads(proc.stdout)
        try:
            jsonschema.validate(report, schema)
        except jsonschema.ValidationError as e:
            print(f"FAIL {' '.join(json_args)}: {e.message}")
            failures += 1
            continue
        expected_code = 0 if report["verdict"] == "pass" else 1
        if proc.returncode != expected_code:
            print(f"FAIL {' '.join(json_args)}: exit {proc.returncode} for verdict {report['verdict']}")
            failures += 1
        if args[0] == "synth":
            text = run(exe, args)
            ok = text.stdout == report["circuit"] and f"verdict: {report['verdict']}" in text.stderr
        else:
            text = run(exe, args)
            ok = text.stdout.rstrip("\n").endswith(f"verdict: {report['verdict']}")
        if not ok or text.returncode != proc.returncode:
            print(f"FAIL {' '.join(args)}: text and json reports disagree")
            failures += 1
        else:
            print(f"ok   {' '.join(args)} -> {report['verdict']}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
