"""Runs `qr` with --json and checks the report against the schema.

usage: check_report.py QR SCHEMA EXPECTED_EXIT [--agree] -- ARGS...

With --agree the same command is also run without --json and the integers
in the text output are compared with those in the JSON values.
"""

import json
import re
import subprocess
import sys
from collections import Counter

import jsonschema

NUMBER = re.compile(r"(?<![A-Za-z_0-9.])-?\d+(?![.\d])")
KEY = re.compile(r"^\s*(?:- )?[a-z_0-9]+:")


def json_values(node):
    if isinstance(node, dict):
        for v in node.values():
            yield from json_values(v)
    elif isinstance(node, list):
        for v in node:
            yield from json_values(v)
    elif isinstance(node, bool) or node is None:
        return
    else:
        yield str(node)


def text_values(text):
    for line in text.splitlines():
        line = KEY.sub("", line, count=1)
        yield line


def numbers(chunks):
    found = Counter()
    for chunk in chunks:
        found.update(NUMBER.findall(chunk))
    return found


def main():
    qr, schema_path, expected = sys.argv[1], sys.argv[2], int(sys.argv[3])
    rest = sys.argv[4:]
    agree = False
    if rest and rest[0] == "--agree":
        agree = True
        rest = rest[1:]
    if not rest or rest[0] != "--":
        sys.exit("missing -- before qr arguments")
    args = rest[1:]

    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    proc = subprocess.run([qr, *args, "--json"], capture_output=True, text=True, check=False)
    if proc.returncode != expected:
        sys.exit(f"exit {proc.returncode}, expected {expected}\n{proc.stderr}")
    report = json.loads(proc.stdout)
    jsonschema.Draft202012Validator(schema).validate(report)
    if (report["status"] == "pass") != (expected == 0):
        sys.exit(f"status {report['status']} disagrees with exit code {expected}")

    if agree:
        text = subprocess.run([qr, *args], capture_output=True, text=True, check=False)
        if text.returncode != expected:
            sys.exit(f"text mode exit {text.returncode}, expected {expected}")
        from_json = numbers(json_values(report["data"]))
        from_text = numbers(text_values(text.stdout))
        if from_json != from_text:
            sys.exit(f"text and JSON disagree: {from_json - from_text} vs {from_text - from_json}")
    print("ok")


if __name__ == "__main__":
    main()
