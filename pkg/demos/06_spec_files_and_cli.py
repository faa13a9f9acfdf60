"""The batch front end: spec files in, deterministic reports out.

The same machinery backs the installed `enrichkit` command:

    enrichkit --spec demos/specs/boolean_chain.json --check yoneda
    enrichkit --check fuzz --seed 7 --format machine

Run:  python demos/06_spec_files_and_cli.py
"""

from pathlib import Path

from enrichkit.cli import parse_spec, run

SPECS = Path(__file__).resolve().parent / "specs"

print("== validate + yoneda on a spec file ==")
spec = parse_spec(SPECS / "boolean_chain.json")
print(run("validate", spec).to_human())
print(run("yoneda", spec).to_human())

print("== a corrupted table shows up as a failed check, exit code 1 ==")
bad = parse_spec(SPECS / "corrupted_assoc.json")
print(run("validate", bad).to_human())

print("== machine-readable reports are byte-identical across runs ==")
a = run("fuzz", None, {"seed": 5}).to_machine_json()
b = run("fuzz", None, {"seed": 5}).to_machine_json()
print("fuzz reports equal bytes:", a.encode() == b.encode())
print("report size:", len(a), "bytes")
