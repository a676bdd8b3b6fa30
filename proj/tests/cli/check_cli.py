"""End-to-end checks of the vatwist command line tool.

usage: check_cli.py <vatwist binary> <schema file> <jobs directory>
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

BIN, SCHEMA, JOBS = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
validator = jsonschema.Draft202012Validator(json.loads(SCHEMA.read_text()))
failures = []


def run(command, text, *flags):
    proc = subprocess.run([BIN, command, "--input", "-", *flags], input=text.encode(),
                          capture_output=True, timeout=120)
    return proc.returncode, proc.stdout


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def records(report):
    if "characters" in report:
        return [r for c in report["characters"] for r in c["records"]]
    return report["records"]


def half_turn(v):
    return v == {"turns": "1/2", "alpha": "0"}


JOBS_EXPECT = {
    "torus_half.json": ("torus-report", lambda r: r["rational_class"] and r["dimnuc"] == {"kind": "exact", "value": 2}),
    "torus_alpha_block.json": ("torus-report", lambda r: not r["rational_class"] and r["degenerate_rank"] == 2
                               and r["dimnuc"] == {"kind": "upper_bound", "value": 3}),
    "classify_rotation_alpha.json": ("cocycle-classify", lambda r: r["is_rational"] is False
                                     and r["class_torsion_order"] is None
                                     and r["dimnuc"] == {"kind": "upper_bound", "value": 1}),
    "classify_rotation_third.json": ("cocycle-classify", lambda r: r["is_rational"] and r["class_torsion_order"] == 3
                                     and r["type_one_witness_m"] == 6
                                     and r["dimnuc"] == {"kind": "exact", "value": 2}),
    "twisted_half.json": ("twisted-irreps", lambda r: len(r["records"]) == 1 and r["records"][0]["dim"] == 2
                          and half_turn(r["records"][0]["central_value"])),
    "irreps_p2.json": ("irreps", lambda r: [x["dim"] for x in records(r)] == [2]),
    "irreps_p4_cross_section.json": ("irreps", lambda r: sum(x["dim"] ** 2 for x in records(r)) == 36),
    "irreps_heisenberg.json": ("irreps", lambda r: sorted(x["dim"] for x in r["records"]) == [1, 1, 1, 1, 2]
                               and r["sum_dim_squares"] == 8),
    "irreps_central.json": ("irreps", lambda r: [x["dim"] for x in records(r)] == [2]
                            and all(half_turn(x["central_value"]) for x in records(r))),
    "group_validate_z_h3.json": ("group-validate", lambda r: r["valid"] and r["hirsch_length"] == 1),
    "extension_half.json": ("extension-build", lambda r: r["valid"] and r["kernel_order"] == 2
                            and r["central_generator_is_central"] and r["hirsch_length"] == 2),
    "cocycle_check_p2_bad.json": ("cocycle-check", lambda r: r["ok"] is False and len(r["counterexample"]) == 3),
}

for name, (command, expect) in JOBS_EXPECT.items():
    text = (JOBS / name).read_text()
    code, out = run(command, text)
    code2, out2 = run(command, text)
    check(code == 0, f"{name}: exit status 0")
    check(out == out2, f"{name}: byte-identical on rerun")
    report = json.loads(out)
    errors = list(validator.iter_errors(report))
    check(not errors, f"{name}: report matches the schema" + (f" ({errors[0].message[:120]})" if errors else ""))
    check(expect(report), f"{name}: expected values")
    check(report["provenance"]["command"] == command and report["provenance"]["seed"] == 0,
          f"{name}: provenance block")

# --output writes the same bytes as stdout.
with tempfile.TemporaryDirectory() as tmp:
    target = Path(tmp) / "report.json"
    text = (JOBS / "twisted_half.json").read_text()
    _, out = run("twisted-irreps", text)
    code, _ = run("twisted-irreps", text, "--output", str(target))
    check(code == 0 and target.read_bytes() == out, "--output file equals stdout")

# A different seed changes only the provenance, up to rounding.
text = (JOBS / "irreps_p4_cross_section.json").read_text()
a = json.loads(run("irreps", text)[1])
b = json.loads(run("irreps", text, "--seed", "17")[1])
check(b["provenance"]["seed"] == 17, "--seed recorded in provenance")
same = all(abs(x[0] - y[0]) < 1e-6 and abs(x[1] - y[1]) < 1e-6
           for ra, rb in zip(records(a), records(b)) for x, y in zip(ra["character"], rb["character"]))
check(same and len(records(a)) == len(records(b)), "characters independent of the seed")

# Matrices are emitted as [re, im] pairs.
m = json.loads(run("twisted-irreps", (JOBS / "twisted_half.json").read_text(), "--matrices")[1])
mats = m["records"][0]["matrices"]
check(len(mats["lattice"]) == 2 and len(mats["lattice"][0]) == 2 and len(mats["lattice"][0][0][0]) == 2,
      "--matrices emits complex matrices")
check(not list(validator.iter_errors(m)), "--matrices report matches the schema")

ERRORS = [
    ("torus-report", '{"theta": {"rank": 2, "entries": [["0","1/2"],["1/2","0"]]}}', 1, "NotSkew"),
    ("twisted-irreps", '{"group": {"preset": "lattice", "rank": 2}, "cocycle": {"kind": "rotation", '
                       '"theta": {"rat": "0", "alpha": "1"}}, "character": ["1/5", "2/5"]}', 1, "IrrationalCocycle"),
    ("irreps", '{"group": {"preset": "lattice", "rank": 2}, "character": ["1/3"]}', 1, "RankMismatch"),
    ("irreps", '{"finite_group": {"cyclic": 6000}}', 1, "ResourceBound"),
    ("irreps", '{"group": {"rank": 1, "point_group": {"named": "heisenberg_mod2"}}, "character": ["1/3"], '
               '"central": {"element": {"vec": [0], "pt": 1}, "omega": "1/2"}}', 1, "NotCentral"),
    ("extension-build", '{"group": {"preset": "lattice", "rank": 2}, "cocycle": {"kind": "rotation", "theta": "1/3"},'
                        ' "n": 2}', 1, "ValueNotTorsionOfOrderN"),
    ("group-validate", '{"group": {"rank": 1, "point_group": {"table": [[0, 1], [1, 1]]}}}', 1, "InvalidGroup"),
    ("torus-report", '{"theta": {"rotation": "1/x"}}', 2, "MalformedInput"),
    ("torus-report", '{"theta": {"rank": 2}}', 2, "MalformedInput"),
    ("torus-report", '{"theta"', 2, "MalformedInput"),
    ("cocycle-check", '[1, 2]', 2, "MalformedInput"),
    ("frobnicate", '{}', 2, "MalformedInput"),
]
for command, text, want_code, want_kind in ERRORS:
    code, out = run(command, text)
    report = json.loads(out)
    check(code == want_code and report.get("error", {}).get("kind") == want_kind,
          f"{command} {text[:40]}...: exit {want_code} with {want_kind} (got {code}, {report.get('error')})")
    check(not list(validator.iter_errors(report)), f"{command} error report matches the schema")

code, out = run("irreps", '{"finite_group": {"cyclic": 60}}', "--max-order", "50")
check(code == 1 and json.loads(out)["error"]["kind"] == "ResourceBound", "--max-order enforced")

if failures:
    print(f"{len(failures)} failure(s)")
    sys.exit(1)
print("all CLI checks passed")
