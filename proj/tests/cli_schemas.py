#!/usr/bin/env python3
"""Drives the ddf binary and validates every JSON output against schemas/."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

BIN = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])
failures = []


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run(*args, stdin=None, code=0):
    p = subprocess.run([BIN, *map(str, args)], input=stdin, capture_output=True, text=True, timeout=600)
    if p.returncode != code:
        failures.append(f"{' '.join(map(str, args))}: exit {p.returncode}, wanted {code}: {p.stderr.strip()}")
    return p.stdout


def check(name, text):
    try:
        doc = json.loads(text)
        jsonschema.validate(doc, schema(name))
        return doc
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        failures.append(f"{name}: {e}")
        return None


def expect(cond, what):
    if not cond:
        failures.append(what)


for s in SCHEMAS.glob("*.schema.json"):
    jsonschema.Draft202012Validator.check_schema(json.loads(s.read_text()))

with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    families = {
        "wilson": ["--p", 2, "--m", 4, "--e", 3],
        "momihara": ["--p", 2, "--n", 1],
        "davis": ["--p", 2, "--r", 2],
        "davis3": ["--p", 3, "--r", 1],
        "wilson9": ["--p", 3, "--m", 2, "--e", 4],
    }
    for key, params in families.items():
        kind = key.rstrip("39")
        text = run("construct", kind, *params)
        expect(text == run("construct", kind, *params), f"construct {key} not byte stable")
        fam = check("family", text)
        (tmp / f"{key}.json").write_text(text)
        for vk in ("ddf", "edf", "ds"):
            v = check("verify", run("verify", "--kind", vk, tmp / f"{key}.json"))
            if vk == "ddf" and v:
                expect(v["holds"], f"{key} is not certified as a DDF")
        design = run("develop", stdin=text)
        d = check("design", design)
        (tmp / f"{key}.dev.json").write_text(design)
        if fam and d:
            expect(d["v"] == fam["v"] and d["b"] == fam["v"] * len(fam["blocks"]), f"develop {key} shape")
        prof = run("profile", tmp / f"{key}.dev.json")
        check("profile", prof)
        expect(prof == run("profile", "--threads", 4, tmp / f"{key}.dev.json"), f"profile {key} depends on threads")
        check("rank", run("rank", "--p", 2, tmp / f"{key}.dev.json"))
        check("aut", run("aut", tmp / f"{key}.dev.json"))

    expect(json.loads(run("profile", tmp / "davis.dev.json"))["histogram"] == {"0": 1600, "1": 1440, "2": 120},
           "davis(2,2) histogram")
    expect(json.loads(run("aut", tmp / "davis.dev.json"))["order"] == 384, "davis(2,2) aut order")

    iso = check("iso", run("iso", tmp / "davis3.dev.json", tmp / "wilson9.dev.json"))
    expect(iso is not None and iso["isomorphic"], "nine point designs are isomorphic")
    iso = check("iso", run("iso", tmp / "davis.dev.json", tmp / "momihara.dev.json"))
    expect(iso is not None and not iso["isomorphic"], "davis(2,2) and momihara(2,1) differ")

    for r in (2, 3):
        check("rds", run("verify", "--kind", "rds", "--p", 2, "--r", r))
    # odd characteristic is not covered and fails with a witness
    v = check("rds", run("verify", "--kind", "rds", "--p", 3, "--r", 2, code=5))
    expect(v is not None and not v["holds"] and "witness" in v, "odd rds witness")

    # --out writes the same bytes as stdout
    out = tmp / "out.json"
    run("construct", "davis", "--p", 2, "--r", 2, "--out", out)
    expect(out.read_text() == (tmp / "davis.json").read_text(), "--out differs from stdout")

    rep = check("reproduce", run("reproduce", "--only", "10", "11", "--format", "json"))
    expect(rep is not None and [c["id"] for c in rep["checks"]] == [10, 11], "reproduce --only selection")
    rep = check("reproduce", run("reproduce", "--only", "9", "--budget", 0, "--format", "json", code=4))
    expect(rep is not None and rep["checks"][0]["status"] == "SKIPPED", "budget 0 skips")

    # exit codes
    run("construct", "wilson", "--p", 2, "--m", 4, "--e", 7, code=2)
    run("construct", "davis", "--p", 4, "--r", 1, code=2)
    run("construct", "nonsense", code=2)
    run("develop", tmp / "missing.json", code=3)
    (tmp / "bad.json").write_text("{ not json")
    run("develop", tmp / "bad.json", code=3)
    run("aut", "--budget", 10, tmp / "davis.dev.json", code=4)
    fam = json.loads((tmp / "wilson.json").read_text())
    fam["blocks"][0][0], fam["blocks"][1][0] = fam["blocks"][1][0], fam["blocks"][0][0]
    (tmp / "broken.json").write_text(json.dumps(fam))
    v = check("verify", run("verify", "--kind", "ddf", tmp / "broken.json", code=5))
    expect(v is not None and not v["holds"] and "witness" in v, "broken family has a witness")

for f in failures:
    print("FAIL:", f)
print("ok" if not failures else f"{len(failures)} failures")
sys.exit(1 if failures else 0)
