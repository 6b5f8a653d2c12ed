#!/usr/bin/env python3
"""Smoke test for the logtan_py extension module.

Builds the cdylib with cargo, copies it next to this script under the
importable name, imports it, and sanity-checks each exposed function.

Usage: python3 python/smoke_test.py
"""
import json
import pathlib
import shutil
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def build_extension() -> pathlib.Path:
    subprocess.run(
        ["cargo", "build", "-p", "logtan-py", "--release"],
        cwd=ROOT,
        check=True,
    )
    built = ROOT / "target" / "release" / "liblogtan_py.so"
    if not built.exists():  # macOS
        built = ROOT / "target" / "release" / "liblogtan_py.dylib"
    dest = ROOT / "python" / "logtan_py.so"
    shutil.copyfile(built, dest)
    return dest


def main() -> int:
    build_extension()
    sys.path.insert(0, str(ROOT / "python"))
    import logtan_py

    # Canonical form round-trips through the parser.
    text = logtan_py.canonical_form("x1^2+ x0 * x1 + x0^2", 2)
    assert text == logtan_py.canonical_form(text, 2), text

    # Stability report for the worked quartic.
    rep = json.loads(logtan_py.stability("x0*x1^3 + x2^4 + x3^4", 4))
    assert rep["verdict"] == "Inconclusive"
    assert rep["q"] == 1 and rep["r"] == 1
    assert rep["singDeg"] == 18 and rep["bound"] == 18

    # Betti tables of the 2x2 determinants.
    res = json.loads(logtan_py.resolution_check(2, "generic"))
    assert res["matches"]
    assert [e["rank"] for e in res["computed"]["entries"]] == [6, 4, 1]
    sym = json.loads(logtan_py.resolution_check(2, "symmetric"))
    assert sym["matches"]

    # Certified semigeneric section and its section-ideal structure.
    cert = json.loads(logtan_py.semigeneric_certificate(3))
    assert cert["wDim"] == 0 and cert["wLength"] == 6 and cert["reduced"]
    struct = json.loads(logtan_py.section_ideal_structure(3))
    assert struct["equal"] and struct["containment"]

    # Quiver scan: strictly stable, count matches the closed form.
    scan = json.loads(logtan_py.quiver_scan(4))
    assert scan["strictlyStable"] and scan["minMu"] > 0
    assert scan["count"] == 249  # C(10,5) - 1 total, minus empty and full

    # Cohomology of the tautological class: four sections.
    coh = json.loads(logtan_py.cohom_t(1, 0))
    assert coh["dims"] == {"0": 4}

    # Cover solutions: the two nontrivial classes.
    cov = json.loads(logtan_py.cover_solutions(5))
    nontrivial = sorted(
        (s["x"], s["y"]) for s in cov["solutions"] if s["nontrivial"]
    )
    assert nontrivial == [(-1, 4), (1, 0)]

    # Hilbert data of a complete intersection quotient.
    hf = json.loads(logtan_py.hilbert("x0^2; x1^3", 3, 8))
    assert hf["projDim"] == 0 and hf["degree"] == 6

    # Errors surface as ValueError.
    try:
        logtan_py.stability("x0 +* x1", 2)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for a malformed polynomial")

    print("logtan_py smoke test: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
