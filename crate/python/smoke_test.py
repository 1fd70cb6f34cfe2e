#!/usr/bin/env python3
"""Smoke test for the relhom_py extension module.

Builds the cdylib with cargo, loads it, and exercises the main surface:
duality certificates, cone reports, straightening, measure discretization,
group bounded cohomology and the verification suite. Run from anywhere:

    python3 python/smoke_test.py
"""

import json
import shutil
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build_and_import():
    subprocess.run(
        ["cargo", "build", "-p", "relhom-py"],
        cwd=ROOT,
        check=True,
    )
    built = ROOT / "target" / "debug" / "librelhom_py.so"
    if not built.exists():  # macOS fallback
        built = ROOT / "target" / "debug" / "librelhom_py.dylib"
    stage = Path(tempfile.mkdtemp(prefix="relhom-py-"))
    shutil.copy(built, stage / "relhom_py.so")
    sys.path.insert(0, str(stage))
    import relhom_py

    return relhom_py


def frac(s):
    return Fraction(s)


def main():
    rh = build_and_import()

    # Duality certificate on the triangle circle: primal = dual = 3.
    circle = rh.PairComplex.circle(3)
    assert circle.homology_dim(1) == 1
    cert = json.loads(circle.certificate(1, 0))
    assert cert["schema"] == "certificate/v1"
    assert frac(cert["primal"]) == 3 and frac(cert["dual"]) == 3
    phi = {k: frac(v) for k, v in cert["optimal_cocycle"].items()}
    assert all(abs(v) == Fraction(1, 3) for v in phi.values())

    # Seminorm of an explicit cycle: twice the fundamental class.
    basis = circle.homology_basis(1)[0]
    doubled = {k: str(2 * frac(v)) for k, v in basis.items()}
    value, _minimizer = circle.seminorm(1, doubled)
    assert frac(value) == 6

    # Interval pair: the edge class has seminorm 1.
    interval = rh.PairComplex.interval()
    cert = json.loads(interval.certificate(1, 0))
    assert frac(cert["primal"]) == 1

    # Torus grid: fundamental class counts triangles, and the cone computes
    # the same homology.
    torus = rh.PairComplex.torus_grid(3, 3)
    cert = json.loads(torus.certificate(2, 0))
    assert frac(cert["primal"]) == 18
    assert torus.cone_homology_dim(1) == torus.homology_dim(1) == 2

    # Cylinder cone report: strict gap at omega = 0.
    cylinder = rh.PairComplex.cylinder_grid(3, 1)
    report = json.loads(cylinder.cone_report(2, ["0", "1"]))
    assert report["schema"] == "cone-report/v1"
    row = report["rows"][0]
    assert row["strict_gap_at_zero"] is True
    assert frac(row["cone_seminorms"][0][1]) > frac(row["relative_seminorm"])

    # Straightening snaps vertices to the integer net.
    model = rh.Model.torus(2, "4")
    snapped = model.straighten([["1/10", "1/5"], ["9/10", "1/10"]])
    assert snapped == [["0", "0"], ["1", "0"]]

    # theta merges atoms with the same straightening.
    measure = json.dumps(
        {
            "schema": "measure-chain/v1",
            "degree": 1,
            "atoms": [
                {"weight": "1/2", "simplex": [["1/10", "0"], ["9/10", "1/10"]]},
                {"weight": "1/2", "simplex": [["1/5", "1/10"], ["11/10", "0"]]},
            ],
        }
    )
    image, total_variation, relative = model.theta(measure)
    assert frac(total_variation) == 1 and frac(relative) == 1
    image = json.loads(image)
    assert len(image["terms"]) == 1 and frac(image["terms"][0]["coeff"]) == 1

    # Group bounded cohomology: H^0 = R, H^1 = H^2 = 0; relative vanishing;
    # the averaging/evaluation round trip is the identity.
    s3 = rh.FiniteGroup.builtin("s3")
    assert s3.order() == 6
    assert s3.bounded_cohomology_dim(0) == 1
    assert s3.bounded_cohomology_dim(1) == 0
    assert s3.bounded_cohomology_dim(2) == 0
    subgroups = s3.subgroups()
    assert len(subgroups) == 6
    some_subgroup = subgroups[1]
    assert s3.bounded_cohomology_dim(1, some_subgroup) == 0
    dim_g, dim_a, rank, kernel = s3.restriction_data(some_subgroup, 1)
    assert rank == dim_a and kernel == dim_g - dim_a
    assert s3.alpha_beta_roundtrip(some_subgroup, 1, seed=5)

    # The full verification suite passes.
    results = rh.run_suite()
    failed = [name for name, passed, _ in results if not passed]
    assert not failed, f"suite checks failed: {failed}"

    print(f"smoke test passed: {len(results)} suite checks and all API assertions")


if __name__ == "__main__":
    main()
