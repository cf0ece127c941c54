#!/usr/bin/env python3
"""Smoke test for the gsp2n_py extension module.

Builds the cdylib with cargo if needed, loads it, and exercises the main
entry points against known exact values. Run from anywhere:

    python3 python/smoke_test.py
"""

import json
import pathlib
import shutil
import subprocess
import sys
import sysconfig
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def build_module() -> pathlib.Path:
    lib = ROOT / "target" / "release" / "libgsp2n_py.so"
    if not lib.exists():
        print("building gsp2n-py (release)...")
        subprocess.run(
            ["cargo", "build", "--release", "-p", "gsp2n-py"],
            cwd=ROOT,
            check=True,
        )
    if not lib.exists():
        raise SystemExit("cargo did not produce libgsp2n_py.so")
    return lib


def load_module(lib: pathlib.Path):
    tmp = pathlib.Path(tempfile.mkdtemp(prefix="gsp2n_py_"))
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy(lib, tmp / f"gsp2n_py{suffix}")
    # abi3 module: a plain .so name works too
    shutil.copy(lib, tmp / "gsp2n_py.so")
    sys.path.insert(0, str(tmp))
    import gsp2n_py

    return gsp2n_py


def main() -> None:
    mod = load_module(build_module())
    print(f"loaded gsp2n_py {mod.__version__}")

    # root counts 2n^2 and negation closure
    for n in (1, 2, 3):
        rts = mod.roots(n)
        assert len(rts) == 2 * n * n, (n, len(rts))
        as_tuples = {tuple(r) for r in rts}
        assert all(tuple(-x for x in r) in as_tuples for r in rts)
    assert mod.weyl_group_order(3) == 48

    # pinned constants
    assert mod.rho_mu_pairing(4) == (10, 1)
    assert mod.l_packet_size(3) == 4
    assert mod.k_constant(2, 0) == 2
    assert mod.k_constant(1, 2) == 2
    assert mod.tamagawa(0, 2) == 2
    assert mod.iota(0, 2) == (1, 4)
    assert mod.iota(1, 2) == (1, 4)

    # enumeration shape at rank 3
    view = json.loads(mod.enumerate_json(3))
    assert len(view["elliptic_data"]) == 3
    assert len(view["cuspidal_levis"]) == 6

    # the rank-2 twisted transform with full twist
    poly = mod.satake_transfer(2, 1, [1, 2])
    assert poly == (
        "1 * p^3 * X^-1 + -1 * p^3 * X^-1 * X2^1 "
        "+ -1 * p^3 * X^-1 * X1^1 + 1 * p^3 * X^-1 * X1^1 * X2^1"
    ), poly

    # a transform family whose factorizations must hold
    fam = json.loads(mod.satake_family_json(1, 0, 2, [1], [], 0, 2, 1))
    assert fam["factorizations_hold"] is True
    assert fam["k"] == [1, 2, 3]

    # graded cohomology of the Siegel parabolic of GSp(4), trivial weight
    table = json.loads(mod.kostant_table_json(2, [2], [0, 0, 0]))
    assert [p["degree"] for p in table] == [0, 1, 2, 3]
    kept = [p["degree"] for p in table if p["kept_by_truncation"]]
    dropped = [p["degree"] for p in table if not p["kept_by_truncation"]]
    assert kept and dropped and max(kept) < min(dropped)

    # a partition identity with a tie
    lhs, rhs = mod.matching_reduction([2, -1], [1, 1])
    assert lhs == rhs == "2", (lhs, rhs)

    # deterministic suite runs that must pass
    report_a = mod.run_suite("endoscopy", 3, 10, 7)
    report_b = mod.run_suite("endoscopy", 3, 10, 7)
    assert report_a == report_b
    parsed = json.loads(report_a)
    assert parsed["passed"] is True
    assert parsed["schema"] == "v1"

    print("smoke test passed")


if __name__ == "__main__":
    main()
