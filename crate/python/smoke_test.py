#!/usr/bin/env python3
"""Smoke test for the ntcodes extension module.

Builds the cdylib with cargo if needed, loads it, and replays a few known
values: field arithmetic in GF(8), curve point counts, the C(1) code at
q=2 with its dual distance 3 and 3360 minimum-weight words, and one named
check.
"""

import shutil
import subprocess
import sys
import sysconfig
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build_extension() -> Path:
    subprocess.run(
        ["cargo", "build", "-p", "nt-codes-py", "--release"],
        cwd=ROOT,
        check=True,
    )
    built = ROOT / "target" / "release" / "libntcodes.so"
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    dest = Path(__file__).resolve().parent / f"ntcodes{suffix}"
    shutil.copy2(built, dest)
    return dest


def main() -> int:
    build_extension()
    sys.path.insert(0, str(Path(__file__).resolve().parent))
    import ntcodes

    f = ntcodes.Field(2, 3)
    assert f.order == 8 and f.c == 7
    assert f.mul(3, 3) == 5  # (t+1)^2 = t^2+1 in GF(8)
    assert f.add(3, 3) == 0
    assert f.inv(f.inv(5)) == 5
    assert f.trace(2) == 0 and f.norm(2) == 1
    assert f.poly_string(5) == "t^2+1"

    curve = ntcodes.Curve(2, 3)
    assert len(curve.points()) == 32
    assert curve.genus == 9
    assert all(curve.on_curve(x, y) for x, y in curve.points())

    code = ntcodes.build_code(curve, "cd", d=1)
    assert (code.n, code.k) == (32, 3)
    result = code.analyze(w_max=3)
    assert result["dual_distance"] == 3
    assert result["counts"][3] == 3360
    assert all(len(s) == 3 for s in result["supports"])

    assert code.dual().k == 29

    outcome = ntcodes.run_check(curve, "te1", d=2)
    assert outcome["verdict"] == "Pass", outcome

    curve3 = ntcodes.Curve(3, 3)
    assert len(curve3.points()) == 243
    code3 = ntcodes.build_code(curve3, "cdab", d=2, a=1, b=2)
    assert (code3.n, code3.k) == (242, 3)
    result3 = code3.analyze(w_max=2)
    assert result3["dual_distance"] == 2
    assert result3["counts"][2] == 728

    assert "castle" in ntcodes.check_names()

    print("smoke test: all assertions passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
