"""Imports the compiled extension and exercises each exported type.

Build first with `cargo build -p grothendieck-py` (or `maturin develop` in
crates/python); the script finds the library under target/.
"""

import glob
import os
import shutil
import sys
import tempfile

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def load():
    try:
        import pygroth
        return pygroth
    except ImportError:
        pass
    found = []
    for profile in ("release", "debug"):
        for pat in ("libpygroth.so", "libpygroth.dylib", "pygroth.dll"):
            found += glob.glob(os.path.join(ROOT, "target", profile, pat))
    if not found:
        sys.exit("extension not built: run `cargo build -p grothendieck-py`")
    tmp = tempfile.mkdtemp()
    ext = ".pyd" if found[0].endswith(".dll") else ".so"
    shutil.copy(found[0], os.path.join(tmp, "pygroth" + ext))
    sys.path.insert(0, tmp)
    import pygroth
    return pygroth


def main():
    g = load()

    p = g.Partition([3, 2, 1])
    assert str(p) == "3,2,1"
    assert p.conjugate() == p
    assert p.corners() == 3
    assert p.subdiagram_count() == 14
    assert g.Partition("-").weight() == 0

    f = g.expand("G", "2//1", vars=1, xcap=2, bcap=2)
    assert str(f) == "x1 - b*x1^2", str(f)
    assert f.variables == ["b", "x1"]
    assert f.terms() == [([0, 1], 1), ([1, 2], -1)], f.terms()

    assert g.count("ST", "2,1,1/1", 2) == 2
    assert g.count("ISVT", "2,1//2", 2) == 3

    r = g.verify_identity("skewCauchy", mu="1", nu="-", xvars=1, yvars=1, xcap=3, ycap=3, bcap=3)
    assert r.passed and r.witness is None, str(r)
    r = g.verify_identity("specializationCatalan", mu="2,1", xvars=2, yvars=1, xcap=5)
    assert r.passed, str(r)
    try:
        g.verify_identity("specializationCatalan", beta="formal")
        raise AssertionError("formal beta accepted")
    except ValueError:
        pass

    assert g.pieri("w", "2,1", "2,1", "1", "1", 1) == "-1*b"

    beta_y = g.Graph("betaY", 6, beta="1")
    walk = beta_y.walk_sum(g.Partition("2"), g.Partition("2,1"), 2, "up")
    assert str(walk) == "-3"
    assert g.Graph("moebiusY", 5).check().passed
    assert len(g.Graph("kappaY", 3).vertices()) == 7

    assert g.criterion(11).passed
    print("smoke test passed")


if __name__ == "__main__":
    main()
