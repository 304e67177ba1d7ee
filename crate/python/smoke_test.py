#!/usr/bin/env python3
"""Smoke test for the `zeq` Python extension module.

Builds the extension if needed, imports it from the cargo target directory,
and checks the documented seven-node example end to end. Run from anywhere:

    python3 python/smoke_test.py
"""

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def locate_extension() -> Path:
    names = ("libzeq.so", "libzeq.dylib", "zeq.dll")
    for profile in ("release", "debug"):
        for name in names:
            candidate = ROOT / "target" / profile / name
            if candidate.exists():
                return candidate
    print("extension not found; building zeq-py ...", flush=True)
    subprocess.run(["cargo", "build", "-p", "zeq-py"], cwd=ROOT, check=True)
    return ROOT / "target" / "debug" / "libzeq.so"


def import_zeq(tmp: Path):
    lib = locate_extension()
    suffix = ".pyd" if lib.suffix == ".dll" else ".so"
    shutil.copy2(lib, tmp / f"zeq{suffix}")
    sys.path.insert(0, str(tmp))
    import zeq  # noqa: E402

    return zeq


def expect_value_error(fn, fragment):
    try:
        fn()
    except ValueError as e:
        assert fragment in str(e), f"expected {fragment!r} in {e!r}"
        return
    raise AssertionError(f"expected ValueError containing {fragment!r}")


ROWS = [
    [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 2.0],
]
E4 = [0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0]
E7 = [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]
X0 = [0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0]
V1 = [1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0]
V2 = [0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0]
Y1 = [2.0, 0.0, 3.0, 1.0, 0.0, 3.0, 0.0]


def main():
    with tempfile.TemporaryDirectory() as tmp:
        zeq = import_zeq(Path(tmp))

        assert list(zeq.SEMIRINGS) == [
            "max-times",
            "nonnegative",
            "max-min",
            "lukasiewicz",
        ]

        a = zeq.Matrix("max-times", ROWS)
        assert a.n == 7 and a.semiring == "max-times"
        assert a.rows() == ROWS
        # x0 solves lambda*x = Ax + b: the b term restores entry 4.
        assert a.apply(X0) == [0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0]
        assert [max(p, q) for p, q in zip(a.apply(X0), E4)] == X0

        # Least solution and solution-set generators at lambda = 1.
        r = zeq.solve(a, b=E4, lam=1.0)
        assert r.solvable and not r.borderline
        assert r.rho_bar == 0.0
        assert r.j_classes == [3, 5] and r.j_nodes == [3, 5]
        assert r.least == X0
        assert not r.unique
        assert r.basis is not None and r.basis.eigenvalue == 1.0
        assert r.basis.representatives == [0, 2]
        assert r.basis.columns == [V1, V2]

        # Any combination x0 + coefficients * basis solves the equation.
        y = zeq.combine("max-times", r.least, [2.0, 3.0], r.basis)
        assert y == Y1
        assert zeq.is_solution(a, y, b=E4)
        assert not zeq.is_solution(a, [1.0] + [0.0] * 6, b=E4)

        # ... and decompose() recovers the split.
        d = zeq.decompose(a, Y1, b=E4)
        assert d.least == X0
        assert d.eigen == [2.0, 0.0, 3.0, 0.0, 0.0, 3.0, 0.0]
        assert zeq.least_residual("max-times", Y1, X0) == d.eigen

        # Unsolvable right-hand side: the class of node 7 has root 2 > 1.
        r7 = zeq.solve(a, b=E7)
        assert not r7.solvable and r7.rho_bar == 2.0 and r7.least is None
        assert r7.j_nodes == [6]

        # Class structure: identity permutation, six inter-class arcs.
        f = zeq.fnf(a)
        assert f.classes == [[0], [1], [2], [3], [4], [5], [6]]
        assert f.permutation == list(range(7))
        assert f.class_of == list(range(7))
        assert sorted(f.arcs) == [(2, 0), (3, 1), (4, 1), (5, 2), (5, 3), (6, 4)]
        assert f.class_roots == [1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 2.0]

        # Spectrum: eigenvalues {0, 1, 2} with their spectral classes.
        s = zeq.spectrum(a)
        assert s.rho == 2.0
        assert [e.value for e in s.eigenvalues] == [0.0, 1.0, 2.0]
        assert s.eigenvalues[0].spectral_classes == [3, 5]
        assert s.eigenvalues[1].spectral_classes == [0, 2]
        assert s.eigenvalues[2].spectral_classes == [6]
        assert [b.eigenvalue for b in s.bases] == [1.0, 2.0]
        assert s.bases[0].columns == [V1, V2]
        assert s.bases[1].columns == [[0.0] * 6 + [1.0]]
        assert zeq.eigenbasis(a, 2.0).representatives == [6]

        # The star of A diverges (rho = 2) but the series A*b still stabilizes.
        st = zeq.star(a)
        assert not st.converged and st.closure is None
        ap = zeq.star_apply(a, E4)
        assert ap.converged and ap.value == X0
        ap7 = zeq.star_apply(a, E7)
        assert not ap7.converged and ap7.reason is not None

        # Nonnegative instance: same least solution, no basis generators.
        nn = zeq.Matrix("nonnegative", ROWS)
        rn = zeq.solve(nn, b=E4)
        assert rn.solvable and rn.least == X0 and not rn.unique
        assert rn.basis is None
        dn = zeq.decompose(nn, [0.0, 0.0, 1.0, 1.0, 0.0, 2.0, 0.0], b=E4)
        assert dn.least == X0 and dn.eigen == V2

        # A lattice instance: stars always converge; spectra are rejected.
        mm = zeq.Matrix("max-min", [[0.3, 0.9, 0.0], [0.0, 0.0, 0.7], [0.4, 0.0, 0.0]])
        stm = zeq.star(mm)
        assert stm.converged and stm.closure[0] == [1.0, 0.9, 0.7]
        expect_value_error(lambda: zeq.spectrum(mm), "not supported")

        # Input validation surfaces as ValueError.
        expect_value_error(lambda: zeq.Matrix("boolean", [[0.0]]), "unknown semiring")
        expect_value_error(lambda: zeq.Matrix("max-min", [[1.5]]), "outside the carrier")
        expect_value_error(lambda: zeq.solve(a, b=[1.0, 2.0]), "dimension mismatch")
        expect_value_error(lambda: zeq.decompose(a, [1.0] + [0.0] * 6, b=E4), "not a solution")

    print("ok: all smoke checks passed")


if __name__ == "__main__":
    main()
