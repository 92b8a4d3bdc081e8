"""Build the extension module and exercise it from Python.

Usage: python3 python/smoke_test.py
"""

import importlib
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module():
    try:
        return importlib.import_module("adinkra_py")
    except ImportError:
        pass
    subprocess.run(
        ["cargo", "build", "--release", "--offline", "-p", "adinkra-py"],
        cwd=ROOT,
        check=True,
    )
    lib = ROOT / "target" / "release" / "libadinkra_py.so"
    tmp = Path(tempfile.mkdtemp())
    shutil.copy(lib, tmp / "adinkra_py.so")
    sys.path.insert(0, str(tmp))
    return importlib.import_module("adinkra_py")


def main():
    ad = load_module()

    assert ad.weight_sum_identity("1100", "1010") == (2, 4, 1)

    d6 = ad.LinearCode.d2n(3)
    assert d6.dimension == 2
    assert d6.classify() == (True, True)

    q = ad.Graph.quotient(6, d6)
    assert (q.n, q.colors, len(q.edges)) == (16, 6, 48)
    assert q.extract_code() == d6
    assert q.is_quadrilateral()

    k4 = ad.Graph.complete_even(2)
    assert k4.is_perfect_1factorization()
    assert k4.exchange_group_order() == 4
    assert k4.verify()[0] == "NONE"
    print(k4.to_latin(["Black", "Blue", "Red"]), end="")

    assert ad.Graph.folded_cube(6).dash_one() is None

    cube = ad.Graph.hypercube(4)
    assert cube.verify()[0] == "PRE-ADINKRA"
    assert cube.dashing_log2_count() == 15
    adinkra = cube.dash_one().valise()
    assert adinkra.verify()[0] == "ADINKRA"
    assert adinkra.rank_sequence() == [8, 8]
    raised = adinkra.raise_vertex(1)
    assert raised.rank_sequence() == [7, 8, 1]
    assert raised.algebra_holds()
    assert ad.Graph.from_agf(raised.to_agf()).to_agf() == raised.to_agf()
    print(raised.emit_susy([1]), end="")

    try:
        ad.Graph.from_agf("n 4\ncolors 1\ne 3 3 1\n")
    except ValueError as e:
        print(f"rejected: {e}")
    else:
        raise AssertionError("loop accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
