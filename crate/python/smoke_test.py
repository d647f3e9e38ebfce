"""Smoke test for the Python bindings.

Build the extension and put it on the path first, e.g.

    cargo build --release -p hopfcolor-py
    cp target/release/libhopfcolor_py.so python/hopfcolor.so
    python3 python/smoke_test.py

or install it with `maturin develop -m crates/python/Cargo.toml`.
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

import hopfcolor  # noqa: E402

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def load(name):
    return hopfcolor.load((FIXTURES / name).read_text())


def main():
    k2 = load("k2.json")
    assert k2.kind == "graph"
    assert k2.chromatic_polynomial() == "x^2 - x"
    assert str(k2.chromatic_qsym()) == "2*M[1,1]"
    assert k2.count_colorings(3) == 6
    assert k2.hilbert_function(2) == 6
    assert k2.count_lattice_points(3) == 6
    assert k2.psi() == k2.chromatic_qsym() == k2.ehrhart_qsym()
    assert load("u12.json").phi() == k2.phi()
    assert k2.restrict(["a"]).is_stable()

    chain = load("chain.json")
    assert chain.chromatic_polynomial() == "1/2*x^2 - 1/2*x"
    assert chain.restrict(["b"]) is None
    assert len(chain.stable_flags()) == 1

    fig = load("four_generators.json")
    assert [fig.count_colorings(k) for k in range(6)] == [0, 0, 1, 9, 36, 100]
    assert ["a", "d"] in [flag[1] for flag in fig.stable_flags() if len(flag) == 3]
    assert len(fig.family()) == 11 and len(fig.ideal()) == 27

    q = hopfcolor.QSym("M[1]")
    assert str(q * q) == "2*M[1,1] + M[2]"
    assert (q * q).principal_specialization(3) == 9
    assert dict((tuple(a), c) for a, c in (q + q).terms()) == {(1,): 2}

    product = k2.product(hopfcolor.load(json.dumps(
        {"type": "graph", "elements": ["x"], "edges": []})))
    assert product.chromatic_qsym() == k2.chromatic_qsym() * hopfcolor.QSym("M[1]")

    try:
        load("bad.json")
    except ValueError as e:
        assert "axiom 2" in str(e)
    else:
        raise AssertionError("bad.json should not load")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
