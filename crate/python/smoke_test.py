"""Smoke test for the quif5py extension.

Install first:  pip install --no-build-isolation -e crates/python
Then run:       python python/smoke_test.py
"""

from pathlib import Path

import quif5py

FIXTURES = Path(__file__).resolve().parent.parent / "crates" / "core" / "tests" / "fixtures"


def main():
    p = quif5py.Problem.load(str(FIXTURES / "a1.qv"))
    assert p.dim == 3 and p.nilpotency == 3 and p.rank == 1
    assert p.standard_monomials() == ["x*x", "x", "id(v)"]
    assert p.stdbasis() == ["m1*x"]

    basis, syzygies, stats = p.f5()
    assert syzygies == ["e1*x*x"]
    assert dict(stats)["zero_reductions"] == 1
    assert p.verify() is None
    assert p.loewy_dims() == [1, 1]
    assert p.radical_dims() == [2, 1, 0]

    r2 = quif5py.Problem.load(str(FIXTURES / "a1_rank2.qv"))
    assert r2.loewy_dims() == [2, 2]
    assert len(r2.minimal_generators()) == 2

    try:
        quif5py.Problem("quiver { vertex v }")
    except quif5py.ParseError as e:
        assert "1:1" in str(e)
    else:
        raise AssertionError("expected ParseError")

    try:
        quif5py.Problem.load(str(FIXTURES / "deglex.qv")).loewy_dims()
    except quif5py.ComputationError:
        pass
    else:
        raise AssertionError("expected ComputationError")

    print("quif5py smoke test: ok")


if __name__ == "__main__":
    main()
