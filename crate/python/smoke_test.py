"""Smoke test for the Python extension module.

Build and install first:

    pip install maturin
    maturin build --release -m crates/python/Cargo.toml -o dist
    pip install dist/salamander-*.whl
    python python/smoke_test.py
"""

from pathlib import Path

import salamander

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def read(name):
    return (FIXTURES / name).read_text()


def check_fixture_grid():
    c = salamander.Complex.parse(read("c2_c4_3x3.dg"))
    assert c.backend == "table"
    assert len(c.support()) == 9
    assert c.is_valid()
    seq = c.salamander((1, 1))
    assert seq.exact_count == 4 and seq.all_exact and seq.checks_agree
    grid = c.three_by_three()
    assert grid.first_row_exact and grid.routes_agree and grid.defined == 15
    assert salamander.Complex.parse(c.serialize()) == c


def check_non_abelian():
    c = salamander.Complex.parse(read("s3_3x3.dg"))
    assert c.three_by_three().first_row_exact
    broken = salamander.Complex.parse(read("broken_3x3.dg"))
    try:
        broken.three_by_three()
    except ValueError as e:
        assert "column 0" in str(e)
    else:
        raise AssertionError("broken grid accepted")


def check_homology():
    c = salamander.Complex.parse(read("zero_grid.dg"))
    for pos in c.support():
        for kind in ("horizontal", "vertical", "donor", "receptor"):
            h = c.homology(kind, pos)
            assert h.defined and h.whole and h.order == c.order(pos)


def check_errors():
    bad = "cyclic-product A 2\ncyclic-product B 4\nmap f A B 0 1\n"
    try:
        salamander.Complex.parse(bad)
    except ValueError as e:
        assert str(e).startswith("line 3")
    else:
        raise AssertionError("non-homomorphism accepted")


def check_fuzz():
    for i in range(20):
        c = salamander.Complex.fuzz(42, i)
        assert c.backend == ("table" if i % 2 == 0 else "vec")
        s = c.sweep()
        assert s.passed, s.failures


def check_groups():
    g = salamander.Group.cyclic(6)
    assert g.order == 6 and g.is_abelian()
    assert len(g.subgroups()) == 4
    assert g.generated([2]) == [0, 2, 4]
    s3 = salamander.Group([
        [0, 1, 2, 3, 4, 5],
        [1, 0, 4, 5, 2, 3],
        [2, 3, 0, 1, 5, 4],
        [3, 2, 5, 4, 0, 1],
        [4, 5, 1, 0, 3, 2],
        [5, 4, 3, 2, 1, 0],
    ])
    assert not s3.is_abelian()
    assert len(s3.subgroups()) == 6
    assert len(s3.subgroups(normal_only=True)) == 3


def check_suites():
    rows = salamander.axioms(seed=1, count=20, backend="vec")
    assert rows and all(failures == 0 for _, _, _, failures in rows)
    cases, comparisons, disagreements = salamander.cross_backend(seed=1, count=50)
    assert cases == 50 and disagreements == 0


if __name__ == "__main__":
    for check in (
        check_fixture_grid,
        check_non_abelian,
        check_homology,
        check_errors,
        check_fuzz,
        check_groups,
        check_suites,
    ):
        check()
        print(f"ok   {check.__name__}")
    print("python smoke test passed")
