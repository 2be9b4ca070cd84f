import os
import pathlib

import pytest

import polydecomp

FIXTURES = pathlib.Path(os.environ.get("POLYDECOMP_FIXTURES", pathlib.Path(__file__).parents[2] / "fixtures"))


def load(name):
    vars_, polys = None, []
    for line in (FIXTURES / name).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars:"):
            vars_ = line[len("vars:"):].split()
        else:
            polys.append(line)
    return polys, vars_


def test_canonical_rendering():
    assert polydecomp.canonical("1 - x2 + x1^2", ["x1", "x2"]) == "x1^2 - x2 + 1"


def test_center_dimensions():
    assert polydecomp.center(*load("binary_cubic_pair.poly"))["center_dim"] == 2
    assert polydecomp.center(*load("quartic_plus_squares.poly"))["center_dim"] == 4
    assert polydecomp.center(*load("ternary_triple.poly"))["center_dim"] == 1


def test_decompose_and_verify():
    polys, vars_ = load("quaternary_pair.poly")
    doc = polydecomp.decompose(polys, vars_, seed=3)
    assert sorted(doc["leaf_sizes"]) == [1, 1, 2]
    assert polydecomp.verify(polys, vars_, doc) == (True, "")
    doc["P"][0][0] = "17"
    ok, reason = polydecomp.verify(polys, vars_, doc)
    assert not ok and reason


def test_scalar_center_verdict():
    doc = polydecomp.decompose(*load("ternary_triple.poly"))
    assert doc["verdict"] == "indecomposable (center is scalar)"
    assert doc["decomposable"] is False


def test_generate_round_trip():
    polys, truth = polydecomp.generate(7, 4, m=2, blocks=[1, 3], max_degree=4)
    vars_ = [f"x{i}" for i in range(1, 5)]
    assert truth["planted_blocks"] == [1, 3]
    doc = polydecomp.decompose(polys, vars_, seed=7)
    assert polydecomp.verify(polys, vars_, doc)[0]


def test_errors():
    with pytest.raises(polydecomp.ParseError):
        polydecomp.center(["x + + y"], ["x", "y"])
    with pytest.raises(ValueError):
        polydecomp.center(["x"], ["x", "x"])
    with pytest.raises(polydecomp.PolydecompError):
        polydecomp.generate(1, 3, blocks=[1, 1])
