"""Quick check of the Python bindings.

Build and install first:

    pip install --no-build-isolation -e crates/py
    python python/smoke_test.py
"""

from fractions import Fraction
from pathlib import Path

import realknot_py as rk

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def load(name):
    return rk.Curve.from_toml((CORPUS / f"{name}.curve").read_text())


def main():
    circle = rk.Curve.torus_knot(2, 1)
    assert circle.degree == 2 and circle.dim == 4
    assert circle.is_on_sphere() and circle.is_nonsingular()
    assert circle.writhe() == 0

    flat = circle.project()
    assert flat.dim == 3
    assert flat.is_circle_image()
    back = flat.lift()
    assert back.is_on_sphere()

    again = rk.Curve.from_toml(circle.to_toml())
    assert again == circle

    # rows may hold ints, strings or fractions
    unit = rk.Curve([[1, 0, 1], ["1", 0, -1], [0, 2, 0], [0, 0, Fraction(0)]])
    assert unit.rows()[1] == ["1", "0", "-1"]

    wall = load("wall_solitary")
    (dp,) = wall.double_points()
    assert dp["kind"] == "solitary"
    assert dp["image"] == "[0:0:0:1]", dp["image"]

    assert load("class4").bidegree()[0] == (1, 3)
    assert rk.linking_number(load("join_a"), load("far_b")) == 0

    joined, eps = rk.join(load("join_a"), load("join_b"))
    assert joined.degree == 4 and joined.is_nonsingular()

    try:
        rk.Curve.torus_knot(3, 1)
    except ArithmeticError:
        pass
    else:
        raise AssertionError("odd degree accepted")

    print("smoke test ok: writhe", circle.writhe(), "epsilon", eps)


if __name__ == "__main__":
    main()
