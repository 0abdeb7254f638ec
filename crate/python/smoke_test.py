"""Smoke test for the mzv_shuffle_py extension module.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`.
"""

import json
import math
import pathlib

import mzv_shuffle_py as m

DOCS = pathlib.Path(__file__).resolve().parent.parent / "docs"


def validate(instance, schema_name):
    try:
        import jsonschema
    except ImportError:
        return
    schema = json.loads((DOCS / schema_name).read_text())
    jsonschema.validate(instance, schema)


def main():
    p = m.shuffle("xy", "xy")
    assert p.terms() == [("x^2y^2", 4), ("xyxy", 2)], p.terms()
    assert p == m.shuffle("xy", "xy", method="permutation")
    assert p == m.expand_general([1], [1]) == m.expand_euler(1, 1) == m.expand_res_1_1(1, 1, 1, 1)
    assert p.latex() == r"4\zeta(3,1)+2\zeta(2,2)"
    assert p.coefficient_sum() == math.comb(4, 2)
    assert m.LinComb.from_json(p.to_json()) == p
    validate(json.loads(p.to_json()), "lincomb.schema.json")

    big = m.shuffle("x^40", "x^40")
    assert big.terms() == [("x^80", math.comb(80, 40))] and math.comb(80, 40) > 2**64

    assert m.expand_1_s(0, [1, 0]) == m.shuffle("y", "xyy")
    assert m.expand_res_1_2(1, 1, 1, 2, 0, 1) == m.shuffle("xy", "xy^3")
    assert m.expand_res_2_2((1, 1, 1, 1), (0, 2, 1, 1)) == m.shuffle("xyxy", "y^2xy")
    assert m.expand_nfold([(1, 1), (0, 1), (2, 1)]) == m.shuffle_nfold(["xy", "y", "x^2y"])
    assert m.coeff_general([1, 0], [1], [0]) == 2

    value, err = m.zeta("2")
    assert abs(value - math.pi**2 / 6) <= err
    residual, bound, ok = m.identity_check("xy", "x^2y")
    assert ok and residual <= bound

    report = json.loads(m.verify("appendixA", 8))
    validate(report, "suite-report.schema.json")
    assert report["checked"] > 0 and report["failures"] == []

    try:
        m.shuffle("xz", "y")
    except ValueError:
        pass
    else:
        raise AssertionError("expected a parse error")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
