import json
import os
from fractions import Fraction

import pytest

import lamcoh

RECIPES = os.environ.get("LAMCOH_RECIPES", os.path.join(os.path.dirname(__file__), "..", "..", "recipes"))


def test_product_betti():
    c = lamcoh.product_complex("circle", ["1/2", "1/3"])
    assert lamcoh.betti(c, 0) == Fraction(5, 6)
    assert lamcoh.betti(c, 1) == Fraction(5, 6)
    assert abs(lamcoh.l2_betti(c, 1) - 5 / 6) < 1e-8
    assert lamcoh.cohomology_dims(c, "q") == [2, 2]


def test_kronecker():
    for q, p in [(3, 1), (4, 1), (5, 2), (6, 5)]:
        ans = lamcoh.one_is_coboundary(q, p)
        assert ans["coboundary"] == (q % 2 == 0)
        model = lamcoh.kronecker_model(q, p)
        assert lamcoh.cohomology_dims(model, "z2") == [1, 1]
        assert lamcoh.constant_one_is_coboundary(model, 1) == ans["coboundary"]
    with pytest.raises(ValueError):
        lamcoh.one_is_coboundary(4, 2)


def test_json_round_trip_and_validation():
    c = lamcoh.kronecker_model(3, 1)
    back = lamcoh.complex_from_json(c.to_json())
    assert back.to_json() == c.to_json()
    doc = json.loads(c.to_json())
    doc["families"][1][0]["faces"][0]["target"] = 5
    problems = lamcoh.validate(lamcoh.complex_from_json(json.dumps(doc)))
    assert problems and problems[0][0] == "structure"
    with pytest.raises(ValueError, match="1:"):
        lamcoh.complex_from_json('{"transversal": {"weights": [0.5]}, "families": []}')


def test_recipes_and_random():
    c = lamcoh.read_recipe(os.path.join(RECIPES, "wedge.json"))
    assert lamcoh.validate(c) == []
    assert lamcoh.cohomology_dims(c) == [1, 3]
    r = lamcoh.random_complex(7)
    assert lamcoh.validate(r) == []
    assert lamcoh.random_complex(7).to_json() == r.to_json()


def test_arcs_and_boxes():
    golden = {"a": "-1/2", "b": "1/2", "d": 5}
    z = lamcoh.zero_set(json.dumps([[["0", "1/10"]]]), json.dumps([golden]), 10)
    assert z["length"] == "4/5"
    assert all(abs(x - 0.8) <= 2 * 2.0 ** -(n + 1) for n, x in enumerate(z["approximations"]))
    t = lamcoh.triangulate_boxes([(["0", "0"], ["2", "1"]), (["1", "0"], ["3", "2"])])
    assert t["volume"] == "5"
    assert not t["overlap"]
