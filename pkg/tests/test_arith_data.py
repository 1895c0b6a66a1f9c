import json
from fractions import Fraction

import pytest

from ssmass.arith_data import (FieldDatum, LocalPlace, PELInput, QuaternionDatum, check_p_gate, deck_to_json,
                               delta_prime, load_deck, parse_deck, self_dual_exists, validate)
from ssmass.errors import DeckError, HypothesisError, ValidationError
from ssmass.oracles import brauer_delta_prime


def test_validate_examples():
    assert validate(PELInput.over_Q([2, 3], m=1, N=3, p=5)) == []
    assert validate(PELInput.over_Q([2], m=1, N=3, p=5)) == ["ramified count odd"]
    assert validate(PELInput.over_Q([], m=1, N=3, p=3)) == ["gcd(p,N) ≠ 1"]


def test_validate_collects_everything():
    bad = PELInput.over_Q([4, 4, 2], m=0, N=2, p=9)
    problems = validate(bad)
    assert len(problems) >= 5


def test_place_sum_must_match_degree():
    fd = FieldDatum(2, {7: (LocalPlace(7, 1),)}, (1,))
    assert any("sum of e*f" in v for v in validate(PELInput(fd, QuaternionDatum(), 1, 3, 7)))


def test_self_dual_exists():
    assert self_dual_exists(PELInput.over_Q([(2, 0), (3, 0)], m=2, N=5, p=7))
    assert self_dual_exists(PELInput.over_Q([(2, 1), (3, 1)], m=1, N=5, p=7))
    assert not self_dual_exists(PELInput.over_Q([(2, 0), (3, 1)], m=1, N=5, p=7))


def test_p_gate():
    with pytest.raises(HypothesisError, match="p > 2 is unramified in B"):
        check_p_gate(PELInput.over_Q([5, 7], p=5, N=3))
    with pytest.raises(HypothesisError, match="p = 2"):
        check_p_gate(PELInput.over_Q([], p=2, N=3))
    fd = FieldDatum(2, {7: (LocalPlace(7, 1, 2),)}, (1,))
    with pytest.raises(HypothesisError, match="ramified in F"):
        check_p_gate(PELInput(fd, QuaternionDatum(), 1, 3, 7))
    with pytest.raises(ValidationError):
        check_p_gate(PELInput.over_Q([2], p=5, N=3))


def _quadratic(f):
    places = (LocalPlace(7, 2),) if f == 2 else (LocalPlace(7, 1), LocalPlace(7, 1))
    return PELInput(FieldDatum(2, {7: places}, (1,)), QuaternionDatum(), 1, 3, 7)


def test_delta_prime_examples():
    assert delta_prime(PELInput.over_Q(p=7)) == {(7, 0)}
    assert delta_prime(_quadratic(2)) == frozenset()
    assert delta_prime(_quadratic(1)) == {(7, 0), (7, 1)}
    assert delta_prime(PELInput.over_Q([2, 3], p=5, N=7)) == {(2, 0), (3, 0), (5, 0)}


@pytest.mark.parametrize("ram", [(), (2, 3), (2, 3, 11, 13)])
@pytest.mark.parametrize("p", [5, 7])
def test_delta_prime_against_brauer_sum(ram, p):
    inp = PELInput.over_Q(list(ram), p=p, N=3 if p != 3 else 4)
    f_map = {i: v.inertia_f for i, v in enumerate(inp.places_over_p())}
    assert delta_prime(inp) == brauer_delta_prime(inp.quat.keys(), p, f_map)


def test_missing_local_data_is_refused():
    fd = FieldDatum(2, {7: (LocalPlace(7, 2),)}, (1,))
    with pytest.raises(HypothesisError, match="no local data"):
        PELInput(fd, QuaternionDatum(), 1, 3, 7).field.places_over(3)
    with pytest.raises(HypothesisError, match="supplied"):
        FieldDatum(2).zeta(1)


def test_deck_roundtrip(write_deck):
    doc = {"field": {"degree": 2, "places": {"7": [{"e": 1, "f": 2}]}, "zeta_values": ["1/6", "-3/5"]},
           "quaternion": {"ramified": [{"prime": 2, "place_index": 0, "gamma_parity": 0}]},
           "m": 2, "N": 3, "p": 7, "G_order_modN": 99}
    inp = load_deck(write_deck(doc))
    assert inp.field.zeta(2) == Fraction(-3, 5)
    assert inp.quat.parity_at(2) == 0 and inp.g_order_override == 99
    assert parse_deck(json.loads(json.dumps(deck_to_json(inp)))) == inp


@pytest.mark.parametrize("doc, path", [
    ([], "$"),
    ({"m": 1, "N": 3}, "$.p"),
    ({"m": "1", "N": 3, "p": 7}, "$.m"),
    ({"m": 1, "N": 3, "p": 7, "field": {"degree": 1, "zeta_values": ["x"]}}, "$.field.zeta_values[0]"),
    ({"m": 1, "N": 3, "p": 7, "quaternion": {"ramified": [{"prime": 2}]}}, "$.quaternion.ramified[0].gamma_parity"),
])
def test_deck_errors_name_the_path(doc, path):
    with pytest.raises(DeckError) as info:
        parse_deck(doc)
    assert info.value.path == path


def test_bad_json(tmp_path):
    path = tmp_path / "x.json"
    path.write_text("{")
    with pytest.raises(DeckError, match="valid JSON"):
        load_deck(str(path))
