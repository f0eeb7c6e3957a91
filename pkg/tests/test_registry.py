import json
import random

import pytest

from lfactor import (
    CuspidalDatum,
    Dual,
    Registry,
    RegistryFormatError,
    Scalar,
    UnknownLabel,
    ValidationError,
    load_registry,
    loads_registry,
    rs_pair_roots,
    validate,
)
from lfactor.generate import random_registry
from lfactor.registry import dumps_registry, self_twists

z = Scalar.root
ONE = Scalar()


def test_trivial_character_is_valid():
    validate(Registry([CuspidalDatum("one", 1, 1, ONE, Dual("one", ONE))]))


def test_central_character_mismatch():
    reg = Registry([CuspidalDatum("bad", 2, 1, ONE, Dual("bad", z(1, 3)))])
    with pytest.raises(ValidationError, match="alpha0\\^r"):
        validate(reg)


def test_shalika_outside_coset():
    reg = Registry([CuspidalDatum("rho2", 2, 1, ONE, Dual("rho2", ONE), {z(1, 2)})])
    with pytest.raises(ValidationError, match="alpha0 \\* mu_f"):
        validate(reg)


def test_shalika_must_be_stable_under_squared_self_twists():
    # f = 4: mu_4 squares to mu_2, so {1} alone is not closed
    reg = Registry([CuspidalDatum("r4", 4, 4, ONE, Dual("r4", ONE), {ONE})])
    with pytest.raises(ValidationError, match="squares of self-twists"):
        validate(reg)
    ok = Registry([CuspidalDatum("r4", 4, 4, ONE, Dual("r4", ONE), {ONE, z(1, 2)})])
    validate(ok)


def test_unknown_label():
    reg = Registry([CuspidalDatum("one", 1, 1, ONE, Dual("one", ONE))])
    with pytest.raises(UnknownLabel):
        reg["two"]


def test_duplicate_label():
    with pytest.raises(ValidationError):
        Registry([CuspidalDatum("x", 1), CuspidalDatum("x", 1)])


def test_rs_pair_roots_examples(std):
    assert rs_pair_roots(std, "one", "one") == {ONE}
    assert rs_pair_roots(std, "rho2o", "rho2o") == {ONE, z(1, 2)}
    assert rs_pair_roots(std, "one", "rho2") == frozenset()
    assert rs_pair_roots(std, "one", "chi") == frozenset()


def test_rs_pair_roots_non_self_dual(pair_reg):
    assert rs_pair_roots(pair_reg, "a", "b") == {ONE}
    assert rs_pair_roots(pair_reg, "a", "a") == frozenset()
    assert rs_pair_roots(pair_reg, "c", "d") == {z(1, 2), ONE}
    assert rs_pair_roots(pair_reg, "d", "c") == rs_pair_roots(pair_reg, "c", "d")


def test_std_contents(std):
    assert sorted(std.labels()) == ["chi", "one", "rho2", "rho2o", "rho3"]
    assert std["rho2"].shalika == {ONE}
    assert std["rho2o"].shalika == {z(1, 2)}
    assert not std["rho3"].shalika


def test_json_roundtrip(std, pair_reg):
    for reg in (std, pair_reg):
        again = loads_registry(dumps_registry(reg))
        assert list(again) == list(reg)


def test_load_from_path(tmp_path, std):
    p = tmp_path / "r.json"
    p.write_text(dumps_registry(std))
    assert list(load_registry(p)) == list(std)
    assert list(load_registry("std")) == list(std)


@pytest.mark.parametrize(
    "doc,where",
    [
        ("{", "line 1"),
        ('{"cusp": []}', "cuspidals"),
        ('{"cuspidals": [{"label": "x", "r": "2", "f": 1}]}', "cuspidals[0].r"),
        ('{"cuspidals": [{"label": "x", "r": 1, "f": 1}]}', "cuspidals[0].omega"),
        ('{"cuspidals": [{"label": "x", "r": 1, "f": 1, "omega": {"zeta": 0, "qexp": "0"}}]}', "cuspidals[0].omega.zeta"),
        ('{"cuspidals": [{"label": "x", "r": 1, "f": 1, "omega": {"zeta": "1/0", "qexp": "0"}}]}', "cuspidals[0].omega"),
    ],
)
def test_format_errors_name_the_location(doc, where):
    with pytest.raises(RegistryFormatError, match=__import__("re").escape(where)):
        loads_registry(doc)


@pytest.mark.parametrize("seed", range(20))
def test_random_registries_are_valid_and_symmetric(seed):
    reg = random_registry(random.Random(seed))
    validate(reg)
    for a in reg:
        for b in reg:
            assert rs_pair_roots(reg, a.label, b.label) == rs_pair_roots(reg, b.label, a.label)


def test_self_twists_form_a_group():
    mu = set(self_twists(6))
    assert len(mu) == 6
    assert all(x * y in mu for x in mu for y in mu)
