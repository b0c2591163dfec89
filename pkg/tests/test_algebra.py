import pytest

from eil.algebra import (
    MonomialIdeal,
    divides,
    edge_ideal,
    ideal_power,
    ideal_product,
    lcm,
    minimalize,
    polarize,
)
from eil.errors import InputValidationError, ResourceError
from eil.structure import complete, cycle, path


def test_edge_ideal():
    i = edge_ideal(path(3))
    assert i.variables == ("x0", "x1", "x2")
    assert set(i.generators) == {(1, 1, 0), (0, 1, 1)}
    assert str(i) == "(x1*x2, x0*x1)"


def test_powers():
    c5 = edge_ideal(cycle(5))
    assert len(ideal_power(c5, 2).generators) == 15
    assert ideal_power(edge_ideal(complete(2)), 4).generators == ((4, 4),)
    # I^2 of P3: x0^2x1^2, x0x1^2x2, x1^2x2^2
    assert set(ideal_power(edge_ideal(path(3)), 2).generators) == {(2, 2, 0), (1, 2, 1), (0, 2, 2)}
    with pytest.raises(InputValidationError):
        ideal_power(c5, 0)


def test_power_is_product_of_powers():
    i = edge_ideal(cycle(5))
    assert ideal_power(i, 3) == ideal_product(ideal_power(i, 2), i)
    assert all(sum(g) == 6 for g in ideal_power(i, 3).generators)


def test_minimalize_and_divisibility():
    assert minimalize([(1, 1), (2, 1), (1, 1), (0, 3)]) == ((0, 3), (1, 1))
    assert divides((1, 0), (1, 2)) and not divides((2, 0), (1, 2))
    assert lcm((1, 3), (2, 0)) == (2, 3)


def test_create_validates():
    with pytest.raises(InputValidationError):
        MonomialIdeal.create(["a", "b"], [(1,)])
    with pytest.raises(InputValidationError):
        MonomialIdeal.create(["a"], [(-1,)])


def test_json_round_trip():
    i = ideal_power(edge_ideal(path(4)), 2)
    assert MonomialIdeal.from_json(i.to_json()) == i


def test_polarize():
    i = MonomialIdeal.create(["a", "b"], [(2, 0), (1, 1)])
    pol, varmap = polarize(i)
    assert varmap == [(0, 1), (0, 2), (1, 1)]
    assert pol.variables == ("a_1", "a_2", "b_1")
    assert set(pol.generators) == {(1, 1, 0), (1, 0, 1)}
    assert pol.is_squarefree()


def test_polarize_squarefree_is_identity():
    i = edge_ideal(cycle(5))
    pol, varmap = polarize(i)
    assert pol == i and varmap == [(k, 1) for k in range(5)]


def test_polarized_variable_count():
    power = ideal_power(edge_ideal(cycle(5)), 3)
    pol, _ = polarize(power)
    assert pol.nvars == 15 == sum(power.max_exponents())


def test_generator_budget(monkeypatch):
    monkeypatch.setenv("EIL_BUDGET_GENERATORS", "10")
    with pytest.raises(ResourceError):
        ideal_power(edge_ideal(complete(5)), 2)
