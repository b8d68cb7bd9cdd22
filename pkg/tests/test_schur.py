"""Tuple-class subring: mark matrix, universal coefficients, restriction."""

import random

import pytest

from torusclass.combinatorics import compositions, multinomial, partitions
from torusclass.cyclic import CyclicBurnside
from torusclass.gsets import (
    cyclic_decomposition,
    perm_of_cycle_type,
    power_tuple_set,
    tuple_set_permutation,
    with_single_generator,
)
from torusclass.schur import (
    DEGREE_BOUND,
    SchurElement,
    lambda_standard,
    mark_matrix,
    restrict_to_cyclic,
    torus_coefficient,
    tuple_set_class,
)


def _brute_force_mark(n, mu, lam):
    # fixed points of an explicit permutation on the materialized tuple set
    a = power_tuple_set(n, mu)
    induced = tuple_set_permutation(a, perm_of_cycle_type(lam))
    return sum(1 for i, j in enumerate(induced) if i == j)


def test_mark_matrix_small_entries():
    m = mark_matrix(2)
    assert m.entry((2,), (2,)) == 1
    assert m.entry((1, 1), (2,)) == 0
    assert m.entry((1, 1), (1, 1)) == 2
    assert mark_matrix(4).entry((2, 2), (2, 2)) == 2


def test_mark_matrix_identity_column_is_multinomial():
    for n in range(1, 7):
        m = mark_matrix(n)
        for mu in m.index:
            assert m.entry(mu, (1,) * n) == multinomial(n, mu)


def test_mark_matrix_matches_brute_force():
    for n in range(1, 6):
        m = mark_matrix(n)
        for mu in m.index:
            for lam in m.index:
                assert m.entry(mu, lam) == _brute_force_mark(n, mu, lam)


def test_mark_matrix_bounds():
    with pytest.raises(ValueError):
        mark_matrix(0)
    with pytest.raises(ValueError):
        mark_matrix(DEGREE_BOUND + 1)


def test_mark_matrix_invertible_in_supported_range():
    # construction inverts the matrix exactly; reaching here means no n in
    # range is singular
    for n in range(1, 8):
        mark_matrix(n)


def test_tuple_set_class_padding_and_sorting():
    assert tuple_set_class(4, (2,)) == SchurElement.from_basis(4, {(2, 2): 1})
    assert tuple_set_class(4, (1,)) == SchurElement.from_basis(4, {(3, 1): 1})
    assert tuple_set_class(3, (1, 2)) == SchurElement.from_basis(3, {(2, 1): 1})
    assert tuple_set_class(4, (2,)) == tuple_set_class(4, (2, 2))
    with pytest.raises(ValueError):
        tuple_set_class(3, (2, 2))


def test_tuple_set_class_cardinalities():
    for n in range(1, 7):
        for w in range(1, n + 1):
            for comp in compositions(w):
                assert tuple_set_class(n, comp).cardinality == multinomial(n, comp)


def test_unit_element_has_all_marks_one():
    for n in range(1, 6):
        unit = SchurElement.unit(n)
        for lam in partitions(n):
            assert unit.mark(lam) == 1


def test_addition_and_negation():
    x = tuple_set_class(3, (1,))
    assert x - x == SchurElement.zero(3)
    assert x + x == 2 * x


def test_multiplication_of_free_pairs():
    # two marked points give twice the regular class
    x = tuple_set_class(2, (1,))
    assert x * x == SchurElement.from_basis(2, {(1, 1): 2})


def test_multiplication_closure_on_random_pairs():
    rng = random.Random(41)
    for n in range(2, 6):
        parts = partitions(n)
        for _ in range(8):
            x = SchurElement.from_basis(
                n, {mu: rng.randint(-2, 2) for mu in parts}
            )
            y = SchurElement.from_basis(
                n, {mu: rng.randint(-2, 2) for mu in parts}
            )
            z = x * y
            for lam in parts:
                assert z.mark(lam) == x.mark(lam) * y.mark(lam)


def test_from_marks_rejects_off_lattice_vectors():
    with pytest.raises(ArithmeticError):
        SchurElement.from_marks(2, {(1, 1): 1, (2,): 0})


def test_from_marks_requires_all_cycle_types():
    with pytest.raises(ValueError):
        SchurElement.from_marks(2, {(1, 1): 2})


def test_universal_coefficient_examples():
    assert torus_coefficient(2, 2) == SchurElement.from_basis(2, {(1, 1): 1, (2,): -1})
    for n in range(1, 8):
        assert torus_coefficient(n, 1) == -tuple_set_class(n, (1,))
        assert torus_coefficient(n, 1).cardinality == -n
    with pytest.raises(ValueError):
        torus_coefficient(3, 0)
    with pytest.raises(ValueError):
        torus_coefficient(3, 4)


def test_alternating_power_examples():
    assert lambda_standard(2, 2).marks == {(1, 1): 1, (2,): -1}
    for n in range(1, 6):
        assert lambda_standard(n, 0) == SchurElement.unit(n)
        assert lambda_standard(n, 1) == tuple_set_class(n, (1,))


def test_top_alternating_power_is_the_sign():
    for n in range(1, 7):
        top = lambda_standard(n, n)
        for lam in partitions(n):
            assert top.mark(lam) == (-1) ** (n - len(lam))


def test_universal_coefficients_are_signed_alternating_powers():
    for n in range(1, 7):
        for i in range(1, n + 1):
            sign = -1 if i % 2 else 1
            assert torus_coefficient(n, i) == sign * lambda_standard(n, i)


def test_restriction_at_identity_and_of_unit():
    for n in range(1, 6):
        unit = SchurElement.unit(n)
        for lam in partitions(n):
            assert restrict_to_cyclic(unit, lam) == CyclicBurnside.ONE
        x = torus_coefficient(n, 1)
        assert restrict_to_cyclic(x, (1,) * n) == CyclicBurnside({1: x.cardinality})


def test_restriction_of_pair_subsets_at_a_four_cycle():
    got = restrict_to_cyclic(tuple_set_class(4, (2,)), (4,))
    assert got == CyclicBurnside({4: 1, 2: 1})


def test_restriction_of_weight_two_coefficient_at_a_four_cycle():
    got = restrict_to_cyclic(torus_coefficient(4, 2), (4,))
    assert got == CyclicBurnside({4: 2, 2: -1})


def test_restriction_matches_concrete_orbit_scan():
    for n in range(1, 6):
        for lam in partitions(n):
            sigma = perm_of_cycle_type(lam)
            for w in range(1, n + 1):
                for comp in compositions(w):
                    a = power_tuple_set(n, comp)
                    concrete = cyclic_decomposition(
                        with_single_generator(a, tuple_set_permutation(a, sigma))
                    )
                    assert restrict_to_cyclic(tuple_set_class(n, comp), lam) == concrete


def test_restriction_can_produce_orbits_larger_than_n():
    # a (3,2)-cycle acting on pairs-of-pairs reaches orbit size 6 > 5
    x = tuple_set_class(5, (2, 2, 1))
    restricted = restrict_to_cyclic(x, (3, 2))
    assert restricted.coeffs.get(6, 0) > 0


def test_restriction_is_a_ring_map():
    rng = random.Random(43)
    for n in range(2, 7):
        parts = partitions(n)
        for _ in range(6):
            x = SchurElement.from_basis(n, {mu: rng.randint(-2, 2) for mu in parts})
            y = SchurElement.from_basis(n, {mu: rng.randint(-2, 2) for mu in parts})
            for lam in (parts[0], parts[-1], parts[len(parts) // 2]):
                rx = restrict_to_cyclic(x, lam)
                ry = restrict_to_cyclic(y, lam)
                assert restrict_to_cyclic(x + y, lam) == rx + ry
                assert restrict_to_cyclic(x * y, lam) == rx * ry


def test_rendering_and_json():
    x = torus_coefficient(4, 1)
    assert str(x) == "-1·[P_(3,1)]"
    payload = x.to_json()
    assert payload["n"] == 4
    assert payload["basis"] == {"3,1": -1}
    assert payload["marks"]["1,1,1,1"] == -4
    assert str(SchurElement.zero(3)) == "0"
