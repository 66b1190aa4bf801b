import json

import numpy as np
import pytest

from polybrx.monoid import (
    BUILTIN_MONOIDS,
    FiniteMonoid,
    MonoidError,
    PreconditionError,
    Theta,
    ThetaError,
    center,
    chain_semilattice,
    check_green_consistency,
    check_monoid,
    check_theta,
    cyclic,
    e_unitary_violation,
    green_S,
    green_classes,
    idempotents,
    idempotents_commute,
    inverses_of,
    is_bisimple,
    is_combinatorial,
    is_E_unitary,
    is_inverse_monoid,
    is_regular,
    leftzero,
    load_monoid_file,
    monoid_to_dict,
    nat_leq,
    right_solutions,
    left_solutions,
    symmetric_inverse_2,
    theta_fiber,
    theta_identity,
    theta_one,
    theta_pow,
    theta_pow_fiber,
    trivial,
    unit_group,
    validate_monoid,
    validate_theta,
)

ALL_BUILTINS = sorted(BUILTIN_MONOIDS)


@pytest.fixture
def c2():
    return cyclic(2)


@pytest.fixture
def chain():
    return chain_semilattice(2)


@pytest.fixture
def lz2():
    return leftzero(2)


@pytest.fixture
def i2():
    return symmetric_inverse_2()


class TestValidation:
    @pytest.mark.parametrize("name", ALL_BUILTINS)
    def test_builtins_are_monoids(self, name):
        assert validate_monoid(BUILTIN_MONOIDS[name]()) is None

    def test_cyclic_group(self):
        assert validate_monoid(FiniteMonoid([[0, 1], [1, 0]], 0)) is None

    def test_associativity_violation(self):
        m = FiniteMonoid([[0, 2, 2], [1, 1, 2], [2, 0, 2]], 0)
        violation = validate_monoid(m)
        assert violation.kind == "associativity"
        assert violation.witness == (0, 1, 1)
        with pytest.raises(MonoidError) as err:
            check_monoid(m)
        assert err.value.violation == violation

    def test_identity_violation(self):
        violation = validate_monoid(FiniteMonoid([[0, 0], [0, 1]], 0))
        assert violation.kind == "identity"
        assert violation.witness == (0, 1)

    def test_structural_errors(self):
        with pytest.raises(ValueError):
            FiniteMonoid([[0, 1], [1]], 0)
        with pytest.raises(ValueError):
            FiniteMonoid([[0, 2], [1, 0]], 0)
        with pytest.raises(ValueError):
            FiniteMonoid([[0]], 1)
        with pytest.raises(ValueError):
            FiniteMonoid([], 0)

    @pytest.mark.parametrize("table", [[[0, 1.7], [1, 0]], [[0, 1.0], [1, 0]], [[0, True], [1, 0]]])
    def test_non_integer_entries_rejected(self, table):
        with pytest.raises(ValueError, match="integer index"):
            FiniteMonoid(table, 0)

    def test_non_integer_identity_rejected(self):
        with pytest.raises(ValueError):
            FiniteMonoid([[0]], 0.0)

    def test_numpy_integers_accepted(self):
        m = FiniteMonoid(np.array([[0, 1], [1, 0]]), np.int64(0))
        assert m.identity == 0
        assert validate_monoid(m) is None

    def test_table_is_read_only(self, c2):
        with pytest.raises(ValueError):
            c2.table[0, 0] = 1


class TestDistinguishedSubsets:
    def test_group(self, c2):
        assert idempotents(c2) == {0}
        assert unit_group(c2) == {0, 1}
        assert center(c2) == {0, 1}

    def test_chain(self, chain):
        assert idempotents(chain) == {0, 1}
        assert unit_group(chain) == {0}

    def test_leftzero(self, lz2):
        assert idempotents(lz2) == {0, 1, 2}
        assert unit_group(lz2) == {0}
        assert center(lz2) == {0}

    def test_symmetric_inverse(self, i2):
        assert i2.size == 7
        assert i2.name_of(6) == "0"
        assert idempotents(i2) == {0, 2, 3, 6}
        assert unit_group(i2) == {0, 1}

    def test_names(self, c2):
        assert c2.name_of(1) == "g"
        assert c2.index_of("g") == 1
        assert FiniteMonoid([[0]], 0).name_of(0) == "s0"
        with pytest.raises(ValueError):
            c2.index_of("h")


class TestGreen:
    def test_group_relates_everything(self, c2):
        for rel in ("L", "R", "H", "D", "J"):
            assert green_S(c2, rel, 0, 1)

    def test_chain(self, chain):
        assert not green_S(chain, "L", 0, 1)
        assert green_classes(chain, "D") == [frozenset({0}), frozenset({1})]

    def test_leftzero(self, lz2):
        assert green_S(lz2, "L", 1, 2)
        assert not green_S(lz2, "R", 1, 2)

    def test_symmetric_inverse(self, i2):
        assert green_S(i2, "D", 2, 3)
        assert not green_S(i2, "L", 2, 3)
        assert green_S(i2, "R", 2, 4)

    @pytest.mark.parametrize("name", ALL_BUILTINS)
    def test_d_equals_j(self, name):
        assert check_green_consistency(BUILTIN_MONOIDS[name]()) is None

    def test_unknown_relation(self, c2):
        with pytest.raises(ValueError):
            green_S(c2, "X", 0, 0)

    def test_combinatorial_and_bisimple(self, c2, chain):
        assert not is_combinatorial(c2)
        assert is_combinatorial(chain)
        assert is_bisimple(c2)
        assert not is_bisimple(chain)


class TestInverses:
    def test_group(self, c2):
        assert inverses_of(c2, 1) == {1}
        assert is_inverse_monoid(c2)

    def test_chain(self, chain):
        assert inverses_of(chain, 1) == {1}
        assert is_inverse_monoid(chain)

    def test_leftzero(self, lz2):
        assert inverses_of(lz2, 1) == {1, 2}
        assert is_regular(lz2)
        assert not is_inverse_monoid(lz2)
        assert not idempotents_commute(lz2)

    def test_symmetric_inverse(self, i2):
        assert is_inverse_monoid(i2)
        assert inverses_of(i2, 4) == {5}

    @pytest.mark.parametrize("name", ALL_BUILTINS)
    def test_inverse_iff_regular_with_commuting_idempotents(self, name):
        m = BUILTIN_MONOIDS[name]()
        assert is_inverse_monoid(m) == (is_regular(m) and idempotents_commute(m))


class TestOrderAndUnitarity:
    def test_groups_are_e_unitary(self, c2):
        assert is_E_unitary(c2)
        assert is_E_unitary(cyclic(3))

    def test_chain(self, chain):
        assert is_E_unitary(chain)
        assert nat_leq(chain, 1, 0)
        assert not nat_leq(chain, 0, 1)

    def test_symmetric_inverse_not_e_unitary(self, i2):
        assert not is_E_unitary(i2)
        e, s = e_unitary_violation(i2)
        assert e in i2.idempotents
        assert s not in i2.idempotents
        assert i2.mul(e, s) in i2.idempotents

    def test_precondition(self, lz2):
        with pytest.raises(PreconditionError):
            is_E_unitary(lz2)
        # idempotents are compared without the inverse-monoid precondition
        assert not nat_leq(lz2, 1, 2)

    @pytest.mark.parametrize("name", ALL_BUILTINS)
    def test_partial_order_on_idempotents(self, name):
        m = BUILTIN_MONOIDS[name]()
        idem = sorted(m.idempotents)
        for e in idem:
            assert nat_leq(m, e, e)
            for f in idem:
                if e != f and nat_leq(m, e, f):
                    assert not nat_leq(m, f, e)
                for g in idem:
                    if nat_leq(m, e, f) and nat_leq(m, f, g):
                        assert nat_leq(m, e, g)

    def test_symmetric_inverse_order(self, i2):
        # a <= s: a = e1 * s
        assert nat_leq(i2, 4, 1)
        assert not nat_leq(i2, 1, 4)


class TestDivisionInS:
    def test_group(self, c2):
        assert right_solutions(c2, 1, 0) == {1}
        assert left_solutions(c2, 1, 1) == {0}

    def test_leftzero(self, lz2):
        assert right_solutions(lz2, 1, 1) == {0, 1, 2}
        assert left_solutions(lz2, 1, 1) == {0, 1}
        assert right_solutions(lz2, 1, 2) == frozenset()


class TestTheta:
    def test_identity_on_group(self, c2):
        assert validate_theta(c2, theta_identity(c2)) is None

    def test_constant(self, c2):
        theta = theta_one(c2)
        assert validate_theta(c2, theta) is None
        assert theta_fiber(theta, 0) == {0, 1}

    def test_image_outside_units(self, chain):
        violation = validate_theta(chain, theta_identity(chain))
        assert violation.kind == "unit_image"
        assert violation.witness == (1,)
        with pytest.raises(ThetaError):
            check_theta(chain, theta_identity(chain))

    def test_not_multiplicative(self):
        c3 = cyclic(3)
        violation = validate_theta(c3, Theta((0, 1, 1)))
        assert violation.kind == "homomorphism"
        assert violation.witness == (1, 1)

    def test_automorphism(self):
        c3 = cyclic(3)
        theta = Theta((0, 2, 1))
        assert validate_theta(c3, theta) is None
        assert theta_pow(theta, 0, 1) == 1
        assert theta_pow(theta, 1, 1) == 2
        assert theta_pow(theta, 2, 1) == 1
        assert theta_pow_fiber(theta, 1, 2) == {1}

    def test_non_integer_images_rejected(self):
        with pytest.raises(ValueError, match="integer index"):
            Theta((0, 0.9))
        with pytest.raises(ValueError):
            Theta((0, False))

    def test_wrong_shape(self, c2):
        with pytest.raises(ValueError):
            validate_theta(c2, Theta((0,)))
        with pytest.raises(ValueError):
            validate_theta(c2, Theta((0, 2)))


class TestMonoidFiles:
    def test_load(self, tmp_path):
        path = tmp_path / "c2.json"
        path.write_text(json.dumps(monoid_to_dict(cyclic(2), Theta((0, 1)))))
        monoid, theta = load_monoid_file(str(path))
        assert monoid.name == "C2"
        assert np.array_equal(monoid.table, cyclic(2).table)
        assert theta == Theta((0, 1))

    def test_load_without_theta(self, tmp_path):
        path = tmp_path / "t.json"
        path.write_text(json.dumps({"size": 1, "identity": 0, "table": [[0]]}))
        monoid, theta = load_monoid_file(str(path))
        assert monoid.name == "t"
        assert theta is None

    def test_invalid_table_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"size": 2, "identity": 0, "table": [[0, 0], [0, 1]]}))
        with pytest.raises(MonoidError):
            load_monoid_file(str(path))

    def test_fractional_file_rejected(self, tmp_path):
        path = tmp_path / "frac.json"
        path.write_text(json.dumps({"size": 2, "identity": 0, "table": [[0, 1.7], [1, 0]], "theta": [0, 0]}))
        with pytest.raises(ValueError, match="integer index"):
            load_monoid_file(str(path))
        path.write_text(json.dumps({"size": 2, "identity": 0, "table": [[0, 1], [1, 0]], "theta": [0, 0.9]}))
        with pytest.raises(ValueError, match="integer index"):
            load_monoid_file(str(path))

    def test_size_mismatch(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"size": 3, "identity": 0, "table": [[0]]}))
        with pytest.raises(ValueError):
            load_monoid_file(str(path))

    def test_fixture_theta_checked(self, tmp_path):
        spec = monoid_to_dict(chain_semilattice(2))
        spec["theta"] = [0, 1]
        path = tmp_path / "chain.json"
        path.write_text(json.dumps(spec))
        with pytest.raises(ThetaError):
            load_monoid_file(str(path))

    def test_trivial(self):
        assert trivial().size == 1
