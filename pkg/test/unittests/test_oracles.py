import pytest

from polybrx.extension import BRX_ZERO, BrxZero, is_in_center, mul, one, solve_left, solve_right
from polybrx.fragment import enum_fragment
from polybrx.oracles import (
    central_by_search,
    divides_by_search,
    e_unitary_violation_by_search,
    idempotent_by_product,
    inverses_by_search,
    noncommuting_idempotents_by_search,
    product_table,
    related_by_search,
    solutions_by_search,
    unit_by_search,
)


class TestProducts:
    def test_table(self, trivial_k2):
        e = one(trivial_k2)
        table = product_table(trivial_k2, enum_fragment(trivial_k2, 0))
        assert table == [[BRX_ZERO, BRX_ZERO], [BRX_ZERO, e]]

    def test_idempotent(self, c2_id, parse):
        assert idempotent_by_product(c2_id, one(c2_id))
        assert idempotent_by_product(c2_id, BRX_ZERO)
        assert not idempotent_by_product(c2_id, parse(c2_id, "(s1,1)"))


class TestSearches:
    def test_inverses(self, c2_id, parse):
        x = parse(c2_id, "(s0,[]^-1[a])")
        found = inverses_by_search(c2_id, x, enum_fragment(c2_id, 1))
        assert found == {parse(c2_id, "(s0,[a]^-1[])")}

    def test_units(self, c2_id, parse):
        assert unit_by_search(c2_id, parse(c2_id, "(s1,1)"), enum_fragment(c2_id, 0))
        assert not unit_by_search(c2_id, parse(c2_id, "(s0,[]^-1[a])"), enum_fragment(c2_id, 1))

    def test_centre_depends_on_theta(self, c2_id, c2_one, parse):
        for ctx, expected in ((c2_id, True), (c2_one, False)):
            x = parse(ctx, "(s1,1)")
            assert central_by_search(ctx, x, enum_fragment(ctx, 1)) == expected
            assert is_in_center(ctx, x) == expected

    def test_divisibility(self, c2_id, parse):
        x, y = parse(c2_id, "(s0,[a]^-1[])"), parse(c2_id, "(s0,1)")
        search = enum_fragment(c2_id, 1)
        assert divides_by_search(c2_id, "L", x, y, search)
        assert related_by_search(c2_id, "L", x, y, search)
        assert not related_by_search(c2_id, "R", x, y, search)
        assert not related_by_search(c2_id, "H", x, y, search)

    def test_unsupported_relation(self, c2_id):
        with pytest.raises(ValueError):
            divides_by_search(c2_id, "J", BRX_ZERO, BRX_ZERO, enum_fragment(c2_id, 0))

    def test_solutions(self, c2_id, parse):
        a, b = parse(c2_id, "(s0,[]^-1[a])"), parse(c2_id, "(s0,[]^-1[b])")
        search = enum_fragment(c2_id, 1)
        right = solutions_by_search(c2_id, a, search, "right")
        assert right[b] == {parse(c2_id, "(s0,[a]^-1[b])")} == solve_right(c2_id, a, b)
        c, d = parse(c2_id, "(s0,[a]^-1[])"), parse(c2_id, "(s0,[b]^-1[])")
        left = solutions_by_search(c2_id, c, search, "left")
        assert left[d] == {parse(c2_id, "(s0,[b]^-1[a])")} == solve_left(c2_id, c, d)
        assert sum(len(found) for found in right.values()) == len(search.nonzero)

    def test_solutions_side(self, c2_id):
        with pytest.raises(ValueError):
            solutions_by_search(c2_id, BRX_ZERO, enum_fragment(c2_id, 0), "up")


class TestIdempotentStructure:
    def test_noncommuting_pair(self, lz2_one, parse):
        pair = noncommuting_idempotents_by_search(lz2_one, enum_fragment(lz2_one, 0))
        assert pair == (parse(lz2_one, "(s1,1)"), parse(lz2_one, "(s2,1)"))

    def test_commuting(self, c2_id):
        assert noncommuting_idempotents_by_search(c2_id, enum_fragment(c2_id, 1)) is None

    def test_e_unitary(self, c2_id):
        assert e_unitary_violation_by_search(c2_id, enum_fragment(c2_id, 1)) is None

    @pytest.mark.parametrize("ctx_name, maxlen", [("c2_one", 1), ("i2_one", 0)])
    def test_violation(self, request, ctx_name, maxlen):
        ctx = request.getfixturevalue(ctx_name)
        e, s = e_unitary_violation_by_search(ctx, enum_fragment(ctx, maxlen))
        es = mul(ctx, e, s)
        assert idempotent_by_product(ctx, e)
        assert not idempotent_by_product(ctx, s)
        assert not isinstance(es, BrxZero)
        assert idempotent_by_product(ctx, es)
