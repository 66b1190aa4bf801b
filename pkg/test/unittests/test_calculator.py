import pytest

from polybrx.calculator import QUERY_ARITY, cmd_eval, cmd_query
from polybrx.parsing import ParseError


class TestEval:
    def test_product(self, c2_id):
        assert cmd_eval(c2_id, "(s1,[]^-1[]) * (s1,[a]^-1[])") == "(s0,[a]^-1[])"

    def test_zero_product(self, c2_id):
        assert cmd_eval(c2_id, "(s0,[]^-1[a]) * (s0,[b]^-1[])") == "0"
        assert cmd_eval(c2_id, "0 * (s0,1)") == "0"

    def test_single_factor(self, c2_id):
        assert cmd_eval(c2_id, "(g,[]^-1[])") == "(s1,1)"

    def test_left_to_right(self, c2_one):
        assert cmd_eval(c2_one, "(s0,[a]^-1[a]) * (s1,1) * (s1,1)") == "(s0,[a]^-1[a])"

    def test_parse_error(self, c2_id):
        with pytest.raises(ParseError):
            cmd_eval(c2_id, "(s0,1) *")


class TestQuery:
    def test_green_with_witness(self, c2_id):
        answer = cmd_query(c2_id, "green", ["L", "(s0,[a]^-1[b])", "(s1,[ba]^-1[b])"])
        assert answer.answer == "true"
        assert len(answer.details) == 3
        assert answer.details[-1] == "verified: true"

    def test_green_unrelated(self, c2_id):
        answer = cmd_query(c2_id, "green", ["R", "(s0,[a]^-1[b])", "(s1,[b]^-1[b])"])
        assert answer.answer == "false"
        assert answer.details == []

    def test_solve(self, c2_id):
        answer = cmd_query(c2_id, "solve", ["right", "(s0,[]^-1[a])", "(s0,[]^-1[ab])"])
        assert answer.to_text() == "2 solutions\n(s0,[]^-1[b])\n(s0,[a]^-1[ab])"

    def test_h_witness_lists_both_sides(self, c2_id):
        answer = cmd_query(c2_id, "green", ["H", "(s0,[a]^-1[b])", "(s1,[a]^-1[b])"])
        assert answer.answer == "true"
        assert answer.details == [
            "x = (s1,[a]^-1[a]) * y * (s0,1)",
            "y = (s1,[a]^-1[a]) * x * (s0,1)",
            "x = (s0,1) * y * (s1,[b]^-1[b])",
            "y = (s0,1) * x * (s1,[b]^-1[b])",
            "verified: true",
        ]

    def test_solve_single(self, c2_id):
        answer = cmd_query(c2_id, "solve", ["right", "(s0,[]^-1[a])", "(s0,[]^-1[b])"])
        assert answer.to_text() == "1 solution\n(s0,[a]^-1[b])"

    def test_solve_left(self, c2_id):
        answer = cmd_query(c2_id, "solve", ["left", "(s0,[a]^-1[])", "(s0,[ab]^-1[])"])
        assert answer.details == ["(s0,[b]^-1[])", "(s0,[ab]^-1[a])"]

    def test_witness(self, c2_id):
        answer = cmd_query(c2_id, "witness", ["(s1,[]^-1[])", "(s1,[a]^-1[a])"])
        assert answer.answer == "true"
        assert answer.details == ["x = (s1,[]^-1[aa])", "y = (s1,[aa]^-1[])"]

    def test_element_predicates(self, c2_id, c2_one):
        assert cmd_query(c2_id, "idem", ["(s0,[ab]^-1[ab])"]).answer == "true"
        assert cmd_query(c2_id, "inv", ["(s1,[a]^-1[b])"]).answer == "(s1,[b]^-1[a])"
        assert cmd_query(c2_id, "center", ["(s1,1)"]).answer == "true"
        assert cmd_query(c2_one, "center", ["(s1,1)"]).answer == "false"
        assert cmd_query(c2_one, "unit", ["(s1,1)"]).answer == "true"
        assert cmd_query(c2_id, "quotient", ["(s1,[a]^-1[b])"]).answer == "[a]^-1[b]"
        assert cmd_query(c2_id, "leq", ["(s0,[a]^-1[a])", "(s0,1)"]).answer == "true"

    def test_inverse_in_leftzero(self, lz2_one):
        assert cmd_query(lz2_one, "inv", ["(y,1)"]).answer == "(s1,1)"

    def test_structure(self, c2_one):
        answer = cmd_query(c2_one, "structure", [])
        assert answer.answer == "C2/one/k=2"
        assert "zero_E_unitary: false" in answer.details
        assert "inverse: true" in answer.details

    def test_generators(self, c2_id):
        assert cmd_query(c2_id, "gens", ["q0", "p1"]).answer == "[a]^-1[b]"
        assert cmd_query(c2_id, "gens", ["p0", "q1"]).answer == "0"

    def test_to_dict(self, c2_id):
        answer = cmd_query(c2_id, "unit", ["0"])
        assert answer.to_dict() == {"query": "unit", "args": ["0"], "answer": "false", "details": []}

    def test_errors(self, c2_id):
        with pytest.raises(ValueError):
            cmd_query(c2_id, "nonsense", [])
        with pytest.raises(ValueError):
            cmd_query(c2_id, "idem", [])
        with pytest.raises(ValueError):
            cmd_query(c2_id, "green", ["X", "0", "0"])
        with pytest.raises(ValueError):
            cmd_query(c2_id, "solve", ["up", "(s0,1)", "(s0,1)"])
        with pytest.raises(ValueError):
            cmd_query(c2_id, "witness", ["0", "(s0,1)"])

    def test_arity_table(self):
        assert QUERY_ARITY["structure"] == 0
        assert QUERY_ARITY["gens"] is None
