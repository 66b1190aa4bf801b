# coding: utf-8
"""
Evaluation of element expressions and structural queries against one context.
"""
from dataclasses import dataclass, field
from typing import List, Sequence

from polybrx.extension import (
    GREEN_RELATIONS,
    BrxContext,
    BrxZero,
    green,
    green_witness,
    inverse_of,
    is_idempotent,
    is_in_center,
    is_unit,
    mul,
    mul_all,
    nat_leq,
    quotient_to_P,
    render_elem,
    solve_left,
    solve_right,
    sort_key,
    structure_report,
    zero_simple_witness,
)
from polybrx.parsing import ElementParser
from polybrx.polycyclic import eval_generators, render_pelem

QUERY_ARITY = {
    "idem": 1,
    "inv": 1,
    "green": 3,
    "center": 1,
    "unit": 1,
    "solve": 3,
    "witness": 2,
    "quotient": 1,
    "leq": 2,
    "structure": 0,
    "gens": None,
}


@dataclass
class QueryAnswer:
    """ The decision of a query plus witness or solution lines. """

    query: str
    args: List[str]
    answer: str
    details: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"query": self.query, "args": self.args, "answer": self.answer, "details": self.details}

    def to_text(self) -> str:
        return "\n".join([self.answer] + self.details)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def cmd_eval(ctx: BrxContext, expr: str) -> str:
    """
    Evaluate a '*'-separated product of element literals, left to right.

    :param ctx: extension context
    :param expr: expression text
    :return: rendered product
    """
    factors = ElementParser(ctx).parse_product(expr)
    result = factors[0]
    for factor in factors[1:]:
        result = mul(ctx, result, factor)
    return render_elem(result)


def cmd_query(ctx: BrxContext, what: str, args: Sequence[str]) -> QueryAnswer:
    """
    Answer one structural query.

    :param ctx: extension context
    :param what: query name, see QUERY_ARITY
    :param args: query arguments as given on the command line
    :return: answer with details
    """
    if what not in QUERY_ARITY:
        raise ValueError("Unknown query '{}' (known: {})".format(what, ", ".join(QUERY_ARITY)))
    arity = QUERY_ARITY[what]
    if arity is not None and len(args) != arity:
        raise ValueError("Query '{}' takes {} arguments, got {}".format(what, arity, len(args)))
    args = list(args)
    parser = ElementParser(ctx)
    answer = QueryAnswer(what, args, "")

    if what == "structure":
        for key, value in structure_report(ctx).items():
            answer.details.append("{}: {}".format(key, _bool(value)))
        answer.answer = ctx.name
    elif what == "gens":
        answer.answer = render_pelem(eval_generators(" ".join(args), ctx.k))
    elif what == "idem":
        answer.answer = _bool(is_idempotent(ctx, parser.parse_elem(args[0])))
    elif what == "inv":
        y = inverse_of(ctx, parser.parse_elem(args[0]))
        answer.answer = "none" if y is None else render_elem(y)
    elif what == "center":
        answer.answer = _bool(is_in_center(ctx, parser.parse_elem(args[0])))
    elif what == "unit":
        answer.answer = _bool(is_unit(ctx, parser.parse_elem(args[0])))
    elif what == "quotient":
        answer.answer = render_pelem(quotient_to_P(ctx, parser.parse_elem(args[0])))
    elif what == "leq":
        x, y = parser.parse_elem(args[0]), parser.parse_elem(args[1])
        answer.answer = _bool(nat_leq(ctx, x, y))
    elif what == "green":
        rel = args[0]
        if rel not in GREEN_RELATIONS:
            raise ValueError("Unknown Green's relation '{}'".format(rel))
        x, y = parser.parse_elem(args[1]), parser.parse_elem(args[2])
        answer.answer = _bool(green(ctx, rel, x, y))
        witness = green_witness(ctx, rel, x, y)
        if witness is not None:
            sides = [witness] if witness.also is None else [witness, witness.also]
            for side in sides:
                answer.details += [
                    "x = {} * y * {}".format(render_elem(side.x_left), render_elem(side.x_right)),
                    "y = {} * x * {}".format(render_elem(side.y_left), render_elem(side.y_right)),
                ]
            answer.details.append("verified: {}".format(_bool(witness.holds(ctx, x, y))))
    elif what == "solve":
        side = args[0]
        if side not in ("right", "left"):
            raise ValueError("Invalid side '{}' for solve: right|left".format(side))
        a, b = parser.parse_elem(args[1]), parser.parse_elem(args[2])
        solver = solve_right if side == "right" else solve_left
        solutions = sorted(solver(ctx, a, b), key=sort_key)
        answer.answer = "{} solution{}".format(len(solutions), "" if len(solutions) == 1 else "s")
        answer.details = [render_elem(x) for x in solutions]
    elif what == "witness":
        a, b = parser.parse_elem(args[0]), parser.parse_elem(args[1])
        if isinstance(a, BrxZero) or isinstance(b, BrxZero):
            raise ValueError("Witnesses are defined for nonzero elements only")
        x, y = zero_simple_witness(ctx, a, b)
        answer.answer = _bool(mul_all(ctx, x, b, y) == a)
        answer.details = ["x = {}".format(render_elem(x)), "y = {}".format(render_elem(y))]
    return answer
