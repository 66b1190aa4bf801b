# coding: utf-8
"""
Brute-force oracles: every answer here is recomputed from products alone,
by exhaustive search over a fragment.
"""
from collections import defaultdict
from typing import Dict, List, Optional, Set, Tuple

from polybrx.extension import BrxContext, BrxZero, Element, mul, one
from polybrx.fragment import Fragment


def product_table(ctx: BrxContext, fragment: Fragment) -> List[List[Element]]:
    """ table[i][j] = fragment[i] * fragment[j] """
    return [[mul(ctx, x, y) for y in fragment] for x in fragment]


def idempotent_by_product(ctx: BrxContext, x: Element) -> bool:
    return mul(ctx, x, x) == x


def solutions_by_search(ctx: BrxContext, a: Element, search: Fragment, side: str = "right") -> Dict[Element, Set[Element]]:
    """
    Every product a * x (side "right") or x * a (side "left") with x a nonzero
    element of search, grouped by value: result[b] is the solution set of
    a * x = b (or x * a = b) within search.
    """
    if side not in ("right", "left"):
        raise ValueError("Invalid side '{}': right|left".format(side))
    by_result: Dict[Element, Set[Element]] = defaultdict(set)
    for x in search.nonzero:
        by_result[mul(ctx, a, x) if side == "right" else mul(ctx, x, a)].add(x)
    return by_result


def inverses_by_search(ctx: BrxContext, x: Element, search: Fragment) -> Set[Element]:
    """ {y in search : xyx = x and yxy = y} """
    found = set()
    for y in search:
        xy = mul(ctx, x, y)
        if mul(ctx, xy, x) == x and mul(ctx, mul(ctx, y, x), y) == y:
            found.add(y)
    return found


def unit_by_search(ctx: BrxContext, x: Element, search: Fragment) -> bool:
    """ Some y in search has xy = yx = 1. """
    e = one(ctx)
    return any(mul(ctx, x, y) == e and mul(ctx, y, x) == e for y in search)


def central_by_search(ctx: BrxContext, x: Element, search: Fragment) -> bool:
    return all(mul(ctx, x, y) == mul(ctx, y, x) for y in search)


def divides_by_search(ctx: BrxContext, rel: str, x: Element, y: Element, search: Fragment) -> bool:
    """
    x in S^1 y (rel 'L'), x in y S^1 (rel 'R'), or both ('H'), with the
    multipliers taken from search.
    """
    if rel == "L":
        return x == y or any(mul(ctx, m, y) == x for m in search)
    if rel == "R":
        return x == y or any(mul(ctx, y, m) == x for m in search)
    if rel == "H":
        return divides_by_search(ctx, "L", x, y, search) and divides_by_search(ctx, "R", x, y, search)
    raise ValueError("No search oracle for relation '{}'".format(rel))


def related_by_search(ctx: BrxContext, rel: str, x: Element, y: Element, search: Fragment) -> bool:
    """ Multipliers in search witness x rel y in both directions. """
    return divides_by_search(ctx, rel, x, y, search) and divides_by_search(ctx, rel, y, x, search)


def noncommuting_idempotents_by_search(ctx: BrxContext, fragment: Fragment) -> Optional[Tuple[Element, Element]]:
    """ First pair of idempotents e, f of the fragment with ef != fe. """
    idempotents = [x for x in fragment if idempotent_by_product(ctx, x)]
    for e in idempotents:
        for f in idempotents:
            if mul(ctx, e, f) != mul(ctx, f, e):
                return e, f
    return None


def e_unitary_violation_by_search(ctx: BrxContext, fragment: Fragment) -> Optional[Tuple[Element, Element]]:
    """
    First (e, s) in the fragment with e a nonzero idempotent, e * s a nonzero
    idempotent and s not idempotent.
    """
    idempotents = [x for x in fragment.nonzero if idempotent_by_product(ctx, x)]
    others = [s for s in fragment.nonzero if not idempotent_by_product(ctx, s)]
    for e in idempotents:
        for s in others:
            es = mul(ctx, e, s)
            if not isinstance(es, BrxZero) and idempotent_by_product(ctx, es):
                return e, s
    return None
