# coding: utf-8
"""
Verification suites. Each suite takes one characterization of the extension
and compares it with values recomputed from products over a fragment.
"""
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np

from polybrx.extension import (
    BRX_ZERO,
    GREEN_RELATIONS,
    BrxContext,
    BrxElem,
    Element,
    classify_triple,
    conjugate_embed,
    conjugate_restore,
    embed_P,
    embed_S,
    green,
    green_witness,
    in_conjugate_copy,
    inverse_of,
    is_0_E_unitary,
    is_idempotent,
    is_in_center,
    is_unit,
    mul,
    mul_all,
    one,
    quotient_to_P,
    render_elem,
    slice_transport,
    solve_left,
    solve_right,
    sort_key,
    structure_report,
    zero_simple_witness,
)
from polybrx.fragment import Fragment, FragmentCache, p_fragment
from polybrx.metrics import BASE_METRICS, distance_matrix, metric_violation, open_ball
from polybrx.monoid import (
    PreconditionError,
    check_green_consistency,
    is_inverse_monoid,
    noncommuting_idempotents,
)
from polybrx.oracles import (
    central_by_search,
    e_unitary_violation_by_search,
    idempotent_by_product,
    inverses_by_search,
    noncommuting_idempotents_by_search,
    product_table,
    related_by_search,
    solutions_by_search,
    unit_by_search,
)
from polybrx.parsing import ElementParser
from polybrx.polycyclic import (
    P_ZERO,
    PElem,
    bicyclic_product,
    p_identity,
    p_mul,
    render_pelem,
)
from polybrx.words import Word, enumerate_words, is_suffix

MAX_STORED_FAILURES = 25


@dataclass(frozen=True)
class SuiteParams:
    """ Fragment bounds and sampling settings shared by all suites. """

    triple_L: int = 1
    pair_L: int = 2
    solver_L: int = 1
    solver_search_L: int = 3
    inverse_search_L: int = 4
    negative_search_L: int = 4
    negative_samples: int = 200
    grammar_samples: int = 1000
    bicyclic_max: int = 4
    metric: str = "discrete"
    seed: int = 42


@dataclass(frozen=True)
class Failure:
    inputs: Tuple[str, ...]
    expected: str
    actual: str
    replay: str

    def to_dict(self) -> dict:
        return {
            "inputs": list(self.inputs),
            "expected": self.expected,
            "actual": self.actual,
            "replay": self.replay,
        }


@dataclass
class SuiteReport:
    """ Outcome of one suite on one context. Passing means no failed case. """

    suite: str
    anchor: str
    context: str
    cases: int = 0
    failed: int = 0
    failures: List[Failure] = field(default_factory=list)
    verdict: str = ""
    ms: int = 0

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def fail(self, inputs: Sequence[str], expected: str, actual: str, replay: str = ""):
        self.failed += 1
        if len(self.failures) < MAX_STORED_FAILURES:
            self.failures.append(Failure(tuple(inputs), expected, actual, replay))

    def to_dict(self, timing: bool = True) -> dict:
        report = {
            "suite": self.suite,
            "anchor": self.anchor,
            "context": self.context,
            "cases": self.cases,
            "passed": self.passed,
            "verdict": self.verdict,
            "failed": self.failed,
            "failures": [f.to_dict() for f in self.failures],
        }
        if timing:
            report["ms"] = self.ms
        return report


def _r(x: Element) -> str:
    return render_elem(x)


def eval_replay(ctx: BrxContext, *factors: Element) -> str:
    return 'python -m polybrx {} eval "{}"'.format(
        ctx.cli_args, " * ".join(_r(f) for f in factors)
    )


def query_replay(ctx: BrxContext, *args: str) -> str:
    quoted = [a if a.isalnum() else '"{}"'.format(a) for a in args]
    return "python -m polybrx {} query {}".format(ctx.cli_args, " ".join(quoted))


def check_associativity(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    frag = fragments(params.triple_L)
    elements = frag.elements
    pairs = product_table(ctx, frag)
    hits = Counter()
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            xy = pairs[i][j]
            for k, z in enumerate(elements):
                left = mul(ctx, xy, z)
                right = mul(ctx, x, pairs[j][k])
                report.cases += 1
                if left != right:
                    report.fail(
                        (_r(x), _r(y), _r(z)),
                        "(xy)z = {}".format(_r(left)),
                        "x(yz) = {}".format(_r(right)),
                        eval_replay(ctx, x, y, z),
                    )
                # index 0 is the zero
                if i and j and k:
                    hits[classify_triple(x, y, z)] += 1
    # over one letter any two words are suffix-comparable
    expected = set(range(1, 10)) if ctx.k >= 2 else {1, 2, 3, 4}
    if set(hits) != expected:
        report.fail(
            ("case coverage",),
            "cases {}".format(sorted(expected)),
            "cases {}".format(sorted(hits)),
        )
    report.verdict = "associative; case hits {}".format(
        ", ".join("{}:{}".format(c, hits[c]) for c in sorted(hits))
    )


def check_idempotents(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    count = 0
    for x in fragments(params.pair_L):
        expected = idempotent_by_product(ctx, x)
        actual = is_idempotent(ctx, x)
        report.cases += 1
        count += expected
        if expected != actual:
            report.fail((_r(x),), str(expected), str(actual), query_replay(ctx, "idem", _r(x)))
    report.verdict = "{} idempotents".format(count)


def check_commuting_idempotents(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    frag = fragments(params.pair_L)
    idempotents = [x for x in frag if idempotent_by_product(ctx, x)]
    report.cases = len(idempotents) ** 2
    found = noncommuting_idempotents_by_search(ctx, frag)
    in_S = noncommuting_idempotents(ctx.monoid)
    if in_S is None:
        if found is not None:
            e, f = found
            report.fail((_r(e), _r(f)), "ef = fe", "ef != fe", eval_replay(ctx, e, f))
        report.verdict = "idempotents commute"
        return
    e = BrxElem(in_S[0], p_identity(ctx.k))
    f = BrxElem(in_S[1], p_identity(ctx.k))
    if mul(ctx, e, f) == mul(ctx, f, e):
        report.fail((_r(e), _r(f)), "ef != fe", "ef = fe", eval_replay(ctx, e, f))
    if found is None:
        report.fail(("fragment",), "a noncommuting pair", "none found")
    report.verdict = "noncommuting pair found: ({}, {})".format(_r(e), _r(f))


def check_inverses(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    search = fragments(params.inverse_search_L)
    unique = is_inverse_monoid(ctx.monoid)
    for x in fragments(params.pair_L):
        y = inverse_of(ctx, x)
        found = inverses_by_search(ctx, x, search)
        report.cases += 1
        replay = query_replay(ctx, "inv", _r(x))
        if y is None:
            if found:
                report.fail((_r(x),), "no inverse", _r(min(found, key=sort_key)), replay)
            continue
        if mul_all(ctx, x, y, x) != x or mul_all(ctx, y, x, y) != y:
            report.fail((_r(x),), "xyx = x and yxy = y", "fails for y = {}".format(_r(y)), replay)
        elif unique and found != {y}:
            report.fail(
                (_r(x),),
                "unique inverse {}".format(_r(y)),
                ", ".join(_r(z) for z in sorted(found, key=sort_key)),
                replay,
            )
        elif y not in found:
            report.fail((_r(x),), "{} among the inverses".format(_r(y)), "not found", replay)
    report.verdict = "unique inverses" if unique else "inverses exist, not unique"


def check_green(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    violation = check_green_consistency(ctx.monoid)
    if violation is not None:
        report.fail(tuple(str(w) for w in violation.witness), "L o R = R o L and D = J", violation.message)
    frag = fragments(params.pair_L)
    positives = Counter()
    for x in frag:
        for y in frag:
            for rel in GREEN_RELATIONS:
                if not green(ctx, rel, x, y):
                    continue
                report.cases += 1
                positives[rel] += 1
                witness = green_witness(ctx, rel, x, y)
                if witness is None or not witness.holds(ctx, x, y):
                    report.fail(
                        (rel, _r(x), _r(y)),
                        "witness multipliers",
                        "none" if witness is None else "multipliers do not reproduce",
                        query_replay(ctx, "green", rel, _r(x), _r(y)),
                    )

    search = fragments(params.negative_search_L)
    rng = np.random.RandomState(params.seed)
    negative_rels = ("L", "R", "H")
    sampled = attempts = 0
    while sampled < params.negative_samples and attempts < 50 * params.negative_samples:
        rel = negative_rels[attempts % len(negative_rels)]
        attempts += 1
        i, j = rng.randint(len(frag), size=2)
        x, y = frag[int(i)], frag[int(j)]
        if green(ctx, rel, x, y):
            continue
        sampled += 1
        report.cases += 1
        if related_by_search(ctx, rel, x, y, search):
            report.fail(
                (rel, _r(x), _r(y)),
                "no multipliers within length {}".format(params.negative_search_L),
                "multipliers found",
                query_replay(ctx, "green", rel, _r(x), _r(y)),
            )
    report.verdict = "positive pairs {}; negative samples {} for {} (D and J are decided in S, not sampled)".format(
        ", ".join("{}:{}".format(rel, positives[rel]) for rel in GREEN_RELATIONS), sampled, ", ".join(negative_rels)
    )


def check_zero_simple(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    nonzero = fragments(params.pair_L).nonzero
    for a in nonzero:
        for b in nonzero:
            x, y = zero_simple_witness(ctx, a, b)
            result = mul_all(ctx, x, b, y)
            report.cases += 1
            if result != a:
                report.fail((_r(a), _r(b)), _r(a), _r(result), eval_replay(ctx, x, b, y))
    report.verdict = "0-simple"


def check_quotient(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    frag = fragments(params.pair_L)
    for x in frag:
        for y in frag:
            expected = p_mul(quotient_to_P(ctx, x), quotient_to_P(ctx, y))
            actual = quotient_to_P(ctx, mul(ctx, x, y))
            report.cases += 1
            if expected != actual:
                report.fail(
                    (_r(x), _r(y)), render_pelem(expected), render_pelem(actual), eval_replay(ctx, x, y)
                )
    image = Counter(quotient_to_P(ctx, x) for x in frag)
    targets = set(p_fragment(ctx.k, params.pair_L)) | {P_ZERO}
    if set(image) != targets:
        report.fail(("image",), "{} P-elements".format(len(targets)), "{} P-elements".format(len(image)))
    for p, size in image.items():
        expected_size = 1 if p == P_ZERO else ctx.monoid.size
        if size != expected_size:
            report.fail((render_pelem(p),), "class of size {}".format(expected_size), "size {}".format(size))
    report.verdict = "homomorphism onto the polycyclic fragment"


def check_e_unitary(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    frag = fragments(params.triple_L)
    if not is_inverse_monoid(ctx.monoid):
        # not inverse: some element lacks a unique inverse, or two idempotents do not commute
        report.cases = 1
        pair = noncommuting_idempotents_by_search(ctx, frag)
        if pair is not None:
            report.verdict = "not an inverse semigroup: {} * {} != {} * {}".format(
                _r(pair[0]), _r(pair[1]), _r(pair[1]), _r(pair[0])
            )
            return
        for x in frag.nonzero:
            report.cases += 1
            found = inverses_by_search(ctx, x, frag)
            if len(found) != 1:
                report.verdict = "not an inverse semigroup: {} has {} inverses".format(_r(x), len(found))
                return
        report.fail(("fragment",), "an element without a unique inverse or noncommuting idempotents", "none found")
        report.verdict = "not an inverse semigroup"
        return
    decision = is_0_E_unitary(ctx)
    violation = e_unitary_violation_by_search(ctx, frag)
    report.cases = len(frag) ** 2
    if decision:
        if violation is not None:
            e, s = violation
            report.fail((_r(e), _r(s)), "no violation", "es idempotent, s not", eval_replay(ctx, e, s))
        report.verdict = "0-E-unitary"
        return
    if violation is None:
        report.fail(("fragment",), "a violating pair", "none found")
        report.verdict = "not 0-E-unitary"
        return
    e, s = violation
    report.verdict = "not 0-E-unitary: {} * {} = {}".format(_r(e), _r(s), _r(mul(ctx, e, s)))


def check_center_units(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    frag = fragments(params.pair_L)
    inverses = fragments(0)
    units = central = 0
    for x in frag:
        report.cases += 2
        expected = unit_by_search(ctx, x, inverses)
        actual = is_unit(ctx, x)
        units += actual
        if expected != actual:
            report.fail((_r(x),), "unit {}".format(expected), "unit {}".format(actual), query_replay(ctx, "unit", _r(x)))
        expected = central_by_search(ctx, x, frag)
        actual = is_in_center(ctx, x)
        central += actual
        if expected != actual:
            report.fail(
                (_r(x),), "central {}".format(expected), "central {}".format(actual), query_replay(ctx, "center", _r(x))
            )
    report.verdict = "{} units, {} central elements".format(units, central)


def _check_division(
    ctx: BrxContext,
    report: SuiteReport,
    nonzero: Sequence[BrxElem],
    search: Fragment,
    side: str,
):
    solver = solve_right if side == "right" else solve_left
    for a in nonzero:
        by_result = solutions_by_search(ctx, a, search, side)
        bound = len(a.v) + 1 if side == "right" else len(a.u) + 1
        for b in nonzero:
            expected = by_result.get(b, set())
            actual = solver(ctx, a, b)
            report.cases += 1
            replay = query_replay(ctx, "solve", side, _r(a), _r(b))
            if actual != expected:
                report.fail(
                    (side, _r(a), _r(b)),
                    ", ".join(_r(x) for x in sorted(expected, key=sort_key)),
                    ", ".join(_r(x) for x in sorted(actual, key=sort_key)),
                    replay,
                )
            slices = {x.p for x in actual}
            if len(slices) > bound:
                report.fail((side, _r(a), _r(b)), "at most {} slices".format(bound), "{} slices".format(len(slices)), replay)


def check_solver(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    nonzero = fragments(params.solver_L).nonzero
    search = fragments(params.solver_search_L)
    _check_division(ctx, report, nonzero, search, "right")
    _check_division(ctx, report, nonzero, search, "left")
    report.verdict = "solution sets match search over length {}".format(params.solver_search_L)


def check_metric(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    if params.metric not in BASE_METRICS:
        raise ValueError("Invalid setting for 'metric': {}".format(params.metric))
    base = BASE_METRICS[params.metric](ctx.monoid)
    frag = fragments(params.pair_L)
    elements = frag.elements
    d = distance_matrix(ctx, base, elements)
    report.cases = len(elements) ** 3
    violation = metric_violation(d)
    if violation is not None:
        axiom, idx = violation
        report.fail(tuple(_r(elements[i]) for i in idx), axiom, "violated")
    for x in frag.nonzero:
        outside = [y for y in open_ball(ctx, base, elements, x, 1.0) if y == BRX_ZERO or y.p != x.p]
        if outside:
            report.fail((_r(x),), "ball inside the slice", _r(outside[0]))
    if not np.all(d[0, 1:] == 1.0):
        report.fail(("0",), "distance 1 from every other element", "closer element")
    report.verdict = "metric ({} base metric), slices clopen".format(base.name)


def check_embeddings(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    m = ctx.monoid
    for w in enumerate_words(ctx.k, 1):
        for s in range(m.size):
            for t in range(m.size):
                report.cases += 1
                expected = embed_S(ctx, w, m.mul(s, t))
                actual = mul(ctx, embed_S(ctx, w, s), embed_S(ctx, w, t))
                if expected != actual:
                    report.fail((str(w), str(s), str(t)), _r(expected), _r(actual))
        if len({embed_S(ctx, w, s) for s in range(m.size)}) != m.size:
            report.fail((str(w),), "injective", "collision")
    ps = p_fragment(ctx.k, 1) + [P_ZERO]
    for e in sorted(m.idempotents):
        for p in ps:
            for q in ps:
                report.cases += 1
                expected = embed_P(ctx, e, p_mul(p, q))
                actual = mul(ctx, embed_P(ctx, e, p), embed_P(ctx, e, q))
                if expected != actual:
                    report.fail((str(e), render_pelem(p), render_pelem(q)), _r(expected), _r(actual))
    for s in range(m.size):
        if s in m.idempotents:
            continue
        report.cases += 1
        x = BrxElem(s, p_identity(ctx.k))
        if mul(ctx, x, x) == x:
            report.fail((_r(x),), "xx != x", "xx = x", eval_replay(ctx, x, x))
        try:
            embed_P(ctx, s, p_identity(ctx.k))
            report.fail((_r(x),), "rejected", "accepted")
        except PreconditionError:
            pass
    report.verdict = "S embeds on every slice w^-1 w; P embeds at {} idempotents".format(len(m.idempotents))


def translation_pairs(k: int) -> List[Tuple[Word, Word]]:
    """ (u, v) pairs for the conjugate copies: (e, e), (a, b), (ab, a); over one letter (e, e), (a, a), (aa, a). """
    b = 1 if k >= 2 else 0
    return [
        (Word((), k), Word((), k)),
        (Word((0,), k), Word((b,), k)),
        (Word((0, b), k), Word((0,), k)),
    ]


def check_translations(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    frag = fragments(params.pair_L)
    for u, v in translation_pairs(ctx.k):
        for x in frag:
            report.cases += 1
            fx = conjugate_embed(ctx, u, v, x)
            if not in_conjugate_copy(ctx, u, v, fx):
                report.fail((str(u), str(v), _r(x)), "image in the copy", _r(fx))
            back = conjugate_restore(ctx, u, v, fx)
            if back != x:
                report.fail((str(u), str(v), _r(x)), _r(x), _r(back))
            if in_conjugate_copy(ctx, u, v, x):
                report.cases += 1
                again = conjugate_embed(ctx, u, v, conjugate_restore(ctx, u, v, x))
                if again != x:
                    report.fail((str(u), str(v), _r(x)), _r(x), _r(again))
    slices = p_fragment(ctx.k, 1)
    for source in slices:
        for target in slices:
            for s in range(ctx.monoid.size):
                report.cases += 1
                x = BrxElem(s, source)
                y = slice_transport(ctx, source, target, x)
                if y == BRX_ZERO or y.p != target or slice_transport(ctx, target, source, y) != x:
                    report.fail((render_pelem(source), render_pelem(target), _r(x)), "bijection", _r(y))
            if source.u == source.v and target.u == target.v:
                for s in range(ctx.monoid.size):
                    for t in range(ctx.monoid.size):
                        report.cases += 1
                        x, y = BrxElem(s, source), BrxElem(t, source)
                        lhs = slice_transport(ctx, source, target, mul(ctx, x, y))
                        rhs = mul(
                            ctx,
                            slice_transport(ctx, source, target, x),
                            slice_transport(ctx, source, target, y),
                        )
                        if lhs != rhs:
                            report.fail((_r(x), _r(y), render_pelem(target)), _r(lhs), _r(rhs))
    report.verdict = "conjugate copies restored; slices isomorphic"


def check_bicyclic(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    e = ctx.monoid.identity

    def power(n: int) -> Word:
        return Word((0,) * n, 1)

    top = params.bicyclic_max + 1
    for k in range(top):
        for l in range(top):
            for m in range(top):
                for n in range(top):
                    report.cases += 1
                    x = BrxElem(e, PElem(power(k), power(l)))
                    y = BrxElem(e, PElem(power(m), power(n)))
                    first, second = bicyclic_product(k, l, m, n)
                    expected = BrxElem(e, PElem(power(first), power(second)))
                    actual = mul(ctx, x, y)
                    if actual != expected or p_mul(x.p, y.p) != expected.p:
                        report.fail((_r(x), _r(y)), _r(expected), _r(actual), eval_replay(ctx, x, y))
    report.verdict = "closed form holds for exponents <= {}".format(params.bicyclic_max)


def random_element(ctx: BrxContext, rng: np.random.RandomState, maxlen: int = 3) -> Element:
    if rng.randint(20) == 0:
        return BRX_ZERO

    def word() -> Word:
        return Word(tuple(int(i) for i in rng.randint(ctx.k, size=rng.randint(maxlen + 1))), ctx.k)

    return BrxElem(int(rng.randint(ctx.monoid.size)), PElem(word(), word()))


def check_grammar(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    parser = ElementParser(ctx)
    rng = np.random.RandomState(params.seed)
    for _ in range(params.grammar_samples):
        x = random_element(ctx, rng)
        text = _r(x)
        report.cases += 1
        parsed = parser.parse_elem(text)
        if parsed != x or _r(parsed) != text:
            report.fail((text,), text, _r(parsed))
    report.verdict = "{} literals round-trip".format(params.grammar_samples)


def check_suffix_growth(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    nonzero = fragments(params.pair_L).nonzero
    products = 0
    for x in nonzero:
        for y in nonzero:
            c = mul(ctx, x, y)
            report.cases += 1
            if c == BRX_ZERO:
                continue
            products += 1
            if not (is_suffix(x.u, c.u) and is_suffix(y.v, c.v)):
                report.fail(
                    (_r(x), _r(y)),
                    "{} ends the u-word and {} the v-word".format(x.u, y.v),
                    _r(c),
                    eval_replay(ctx, x, y),
                )
    report.verdict = "{} nonzero products extend their outer words".format(products)


def _combinatorial_by_search(ctx: BrxContext, frag: Fragment) -> bool:
    # H-related elements have H-related images in the polycyclic monoid, which is combinatorial
    by_slice: Dict[PElem, List[BrxElem]] = {}
    for x in frag.nonzero:
        by_slice.setdefault(x.p, []).append(x)
    for members in by_slice.values():
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                if related_by_search(ctx, "H", x, y, frag):
                    return False
    return True


def _bisimple_by_search(ctx: BrxContext, frag: Fragment, middles: Fragment) -> bool:
    """ The identity is D-related to every (s, 1): 1 L z R (s, 1) for some z in middles. """
    e = one(ctx)
    for x in middles.nonzero:
        if not any(
            related_by_search(ctx, "L", e, z, frag) and related_by_search(ctx, "R", z, x, frag)
            for z in middles.nonzero
        ):
            return False
    return True


def _congruence_free_by_search(ctx: BrxContext, frag: Fragment, slice_one: Fragment) -> bool:
    """
    False when two distinct elements of the slice of 1 generate a proper
    congruence on the fragment: their products with every fragment element
    stay in common slices, and neither is the zero.
    """
    for i, x in enumerate(slice_one.nonzero):
        for y in slice_one.nonzero[i + 1:]:
            if all(
                quotient_to_P(ctx, mul(ctx, x, z)) == quotient_to_P(ctx, mul(ctx, y, z))
                and quotient_to_P(ctx, mul(ctx, z, x)) == quotient_to_P(ctx, mul(ctx, z, y))
                for z in frag
            ):
                return False
    return True


def check_structure(ctx: BrxContext, params: SuiteParams, fragments: FragmentCache, report: SuiteReport):
    frag = fragments(params.triple_L)
    inverse_counts = [len(inverses_by_search(ctx, x, frag)) for x in frag.nonzero]
    observed = {
        "regular": all(n >= 1 for n in inverse_counts),
        "inverse": all(n == 1 for n in inverse_counts),
        "idempotents_commute": noncommuting_idempotents_by_search(ctx, frag) is None,
        "combinatorial": _combinatorial_by_search(ctx, frag),
        "zero_bisimple": _bisimple_by_search(ctx, frag, fragments(0)),
        "congruence_free": _congruence_free_by_search(ctx, frag, fragments(0)),
    }
    decided = structure_report(ctx)
    for key, value in observed.items():
        report.cases += 1
        if decided[key] != value:
            report.fail((key,), "{} {}".format(key, value), "{} {}".format(key, decided[key]), query_replay(ctx, "structure"))
    report.verdict = ", ".join("{}={}".format(key, str(value).lower()) for key, value in observed.items())


@dataclass(frozen=True)
class SuiteSpec:
    run: Callable[[BrxContext, SuiteParams, FragmentCache, SuiteReport], None]
    applies: Callable[[BrxContext], bool] = lambda ctx: True


SUITES: Dict[str, SuiteSpec] = {
    "associativity": SuiteSpec(check_associativity),
    "idempotents": SuiteSpec(check_idempotents),
    "commuting_idempotents": SuiteSpec(check_commuting_idempotents),
    "inverses": SuiteSpec(check_inverses),
    "suffix_growth": SuiteSpec(check_suffix_growth),
    "green": SuiteSpec(check_green),
    "structure": SuiteSpec(check_structure),
    "zero_simple": SuiteSpec(check_zero_simple),
    "quotient": SuiteSpec(check_quotient),
    "e_unitary": SuiteSpec(check_e_unitary),
    "center_units": SuiteSpec(check_center_units),
    "solver": SuiteSpec(check_solver),
    "metric": SuiteSpec(check_metric),
    "embeddings": SuiteSpec(check_embeddings),
    "translations": SuiteSpec(check_translations),
    "bicyclic": SuiteSpec(check_bicyclic, applies=lambda ctx: ctx.k == 1),
    "grammar": SuiteSpec(check_grammar),
}

# result -> the one suite that checks it
RESULTS: Dict[str, str] = {
    "the twisted product on S x P plus zero is associative": "associativity",
    "(s, u^-1 v) is idempotent iff s is idempotent and u = v": "idempotents",
    "idempotents commute iff the idempotents of S commute": "commuting_idempotents",
    "(s', v^-1 u) is an inverse of (s, u^-1 v) for every inverse s' of s": "inverses",
    "regular iff S is regular": "structure",
    "inverse iff S is inverse": "structure",
    "a nonzero product keeps the u-word of its left factor and the v-word of its right factor as suffixes": "suffix_growth",
    "L, R, H, D are decided in S together with equal v-, u- or both words": "green",
    "combinatorial iff S is combinatorial": "structure",
    "0-bisimple iff S is bisimple": "structure",
    "every nonzero element is x * b * y for any nonzero b": "zero_simple",
    "projection onto the P-part is a homomorphism whose classes are slices": "quotient",
    "congruence-free iff S is trivial": "structure",
    "0-E-unitary iff S is inverse, E-unitary and theta^-1(1) = E(S)": "e_unitary",
    "centre: s central, theta(s) = s, P-part 1": "center_units",
    "units: s a unit, P-part 1": "center_units",
    "a * x = b and x * a = b have finitely many solutions, in few slices": "solver",
    "d_S within a slice and 1 across slices is a metric with clopen slices": "metric",
    "S embeds on each slice w^-1 w and P embeds at each idempotent of S": "embeddings",
    "x -> (1, u^-1) x (1, v) is a bijection onto its copy; slices correspond": "translations",
    "one-letter products follow q^k p^l q^m p^n = q^(k+m-c) p^(l+n-c)": "bicyclic",
}

# suites that check the tooling rather than a property of the extension
TOOLING: Dict[str, str] = {
    "grammar": "rendered element literals parse back to the same element",
}


def _anchors() -> Dict[str, str]:
    anchors: Dict[str, List[str]] = {}
    for result, suite in RESULTS.items():
        anchors.setdefault(suite, []).append(result)
    table = {suite: "; ".join(results) for suite, results in anchors.items()}
    table.update(TOOLING)
    return table


ANCHORS: Dict[str, str] = _anchors()


def check_anchor_table(suites: Dict[str, SuiteSpec] = SUITES):
    """
    Every result is checked by a registered suite, and every suite checks a
    result or the tooling.
    """
    unchecked = sorted(result for result, suite in RESULTS.items() if suite not in suites)
    idle = sorted(name for name in suites if name not in ANCHORS)
    both = sorted(set(TOOLING) & set(RESULTS.values()))
    if unchecked or idle or both:
        raise ValueError(
            "Suite/result table mismatch: unchecked results {}, suites without a result {}, "
            "tooling suites with results {}".format(unchecked, idle, both)
        )
