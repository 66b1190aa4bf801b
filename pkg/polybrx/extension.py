# coding: utf-8
"""
The lambda-polycyclic Bruck-Reilly extension of a finite monoid S:
elements are the zero or pairs (s, u^-1 v) with the twisted product.
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Set, Tuple, Union

from polybrx.monoid import (
    FiniteMonoid,
    PreconditionError,
    Theta,
    check_theta,
    green_S,
    inverses_of,
    is_bisimple,
    is_combinatorial,
    is_E_unitary,
    is_inverse_monoid,
    is_regular,
    idempotents_commute,
    left_solutions,
    right_solutions,
    theta_fiber,
    theta_pow,
    theta_pow_fiber,
)
from polybrx.polycyclic import (
    PElem,
    PElement,
    PZero,
    P_ZERO,
    p_identity,
    p_solve_left,
    p_solve_right,
    render_pelem,
)
from polybrx.words import Alphabet, Word, concat, empty_word, strip_suffix

GREEN_RELATIONS = ("L", "R", "H", "D", "J")


class ContextMismatch(ValueError):
    """ An element does not belong to the extension it is used with. """


@dataclass(frozen=True, eq=False)
class BrxContext:
    """ The data (S, theta, alphabet) defining one extension. """

    monoid: FiniteMonoid
    theta: Theta
    alphabet: Alphabet
    theta_name: str = "inline"
    monoid_ref: Optional[str] = None

    def __post_init__(self):
        check_theta(self.monoid, self.theta)

    @property
    def k(self) -> int:
        return self.alphabet.size

    @property
    def name(self) -> str:
        return "{}/{}/k={}".format(self.monoid.name, self.theta_name, self.k)

    @property
    def cli_args(self) -> str:
        """ Command-line flags selecting this context, used in replay strings. """
        args = ["--monoid", self.monoid_ref or self.monoid.name]
        if self.theta_name != "inline":
            args += ["--theta", self.theta_name]
        args += ["-k", str(self.k)]
        return " ".join(args)

    def __repr__(self) -> str:
        return "BrxContext({})".format(self.name)


@dataclass(frozen=True)
class BrxZero:
    def __str__(self) -> str:
        return "0"


BRX_ZERO = BrxZero()


@dataclass(frozen=True)
class BrxElem:
    """ Nonzero element (s, u^-1 v); the P-part is never the polycyclic zero. """

    s: int
    p: PElem

    def __post_init__(self):
        if isinstance(self.p, PZero):
            raise ValueError("Nonzero extension element with zero P-part")

    @property
    def u(self) -> Word:
        return self.p.u

    @property
    def v(self) -> Word:
        return self.p.v

    def __str__(self) -> str:
        return render_elem(self)


Element = Union[BrxZero, BrxElem]


def render_elem(x: Element) -> str:
    """
    Element grammar: "0" or "(s<i>,<pelem>)".
    """
    if isinstance(x, BrxZero):
        return "0"
    return "(s{},{})".format(x.s, render_pelem(x.p))


def sort_key(x: Element) -> tuple:
    """ Zero first, then by u, v (shortest first, lexicographic) and s. """
    if isinstance(x, BrxZero):
        return (0,)
    return (1, len(x.u), x.u.letters, len(x.v), x.v.letters, x.s)


def check_elem(ctx: BrxContext, x: Element) -> Element:
    if isinstance(x, BrxZero):
        return x
    if not 0 <= x.s < ctx.monoid.size:
        raise ContextMismatch(
            "Element {} has S-part outside {}".format(render_elem(x), ctx.monoid.name)
        )
    if x.p.k != ctx.k:
        raise ContextMismatch(
            "Element {} is over {} letters, context {} has {}".format(
                render_elem(x), x.p.k, ctx.name, ctx.k
            )
        )
    return x


def one(ctx: BrxContext) -> BrxElem:
    """ The identity (1_S, 1). """
    return BrxElem(ctx.monoid.identity, p_identity(ctx.k))


def elem(ctx: BrxContext, s: int, p: PElement) -> Element:
    """ Build (s, p), identifying (s, 0) with the zero. """
    if isinstance(p, PZero):
        return BRX_ZERO
    return check_elem(ctx, BrxElem(s, p))


def mul(ctx: BrxContext, x: Element, y: Element) -> Element:
    """
    Product of two extension elements.

    For x = (s, a1^-1 a2), y = (t, b1^-1 b2):
    b1 = u a2  gives (theta^|u|(s) t, (u a1)^-1 b2),
    a2 = v b1  gives (s theta^|v|(t), a1^-1 (v b2)),
    otherwise the zero.

    :param ctx: extension context
    :param x: left factor
    :param y: right factor
    :return: product
    """
    if isinstance(x, BrxZero) or isinstance(y, BrxZero):
        return BRX_ZERO
    check_elem(ctx, x)
    check_elem(ctx, y)
    table = ctx.monoid.table
    u = strip_suffix(y.u, x.v)
    if u is not None:
        s = int(table[theta_pow(ctx.theta, len(u), x.s), y.s])
        return BrxElem(s, PElem(concat(u, x.u), y.v))
    v = strip_suffix(x.v, y.u)
    if v is not None:
        s = int(table[x.s, theta_pow(ctx.theta, len(v), y.s)])
        return BrxElem(s, PElem(x.u, concat(v, y.v)))
    return BRX_ZERO


def mul_all(ctx: BrxContext, *factors: Element) -> Element:
    result = one(ctx)
    for factor in factors:
        result = mul(ctx, result, factor)
    return result


def is_idempotent(ctx: BrxContext, x: Element) -> bool:
    if isinstance(x, BrxZero):
        return True
    return x.s in ctx.monoid.idempotents and x.u == x.v


def inverse_of(ctx: BrxContext, x: Element) -> Optional[Element]:
    """
    An inverse of x: (s', v^-1 u) with s' the least-index inverse of s in S.

    :return: inverse element, or None when s has no inverse in S
    """
    if isinstance(x, BrxZero):
        return BRX_ZERO
    check_elem(ctx, x)
    candidates = inverses_of(ctx.monoid, x.s)
    if not candidates:
        return None
    return BrxElem(min(candidates), PElem(x.v, x.u))


def green(ctx: BrxContext, rel: str, x: Element, y: Element) -> bool:
    """
    Green's relations of the extension. The zero is related only to itself;
    nonzero elements are J-related to each other.
    """
    if rel not in GREEN_RELATIONS:
        raise ValueError("Unknown Green's relation '{}'".format(rel))
    if isinstance(x, BrxZero) or isinstance(y, BrxZero):
        return isinstance(x, BrxZero) and isinstance(y, BrxZero)
    m = ctx.monoid
    if rel == "L":
        return green_S(m, "L", x.s, y.s) and x.v == y.v
    if rel == "R":
        return green_S(m, "R", x.s, y.s) and x.u == y.u
    if rel == "H":
        return green(ctx, "L", x, y) and green(ctx, "R", x, y)
    if rel == "D":
        return green_S(m, "D", x.s, y.s)
    return True


@dataclass(frozen=True)
class GreenWitness:
    """
    Multipliers with x = x_left * y * x_right and y = y_left * x * y_right.
    An H witness carries its right-sided multipliers in `also`.
    """

    x_left: Element
    x_right: Element
    y_left: Element
    y_right: Element
    also: Optional["GreenWitness"] = None

    def holds(self, ctx: BrxContext, x: Element, y: Element) -> bool:
        return (
            mul_all(ctx, self.x_left, y, self.x_right) == x
            and mul_all(ctx, self.y_left, x, self.y_right) == y
            and (self.also is None or self.also.holds(ctx, x, y))
        )


def _least(candidates: FrozenSet[int]) -> Optional[int]:
    return min(candidates) if candidates else None


def _left_multipliers(ctx: BrxContext, x: BrxElem, y: BrxElem) -> Optional[Tuple[BrxElem, BrxElem]]:
    # x = l * y and y = l' * x for L-related x, y
    m = ctx.monoid
    r = _least(left_solutions(m, y.s, x.s))
    q = _least(left_solutions(m, x.s, y.s))
    if r is None or q is None:
        return None
    return BrxElem(r, PElem(x.u, y.u)), BrxElem(q, PElem(y.u, x.u))


def _right_multipliers(ctx: BrxContext, x: BrxElem, y: BrxElem) -> Optional[Tuple[BrxElem, BrxElem]]:
    # x = y * r and y = x * r' for R-related x, y
    m = ctx.monoid
    r = _least(right_solutions(m, y.s, x.s))
    q = _least(right_solutions(m, x.s, y.s))
    if r is None or q is None:
        return None
    return BrxElem(r, PElem(y.v, x.v)), BrxElem(q, PElem(x.v, y.v))


def green_witness(ctx: BrxContext, rel: str, x: Element, y: Element) -> Optional[GreenWitness]:
    """
    Explicit multipliers realising x rel y, built from the characterization.

    :param ctx: extension context
    :param rel: one of L, R, H, D, J
    :param x: first element
    :param y: second element
    :return: witness, or None when the characterization says x, y are unrelated
    """
    if not green(ctx, rel, x, y):
        return None
    e = one(ctx)
    if isinstance(x, BrxZero):
        return GreenWitness(e, e, e, e)
    if rel == "L":
        l_x, l_y = _left_multipliers(ctx, x, y)
        return GreenWitness(l_x, e, l_y, e)
    if rel == "H":
        l_x, l_y = _left_multipliers(ctx, x, y)
        r_x, r_y = _right_multipliers(ctx, x, y)
        return GreenWitness(l_x, e, l_y, e, also=GreenWitness(e, r_x, e, r_y))
    if rel == "R":
        r_x, r_y = _right_multipliers(ctx, x, y)
        return GreenWitness(e, r_x, e, r_y)
    if rel == "D":
        m = ctx.monoid
        rel_l = m.relations["L"]
        rel_r = m.relations["R"]
        z = next(z for z in range(m.size) if rel_l[x.s, z] and rel_r[z, y.s])
        middle = BrxElem(z, PElem(y.u, x.v))
        l_x, l_z = _left_multipliers(ctx, x, middle)
        r_z, r_y = _right_multipliers(ctx, middle, y)
        return GreenWitness(l_x, r_z, l_z, r_y)
    x_left, x_right = zero_simple_witness(ctx, x, y)
    y_left, y_right = zero_simple_witness(ctx, y, x)
    return GreenWitness(x_left, x_right, y_left, y_right)


def _unit_inverse(m: FiniteMonoid, g: int) -> int:
    return min(h for h in m.units if m.mul(h, g) == m.identity)


def zero_simple_witness(ctx: BrxContext, a: BrxElem, b: BrxElem) -> Tuple[BrxElem, BrxElem]:
    """
    Elements x, y with x * b * y = a for nonzero a, b.

    With a = (s, a1^-1 a2), b = (t, b1^-1 b2) and u the one-letter word of
    letter 0: x = (theta(t)^-1, a1^-1 (u b1)), y = (s, (u b2)^-1 a2).

    :param ctx: extension context
    :param a: target
    :param b: source
    :return: pair (x, y)
    """
    if isinstance(a, BrxZero) or isinstance(b, BrxZero):
        raise ValueError("Zero-simplicity witnesses exist for nonzero elements only")
    check_elem(ctx, a)
    check_elem(ctx, b)
    u = ctx.alphabet.letter(0)
    g = _unit_inverse(ctx.monoid, theta_pow(ctx.theta, len(u), b.s))
    x = BrxElem(g, PElem(a.u, concat(u, b.u)))
    y = BrxElem(a.s, PElem(concat(u, b.v), a.v))
    return x, y


def quotient_to_P(ctx: BrxContext, x: Element) -> PElement:
    """ Projection onto the polycyclic monoid; its kernel classes are the slices. """
    if isinstance(x, BrxZero):
        return P_ZERO
    return check_elem(ctx, x).p


def is_in_center(ctx: BrxContext, x: Element) -> bool:
    if isinstance(x, BrxZero):
        return True
    return x.s in ctx.monoid.center and ctx.theta(x.s) == x.s and x.p.is_identity()


def is_unit(ctx: BrxContext, x: Element) -> bool:
    if isinstance(x, BrxZero):
        return False
    return x.s in ctx.monoid.units and x.p.is_identity()


def is_0_E_unitary(ctx: BrxContext) -> bool:
    m = ctx.monoid
    return (
        is_inverse_monoid(m)
        and is_E_unitary(m)
        and theta_fiber(ctx.theta, m.identity) == m.idempotents
    )


def solve_right(ctx: BrxContext, a: BrxElem, b: BrxElem) -> Set[BrxElem]:
    """
    All x with a * x = b.

    The P-parts come from polycyclic division. For each one the branch of the
    product decides the S-equation: theta^|u|(s) x_s = t, or s theta^|v|(x_s) = t.
    """
    if isinstance(a, BrxZero) or isinstance(b, BrxZero):
        raise ValueError("Division is defined for nonzero arguments only")
    check_elem(ctx, a)
    check_elem(ctx, b)
    m, theta = ctx.monoid, ctx.theta
    solutions = set()
    for xi in p_solve_right(a.p, b.p):
        u = strip_suffix(xi.u, a.v)
        if u is not None:
            candidates = right_solutions(m, theta_pow(theta, len(u), a.s), b.s)
        else:
            v = strip_suffix(a.v, xi.u)
            candidates = frozenset().union(
                *(theta_pow_fiber(theta, len(v), y) for y in right_solutions(m, a.s, b.s))
            )
        solutions.update(BrxElem(x_s, xi) for x_s in candidates)
    return solutions


def solve_left(ctx: BrxContext, a: BrxElem, b: BrxElem) -> Set[BrxElem]:
    """
    All x with x * a = b, mirroring `solve_right`.
    """
    if isinstance(a, BrxZero) or isinstance(b, BrxZero):
        raise ValueError("Division is defined for nonzero arguments only")
    check_elem(ctx, a)
    check_elem(ctx, b)
    m, theta = ctx.monoid, ctx.theta
    solutions = set()
    for xi in p_solve_left(a.p, b.p):
        u = strip_suffix(a.u, xi.v)
        if u is not None:
            candidates = frozenset().union(
                *(theta_pow_fiber(theta, len(u), y) for y in left_solutions(m, a.s, b.s))
            )
        else:
            v = strip_suffix(xi.v, a.u)
            candidates = left_solutions(m, theta_pow(theta, len(v), a.s), b.s)
        solutions.update(BrxElem(x_s, xi) for x_s in candidates)
    return solutions


def embed_S(ctx: BrxContext, w: Word, s: int) -> BrxElem:
    """ s -> (s, w^-1 w), an embedding of S onto one slice. """
    return check_elem(ctx, BrxElem(s, PElem(w, w)))


def embed_P(ctx: BrxContext, e: int, p: PElement) -> Element:
    """ p -> (e, p) for an idempotent e, the zero going to the zero. """
    if e not in ctx.monoid.idempotents:
        raise PreconditionError(
            "{} is not idempotent in {}, (e, p) would not form a copy of the polycyclic monoid".format(
                ctx.monoid.name_of(e), ctx.monoid.name
            )
        )
    return elem(ctx, e, p)


def conjugate_embed(ctx: BrxContext, u: Word, v: Word, x: Element) -> Element:
    """
    f(x) = (1, u^-1 []) * x * (1, []^-1 v); maps (s, w1^-1 w2) to
    (s, (w1 u)^-1 (w2 v)).
    """
    identity = ctx.monoid.identity
    eps = empty_word(ctx.k)
    return mul_all(ctx, BrxElem(identity, PElem(u, eps)), x, BrxElem(identity, PElem(eps, v)))


def conjugate_restore(ctx: BrxContext, u: Word, v: Word, y: Element) -> Element:
    """ h(y) = (1, []^-1 u) * y * (1, v^-1 []), the inverse of `conjugate_embed`. """
    identity = ctx.monoid.identity
    eps = empty_word(ctx.k)
    return mul_all(ctx, BrxElem(identity, PElem(eps, u)), y, BrxElem(identity, PElem(v, eps)))


def in_conjugate_copy(ctx: BrxContext, u: Word, v: Word, y: Element) -> bool:
    """ Membership in the image of `conjugate_embed`: (s, (a u)^-1 (b v)) or zero. """
    if isinstance(y, BrxZero):
        return True
    return strip_suffix(y.u, u) is not None and strip_suffix(y.v, v) is not None


def slice_transport(ctx: BrxContext, source: PElem, target: PElem, x: BrxElem) -> BrxElem:
    """
    Bijection S_{a1^-1 a2} -> S_{b1^-1 b2},
    x -> (1, b1^-1 a1) * x * (1, a2^-1 b2).
    """
    if isinstance(x, BrxZero) or x.p != source:
        raise PreconditionError(
            "{} is not in the slice of {}".format(render_elem(x), render_pelem(source))
        )
    identity = ctx.monoid.identity
    return mul_all(
        ctx,
        BrxElem(identity, PElem(target.u, source.u)),
        x,
        BrxElem(identity, PElem(source.v, target.v)),
    )


def nat_leq(ctx: BrxContext, x: Element, y: Element) -> bool:
    """
    Natural partial order: ef = fe = e on idempotents, x = (x x^-1) y in an
    inverse extension.
    """
    if is_idempotent(ctx, x) and is_idempotent(ctx, y):
        return mul(ctx, x, y) == x and mul(ctx, y, x) == x
    if not is_inverse_monoid(ctx.monoid):
        raise PreconditionError(
            "Natural order on non-idempotents needs an inverse extension, {} is not an inverse monoid".format(
                ctx.monoid.name
            )
        )
    projection = mul(ctx, x, inverse_of(ctx, x))
    return mul(ctx, projection, y) == x


def suffix_relation(left: Word, right: Word) -> str:
    if strip_suffix(right, left) is not None:
        return "L"
    if strip_suffix(left, right) is not None:
        return "R"
    return "N"


TRIPLE_CASES = {
    ("L", "L"): 1,
    ("R", "L"): 2,
    ("L", "R"): 3,
    ("R", "R"): 4,
    ("L", "N"): 5,
    ("N", "L"): 6,
    ("R", "N"): 7,
    ("N", "R"): 8,
    ("N", "N"): 9,
}


def classify_triple(x: BrxElem, y: BrxElem, z: BrxElem) -> int:
    """
    Case number (1-9) of a nonzero triple in the associativity argument.
    Each of the two junctions x|y and y|z is classified as L (the right
    word ends with the left one), R (the left word properly ends with the
    right one) or N (incomparable).
    """
    return TRIPLE_CASES[(suffix_relation(x.v, y.u), suffix_relation(y.v, z.u))]


def structure_report(ctx: BrxContext) -> Dict[str, bool]:
    """
    Whole-extension properties decided from S and theta.

    :param ctx: extension context
    :return: property name -> decision
    """
    m = ctx.monoid
    inverse = is_inverse_monoid(m)
    return {
        "regular": is_regular(m),
        "inverse": inverse,
        "idempotents_commute": idempotents_commute(m),
        "combinatorial": is_combinatorial(m),
        "zero_simple": True,
        "zero_bisimple": is_bisimple(m),
        "congruence_free": m.size == 1,
        "zero_E_unitary": is_0_E_unitary(ctx),
        "finite_solution_sets": True,
    }
