# coding: utf-8
"""
The polycyclic monoid P_k in normal form u^-1 v, with zero.
"""
import re
from dataclasses import dataclass
from typing import List, Set, Union

from polybrx.words import (
    AlphabetMismatch,
    Word,
    concat,
    empty_word,
    render_word,
    strip_prefix,
    strip_suffix,
    suffixes,
)

GENERATOR_PATTERN = re.compile(r"^([pq])(\d+)$")


@dataclass(frozen=True)
class PZero:
    """ The zero of the polycyclic monoid. """

    def __str__(self) -> str:
        return "0"


P_ZERO = PZero()


@dataclass(frozen=True)
class PElem:
    """ Nonzero element u^-1 v of the polycyclic monoid. """

    u: Word
    v: Word

    def __post_init__(self):
        if self.u.k != self.v.k:
            raise AlphabetMismatch(
                "Normal form over alphabets of size {} and {}".format(
                    self.u.k, self.v.k
                )
            )

    @property
    def k(self) -> int:
        return self.u.k

    def is_identity(self) -> bool:
        return not self.u.letters and not self.v.letters

    def __str__(self) -> str:
        return render_pelem(self)


PElement = Union[PZero, PElem]


def render_pelem(x: PElement) -> str:
    """
    Text form: "0", "1" for the identity, "[u]^-1[v]" otherwise.
    """
    if isinstance(x, PZero):
        return "0"
    if x.is_identity():
        return "1"
    return "{}^-1{}".format(render_word(x.u), render_word(x.v))


def p_identity(k: int) -> PElem:
    e = empty_word(k)
    return PElem(e, e)


def p_generator(k: int, i: int) -> PElem:
    """ p_i = []^-1[i] """
    return PElem(empty_word(k), Word((i,), k))


def p_inverse_generator(k: int, i: int) -> PElem:
    """ q_i = p_i^-1 = [i]^-1[] """
    return PElem(Word((i,), k), empty_word(k))


def p_mul(x: PElement, y: PElement) -> PElement:
    """
    Product of two polycyclic elements in normal form.

    :param x: left factor a1^-1 a2
    :param y: right factor b1^-1 b2
    :return: normal form of the product, or zero
    """
    if isinstance(x, PZero) or isinstance(y, PZero):
        return P_ZERO
    if x.k != y.k:
        raise AlphabetMismatch(
            "Product over alphabets of size {} and {}".format(x.k, y.k)
        )
    u = strip_suffix(y.u, x.v)
    if u is not None:
        return PElem(concat(u, x.u), y.v)
    v = strip_suffix(x.v, y.u)
    if v is not None:
        return PElem(x.u, concat(v, y.v))
    return P_ZERO


def p_inverse(x: PElement) -> PElement:
    if isinstance(x, PZero):
        return P_ZERO
    return PElem(x.v, x.u)


def p_is_idempotent(x: PElement) -> bool:
    return isinstance(x, PZero) or x.u == x.v


def p_solve_right(alpha: PElem, beta: PElem) -> Set[PElem]:
    """
    All xi with alpha * xi = beta.

    First branch (xi.u = w alpha.v): forced by beta.u = w alpha.u and xi.v = beta.v.
    Second branch (alpha.v = w xi.u): one candidate per suffix xi.u of alpha.v,
    kept when w is a prefix of beta.v.

    :param alpha: nonzero left factor
    :param beta: nonzero target
    :return: finite solution set
    """
    if isinstance(alpha, PZero) or isinstance(beta, PZero):
        raise ValueError("Right division is defined for nonzero arguments only")
    if alpha.k != beta.k:
        raise AlphabetMismatch(
            "Division over alphabets of size {} and {}".format(alpha.k, beta.k)
        )
    solutions = set()
    w = strip_suffix(beta.u, alpha.u)
    if w is not None:
        solutions.add(PElem(concat(w, alpha.v), beta.v))
    if alpha.u == beta.u:
        for x1 in suffixes(alpha.v):
            w = strip_suffix(alpha.v, x1)
            x2 = strip_prefix(beta.v, w)
            if x2 is not None:
                solutions.add(PElem(x1, x2))
    return solutions


def p_solve_left(alpha: PElem, beta: PElem) -> Set[PElem]:
    """
    All xi with xi * alpha = beta, through the anti-isomorphism x -> x^-1.
    """
    return {p_inverse(eta) for eta in p_solve_right(p_inverse(alpha), p_inverse(beta))}


def bicyclic_product(k: int, l: int, m: int, n: int):
    """
    Closed form of q^k p^l * q^m p^n in the bicyclic monoid.

    :return: exponent pair of the product
    """
    c = min(l, m)
    return k + m - c, l + n - c


def eval_generators(tokens: Union[str, List[str]], k: int) -> PElement:
    """
    Evaluate a generator word such as "q0 p1" (q_i stands for p_i^-1).

    :param tokens: whitespace separated string or list of tokens
    :param k: alphabet size
    :return: normal form of the product
    """
    if isinstance(tokens, str):
        tokens = tokens.split()
    result = p_identity(k)
    for token in tokens:
        match = GENERATOR_PATTERN.match(token)
        if match is None:
            raise ValueError("Unknown generator token '{}'".format(token))
        index = int(match.group(2))
        if index >= k:
            raise ValueError(
                "Generator index {} outside alphabet of size {}".format(index, k)
            )
        if match.group(1) == "p":
            generator = p_generator(k, index)
        else:
            generator = p_inverse_generator(k, index)
        result = p_mul(result, generator)
    return result
