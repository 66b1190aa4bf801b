# coding: utf-8
"""
Bounded fragments of the extension: the finite universes the checks run on.
"""
from typing import Dict, Iterator, List, Sequence, Tuple

from polybrx.extension import BRX_ZERO, BrxContext, BrxElem, Element
from polybrx.polycyclic import PElem
from polybrx.words import count_words, enumerate_words


class Fragment:
    """
    Zero together with every (s, u^-1 v) with |u|, |v| <= maxlen.
    Order: zero first, then by u, then v, then s.
    """

    def __init__(self, ctx: BrxContext, maxlen: int, elements: Sequence[Element]):
        self.ctx = ctx
        self.maxlen = maxlen
        self.elements = tuple(elements)
        self.index: Dict[Element, int] = {x: i for i, x in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __getitem__(self, i: int) -> Element:
        return self.elements[i]

    def __contains__(self, x: Element) -> bool:
        return x in self.index

    def __repr__(self) -> str:
        return "Fragment({}, L={}, size={})".format(self.ctx.name, self.maxlen, len(self))

    @property
    def nonzero(self) -> Tuple[BrxElem, ...]:
        return self.elements[1:]


def fragment_size(n: int, k: int, maxlen: int) -> int:
    """ n * W(L)^2 + 1 with W(L) the number of words of length <= L. """
    return n * count_words(k, maxlen) ** 2 + 1


def p_fragment(k: int, maxlen: int) -> List[PElem]:
    """ Nonzero polycyclic elements u^-1 v with |u|, |v| <= maxlen. """
    words = enumerate_words(k, maxlen)
    return [PElem(u, v) for u in words for v in words]


def enum_fragment(ctx: BrxContext, maxlen: int) -> Fragment:
    """
    Enumerate Fragment(maxlen) of the extension.

    :param ctx: extension context
    :param maxlen: bound L >= 0 on both words
    :return: fragment in deterministic order
    """
    if maxlen < 0:
        raise ValueError("Fragment bound must be non-negative, got {}".format(maxlen))
    elements: List[Element] = [BRX_ZERO]
    for p in p_fragment(ctx.k, maxlen):
        elements.extend(BrxElem(s, p) for s in range(ctx.monoid.size))
    return Fragment(ctx, maxlen, elements)


class FragmentCache:
    """ Fragments of one context, enumerated once per bound. """

    def __init__(self, ctx: BrxContext):
        self.ctx = ctx
        self._fragments: Dict[int, Fragment] = {}

    def __call__(self, maxlen: int) -> Fragment:
        if maxlen not in self._fragments:
            self._fragments[maxlen] = enum_fragment(self.ctx, maxlen)
        return self._fragments[maxlen]
