# coding: utf-8
"""
Text grammar of words, polycyclic elements and extension elements:

    word    := "[" letters "]"          letters 'a'..'z', '.'-separated decimals
    pelem   := "0" | "1" | word "^-1" word
    elem    := "0" | "(" sref "," pelem ")"
    sref    := "s" decimal | element name
    product := elem ("*" elem)*
"""
from typing import List

import pyparsing as pp

from polybrx.extension import BRX_ZERO, BrxContext, Element, elem
from polybrx.polycyclic import P_ZERO, PElem, PElement, p_identity
from polybrx.words import Word

SREF_PATTERN = r"s\d+(?![A-Za-z0-9_'])"


class ParseError(ValueError):
    """ Malformed input; `position` is the 0-based column of the failure. """

    def __init__(self, message: str, position: int):
        super().__init__("{} (at position {})".format(message, position))
        self.position = position


class ElementParser:
    """ Parser for the element grammar of one extension context. """

    def __init__(self, ctx: BrxContext):
        self.ctx = ctx

        letter = pp.Regex(r"[a-z]")
        number = pp.Word(pp.nums)
        token = letter | number
        letters = pp.Optional(token + pp.ZeroOrMore(pp.Optional(pp.Suppress(".")) + token))
        self.word = pp.Suppress("[") + pp.Group(letters) + pp.Suppress("]")
        self.word.setParseAction(self._make_word)

        p_zero = pp.Literal("0").setParseAction(lambda: [P_ZERO])
        p_one = pp.Literal("1").setParseAction(lambda: [p_identity(ctx.k)])
        normal_form = self.word + pp.Suppress("^-1") + self.word
        normal_form.setParseAction(lambda toks: [PElem(toks[0], toks[1])])
        self.pelem = normal_form | p_one | p_zero

        sref_index = pp.Regex(SREF_PATTERN).setParseAction(self._make_sref_index)
        sref_name = pp.Word(pp.alphanums + "_'").setParseAction(self._make_sref_name)
        sref = sref_index | sref_name

        zero = pp.Literal("0").setParseAction(lambda: [BRX_ZERO])
        pair = pp.Suppress("(") + sref + pp.Suppress(",") + self.pelem + pp.Suppress(")")
        pair.setParseAction(lambda toks: [elem(ctx, toks[0], toks[1])])
        self.elem = pair | zero
        self.product = self.elem + pp.ZeroOrMore(pp.Suppress("*") + self.elem)

    def _make_word(self, text, loc, toks):
        tokens = [str(int(t)) if t.isdigit() else t for t in toks[0]]
        try:
            return [self.ctx.alphabet.tokens_to_word(tokens)]
        except ValueError as err:
            raise pp.ParseFatalException(text, loc, str(err))

    def _make_sref_index(self, text, loc, toks):
        index = int(toks[0][1:])
        if index >= self.ctx.monoid.size:
            raise pp.ParseFatalException(
                text, loc, "element s{} outside {}".format(index, self.ctx.monoid.name)
            )
        return [index]

    def _make_sref_name(self, text, loc, toks):
        try:
            return [self.ctx.monoid.index_of(toks[0])]
        except ValueError as err:
            raise pp.ParseFatalException(text, loc, str(err))

    def _run(self, expr: pp.ParserElement, text: str) -> list:
        try:
            return list(expr.parseString(text, parseAll=True))
        except pp.ParseBaseException as err:
            raise ParseError(err.msg, err.loc) from err

    def parse_word(self, text: str) -> Word:
        return self._run(self.word, text)[0]

    def parse_pelem(self, text: str) -> PElement:
        return self._run(self.pelem, text)[0]

    def parse_elem(self, text: str) -> Element:
        return self._run(self.elem, text)[0]

    def parse_product(self, text: str) -> List[Element]:
        """
        Parse a '*'-separated product of element literals.

        :param text: expression such as "(s1,[]^-1[]) * (s1,[a]^-1[])"
        :return: factors in order
        """
        return self._run(self.product, text)
