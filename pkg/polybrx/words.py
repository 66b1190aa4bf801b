# coding: utf-8
"""
Free monoid over a finite alphabet: words, concatenation and suffixes.
"""
import itertools
import string
from dataclasses import dataclass
from typing import Iterator, List, Optional, Set, Tuple

LETTER_TOKENS = string.ascii_lowercase


class AlphabetMismatch(ValueError):
    """ Two words (or elements) over alphabets of different size were combined. """


def letter_token(index: int) -> str:
    """
    Textual token of a letter: 'a'..'z' for 0..25, the decimal index otherwise.

    :param index: letter index
    :return: token string
    """
    if index < len(LETTER_TOKENS):
        return LETTER_TOKENS[index]
    return str(index)


@dataclass(frozen=True)
class Word:
    """ An element of the free monoid: immutable sequence of letter indices. """

    letters: Tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("Alphabet size must be positive, got {}".format(self.k))
        for letter in self.letters:
            if not 0 <= letter < self.k:
                raise ValueError(
                    "Letter index {} outside alphabet of size {}".format(letter, self.k)
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return render_word(self)

    def __repr__(self) -> str:
        return "Word({})".format(render_word(self))


def render_word(word: Word) -> str:
    """
    Render a word as '[' letters ']'. Decimal tokens are separated from their
    neighbours by '.', consecutive alphabetic tokens are written together.

    :param word: word to render
    :return: text form
    """
    out = []
    previous_decimal = False
    for i, letter in enumerate(word.letters):
        token = letter_token(letter)
        decimal = token.isdigit()
        if i > 0 and (decimal or previous_decimal):
            out.append(".")
        out.append(token)
        previous_decimal = decimal
    return "[" + "".join(out) + "]"


class Alphabet:
    """ Alphabet represents the mapping between letter tokens and indices. """

    def __init__(self, size: int):
        """
        Create an alphabet of `size` letters, indexed 0..size-1. Every letter
        also answers to its decimal index.

        :param size: number of letters (k >= 1)
        """
        if size < 1:
            raise ValueError("Alphabet size must be positive, got {}".format(size))
        self.size = size
        self.itos = [letter_token(i) for i in range(size)]
        self.stoi = {str(i): i for i in range(size)}
        self.stoi.update((t, i) for i, t in enumerate(self.itos))

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and other.size == self.size

    def __hash__(self) -> int:
        return hash(("Alphabet", self.size))

    def __repr__(self) -> str:
        return "Alphabet({})".format(self.size)

    def letter(self, index: int) -> Word:
        return Word((index,), self.size)

    def tokens_to_word(self, tokens: List[str]) -> Word:
        """
        Convert a list of letter tokens to a word.

        :param tokens: tokens such as ["a", "b", "30"]
        :return: word over this alphabet
        """
        indices = []
        for t in tokens:
            if t not in self.stoi:
                raise ValueError(
                    "letter '{}' outside alphabet of size {}".format(t, self.size)
                )
            indices.append(self.stoi[t])
        return Word(tuple(indices), self.size)


def _check_same(a: Word, b: Word):
    if a.k != b.k:
        raise AlphabetMismatch(
            "Words over alphabets of size {} and {}".format(a.k, b.k)
        )


def empty_word(k: int) -> Word:
    return Word((), k)


def concat(a: Word, b: Word) -> Word:
    _check_same(a, b)
    return Word(a.letters + b.letters, a.k)


def is_suffix(b: Word, a: Word) -> bool:
    """
    True iff b is a suffix of a, i.e. a = cb for some word c.
    """
    _check_same(a, b)
    n = len(b.letters)
    return n <= len(a.letters) and (n == 0 or a.letters[-n:] == b.letters)


def strip_suffix(a: Word, b: Word) -> Optional[Word]:
    """
    The unique u with a = concat(u, b), or None if b is not a suffix of a.
    """
    if not is_suffix(b, a):
        return None
    return Word(a.letters[: len(a.letters) - len(b.letters)], a.k)


def strip_prefix(a: Word, b: Word) -> Optional[Word]:
    """
    The unique v with a = concat(b, v), or None if b is not a prefix of a.
    """
    _check_same(a, b)
    n = len(b.letters)
    if n > len(a.letters) or a.letters[:n] != b.letters:
        return None
    return Word(a.letters[n:], a.k)


def suffixes(a: Word) -> Set[Word]:
    return {Word(a.letters[i:], a.k) for i in range(len(a.letters) + 1)}


def proper_suffixes(a: Word) -> Set[Word]:
    return {Word(a.letters[i:], a.k) for i in range(1, len(a.letters) + 1)}


def enumerate_words(k: int, maxlen: int) -> List[Word]:
    """
    All words of length <= maxlen, shortest first and lexicographic within a
    length.

    :param k: alphabet size
    :param maxlen: maximal word length
    :return: list of words
    """
    if maxlen < 0:
        raise ValueError("maxlen must be non-negative, got {}".format(maxlen))
    words = []
    for length in range(maxlen + 1):
        for letters in itertools.product(range(k), repeat=length):
            words.append(Word(letters, k))
    return words


def count_words(k: int, maxlen: int) -> int:
    """ Number of words of length <= maxlen over k letters. """
    if k == 1:
        return maxlen + 1
    return (k ** (maxlen + 1) - 1) // (k - 1)
