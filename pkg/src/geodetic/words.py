"""Combinatorics on words: factors, primitive roots, commutation equations.

Words are tuples of letter strings.  Inverse letters follow the trailing
apostrophe convention (a' is the formal inverse of a) when rendered.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

Word = tuple[str, ...]

EMPTY_WORD: Word = ()

LAMBDA = "λ"  # how the empty word renders


class WordEquationError(ValueError):
    """The input words do not satisfy the required equation."""


@dataclass(frozen=True)
class Alphabet:
    """A finite letter set with a formal-inverse involution."""

    letters: frozenset[str]
    inverse: Mapping[str, str]

    def __post_init__(self):
        for a in self.letters:
            b = self.inverse.get(a)
            if b is None:
                raise ValueError(f"letter {a!r} has no inverse")
            if b not in self.letters:
                raise ValueError(f"inverse {b!r} of {a!r} is outside the alphabet")
            if self.inverse.get(b) != a:
                raise ValueError(f"inverse map is not an involution at {a!r}")
        for a in self.inverse:
            if a not in self.letters:
                raise ValueError(f"involution mentions unknown letter {a!r}")

    def inv(self, letter: str) -> str:
        return self.inverse[letter]

    def sorted_letters(self) -> list[str]:
        return sorted(self.letters)


def primed_alphabet(base_letters: Iterable[str]) -> Alphabet:
    """Alphabet holding x and x' for each base letter, paired as inverses."""
    letters = set()
    inverse = {}
    for x in base_letters:
        y = x + "'"
        letters.update((x, y))
        inverse[x] = y
        inverse[y] = x
    return Alphabet(frozenset(letters), inverse)


def parse_word(text: str, alphabet: Optional[Alphabet] = None) -> Word:
    """Parse a whitespace-free word.

    With an alphabet the text is matched greedily against its letters
    (longest first).  Without one, each character is a letter and a trailing
    apostrophe marks its formal inverse.
    """
    text = text.strip()
    if text in ("", LAMBDA):
        return EMPTY_WORD
    out: list[str] = []
    if alphabet is None:
        i = 0
        while i < len(text):
            ch = text[i]
            if ch == "'":
                raise ValueError(f"dangling apostrophe at position {i} in {text!r}")
            if i + 1 < len(text) and text[i + 1] == "'":
                out.append(ch + "'")
                i += 2
            else:
                out.append(ch)
                i += 1
        return tuple(out)
    by_length = sorted(alphabet.letters, key=len, reverse=True)
    i = 0
    while i < len(text):
        for letter in by_length:
            if text.startswith(letter, i):
                out.append(letter)
                i += len(letter)
                break
        else:
            raise ValueError(f"cannot read a letter at position {i} in {text!r}")
    return tuple(out)


def format_word(w: Word) -> str:
    return "".join(w) if w else LAMBDA


def is_factor(u: Word, w: Word) -> bool:
    """Whether u occurs as a contiguous factor of w (λ always does)."""
    n = len(u)
    return any(w[i : i + n] == u for i in range(len(w) - n + 1))


def factors_of_length(w: Word, length: int) -> set[Word]:
    if length < 0:
        raise ValueError("factor length must be nonnegative")
    if length == 0:
        return {EMPTY_WORD}
    return {w[i : i + length] for i in range(len(w) - length + 1)}


def primitive_root(w: Word) -> tuple[Word, int]:
    """The primitive u and maximal m with w = u^m, via the failure function."""
    n = len(w)
    if n == 0:
        raise ValueError("the empty word has no primitive root")
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    period = n - fail[-1]
    if n % period == 0:
        return w[:period], n // period
    return w, 1


@dataclass(frozen=True)
class LSDecomposition:
    """Witness for zx = yz: x = st, y = ts, z = (ts)^q t."""

    s: Word
    t: Word
    q: int

    @property
    def x(self) -> Word:
        return self.s + self.t

    @property
    def y(self) -> Word:
        return self.t + self.s

    @property
    def z(self) -> Word:
        return (self.t + self.s) * self.q + self.t


def solve_zx_eq_yz(x: Word, y: Word, z: Word) -> LSDecomposition:
    """Solve zx = yz for nonempty x, returning the canonical witness.

    Canonical means maximal q (equivalently minimal |t|): q = |z| div |x|
    and t is the length-(|z| mod |x|) prefix of z.  The returned identities
    are re-verified before the witness is handed back.
    """
    if not x:
        raise ValueError("x must be nonempty")
    if z + x != y + z:
        raise WordEquationError("zx = yz does not hold for these words")
    q, r = divmod(len(z), len(x))
    t = z[:r]
    s = x[: len(x) - r]
    witness = LSDecomposition(s, t, q)
    if witness.x != x or witness.y != y or witness.z != z:
        raise WordEquationError("no canonical decomposition reproduces the inputs")
    return witness


def commuting_common_root(x: Word, y: Word) -> Word:
    """The primitive word u with x, y both powers of u, given xy = yx."""
    if not x or not y:
        raise ValueError("both words must be nonempty")
    if x + y != y + x:
        raise WordEquationError("the words do not commute")
    shorter = x if len(x) <= len(y) else y
    root, _ = primitive_root(shorter)
    for w in (x, y):
        m, rem = divmod(len(w), len(root))
        if rem or root * m != w:
            raise WordEquationError("commuting words with no common root")
    return root


def free_reduce(w: Word, alphabet: Alphabet) -> Word:
    """Cancel adjacent letter/inverse pairs until none remain."""
    stack: list[str] = []
    for letter in w:
        if letter not in alphabet.letters:
            raise ValueError(f"letter {letter!r} is outside the alphabet")
        if stack and stack[-1] == alphabet.inverse[letter]:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)
