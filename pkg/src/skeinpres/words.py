"""Signed ray-crossing words for simple closed curves in the punctured disk.

A letter is a nonzero integer: ``+v`` records a left-to-right passage
through the ray below puncture ``v``, ``-v`` a right-to-left one.  A curve
word is a cyclic sequence of letters considered up to rotation and
reversal-with-sign-flip; multicurves are sorted tuples of nonempty words.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple[int, ...]
Multicurve = tuple[Word, ...]

__all__ = [
    "Word",
    "Multicurve",
    "letter_key",
    "word_key",
    "free_reduce",
    "reduce_cyclic",
    "invert",
    "canonicalize",
    "mc_canonicalize",
    "multidegree",
    "degree",
    "format_word",
    "format_multicurve",
]


def letter_key(letter: int) -> tuple[int, int]:
    """Total order (1,+) < (1,-) < (2,+) < (2,-) < ..."""
    return (abs(letter), 0 if letter > 0 else 1)


def word_key(word: Sequence[int]) -> tuple:
    return (len(word), tuple(letter_key(x) for x in word))


def _check_letters(letters: Iterable[int]) -> list[int]:
    out = []
    for x in letters:
        if not isinstance(x, int) or x == 0:
            raise ValueError(f"invalid letter {x!r}")
        out.append(x)
    return out


def free_reduce(letters: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs (linear, not cyclic)."""
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def reduce_cyclic(letters: Iterable[int]) -> Word:
    """Free reduction followed by removal of cancelling wrap-around pairs."""
    w = free_reduce(_check_letters(letters))
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def invert(word: Sequence[int]) -> Word:
    """Traverse the word backwards: reverse the order and flip every sign."""
    return tuple(-x for x in reversed(word))


def _least_rotation(word: Word) -> Word:
    best = word
    best_key = [letter_key(x) for x in word]
    for i in range(1, len(word)):
        cand = word[i:] + word[:i]
        key = [letter_key(x) for x in cand]
        if key < best_key:
            best, best_key = cand, key
    return best


def canonicalize(letters: Iterable[int]) -> Word:
    w = reduce_cyclic(letters)
    if not w:
        return ()
    a = _least_rotation(w)
    b = _least_rotation(invert(w))
    return a if [letter_key(x) for x in a] <= [letter_key(x) for x in b] else b


def mc_canonicalize(words: Iterable[Sequence[int]]) -> Multicurve:
    comps = []
    for w in words:
        w = canonicalize(w)
        if not w:
            raise ValueError("multicurve components must be nonempty words")
        comps.append(w)
    return tuple(sorted(comps, key=word_key))


def multidegree(obj: Sequence[int] | Multicurve, n: int = 4) -> tuple[int, ...]:
    """Per-puncture letter count of a word or of a multicurve."""
    md = [0] * n
    if obj and isinstance(obj[0], tuple):
        comps = obj
    else:
        comps = (obj,)
    for w in comps:
        for x in w:
            md[abs(x) - 1] += 1
    return tuple(md)


def degree(obj: Sequence[int] | Multicurve) -> int:
    if obj and isinstance(obj[0], tuple):
        return sum(len(w) for w in obj)
    return len(obj)


def format_word(word: Sequence[int]) -> str:
    """``t_{1,2,3,-2}`` style text; a bar is written as a minus sign."""
    return "t(" + ",".join(str(x) for x in word) + ")"


def format_multicurve(mc: Multicurve) -> str:
    if not mc:
        return "1"
    return "*".join(format_word(w) for w in mc)
