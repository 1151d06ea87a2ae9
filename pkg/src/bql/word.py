"""Free-group words over a 1-based generator alphabet.

A letter is a nonzero integer: ``g`` stands for generator ``g`` and ``-g`` for
its inverse, so ``Word.parse("2 -1")`` is the word s2 s1^-1.  Words are freely
reduced on construction and are immutable.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class WordSyntaxError(ValueError):
    pass


def reduce(raw: Iterable[int]) -> tuple[int, ...]:
    """Free reduction of a sequence of signed letters (stack based, one pass)."""
    out: list[int] = []
    for x in raw:
        x = int(x)
        if x == 0:
            raise WordSyntaxError("letter 0 is not a generator")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class Word:
    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[int] = ()):
        object.__setattr__(self, "letters", reduce(letters))
        object.__setattr__(self, "_hash", hash(self.letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def parse(cls, text: str) -> "Word":
        letters = []
        for tok in text.split():
            try:
                x = int(tok)
            except ValueError:
                raise WordSyntaxError(f"not an integer letter: {tok!r}") from None
            if x == 0:
                raise WordSyntaxError("letter 0 is not a generator")
            letters.append(x)
        return cls(letters)

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else invert(self)
        return Word(base.letters * abs(k))

    @property
    def max_generator(self) -> int:
        return max((abs(x) for x in self.letters), default=0)


def multiply(a: Word, b: Word) -> Word:
    return Word(a.letters + b.letters)


def invert(a: Word) -> Word:
    return Word(-x for x in reversed(a.letters))


def conjugate(a: Word, g: Word) -> Word:
    """Return g a g^-1."""
    return Word(g.letters + a.letters + invert(g).letters)


def commutator(a: Word, b: Word) -> Word:
    """Return a b a^-1 b^-1."""
    return Word(a.letters + b.letters + invert(a).letters + invert(b).letters)


def exponent_sum(a: Word | Sequence[int]) -> int:
    return sum(1 if x > 0 else -1 for x in a)


def cyclically_reduce(a: Word) -> Word:
    letters = a.letters
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[lo] == -letters[hi - 1]:
        lo += 1
        hi -= 1
    return Word(letters[lo:hi])


def cyclic_conjugates(a: Word) -> set[Word]:
    """All rotations of the cyclically reduced core of ``a``."""
    core = cyclically_reduce(a).letters
    if not core:
        return {Word()}
    return {Word(core[i:] + core[:i]) for i in range(len(core))}
