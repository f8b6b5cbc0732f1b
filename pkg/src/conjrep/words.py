"""Words in the generators sigma_i, alpha_i of C_n and the defining relations.

Text grammar (whitespace separated): ``s2``, ``s2^-1`` or ``S2`` for
sigma_2^-1, ``a1`` (``A1`` and ``a1^-1`` are the same letter, alpha being
an involution).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable


class WordSyntaxError(ValueError):
    def __init__(self, msg: str, position: int):
        super().__init__(f"{msg} (at position {position})")
        self.position = position


class IndexOutOfRange(ValueError):
    pass


@dataclass(frozen=True, order=True)
class GenLetter:
    kind: str  # "s" or "a"
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.kind not in ("s", "a"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.kind == "a" and self.sign != 1:
            object.__setattr__(self, "sign", 1)

    def inverse(self) -> "GenLetter":
        if self.kind == "a":
            return self
        return GenLetter("s", self.index, -self.sign)

    def __str__(self):
        if self.kind == "s" and self.sign < 0:
            return f"S{self.index}"
        return f"{self.kind}{self.index}"


@dataclass(frozen=True)
class GenWord:
    n: int
    letters: tuple[GenLetter, ...] = ()

    def __post_init__(self):
        for g in self.letters:
            if not 1 <= g.index <= self.n - 1:
                raise IndexOutOfRange(f"{g} needs n > {g.index}, got n={self.n}")

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: "GenWord") -> "GenWord":
        if self.n != other.n:
            raise ValueError("words live in different ranks")
        return GenWord(self.n, self.letters + other.letters)

    def inverse(self) -> "GenWord":
        return GenWord(self.n, tuple(g.inverse() for g in reversed(self.letters)))

    def __str__(self):
        return print_word(self)


def s(i: int, sign: int = 1) -> GenLetter:
    return GenLetter("s", i, sign)


def a(i: int) -> GenLetter:
    return GenLetter("a", i)


_TOKEN = re.compile(r"([sSaA])(\d+)(\^-1)?$")


def parse_word(text: str, n: int) -> GenWord:
    letters = []
    for m in re.finditer(r"\S+", text):
        tok = m.group()
        t = _TOKEN.match(tok)
        if not t:
            raise WordSyntaxError(f"bad token {tok!r}", m.start())
        ch, idx, inv = t.groups()
        i = int(idx)
        if i < 1 or i > n - 1:
            raise IndexOutOfRange(f"token {tok!r} at position {m.start()} needs index in 1..{n - 1}")
        sign = -1 if ch.isupper() else 1
        if inv:
            sign = -sign
        letters.append(GenLetter(ch.lower(), i, sign))
    return GenWord(n, tuple(letters))


def print_word(w: GenWord) -> str:
    return " ".join(str(g) for g in w.letters)


def word_to_json(w: GenWord) -> dict:
    return {"n": w.n, "letters": [[g.kind, g.index, g.sign] for g in w.letters]}


def word_from_json(obj: dict) -> GenWord:
    return GenWord(obj["n"], tuple(GenLetter(k, i, sg) for k, i, sg in obj["letters"]))


def free_cancel(w: GenWord) -> GenWord:
    """Cancel adjacent s_i s_i^-1, s_i^-1 s_i and a_i a_i until none remain."""
    stack: list[GenLetter] = []
    for g in w.letters:
        if stack and stack[-1] == g.inverse():
            stack.pop()
        else:
            stack.append(g)
    return GenWord(w.n, tuple(stack))


def word_permutation(w: GenWord) -> tuple[int, ...]:
    """Composite of the transpositions (i i+1) over the letters, leftmost outermost.

    Returned 1-based: ``perm[k-1]`` is the image of k.
    """
    perm = list(range(1, w.n + 1))
    # pi = t_1 o t_2 o ... o t_m: apply t_m first, so fold from the right
    for g in reversed(w.letters):
        i = g.index
        perm = [i + 1 if v == i else i if v == i + 1 else v for v in perm]
    return tuple(perm)


FAMILIES = (
    "sigma-braid",
    "sigma-commute",
    "alpha-involution",
    "alpha-braid",
    "alpha-commute",
    "mixed-commute",
    "mixed-sigma-alpha-alpha",
    "mixed-sigma-sigma-alpha",
)


@dataclass(frozen=True)
class Relation:
    lhs: GenWord
    rhs: GenWord
    family: str

    def __str__(self):
        return f"[{self.family}] {print_word(self.lhs) or '1'} = {print_word(self.rhs) or '1'}"


def _w(n: int, letters: Iterable[GenLetter]) -> GenWord:
    return GenWord(n, tuple(letters))


def relation_instances(n: int, corrected: bool = False) -> list[Relation]:
    """Every index instance of the eight defining relation families of C_n.

    Far commutation of sigmas is generated for |i - j| >= 2. The last family
    is s_{i+1} s_i a_{i+1} = a_i s_{i+1} s_i as usually printed; this does not
    hold under left-to-right composition (it is the mirror image of the true
    relation). ``corrected`` swaps in s_i s_{i+1} a_i = a_{i+1} s_i s_{i+1}.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    rels = []
    idx = range(1, n)
    for i in range(1, n - 1):
        rels.append(Relation(_w(n, [s(i), s(i + 1), s(i)]), _w(n, [s(i + 1), s(i), s(i + 1)]), "sigma-braid"))
    for i in idx:
        for j in idx:
            if j - i >= 2:
                rels.append(Relation(_w(n, [s(i), s(j)]), _w(n, [s(j), s(i)]), "sigma-commute"))
    for i in idx:
        rels.append(Relation(_w(n, [a(i), a(i)]), _w(n, []), "alpha-involution"))
    for j in range(1, n - 1):
        rels.append(Relation(_w(n, [a(j), a(j + 1), a(j)]), _w(n, [a(j + 1), a(j), a(j + 1)]), "alpha-braid"))
    for i in idx:
        for j in idx:
            if j - i >= 2:
                rels.append(Relation(_w(n, [a(i), a(j)]), _w(n, [a(j), a(i)]), "alpha-commute"))
    for i in idx:
        for j in idx:
            if abs(i - j) >= 2:
                rels.append(Relation(_w(n, [a(i), s(j)]), _w(n, [s(j), a(i)]), "mixed-commute"))
    for i in range(1, n - 1):
        rels.append(Relation(
            _w(n, [s(i), a(i + 1), a(i)]), _w(n, [a(i + 1), a(i), s(i + 1)]), "mixed-sigma-alpha-alpha"))
    for i in range(1, n - 1):
        if corrected:
            lhs, rhs = [s(i), s(i + 1), a(i)], [a(i + 1), s(i), s(i + 1)]
        else:
            lhs, rhs = [s(i + 1), s(i), a(i + 1)], [a(i), s(i + 1), s(i)]
        rels.append(Relation(_w(n, lhs), _w(n, rhs), "mixed-sigma-sigma-alpha"))
    return rels


def alphabet(n: int) -> tuple[GenLetter, ...]:
    """Search alphabet: s_i, s_i^-1, a_i for 1 <= i < n."""
    out = []
    for i in range(1, n):
        out += [s(i), s(i, -1), a(i)]
    return tuple(out)
