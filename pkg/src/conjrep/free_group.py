"""Free group F_n and automorphisms given by generator images.

A word is a tuple of nonzero ints: ``i`` stands for x_i and ``-i`` for
x_i^-1. Words returned by this module are always freely reduced.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

FreeWord = tuple[int, ...]


class RankMismatch(ValueError):
    pass


class NotConjugating(ValueError):
    """The automorphism is not of the form x_i -> f_i^-1 x_pi(i) f_i."""


def fw_reduce(raw: Iterable[int]) -> FreeWord:
    stack: list[int] = []
    for a in raw:
        if a == 0:
            raise ValueError("0 is not a letter")
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


def fw_mul(u: FreeWord, v: FreeWord) -> FreeWord:
    """Product of two reduced words; cancellation only at the seam."""
    i = 0
    m = min(len(u), len(v))
    while i < m and u[-1 - i] == -v[i]:
        i += 1
    return u[: len(u) - i] + v[i:]


def fw_inverse(u: FreeWord) -> FreeWord:
    return tuple(-a for a in reversed(u))


def fw_to_text(u: FreeWord) -> str:
    if not u:
        return "1"
    return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in u)


_FW_TOKEN = re.compile(r"x(\d+)(\^-1)?$")


def fw_from_text(text: str) -> FreeWord:
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for tok in text.split():
        m = _FW_TOKEN.match(tok)
        if not m or int(m.group(1)) == 0:
            raise ValueError(f"bad free-group letter {tok!r}")
        i = int(m.group(1))
        out.append(-i if m.group(2) else i)
    return fw_reduce(out)


def fw_to_json(u: FreeWord) -> list[list[int]]:
    return [[abs(a), 1 if a > 0 else -1] for a in u]


def fw_from_json(obj: Sequence[Sequence[int]]) -> FreeWord:
    return fw_reduce(i * s for i, s in obj)


@dataclass(frozen=True)
class FreeAutomorphism:
    n: int
    images: tuple[FreeWord, ...]

    @classmethod
    def identity(cls, n: int) -> "FreeAutomorphism":
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def from_images(cls, images: Sequence[Iterable[int]]) -> "FreeAutomorphism":
        return cls(len(images), tuple(fw_reduce(w) for w in images))

    def __call__(self, w: FreeWord) -> FreeWord:
        return aut_apply(self, w)

    def __mul__(self, other: "FreeAutomorphism") -> "FreeAutomorphism":
        return aut_compose(self, other)


def aut_apply(phi: FreeAutomorphism, w: FreeWord) -> FreeWord:
    out: FreeWord = ()
    images = phi.images
    for a in w:
        if abs(a) > phi.n:
            raise RankMismatch(f"letter x{abs(a)} outside F_{phi.n}")
        img = images[a - 1] if a > 0 else fw_inverse(images[-a - 1])
        out = fw_mul(out, img)
    return out


def aut_compose(a: FreeAutomorphism, b: FreeAutomorphism) -> FreeAutomorphism:
    """``(a o b)(x_i) = a(b(x_i))``."""
    if a.n != b.n:
        raise RankMismatch(f"F_{a.n} vs F_{b.n}")
    return FreeAutomorphism(a.n, tuple(aut_apply(a, img) for img in b.images))


def aut_is_identity(phi: FreeAutomorphism) -> bool:
    return all(img == (i,) for i, img in enumerate(phi.images, start=1))


@dataclass(frozen=True)
class ConjugacyCertificate:
    """``phi(x_i) = f_i^-1 x_pi(i) f_i``; ``pi`` is 1-based, ``pi[i-1] = pi(i)``."""
    pi: tuple[int, ...]
    conjugators: tuple[FreeWord, ...]

    def rebuild(self) -> FreeAutomorphism:
        return FreeAutomorphism.from_images(
            [fw_inverse(f) + (j,) + f for j, f in zip(self.pi, self.conjugators)]
        )


def aut_conjugacy_certificate(phi: FreeAutomorphism) -> ConjugacyCertificate:
    pi = []
    conj = []
    for i, img in enumerate(phi.images, start=1):
        m, odd = divmod(len(img), 2)
        if not odd or img[m] < 0 or img[:m] != fw_inverse(img[m + 1:]):
            raise NotConjugating(f"x{i} -> {fw_to_text(img)} is not a conjugate of a generator")
        pi.append(img[m])
        conj.append(img[m + 1:])
    if sorted(pi) != list(range(1, phi.n + 1)):
        raise NotConjugating("generator images do not permute the basis")
    return ConjugacyCertificate(tuple(pi), tuple(conj))


def perm_cycles(pi: Sequence[int]) -> str:
    """Cycle notation for a 1-based permutation tuple, ``id`` for the identity."""
    seen = set()
    cycles = []
    for start in range(1, len(pi) + 1):
        if start in seen or pi[start - 1] == start:
            continue
        cyc = [start]
        seen.add(start)
        j = pi[start - 1]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = pi[j - 1]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "id"
