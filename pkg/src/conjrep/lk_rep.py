"""The Lawrence-Krammer type representation of C_n on the pair basis v_{i,j}.

Matrices act on column vectors: column ``c`` holds the image of the basis
vector with coordinate ``c``. A word g_1 ... g_m maps to the product
rho(g_1) ... rho(g_m), and to the automorphism g_1 o ... o g_m of F_n.
"""
from __future__ import annotations

from functools import lru_cache, reduce

from .free_group import FreeAutomorphism, aut_compose
from .laurent import ONE, ZERO, LaurentPoly, Q, from_text
from .matrix import PolyMatrix, mat_inverse, mat_mul
from .words import GenLetter, GenWord, IndexOutOfRange

Q2 = Q * Q
ONE_MINUS_Q = ONE - Q
Q_Q_MINUS_1 = Q2 - Q


class BasisIndexer:
    """Lexicographic ordering of the pairs (i, j), 1 <= i < j <= n."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("n must be at least 2")
        self.n = n
        self.pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        self._index = {p: c for c, p in enumerate(self.pairs)}

    @property
    def dim(self) -> int:
        return len(self.pairs)

    def index(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self._index[(i, j)]

    def pair(self, c: int) -> tuple[int, int]:
        return self.pairs[c]


def _images(kind: str, i: int, k: int, l: int) -> list[list[tuple[LaurentPoly, tuple[int, int]]]]:
    """All rules matching v_{k,l}; the caller demands exactly one."""
    sig = kind == "s"
    hits = []
    if l == i and k < i:
        hits.append([(ONE_MINUS_Q, (k, i)), (Q, (k, i + 1)), (Q_Q_MINUS_1, (i, i + 1))] if sig
                    else [(ONE, (k, i + 1))])
    if l == i + 1 and k < i:
        hits.append([(ONE, (k, i))])
    if (k, l) == (i, i + 1):
        hits.append([(Q2 if sig else ONE, (i, i + 1))])
    if k == i and l > i + 1:
        hits.append([(Q_Q_MINUS_1, (i, i + 1)), (ONE_MINUS_Q, (i, l)), (Q, (i + 1, l))] if sig
                    else [(ONE, (i + 1, l))])
    if k == i + 1:
        hits.append([(ONE, (i, l))])
    if not {k, l} & {i, i + 1}:
        hits.append([(ONE, (k, l))])
    return hits


@lru_cache(maxsize=None)
def build_generator(n: int, g: GenLetter) -> PolyMatrix:
    """Matrix of rho(g) in the :class:`BasisIndexer` ordering."""
    if not 1 <= g.index <= n - 1:
        raise IndexOutOfRange(f"{g} needs index in 1..{n - 1}")
    if g.kind == "s" and g.sign < 0:
        return mat_inverse(build_generator(n, g.inverse()))
    basis = BasisIndexer(n)
    d = basis.dim
    cols = [[ZERO] * d for _ in range(d)]
    for c, (k, l) in enumerate(basis.pairs):
        hits = _images(g.kind, g.index, k, l)
        assert len(hits) == 1, f"{len(hits)} rules match v_{k},{l} under {g}"
        for coeff, pair in hits[0]:
            cols[c][basis.index(*pair)] += coeff
    return PolyMatrix.from_rows([[cols[c][r] for c in range(d)] for r in range(d)])


def evaluate_word(w: GenWord) -> PolyMatrix:
    d = w.n * (w.n - 1) // 2
    return reduce(mat_mul, (build_generator(w.n, g) for g in w.letters), PolyMatrix.identity(d))


@lru_cache(maxsize=None)
def generator_automorphism(n: int, g: GenLetter) -> FreeAutomorphism:
    """sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i; alpha_i swaps x_i, x_{i+1}."""
    if not 1 <= g.index <= n - 1:
        raise IndexOutOfRange(f"{g} needs index in 1..{n - 1}")
    i = g.index
    images = [(k,) for k in range(1, n + 1)]
    if g.kind == "a":
        images[i - 1], images[i] = (i + 1,), (i,)
    elif g.sign > 0:
        images[i - 1], images[i] = (i, i + 1, -i), (i,)
    else:
        images[i - 1], images[i] = (i + 1,), (-(i + 1), i, i + 1)
    return FreeAutomorphism(n, tuple(images))


def word_to_automorphism(w: GenWord) -> FreeAutomorphism:
    return reduce(aut_compose, (generator_automorphism(w.n, g) for g in w.letters),
                  FreeAutomorphism.identity(w.n))


def _grid(text: str) -> PolyMatrix:
    return PolyMatrix.from_rows([[from_text(c) for c in line.split(",")]
                                 for line in text.strip().splitlines()])


# Explicit matrices for n = 3 and n = 4, transcribed entry by entry.
GOLDEN: dict[int, dict[str, PolyMatrix]] = {
    3: {
        "s1": _grid("""
            q^2, q^2 - q, 0
            0, 1 - q, 1
            0, q, 0"""),
        "s2": _grid("""
            1 - q, 1, 0
            q, 0, 0
            q^2 - q, 0, q^2"""),
        "a1": _grid("""
            1, 0, 0
            0, 0, 1
            0, 1, 0"""),
        "a2": _grid("""
            0, 1, 0
            1, 0, 0
            0, 0, 1"""),
    },
    4: {
        "s1": _grid("""
            q^2, q^2 - q, q^2 - q, 0, 0, 0
            0, 1 - q, 0, 1, 0, 0
            0, 0, 1 - q, 0, 1, 0
            0, q, 0, 0, 0, 0
            0, 0, q, 0, 0, 0
            0, 0, 0, 0, 0, 1"""),
        "s2": _grid("""
            1 - q, 1, 0, 0, 0, 0
            q, 0, 0, 0, 0, 0
            0, 0, 1, 0, 0, 0
            q^2 - q, 0, 0, q^2, q^2 - q, 0
            0, 0, 0, 0, 1 - q, 1
            0, 0, 0, 0, q, 0"""),
        "s3": _grid("""
            1, 0, 0, 0, 0, 0
            0, 1 - q, 1, 0, 0, 0
            0, q, 0, 0, 0, 0
            0, 0, 0, 1 - q, 1, 0
            0, 0, 0, q, 0, 0
            0, q^2 - q, 0, q^2 - q, 0, q^2"""),
        "a1": _grid("""
            1, 0, 0, 0, 0, 0
            0, 0, 0, 1, 0, 0
            0, 0, 0, 0, 1, 0
            0, 1, 0, 0, 0, 0
            0, 0, 1, 0, 0, 0
            0, 0, 0, 0, 0, 1"""),
        "a2": _grid("""
            0, 1, 0, 0, 0, 0
            1, 0, 0, 0, 0, 0
            0, 0, 1, 0, 0, 0
            0, 0, 0, 1, 0, 0
            0, 0, 0, 0, 0, 1
            0, 0, 0, 0, 1, 0"""),
        "a3": _grid("""
            1, 0, 0, 0, 0, 0
            0, 0, 1, 0, 0, 0
            0, 1, 0, 0, 0, 0
            0, 0, 0, 0, 1, 0
            0, 0, 0, 1, 0, 0
            0, 0, 0, 0, 0, 1"""),
    },
}


def pair_permutation_matrix(n: int, pi: tuple[int, ...]) -> PolyMatrix:
    """Matrix sending v_{k,l} to v_{pi(k),pi(l)}."""
    basis = BasisIndexer(n)
    d = basis.dim
    rows = [[ZERO] * d for _ in range(d)]
    for c, (k, l) in enumerate(basis.pairs):
        rows[basis.index(pi[k - 1], pi[l - 1])][c] = ONE
    return PolyMatrix.from_rows(rows)
