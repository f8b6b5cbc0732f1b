"""Kernel membership, the n=3 kernel shape grammar, and kernel search."""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from .free_group import FreeAutomorphism, aut_compose, aut_is_identity
from .laurent import MODULUS, lp_eval_mod
from .lk_rep import build_generator, evaluate_word, generator_automorphism, word_to_automorphism
from .words import GenLetter, GenWord, a, alphabet, parse_word, print_word, s, word_permutation

THEOREM_WORDS = {
    3: ("S2 a2 a1 S2 a2 a1 s2 a1 a2 s2 a1 a2", 3),
    5: ("s1 a1 a2 a1 S1 a2 a1 S1 a2 s1 a1 a2", 4),
}

IN_KERNEL = "in-kernel-nontrivial"
TRIVIAL = "trivial"
NOT_IN_KERNEL = "not-in-kernel"


def theorem_word(number: int) -> GenWord:
    text, n = THEOREM_WORDS[number]
    return parse_word(text, n)


@dataclass(frozen=True)
class KernelVerdict:
    word: GenWord
    matrix_is_identity: bool
    automorphism_is_identity: bool

    @property
    def conclusion(self) -> str:
        if self.automorphism_is_identity:
            return TRIVIAL
        return IN_KERNEL if self.matrix_is_identity else NOT_IN_KERNEL


def verify_kernel(w: GenWord) -> KernelVerdict:
    return KernelVerdict(
        w,
        evaluate_word(w).is_identity(),
        aut_is_identity(word_to_automorphism(w)),
    )


# -- shape grammar (n = 3) ---------------------------------------------------

T_WORD = (s(2), a(2), a(1))
T_INV_WORD = (a(1), a(2), s(2, -1))
BLOCKS = {
    "a1": (a(1),),
    "a2": (a(2),),
    "a1 a2": (a(1), a(2)),
    "a2 a1": (a(2), a(1)),
    "a1 a2 a1": (a(1), a(2), a(1)),
}
A_FIRST = "A-first"
T_FIRST = "T-first"


class InvalidShape(ValueError):
    pass


@dataclass(frozen=True)
class ShapeSpec:
    """``A_1 T^s_1 ... A_r T^s_r`` (A-first) or ``T^s_1 A_1 ... T^s_r A_r``.

    Blocks are given by their text form, one of the keys of ``BLOCKS``.
    """
    blocks: tuple[str, ...]
    exponents: tuple[int, ...]
    variant: str = A_FIRST

    @property
    def r(self) -> int:
        return len(self.blocks)

    def validate(self) -> None:
        if not self.blocks or len(self.blocks) != len(self.exponents):
            raise InvalidShape("need r >= 1 blocks and exactly one exponent per block")
        if self.variant not in (A_FIRST, T_FIRST):
            raise InvalidShape(f"unknown variant {self.variant!r}")
        unknown = [b for b in self.blocks if b not in BLOCKS]
        if unknown:
            raise InvalidShape(f"blocks {unknown} are not allowed")
        if sum(self.exponents) != 0:
            raise InvalidShape("exponents must sum to zero")
        if sum(len(BLOCKS[b]) for b in self.blocks) % 2:
            raise InvalidShape("total block length must be even")


def _t_power(k: int) -> tuple[GenLetter, ...]:
    return (T_WORD if k > 0 else T_INV_WORD) * abs(k)


def expand_shape(spec: ShapeSpec) -> GenWord:
    spec.validate()
    letters: tuple[GenLetter, ...] = ()
    for block, k in zip(spec.blocks, spec.exponents):
        if spec.variant == A_FIRST:
            letters += BLOCKS[block] + _t_power(k)
        else:
            letters += _t_power(k) + BLOCKS[block]
    return GenWord(3, letters)


def _tokenize(letters: tuple[GenLetter, ...]) -> list[tuple[str, object]] | None:
    """Split into ``("T", +-1)`` and ``("A", block)`` tokens, longest match first."""
    memo: dict[int, list | None] = {}

    def go(pos: int):
        if pos == len(letters):
            return []
        if pos in memo:
            return memo[pos]
        options = []
        if letters[pos:pos + 3] == T_WORD:
            options.append(("T", 1))
        if letters[pos:pos + 3] == T_INV_WORD:
            options.append(("T", -1))
        for text, blk in sorted(BLOCKS.items(), key=lambda kv: -len(kv[1])):
            if letters[pos:pos + len(blk)] == blk:
                options.append(("A", text))
        result = None
        for tok in options:
            step = 3 if tok[0] == "T" else len(BLOCKS[tok[1]])
            rest = go(pos + step)
            if rest is not None and not (
                tok[0] == "T" and rest and rest[0][0] == "T" and rest[0][1] != tok[1]
            ):
                result = [tok] + rest
                break
        memo[pos] = result
        return result

    return go(0)


def match_shape(w: GenWord) -> ShapeSpec | None:
    """Literal match against the two shape families; None when no parse exists.

    This is a necessary-condition filter, not a kernel test.
    """
    if w.n != 3:
        raise ValueError("shape grammar is defined for n = 3 only")
    if not w.letters:
        return None
    tokens = _tokenize(w.letters)
    if tokens is None:
        return None
    # collapse into alternating A blocks and signed T runs
    items: list[tuple[str, object]] = []
    for kind, val in tokens:
        if kind == "T" and items and items[-1][0] == "T":
            items[-1] = ("T", items[-1][1] + val)
        else:
            items.append((kind, val))
    blocks, exps = [], []
    if items[0][0] == "A":
        variant = A_FIRST
        for kind, val in items:
            if kind == "A":
                blocks.append(val)
                exps.append(0)
            else:
                exps[-1] = val
    elif items[-1][0] == "A":
        variant = T_FIRST
        pending = 0
        for kind, val in items:
            if kind == "T":
                pending = val
            else:
                blocks.append(val)
                exps.append(pending)
                pending = 0
    else:
        return None
    spec = ShapeSpec(tuple(blocks), tuple(exps), variant)
    try:
        spec.validate()
    except InvalidShape:
        return None
    return spec


# -- search ------------------------------------------------------------------

@dataclass(frozen=True)
class SearchConfig:
    n: int
    max_len: int
    half_len: int | None = None
    seed: int = 0
    specializations: int = 2
    threads: int = 1

    def __post_init__(self):
        if self.n < 2 or self.max_len < 1:
            raise ValueError("need n >= 2 and max_len >= 1")
        if self.half_len is None:
            object.__setattr__(self, "half_len", (self.max_len + 1) // 2)
        if not 0 <= self.half_len <= self.max_len:
            raise ValueError("half_len must lie in 0..max_len")
        if self.specializations < 2:
            raise ValueError("need at least two specialization points")

    def points(self) -> list[int]:
        rng = random.Random(self.seed)
        return [rng.randrange(2, MODULUS - 1) for _ in range(self.specializations)]


def _mod_generators(n: int, points: list[int]) -> list[list[list[tuple[int, int, int]]]]:
    """Per letter, per point: sparse (row, col, value) entries mod p."""
    out = []
    for g in alphabet(n):
        m = build_generator(n, g)
        per_point = []
        for q0 in points:
            per_point.append([
                (i, j, lp_eval_mod(e, q0))
                for i, row in enumerate(m.entries) for j, e in enumerate(row) if e
            ])
        out.append(per_point)
    return out


def _right_mul(mat: tuple[int, ...], d: int, sparse: list[tuple[int, int, int]]) -> tuple[int, ...]:
    out = [0] * (d * d)
    for k, j, v in sparse:
        for i in range(d):
            x = mat[i * d + k]
            if x:
                out[i * d + j] += x * v
    return tuple(x % MODULUS for x in out)


def _enumerate_halves(args) -> list[tuple[tuple[int, ...], tuple]]:
    """Free-cancelled words of length <= half_len with the given first letter.

    ``first`` of None yields just the empty word.
    """
    n, half_len, points, first = args
    letters = alphabet(n)
    inv = [letters.index(g.inverse()) for g in letters]
    gens = _mod_generators(n, points)
    d = n * (n - 1) // 2
    ident = tuple(1 if i == j else 0 for i in range(d) for j in range(d))
    if first is None:
        return [((), tuple(ident for _ in points))]
    out = []
    stack = [((first,), tuple(_right_mul(ident, d, gens[first][p]) for p in range(len(points))))]
    while stack:
        word, mats = stack.pop()
        out.append((word, mats))
        if len(word) == half_len:
            continue
        for c in range(len(letters)):
            if c == inv[word[-1]]:
                continue
            stack.append((word + (c,), tuple(_right_mul(mats[p], d, gens[c][p]) for p in range(len(points)))))
    return out


def _automorphism_key(n: int, word: tuple[int, ...]) -> tuple:
    letters = alphabet(n)
    phi = FreeAutomorphism.identity(n)
    for c in word:
        phi = aut_compose(phi, generator_automorphism(n, letters[c]))
    return phi.images


def _pair_permutation_trivial(pi: tuple[int, ...]) -> bool:
    """True when pi fixes every unordered pair {k, l}.

    rho(w) = I forces this (compare at q = 1); for n >= 3 it means pi = id,
    for n = 2 every permutation qualifies.
    """
    n = len(pi)
    return n == 2 or all(pi[k] == k + 1 for k in range(n))


def _sort_key(w: GenWord):
    return (len(w), print_word(w))


def search_kernel(cfg: SearchConfig) -> list[KernelVerdict]:
    """Meet-in-the-middle search for nontrivial kernel words of length <= max_len.

    Half-words x, y with equal modular fingerprints but different
    automorphisms give the candidate x y^-1; candidates are confirmed
    exactly. One representative (shortest, then lexicographic) is returned
    per kernel element.
    """
    n = cfg.n
    letters = alphabet(n)
    points = cfg.points()
    jobs = [(n, cfg.half_len, points, None)]
    if cfg.half_len > 0:
        jobs += [(n, cfg.half_len, points, c) for c in range(len(letters))]
    if cfg.threads > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            parts = list(pool.map(_enumerate_halves, jobs))
    else:
        parts = [_enumerate_halves(j) for j in jobs]

    table: dict[tuple, list[tuple[int, ...]]] = {}
    for part in parts:
        for word, mats in part:
            table.setdefault(mats, []).append(word)

    # every reduced word of length <= max_len is x y^-1 for exactly one pair of
    # half-words with |x| - |y| in {0, 1} and no cancellation at the seam
    found: dict[tuple, GenWord] = {}
    for words in table.values():
        if len(words) < 2:
            continue
        by_class: dict[tuple, list[tuple[int, ...]]] = {}
        for word in words:
            by_class.setdefault(_automorphism_key(n, word), []).append(word)
        if len(by_class) < 2:
            continue
        for cls_x, cls_y in permutations(by_class.values(), 2):
            for x in cls_x:
                for y in cls_y:
                    if len(x) - len(y) not in (0, 1) or len(x) + len(y) > cfg.max_len:
                        continue
                    if y and x[-1] == y[-1]:
                        continue
                    cand = GenWord(n, tuple(letters[c] for c in x) + tuple(letters[c].inverse() for c in reversed(y)))
                    if not _pair_permutation_trivial(word_permutation(cand)):
                        continue
                    key = word_to_automorphism(cand).images
                    old = found.get(key)
                    if old is None or _sort_key(cand) < _sort_key(old):
                        found[key] = cand

    verdicts = []
    for w in sorted(found.values(), key=_sort_key):
        verdict = verify_kernel(w)
        if verdict.conclusion == IN_KERNEL:
            verdicts.append(verdict)
    return verdicts


def brute_force_kernel(n: int, max_len: int, point: int = 1_000_003) -> list[KernelVerdict]:
    """Every free-cancelled word of length <= max_len checked one by one.

    Words whose image at a single modular point is not the identity cannot
    be in the kernel; all others go through :func:`verify_kernel`.
    Results are grouped per kernel element like :func:`search_kernel`.
    """
    letters = alphabet(n)
    inv = [letters.index(g.inverse()) for g in letters]
    d = n * (n - 1) // 2
    gens = _mod_generators(n, [point])
    ident = tuple(1 if i == j else 0 for i in range(d) for j in range(d))
    found: dict[tuple, GenWord] = {}
    stack = [((), ident)]
    while stack:
        word, mat = stack.pop()
        if word and mat == ident:
            w = GenWord(n, tuple(letters[c] for c in word))
            verdict = verify_kernel(w)
            if verdict.conclusion == IN_KERNEL:
                key = word_to_automorphism(w).images
                if key not in found or _sort_key(w) < _sort_key(found[key]):
                    found[key] = w
        if len(word) == max_len:
            continue
        for c in range(len(letters)):
            if word and c == inv[word[-1]]:
                continue
            stack.append((word + (c,), _right_mul(mat, d, gens[c][0])))
    return [verify_kernel(w) for w in sorted(found.values(), key=_sort_key)]


def default_threads() -> int:
    return os.cpu_count() or 1
