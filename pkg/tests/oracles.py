"""Independent reference computations used by the tests.

Nothing here imports the evaluation paths it is compared against.
"""
from __future__ import annotations

import sympy
from sympy.combinatorics.free_groups import free_group

q = sympy.Symbol("q")

# Explicit matrices, typed again from the displays, as sympy objects.
SYMPY_GENS = {
    3: {
        "s1": [[q**2, q*(q-1), 0], [0, 1-q, 1], [0, q, 0]],
        "s2": [[1-q, 1, 0], [q, 0, 0], [q*(q-1), 0, q**2]],
        "a1": [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
        "a2": [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
    },
    4: {
        "s1": [[q**2, q*(q-1), q*(q-1), 0, 0, 0], [0, 1-q, 0, 1, 0, 0], [0, 0, 1-q, 0, 1, 0],
               [0, q, 0, 0, 0, 0], [0, 0, q, 0, 0, 0], [0, 0, 0, 0, 0, 1]],
        "s2": [[1-q, 1, 0, 0, 0, 0], [q, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0],
               [q*(q-1), 0, 0, q**2, q*(q-1), 0], [0, 0, 0, 0, 1-q, 1], [0, 0, 0, 0, q, 0]],
        "s3": [[1, 0, 0, 0, 0, 0], [0, 1-q, 1, 0, 0, 0], [0, q, 0, 0, 0, 0],
               [0, 0, 0, 1-q, 1, 0], [0, 0, 0, q, 0, 0], [0, q*(q-1), 0, q*(q-1), 0, q**2]],
        "a1": [[1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0],
               [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 0, 1]],
        "a2": [[0, 1, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0],
               [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1], [0, 0, 0, 0, 1, 0]],
        "a3": [[1, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 1, 0, 0, 0, 0],
               [0, 0, 0, 0, 1, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1]],
    },
}


def sympy_word_matrix(text: str, n: int) -> sympy.Matrix:
    """Left-to-right product of the displayed matrices; ``S2`` is inverted by sympy."""
    gens = SYMPY_GENS[n]
    m = sympy.eye(n * (n - 1) // 2)
    for tok in text.split():
        g = sympy.Matrix(gens[tok.lower()])
        if tok[0] == "S":
            g = g.inv()
        m = m * g
    return m.applyfunc(lambda e: sympy.simplify(e))


def laplace_det(rows):
    """Cofactor expansion along the first row, entries as sympy expressions."""
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, e in enumerate(rows[0]):
        if e == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * e * laplace_det(minor)
    return sympy.expand(total)


def sympy_action(text: str, n: int):
    """Images of x_1..x_n under the word, via substitution in sympy's FreeGroup."""
    F, *xs = free_group(",".join(f"x{i}" for i in range(1, n + 1)))

    def gen_images(tok):
        i = int(tok[1:])
        imgs = list(xs)
        if tok[0] == "a":
            imgs[i - 1], imgs[i] = xs[i], xs[i - 1]
        elif tok[0] == "s":
            imgs[i - 1], imgs[i] = xs[i - 1] * xs[i] * xs[i - 1] ** -1, xs[i - 1]
        else:
            imgs[i - 1], imgs[i] = xs[i], xs[i] ** -1 * xs[i - 1] * xs[i]
        return imgs

    def substitute(word, imgs):
        out = F.identity
        for sym, exp in word.array_form:
            k = int(str(sym)[1:]) - 1
            out = out * imgs[k] ** exp
        return out

    # phi = g_1 o ... o g_m: phi(x) = g_1(g_2(...g_m(x)))
    current = list(xs)
    for tok in reversed(text.split()):
        imgs = gen_images(tok)
        current = [substitute(c, imgs) for c in current]
    return current


def stack_reduce(letters):
    out = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def ext_euclid_inverse(a: int, p: int) -> int:
    old_r, r, old_s, s_ = a % p, p, 1, 0
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s_ = s_, old_s - quo * s_
    assert old_r == 1
    return old_s % p
