"""Dense square matrices over integer Laurent polynomials.

Products are exact. Determinant and inverse use fraction-free (Bareiss)
elimination so every intermediate division is exact in Z[q, q^-1].
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .laurent import (
    MODULUS,
    ONE,
    ZERO,
    LaurentPoly,
    ZeroSpecialization,
    from_json,
    lp_div_exact,
    lp_eval_complex,
    lp_eval_mod,
    lp_is_unit,
    lp_sum,
    to_json,
    to_text,
)

COMPLEX_TOL = 1e-9


class DimMismatch(ValueError):
    pass


class NotInvertibleOverRing(ArithmeticError):
    pass


@dataclass(frozen=True)
class PolyMatrix:
    dim: int
    entries: tuple[tuple[LaurentPoly, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PolyMatrix":
        rows = tuple(
            tuple(e if isinstance(e, LaurentPoly) else LaurentPoly.const(e) for e in row)
            for row in rows
        )
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise DimMismatch("matrix must be square")
        return cls(d, rows)

    @classmethod
    def identity(cls, d: int) -> "PolyMatrix":
        return cls(d, tuple(tuple(ONE if i == j else ZERO for j in range(d)) for i in range(d)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return mat_mul(self, other)

    def is_identity(self) -> bool:
        return all(
            (e.is_one() if i == j else e.is_zero())
            for i, row in enumerate(self.entries)
            for j, e in enumerate(row)
        )

    def __str__(self):
        return to_grid(self)


def mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.dim != b.dim:
        raise DimMismatch(f"{a.dim} != {b.dim}")
    d = a.dim
    cols = [[b.entries[k][j] for k in range(d)] for j in range(d)]
    rows = []
    for row in a.entries:
        nz = [(k, e) for k, e in enumerate(row) if e]
        rows.append(tuple(lp_sum(e * col[k] for k, e in nz if col[k]) for col in cols))
    return PolyMatrix(d, tuple(rows))


def _bareiss(rows: list[list[LaurentPoly]], ncols: int, jordan: bool) -> tuple[int, LaurentPoly]:
    """In-place fraction-free elimination on the square left block.

    Returns (sign of row permutation, last pivot). Last pivot is ZERO when
    the left block is singular. With ``jordan`` the rows above each pivot
    are cleared too, leaving ``pivot * I`` on the left.
    """
    d = len(rows)
    sign = 1
    prev = ONE
    for k in range(d):
        piv = next((r for r in range(k, d) if rows[r][k]), None)
        if piv is None:
            return sign, ZERO
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pk = rows[k]
        akk = pk[k]
        targets = range(d) if jordan else range(k + 1, d)
        for i in targets:
            if i == k:
                continue
            ri = rows[i]
            aik = ri[k]
            start = 0 if jordan else k + 1
            for j in range(start, ncols):
                if j == k:
                    continue
                v = akk * ri[j]
                if aik and pk[j]:
                    v = v - aik * pk[j]
                ri[j] = lp_div_exact(v, prev) if v else ZERO
            ri[k] = ZERO
        prev = akk
    return sign, prev


def mat_det(a: PolyMatrix) -> LaurentPoly:
    rows = [list(r) for r in a.entries]
    sign, last = _bareiss(rows, a.dim, jordan=False)
    return last if sign > 0 else -last


def mat_inverse(a: PolyMatrix) -> PolyMatrix:
    """Exact inverse over Z[q, q^-1]; the determinant must be ``+-q^k``."""
    d = a.dim
    rows = [list(r) + [ONE if i == j else ZERO for j in range(d)] for i, r in enumerate(a.entries)]
    _, last = _bareiss(rows, 2 * d, jordan=True)
    unit = lp_is_unit(last) if last else None
    if unit is None:
        raise NotInvertibleOverRing(f"determinant {to_text(last)} is not a unit")
    s, k = unit
    inv_unit = LaurentPoly.monomial(s, -k)
    return PolyMatrix(d, tuple(tuple(e * inv_unit for e in r[d:]) for r in rows))


def mat_specialize(a: PolyMatrix, q0) -> "ComplexMatrix | ModularMatrix":
    """Entry-wise evaluation at a complex number or a :class:`ModPoint`."""
    if isinstance(q0, ModPoint):
        if q0.residue % q0.modulus == 0:
            raise ZeroSpecialization("q must be a unit mod p")
        return ModularMatrix(
            a.dim,
            tuple(tuple(lp_eval_mod(e, q0.residue, q0.modulus) for e in row) for row in a.entries),
            q0.modulus,
        )
    q0 = complex(q0)
    if q0 == 0:
        raise ZeroSpecialization("q must be nonzero")
    return ComplexMatrix(a.dim, tuple(tuple(lp_eval_complex(e, q0) for e in row) for row in a.entries))


@dataclass(frozen=True)
class ModPoint:
    residue: int
    modulus: int = MODULUS


@dataclass(frozen=True)
class ComplexMatrix:
    dim: int
    entries: tuple[tuple[complex, ...], ...]

    def __matmul__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        if self.dim != other.dim:
            raise DimMismatch(f"{self.dim} != {other.dim}")
        d = self.dim
        return ComplexMatrix(d, tuple(
            tuple(sum(row[k] * other.entries[k][j] for k in range(d)) for j in range(d))
            for row in self.entries
        ))

    def max_dev_from_identity(self) -> float:
        return max(
            abs(e - (1 if i == j else 0))
            for i, row in enumerate(self.entries) for j, e in enumerate(row)
        )

    def is_identity(self, tol: float = COMPLEX_TOL) -> bool:
        return self.max_dev_from_identity() <= tol


@dataclass(frozen=True)
class ModularMatrix:
    dim: int
    entries: tuple[tuple[int, ...], ...]
    modulus: int = MODULUS

    def __matmul__(self, other: "ModularMatrix") -> "ModularMatrix":
        if self.dim != other.dim or self.modulus != other.modulus:
            raise DimMismatch("incompatible modular matrices")
        d, p = self.dim, self.modulus
        return ModularMatrix(d, tuple(
            tuple(sum(row[k] * other.entries[k][j] for k in range(d)) % p for j in range(d))
            for row in self.entries
        ), p)

    def is_identity(self) -> bool:
        return all(e == (1 if i == j else 0) for i, row in enumerate(self.entries) for j, e in enumerate(row))


# -- serialization -----------------------------------------------------------

def to_json_obj(a: PolyMatrix) -> dict:
    return {"dim": a.dim, "entries": [[to_json(e) for e in row] for row in a.entries]}


def from_json_obj(obj: dict) -> PolyMatrix:
    m = PolyMatrix.from_rows([[from_json(e) for e in row] for row in obj["entries"]])
    if m.dim != obj["dim"]:
        raise DimMismatch("dim field disagrees with entries")
    return m


def to_grid(a, fmt=None) -> str:
    """Aligned text grid; ``fmt`` renders one entry (default: canonical text)."""
    if fmt is None:
        fmt = to_text if isinstance(a, PolyMatrix) else _fmt_complex
    cells = [[fmt(e) for e in row] for row in a.entries]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def _fmt_complex(z: complex) -> str:
    re_, im = z.real, z.imag
    if abs(re_) < 1e-12:
        re_ = 0.0
    if abs(im) < 1e-12:
        return f"{re_:.6g}"
    return f"{re_:.6g}{im:+.6g}j"
