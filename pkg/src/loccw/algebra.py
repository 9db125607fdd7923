"""Exact arithmetic: Gaussian rationals, rational matrices, row reduction, nullspaces.

Everything here is exact; ``fractions.Fraction`` is the rational carrier
(always reduced, positive denominator). No floats anywhere in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import DimensionMismatch

Rational = Fraction
Scalar = Union["GaussianRational", Fraction, int]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class GaussianRational:
    """Complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", as_fraction(re))
        object.__setattr__(self, "im", as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x: Scalar) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return cls(x)

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other) -> "GaussianRational":
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> "GaussianRational":
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other) -> "GaussianRational":
        return (-self) + other

    def __mul__(self, other) -> "GaussianRational":
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussianRational(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussianRational":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return GaussianRational(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            n = other.abs2()
            if not n:
                raise ZeroDivisionError("division by zero")
            return (self * other.conj()) / n
        return NotImplemented

    def __rtruediv__(self, other) -> "GaussianRational":
        return GaussianRational.coerce(other) / self

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    def abs_bound(self) -> Fraction:
        """Rational upper bound on the modulus: ``|re| + |im|``."""
        return abs(self.re) + abs(self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))


G0 = GaussianRational(0)
G1 = GaussianRational(1)

Vector = tuple  # tuple[GaussianRational, ...]
HMatrix = tuple  # tuple[tuple[GaussianRational, ...], ...]


def gvec(values: Iterable[Scalar]) -> tuple:
    return tuple(GaussianRational.coerce(v) for v in values)


def basis_vector(dim: int, index: int) -> tuple:
    """Standard basis vector, ``index`` is 1-based."""
    return tuple(G1 if k == index - 1 else G0 for k in range(dim))


def vdot(u: Sequence[GaussianRational], v: Sequence[GaussianRational]) -> GaussianRational:
    """``<u|v>``, first argument conjugated."""
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)} differ")
    re = _ZERO
    im = _ZERO
    for x, y in zip(u, v):
        if (x.re or x.im) and (y.re or y.im):
            # conj(x) * y
            re += x.re * y.re + x.im * y.im
            im += x.re * y.im - x.im * y.re
    return GaussianRational(re, im)


def norm2(u: Sequence[GaussianRational]) -> Fraction:
    return sum((x.abs2() for x in u), _ZERO)


def identity(p: int) -> HMatrix:
    return tuple(tuple(G1 if i == j else G0 for j in range(p)) for i in range(p))


def mat_add(x: HMatrix, y: HMatrix) -> HMatrix:
    return tuple(tuple(a + b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))


def mat_scale(x: HMatrix, c) -> HMatrix:
    return tuple(tuple(a * c for a in row) for row in x)


def is_hermitian(h: HMatrix) -> bool:
    p = len(h)
    return all(len(row) == p for row in h) and all(
        h[i][j] == h[j][i].conj() for i in range(p) for j in range(i, p)
    )


def is_scalar_multiple_of_identity(h: HMatrix) -> bool:
    p = len(h)
    return all(h[i][j] == (h[0][0] if i == j else 0) for i in range(p) for j in range(p))


def trace(h: HMatrix) -> GaussianRational:
    return sum((h[i][i] for i in range(len(h))), G0)


def hermitian_inner_form(u: Sequence[GaussianRational], h: HMatrix, v: Sequence[GaussianRational]) -> GaussianRational:
    """Exact ``conj(u)^T H v``."""
    p = len(h)
    if len(u) != p or len(v) != p or any(len(row) != p for row in h):
        raise DimensionMismatch(
            f"hermitian form needs matching sizes, got |u|={len(u)}, H {p}x?, |v|={len(v)}"
        )
    hv = [sum((h[i][j] * v[j] for j in range(p) if v[j] and h[i][j]), G0) for i in range(p)]
    return vdot(u, hv)


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major Fractions

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries for {self.rows}x{self.cols}, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(as_fraction(x) for r in rows for x in r))

    @classmethod
    def from_sparse_rows(cls, rows: Sequence[Mapping[int, Fraction]], cols: int) -> "RationalMatrix":
        entries = [_ZERO] * (len(rows) * cols)
        for i, row in enumerate(rows):
            base = i * cols
            for j, x in row.items():
                entries[base + j] = as_fraction(x)
        return cls(len(rows), cols, tuple(entries))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n)))

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def sparse_rows(self) -> list[dict[int, Fraction]]:
        c = self.cols
        e = self.entries
        return [{j: e[i * c + j] for j in range(c) if e[i * c + j]} for i in range(self.rows)]

    def matvec(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise DimensionMismatch(f"matrix has {self.cols} columns, vector has {len(v)} entries")
        return tuple(
            sum((a * b for a, b in zip(self.row(i), v) if a and b), _ZERO) for i in range(self.rows)
        )


def _reduce_sparse(rows: Iterable[Mapping[int, Fraction]]) -> dict[int, dict[int, Fraction]]:
    """Incremental Gauss-Jordan over sparse rows.

    Returns pivot column -> pivot row. Every pivot row has a leading 1 and
    zeros in all other pivot columns, so the sorted rows are the (unique)
    reduced row echelon form.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for src in rows:
        r = {j: as_fraction(x) for j, x in src.items() if x}
        for c in [c for c in r if c in pivots]:
            f = r.get(c)
            if not f:
                continue
            for j, x in pivots[c].items():
                y = r.get(j, _ZERO) - f * x
                if y:
                    r[j] = y
                else:
                    r.pop(j, None)
        if not r:
            continue
        lead = min(r)
        inv = 1 / r[lead]
        if inv != 1:
            r = {j: x * inv for j, x in r.items()}
        for prow in pivots.values():
            f = prow.get(lead)
            if f:
                for j, x in r.items():
                    y = prow.get(j, _ZERO) - f * x
                    if y:
                        prow[j] = y
                    else:
                        prow.pop(j, None)
        pivots[lead] = r
    return pivots


def rref(m: RationalMatrix) -> tuple[int, RationalMatrix]:
    """Reduced row echelon form; returns ``(rank, reduced)`` with ``reduced`` of the same shape."""
    pivots = _reduce_sparse(m.sparse_rows())
    ordered = [pivots[c] for c in sorted(pivots)]
    ordered += [{}] * (m.rows - len(ordered))
    return len(pivots), RationalMatrix.from_sparse_rows(ordered, m.cols)


def nullspace_sparse(rows: Iterable[Mapping[int, Fraction]], cols: int) -> list[tuple]:
    pivots = _reduce_sparse(rows)
    free = [j for j in range(cols) if j not in pivots]
    basis = []
    for f in free:
        v = [_ZERO] * cols
        v[f] = _ONE
        for c, prow in pivots.items():
            x = prow.get(f)
            if x:
                v[c] = -x
        basis.append(tuple(v))
    return basis


def nullspace(m: RationalMatrix) -> list[tuple]:
    """Basis of ``{v : m v = 0}``, one vector per free column (free entry set to 1)."""
    return nullspace_sparse(m.sparse_rows(), m.cols)


def rank(m: RationalMatrix) -> int:
    return len(_reduce_sparse(m.sparse_rows()))
