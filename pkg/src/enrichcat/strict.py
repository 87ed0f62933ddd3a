"""Strict linear monoidal categories presented by structure constants.

Objects are indices ``0..n-1``. Each hom space ``C(i -> j)`` has an implicit
ordered basis of size ``hom_dim[i][j]``; a morphism is a coefficient vector
over it. Composition and tensor product are bilinear maps stored sparsely
as ``(p, q, r, c)`` entries: basis ``p`` of the first factor times basis ``q``
of the second contributes ``c`` times basis ``r`` of the result.

Composition is written left to right: ``compose(f, g)`` is "f, then g".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .linalg import ONE, ZERO, Matrix, scalar, solve
from .report import ValidationReport


@dataclass(frozen=True)
class Mor:
    """A morphism ``src -> dst``: a coefficient vector over the hom basis."""

    src: int
    dst: int
    coeffs: tuple

    def __add__(self, other: "Mor") -> "Mor":
        self._same_hom(other)
        return Mor(self.src, self.dst, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Mor") -> "Mor":
        self._same_hom(other)
        return Mor(self.src, self.dst, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Mor":
        return Mor(self.src, self.dst, tuple(-a for a in self.coeffs))

    def __rmul__(self, c) -> "Mor":
        c = scalar(c)
        return Mor(self.src, self.dst, tuple(c * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _same_hom(self, other):
        if (self.src, self.dst) != (other.src, other.dst):
            raise ValueError(f"hom mismatch {self.src}->{self.dst} vs {other.src}->{other.dst}")


class CompositionError(ValueError):
    pass


def _contract(entries, x, y, out):
    for p, q, r, c in entries:
        a = x[p]
        if a:
            b = y[q]
            if b:
                out[r] += a * b * c


class StrictLinearMonoidal:
    """Shared engine for the base category and for underlying categories."""

    def __init__(self, names, unit, tensor_table, hom_dim, identities, compose_sc, tensor_sc,
                 name: str = "", zero: Optional[int] = None):
        self.name = name
        self.names = tuple(names)
        self.unit = unit
        self.tensor_table = tuple(tuple(r) for r in tensor_table)
        self.hom_dim = tuple(tuple(r) for r in hom_dim)
        self.identities = tuple(tuple(v) for v in identities)
        self.compose_sc = {k: tuple(v) for k, v in compose_sc.items() if v}
        self.tensor_sc = {k: tuple(v) for k, v in tensor_sc.items() if v}
        self.zero = zero

    # -- objects ---------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def objects(self) -> range:
        return range(self.n)

    def index(self, name) -> int:
        if isinstance(name, int):
            return name
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"{self.name or 'category'} has no object {name!r}") from None

    def tensor_obj(self, *objs: int) -> int:
        out = self.unit
        for o in objs:
            out = self.tensor_table[out][o]
        return out

    def dim(self, i: int, j: int) -> int:
        return self.hom_dim[i][j]

    def is_zero_object(self, i: int) -> bool:
        return self.hom_dim[i][i] == 0

    # -- morphisms -------------------------------------------------------
    def mor(self, src: int, dst: int, coeffs: Sequence) -> Mor:
        coeffs = tuple(scalar(c) for c in coeffs)
        if len(coeffs) != self.hom_dim[src][dst]:
            raise CompositionError(
                f"{len(coeffs)} coefficients for a hom space of dimension {self.hom_dim[src][dst]}")
        return Mor(src, dst, coeffs)

    def zero_mor(self, src: int, dst: int) -> Mor:
        return Mor(src, dst, (ZERO,) * self.hom_dim[src][dst])

    def id(self, i: int) -> Mor:
        return Mor(i, i, self.identities[i])

    def basis(self, src: int, dst: int) -> list:
        d = self.hom_dim[src][dst]
        return [Mor(src, dst, tuple(ONE if k == m else ZERO for k in range(d))) for m in range(d)]

    def compose(self, f: Mor, *rest: Mor) -> Mor:
        for g in rest:
            f = self._compose2(f, g)
        return f

    def _compose2(self, f: Mor, g: Mor) -> Mor:
        if f.dst != g.src:
            raise CompositionError(
                f"cannot compose {self._nm(f.src)}->{self._nm(f.dst)} with {self._nm(g.src)}->{self._nm(g.dst)}")
        out = [ZERO] * self.hom_dim[f.src][g.dst]
        _contract(self.compose_sc.get((f.src, f.dst, g.dst), ()), f.coeffs, g.coeffs, out)
        return Mor(f.src, g.dst, tuple(out))

    def tensor(self, f: Mor, *rest: Mor) -> Mor:
        for g in rest:
            f = self._tensor2(f, g)
        return f

    def _tensor2(self, f: Mor, g: Mor) -> Mor:
        src = self.tensor_table[f.src][g.src]
        dst = self.tensor_table[f.dst][g.dst]
        out = [ZERO] * self.hom_dim[src][dst]
        _contract(self.tensor_sc.get((f.src, f.dst, g.src, g.dst), ()), f.coeffs, g.coeffs, out)
        return Mor(src, dst, tuple(out))

    def whisker(self, *parts) -> Mor:
        """Tensor a row of morphisms, where bare object indices stand for identities."""
        mors = [self.id(p) if isinstance(p, int) else p for p in parts]
        return self.tensor(*mors)

    def linear_map(self, fn, src_hom: tuple, dst_hom: tuple) -> Matrix:
        """Matrix of a linear map given by its action on the basis of ``src_hom``."""
        cols = []
        for b in self.basis(*src_hom):
            y = fn(b)
            cols.append(y.coeffs)
        return Matrix.from_columns(cols, self.hom_dim[dst_hom[0]][dst_hom[1]])

    def invert(self, f: Mor) -> Optional[Mor]:
        """Two-sided inverse of ``f`` or None."""
        a, b = f.src, f.dst
        pre = self.linear_map(lambda g: self.compose(f, g), (b, a), (a, a))
        g = solve(pre, self.identities[a])
        if g is None:
            return None
        g = Mor(b, a, g)
        if self.compose(g, f) != self.id(b):
            return None
        return g

    def is_iso(self, f: Mor) -> bool:
        return self.invert(f) is not None

    def _nm(self, i):
        return self.names[i] if 0 <= i < self.n else i

    # -- structural validation ------------------------------------------
    def structure_problems(self) -> list:
        """Out-of-range tables and wrongly sized constants; empty when well formed."""
        probs = []
        n = self.n
        if not (0 <= self.unit < n):
            probs.append(f"unit {self.unit} out of range")
        if len(self.tensor_table) != n or any(len(r) != n for r in self.tensor_table):
            probs.append("tensor table is not n x n")
        else:
            for i, j in product(range(n), repeat=2):
                if not (0 <= self.tensor_table[i][j] < n):
                    probs.append(f"tensor table entry ({i},{j}) out of range")
        if len(self.hom_dim) != n or any(len(r) != n for r in self.hom_dim):
            probs.append("hom_dim is not n x n")
            return probs
        if any(d < 0 for r in self.hom_dim for d in r):
            probs.append("negative hom dimension")
        if len(self.identities) != n:
            probs.append("identity list has wrong length")
        else:
            for i in range(n):
                if len(self.identities[i]) != self.hom_dim[i][i]:
                    probs.append(f"identity of {self._nm(i)} has wrong length")
        if probs:
            return probs
        for (i, j, k), ents in self.compose_sc.items():
            if not all(0 <= x < n for x in (i, j, k)):
                probs.append(f"compose key {(i, j, k)} out of range")
                continue
            for p, q, r, _ in ents:
                if not (p < self.hom_dim[i][j] and q < self.hom_dim[j][k] and r < self.hom_dim[i][k]):
                    probs.append(f"compose entry {(p, q, r)} out of range at {(i, j, k)}")
        for (i, j, k, l), ents in self.tensor_sc.items():
            if not all(0 <= x < n for x in (i, j, k, l)):
                probs.append(f"tensor key {(i, j, k, l)} out of range")
                continue
            s, t = self.tensor_table[i][k], self.tensor_table[j][l]
            for p, q, r, _ in ents:
                if not (p < self.hom_dim[i][j] and q < self.hom_dim[k][l] and r < self.hom_dim[s][t]):
                    probs.append(f"tensor entry {(p, q, r)} out of range at {(i, j, k, l)}")
        return probs

    def validate_category(self, report: ValidationReport, prefix: str):
        nm = self._nm
        for i, j in product(self.objects, repeat=2):
            for f in self.basis(i, j):
                m = f.coeffs.index(ONE)
                report.record(f"{prefix}.compose.unit_left", self.compose(self.id(i), f) == f,
                              (nm(i), nm(j), m))
                report.record(f"{prefix}.compose.unit_right", self.compose(f, self.id(j)) == f,
                              (nm(i), nm(j), m))
        for i, j, k, l in product(self.objects, repeat=4):
            dims = (self.hom_dim[i][j], self.hom_dim[j][k], self.hom_dim[k][l])
            if 0 in dims:
                continue
            for f, g, h in product(self.basis(i, j), self.basis(j, k), self.basis(k, l)):
                lhs = self.compose(self.compose(f, g), h)
                rhs = self.compose(f, self.compose(g, h))
                report.record(f"{prefix}.compose.assoc", lhs == rhs,
                              (nm(i), nm(j), nm(k), nm(l)) + _bidx(f, g, h))

    def validate_monoidal(self, report: ValidationReport, prefix: str):
        nm = self._nm
        T = self.tensor_table
        for i in self.objects:
            report.record(f"{prefix}.tensor_table.unit", T[self.unit][i] == i == T[i][self.unit], (nm(i),))
        for i, j, k in product(self.objects, repeat=3):
            report.record(f"{prefix}.tensor_table.assoc", T[T[i][j]][k] == T[i][T[j][k]],
                          (nm(i), nm(j), nm(k)))
        if not report.ok:
            return
        for i, j in product(self.objects, repeat=2):
            report.record(f"{prefix}.tensor.identity",
                          self.tensor(self.id(i), self.id(j)) == self.id(T[i][j]), (nm(i), nm(j)))
        for i, j in product(self.objects, repeat=2):
            for f in self.basis(i, j):
                u = self.id(self.unit)
                report.record(f"{prefix}.tensor.unit",
                              self.tensor(u, f) == f == self.tensor(f, u), (nm(i), nm(j)) + _bidx(f))
        objs = list(self.objects)
        for i, j, k in product(objs, repeat=3):
            if self.hom_dim[i][j] == 0 or self.hom_dim[j][k] == 0:
                continue
            for l, m, o in product(objs, repeat=3):
                if self.hom_dim[l][m] == 0 or self.hom_dim[m][o] == 0:
                    continue
                for f, f2, g, g2 in product(self.basis(i, j), self.basis(j, k),
                                            self.basis(l, m), self.basis(m, o)):
                    lhs = self.compose(self.tensor(f, g), self.tensor(f2, g2))
                    rhs = self.tensor(self.compose(f, f2), self.compose(g, g2))
                    report.record(f"{prefix}.tensor.interchange", lhs == rhs,
                                  (nm(i), nm(j), nm(k), nm(l), nm(m), nm(o)) + _bidx(f, f2, g, g2))
        homs = [(i, j) for i, j in product(objs, repeat=2) if self.hom_dim[i][j]]
        for (a, b), (c, d), (e, f_) in product(homs, repeat=3):
            for x, y, z in product(self.basis(a, b), self.basis(c, d), self.basis(e, f_)):
                lhs = self.tensor(self.tensor(x, y), z)
                rhs = self.tensor(x, self.tensor(y, z))
                report.record(f"{prefix}.tensor.assoc", lhs == rhs,
                              (nm(a), nm(b), nm(c), nm(d), nm(e), nm(f_)) + _bidx(x, y, z))


def _bidx(*mors: Mor) -> tuple:
    """Basis indices of basis vectors, used as witnesses."""
    out = []
    for m in mors:
        out.append(next((k for k, c in enumerate(m.coeffs) if c), -1))
    return tuple(out)


def entries_from_dense(tensor3) -> tuple:
    """Sparse ``(p, q, r, c)`` entries from a nested ``[p][q][r]`` array."""
    out = []
    for p, plane in enumerate(tensor3):
        for q, row in enumerate(plane):
            for r, c in enumerate(row):
                c = scalar(c)
                if c:
                    out.append((p, q, r, c))
    return tuple(out)


def bilinear_entries(fn, basis_x: list, basis_y: list) -> tuple:
    """Sparse structure constants of a bilinear map evaluated on basis pairs."""
    out = []
    for p, x in enumerate(basis_x):
        for q, y in enumerate(basis_y):
            z = fn(x, y)
            for r, c in enumerate(z.coeffs):
                if c:
                    out.append((p, q, r, Fraction(c)))
    return tuple(out)
