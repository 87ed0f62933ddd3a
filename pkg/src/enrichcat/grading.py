"""Finite groups and G-gradings with homogeneous objects."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .report import ValidationReport


@dataclass(frozen=True)
class FiniteGroup:
    names: tuple
    table: tuple
    identity: int
    inverse: tuple
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.names)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def index(self, name) -> int:
        if isinstance(name, int):
            return name
        return self.names.index(str(name))


def cyclic(n: int, name: str = "") -> FiniteGroup:
    table = tuple(tuple((g + h) % n for h in range(n)) for g in range(n))
    return FiniteGroup(tuple(str(g) for g in range(n)), table, 0,
                       tuple((-g) % n for g in range(n)), name=name or f"Z{n}")


def trivial_group() -> FiniteGroup:
    return cyclic(1, "1")


def validate_group(G: FiniteGroup) -> ValidationReport:
    report = ValidationReport()
    n = G.order
    if (len(G.table) != n or any(len(r) != n for r in G.table)
            or any(not (0 <= x < n) for r in G.table for x in r)
            or not (0 <= G.identity < n) or len(G.inverse) != n
            or any(not (0 <= x < n) for x in G.inverse)):
        report.malformed.append("group table malformed")
        return report
    nm, e = G.names, G.identity
    for g in range(n):
        report.record("group.identity", G.mul(e, g) == g == G.mul(g, e), (nm[g],))
        report.record("group.inverse", G.mul(g, G.inverse[g]) == e == G.mul(G.inverse[g], g), (nm[g],))
    for g, h, k in product(range(n), repeat=3):
        report.record("group.assoc", G.mul(G.mul(g, h), k) == G.mul(g, G.mul(h, k)), (nm[g], nm[h], nm[k]))
    return report


@dataclass
class GradingAssignment:
    """``degree[object index] = group element index``."""

    group: FiniteGroup
    degree: dict

    def __call__(self, a: int) -> int:
        return self.degree[a]

    @classmethod
    def from_names(cls, group: FiniteGroup, names, by_name: dict) -> "GradingAssignment":
        names = list(names)
        return cls(group, {names.index(k): group.index(v) for k, v in by_name.items()})


def _multiplicative(objects, unit, table, nm, g: GradingAssignment, report, prefix):
    G = g.group
    missing = [o for o in objects if o not in g.degree]
    if missing:
        report.malformed.append(f"no degree for {', '.join(str(nm(o)) for o in missing)}")
        return False
    report.record(f"{prefix}.unit_degree", g(unit) == G.identity, (nm(unit),))
    for a, b in product(objects, repeat=2):
        report.record(f"{prefix}.multiplicative", g(table[a][b]) == G.mul(g(a), g(b)), (nm(a), nm(b)))
    return True


def validate_graded_vmoncat(C, g: GradingAssignment) -> ValidationReport:
    """Multiplicative degrees, zero hom objects across grades, every grade inhabited."""
    report = validate_group(g.group)
    if not _multiplicative(C.objects, C.unit, C.tensor_table, C.nm, g, report, "graded"):
        return report
    V, G = C.base, g.group
    for a, b in product(C.objects, repeat=2):
        if g(a) != g(b):
            report.record("graded.cross_grade_zero", V.is_zero_object(C.hom(a, b)), (C.nm(a), C.nm(b)))
    for k in range(G.order):
        inhabited = any(g(a) == g(b) == k and not V.is_zero_object(C.hom(a, b))
                        for a, b in product(C.objects, repeat=2))
        report.record("graded.faithful", inhabited, (G.names[k],), "" if inhabited else "empty grade")
    return report


def validate_graded_modtens(M, g: GradingAssignment, cells=()) -> ValidationReport:
    """As for the enriched side, plus ``F(v)`` in the neutral grade; ``cells`` are
    ``(cell, source_grading, target_grading)`` triples checked for degree preservation."""
    report = validate_group(g.group)
    A, G = M.A, g.group
    if not _multiplicative(A.objects, A.unit, A.tensor_table, A._nm, g, report, "graded"):
        return report
    for a, b in product(A.objects, repeat=2):
        if g(a) != g(b):
            report.record("graded.cross_grade_zero", A.dim(a, b) == 0, (A._nm(a), A._nm(b)))
    for k in range(G.order):
        inhabited = any(g(a) == k and A.dim(a, a) for a in A.objects)
        report.record("graded.faithful", inhabited, (G.names[k],), "" if inhabited else "empty grade")
    for v in M.live_objects:
        report.record("graded.F_neutral", g(M.F(v)) == G.identity, (M.V._nm(v), A._nm(M.F(v))))
    for cell, gs, gt in cells:
        validate_graded_cell1(cell, gs, gt, report)
    return report


def validate_graded_cell1(cell, gs: GradingAssignment, gt: GradingAssignment, report=None) -> ValidationReport:
    report = report if report is not None else ValidationReport()
    R = cell.R
    for a in R.source.objects:
        report.record("graded.cell1_degree", gt(R(a)) == gs(a), (cell.name, R.source._nm(a)))
    return report


def validate_graded_functor(F, gs: GradingAssignment, gt: GradingAssignment, report=None) -> ValidationReport:
    report = report if report is not None else ValidationReport()
    for a in F.source.objects:
        report.record("graded.functor_degree", gt(F(a)) == gs(a), (F.name, F.source.nm(a)))
    return report
