"""The enriching category: a finite, strict, skeletal braided monoidal linear
category, optionally rigid, given entirely by structure constants."""

from __future__ import annotations

from itertools import product
from typing import Optional

from .report import ValidationReport
from .strict import Mor, StrictLinearMonoidal, _bidx


class MalformedBase(ValueError):
    pass


class MissingDuality(ValueError):
    pass


class PresentedBase(StrictLinearMonoidal):
    """Structure constants plus a braiding ``braiding[(u, v)]: u v -> v u``.

    ``duality`` maps each object ``i`` to ``(dual, ev, coev)`` with
    ``ev: dual(i) i -> 1`` and ``coev: 1 -> i dual(i)`` as coefficient tuples.
    """

    def __init__(self, names, unit, tensor_table, hom_dim, identities, compose_sc, tensor_sc,
                 braiding, duality=None, name: str = "", zero: Optional[int] = None):
        super().__init__(names, unit, tensor_table, hom_dim, identities, compose_sc, tensor_sc,
                         name=name, zero=zero)
        self.braiding = {k: tuple(v) for k, v in braiding.items()}
        self.duality = None if duality is None else {
            i: (d, tuple(ev), tuple(coev)) for i, (d, ev, coev) in duality.items()}

    def braid(self, u: int, v: int) -> Mor:
        T = self.tensor_table
        coeffs = self.braiding.get((u, v), ())
        return Mor(T[u][v], T[v][u], coeffs)

    def braid_inverse(self, u: int, v: int) -> Mor:
        inv = self.invert(self.braid(u, v))
        if inv is None:
            raise ValueError(f"braiding at ({self._nm(u)}, {self._nm(v)}) is not invertible")
        return inv

    @property
    def rigid(self) -> bool:
        return self.duality is not None

    def dual(self, i: int) -> int:
        if self.duality is None:
            raise MissingDuality(f"{self.name or 'base'} carries no duality data")
        return self.duality[i][0]

    def ev(self, i: int) -> Mor:
        d, ev, _ = self._dual_entry(i)
        return Mor(self.tensor_table[d][i], self.unit, ev)

    def coev(self, i: int) -> Mor:
        d, _, coev = self._dual_entry(i)
        return Mor(self.unit, self.tensor_table[i][d], coev)

    def _dual_entry(self, i):
        if self.duality is None:
            raise MissingDuality(f"{self.name or 'base'} carries no duality data")
        return self.duality[i]

    def internal_hom(self, u: int, v: int) -> int:
        """The rigid model ``u* v`` of the internal hom ``[u, v]``."""
        return self.tensor_table[self.dual(u)][v]

    # The adjunction V(u w -> v) = V(w -> [u, v]) uses the duality data of
    # u*, whose own dual is u again (checked by validate_base).
    def hom_unit(self, u: int, w: int) -> Mor:
        """``w -> [u, u w]``: coev of u* whiskered by w."""
        return self.tensor(self.coev(self.dual(u)), self.id(w))

    def hom_counit(self, u: int, v: int) -> Mor:
        """``u [u, v] -> v``: ev of u* whiskered by v."""
        return self.tensor(self.ev(self.dual(u)), self.id(v))

    def curry(self, u: int, w: int, h: Mor) -> Mor:
        """Mate of ``h: u w -> v`` as ``w -> [u, v]``."""
        if h.src != self.tensor_table[u][w]:
            raise ValueError("curry: source is not u w")
        du = self.dual(u)
        return self.compose(self.hom_unit(u, w), self.tensor(self.id(du), h))

    def uncurry(self, u: int, v: int, k: Mor) -> Mor:
        """Inverse of :meth:`curry`: ``k: w -> [u, v]`` becomes ``u w -> v``."""
        if k.dst != self.internal_hom(u, v):
            raise ValueError("uncurry: target is not [u, v]")
        return self.compose(self.tensor(self.id(u), k), self.hom_counit(u, v))


def compose_v(base: PresentedBase, f: Mor, g: Mor) -> Mor:
    return base.compose(f, g)


def tensor_v(base: PresentedBase, f: Mor, g: Mor) -> Mor:
    return base.tensor(f, g)


def braid(base: PresentedBase, u, v) -> Mor:
    return base.braid(base.index(u), base.index(v))


def internal_hom(base: PresentedBase, u, v) -> int:
    return base.internal_hom(base.index(u), base.index(v))


def validate_base(base: PresentedBase) -> ValidationReport:
    """Enumerate every axiom instance of a strict braided (rigid) linear category."""
    report = ValidationReport()
    probs = base.structure_problems() + _braid_structure_problems(base)
    if probs:
        report.malformed.extend(probs)
        return report
    base.validate_category(report, "base")
    base.validate_monoidal(report, "base")
    if not report.ok:
        return report
    _validate_zero(base, report)
    _validate_braiding(base, report)
    if base.rigid:
        _validate_duality(base, report)
    return report


def _braid_structure_problems(base: PresentedBase) -> list:
    probs = []
    n, T = base.n, base.tensor_table
    if base.structure_problems():
        return probs
    for u, v in product(range(n), repeat=2):
        got = len(base.braiding.get((u, v), ()))
        want = base.hom_dim[T[u][v]][T[v][u]]
        if got != want:
            probs.append(f"braiding ({base._nm(u)},{base._nm(v)}) has {got} coefficients, expected {want}")
    if base.zero is not None and not (0 <= base.zero < n):
        probs.append("zero object out of range")
    if base.duality is not None:
        for i in range(n):
            if i not in base.duality:
                probs.append(f"no dual recorded for {base._nm(i)}")
                continue
            d, ev, coev = base.duality[i]
            if not (0 <= d < n):
                probs.append(f"dual of {base._nm(i)} out of range")
                continue
            if len(ev) != base.hom_dim[T[d][i]][base.unit]:
                probs.append(f"ev of {base._nm(i)} has wrong length")
            if len(coev) != base.hom_dim[base.unit][T[i][d]]:
                probs.append(f"coev of {base._nm(i)} has wrong length")
    return probs


def _validate_zero(base: PresentedBase, report: ValidationReport):
    z = base.zero
    if z is None:
        return
    for i in base.objects:
        report.record("base.zero.homs", base.hom_dim[z][i] == 0 == base.hom_dim[i][z], (base._nm(i),))


def _validate_braiding(base: PresentedBase, report: ValidationReport):
    nm, T = base._nm, base.tensor_table
    objs = list(base.objects)
    for u, v in product(objs, repeat=2):
        report.record("base.braiding.invertible", base.is_iso(base.braid(u, v)), (nm(u), nm(v)))
    for u, u2, v, v2 in product(objs, repeat=4):
        if base.hom_dim[u][u2] == 0 or base.hom_dim[v][v2] == 0:
            continue
        for f, g in product(base.basis(u, u2), base.basis(v, v2)):
            lhs = base.compose(base.tensor(f, g), base.braid(u2, v2))
            rhs = base.compose(base.braid(u, v), base.tensor(g, f))
            report.record("base.braiding.natural", lhs == rhs,
                          (nm(u), nm(u2), nm(v), nm(v2)) + _bidx(f, g))
    for u, v, w in product(objs, repeat=3):
        # beta_{u, vw} = (beta_{u,v} 1_w) then (1_v beta_{u,w})
        lhs = base.braid(u, T[v][w])
        rhs = base.compose(base.tensor(base.braid(u, v), base.id(w)),
                           base.tensor(base.id(v), base.braid(u, w)))
        report.record("base.braiding.hexagon_left", lhs == rhs, (nm(u), nm(v), nm(w)))
        # beta_{uv, w} = (1_u beta_{v,w}) then (beta_{u,w} 1_v)
        lhs = base.braid(T[u][v], w)
        rhs = base.compose(base.tensor(base.id(u), base.braid(v, w)),
                           base.tensor(base.braid(u, w), base.id(v)))
        report.record("base.braiding.hexagon_right", lhs == rhs, (nm(u), nm(v), nm(w)))


def _validate_duality(base: PresentedBase, report: ValidationReport):
    nm = base._nm
    for i in base.objects:
        d = base.dual(i)
        report.record("base.duality.involutive", base.dual(d) == i, (nm(i),))
        # (coev_i 1_i) then (1_i ev_i) = 1_i
        zig = base.compose(base.tensor(base.coev(i), base.id(i)), base.tensor(base.id(i), base.ev(i)))
        report.record("base.duality.zigzag_left", zig == base.id(i), (nm(i),))
        # (1_{i*} coev_i) then (ev_i 1_{i*}) = 1_{i*}
        zag = base.compose(base.tensor(base.id(d), base.coev(i)), base.tensor(base.ev(i), base.id(d)))
        report.record("base.duality.zigzag_right", zag == base.id(d), (nm(i),))
