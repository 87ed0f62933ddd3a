"""Module tensor categories ``(A, F)`` with ``F`` lifted to the Drinfeld center,
their lax 1-cells ``(R, rho, r)`` and monoidal 2-cells ``Theta``.

Everything lives in ordinary structure-constant categories; the base only
enters through ``F``, ``mu`` and the half-braidings.
"""

from __future__ import annotations

from itertools import product
from typing import Optional

from .enriched import NotComposable, OrdFunctor, validate_ord_functor
from .linalg import Matrix
from .mates import TensorAdjunction, validate_center_lift
from .report import ValidationReport
from .strict import Mor, StrictLinearMonoidal

ENGINE_VERSION = "0.1.0"


class ModTensCat:
    """``F_obj[v]`` is None at zero objects of the base (see ``TensorAdjunction``).

    ``adjunction`` is kept when the category came out of ``P0``; the inverse
    constructions need its counits.
    """

    def __init__(self, V, A: StrictLinearMonoidal, F_obj, F_maps: dict, mu: dict, halfbraid: dict,
                 name: str = "", provenance: str = "", adjunction: Optional[TensorAdjunction] = None):
        self.V = V
        self.A = A
        self.F_obj = tuple(F_obj)
        self.F_maps = dict(F_maps)
        self.mu = dict(mu)
        self.halfbraid = dict(halfbraid)
        self.name = name
        self.provenance = provenance
        self.adjunction = adjunction

    def F(self, v: int) -> Optional[int]:
        return self.F_obj[v]

    def live(self, v: int) -> bool:
        return self.F_obj[v] is not None

    @property
    def live_objects(self) -> list:
        return [v for v in self.V.objects if self.live(v)]

    def F_mor(self, f: Mor) -> Mor:
        return Mor(self.F(f.src), self.F(f.dst), self.F_maps[(f.src, f.dst)].apply(f.coeffs))

    def e(self, a: int, v: int) -> Mor:
        return self.halfbraid[(a, v)]

    def same_data(self, other: "ModTensCat") -> bool:
        return (self.F_obj == other.F_obj and self.F_maps == other.F_maps
                and self.mu == other.mu and self.halfbraid == other.halfbraid
                and _same_category(self.A, other.A))


def _same_category(A: StrictLinearMonoidal, B: StrictLinearMonoidal) -> bool:
    return A is B or (A.names == B.names and A.unit == B.unit and A.tensor_table == B.tensor_table
                      and A.hom_dim == B.hom_dim and A.identities == B.identities
                      and A.compose_sc == B.compose_sc and A.tensor_sc == B.tensor_sc)


class ModTensCell1:
    """``R: A -> B`` with laxitor ``rho[(a, b)]: R(a) R(b) -> R(ab)`` and
    ``r[v]: F_B(v) -> R(F_A(v))``."""

    def __init__(self, source: ModTensCat, target: ModTensCat, R: OrdFunctor, rho: dict, r: dict,
                 strong: bool = False, name: str = ""):
        self.source = source
        self.target = target
        self.R = R
        self.rho = dict(rho)
        self.r = dict(r)
        self.strong = strong
        self.name = name

    def same_data(self, other: "ModTensCell1") -> bool:
        return (self.source is other.source and self.target is other.target
                and self.R.same_data(other.R) and self.rho == other.rho and self.r == other.r)

    def differences(self, other: "ModTensCell1") -> list:
        out = []
        if self.R.obj_map != other.R.obj_map:
            out.append("object map")
        out += [f"R{k}" for k in sorted(self.R.maps) if self.R.maps[k] != other.R.maps.get(k)]
        out += [f"rho{k}" for k in sorted(self.rho) if self.rho[k] != other.rho.get(k)]
        out += [f"r[{k}]" for k in sorted(self.r) if self.r[k] != other.r.get(k)]
        return out


class ModTensCell2:
    """``Theta[a]: R(a) -> S(a)``."""

    def __init__(self, source: ModTensCell1, target: ModTensCell1, components: dict, name: str = ""):
        self.source = source
        self.target = target
        self.components = dict(components)
        self.name = name

    def same_data(self, other: "ModTensCell2") -> bool:
        return (self.source.same_data(other.source) and self.target.same_data(other.target)
                and self.components == other.components)


# -- validators --------------------------------------------------------------

def validate_modtens_0cell(M: ModTensCat) -> ValidationReport:
    report = ValidationReport()
    V, A = M.V, M.A
    vn = V._nm
    live = M.live_objects
    report.record("modtens0.F_unit", M.F(V.unit) == A.unit, (vn(V.unit),))
    for v in live:
        report.record("modtens0.F_identity", M.F_mor(V.id(v)) == A.id(M.F(v)), (vn(v),))
    for u, v, w in product(live, repeat=3):
        for f, g in product(V.basis(u, v), V.basis(v, w)):
            lhs = M.F_mor(V.compose(f, g))
            rhs = A.compose(M.F_mor(f), M.F_mor(g))
            report.record("modtens0.F_compose", lhs == rhs, (vn(u), vn(v), vn(w)))
    validate_center_lift(M, report, prefix="modtens0")
    return report


def _lax_monoidal_checks(R: OrdFunctor, rho: dict, report: ValidationReport, prefix: str):
    A, B = R.source, R.target
    TA, nm = A.tensor_table, A._nm
    report.record(f"{prefix}.unit_object", R(A.unit) == B.unit, (nm(A.unit),))
    for a in A.objects:
        ok = rho[(A.unit, a)] == B.id(R(a)) == rho[(a, A.unit)]
        report.record(f"{prefix}.rho.unital", ok, (nm(a),))
    for a, b, c, d in product(A.objects, repeat=4):
        for f, g in product(A.basis(a, c), A.basis(b, d)):
            lhs = B.compose(B.tensor(R.apply(f), R.apply(g)), rho[(c, d)])
            rhs = B.compose(rho[(a, b)], R.apply(A.tensor(f, g)))
            report.record(f"{prefix}.rho.natural", lhs == rhs, (nm(a), nm(b), nm(c), nm(d)))
    for a, b, c in product(A.objects, repeat=3):
        lhs = B.compose(B.tensor(rho[(a, b)], B.id(R(c))), rho[(TA[a][b], c)])
        rhs = B.compose(B.tensor(B.id(R(a)), rho[(b, c)]), rho[(a, TA[b][c])])
        report.record(f"{prefix}.rho.assoc", lhs == rhs, (nm(a), nm(b), nm(c)))


def validate_modtens_1cell(c: ModTensCell1) -> ValidationReport:
    M, N, R = c.source, c.target, c.R
    A, B, V = M.A, N.A, M.V
    report = validate_ord_functor(R, prefix="modtens1.R")
    _lax_monoidal_checks(R, c.rho, report, "modtens1")
    vn, nm = V._nm, A._nm
    live = [v for v in M.live_objects if N.live(v)]
    if set(live) != set(M.live_objects) or set(live) != set(N.live_objects):
        report.malformed.append("source and target disagree on where F is defined")
        return report
    for v in live:
        report.record("modtens1.r.typed", c.r[v].src == N.F(v) and c.r[v].dst == R(M.F(v)), (vn(v),))
    report.record("modtens1.r.unital", c.r[V.unit] == B.id(N.F(V.unit)), (vn(V.unit),))
    for u, v in product(live, repeat=2):
        for f in V.basis(u, v):
            lhs = B.compose(N.F_mor(f), c.r[v])
            rhs = B.compose(c.r[u], R.apply(M.F_mor(f)))
            report.record("modtens1.r.natural", lhs == rhs, (vn(u), vn(v)))
    for a, v in product(A.objects, live):
        FAv = M.F(v)
        lhs = B.compose(N.e(R(a), v), B.tensor(c.r[v], B.id(R(a))), c.rho[(FAv, a)])
        rhs = B.compose(B.tensor(B.id(R(a)), c.r[v]), c.rho[(a, FAv)], R.apply(M.e(a, v)))
        report.record("modtens1.halfbraiding_coherence", lhs == rhs, (nm(a), vn(v)))
    for u, v in product(live, repeat=2):
        uv = V.tensor_table[u][v]
        if not (M.live(uv) and N.live(uv)):
            continue
        lhs = B.compose(c.r[uv], R.apply(M.mu[(u, v)]))
        rhs = B.compose(N.mu[(u, v)], B.tensor(c.r[u], c.r[v]), c.rho[(M.F(u), M.F(v))])
        report.record("modtens1.action_coherence", lhs == rhs, (vn(u), vn(v)))
    if c.strong:
        for a, b in product(A.objects, repeat=2):
            report.record("modtens1.strong", B.is_iso(c.rho[(a, b)]), (nm(a), nm(b)))
    return report


def validate_modtens_2cell(t: ModTensCell2) -> ValidationReport:
    report = ValidationReport()
    c1, c2 = t.source, t.target
    R, S = c1.R, c2.R
    A, B, V = R.source, R.target, c1.source.V
    nm = A._nm
    TA = A.tensor_table
    if c1.source is not c2.source or c1.target is not c2.target:
        report.malformed.append("2-cell endpoints are not parallel")
        return report
    Th = t.components
    for a, b in product(A.objects, repeat=2):
        for f in A.basis(a, b):
            lhs = B.compose(R.apply(f), Th[b])
            rhs = B.compose(Th[a], S.apply(f))
            report.record("modtens2.natural", lhs == rhs, (nm(a), nm(b)))
    for a, b in product(A.objects, repeat=2):
        lhs = B.compose(c1.rho[(a, b)], Th[TA[a][b]])
        rhs = B.compose(B.tensor(Th[a], Th[b]), c2.rho[(a, b)])
        report.record("modtens2.monoidal", lhs == rhs, (nm(a), nm(b)))
    M = c1.source
    for v in M.live_objects:
        lhs = B.compose(c1.r[v], Th[M.F(v)])
        report.record("modtens2.r_coherence", lhs == c2.r[v], (V._nm(v),))
    return report


# -- identities and composition ------------------------------------------------

def identity_ordfunctor(A: StrictLinearMonoidal, name: str = "") -> OrdFunctor:
    maps = {(a, b): Matrix.identity(A.dim(a, b)) for a, b in product(A.objects, repeat=2)}
    return OrdFunctor(A, A, tuple(A.objects), maps, name=name)


def compose_ordfunctors(R: OrdFunctor, S: OrdFunctor) -> OrdFunctor:
    A = R.source
    maps = {(a, b): S.maps[(R(a), R(b))] @ R.maps[(a, b)] for a, b in product(A.objects, repeat=2)}
    return OrdFunctor(A, S.target, tuple(S(R(a)) for a in A.objects), maps, name=f"{R.name};{S.name}")


def identity_cell1(M: ModTensCat) -> ModTensCell1:
    A = M.A
    rho = {(a, b): A.id(A.tensor_table[a][b]) for a, b in product(A.objects, repeat=2)}
    r = {v: A.id(M.F(v)) for v in M.live_objects}
    return ModTensCell1(M, M, identity_ordfunctor(A, f"id_{M.name}"), rho, r, strong=True, name=f"id_{M.name}")


def identity_cell2(c: ModTensCell1) -> ModTensCell2:
    B, R = c.target.A, c.R
    return ModTensCell2(c, c, {a: B.id(R(a)) for a in c.source.A.objects}, name=f"id_{c.name}")


def compose_cells1(c1: ModTensCell1, c2: ModTensCell1, name: str = "") -> ModTensCell1:
    """``c1`` then ``c2``; laxitor ``sigma_{Ra,Rb}`` then ``S(rho_{a,b})``,
    coherence ``s_v`` then ``S(r_v)``."""
    if c1.target is not c2.source:
        raise NotComposable(f"{c1.name} lands in {c1.target.name}, {c2.name} starts at {c2.source.name}")
    R, S = c1.R, c2.R
    A, C = R.source, S.target
    rho = {}
    for a, b in product(A.objects, repeat=2):
        rho[(a, b)] = C.compose(c2.rho[(R(a), R(b))], S.apply(c1.rho[(a, b)]))
    r = {v: C.compose(c2.r[v], S.apply(c1.r[v])) for v in c1.source.live_objects}
    return ModTensCell1(c1.source, c2.target, compose_ordfunctors(R, S), rho, r,
                        strong=c1.strong and c2.strong, name=name or f"{c1.name};{c2.name}")


def vertical_compose_cells2(t1: ModTensCell2, t2: ModTensCell2, name: str = "") -> ModTensCell2:
    if not t1.target.same_data(t2.source):
        raise NotComposable("vertical composition needs t1.target == t2.source")
    B = t1.source.target.A
    comps = {a: B.compose(t1.components[a], t2.components[a]) for a in t1.components}
    return ModTensCell2(t1.source, t2.target, comps, name=name or f"{t1.name}.{t2.name}")


def horizontal_compose_cells2(theta: ModTensCell2, phi: ModTensCell2, name: str = "") -> ModTensCell2:
    """``(theta phi)_a = S2(theta_a)`` after ``phi_{R1(a)}``."""
    R1, S2 = theta.source.R, phi.target.R
    if theta.source.target is not phi.source.source:
        raise NotComposable("horizontal composition needs matching middle 0-cell")
    C = S2.target
    comps = {a: C.compose(phi.components[R1(a)], S2.apply(theta.components[a]))
             for a in R1.source.objects}
    return ModTensCell2(compose_cells1(theta.source, phi.source), compose_cells1(theta.target, phi.target),
                        comps, name=name or f"{theta.name}*{phi.name}")
