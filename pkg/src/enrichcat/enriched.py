"""V-categories, V-monoidal categories, V-monoidal functors and 1_V-graded
natural transformations, with exhaustive validators.

Every piece of enriched structure is a morphism of the base category stored as
a coefficient vector. Hom objects are single objects of the base (possibly its
zero object). Axioms are checked as exact equalities of base morphisms for
every tuple of objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .base import PresentedBase
from .linalg import Matrix, scalar
from .report import ValidationReport
from .strict import Mor, StrictLinearMonoidal, bilinear_entries


class VCat:
    """Objects, hom objects, identity elements ``j`` and composition ``comp``.

    ``hom_obj[(a, b)]`` is a base object; ``j[a]`` the coefficients of a base
    morphism ``1 -> hom(a, a)``; ``comp[(a, b, c)]`` those of
    ``hom(a, b) hom(b, c) -> hom(a, c)``.
    """

    def __init__(self, base: PresentedBase, names, hom_obj: dict, j: dict, comp: dict, name: str = ""):
        self.base = base
        self.name = name
        self.names = tuple(names)
        self.hom_obj = dict(hom_obj)
        self.j = {a: tuple(scalar(c) for c in v) for a, v in j.items()}
        self.comp = {k: tuple(scalar(c) for c in v) for k, v in comp.items()}
        self._underlying = None

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def objects(self) -> range:
        return range(self.n)

    def index(self, name) -> int:
        if isinstance(name, int):
            return name
        return self.names.index(name)

    def nm(self, a) -> str:
        return self.names[a]

    def hom(self, a: int, b: int) -> int:
        return self.hom_obj[(a, b)]

    def j_mor(self, a: int) -> Mor:
        return Mor(self.base.unit, self.hom(a, a), self.j[a])

    def comp_mor(self, a: int, b: int, c: int) -> Mor:
        V = self.base
        src = V.tensor_table[self.hom(a, b)][self.hom(b, c)]
        return Mor(src, self.hom(a, c), self.comp[(a, b, c)])

    def compose_graded(self, f: Mor, g: Mor, a: int, b: int, c: int) -> Mor:
        """``(f g) then comp``: composite of a ``hom(a,b)``- and a ``hom(b,c)``-valued map."""
        V = self.base
        return V.compose(V.tensor(f, g), self.comp_mor(a, b, c))

    def structure_problems(self) -> list:
        V = self.base
        probs = []
        for a, b in product(self.objects, repeat=2):
            h = self.hom_obj.get((a, b))
            if h is None or not (0 <= h < V.n):
                probs.append(f"hom object ({a},{b}) missing or out of range")
        if probs:
            return probs
        for a in self.objects:
            if len(self.j.get(a, ())) != V.dim(V.unit, self.hom(a, a)):
                probs.append(f"j at {self.nm(a)} has wrong length")
        for a, b, c in product(self.objects, repeat=3):
            src = V.tensor_table[self.hom(a, b)][self.hom(b, c)]
            if len(self.comp.get((a, b, c), ())) != V.dim(src, self.hom(a, c)):
                probs.append(f"comp at ({self.nm(a)},{self.nm(b)},{self.nm(c)}) has wrong length")
        return probs


class VMonCat(VCat):
    """Adds a unit object, a strict tensor on objects and
    ``tens[(a, b, c, d)]: hom(a, c) hom(b, d) -> hom(ab, cd)``."""

    def __init__(self, base, names, hom_obj, j, comp, unit: int, tensor_table, tens: dict, name: str = ""):
        super().__init__(base, names, hom_obj, j, comp, name=name)
        self.unit = unit
        self.tensor_table = tuple(tuple(r) for r in tensor_table)
        self.tens = {k: tuple(scalar(c) for c in v) for k, v in tens.items()}

    def tensor_obj(self, *objs: int) -> int:
        out = self.unit
        for o in objs:
            out = self.tensor_table[out][o]
        return out

    def tens_mor(self, a: int, b: int, c: int, d: int) -> Mor:
        V, T = self.base, self.tensor_table
        src = V.tensor_table[self.hom(a, c)][self.hom(b, d)]
        return Mor(src, self.hom(T[a][b], T[c][d]), self.tens[(a, b, c, d)])

    def tensor_graded(self, f: Mor, g: Mor, a: int, b: int, c: int, d: int) -> Mor:
        V = self.base
        return V.compose(V.tensor(f, g), self.tens_mor(a, b, c, d))

    def structure_problems(self) -> list:
        probs = super().structure_problems()
        if probs:
            return probs
        V, T, n = self.base, self.tensor_table, self.n
        if not (0 <= self.unit < n):
            return ["unit object out of range"]
        if len(T) != n or any(len(r) != n for r in T) or any(not (0 <= x < n) for r in T for x in r):
            return ["tensor table malformed"]
        for a, b, c, d in product(self.objects, repeat=4):
            src = V.tensor_table[self.hom(a, c)][self.hom(b, d)]
            if len(self.tens.get((a, b, c, d), ())) != V.dim(src, self.hom(T[a][b], T[c][d])):
                probs.append(f"tens at {(a, b, c, d)} has wrong length")
        return probs

    def underlying(self) -> StrictLinearMonoidal:
        if self._underlying is None:
            self._underlying = underlying(self)
        return self._underlying


# -- validators ------------------------------------------------------------

def validate_vcat(C: VCat) -> ValidationReport:
    report = ValidationReport()
    probs = C.structure_problems()
    if probs:
        report.malformed.extend(probs)
        return report
    V, nm = C.base, C.nm
    for a, b in product(C.objects, repeat=2):
        X = C.hom(a, b)
        idX = V.id(X)
        lhs = V.compose(V.tensor(C.j_mor(a), idX), C.comp_mor(a, a, b))
        report.record("vcat.unit_left", lhs == idX, (nm(a), nm(b)))
        rhs = V.compose(V.tensor(idX, C.j_mor(b)), C.comp_mor(a, b, b))
        report.record("vcat.unit_right", rhs == idX, (nm(a), nm(b)))
    for a, b, c, d in product(C.objects, repeat=4):
        ab, cd = C.hom(a, b), C.hom(c, d)
        lhs = V.compose(V.tensor(C.comp_mor(a, b, c), V.id(cd)), C.comp_mor(a, c, d))
        rhs = V.compose(V.tensor(V.id(ab), C.comp_mor(b, c, d)), C.comp_mor(a, b, d))
        report.record("vcat.assoc", lhs == rhs, (nm(a), nm(b), nm(c), nm(d)))
    return report


def braided_interchange_sides(C: VMonCat, a, b, c, d, e, f, crossing: Optional[Mor] = None):
    """Both sides of the braided interchange law on
    ``hom(a,b) hom(d,e) hom(b,c) hom(e,f) -> hom(ad, cf)``.

    ``crossing`` replaces the braiding of ``hom(d,e)`` past ``hom(b,c)``; used
    to show the check is sensitive to it.
    """
    V, T = C.base, C.tensor_table
    x1, x2, x3, x4 = C.hom(a, b), C.hom(d, e), C.hom(b, c), C.hom(e, f)
    lhs = V.compose(V.tensor(C.tens_mor(a, d, b, e), C.tens_mor(b, e, c, f)),
                    C.comp_mor(T[a][d], T[b][e], T[c][f]))
    beta = V.braid(x2, x3) if crossing is None else crossing
    rhs = V.compose(V.tensor(V.id(x1), beta, V.id(x4)),
                    V.tensor(C.comp_mor(a, b, c), C.comp_mor(d, e, f)),
                    C.tens_mor(a, d, c, f))
    return lhs, rhs


def validate_vmoncat(C: VMonCat, crossing=None) -> ValidationReport:
    """All V-monoidal axioms. ``crossing(x, y)`` optionally overrides the
    braiding used in the interchange check (mutation testing)."""
    report = validate_vcat(C)
    if not report.ok:
        return report
    probs = C.structure_problems()
    if probs:
        report.malformed.extend(probs)
        return report
    V, T, nm, one = C.base, C.tensor_table, C.nm, C.unit
    for a in C.objects:
        report.record("vmoncat.tensor_unit", T[one][a] == a == T[a][one], (nm(a),))
    for a, b, c in product(C.objects, repeat=3):
        report.record("vmoncat.object_assoc", T[T[a][b]][c] == T[a][T[b][c]], (nm(a), nm(b), nm(c)))
    if not report.ok:
        return report
    j1 = C.j_mor(one)
    for a, b in product(C.objects, repeat=2):
        X = C.hom(a, b)
        idX = V.id(X)
        lhs = V.compose(V.tensor(j1, idX), C.tens_mor(one, a, one, b))
        rhs = V.compose(V.tensor(idX, j1), C.tens_mor(a, one, b, one))
        report.record("vmoncat.tensor_unitality", lhs == idX == rhs, (nm(a), nm(b)))
    for a, b, c, d, e, f in product(C.objects, repeat=6):
        ad, cf = C.hom(a, d), C.hom(c, f)
        lhs = V.compose(V.tensor(C.tens_mor(a, b, d, e), V.id(cf)),
                        C.tens_mor(T[a][b], c, T[d][e], f))
        rhs = V.compose(V.tensor(V.id(ad), C.tens_mor(b, c, e, f)),
                        C.tens_mor(a, T[b][c], d, T[e][f]))
        wit = tuple(nm(x) for x in (a, b, c, d, e, f))
        report.record("vmoncat.tensor_assoc", lhs == rhs, wit)
        over = None if crossing is None else crossing(C.hom(d, e), C.hom(b, c))
        lhs, rhs = braided_interchange_sides(C, a, b, c, d, e, f, over)
        report.record("vmoncat.braided_interchange", lhs == rhs, wit)
    return report


# -- functors and transformations -----------------------------------------

@dataclass(eq=False)
class VMonFunctor:
    """Strictly unital lax V-monoidal functor.

    ``components[(a, b)]``: ``hom_A(a, b) -> hom_B(Ra, Rb)``;
    ``laxitor[(a, b)]``: ``1 -> hom_B(Ra Rb, R(ab))``.
    """

    source: VMonCat
    target: VMonCat
    obj_map: tuple
    components: dict
    laxitor: dict
    strong: bool = False
    name: str = ""

    def __post_init__(self):
        self.obj_map = tuple(self.obj_map)
        self.components = {k: tuple(scalar(c) for c in v) for k, v in self.components.items()}
        self.laxitor = {k: tuple(scalar(c) for c in v) for k, v in self.laxitor.items()}

    def __call__(self, a: int) -> int:
        return self.obj_map[a]

    def comp_mor(self, a: int, b: int) -> Mor:
        A, B = self.source, self.target
        return Mor(A.hom(a, b), B.hom(self(a), self(b)), self.components[(a, b)])

    def rho(self, a: int, b: int) -> Mor:
        A, B = self.source, self.target
        TB = B.tensor_table
        return Mor(A.base.unit, B.hom(TB[self(a)][self(b)], self(A.tensor_table[a][b])), self.laxitor[(a, b)])

    def same_data(self, other: "VMonFunctor") -> bool:
        return (self.source is other.source and self.target is other.target
                and self.obj_map == other.obj_map and self.components == other.components
                and self.laxitor == other.laxitor)

    def structure_problems(self) -> list:
        A, B, V = self.source, self.target, self.source.base
        probs = []
        if len(self.obj_map) != A.n or any(not (0 <= x < B.n) for x in self.obj_map):
            return ["object map malformed"]
        for a, b in product(A.objects, repeat=2):
            want = V.dim(A.hom(a, b), B.hom(self(a), self(b)))
            if len(self.components.get((a, b), ())) != want:
                probs.append(f"component ({A.nm(a)},{A.nm(b)}) has wrong length")
            TB = B.tensor_table
            want = V.dim(V.unit, B.hom(TB[self(a)][self(b)], self(A.tensor_table[a][b])))
            if len(self.laxitor.get((a, b), ())) != want:
                probs.append(f"laxitor ({A.nm(a)},{A.nm(b)}) has wrong length")
        return probs


@dataclass(eq=False)
class VTransform:
    """1_V-graded natural transformation ``theta: R => S``, ``theta_a: 1 -> hom_B(Ra, Sa)``."""

    source: VMonFunctor
    target: VMonFunctor
    components: dict
    name: str = ""

    def __post_init__(self):
        self.components = {k: tuple(scalar(c) for c in v) for k, v in self.components.items()}

    def comp_mor(self, a: int) -> Mor:
        R, S = self.source, self.target
        return Mor(R.source.base.unit, R.target.hom(R(a), S(a)), self.components[a])

    def same_data(self, other: "VTransform") -> bool:
        return (self.source.same_data(other.source) and self.target.same_data(other.target)
                and self.components == other.components)


def identity_functor(C: VMonCat) -> VMonFunctor:
    V = C.base
    comps = {(a, b): V.id(C.hom(a, b)).coeffs for a, b in product(C.objects, repeat=2)}
    lax = {(a, b): C.j[C.tensor_table[a][b]] for a, b in product(C.objects, repeat=2)}
    return VMonFunctor(C, C, tuple(C.objects), comps, lax, strong=True, name=f"id_{C.name}")


def identity_transform(F: VMonFunctor, name: str = "") -> VTransform:
    B = F.target
    return VTransform(F, F, {a: B.j[F(a)] for a in F.source.objects}, name=name or f"id_{F.name}")


def validate_vmon_functor(F: VMonFunctor) -> ValidationReport:
    report = ValidationReport()
    probs = F.structure_problems()
    if probs:
        report.malformed.extend(probs)
        return report
    A, B, V = F.source, F.target, F.source.base
    TA, TB, nm = A.tensor_table, B.tensor_table, A.nm
    report.record("functor.unit_object", F(A.unit) == B.unit, (nm(A.unit),))
    for a, b, c in product(A.objects, repeat=3):
        lhs = V.compose(A.comp_mor(a, b, c), F.comp_mor(a, c))
        rhs = V.compose(V.tensor(F.comp_mor(a, b), F.comp_mor(b, c)), B.comp_mor(F(a), F(b), F(c)))
        report.record("functor.functoriality", lhs == rhs, (nm(a), nm(b), nm(c)))
    for a in A.objects:
        report.record("functor.unit_preserving",
                      V.compose(A.j_mor(a), F.comp_mor(a, a)) == B.j_mor(F(a)), (nm(a),))
    for a in A.objects:
        ok = F.rho(A.unit, a) == B.j_mor(F(a)) == F.rho(a, A.unit)
        report.record("functor.laxitor_unital", ok, (nm(a),))
    for a, b, c, d in product(A.objects, repeat=4):
        Ra, Rb, Rc, Rd = F(a), F(b), F(c), F(d)
        lhs = V.compose(V.tensor(F.rho(a, b), V.compose(A.tens_mor(a, b, c, d), F.comp_mor(TA[a][b], TA[c][d]))),
                        B.comp_mor(TB[Ra][Rb], F(TA[a][b]), F(TA[c][d])))
        inner = V.compose(V.tensor(F.comp_mor(a, c), F.comp_mor(b, d)), B.tens_mor(Ra, Rb, Rc, Rd))
        rhs = V.compose(V.tensor(inner, F.rho(c, d)), B.comp_mor(TB[Ra][Rb], TB[Rc][Rd], F(TA[c][d])))
        report.record("functor.laxitor_natural", lhs == rhs, (nm(a), nm(b), nm(c), nm(d)))
    for a, b, c in product(A.objects, repeat=3):
        Ra, Rb, Rc = F(a), F(b), F(c)
        Rbc, Rab = F(TA[b][c]), F(TA[a][b])
        left = V.compose(V.tensor(B.j_mor(Ra), F.rho(b, c)), B.tens_mor(Ra, TB[Rb][Rc], Ra, Rbc))
        lhs = V.compose(V.tensor(left, F.rho(a, TA[b][c])),
                        B.comp_mor(B.tensor_obj(Ra, Rb, Rc), TB[Ra][Rbc], F(A.tensor_obj(a, b, c))))
        right = V.compose(V.tensor(F.rho(a, b), B.j_mor(Rc)), B.tens_mor(TB[Ra][Rb], Rc, Rab, Rc))
        rhs = V.compose(V.tensor(right, F.rho(TA[a][b], c)),
                        B.comp_mor(B.tensor_obj(Ra, Rb, Rc), TB[Rab][Rc], F(A.tensor_obj(a, b, c))))
        report.record("functor.laxitor_assoc", lhs == rhs, (nm(a), nm(b), nm(c)))
    if F.strong:
        Bu = B.underlying()
        for a, b in product(A.objects, repeat=2):
            report.record("functor.strong", Bu.is_iso(_as_underlying(F.rho(a, b), TB[F(a)][F(b)], F(TA[a][b]))),
                          (nm(a), nm(b)))
    return report


def _as_underlying(f: Mor, a: int, b: int) -> Mor:
    """Read a 1_V-graded morphism into ``hom(a, b)`` as an underlying morphism ``a -> b``."""
    return Mor(a, b, f.coeffs)


def _as_graded(C: VCat, f: Mor) -> Mor:
    return Mor(C.base.unit, C.hom(f.src, f.dst), f.coeffs)


def validate_vtransform(t: VTransform, monoidal: bool = True) -> ValidationReport:
    report = ValidationReport()
    R, S = t.source, t.target
    A, B, V = R.source, R.target, R.source.base
    if R.source is not S.source or R.target is not S.target:
        report.malformed.append("transformation endpoints are not parallel")
        return report
    for a in A.objects:
        if len(t.components.get(a, ())) != V.dim(V.unit, B.hom(R(a), S(a))):
            report.malformed.append(f"component at {A.nm(a)} has wrong length")
    if report.malformed:
        return report
    nm, TA, TB = A.nm, A.tensor_table, B.tensor_table
    for a, b in product(A.objects, repeat=2):
        lhs = V.compose(V.tensor(t.comp_mor(a), S.comp_mor(a, b)), B.comp_mor(R(a), S(a), S(b)))
        rhs = V.compose(V.tensor(R.comp_mor(a, b), t.comp_mor(b)), B.comp_mor(R(a), R(b), S(b)))
        report.record("transform.natural", lhs == rhs, (nm(a), nm(b)))
    if monoidal:
        for a, b in product(A.objects, repeat=2):
            ab = TA[a][b]
            lhs = V.compose(V.tensor(R.rho(a, b), t.comp_mor(ab)), B.comp_mor(TB[R(a)][R(b)], R(ab), S(ab)))
            pair = V.compose(V.tensor(t.comp_mor(a), t.comp_mor(b)), B.tens_mor(R(a), R(b), S(a), S(b)))
            rhs = V.compose(V.tensor(pair, S.rho(a, b)), B.comp_mor(TB[R(a)][R(b)], TB[S(a)][S(b)], S(ab)))
            report.record("transform.monoidal", lhs == rhs, (nm(a), nm(b)))
    return report


class NotComposable(ValueError):
    pass


def compose_functors(F: VMonFunctor, G: VMonFunctor, name: str = "") -> VMonFunctor:
    """``F`` then ``G``."""
    if F.target is not G.source:
        raise NotComposable(f"{F.name} lands in {F.target.name}, {G.name} starts at {G.source.name}")
    A, B, C, V = F.source, F.target, G.target, F.source.base
    TA, TB, TC = A.tensor_table, B.tensor_table, C.tensor_table
    obj = tuple(G(F(a)) for a in A.objects)
    comps = {(a, b): V.compose(F.comp_mor(a, b), G.comp_mor(F(a), F(b))).coeffs
             for a, b in product(A.objects, repeat=2)}
    lax = {}
    for a, b in product(A.objects, repeat=2):
        Ra, Rb, Rab = F(a), F(b), F(TA[a][b])
        s_rho = V.compose(F.rho(a, b), G.comp_mor(TB[Ra][Rb], Rab))
        m = V.compose(V.tensor(G.rho(Ra, Rb), s_rho),
                      C.comp_mor(TC[G(Ra)][G(Rb)], G(TB[Ra][Rb]), G(Rab)))
        lax[(a, b)] = m.coeffs
    return VMonFunctor(A, C, obj, comps, lax, strong=F.strong and G.strong,
                       name=name or f"{F.name};{G.name}")


def vertical_compose(t1: VTransform, t2: VTransform, name: str = "") -> VTransform:
    """``t1: R => S`` then ``t2: S => T``."""
    R, S, T = t1.source, t1.target, t2.target
    if not S.same_data(t2.source):
        raise NotComposable("vertical composition needs t1.target == t2.source")
    B = R.target
    comps = {a: B.compose_graded(t1.comp_mor(a), t2.comp_mor(a), R(a), S(a), T(a)).coeffs
             for a in R.source.objects}
    return VTransform(R, T, comps, name=name or f"{t1.name}.{t2.name}")


def horizontal_compose(theta: VTransform, phi: VTransform, name: str = "") -> VTransform:
    """``theta: R1 => R2`` (A to B) beside ``phi: S1 => S2`` (B to C).

    Component at ``a``: ``S1`` applied to ``theta_a``, then ``phi`` at ``R2(a)``.
    """
    R1, R2, S1, S2 = theta.source, theta.target, phi.source, phi.target
    if R1.target is not S1.source:
        raise NotComposable("horizontal composition needs theta's target category to be phi's source")
    V, C = R1.source.base, S1.target
    comps = {}
    for a in R1.source.objects:
        s_theta = V.compose(theta.comp_mor(a), S1.comp_mor(R1(a), R2(a)))
        comps[a] = C.compose_graded(s_theta, phi.comp_mor(R2(a)), S1(R1(a)), S1(R2(a)), S2(R2(a))).coeffs
    return VTransform(compose_functors(R1, S1), compose_functors(R2, S2), comps,
                      name=name or f"{theta.name}*{phi.name}")


# -- underlying constructions ---------------------------------------------

def underlying(C: VMonCat) -> StrictLinearMonoidal:
    """Ordinary linear monoidal category with homs ``V(1 -> hom(a, b))``."""
    V = C.base
    one = V.unit
    hom_dim = [[V.dim(one, C.hom(a, b)) for b in C.objects] for a in C.objects]
    comp_sc, tens_sc = {}, {}
    for a, b, c in product(C.objects, repeat=3):
        bx = [_as_graded(C, Mor(a, b, f.coeffs)) for f in _basis_dims(hom_dim[a][b], a, b)]
        by = [_as_graded(C, Mor(b, c, f.coeffs)) for f in _basis_dims(hom_dim[b][c], b, c)]
        comp_sc[(a, b, c)] = bilinear_entries(lambda f, g: C.compose_graded(f, g, a, b, c), bx, by)
    T = C.tensor_table
    for a, c, b, d in product(C.objects, repeat=4):
        bx = [Mor(one, C.hom(a, c), f.coeffs) for f in _basis_dims(hom_dim[a][c], a, c)]
        by = [Mor(one, C.hom(b, d), f.coeffs) for f in _basis_dims(hom_dim[b][d], b, d)]
        tens_sc[(a, c, b, d)] = bilinear_entries(lambda f, g: C.tensor_graded(f, g, a, b, c, d), bx, by)
    ids = [C.j[a] for a in C.objects]
    return StrictLinearMonoidal(C.names, C.unit, T, hom_dim, ids, comp_sc, tens_sc, name=f"{C.name}^V")


def _basis_dims(d, a, b):
    from .linalg import ONE, ZERO
    return [Mor(a, b, tuple(ONE if k == m else ZERO for k in range(d))) for m in range(d)]


@dataclass(eq=False)
class OrdFunctor:
    """Functor between structure-constant categories: object map plus one
    matrix per hom space."""

    source: StrictLinearMonoidal
    target: StrictLinearMonoidal
    obj_map: tuple
    maps: dict
    name: str = ""

    def __call__(self, a: int) -> int:
        return self.obj_map[a]

    def apply(self, f: Mor) -> Mor:
        M = self.maps[(f.src, f.dst)]
        return Mor(self(f.src), self(f.dst), M.apply(f.coeffs))

    def same_data(self, other: "OrdFunctor") -> bool:
        return self.obj_map == other.obj_map and self.maps == other.maps


def underlying_functor(F: VMonFunctor, source=None, target=None) -> OrdFunctor:
    """``R(f) = f then R_{a->b}`` on underlying morphisms."""
    A, B, V = F.source, F.target, F.source.base
    src = source if source is not None else A.underlying()
    tgt = target if target is not None else B.underlying()
    maps = {}
    for a, b in product(A.objects, repeat=2):
        cols = [V.compose(Mor(V.unit, A.hom(a, b), f.coeffs), F.comp_mor(a, b)).coeffs
                for f in src.basis(a, b)]
        maps[(a, b)] = Matrix.from_columns(cols, tgt.dim(F(a), F(b)))
    return OrdFunctor(src, tgt, F.obj_map, maps, name=F.name)


def validate_ord_functor(F: OrdFunctor, prefix: str = "ordfunctor") -> ValidationReport:
    report = ValidationReport()
    A, B = F.source, F.target
    for a in A.objects:
        report.record(f"{prefix}.identity", F.apply(A.id(a)) == B.id(F(a)), (A._nm(a),))
    for a, b, c in product(A.objects, repeat=3):
        for f, g in product(A.basis(a, b), A.basis(b, c)):
            lhs = F.apply(A.compose(f, g))
            rhs = B.compose(F.apply(f), F.apply(g))
            report.record(f"{prefix}.compose", lhs == rhs, (A._nm(a), A._nm(b), A._nm(c)))
    return report


def trace(C: VMonCat) -> OrdFunctor:
    """``Tr(a) = hom(1_A, a)``; on ``f: a -> b`` postcompose through ``comp``."""
    V, A = C.base, C.underlying()
    one = C.unit
    obj = tuple(C.hom(one, a) for a in C.objects)
    maps = {}
    for a, b in product(C.objects, repeat=2):
        x = C.hom(one, a)
        cols = [V.compose(V.tensor(V.id(x), _as_graded(C, f)), C.comp_mor(one, a, b)).coeffs
                for f in A.basis(a, b)]
        maps[(a, b)] = Matrix.from_columns(cols, V.dim(x, C.hom(one, b)))
    return OrdFunctor(A, V, obj, maps, name=f"Tr_{C.name}")


def self_enrichment(V: PresentedBase) -> VMonCat:
    """The base category enriched over itself with ``hom(u, v) = u* v``."""
    T = V.tensor_table
    objs = list(V.objects)
    hom = {(u, v): V.internal_hom(u, v) for u, v in product(objs, repeat=2)}
    j = {v: V.curry(v, V.unit, V.id(v)).coeffs for v in objs}
    comp = {}
    for u, v, w in product(objs, repeat=3):
        uv, vw = hom[(u, v)], hom[(v, w)]
        h = V.compose(V.tensor(V.hom_counit(u, v), V.id(vw)), V.hom_counit(v, w))
        comp[(u, v, w)] = V.curry(u, T[uv][vw], h).coeffs
    tens = {}
    for u, w, v, x in product(objs, repeat=4):
        uv, wx = hom[(u, v)], hom[(w, x)]
        h = V.compose(V.tensor(V.id(u), V.braid(w, uv), V.id(wx)),
                      V.tensor(V.hom_counit(u, v), V.hom_counit(w, x)))
        tens[(u, w, v, x)] = V.curry(T[u][w], T[uv][wx], h).coeffs
    return VMonCat(V, V.names, hom, j, comp, V.unit, T, tens, name=f"hat_{V.name}")
