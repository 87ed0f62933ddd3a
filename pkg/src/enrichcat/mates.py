"""The tensoring adjunction ``A(a F(v) -> b) = V(v -> hom(a, b))``.

``compute_adjoint`` finds the left adjoint ``F`` of ``Tr = hom(1, -)`` by a
representability search, then derives the counit, ``F`` on morphisms, the
oplaxitor ``mu`` and the half-braidings ``e``. All of them come from two mate
maps:

* ``mate_bwd``: the eta-side formula, whiskered by ``a`` through ``j_a`` and
  ``tens``;
* ``mate_fwd``: ``(1_a F(f))`` then ``eps``.

They are checked to be mutually inverse rather than assumed to be.
"""

from __future__ import annotations

import random
from itertools import combinations, product
from typing import Optional

from .enriched import VMonCat, _as_graded
from .linalg import ONE, ZERO, Matrix, inverse, is_invertible
from .report import ValidationReport
from .strict import Mor


class NotWeaklyTensored(ValueError):
    def __init__(self, obj, name=None):
        self.obj = obj
        super().__init__(f"no representing object for F({name if name is not None else obj})")


class MateError(ValueError):
    pass


def _eta_schedule(d: int):
    """Candidate unit vectors: basis vectors, then pairwise sums, then the all-ones vector."""
    def unit(*ks):
        return tuple(ONE if k in ks else ZERO for k in range(d))
    for k in range(d):
        yield unit(k)
    for k, m in combinations(range(d), 2):
        yield unit(k, m)
    if d > 2:
        yield unit(*range(d))


class TensorAdjunction:
    """Computed ``(F, eta)`` with everything derived from them.

    Zero objects of the base have no image: every hom out of them vanishes,
    so no object of ``A`` can represent them unless ``A`` has a zero object.
    ``F_obj[v]`` is then ``None`` and all data at ``v`` is vacuous.
    """

    def __init__(self, cat: VMonCat, F_obj: tuple, eta: dict):
        self.cat = cat
        self.V = cat.base
        self.A = cat.underlying()
        self.F_obj = tuple(F_obj)
        self.eta = dict(eta)
        self._mate_inv = {}
        self.eps = {}
        self.F_maps = {}
        self.mu = {}
        self.halfbraid = {}
        self._derive()

    # -- objects -------------------------------------------------------------
    def F(self, v: int) -> Optional[int]:
        return self.F_obj[v]

    def live(self, v: int) -> bool:
        return self.F_obj[v] is not None

    @property
    def live_objects(self) -> list:
        return [v for v in self.V.objects if self.live(v)]

    @property
    def tensored_flag(self) -> bool:
        return all(self.A.is_iso(m) for m in self.mu.values())

    # -- the two mate maps -----------------------------------------------------
    def whisker_eta(self, a: int, v: int) -> Mor:
        """``v -> hom(a, a F(v))``: ``(j_a eta_v)`` then ``tens``."""
        C, V = self.cat, self.V
        Fv = self.F(v)
        return V.compose(V.tensor(C.j_mor(a), self.eta[v]), C.tens_mor(a, C.unit, a, Fv))

    def mate_bwd(self, a: int, v: int, g: Mor) -> Mor:
        """``g: a F(v) -> b`` in ``A`` to ``v -> hom(a, b)`` in ``V``."""
        C, V = self.cat, self.V
        if not self.live(v):
            raise MateError(f"F is undefined at the zero object {V._nm(v)}")
        aFv = C.tensor_table[a][self.F(v)]
        if g.src != aFv:
            raise MateError("mate_bwd: source is not a F(v)")
        return V.compose(V.tensor(self.whisker_eta(a, v), _as_graded(C, g)), C.comp_mor(a, aFv, g.dst))

    def mate_matrix(self, a: int, v: int, b: int) -> Matrix:
        A, V, C = self.A, self.V, self.cat
        aFv = C.tensor_table[a][self.F(v)]
        cols = [self.mate_bwd(a, v, g).coeffs for g in A.basis(aFv, b)]
        return Matrix.from_columns(cols, V.dim(v, C.hom(a, b)))

    def mate_bwd_inverse(self, a: int, v: int, b: int, f: Mor) -> Mor:
        """Inverse of ``mate_bwd`` by linear algebra; used to build ``eps`` and ``F(f)``."""
        key = (a, v, b)
        if key not in self._mate_inv:
            M = self.mate_matrix(a, v, b)
            if not is_invertible(M):
                raise MateError(f"mate map at {key} is not invertible")
            self._mate_inv[key] = inverse(M)
        aFv = self.cat.tensor_table[a][self.F(v)]
        return Mor(aFv, b, self._mate_inv[key].apply(f.coeffs))

    def counit(self, a: int, b: int) -> Mor:
        """``eps_{a->b}: a F(hom(a, b)) -> b``; None when ``hom(a, b)`` is a zero object."""
        return self.eps.get((a, b))

    def F_mor(self, f: Mor) -> Mor:
        M = self.F_maps[(f.src, f.dst)]
        return Mor(self.F(f.src), self.F(f.dst), M.apply(f.coeffs))

    def mate_fwd_to(self, a: int, b: int, f: Mor) -> Mor:
        """``f: v -> hom(a, b)`` to ``(1_a F(f))`` then ``eps_{a->b}``."""
        if f.dst != self.cat.hom(a, b):
            raise MateError("mate_fwd: target is not hom(a, b)")
        if not self.live(f.src):
            raise MateError(f"F is undefined at the zero object {self.V._nm(f.src)}")
        return self._mate_fwd(a, b, f)

    def _mate_fwd(self, a, b, f):
        C, A = self.cat, self.A
        aFv = C.tensor_table[a][self.F(f.src)]
        x = C.hom(a, b)
        if not self.live(x):
            return A.zero_mor(aFv, b)
        return A.compose(A.tensor(A.id(a), self.F_mor(f)), self.eps[(a, b)])

    # -- derived data -----------------------------------------------------------
    def _derive(self):
        C, V, A = self.cat, self.V, self.A
        for a, b in product(C.objects, repeat=2):
            x = C.hom(a, b)
            if self.live(x):
                self.eps[(a, b)] = self.mate_bwd_inverse(a, x, b, V.id(x))
        one = C.unit
        for u, w in product(self.live_objects, repeat=2):
            Fw = self.F(w)
            cols = []
            for f in V.basis(u, w):
                target = V.compose(f, self.eta[w])
                cols.append(self.mate_bwd_inverse(one, u, Fw, target).coeffs)
            self.F_maps[(u, w)] = Matrix.from_columns(cols, A.dim(self.F(u), Fw))
        T = C.tensor_table
        for u, v in product(self.live_objects, repeat=2):
            uv = V.tensor_table[u][v]
            if not self.live(uv):
                continue
            Fu, Fv = self.F(u), self.F(v)
            f = V.compose(V.tensor(self.eta[u], self.eta[v]), C.tens_mor(one, one, Fu, Fv))
            self.mu[(u, v)] = self._mate_fwd(one, T[Fu][Fv], f)
        for a, v in product(C.objects, self.live_objects):
            Fv = self.F(v)
            f = V.compose(V.tensor(self.eta[v], C.j_mor(a)), C.tens_mor(one, a, Fv, a))
            self.halfbraid[(a, v)] = self._mate_fwd(a, T[Fv][a], f)

    def e(self, a: int, v: int) -> Mor:
        return self.halfbraid[(a, v)]


def _representing(C: VMonCat, A, v: int, a: int, eta: Mor) -> bool:
    V = C.base
    for x in C.objects:
        cols = [V.compose(V.tensor(eta, _as_graded(C, g)), C.comp_mor(C.unit, a, x)).coeffs
                for g in A.basis(a, x)]
        M = Matrix.from_columns(cols, V.dim(v, C.hom(C.unit, x)))
        if not is_invertible(M):
            return False
    return True


def compute_adjoint(C: VMonCat) -> TensorAdjunction:
    """Search for ``F(v)`` and ``eta_v``, candidates in object-index order.

    ``F(1) = 1`` with ``eta_1 = j_1`` is fixed up front; it always represents
    by unitality, and strict unitality of ``F`` needs exactly this choice.
    """
    V, A = C.base, C.underlying()
    one = C.unit
    F_obj, eta = [None] * V.n, {}
    for v in V.objects:
        if V.is_zero_object(v):
            continue
        if v == V.unit:
            F_obj[v], eta[v] = one, C.j_mor(one)
            continue
        found = False
        for a in C.objects:
            d = V.dim(v, C.hom(one, a))
            for coeffs in _eta_schedule(d):
                cand = Mor(v, C.hom(one, a), coeffs)
                if _representing(C, A, v, a, cand):
                    F_obj[v], eta[v] = a, cand
                    found = True
                    break
            if found:
                break
        if not found:
            raise NotWeaklyTensored(v, V._nm(v))
    return TensorAdjunction(C, tuple(F_obj), eta)


def counit(adj: TensorAdjunction, a: int, b: int) -> Mor:
    return adj.counit(a, b)


def mate_fwd(adj: TensorAdjunction, a: int, b: int, f: Mor) -> Mor:
    return adj.mate_fwd_to(a, b, f)


def mate_bwd(adj: TensorAdjunction, a: int, v: int, g: Mor) -> Mor:
    return adj.mate_bwd(a, v, g)


def oplaxitor(adj: TensorAdjunction, u: int, v: int) -> Mor:
    return adj.mu[(u, v)]


def half_braiding(adj: TensorAdjunction, a: int, v: int) -> Mor:
    return adj.halfbraid[(a, v)]


# -- checks ---------------------------------------------------------------------

def check_centrality(adj: TensorAdjunction, f: Mor, report: Optional[ValidationReport] = None,
                     witness=()) -> ValidationReport:
    """``(1_a F(f))`` then ``e_{a,F(v)}`` equals ``e_{a,F(u)}`` then ``(F(f) 1_a)``."""
    report = report if report is not None else ValidationReport()
    A = adj.A
    u, v = f.src, f.dst
    if not (adj.live(u) and adj.live(v)):
        return report
    Ff = adj.F_mor(f)
    for a in A.objects:
        lhs = A.compose(A.tensor(A.id(a), Ff), adj.e(a, v))
        rhs = A.compose(adj.e(a, u), A.tensor(Ff, A.id(a)))
        report.record("mates.centrality", lhs == rhs, (A._nm(a), adj.V._nm(u), adj.V._nm(v)) + tuple(witness))
    return report


def validate_adjunction(adj: TensorAdjunction) -> ValidationReport:
    """Exhaustive: mates are inverse bijections, triangle identities, functoriality of F."""
    report = ValidationReport()
    C, V, A = adj.cat, adj.V, adj.A
    vn, cn = V._nm, C.nm
    for a, v, b in product(C.objects, adj.live_objects, C.objects):
        aFv = C.tensor_table[a][adj.F(v)]
        wit = (cn(a), vn(v), cn(b))
        report.record("mates.bijective", is_invertible(adj.mate_matrix(a, v, b)), wit)
        for g in A.basis(aFv, b):
            report.record("mates.fwd_after_bwd", adj.mate_fwd_to(a, b, adj.mate_bwd(a, v, g)) == g, wit)
        for f in V.basis(v, C.hom(a, b)):
            report.record("mates.bwd_after_fwd", adj.mate_bwd(a, v, adj.mate_fwd_to(a, b, f)) == f, wit)
    for v in adj.live_objects:
        Fv = adj.F(v)
        report.record("mates.triangle_eta", adj.mate_fwd_to(C.unit, Fv, adj.eta[v]) == A.id(Fv), (vn(v),))
        report.record("mates.F_identity", adj.F_mor(V.id(v)) == A.id(Fv), (vn(v),))
    for a, b in product(C.objects, repeat=2):
        eps = adj.counit(a, b)
        if eps is not None:
            x = C.hom(a, b)
            report.record("mates.triangle_eps", adj.mate_bwd(a, x, eps) == V.id(x), (cn(a), cn(b)))
    live = adj.live_objects
    for u, v, w in product(live, repeat=3):
        for f, g in product(V.basis(u, v), V.basis(v, w)):
            lhs = adj.F_mor(V.compose(f, g))
            rhs = A.compose(adj.F_mor(f), adj.F_mor(g))
            report.record("mates.F_compose", lhs == rhs, (vn(u), vn(v), vn(w)))
    report.record("mates.F_unit", adj.F(V.unit) == C.unit, (vn(V.unit),))
    return report


def validate_center_lift(adj, report: Optional[ValidationReport] = None,
                         prefix: str = "lift") -> ValidationReport:
    """Oplax unitality, naturality and coassociativity of ``mu``; half-braiding
    axioms; centrality of every basis ``F(f)``; braided compatibility."""
    report = report if report is not None else ValidationReport()
    V, A = adj.V, adj.A
    vn, cn, T, TV = V._nm, A._nm, A.tensor_table, V.tensor_table
    live = adj.live_objects
    one_v, one = V.unit, A.unit

    for v in live:
        Fv = adj.F(v)
        ok = adj.mu.get((one_v, v)) == A.id(Fv) == adj.mu.get((v, one_v))
        report.record(f"{prefix}.mu.unital", ok, (vn(v),))
    for u, v, u2, v2 in product(live, repeat=4):
        uv, uv2 = TV[u][v], TV[u2][v2]
        if not (adj.live(uv) and adj.live(uv2)):
            continue
        for f, g in product(V.basis(u, u2), V.basis(v, v2)):
            lhs = A.compose(adj.F_mor(V.tensor(f, g)), adj.mu[(u2, v2)])
            rhs = A.compose(adj.mu[(u, v)], A.tensor(adj.F_mor(f), adj.F_mor(g)))
            report.record(f"{prefix}.mu.natural", lhs == rhs, (vn(u), vn(v), vn(u2), vn(v2)))
    for u, v, w in product(live, repeat=3):
        uv, vw, uvw = TV[u][v], TV[v][w], V.tensor_obj(u, v, w)
        if not all(adj.live(x) for x in (uv, vw, uvw)):
            continue
        Fu, Fw = adj.F(u), adj.F(w)
        lhs = A.compose(adj.mu[(uv, w)], A.tensor(adj.mu[(u, v)], A.id(Fw)))
        rhs = A.compose(adj.mu[(u, vw)], A.tensor(A.id(Fu), adj.mu[(v, w)]))
        report.record(f"{prefix}.mu.coassoc", lhs == rhs, (vn(u), vn(v), vn(w)))

    for v in live:
        Fv = adj.F(v)
        report.record(f"{prefix}.e.unit", adj.e(one, v) == A.id(Fv), (vn(v),))
        for a in A.objects:
            report.record(f"{prefix}.e.invertible", A.is_iso(adj.e(a, v)), (cn(a), vn(v)))
        for a, a2 in product(A.objects, repeat=2):
            for g in A.basis(a, a2):
                lhs = A.compose(A.tensor(g, A.id(Fv)), adj.e(a2, v))
                rhs = A.compose(adj.e(a, v), A.tensor(A.id(Fv), g))
                report.record(f"{prefix}.e.natural", lhs == rhs, (cn(a), cn(a2), vn(v)))
        for a, b in product(A.objects, repeat=2):
            lhs = adj.e(T[a][b], v)
            rhs = A.compose(A.tensor(A.id(a), adj.e(b, v)), A.tensor(adj.e(a, v), A.id(b)))
            report.record(f"{prefix}.e.multiplicative", lhs == rhs, (cn(a), cn(b), vn(v)))
    for u, v in product(live, repeat=2):
        uv = TV[u][v]
        if not adj.live(uv):
            continue
        Fu, Fv = adj.F(u), adj.F(v)
        for a in A.objects:
            lhs = A.compose(adj.e(a, uv), A.tensor(adj.mu[(u, v)], A.id(a)))
            rhs = A.compose(A.tensor(A.id(a), adj.mu[(u, v)]), A.tensor(adj.e(a, u), A.id(Fv)),
                            A.tensor(A.id(Fu), adj.e(a, v)))
            report.record(f"{prefix}.e.mu_central", lhs == rhs, (cn(a), vn(u), vn(v)))

    for u, v in product(live, repeat=2):
        for k, f in enumerate(V.basis(u, v)):
            check_centrality(adj, f, report, witness=(k,))
    _braided_compatibility(adj, report, prefix)
    return report


def braided_orientations(adj: TensorAdjunction, u: int, v: int):
    """Truth of ``mu_{u,v}`` then ``e_{F(u),F(v)}`` = ``F(beta_{u,v})`` then ``mu_{v,u}``,
    and of its mirror with the inverse half-braiding of ``F(u)`` past ``F(v)``."""
    A, V = adj.A, adj.V
    Fu, Fv = adj.F(u), adj.F(v)
    rhs = A.compose(adj.F_mor(V.braid(u, v)), adj.mu[(v, u)])
    primary = A.compose(adj.mu[(u, v)], adj.e(Fu, v)) == rhs
    inv = A.invert(adj.e(Fv, u))
    mirror = inv is not None and A.compose(adj.mu[(u, v)], inv) == rhs
    return primary, mirror


def _braided_compatibility(adj, report, prefix):
    V = adj.V
    live = adj.live_objects
    pairs = [(u, v) for u, v in product(live, repeat=2)
             if adj.live(V.tensor_table[u][v]) and adj.live(V.tensor_table[v][u])]
    results = [(u, v) + braided_orientations(adj, u, v) for u, v in pairs]
    mirror_all = all(m for _, _, _, m in results)
    for u, v, primary, mirror in results:
        report.record(f"{prefix}.braided", primary, (V._nm(u), V._nm(v)),
                      "mirror orientation holds" if mirror else "")
    if pairs:
        who = getattr(adj, "name", "") or adj.A.name
        report.note(f"{prefix} {who} braided orientation: primary={'yes' if all(p for _, _, p, _ in results) else 'no'}"
                    f" mirror={'yes' if mirror_all else 'no'}")


def random_mor(rng: random.Random, V, src: int, dst: int, lo: int = -3, hi: int = 3) -> Mor:
    return V.mor(src, dst, [rng.randint(lo, hi) for _ in range(V.dim(src, dst))])


def verify_mate_lemmas(adj: TensorAdjunction, seed: int = 0, trials: int = 100,
                       halfbraid=None) -> ValidationReport:
    """Seeded random instances of the four mate lemmas.

    ``halfbraid(a, v)`` overrides the half-braiding used on the right-hand side
    of the tensor lemma (for mutation tests).
    """
    report = ValidationReport()
    C, V, A = adj.cat, adj.V, adj.A
    T, TV = C.tensor_table, V.tensor_table
    live = adj.live_objects
    objs = list(C.objects)
    e_of = halfbraid or adj.e
    lemmas = ("mates.lemma.composition_v", "mates.lemma.composition_a", "mates.lemma.compose",
              "mates.lemma.tensor", "mates.lemma.F_of_f")
    for name in lemmas:
        report.touch(name)
    if trials <= 0:
        report.note("mate lemmas: zero trials requested, random suite vacuous")
        return report
    rng = random.Random(seed)
    for t in range(trials):
        # mate of (f1 then f2) is (1_a F(f1)) then mate(f2)
        u, v = rng.choice(live), rng.choice(live)
        a, b = rng.choice(objs), rng.choice(objs)
        f1 = random_mor(rng, V, u, v)
        f2 = random_mor(rng, V, v, C.hom(a, b))
        lhs = adj.mate_fwd_to(a, b, V.compose(f1, f2))
        rhs = A.compose(A.tensor(A.id(a), adj.F_mor(f1)), adj.mate_fwd_to(a, b, f2))
        report.record("mates.lemma.composition_v", lhs == rhs, (seed, t, C.nm(a), C.nm(b), V._nm(u), V._nm(v)))

        # mate_bwd of (g then h) is mate_bwd(g) composed with h through comp
        a, b, c = rng.choice(objs), rng.choice(objs), rng.choice(objs)
        v = rng.choice(live)
        aFv = T[a][adj.F(v)]
        g = random_mor(rng, A, aFv, b)
        h = random_mor(rng, A, b, c)
        lhs = adj.mate_bwd(a, v, A.compose(g, h))
        rhs = C.compose_graded(adj.mate_bwd(a, v, g), _as_graded(C, h), a, b, c)
        report.record("mates.lemma.composition_a", lhs == rhs, (seed, t, C.nm(a), C.nm(b), C.nm(c), V._nm(v)))

        # composite through comp factors through mu
        u, v = rng.choice(live), rng.choice(live)
        uv = TV[u][v]
        if adj.live(uv):
            a, b, c = rng.choice(objs), rng.choice(objs), rng.choice(objs)
            f = random_mor(rng, V, u, C.hom(a, b))
            g = random_mor(rng, V, v, C.hom(b, c))
            lhs = adj.mate_fwd_to(a, c, C.compose_graded(f, g, a, b, c))
            Fv = adj.F(v)
            rhs = A.compose(A.tensor(A.id(a), adj.mu[(u, v)]),
                            A.tensor(adj.mate_fwd_to(a, b, f), A.id(Fv)),
                            adj.mate_fwd_to(b, c, g))
            report.record("mates.lemma.compose", lhs == rhs, (seed, t, C.nm(a), C.nm(b), C.nm(c), V._nm(u), V._nm(v)))
        else:
            report.touch("mates.lemma.compose")

        # composite through tens needs the half-braiding of F(u) past b
        u, v = rng.choice(live), rng.choice(live)
        uv = TV[u][v]
        if adj.live(uv):
            a, b, c, d = (rng.choice(objs) for _ in range(4))
            f = random_mor(rng, V, u, C.hom(a, c))
            g = random_mor(rng, V, v, C.hom(b, d))
            lhs = adj.mate_fwd_to(T[a][b], T[c][d], C.tensor_graded(f, g, a, b, c, d))
            Fu, Fv = adj.F(u), adj.F(v)
            rhs = A.compose(A.tensor(A.id(T[a][b]), adj.mu[(u, v)]),
                            A.tensor(A.id(a), e_of(b, u), A.id(Fv)),
                            A.tensor(adj.mate_fwd_to(a, c, f), adj.mate_fwd_to(b, d, g)))
            report.record("mates.lemma.tensor", lhs == rhs,
                          (seed, t) + tuple(C.nm(x) for x in (a, b, c, d)) + (V._nm(u), V._nm(v)))

        # (eta_u F(f)) through comp equals f then eta_v; both mate to F(f)
        u, v = rng.choice(live), rng.choice(live)
        f = random_mor(rng, V, u, v)
        Ff = adj.F_mor(f)
        Fu, Fv = adj.F(u), adj.F(v)
        left = C.compose_graded(adj.eta[u], _as_graded(C, Ff), C.unit, Fu, Fv)
        right = V.compose(f, adj.eta[v])
        ok = (left == right and adj.mate_fwd_to(C.unit, Fv, left) == Ff
              and adj.mate_fwd_to(C.unit, Fv, right) == Ff)
        report.record("mates.lemma.F_of_f", ok, (seed, t, V._nm(u), V._nm(v)))
    return report
