"""Desk-scale fixtures used by the tests, the demos and the shipped fixture files.

Bases
    ``triv``   one object, End = Q.
    ``vec``    ``triv`` plus a designated zero object.
    ``svec``   Z/2-graded lines, braiding -1 on the odd line.
    ``k4``     Z/2 x Z/2-graded lines with the non-symmetric bicharacter
               ``(-1)^(a1 b2)``.
    ``dual``   one object whose endomorphisms are the dual numbers Q[t]/t^2.

Categories over ``vec``
    ``unit``   one object.
    ``pt2``    objects ``1, x`` with ``x x = 1``; zero hom object between them.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from pathlib import Path

from .base import PresentedBase
from .enriched import VMonCat, VMonFunctor, VTransform, identity_functor, self_enrichment
from .grading import GradingAssignment, cyclic
from .serialize import EXTENSIONS, dump, dump_grading, dumps

ONE_ENTRY = ((0, 0, 0, Fraction(1)),)


def pointed_base(name, elements, mult, bichar, with_zero=False) -> PresentedBase:
    """Vect_G with trivial associator and braiding given by a +-1 bicharacter.

    ``mult(g, h)`` and ``bichar(g, h)`` act on element labels; the unit is
    ``elements[0]``.
    """
    g = list(elements)
    n = len(g) + (1 if with_zero else 0)
    z = len(g) if with_zero else None
    names = [str(e) for e in g] + (["0"] if with_zero else [])
    idx = {e: i for i, e in enumerate(g)}

    def tens(i, j):
        if z is not None and z in (i, j):
            return z
        return idx[mult(g[i], g[j])]

    table = [[tens(i, j) for j in range(n)] for i in range(n)]
    hom = [[1 if (i == j and i != z) else 0 for j in range(n)] for i in range(n)]
    ids = [(1,) if i != z else () for i in range(n)]
    compose = {(i, i, i): ONE_ENTRY for i in range(n) if i != z}
    tensor = {(i, i, k, k): ONE_ENTRY for i in range(n) for k in range(n) if z not in (i, k)}
    braiding = {}
    for i, j in product(range(n), repeat=2):
        braiding[(i, j)] = () if z in (i, j) else (Fraction(bichar(g[i], g[j])),)
    duality = {}
    for i in range(n):
        if i == z:
            duality[i] = (z, (), ())
        else:
            inv = next(k for k in range(len(g)) if mult(g[i], g[k]) == g[0])
            duality[i] = (inv, (1,), (1,))
    return PresentedBase(names, 0, table, hom, ids, compose, tensor, braiding, duality,
                         name=name, zero=z)


def triv() -> PresentedBase:
    return pointed_base("triv", ["1"], lambda a, b: "1", lambda a, b: 1)


def vec() -> PresentedBase:
    return pointed_base("vec", ["1"], lambda a, b: "1", lambda a, b: 1, with_zero=True)


def svec(odd_braiding=-1) -> PresentedBase:
    return pointed_base("svec", [0, 1], lambda a, b: (a + b) % 2,
                        lambda a, b: odd_braiding if a == b == 1 else 1)


def k4() -> PresentedBase:
    els = ["00", "10", "01", "11"]

    def mult(a, b):
        return f"{(int(a[0]) + int(b[0])) % 2}{(int(a[1]) + int(b[1])) % 2}"

    def chi(a, b):
        return -1 if int(a[0]) * int(b[1]) else 1

    return pointed_base("k4", els, mult, chi)


def dual_numbers() -> PresentedBase:
    # basis of End(*) is (1, t) with t t = 0; composition and tensor are both
    # multiplication, the braiding is the identity
    mult = ((0, 0, 0, Fraction(1)), (0, 1, 1, Fraction(1)), (1, 0, 1, Fraction(1)))
    return PresentedBase(["*"], 0, [[0]], [[2]], [(1, 0)], {(0, 0, 0): mult},
                         {(0, 0, 0, 0): mult}, {(0, 0): (1, 0)},
                         {0: (0, (1, 0), (1, 0))}, name="dual")


BASES = {"triv": triv, "vec": vec, "svec": svec, "k4": k4, "dual": dual_numbers}


# -- enriched fixtures -------------------------------------------------------

def _pointed_vmoncat(V: PresentedBase, names, table, nonzero, name) -> VMonCat:
    """One-dimensional homs ``1_V`` where ``nonzero(a, b)``, the zero object elsewhere;
    every structure constant that can be nonzero is 1."""

    one, z = V.unit, V.zero
    n = len(names)
    hom = {(a, b): one if nonzero(a, b) else z for a, b in product(range(n), repeat=2)}

    def unit_or_empty(*hs):
        return (Fraction(1),) if all(h == one for h in hs) else ()

    j = {a: unit_or_empty(hom[(a, a)]) for a in range(n)}
    comp = {(a, b, c): unit_or_empty(hom[(a, b)], hom[(b, c)], hom[(a, c)])
            for a, b, c in product(range(n), repeat=3)}
    tens = {(a, b, c, d): unit_or_empty(hom[(a, c)], hom[(b, d)], hom[(table[a][b], table[c][d])])
            for a, b, c, d in product(range(n), repeat=4)}
    return VMonCat(V, names, hom, j, comp, 0, table, tens, name=name)


def unit_cat(V=None):
    """One object, ``hom = 1_V``."""
    V = V or vec()
    return _pointed_vmoncat(V, ["1"], [[0]], lambda a, b: True, "unit")


def pt2(V=None):
    """Objects ``1, x`` with ``x x = 1``; the two objects do not talk to each other."""
    V = V or vec()
    return _pointed_vmoncat(V, ["1", "x"], [[0, 1], [1, 0]], lambda a, b: a == b, "pt2")


def _pointed_functor(A, B, obj_map, sign=lambda a, b: 1, lax=lambda a, b: 1, strong=True, name=""):
    """Functor between pointed fixtures: hom components ``sign(a, b)``, laxitors ``lax(a, b)``
    (only where the hom objects are nonzero)."""

    def coeffs(dim, c):
        return (Fraction(c),) if dim else ()

    V = A.base
    comps, laxs = {}, {}
    for a, b in product(A.objects, repeat=2):
        comps[(a, b)] = coeffs(V.dim(A.hom(a, b), B.hom(obj_map[a], obj_map[b])), sign(a, b))
        src = B.tensor_table[obj_map[a]][obj_map[b]]
        laxs[(a, b)] = coeffs(V.dim(V.unit, B.hom(src, obj_map[A.tensor_table[a][b]])), lax(a, b))
    return VMonFunctor(A, B, tuple(obj_map), comps, laxs, strong=strong, name=name)


def inclusion(A=None, B=None):
    """``unit -> pt2`` picking out the unit object."""
    A, B = A or unit_cat(), B or pt2()
    return _pointed_functor(A, B, (0,), name="incl")


def projection(A=None, B=None):
    """``pt2 -> unit`` collapsing ``x`` onto the unit."""
    A, B = A or pt2(), B or unit_cat()
    return _pointed_functor(A, B, (0, 0), name="proj")


def twisted_identity(C=None, scale=-1):
    """Identity on ``pt2`` whose laxitor at ``(x, x)`` is ``scale``."""
    C = C or pt2()
    return _pointed_functor(C, C, (0, 1), lax=lambda a, b: scale if a == b == 1 else 1, name="twist")


def collapse(A=None, B=None):
    """``pt2`` onto the self-enrichment of ``vec``, both objects to the unit."""
    A = A or pt2()
    B = B or self_enrichment(A.base)
    return _pointed_functor(A, B, (0, 0), name="collapse")


def sign_transform(F, value=-1, name="sign"):
    """``theta_1 = 1``, ``theta_x = value`` as an endo-transformation of ``F`` on ``pt2``."""
    return VTransform(F, F, {0: (Fraction(1),), 1: (Fraction(value),)}, name=name)


def parity_functor(C):
    """On the self-enrichment of ``svec``: hom components ``(-1)^(|u|+|v|)``."""

    V = C.base
    comps = {(u, v): tuple(Fraction((-1) ** (u + v)) * c for c in V.id(C.hom(u, v)).coeffs)
             for u, v in product(C.objects, repeat=2)}
    lax = {(u, v): C.j[C.tensor_table[u][v]] for u, v in product(C.objects, repeat=2)}
    return VMonFunctor(C, C, tuple(C.objects), comps, lax, strong=True, name="parity")


def parity_transform(identity, parity):
    """``theta_u = (-1)^|u| j_u`` from the identity to the parity functor."""

    C = identity.source
    comps = {u: tuple(Fraction((-1) ** u) * c for c in C.j[u]) for u in C.objects}
    return VTransform(identity, parity, comps, name="parity_sign")


def svec_cat():
    return self_enrichment(svec())


def pt2_grading():
    """``deg(1) = 0``, ``deg(x) = 1`` in Z/2."""
    return GradingAssignment(cyclic(2), {0: 0, 1: 1})


def fixture_set() -> dict:
    """Every shipped artifact, grouped by kind, with mutually consistent references."""

    bases = [triv(), vec(), svec(), k4(), dual_numbers()]
    by_name = {b.name: b for b in bases}
    V = by_name["vec"]
    U, P = unit_cat(V), pt2(V)
    hats = [self_enrichment(by_name[n]) for n in ("triv", "svec", "k4", "dual")]
    H = self_enrichment(V)
    S = hats[1]
    idP, idS = identity_functor(P), identity_functor(S)
    tw, col = twisted_identity(P), collapse(P, H)
    par = parity_functor(S)
    # unit -> pt2 -> pt2 -> hat_vec is the three-object chain
    functors = [inclusion(U, P), projection(P, U), tw, idP, col, par, idS]
    transforms = [sign_transform(idP, name="sign"), sign_transform(tw, name="sign_twist"),
                  sign_transform(col, name="sign_collapse"), parity_transform(idS, par)]
    return {"base": bases, "vmoncat": [U, P, H] + hats, "vmonfunctor": functors,
            "vtransform": transforms, "grading": [("pt2", pt2_grading())]}


def write_fixture_dir(path) -> list:
    """Serialize ``fixture_set()`` into ``path``; returns the written file names."""


    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    fs = fixture_set()
    written = []
    for kind in ("base", "vmoncat", "vmonfunctor", "vtransform"):
        for obj in fs[kind]:
            fn = f"{obj.name}{EXTENSIONS[kind]}"
            (path / fn).write_text(dumps(dump(obj)))
            written.append(fn)
    cats = {C.name: C for C in fs["vmoncat"]}
    for target, g in fs["grading"]:
        fn = f"{target}{EXTENSIONS['grading']}"
        (path / fn).write_text(dumps(dump_grading(g, target, "vmoncat", cats[target].names)))
        written.append(fn)
    return written
