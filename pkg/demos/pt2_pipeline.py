"""The correspondence on a two-object example.

pt2 has objects 1 and x with x x = 1 and no maps between them. Functors and
transformations are pushed to the module tensor side and pulled back, and the
Z/2 grading is checked on both sides.
"""

from enrichcat import equivalence as eq
from enrichcat.enriched import identity_functor, validate_vmon_functor
from enrichcat.fixtures import inclusion, pt2, pt2_grading, sign_transform, twisted_identity, unit_cat
from enrichcat.grading import GradingAssignment, cyclic, validate_graded_modtens, validate_graded_vmoncat
from enrichcat.modtens import compose_cells1, validate_modtens_1cell, validate_modtens_2cell

P = pt2()
U = unit_cat(P.base)
M = eq.P0(P)
print("F on base objects:", M.F_obj, "(None marks the zero object)")
print("provenance:", M.provenance)

incl, tw = inclusion(U, P), twisted_identity(P)
for F in (incl, tw):
    c = eq.P1(F)
    r = validate_modtens_1cell(c)
    back = eq.Q1(c)
    print(f"{F.name}: 1-cell valid={r.ok}  r={ {v: [str(x) for x in m.coeffs] for v, m in c.r.items()} }"
          f"  Q1(P1) equal={back.same_data(F)}  strong={back.strong}")

both = compose_cells1(eq.P1(incl), eq.P1(tw))
print("composite 1-cell valid:", validate_modtens_1cell(both).ok)

t = sign_transform(identity_functor(P))
cell = eq.P2(t)
print("sign 2-cell valid:", validate_modtens_2cell(cell).ok, " Q2(P2) equal:", eq.Q2(cell).same_data(t))

g = pt2_grading()
print("\nZ/2 grading: enriched", validate_graded_vmoncat(P, g).ok, " module side", validate_graded_modtens(M, g).ok)
bad = validate_graded_vmoncat(P, GradingAssignment(cyclic(2), {0: 0, 1: 0}))
print("everything in degree 0:", bad.failures[0].line())

print("\ntwisted identity valid as an enriched functor:", validate_vmon_functor(tw).ok)
