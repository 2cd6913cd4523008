"""Fox derivatives and presentation complexes.

The Fox derivative of a word measures how the word is spelled from each
generator; assembling the specialized derivatives of the relators into a
matrix gives a two-step chain complex that computes H_0 and H_1 of any
space with the presented fundamental group, for any assignment of commuting
units to the generators.
"""

from arrtwist import (
    FreeWord,
    GroupPresentation,
    LaurentRing,
    QQ,
    UnitAssignment,
    alexander_complex,
    build_koszul,
    decide_isomorphic,
    fox_derivative,
    specialize,
)

L = LaurentRing(QQ)
t = L.t()

print("= derivatives of a commutator =")
w = FreeWord.parse("bab-1a-1")
for i, name in ((0, "a"), (1, "b")):
    d = fox_derivative(w, i)
    print(f"  d({w})/d{name} = {d}")
    print(f"    specialized at a, b -> t:", L.format(specialize(d, [t, t], L)))

print()
print("= the free abelian group on two meridians =")
pres = GroupPresentation.commutative(2)
cx = alexander_complex(pres, [t, t], L)
print("ranks:", cx.ranks)
for q in (0, 1):
    h = cx.homology(q)
    print(f"  H_{q}: free rank {h.free_rank}, torsion", [L.format(d) for d in h.torsion])

print()
print("= agreement with the exterior-algebra complex =")
kz = build_koszul(UnitAssignment(L, [t, t]))
ok, report = decide_isomorphic(cx, kz)
print("chain-isomorphic to the Z^2 complex?", ok)
for deg in report["degrees"]:
    print("  degree", deg["q"], "divisors:", deg["divisors_a"])

print()
print("= a presentation with a nontrivial relator action =")
# x1, x2, y with y conjugating x2 by x1 (letters a, b, c)
r1 = FreeWord.parse("cac-1a-1")
r2 = FreeWord.parse("cbc-1") * FreeWord.parse("aba-1").inverse()
pres2 = GroupPresentation(3, [r1, r2])
cx2 = alexander_complex(pres2, [t, t, t], L)
for q in (0, 1):
    h = cx2.homology(q)
    print(f"  H_{q}: free rank {h.free_rank}, torsion", [L.format(d) for d in h.torsion])
