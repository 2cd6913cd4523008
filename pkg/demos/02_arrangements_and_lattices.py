"""Arrangement combinatorics: flats, girth, dense edges, Betti numbers.

An arrangement is a list of rational covectors in r coordinates; index 0 is
the distinguished hyperplane H_0.  The intersection lattice, the minimum
size of a dependent subset (the girth c), the dense edges, and the Betti
numbers of the projective complement are all computed exactly from the
matroid of the forms.
"""

from arrtwist import Arrangement, Character

print("= five generic lines in the projective plane =")
a5 = Arrangement.generic(3, 5)
print("girth c(A):", a5.girth(), " (every 3-subset independent; any 4 dependent)")
b = a5.betti_data()
print("Betti numbers:", list(b.betti), " Euler characteristic:", b.euler)

print()
print("= the lattice of three generic lines =")
a3 = Arrangement.generic(3, 3)
for flat in a3.intersection_lattice():
    print("  flat", sorted(flat.indices), "codim", flat.codim)

print()
print("= a near-pencil: x, y, x+y concurrent, plus z =")
near = Arrangement(3, [[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]])
print("girth:", near.girth(), "(the concurrent triple is dependent)")
print("Betti numbers:", list(near.betti_data().betti))
print("dense edges:")
for flat in near.dense_edges():
    print("  ", sorted(flat.indices))

print()
print("= nonresonant characters =")
ch = Character([-4, 1, 1, 1, 1])
ok, violators = a5.is_nonresonant(ch)
print("weights", ch.weights, "nonresonant?", ok)
ch0 = Character([0, 0, 0, 0, 0])
ok, violators = a5.is_nonresonant(ch0)
print("all-zero weights nonresonant?", ok, "- violators:", [sorted(f.indices) for f in violators])

print()
print("= generic position detection =")
p, is_gp = a5.generic_position_profile()
print("five generic lines: p =", p, " generic position?", is_gp)
boolean = Arrangement.boolean(4)
p, is_gp = boolean.generic_position_profile()
print("coordinate hyperplanes: p =", p, " generic position?", is_gp)
