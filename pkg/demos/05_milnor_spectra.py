"""Milnor-fiber Betti spectra and the divisibility obstruction.

b_1 of the Milnor fiber of an arrangement of n+1 hyperplanes splits into
n+1 twisted Betti numbers of the complement, one for each power of a
primitive (n+1)-st root of unity acting through the meridians.  If the
complement sat inside a minimal structure on the coordinate-hyperplane
complement as a subcomplex through degree 2, the nontrivial part of the
spectrum would be constant -- so n would divide b_1(F).  Spectra violating
this certify that no such embedding exists.
"""

from arrtwist import (
    GroupPresentation,
    MilnorSpectrum,
    obstruction_report,
    spectrum_from_presentation,
)

print("= a pencil of three lines (fundamental group F_2) =")
pencil = GroupPresentation(2, (), meridian_marked=True)
s = spectrum_from_presentation(pencil)
print("spectrum:", list(s.values), " b_1(F) =", s.b1_total)
print("verdict:", obstruction_report(s)["verdict"])

print()
print("= three lines in general position (fundamental group Z^2) =")
s = spectrum_from_presentation(GroupPresentation.commutative(2))
print("spectrum:", list(s.values), " b_1(F) =", s.b1_total)

print()
print("= two published six-line spectra that fail the divisibility test =")
for n, values in ((5, [5, 0, 1, 0, 1, 0]), (8, [8, 0, 0, 1, 0, 0, 1, 0, 0])):
    rep = obstruction_report(MilnorSpectrum(n, values))
    print(
        f"n = {n}: b_1(F) = {rep['b1_total']},",
        f"{n} divides it? {rep['divides']},",
        "verdict:",
        rep["verdict"],
    )
    if "certificate" in rep:
        print("  certificate:", rep["certificate"])
