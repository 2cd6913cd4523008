"""The explicit chain complex of Z^n with unit coefficients, its truncations,
and the twisted-homology/homotopy computations it supports for arrangements
whose forms have no small dependencies.

The complex has one basis slot per subset of the generators (colex order)
scaled by the module rank; the boundary removes one generator at a time with
alternating signs, multiplying the coefficient slot by (u^-1 - 1) for the
removed generator's unit u.  With all units equal to 1 every boundary
vanishes and the ranks are plain binomials.

For an essential arrangement whose minimal dependency size c exceeds 3, the
homology of this complex computes the twisted homology of the complement in
degrees < c - 2; when c = r + 1 (generic position inside a Boolean ambient
arrangement) the truncation at degree r - 1 computes everything, and the top
degree can be cross-checked against an Euler-characteristic formula.
"""

from __future__ import annotations

from itertools import combinations
from math import comb, inf

from .arrangement import Arrangement, Character, GirthTooSmall, NotGenericPosition
from .chain import FreeChainComplex, Homology
from .linalg import Matrix, rank, smith_normal_form
from .rings import LaurentRing, Ring, UnsupportedRing


class Disagreement(RuntimeError):
    """Two computation paths that must agree did not; a convention bug."""


def colex_subsets(n, q):
    """q-subsets of {0..n-1} in colexicographic order."""
    return sorted(combinations(range(n), q), key=lambda s: tuple(reversed(s)))


class UnitAssignment:
    """Invertible scalars (or commuting invertible matrices) assigned to the
    n generators, acting on a coefficient module of the given rank."""

    def __init__(self, ring: Ring, units, module_rank=None):
        self.ring = ring
        self.units = list(units)
        self.n = len(self.units)
        if module_rank is None:
            module_rank = (
                self.units[0].nrows if self.units and isinstance(self.units[0], Matrix) else 1
            )
        self.module_rank = module_rank
        self._slot = []  # (u^-1 - 1) per generator, as a module_rank x module_rank block
        for u in self.units:
            if isinstance(u, Matrix):
                if (u.nrows, u.ncols) != (module_rank, module_rank):
                    raise ValueError("matrix units must be square of the module rank")
                self._slot.append(u.inverse() - Matrix.identity(ring, module_rank))
            else:
                u = ring.coerce(u)
                if not ring.is_unit(u):
                    raise ValueError(f"{ring.format(u)} is not a unit in {ring.name}")
                inv = ring.unit_inverse(u)
                if module_rank == 1:
                    self._slot.append(Matrix(ring, [[inv - ring.one]], 1, 1))
                else:
                    eye = Matrix.identity(ring, module_rank)
                    self._slot.append(eye * inv - eye)
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if isinstance(self.units[i], Matrix) and isinstance(self.units[j], Matrix):
                    if self.units[i] * self.units[j] != self.units[j] * self.units[i]:
                        raise ValueError(
                            f"units {i} and {j} do not commute: not a Z^n action"
                        )

    @classmethod
    def from_character(cls, character: Character, base_field=None):
        """Units t^(gamma_i), i = 1..n, over K[t,t^-1]; the weight of H_0 is
        determined by the zero-sum constraint and plays no role here."""
        from .rings import QQ

        ring = LaurentRing(base_field or QQ)
        return cls(ring, [ring.t(character[i]) for i in range(1, len(character))])

    def slot_block(self, i) -> Matrix:
        return self._slot[i]


def build_koszul(u: UnitAssignment, top_degree=None) -> FreeChainComplex:
    """The unit-twisted exterior complex on n generators up to top_degree.

    >>> from arrtwist.rings import LaurentRing, QQ
    >>> L = LaurentRing(QQ)
    >>> c = build_koszul(UnitAssignment(L, [L.t()]))
    >>> c.boundary(1).format_entries()
    [['t^-1 - 1']]
    """
    n, d = u.n, u.module_rank
    ring = u.ring
    if top_degree is None:
        top_degree = n
    if not 0 <= top_degree <= n:
        raise ValueError(f"top degree must lie in 0..{n}")
    ranks = [comb(n, q) * d for q in range(top_degree + 1)]
    boundaries = []
    for q in range(1, top_degree + 1):
        rows_ix = {s: k for k, s in enumerate(colex_subsets(n, q - 1))}
        cols = colex_subsets(n, q)
        mat = Matrix.zero(ring, comb(n, q - 1) * d, comb(n, q) * d)
        for col_block, s in enumerate(cols):
            for r_pos, gen in enumerate(s):
                rest = s[:r_pos] + s[r_pos + 1 :]
                row_block = rows_ix[rest]
                sign = 1 if r_pos % 2 == 0 else -1
                block = u.slot_block(gen)
                for a in range(d):
                    for b in range(d):
                        v = block[a, b]
                        if sign < 0:
                            v = -v
                        mat.rows[row_block * d + a][col_block * d + b] = v
        boundaries.append(mat)
    return FreeChainComplex(ring, ranks, boundaries)


class RangeHomology:
    """Twisted homology in the combinatorially valid range of degrees."""

    __slots__ = ("entries", "girth", "limit", "note")

    def __init__(self, entries, girth, limit, note=""):
        self.entries = entries
        self.girth = girth
        self.limit = limit
        self.note = note

    def __getitem__(self, q):
        return self.entries[q]


def generic_range_homology(arr: Arrangement, u: UnitAssignment) -> RangeHomology:
    """H_q(M(A); L) for q < c - 2, straight from the Z^n complex.

    Valid because in that range the homology depends only on the module and
    on n; for c = inf the arrangement is Boolean and every degree counts
    (reported with a note)."""
    if u.n != arr.n:
        raise ValueError(f"unit assignment has n={u.n}, arrangement has n={arr.n}")
    c = arr.girth()
    if c == 3:
        raise GirthTooSmall(
            "c(A) = 3: the generic-range identification does not apply"
        )
    if c == inf:
        limit = arr.n + 1  # all degrees: the complement is the Boolean one
        note = "independent forms: every degree is in range"
    else:
        limit = c - 2
        note = ""
    complex_top = min(arr.n, limit)
    cx = build_koszul(u, complex_top)
    entries = {q: cx.homology(q) for q in range(min(limit, complex_top + 1))}
    return RangeHomology(entries, c, limit, note)


class CompleteHomology:
    """All-degrees homology for the generic-position case, with the two
    computation paths for the top degree recorded."""

    __slots__ = (
        "entries",
        "top_degree",
        "chi",
        "kappa",
        "top_rank_formula",
        "top_rank_direct",
        "case",
    )

    def __init__(self, entries, top_degree, chi, kappa, formula, direct, case):
        self.entries = entries
        self.top_degree = top_degree
        self.chi = chi
        self.kappa = kappa
        self.top_rank_formula = formula
        self.top_rank_direct = direct
        self.case = case

    def __getitem__(self, q):
        if q in self.entries:
            return self.entries[q]
        if q > self.top_degree:
            return Homology(0)
        raise KeyError(q)


def complete_homology_generic_position(
    arr: Arrangement, u: UnitAssignment
) -> CompleteHomology:
    """Twisted homology of a generic-position arrangement in all degrees.

    Degrees below r-1 come from the full Z^n complex; degree r-1 is computed
    both as the kernel rank of the truncated top boundary and through the
    alternating-sum formula

        rank H_(r-1) = (-1)^(r-1) [ (module rank) * chi(M) - kappa ],
        kappa = sum_(q=0)^(r-2) (-1)^q rank H_q,

    and the two must agree (Disagreement otherwise).  Degrees above r-1
    vanish.
    """
    p, is_gp = arr.generic_position_profile()
    if not is_gp:
        raise NotGenericPosition(
            "complete computation needs c = r + 1 with n + 1 > r"
        )
    if u.n != arr.n:
        raise ValueError(f"unit assignment has n={u.n}, arrangement has n={arr.n}")
    ring = u.ring
    laurent_case = isinstance(ring, LaurentRing)
    if laurent_case and u.module_rank != 1:
        raise UnsupportedRing(
            "Laurent coefficients support rank-one (character) modules only"
        )
    if not laurent_case and not ring.is_field:
        raise UnsupportedRing("coefficients must be K[t,t^-1] or a field module")
    r = arr.r
    n = arr.n
    full = build_koszul(u, n)
    entries = {}
    kappa = 0
    for q in range(r - 1):
        h = full.homology(q)
        entries[q] = h
        kappa += (-1) ** q * h.free_rank
    chi = arr.betti_data().euler
    d = u.module_rank
    formula = (-1) ** (r - 1) * (d * chi - kappa)
    # direct path: H_(r-1) of the truncation at r-1 is the kernel of d_(r-1)
    direct = full.ranks[r - 1] - rank(full.boundary(r - 1))
    if formula != direct:
        raise Disagreement(
            f"top homology rank: formula gives {formula}, kernel gives {direct}"
        )
    entries[r - 1] = Homology(direct)
    return CompleteHomology(
        entries,
        r - 1,
        chi,
        kappa,
        formula,
        direct,
        "laurent" if laurent_case else "field",
    )


class PresentationSummary:
    """A presentation matrix for a module plus its cokernel invariants."""

    __slots__ = ("matrix", "cokernel", "ring")

    def __init__(self, matrix, cokernel, ring):
        self.matrix = matrix
        self.cokernel = cokernel
        self.ring = ring


def pi_p_presentation_boolean(
    arr: Arrangement, character: Character, base_field=None
) -> PresentationSummary:
    """Presentation of the character-abelianized first higher homotopy group
    for generic-position arrangements with Boolean ambient.

    The presentation matrix is the (p+2)-nd boundary of the Z^n complex with
    units t^(gamma_i); the cokernel summary lists its free rank over K[t,t^-1]
    and the non-unit invariant factors.
    """
    p, is_gp = arr.generic_position_profile()
    if not is_gp:
        raise NotGenericPosition("needs generic position (c = r + 1, n + 1 > r)")
    if len(character) != arr.n + 1:
        raise ValueError(f"need {arr.n + 1} weights")
    u = UnitAssignment.from_character(character, base_field)
    top = min(p + 2, arr.n)
    cx = build_koszul(u, top)
    mat = cx.boundary(p + 2)  # zero-column matrix when p + 2 > n
    form = smith_normal_form(mat)
    free = mat.nrows - form.rank
    coker = Homology(free, form.nontrivial(u.ring))
    return PresentationSummary(mat, coker, u.ring)
