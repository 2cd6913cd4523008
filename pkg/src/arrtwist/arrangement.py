"""Projective hyperplane arrangements and their intersection-lattice
combinatorics.

An arrangement is a list of n+1 pairwise non-proportional rational covectors
in r coordinates; index 0 is the distinguished hyperplane H_0.  All lattice
data is computed from the central arrangement of the same forms (the cone):
flats are closed index sets, a flat's subspace lies inside H_0 exactly when
its index set contains 0, and the projectively visible flats are those of
codimension < r.

Betti numbers of the projective complement follow the decone convention:
Whitney sums of Moebius values over the central flats whose subspace is not
contained in H_0, which gives b_0 = 1 and b_1 = n.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations
from math import inf

from .linalg import Matrix, rank
from .rings import QQ


class NotEssential(ValueError):
    pass


class InvalidCharacter(ValueError):
    pass


class GirthTooSmall(ValueError):
    """c(A) = 3: the connectivity order p(M) is not determined here."""


class NotGenericPosition(ValueError):
    pass


class Flat:
    """A closed set of hyperplane indices together with its codimension."""

    __slots__ = ("indices", "codim")

    def __init__(self, indices, codim):
        self.indices = frozenset(indices)
        self.codim = codim

    def __eq__(self, other):
        return isinstance(other, Flat) and self.indices == other.indices

    def __hash__(self):
        return hash(self.indices)

    def __le__(self, other):
        return self.indices <= other.indices

    def __repr__(self):
        return f"Flat({sorted(self.indices)}, codim={self.codim})"


class Character:
    """Integer weights, one per hyperplane, summing to zero."""

    __slots__ = ("weights",)

    def __init__(self, weights):
        self.weights = tuple(int(w) for w in weights)
        if sum(self.weights) != 0:
            raise InvalidCharacter(
                f"weights must sum to 0, got {sum(self.weights)}"
            )

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    @classmethod
    def from_tail(cls, tail):
        """Weights gamma_1..gamma_n with gamma_0 := -sum chosen for H_0."""
        tail = [int(w) for w in tail]
        return cls([-sum(tail)] + tail)

    def __repr__(self):
        return f"Character{self.weights}"


class BettiData:
    __slots__ = ("betti", "euler")

    def __init__(self, betti):
        self.betti = tuple(int(b) for b in betti)
        self.euler = sum((-1) ** q * b for q, b in enumerate(self.betti))

    def __repr__(self):
        return f"BettiData(betti={list(self.betti)}, euler={self.euler})"


class Arrangement:
    """n+1 rational hyperplanes in P^(r-1), H_0 distinguished.

    >>> a = Arrangement(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    >>> a.girth()
    4
    >>> a.betti_data().betti
    (1, 3, 3)
    """

    def __init__(self, r, forms, labels=None):
        self.r = int(r)
        self._rank_cache = {}
        self._flats = None
        self.forms = []
        for f in forms:
            vec = tuple(Fraction(x) for x in f)
            if len(vec) != self.r:
                raise ValueError(f"form {f} does not have {self.r} coordinates")
            if not any(vec):
                raise ValueError("zero covector is not a hyperplane")
            self.forms.append(vec)
        for i, j in combinations(range(len(self.forms)), 2):
            if self._rank_of((i, j)) < 2:
                raise ValueError(f"hyperplanes {i} and {j} coincide")
        self.labels = list(labels) if labels else [f"H{i}" for i in range(len(self.forms))]
        if len(self.labels) != len(self.forms):
            raise ValueError("one label per hyperplane")

    @property
    def n(self):
        """Count of non-distinguished hyperplanes."""
        return len(self.forms) - 1

    def _rank_of(self, indices):
        key = frozenset(indices)
        cache = self._rank_cache
        if key not in cache:
            if not key:
                cache[key] = 0
            else:
                m = Matrix(QQ, [list(self.forms[i]) for i in sorted(key)])
                cache[key] = rank(m)
        return cache[key]

    def is_essential(self):
        return self._rank_of(range(len(self.forms))) == self.r

    def _require_essential(self):
        if not self.is_essential():
            raise NotEssential(
                "the forms do not span; pass an essential arrangement"
            )

    def closure(self, indices):
        k = self._rank_of(indices)
        return frozenset(
            i
            for i in range(len(self.forms))
            if i in indices or self._rank_of(frozenset(indices) | {i}) == k
        )

    def central_flats(self):
        """All flats of the cone (closed index sets, the empty one included),
        as a dict {frozenset: codim}."""
        if self._flats is None:
            flats = {frozenset(): 0}
            frontier = [frozenset()]
            while frontier:
                nxt = []
                for flat in frontier:
                    for i in range(len(self.forms)):
                        if i in flat:
                            continue
                        new = self.closure(flat | {i})
                        if new not in flats:
                            flats[new] = self._rank_of(new)
                            nxt.append(new)
                frontier = nxt
            self._flats = flats
        return self._flats

    def intersection_lattice(self):
        """The projectively nonempty flats (codim < r), ordered by inclusion
        of index sets = reverse inclusion of subspaces."""
        return sorted(
            (
                Flat(s, c)
                for s, c in self.central_flats().items()
                if s and c < self.r
            ),
            key=lambda f: (f.codim, sorted(f.indices)),
        )

    def girth(self):
        """Minimum size of a dependent subset of the cone's forms; inf if
        the forms are independent.  Always >= 3 when finite."""
        m = len(self.forms)
        for k in range(3, min(m, self.r + 1) + 1):
            for sub in combinations(range(m), k):
                if self._rank_of(sub) < k:
                    return k
        return inf

    def _localization_connected(self, flat):
        """Whether the matroid of {forms[i] : i in flat} is connected:
        no bipartition with additive rank."""
        ground = sorted(flat)
        if len(ground) <= 1:
            return True
        total = self._rank_of(flat)
        first, rest = ground[0], ground[1:]
        for size in range(0, len(rest)):
            for part in combinations(rest, size):
                p1 = frozenset((first,) + part)
                p2 = frozenset(ground) - p1
                if p2 and self._rank_of(p1) + self._rank_of(p2) == total:
                    return False
        return True

    def dense_edges(self):
        """Flats of the cone whose localization is irreducible (connected
        matroid); every singleton qualifies."""
        return sorted(
            (
                Flat(s, c)
                for s, c in self.central_flats().items()
                if s and self._localization_connected(s)
            ),
            key=lambda f: (f.codim, sorted(f.indices)),
        )

    def is_nonresonant(self, character: Character):
        """Whether all dense edges inside H_0 have nonzero weight sums.

        Only projectively visible edges count (codim < r): the cone's
        center, when dense, contains every index and its weight sum is the
        zero character sum, so including it would make every character
        resonant.  Returns (verdict, violators)."""
        if len(character) != len(self.forms):
            raise InvalidCharacter(
                f"need {len(self.forms)} weights, got {len(character)}"
            )
        violators = []
        for flat in self.dense_edges():
            if flat.codim >= self.r:
                continue  # projectively empty: not an edge of the arrangement
            if 0 not in flat.indices:
                continue  # the flat's subspace is not inside H_0
            if sum(character[i] for i in flat.indices) == 0:
                violators.append(flat)
        return (not violators), violators

    def moebius(self):
        """Moebius values mu(0, S) on the central lattice."""
        flats = self.central_flats()
        order = sorted(flats, key=lambda s: (flats[s], sorted(s)))
        mu = {}
        for s in order:
            below = sum(mu[t] for t in mu if t < s)
            mu[s] = 1 if not s else -below
        return mu

    def betti_data(self) -> BettiData:
        """Betti numbers b_0..b_(r-1) of the projective complement."""
        self._require_essential()
        mu = self.moebius()
        flats = self.central_flats()
        betti = [0] * self.r
        for s, m in mu.items():
            if 0 in s:
                continue  # flat inside H_0: not a flat of the decone
            q = flats[s]
            if q < self.r:
                betti[q] += abs(m)
        return BettiData(betti)

    def generic_position_profile(self):
        """(p, is_generic_position): p = c - 2 when the girth c exceeds 3
        (inf for independent forms); generic position means c = r + 1 with
        more than r+1 hyperplanes... exactly: c = r+1 and n+1 > r."""
        self._require_essential()
        c = self.girth()
        if c == 3:
            raise GirthTooSmall(
                "c(A) = 3: p(M) is not determined combinatorially here"
            )
        p = inf if c == inf else c - 2
        is_generic = c == self.r + 1 and self.n + 1 > self.r
        return p, is_generic

    # -- constructions and I/O --------------------------------------------

    @classmethod
    def generic(cls, r, count):
        """count hyperplanes in P^(r-1) with every r-subset independent
        (moment-curve covectors)."""
        forms = [[Fraction(i) ** k for k in range(r)] for i in range(count)]
        return cls(r, forms)

    @classmethod
    def boolean(cls, n_plus_1):
        """The coordinate hyperplanes in P^(n_plus_1 - 1)."""
        r = n_plus_1
        forms = [[1 if j == i else 0 for j in range(r)] for i in range(r)]
        return cls(r, forms)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text) if isinstance(text, str) else text
        forms = [
            [Fraction(x) if isinstance(x, str) else x for x in row]
            for row in data["forms"]
        ]
        return cls(data["r"], forms, labels=data.get("labels"))

    def to_json(self):
        return json.dumps(
            {
                "r": self.r,
                "forms": [[str(x) if x.denominator != 1 else x.numerator for x in f] for f in self.forms],
                "labels": self.labels,
            }
        )
