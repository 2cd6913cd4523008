"""Iterated semidirect products of free groups with homologically trivial
monodromy, and their character-specialized equivariant chain complexes.

A tower F_(d_l) |x ... |x F_(d_2) is specified by the free ranks d_j of its
levels (level 2 is the quotient end) and, for every generator y of a lower
level i and every level j > i, the word alpha_y(x_k) by which y conjugates
the k-th generator of level j.  The complex of the whole group is assembled
level by level:

    C_q  =  D_q  (+)  (D_(q-1))^d

where D is the complex of the sub-tower.  On the new summand the boundary
has two parts: a slot map (-1)^(deg v) (t^(-w(x_k)) - 1) v into D_(q-1), and
the sub-tower boundary with every group element g replaced by its Jacobian
representation -- the matrix

    rho(g) = t^(w(g)) * Jbar(g)^T,    Jbar(g)_{kc} = nu(iota(d alpha_g(x_k) / d x_c)),

where iota is the group-ring involution and nu the character.  rho is
multiplicative, so it extends from generators to arbitrary words using exact
matrix inverses over K[t,t^-1] for inverse letters; the boundary entries of
deeper levels are evaluated lazily through chains of such representations
instead of being held as noncommutative group-ring elements.  Every complex
is validated against d . d = 0 at construction; together with the
specialization checks (t -> 1 ranks, Koszul reduction, degree <= 1 agreement
with the presentation complex) that gate pins all sign and side conventions.
"""

from __future__ import annotations

import json
from math import prod

from .chain import FreeChainComplex, Homology
from .fox import FreeWord, fox_derivative
from .koszul import Disagreement, PresentationSummary
from .linalg import Matrix, smith_normal_form
from .rings import LaurentRing, QQ


class TowerInvalid(ValueError):
    pass


class DegreeUnavailable(ValueError):
    pass


class TowerSpec:
    """Exponents d_2..d_l plus monodromy words.

    ``monodromy[(j, (i, a))]`` lists, for the a-th generator of level i < j,
    the images of the d_j generators of level j (as words in level j).
    Missing entries default to the trivial action.
    """

    def __init__(self, exponents, monodromy=None, names=None):
        self.exponents = [int(d) for d in exponents]  # d_2 .. d_l, by level
        if any(d < 1 for d in self.exponents):
            raise TowerInvalid("free ranks must be positive")
        self.names = {}
        for j in self.levels():
            given = (names or {}).get(j)
            if given is not None:
                if len(given) != self.d(j):
                    raise TowerInvalid(f"level {j} needs {self.d(j)} generator names")
                self.names[j] = list(given)
            else:
                self.names[j] = [f"g{j}_{k + 1}" for k in range(self.d(j))]
        flat = [nm for j in self.levels() for nm in self.names[j]]
        if len(set(flat)) != len(flat):
            raise TowerInvalid("generator names must be globally unique")
        self.monodromy = {}
        for key, words in (monodromy or {}).items():
            j, lower = key
            i, a = lower
            if not (2 <= i < j <= self.top_level()):
                raise TowerInvalid(f"bad monodromy key {key}")
            if len(words) != self.d(j):
                raise TowerInvalid(
                    f"monodromy of {self.names[i][a]} on level {j} needs {self.d(j)} words"
                )
            parsed = []
            for w in words:
                word = w if isinstance(w, FreeWord) else FreeWord.parse(w, names=self.names[j])
                if word.max_generator() > self.d(j):
                    raise TowerInvalid(f"monodromy word {w!r} leaves level {j}")
                parsed.append(word)
            self.monodromy[(j, (i, a))] = parsed

    # -- shape helpers ------------------------------------------------------

    def levels(self):
        return range(2, len(self.exponents) + 2)

    def top_level(self):
        return len(self.exponents) + 1

    def d(self, j):
        return self.exponents[j - 2]

    def generators(self):
        return [(j, a) for j in self.levels() for a in range(self.d(j))]

    def action(self, j, lower):
        """Images of level-j generators under the lower generator; trivial
        when unspecified."""
        key = (j, lower)
        if key in self.monodromy:
            return self.monodromy[key]
        return [FreeWord.generator(k) for k in range(self.d(j))]

    def name(self, gen):
        j, a = gen
        return self.names[j][a]

    def parse_element(self, text):
        """A word across levels: space-separated globally unique names with
        optional -1 suffixes, e.g. 'y1 x2-1'.  Returns ((level, idx), sign)
        pairs."""
        lookup = {}
        for j in self.levels():
            for a, nm in enumerate(self.names[j]):
                lookup[nm] = (j, a)
        out = []
        for tok in str(text).split():
            inv = tok.endswith("-1")
            nm = tok[:-2] if inv else tok
            if nm not in lookup:
                raise ValueError(f"unknown generator {nm!r}")
            out.append((lookup[nm], -1 if inv else 1))
        return out

    def poincare_coefficients(self):
        """Coefficients of prod_j (1 + d_j T); entry q is the q-th Betti
        number of the tower group."""
        coeffs = [1]
        for dj in self.exponents:
            nxt = [0] * (len(coeffs) + 1)
            for q, c in enumerate(coeffs):
                nxt[q] += c
                nxt[q + 1] += c * dj
            coeffs = nxt
        return coeffs

    # -- I/O ----------------------------------------------------------------

    @classmethod
    def from_json(cls, text):
        """Wire format: exponents listed from the innermost (normal) level
        outward, i.e. [d_l, ..., d_2], matching the semidirect product
        notation; monodromy keyed by level and lower-generator name."""
        data = json.loads(text) if isinstance(text, str) else text
        exps = [int(d) for d in data["exponents"]][::-1]  # to d_2..d_l
        nlevels = len(exps)
        names = {}
        for j in range(2, nlevels + 2):
            given = (data.get("generators") or {}).get(f"level_{j}")
            if given:
                names[j] = list(given)
        tmp = cls(exps, names=names)  # names resolved; now parse monodromy
        mono = {}
        lookup = {}
        for j in tmp.levels():
            for a, nm in enumerate(tmp.names[j]):
                lookup[nm] = (j, a)
        for level_key, per_gen in (data.get("monodromy") or {}).items():
            j = int(str(level_key).split("_")[-1])
            for gen_name, words in per_gen.items():
                if gen_name not in lookup:
                    raise TowerInvalid(f"unknown generator {gen_name!r} in monodromy")
                mono[(j, lookup[gen_name])] = words
        tw = cls(exps, monodromy=mono, names=tmp.names)
        return tw

    def to_json(self):
        mono = {}
        for (j, lower), words in self.monodromy.items():
            level = mono.setdefault(f"level_{j}", {})
            level[self.name(lower)] = [
                " ".join(
                    self.names[j][abs(x) - 1] + ("" if x > 0 else "-1")
                    for x in w.letters
                )
                or "1"
                for w in words
            ]
        return json.dumps(
            {
                "exponents": self.exponents[::-1],
                "generators": {f"level_{j}": self.names[j] for j in self.levels()},
                "monodromy": mono,
            }
        )


class TowerCharacter:
    """An integer weight for every generator of every level."""

    def __init__(self, weights):
        # weights: {(level, idx): int}
        self.weights = {k: int(v) for k, v in weights.items()}

    @classmethod
    def from_lists(cls, tw: TowerSpec, per_level):
        w = {}
        for j, vals in zip(tw.levels(), per_level):
            if len(vals) != tw.d(j):
                raise ValueError(f"level {j} needs {tw.d(j)} weights")
            for a, v in enumerate(vals):
                w[(j, a)] = int(v)
        return cls(w)

    @classmethod
    def from_names(cls, tw: TowerSpec, named):
        lookup = {}
        for j in tw.levels():
            for a, nm in enumerate(tw.names[j]):
                lookup[nm] = (j, a)
        w = {}
        for nm, v in named.items():
            if nm not in lookup:
                raise ValueError(f"unknown generator {nm!r}")
            w[lookup[nm]] = int(v)
        return cls(w)

    def of(self, gen):
        return self.weights.get(gen, 0)


def check_tower(tw: TowerSpec):
    """Validate the two structural requirements.

    (1) exactly: every monodromy word abelianizes to its own generator.
    (2) the conjugation relators of the sub-tower act consistently, checked
        through the Jacobian representations at probe characters (an exact
        matrix identity; composing the substitutions directly would need
        inverse automorphisms, which the input does not carry).

    Returns {"valid": bool, "homology_violations": [...],
    "relator_violations": [...]}.
    """
    homology_bad = []
    for (j, lower), words in tw.monodromy.items():
        for k, w in enumerate(words):
            expect = [0] * tw.d(j)
            expect[k] = 1
            if w.exponent_sums(tw.d(j)) != expect:
                homology_bad.append(
                    {"level": j, "generator": tw.name(lower), "slot": k,
                     "word": repr(w)}
                )
    relator_bad = []
    if not homology_bad:
        probes = [
            TowerCharacter({g: p for g, p in zip(tw.generators(), _PRIMES)}),
            TowerCharacter({g: p for g, p in zip(tw.generators(), _PRIMES[::-1])}),
        ]
        for ch in probes:
            ev = _Evaluator(tw, ch)
            for j in tw.levels():
                for i in tw.levels():
                    for ip in tw.levels():
                        if not (i < ip < j):
                            continue
                        for a in range(tw.d(i)):
                            for b in range(tw.d(ip)):
                                y, z = (i, a), (ip, b)
                                lhs = ev.rho_word([(y, 1), (z, 1)], (j,))
                                conj = tw.action(ip, y)[b]  # alpha_y(z), level-ip word
                                rhs = ev.rho_level_word(conj, ip, (j,)) * ev.rho_letter(y, 1, (j,))
                                if lhs != rhs:
                                    viol = {"level": j, "pair": (tw.name(y), tw.name(z))}
                                    if viol not in relator_bad:
                                        relator_bad.append(viol)
    return {
        "valid": not homology_bad and not relator_bad,
        "homology_violations": homology_bad,
        "relator_violations": relator_bad,
    }


_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61]


class _Evaluator:
    """Jacobian representations evaluated through interpretation chains.

    A chain (j1, j2, ..., jm) with j1 < j2 < ... denotes: represent on level
    j1, with the matrix entries themselves represented on level j2, and so
    on; the empty chain is the character t^w.  Block sizes multiply.
    """

    def __init__(self, tw: TowerSpec, ch: TowerCharacter, ring=None):
        self.tw = tw
        self.ch = ch
        self.ring = ring or LaurentRing(QQ)
        self._rho_cache = {}
        self._word_cache = {}

    def size(self, chain):
        return prod(self.tw.d(j) for j in chain)

    def rho_letter(self, gen, sign, chain) -> Matrix:
        key = (gen, sign, chain)
        if key in self._rho_cache:
            return self._rho_cache[key]
        if not chain:
            out = Matrix(self.ring, [[self.ring.t(sign * self.ch.of(gen))]], 1, 1)
        elif sign < 0:
            out = self.rho_letter(gen, 1, chain).inverse()
        else:
            J, rest = chain[0], chain[1:]
            if gen[0] >= J:
                raise TowerInvalid(f"{self.tw.name(gen)} cannot act on level {J}")
            d = self.tw.d(J)
            s = self.size(rest)
            images = self.tw.action(J, gen)
            gen_rest = self.rho_letter(gen, 1, rest)
            out = Matrix.zero(self.ring, d * s, d * s)
            for c in range(d):
                w = images[c]
                for r in range(d):
                    gre = fox_derivative(w, r).bar()  # iota(d alpha(x_c) / d x_r)
                    val = Matrix.zero(self.ring, s, s)
                    for word, coeff in gre.terms.items():
                        val = val + coeff * self.rho_level_word(word, J, rest)
                    block = val * gen_rest
                    for p in range(s):
                        for q in range(s):
                            out.rows[r * s + p][c * s + q] = block[p, q]
        self._rho_cache[key] = out
        return out

    def rho_level_word(self, w: FreeWord, level, chain) -> Matrix:
        """rho of a single-level word (letters all at ``level``)."""
        key = (w.letters, level, chain)
        if key in self._word_cache:
            return self._word_cache[key]
        out = Matrix.identity(self.ring, self.size(chain))
        for x in w.letters:
            out = out * self.rho_letter((level, abs(x) - 1), 1 if x > 0 else -1, chain)
        self._word_cache[key] = out
        return out

    def rho_word(self, letters, chain) -> Matrix:
        """rho of a mixed-level word given as ((level, idx), sign) pairs."""
        out = Matrix.identity(self.ring, self.size(chain))
        for gen, sign in letters:
            out = out * self.rho_letter(gen, sign, chain)
        return out

    # -- the recursive complex ---------------------------------------------

    def pieces(self, j, chain):
        """(block ranks, scalar boundaries) of the level-<=j sub-tower with
        coefficients twisted through ``chain``; block size = size(chain)."""
        key = (j, chain)
        cache = getattr(self, "_pieces_cache", None)
        if cache is None:
            cache = self._pieces_cache = {}
        if key in cache:
            return cache[key]
        s = self.size(chain)
        if j == 1:
            out = ([1], [])
        else:
            d_ranks, d_bnds = self.pieces(j - 1, chain)
            t_ranks, t_bnds = self.pieces(j - 1, (j,) + chain)
            d = self.tw.d(j)
            old_top = len(d_ranks) - 1
            new_top = old_top + 1
            ranks = []
            for q in range(new_top + 1):
                dq = d_ranks[q] if q <= old_top else 0
                dq1 = d_ranks[q - 1] if 1 <= q else 0
                ranks.append(dq + d * dq1)
            bnds = []
            for q in range(1, new_top + 1):
                dq = d_ranks[q] if q <= old_top else 0
                dq1 = d_ranks[q - 1]
                dq2 = d_ranks[q - 2] if q >= 2 else 0
                rows = (dq1 + d * dq2) * s
                cols = (dq + d * dq1) * s
                mat = Matrix.zero(self.ring, rows, cols)
                if q <= old_top:  # sub-tower boundary on the first summand
                    db = d_bnds[q - 1]
                    for rr in range(db.nrows):
                        for cc in range(db.ncols):
                            mat.rows[rr][cc] = db[rr, cc]
                sign = -1 if (q - 1) % 2 else 1
                eye = Matrix.identity(self.ring, s)
                for k in range(d):  # slot maps into the first summand
                    slot = self.rho_letter((j, k), -1, chain) - eye
                    for b in range(dq1):
                        col0 = (dq + k * dq1 + b) * s
                        row0 = b * s
                        for p in range(s):
                            for qq in range(s):
                                v = slot[p, qq]
                                mat.rows[row0 + p][col0 + qq] = -v if sign < 0 else v
                if q >= 2 and q - 1 <= old_top:  # twisted sub-boundary
                    tb = t_bnds[q - 2]
                    ds = d * s
                    for a in range(dq2):
                        for b in range(dq1):
                            for kp in range(d):
                                for k in range(d):
                                    row0 = (dq1 + kp * dq2 + a) * s
                                    col0 = (dq + k * dq1 + b) * s
                                    trow0 = (a * d + kp) * s
                                    tcol0 = (b * d + k) * s
                                    for p in range(s):
                                        for qq in range(s):
                                            v = tb[trow0 + p, tcol0 + qq]
                                            if not self.ring.is_zero(v):
                                                mat.rows[row0 + p][col0 + qq] = v
                bnds.append(mat)
            out = (ranks, bnds)
        cache[key] = out
        return out


def jacobian_rep(tw: TowerSpec, level, element, ch: TowerCharacter) -> Matrix:
    """rho(g) on the given level: an invertible d_level x d_level matrix over
    Q[t,t^-1], multiplicative in g.

    ``element`` is a mixed word below ``level``: either a string of
    space-separated generator names ('y1 x1-1') or ((level, idx), sign)
    pairs.

    >>> tw = TowerSpec([1, 2], monodromy={(3, (2, 0)): ["x1", "x1 x2 x1-1"]},
    ...                names={2: ["y1"], 3: ["x1", "x2"]})
    >>> ch = TowerCharacter.from_lists(tw, [[3], [1, 2]])
    >>> jacobian_rep(tw, 3, "y1", ch).format_entries()
    [['t^3', '-t + t^3'], ['0', 't^2']]
    """
    if isinstance(element, str):
        element = tw.parse_element(element)
    ev = _Evaluator(tw, ch)
    return ev.rho_word(list(element), (level,))


def build_tower_complex(tw: TowerSpec, ch: TowerCharacter) -> FreeChainComplex:
    """The specialized chain complex of the whole tower over Q[t,t^-1].

    Ranks are the coefficients of prod (1 + d_j T); construction fails with
    TowerInvalid if the tower data is inconsistent (the d.d = 0 gate).
    """
    report = check_tower(tw)
    if not report["valid"]:
        raise TowerInvalid(f"tower fails validation: {report}")
    ev = _Evaluator(tw, ch)
    ranks, bnds = ev.pieces(tw.top_level(), ())
    try:
        return FreeChainComplex(ev.ring, ranks, bnds)
    except ValueError as e:  # pragma: no cover - gate for malformed data
        raise TowerInvalid(f"assembled boundaries are not a complex: {e}") from e


def tor_groups(tw: TowerSpec, ch: TowerCharacter, max_q=None):
    """Tor_q of the trivial module against K[t,t^-1] through the character,
    as homology of the tower complex; {q: Homology}."""
    cx = build_tower_complex(tw, ch)
    top = cx.top if max_q is None else min(max_q, cx.top)
    return {q: cx.homology(q) for q in range(top + 1)}


def pi_p_presentation_fibertype(
    tw: TowerSpec, p: int, ch: TowerCharacter
) -> PresentationSummary:
    """The (p+2)-nd boundary of the tower complex as a presentation matrix,
    with its cokernel summary.  The caller asserts the geometric hypotheses
    (fiber-type ambient, p = r - 1)."""
    cx = build_tower_complex(tw, ch)
    if p + 2 > cx.top:
        raise DegreeUnavailable(
            f"complex has top degree {cx.top}; boundary {p + 2} does not exist"
        )
    mat = cx.boundary(p + 2)
    form = smith_normal_form(mat)
    coker = Homology(mat.nrows - form.rank, form.nontrivial(cx.ring))
    return PresentationSummary(mat, coker, cx.ring)


def rank_formula_general(chi: int, r: int, tor_ranks) -> int:
    """(-1)^(r-1) [ chi - sum_(q=0)^r (-1)^q tor_ranks[q] ]."""
    if r < 3:
        raise ValueError("the rank formula needs r >= 3")
    tor_ranks = list(tor_ranks)
    if len(tor_ranks) < r + 1:
        raise ValueError(f"need Tor ranks for q = 0..{r}")
    alt = sum((-1) ** q * tor_ranks[q] for q in range(r + 1))
    return (-1) ** (r - 1) * (chi - alt)


def rank_formula_nonresonant(chi: int, r: int, m: int, b_r_pi=None, exponents=None):
    """The nonresonant case split: (-1)^(r-1) chi when r+1 < m, and the r-th
    Betti number of the tower group when r+1 = m (equal to prod d_j when the
    complex has dimension r).  Returns a report with the applicable value and
    the combinatorial cross-check when exponents are supplied."""
    if r < 3:
        raise ValueError("needs r >= 3")
    out = {"r": r, "m": m, "chi": chi}
    if r + 1 < m:
        out["case"] = "r+1<m"
        out["rank"] = (-1) ** (r - 1) * chi
    elif r + 1 == m:
        out["case"] = "r+1=m"
        if b_r_pi is None and exponents is not None:
            coeffs = TowerSpec(list(exponents)).poincare_coefficients()
            b_r_pi = coeffs[r] if r < len(coeffs) else 0
        if b_r_pi is None:
            raise ValueError("r+1 = m needs b_r(pi) or the exponents")
        out["rank"] = int(b_r_pi)
    else:
        raise ValueError("a proper section needs r < m")
    if exponents is not None:
        exps = list(exponents)
        out["exponent_product"] = prod(exps)
        coeffs = TowerSpec(exps).poincare_coefficients()
        out["poincare_coefficients"] = coeffs
        if out["case"] == "r+1=m" and r == len(exps):
            if out["rank"] != out["exponent_product"]:
                raise Disagreement(
                    f"b_r(pi) = {out['rank']} but the exponent product is "
                    f"{out['exponent_product']}"
                )
    return out
