"""Dense exact linear algebra over the rings of :mod:`arrtwist.rings`.

Ranks are computed by fraction-free (Bareiss) elimination, so they are exact
over any integral domain here, including Laurent rings.  Smith normal forms
use the classical elementary-operation algorithm over a Euclidean ring with
smallest-size pivoting; divisors are reported as canonical associates
(positive over Z, valuation-0 monic over K[t,t^-1]).  Kernel bases come from
the tracked right transform of the Smith form, which over a PID yields a
basis of the kernel of the map of free modules (automatically saturated).

Matrices are immutable-by-convention dense row-major arrays; everything is
desk scale, so no sparsity.
"""

from __future__ import annotations

from .rings import Ring, UnsupportedRing, MixedRings


class Matrix:
    """A dense matrix over a fixed coefficient ring.

    >>> from arrtwist.rings import ZZ
    >>> m = Matrix(ZZ, [[4, 0], [0, 6]])
    >>> rank(m)
    2
    >>> smith_normal_form(m).divisors
    (2, 12)
    """

    __slots__ = ("ring", "nrows", "ncols", "rows")

    def __init__(self, ring: Ring, rows, nrows=None, ncols=None):
        rows = [list(r) for r in rows]
        if nrows is None:
            nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix data")
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        self.rows = [[ring.coerce(x) for x in r] for r in rows]

    @classmethod
    def zero(cls, ring, nrows, ncols):
        z = ring.zero
        return cls(ring, [[z] * ncols for _ in range(nrows)], nrows, ncols)

    @classmethod
    def identity(cls, ring, n):
        z, o = ring.zero, ring.one
        return cls(ring, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_entries(cls, ring, nrows, ncols, entries):
        """Build from a {(i, j): scalar} mapping; unset entries are zero."""
        m = cls.zero(ring, nrows, ncols)
        for (i, j), v in entries.items():
            m.rows[i][j] = ring.coerce(v)
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def copy(self):
        return Matrix(self.ring, [r[:] for r in self.rows], self.nrows, self.ncols)

    def transpose(self):
        return Matrix(
            self.ring,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.ncols,
            self.nrows,
        )

    def is_zero(self):
        return all(self.ring.is_zero(x) for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and all(
                self.rows[i][j] == other.rows[i][j]
                for i in range(self.nrows)
                for j in range(self.ncols)
            )
        )

    def __add__(self, other):
        self._check_compat(other, same_shape=True)
        return Matrix(
            self.ring,
            [
                [self.rows[i][j] + other.rows[i][j] for j in range(self.ncols)]
                for i in range(self.nrows)
            ],
            self.nrows,
            self.ncols,
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Matrix(
            self.ring,
            [[-x for x in r] for r in self.rows],
            self.nrows,
            self.ncols,
        )

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            s = self.ring.coerce(other)
            return Matrix(
                self.ring,
                [[x * s for x in r] for r in self.rows],
                self.nrows,
                self.ncols,
            )
        self._check_compat(other)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        z = self.ring.zero
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = z
                for k in range(self.ncols):
                    a = self.rows[i][k]
                    if not self.ring.is_zero(a):
                        acc = acc + a * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(self.ring, out, self.nrows, other.ncols)

    def __rmul__(self, other):
        s = self.ring.coerce(other)
        return Matrix(
            self.ring,
            [[s * x for x in r] for r in self.rows],
            self.nrows,
            self.ncols,
        )

    def _check_compat(self, other, same_shape=False):
        if self.ring != other.ring:
            raise MixedRings("matrices over different rings")
        if same_shape and (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    def submatrix(self, row_idx, col_idx):
        return Matrix(
            self.ring,
            [[self.rows[i][j] for j in col_idx] for i in row_idx],
            len(row_idx),
            len(col_idx),
        )

    def inverse(self):
        """Exact inverse; works over fields and whenever the matrix is
        invertible over the ring itself (determinant a unit)."""
        if self.nrows != self.ncols:
            raise ValueError("only square matrices can be inverted")
        R = self.ring
        n = self.nrows
        if R.is_field:
            # Gauss-Jordan on an augmented matrix.
            a = [self.rows[i][:] + Matrix.identity(R, n).rows[i] for i in range(n)]
            for c in range(n):
                piv = next((i for i in range(c, n) if not R.is_zero(a[i][c])), None)
                if piv is None:
                    raise ZeroDivisionError("matrix is singular")
                a[c], a[piv] = a[piv], a[c]
                inv = R.unit_inverse(a[c][c])
                a[c] = [x * inv for x in a[c]]
                for i in range(n):
                    if i != c and not R.is_zero(a[i][c]):
                        f = a[i][c]
                        a[i] = [a[i][j] - f * a[c][j] for j in range(2 * n)]
            return Matrix(R, [row[n:] for row in a], n, n)
        form = smith_normal_form(self, transforms=True)
        if form.rank != n or not all(R.is_unit(d) for d in form.divisors):
            raise ZeroDivisionError("matrix is not invertible over its ring")
        # D = L * self * Rt  =>  self^{-1} = Rt * D^{-1} * L
        dinv = Matrix(R, [
            [R.unit_inverse(form.pivots[i]) if i == j else R.zero for j in range(n)]
            for i in range(n)
        ])
        return form.right * dinv * form.left

    def det(self):
        """Fraction-free determinant (Bareiss)."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        R = self.ring
        n = self.nrows
        if n == 0:
            return R.one
        a = [r[:] for r in self.rows]
        prev = R.one
        sign = 1
        for k in range(n - 1):
            piv = next((i for i in range(k, n) if not R.is_zero(a[i][k])), None)
            if piv is None:
                return R.zero
            if piv != k:
                a[k], a[piv] = a[piv], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = R.exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev)
                a[i][k] = R.zero
            prev = a[k][k]
        d = a[n - 1][n - 1]
        return -d if sign < 0 else d

    def format_entries(self):
        return [[self.ring.format(x) for x in r] for r in self.rows]

    def __repr__(self):
        body = "; ".join(" ".join(self.ring.format(x) for x in r) for r in self.rows)
        return f"Matrix({self.ring.name if hasattr(self.ring, 'name') else self.ring}, {self.nrows}x{self.ncols}: {body})"


def rank(m: Matrix) -> int:
    """Rank over the fraction field, by fraction-free elimination."""
    R = m.ring
    a = [r[:] for r in m.rows]
    nr, nc = m.nrows, m.ncols
    r = 0
    prev = R.one
    for c in range(nc):
        if r >= nr:
            break
        # smallest-size nonzero pivot in this column keeps entries tame
        cand = [i for i in range(r, nr) if not R.is_zero(a[i][c])]
        if not cand:
            continue
        piv = min(cand, key=lambda i: R.euclid_size(a[i][c]))
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                a[i][j] = R.exact_div(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev)
            a[i][c] = R.zero
        prev = a[r][c]
        r += 1
    return r


class SmithForm:
    """Divisor chain d_1 | d_2 | ... | d_s of a matrix over a Euclidean ring.

    ``divisors`` are canonical associates; ``pivots`` are the raw diagonal
    entries (only meaningful when transforms were requested, satisfying
    ``left * A * right == diag(pivots)``).
    """

    __slots__ = ("divisors", "rank", "left", "right", "pivots")

    def __init__(self, divisors, left=None, right=None, pivots=None):
        self.divisors = tuple(divisors)
        self.rank = len(self.divisors)
        self.left = left
        self.right = right
        self.pivots = pivots

    def nontrivial(self, ring):
        """The non-unit divisors (the torsion-carrying part of the chain)."""
        return tuple(d for d in self.divisors if not ring.is_unit(d))


def smith_normal_form(m: Matrix, transforms: bool = False) -> SmithForm:
    """Smith normal form over Z, a field, or K[t,t^-1].

    The classical algorithm: move a smallest nonzero entry to the pivot,
    clear its row and column by division with remainder, absorb any entry
    the pivot fails to divide, and recurse on the rest.  The result is the
    divisor chain; with ``transforms=True``, invertible ``left`` and
    ``right`` with ``left * m * right`` diagonal are returned as well.
    """
    R = m.ring
    if not getattr(R, "is_euclidean", False):
        raise UnsupportedRing(f"Smith form needs a Euclidean ring, not {R}")
    a = [r[:] for r in m.rows]
    nr, nc = m.nrows, m.ncols
    L = Matrix.identity(R, nr).rows if transforms else None
    Rt = Matrix.identity(R, nc).rows if transforms else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if L is not None:
            L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if Rt is not None:
            for row in Rt:
                row[i], row[j] = row[j], row[i]

    def scale_row(i, unit):
        a[i] = [unit * x for x in a[i]]
        if L is not None:
            L[i] = [unit * x for x in L[i]]

    def scale_col(j, unit):
        for row in a:
            row[j] = unit * row[j]
        if Rt is not None:
            for row in Rt:
                row[j] = unit * row[j]

    def normalize_row(i):
        u = R.content_unit(a[i])
        if not R.is_zero(u - R.one):
            scale_row(i, u)

    def normalize_col(j):
        u = R.content_unit([row[j] for row in a])
        if not R.is_zero(u - R.one):
            scale_col(j, u)

    def add_row(dst, src, coef):
        a[dst] = [a[dst][j] + coef * a[src][j] for j in range(nc)]
        if L is not None:
            L[dst] = [L[dst][j] + coef * L[src][j] for j in range(nr)]
        normalize_row(dst)

    def add_col(dst, src, coef):
        for row in a:
            row[dst] = row[dst] + coef * row[src]
        if Rt is not None:
            for row in Rt:
                row[dst] = row[dst] + coef * row[src]
        normalize_col(dst)

    def two_row_op(r1, r2, x, y, z, w):
        # (row r1, row r2) <- (x*r1 + y*r2, z*r1 + w*r2); caller supplies a
        # unimodular 2x2, so the transform stays invertible.
        a[r1], a[r2] = (
            [x * a[r1][j] + y * a[r2][j] for j in range(nc)],
            [z * a[r1][j] + w * a[r2][j] for j in range(nc)],
        )
        if L is not None:
            L[r1], L[r2] = (
                [x * L[r1][j] + y * L[r2][j] for j in range(nr)],
                [z * L[r1][j] + w * L[r2][j] for j in range(nr)],
            )
        normalize_row(r1)
        normalize_row(r2)

    def two_col_op(c1, c2, x, y, z, w):
        for row in a:
            row[c1], row[c2] = x * row[c1] + y * row[c2], z * row[c1] + w * row[c2]
        if Rt is not None:
            for row in Rt:
                row[c1], row[c2] = x * row[c1] + y * row[c2], z * row[c1] + w * row[c2]
        normalize_col(c1)
        normalize_col(c2)

    def clear_entry_by_rows(t, i):
        """Zero a[i][t] against the pivot a[t][t] with one unimodular step."""
        p, v = a[t][t], a[i][t]
        q, r = R.euclid_divmod(v, p)
        if R.is_zero(r):
            add_row(i, t, -q)
            return
        g, x, y = R.xgcd(p, v)
        two_row_op(t, i, x, y, -R.exact_div(v, g), R.exact_div(p, g))

    def clear_entry_by_cols(t, j):
        p, v = a[t][t], a[t][j]
        q, r = R.euclid_divmod(v, p)
        if R.is_zero(r):
            add_col(j, t, -q)
            return
        g, x, y = R.xgcd(p, v)
        two_col_op(t, j, x, y, -R.exact_div(v, g), R.exact_div(p, g))

    for i in range(nr):
        u = R.content_unit(a[i])
        if not R.is_zero(u - R.one):
            scale_row(i, u)

    t = 0
    while t < min(nr, nc):
        # global smallest nonzero entry in the remaining block
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if not R.is_zero(a[i][j]):
                    sz = R.euclid_size(a[i][j])
                    if best is None or sz < best[0]:
                        best = (sz, i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            swap_rows(t, bi)
        if bj != t:
            swap_cols(t, bj)
        while True:
            # Canonical (e.g. monic) pivots keep quotient coefficients tame.
            piv = a[t][t]
            can = R.canonical(piv)
            if not R.is_zero(piv - can):
                scale_row(t, R.exact_div(can, piv))
            for i in range(t + 1, nr):
                if not R.is_zero(a[i][t]):
                    clear_entry_by_rows(t, i)
            for j in range(t + 1, nc):
                if not R.is_zero(a[t][j]):
                    clear_entry_by_cols(t, j)
            if any(not R.is_zero(a[i][t]) for i in range(t + 1, nr)):
                continue  # column ops re-dirtied the pivot column
            # pivot must divide the whole remaining block for the chain
            culprit = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if R.is_zero(a[i][j]):
                        continue
                    _, r = R.euclid_divmod(a[i][j], a[t][t])
                    if not R.is_zero(r):
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            add_row(t, culprit, R.one)
        t += 1

    pivots = []
    divisors = []
    for k in range(t):
        d = R.canonical(a[k][k])
        if L is not None:
            # scale the row by the unit that canonicalizes the pivot
            u = R.exact_div(d, a[k][k])
            scale_row(k, u)
        pivots.append(d)
        divisors.append(d)
    return SmithForm(
        divisors,
        left=Matrix(R, L, nr, nr) if transforms else None,
        right=Matrix(R, Rt, nc, nc) if transforms else None,
        pivots=pivots if transforms else None,
    )


def kernel_basis(m: Matrix) -> Matrix:
    """Columns spanning ker(m).  Over a PID this is a basis of the kernel of
    the map of free modules (the trailing columns of the right Smith
    transform), hence saturated; over a field it is an ordinary null-space
    basis."""
    form = smith_normal_form(m, transforms=True)
    cols = list(range(form.rank, m.ncols))
    return form.right.submatrix(range(m.ncols), cols)


def nullity(m: Matrix) -> int:
    return m.ncols - rank(m)
