"""Dense exact linear algebra over the rationals.

RatMatrix stores gmpy2.mpq entries row-major.  Everything here is exact:
row reduction pivots on the first nonzero entry, and the minimal
polynomial comes from Krylov sequences with dependence detected by exact
elimination, never from numerics.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from gmpy2 import mpq

from .errors import ArcwalkError
from .polys import RatPoly, poly_lcm


class LinearAlgebraError(ArcwalkError, ValueError):
    pass


def format_rational(q) -> str:
    q = mpq(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str):
    try:
        return mpq(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise LinearAlgebraError(f"bad rational {text!r}") from exc


class RatMatrix:
    """Immutable-by-convention dense rational matrix."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence]):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise LinearAlgebraError(
                f"data shape does not match {rows}x{cols}"
            )
        self.rows = rows
        self.cols = cols
        self.data = [[mpq(x) for x in r] for r in data]

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "RatMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls(rows, cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, entries: Sequence) -> "RatMatrix":
        return cls(len(entries), 1, [[x] for x in entries])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "RatMatrix":
        if not columns:
            return cls(0, 0, [])
        rows = len(columns[0])
        return cls(rows, len(columns), [[c[i] for c in columns] for i in range(rows)])

    def copy(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, self.data)

    # -- structure --------------------------------------------------------

    def __getitem__(self, key: tuple[int, int]):
        return self.data[key[0]][key[1]]

    def row(self, i: int) -> list:
        return list(self.data[i])

    def col(self, j: int) -> list:
        return [r[j] for r in self.data]

    def columns(self) -> list[list]:
        return [self.col(j) for j in range(self.cols)]

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix(
            self.cols, self.rows,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def is_zero(self) -> bool:
        return all(not x for r in self.data for x in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(
            self.rows, self.cols,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(
            self.rows, self.cols,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
        )

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, [[-x for x in r] for r in self.data])

    def __mul__(self, other):
        if not isinstance(other, RatMatrix):
            s = mpq(other)
            return RatMatrix(self.rows, self.cols, [[x * s for x in r] for r in self.data])
        if self.cols != other.rows:
            raise LinearAlgebraError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        bt = other.T.data
        out = [
            [sum((a * b for a, b in zip(ra, cb) if a), mpq(0)) for cb in bt]
            for ra in self.data
        ]
        return RatMatrix(self.rows, other.cols, out)

    def __rmul__(self, other):
        return self * other

    def apply(self, vec: Sequence) -> list:
        """Matrix-vector product as a plain list."""
        if len(vec) != self.cols:
            raise LinearAlgebraError("vector length does not match column count")
        return [sum((a * x for a, x in zip(r, vec) if a), mpq(0)) for r in self.data]

    def _same_shape(self, other: "RatMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise LinearAlgebraError("shape mismatch")

    @staticmethod
    def vstack(*mats: "RatMatrix") -> "RatMatrix":
        cols = mats[0].cols
        if any(m.cols != cols for m in mats):
            raise LinearAlgebraError("vstack column mismatch")
        data = [r for m in mats for r in m.data]
        return RatMatrix(len(data), cols, data)

    @staticmethod
    def hstack(*mats: "RatMatrix") -> "RatMatrix":
        rows = mats[0].rows
        if any(m.rows != rows for m in mats):
            raise LinearAlgebraError("hstack row mismatch")
        data = [sum((m.data[i] for m in mats), []) for i in range(rows)]
        return RatMatrix(rows, sum(m.cols for m in mats), data)

    # -- presentation -----------------------------------------------------

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self.data]

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols})"


# ---------------------------------------------------------------------------
# row reduction, rank and kernel
# ---------------------------------------------------------------------------


def rref(M: RatMatrix) -> tuple[RatMatrix, tuple[int, ...]]:
    """Reduced row-echelon form and the pivot column indices."""
    data = [list(r) for r in M.data]
    pivots = []
    r = 0
    for c in range(M.cols):
        if r == M.rows:
            break
        pr = next((i for i in range(r, M.rows) if data[i][c]), None)
        if pr is None:
            continue
        data[r], data[pr] = data[pr], data[r]
        inv = 1 / data[r][c]
        data[r] = [x * inv for x in data[r]]
        for i in range(M.rows):
            if i != r and data[i][c]:
                f = data[i][c]
                data[i] = [x - f * y for x, y in zip(data[i], data[r])]
        pivots.append(c)
        r += 1
    return RatMatrix(M.rows, M.cols, data), tuple(pivots)


def rank(M: RatMatrix) -> int:
    return len(rref(M)[1])


def rank_and_kernel(M: RatMatrix) -> tuple[int, RatMatrix]:
    """Rank and the standard free-variable kernel basis.

    Kernel vectors are the columns of the returned matrix, one per free
    column, carrying entry 1 in their own free position; M * kernel = 0.
    """
    R, pivots = rref(M)
    pivot_set = set(pivots)
    free = [c for c in range(M.cols) if c not in pivot_set]
    cols = []
    for f in free:
        v = [mpq(0)] * M.cols
        v[f] = mpq(1)
        for r, pc in enumerate(pivots):
            v[pc] = -R.data[r][f]
        cols.append(v)
    return len(pivots), RatMatrix.from_columns(cols) if cols else RatMatrix(M.cols, 0, [[] for _ in range(M.cols)])


def row_space_basis(M: RatMatrix) -> RatMatrix:
    """Nonzero rows of the RREF, as a matrix."""
    R, pivots = rref(M)
    return RatMatrix(len(pivots), M.cols, R.data[: len(pivots)])


# ---------------------------------------------------------------------------
# minimal polynomial via per-basis-vector Krylov sequences
# ---------------------------------------------------------------------------


def _sparse_rows_int(M: RatMatrix) -> list[list[tuple[int, int]]] | None:
    """Integer sparse row view, or None when some entry is non-integral."""
    out = []
    for r in M.data:
        row = []
        for j, x in enumerate(r):
            if x:
                if x.denominator != 1:
                    return None
                row.append((j, int(x)))
        out.append(row)
    return out


def _sparse_rows_q(M: RatMatrix) -> list[list[tuple[int, mpq]]]:
    return [[(j, x) for j, x in enumerate(r) if x] for r in M.data]


def _matvec(rows, v):
    return [sum(val * v[j] for j, val in row) if row else 0 for row in rows]


def _poly_on_vector(rows, p: RatPoly, e: int, n: int):
    """p(M) applied to the e-th standard basis vector (Horner)."""
    cs = p.coeffs
    w = [cs[-1] if i == e else 0 for i in range(n)]
    for c in cs[-2::-1]:
        w = _matvec(rows, w)
        if c:
            w[e] += c
    return w


class _KrylovEliminator:
    """Incremental RREF over Krylov vectors, tracking combinations."""

    def __init__(self, n: int):
        self.n = n
        self.pivots: list[int] = []
        self.rows: list[list[mpq]] = []
        self.combos: list[list[mpq]] = []

    def insert(self, vec, index: int) -> RatPoly | None:
        """Reduce vec (the index-th Krylov vector); on dependence return
        the monic dependency polynomial, else record the vector."""
        r = [mpq(x) for x in vec]
        combo = [mpq(0)] * index + [mpq(1)]
        for p, row, rc in zip(self.pivots, self.rows, self.combos):
            f = r[p]
            if f:
                for j, y in enumerate(row):
                    if y:
                        r[j] -= f * y
                for j, y in enumerate(rc):
                    if y:
                        if j < len(combo):
                            combo[j] -= f * y
                        else:  # pragma: no cover - combos never outgrow index+1
                            raise AssertionError
        pivot = next((j for j, x in enumerate(r) if x), None)
        if pivot is None:
            return RatPoly(combo)
        inv = 1 / r[pivot]
        self.pivots.append(pivot)
        self.rows.append([x * inv for x in r])
        self.combos.append([x * inv for x in combo] + [mpq(0)] * 0)
        return None


def _local_min_poly(rows, e: int, n: int, max_deg: int) -> RatPoly:
    elim = _KrylovEliminator(n)
    v = [1 if i == e else 0 for i in range(n)]
    for k in range(max_deg + 1):
        dep = elim.insert(v, k)
        if dep is not None:
            return dep
        v = _matvec(rows, v)
    dep = elim.insert(v, max_deg + 1)
    if dep is None:  # pragma: no cover - impossible, n+1 vectors in Q^n
        raise LinearAlgebraError("Krylov sequence failed to close")
    return dep


def min_poly(M: RatMatrix) -> RatPoly:
    """Monic minimal polynomial of a square matrix.

    Least common multiple, over the standard basis vectors, of each
    vector's Krylov dependency polynomial; basis vectors already
    annihilated by the running lcm are skipped.
    """
    if not M.is_square():
        raise LinearAlgebraError("minimal polynomial requires a square matrix")
    n = M.rows
    if n == 0:
        return RatPoly.one()
    rows = _sparse_rows_int(M) or _sparse_rows_q(M)
    p = RatPoly.one()
    for e in range(n):
        if not p == RatPoly.one():
            if all(not x for x in _poly_on_vector(rows, p, e, n)):
                continue
        local = _local_min_poly(rows, e, n, n)
        p = poly_lcm(p, local)
        if p.degree == n:
            break
    return p


def poly_eval_matrix(p: RatPoly, M: RatMatrix) -> RatMatrix:
    """p(M) by Horner's rule."""
    if not M.is_square():
        raise LinearAlgebraError("polynomial evaluation requires a square matrix")
    n = M.rows
    acc = RatMatrix.zeros(n, n)
    for c in reversed(p.coeffs):
        acc = acc * M if not acc.is_zero() else acc
        if c:
            acc = acc + RatMatrix.identity(n) * c
    return acc
