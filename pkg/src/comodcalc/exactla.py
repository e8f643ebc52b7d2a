"""Exact dense linear algebra over GF(p) and the rationals.

Matrices act on column vectors. Tensor products use the i-major basis order:
``e_i (x) e_j`` sits at index ``i * dim2 + j``, which is exactly what
:meth:`Mat.kron` produces. Every other module relies on this convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

__all__ = [
    "ExactField",
    "GF",
    "QQ",
    "Mat",
    "LinearMap",
    "Subspace",
    "Quotient",
    "DimensionError",
    "kernel",
    "image",
    "equalizer",
    "coequalizer",
    "coequalizer_quotient",
    "tensor",
    "dual",
    "compose",
    "direct_sum",
    "subspace_sum",
    "subspace_intersection",
    "solve",
    "stacked_kernel",
    "swap_matrix",
    "vec",
    "unvec",
    "coordinate_map",
    "invariant_closure",
    "is_invariant",
    "restrict_operators",
    "quotient_operators",
    "intertwiners",
]


class DimensionError(ValueError):
    """Raised when matrix shapes do not fit together."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class ExactField:
    """A prime field GF(p) (``p`` given) or the rationals (``p is None``)."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(int(p)):
            raise ValueError(f"{p} is not prime")
        self.p = None if p is None else int(p)

    @property
    def kind(self) -> str:
        return "q" if self.p is None else "gf"

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExactField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("field", self.p))

    def __repr__(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    # elements
    def __call__(self, x) -> int | Fraction:
        if self.p is None:
            if isinstance(x, str):
                return Fraction(x.strip())
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        if isinstance(x, str):
            return self(Fraction(x.strip()))
        return int(x) % self.p

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def red(self, x):
        return x if self.p is None else x % self.p

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x) if self.p is None else pow(int(x), self.p - 2, self.p)

    def elements(self) -> list:
        """All field elements; only for prime fields."""
        if self.p is None:
            raise ValueError("the rationals cannot be enumerated")
        return list(range(self.p))

    def encode(self, x):
        """JSON form: ints for GF(p), ``"num/den"`` strings for Q."""
        if self.p is None:
            x = Fraction(x)
            return f"{x.numerator}/{x.denominator}"
        return int(x)

    def decode(self, v):
        if self.p is None:
            if isinstance(v, bool) or not isinstance(v, (int, str)):
                raise ValueError(f"bad rational entry {v!r}")
            return Fraction(v) if isinstance(v, int) else Fraction(v.strip())
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValueError(f"bad GF({self.p}) entry {v!r}")
        return v % self.p


def GF(p: int) -> ExactField:
    return ExactField(p)


QQ = ExactField(None)


def _rref(field: ExactField, rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form in place; returns (nonzero rows, pivot columns)."""
    p = field.p
    r = 0
    pivots: list[int] = []
    nrows = len(rows)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        if p is None:
            inv = 1 / pr[c]
            if inv != 1:
                pr = [x * inv for x in pr]
        else:
            inv = pow(pr[c], p - 2, p)
            if inv != 1:
                pr = [(x * inv) % p for x in pr]
        rows[r] = pr
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    ri = rows[i]
                    if p is None:
                        rows[i] = [a - f * b for a, b in zip(ri, pr)]
                    else:
                        rows[i] = [(a - f * b) % p for a, b in zip(ri, pr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


class Mat:
    """Immutable dense matrix over an :class:`ExactField`."""

    __slots__ = ("field", "rows", "cols", "data", "_hash")

    def __init__(self, field: ExactField, rows: int, cols: int, data: Sequence[Sequence]):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = tuple(tuple(r) for r in data)
        self._hash = None
        if len(self.data) != rows or any(len(r) != cols for r in self.data):
            raise DimensionError(f"data does not have shape {rows}x{cols}")

    # constructors
    @classmethod
    def from_rows(cls, field: ExactField, rows: Sequence[Sequence], cols: int | None = None) -> "Mat":
        rows = [[field(x) for x in r] for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(field, len(rows), cols, rows)

    @classmethod
    def from_columns(cls, field: ExactField, columns: Sequence[Sequence], rows: int) -> "Mat":
        cols = [[field(x) for x in c] for c in columns]
        if any(len(c) != rows for c in cols):
            raise DimensionError("column length mismatch")
        data = [[c[i] for c in cols] for i in range(rows)]
        return cls(field, rows, len(cols), data)

    @classmethod
    def column(cls, field: ExactField, values: Sequence) -> "Mat":
        return cls(field, len(values), 1, [[field(v)] for v in values])

    @classmethod
    def zeros(cls, field: ExactField, rows: int, cols: int) -> "Mat":
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: ExactField, n: int) -> "Mat":
        z, o = field.zero, field.one
        return cls(field, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, field: ExactField, n: int, i: int) -> "Mat":
        z, o = field.zero, field.one
        return cls(field, n, 1, [[o if k == i else z] for k in range(n)])

    # basic access
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def domain_dim(self) -> int:
        return self.cols

    @property
    def codomain_dim(self) -> int:
        return self.rows

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.data[i][j]

    def col(self, j: int) -> "Mat":
        return Mat(self.field, self.rows, 1, [[r[j]] for r in self.data])

    def column_values(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list["Mat"]:
        return [self.col(j) for j in range(self.cols)]

    def flat(self) -> tuple:
        """Entries of a column or row vector, or row-major entries otherwise."""
        return tuple(x for r in self.data for x in r)

    def select_rows(self, idx: Iterable[int]) -> "Mat":
        idx = list(idx)
        return Mat(self.field, len(idx), self.cols, [self.data[i] for i in idx])

    def select_cols(self, idx: Iterable[int]) -> "Mat":
        idx = list(idx)
        return Mat(self.field, self.rows, len(idx), [[r[j] for j in idx] for r in self.data])

    @property
    def T(self) -> "Mat":
        if self.rows == 0:
            return Mat(self.field, self.cols, 0, [[] for _ in range(self.cols)])
        return Mat(self.field, self.cols, self.rows, list(zip(*self.data)))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self.rows, self.cols, self.data))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.data)
        return f"Mat<{self.field}>({self.rows}x{self.cols})[{body}]"

    def _check_field(self, other: "Mat") -> None:
        if self.field != other.field:
            raise DimensionError(f"field mismatch: {self.field} vs {other.field}")

    # arithmetic
    def __matmul__(self, other: "Mat") -> "Mat":
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionError(f"cannot compose {self.shape} with {other.shape}")
        p = self.field.p
        z = self.field.zero
        n = other.cols
        bdata = other.data
        out = []
        # row-by-row over the nonzero entries of the left factor; most maps here are sparse
        for r in self.data:
            acc = [z] * n
            for k, a in enumerate(r):
                if a:
                    brow = bdata[k]
                    if a == 1:
                        acc = [s + b for s, b in zip(acc, brow)]
                    else:
                        acc = [s + a * b for s, b in zip(acc, brow)]
            if p is not None:
                acc = [s % p for s in acc]
            out.append(acc)
        return Mat(self.field, self.rows, n, out)

    def __add__(self, other: "Mat") -> "Mat":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        red = self.field.red
        return Mat(self.field, self.rows, self.cols,
                   [[red(a + b) for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {self.shape} and {other.shape}")
        red = self.field.red
        return Mat(self.field, self.rows, self.cols,
                   [[red(a - b) for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __neg__(self) -> "Mat":
        red = self.field.red
        return Mat(self.field, self.rows, self.cols, [[red(-a) for a in r] for r in self.data])

    def scale(self, c) -> "Mat":
        c = self.field(c)
        red = self.field.red
        return Mat(self.field, self.rows, self.cols, [[red(c * a) for a in r] for r in self.data])

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def kron(self, other: "Mat") -> "Mat":
        """Kronecker product with i-major ordering of the tensor basis."""
        self._check_field(other)
        p = self.field.p
        out = []
        z = self.field.zero
        zeros = [z] * other.cols
        for ra in self.data:
            for rb in other.data:
                row = []
                for a in ra:
                    if not a:
                        row.extend(zeros)
                    elif p is None:
                        row.extend([a * b for b in rb])
                    else:
                        row.extend([(a * b) % p for b in rb])
                out.append(row)
        return Mat(self.field, self.rows * other.rows, self.cols * other.cols, out)

    @staticmethod
    def hstack(field: ExactField, rows: int, mats: Sequence["Mat"]) -> "Mat":
        for m in mats:
            if m.rows != rows:
                raise DimensionError("hstack row mismatch")
        data = [sum((m.data[i] for m in mats), ()) for i in range(rows)]
        return Mat(field, rows, sum(m.cols for m in mats), data)

    @staticmethod
    def vstack(field: ExactField, cols: int, mats: Sequence["Mat"]) -> "Mat":
        data = []
        for m in mats:
            if m.cols != cols:
                raise DimensionError("vstack column mismatch")
            data.extend(m.data)
        return Mat(field, len(data), cols, data)

    @staticmethod
    def block_diag(field: ExactField, mats: Sequence["Mat"]) -> "Mat":
        R = sum(m.rows for m in mats)
        C = sum(m.cols for m in mats)
        z = field.zero
        data = []
        off = 0
        for m in mats:
            for r in m.data:
                data.append([z] * off + list(r) + [z] * (C - off - m.cols))
            off += m.cols
        return Mat(field, R, C, data)

    # elimination
    def rref(self) -> tuple["Mat", list[int]]:
        rows, piv = _rref(self.field, [list(r) for r in self.data], self.cols)
        return Mat(self.field, len(rows), self.cols, rows), piv

    @property
    def rank(self) -> int:
        return len(_rref(self.field, [list(r) for r in self.data], self.cols)[1])

    def nullspace(self) -> "Mat":
        """Columns form a basis of the kernel (standard free-variable basis)."""
        rows, piv = _rref(self.field, [list(r) for r in self.data], self.cols)
        F = self.field
        free = [j for j in range(self.cols) if j not in set(piv)]
        basis = []
        for fj in free:
            v = [F.zero] * self.cols
            v[fj] = F.one
            for r, pc in zip(rows, piv):
                v[pc] = F.red(-r[fj])
            basis.append(v)
        return Mat.from_columns(F, basis, self.cols) if basis else Mat.zeros(F, self.cols, 0)

    def inverse(self) -> "Mat":
        if self.rows != self.cols:
            raise DimensionError("inverse of a non-square matrix")
        n = self.rows
        aug = Mat.hstack(self.field, n, [self, Mat.identity(self.field, n)])
        rows, piv = _rref(self.field, [list(r) for r in aug.data], 2 * n)
        if piv[:n] != list(range(n)) or len(rows) < n:
            raise ZeroDivisionError("matrix is singular")
        return Mat(self.field, n, n, [r[n:] for r in rows])

    def left_inverse(self) -> "Mat":
        """Some L with L @ self = I; self must have independent columns."""
        sol = solve(self.T, Mat.identity(self.field, self.cols))
        if sol is None:
            raise ZeroDivisionError("columns are dependent")
        return sol.T

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank == self.rows

    def to_lists(self, encode: bool = False) -> list[list]:
        if encode:
            enc = self.field.encode
            return [[enc(x) for x in r] for r in self.data]
        return [list(r) for r in self.data]


# The linear maps of the library are plain matrices (codomain x domain).
LinearMap = Mat


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of ``K^ambient_dim`` with a canonical (column-echelon) basis.

    The basis column ``i`` has a 1 in row ``pivots[i]`` and zeros in the other
    pivot rows, so coordinates can be read off directly.
    """

    ambient_dim: int
    basis: Mat
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, field: ExactField, ambient_dim: int, vectors: Mat | Sequence[Mat] | None) -> "Subspace":
        if vectors is None:
            vectors = Mat.zeros(field, ambient_dim, 0)
        elif not isinstance(vectors, Mat):
            vectors = Mat.hstack(field, ambient_dim, list(vectors)) if vectors else Mat.zeros(field, ambient_dim, 0)
        if vectors.rows != ambient_dim:
            raise DimensionError("vectors outside the ambient space")
        rows, piv = _rref(field, [list(c) for c in zip(*vectors.data)] if vectors.rows else [], ambient_dim)
        basis = Mat(field, ambient_dim, len(rows), [list(c) for c in zip(*rows)] if rows else [[] for _ in range(ambient_dim)])
        return cls(ambient_dim, basis, tuple(piv))

    @classmethod
    def whole(cls, field: ExactField, n: int) -> "Subspace":
        return cls(n, Mat.identity(field, n), tuple(range(n)))

    @classmethod
    def zero(cls, field: ExactField, n: int) -> "Subspace":
        return cls(n, Mat.zeros(field, n, 0), ())

    @property
    def field(self) -> ExactField:
        return self.basis.field

    @property
    def dim(self) -> int:
        return self.basis.cols

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    def coordinates(self, v: Mat) -> Mat | None:
        """Coordinates of the columns of ``v`` in the basis, or None if outside."""
        c = v.select_rows(self.pivots)
        if self.basis @ c != v:
            return None
        return c

    def contains(self, v: Mat) -> bool:
        return self.coordinates(v) is not None

    def __contains__(self, v: Mat) -> bool:
        return self.contains(v)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self.basis)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return subspace_intersection(self, other)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} in {self.ambient_dim}, basis={self.basis!r})"

    def map(self, f: Mat) -> "Subspace":
        return Subspace.span(self.field, f.rows, f @ self.basis)

    def preimage(self, f: Mat) -> "Subspace":
        """{v : f v in self}."""
        q = Quotient.of(self)
        return kernel(q.proj @ f)


@dataclass(frozen=True, eq=False)
class Quotient:
    """``K^n / sub`` with a projection and a section built from non-pivot coordinates."""

    sub: Subspace
    proj: Mat
    section: Mat

    @classmethod
    def of(cls, sub: Subspace) -> "Quotient":
        F = sub.field
        n = sub.ambient_dim
        piv = set(sub.pivots)
        keep = [j for j in range(n) if j not in piv]
        reduce = Mat.identity(F, n) - sub.basis @ Mat.identity(F, n).select_rows(sub.pivots)
        proj = reduce.select_rows(keep)
        section = Mat.identity(F, n).select_cols(keep)
        return cls(sub, proj, section)

    @property
    def dim(self) -> int:
        return self.proj.rows

    @property
    def ambient_dim(self) -> int:
        return self.sub.ambient_dim

    def induced(self, f: Mat, target: "Quotient | None" = None) -> Mat:
        """Map on quotients induced by ``f`` (caller guarantees it descends)."""
        out = f @ self.section
        return target.proj @ out if target is not None else out


# module-level calculus

def kernel(f: Mat) -> Subspace:
    return Subspace.span(f.field, f.cols, f.nullspace())


def image(f: Mat) -> Subspace:
    return Subspace.span(f.field, f.rows, f)


def _same_shape(f: Mat, g: Mat) -> None:
    if f.shape != g.shape:
        raise DimensionError(f"parallel maps must share a shape: {f.shape} vs {g.shape}")


def equalizer(f: Mat, g: Mat) -> Subspace:
    _same_shape(f, g)
    return kernel(f - g)


def coequalizer_quotient(f: Mat, g: Mat) -> Quotient:
    _same_shape(f, g)
    return Quotient.of(image(f - g))


def coequalizer(f: Mat, g: Mat) -> Mat:
    """Projection ``q`` from the codomain onto ``codomain / im(f - g)``."""
    return coequalizer_quotient(f, g).proj


def tensor(f: Mat, g: Mat) -> Mat:
    return f.kron(g)


def dual(f: Mat) -> Mat:
    return f.T


def compose(f: Mat, g: Mat) -> Mat:
    """``f`` after ``g``."""
    return f @ g


def direct_sum(f: Mat, g: Mat) -> Mat:
    f._check_field(g)
    return Mat.block_diag(f.field, [f, g])


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError("ambient mismatch")
    return Subspace.span(a.field, a.ambient_dim, Mat.hstack(a.field, a.ambient_dim, [a.basis, b.basis]))


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError("ambient mismatch")
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.field, a.ambient_dim)
    stacked = Mat.hstack(a.field, a.ambient_dim, [a.basis, -b.basis])
    ker = stacked.nullspace()
    return Subspace.span(a.field, a.ambient_dim, a.basis @ ker.select_rows(range(a.dim)))


def solve(f: Mat, b: Mat) -> Mat | None:
    """Some ``x`` with ``f @ x == b`` (``b`` may have several columns), or None."""
    f._check_field(b)
    if f.rows != b.rows:
        raise DimensionError("right-hand side has the wrong length")
    n = f.cols
    aug = Mat.hstack(f.field, f.rows, [f, b])
    rows, piv = _rref(f.field, [list(r) for r in aug.data], aug.cols)
    if any(pc >= n for pc in piv):
        return None
    F = f.field
    x = [[F.zero] * b.cols for _ in range(n)]
    for r, pc in zip(rows, piv):
        x[pc] = list(r[n:])
    return Mat(F, n, b.cols, x)


def stacked_kernel(field: ExactField, n: int, blocks: Iterable[Mat]) -> Mat:
    """Kernel basis of the vertical stack of ``blocks`` (each with ``n`` columns).

    Blocks are processed one at a time, which keeps the systems small when
    early equations already cut the solution space down.
    """
    K = Mat.identity(field, n)
    for E in blocks:
        if K.cols == 0:
            break
        if E.cols != n:
            raise DimensionError("equation block has the wrong width")
        M = E @ K
        if M.is_zero():
            continue
        K = K @ M.nullspace()
    return K


def swap_matrix(field: ExactField, m: int, n: int) -> Mat:
    """The flip ``K^m (x) K^n -> K^n (x) K^m``."""
    z, o = field.zero, field.one
    data = [[z] * (m * n) for _ in range(m * n)]
    for i, j in product(range(m), range(n)):
        data[j * m + i][i * n + j] = o
    return Mat(field, m * n, m * n, data)


def vec(F: Mat) -> Mat:
    """Row-major vectorisation, matching ``Hom(V, W) = W (x) V*``."""
    return Mat(F.field, F.rows * F.cols, 1, [[x] for r in F.data for x in r])


def unvec(v: Mat | Sequence, rows: int, cols: int, field: ExactField | None = None) -> Mat:
    vals = v.flat() if isinstance(v, Mat) else tuple(v)
    fld = v.field if isinstance(v, Mat) else field
    if len(vals) != rows * cols:
        raise DimensionError("vector length does not match the matrix shape")
    return Mat(fld, rows, cols, [vals[i * cols:(i + 1) * cols] for i in range(rows)])


# operator families: every finite-dimensional structure in the library is, on
# the linear-algebra side, a space with a list of operators.

def coordinate_map(sub: Subspace) -> Mat:
    """Left inverse of ``sub.basis`` reading coordinates at the pivot rows."""
    return Mat.identity(sub.field, sub.ambient_dim).select_rows(sub.pivots)


def invariant_closure(field: ExactField, n: int, ops: Sequence[Mat], start: Subspace | Mat) -> Subspace:
    """Smallest subspace containing ``start`` and stable under every operator."""
    V = start if isinstance(start, Subspace) else Subspace.span(field, n, start)
    frontier = V.basis
    while frontier.cols:
        images = [T @ frontier for T in ops]
        if not images:
            break
        W = Subspace.span(field, n, Mat.hstack(field, n, [V.basis] + images))
        if W.dim == V.dim:
            break
        # only vectors outside the old span need to be pushed again
        new_cols = [j for j in range(W.dim) if not V.contains(W.basis.col(j))]
        frontier = W.basis.select_cols(new_cols)
        V = W
    return V


def is_invariant(sub: Subspace, ops: Sequence[Mat]) -> bool:
    return all(sub.contains(T @ sub.basis) for T in ops)


def restrict_operators(sub: Subspace, ops: Sequence[Mat]) -> tuple[Mat, ...]:
    P = coordinate_map(sub)
    return tuple(P @ T @ sub.basis for T in ops)


def quotient_operators(q: Quotient, ops: Sequence[Mat]) -> tuple[Mat, ...]:
    return tuple(q.proj @ T @ q.section for T in ops)


def intertwiners(field: ExactField, ops_x: Sequence[Mat], ops_y: Sequence[Mat], dx: int, dy: int,
                 extra: Sequence[Mat] = ()) -> list[Mat]:
    """Basis of ``{F : dy x dx | F X_i = Y_i F for all i}`` (plus optional linear constraints on vec F)."""
    if len(ops_x) != len(ops_y):
        raise DimensionError("operator families have different lengths")
    n = dx * dy
    Iy, Ix = Mat.identity(field, dy), Mat.identity(field, dx)
    blocks = [Iy.kron(X.T) - Y.kron(Ix) for X, Y in zip(ops_x, ops_y)]
    K = stacked_kernel(field, n, list(extra) + blocks)
    return [unvec(K.col(j), dy, dx) for j in range(K.cols)]
