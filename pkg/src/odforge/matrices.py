"""Exact dense matrix algebra over the integers and over formal signed variables.

Two matrix kinds live here:

* ``IntMatrix`` holds exact integer entries backed by a numpy array.  Products
  go through a proven-safe fast path: float64 BLAS when every intermediate
  value is bounded below 2**53, int64 accumulation when bounded below 2**63,
  and arbitrary-precision Python integers otherwise.  Every path is exact;
  there is no silent overflow and no rounding.

* ``SignedVarMatrix`` holds entries drawn from {0, +x_1, -x_1, ..., +x_l, -x_l}
  for formal commuting variables x_j, encoded as signed integer codes: 0 for
  zero and ``+j`` / ``-j`` for ``+x_j`` / ``-x_j``.  A cell mentions at most
  one variable, so the matrix decomposes uniquely as X = sum_j x_j * A_j with
  pairwise disjoint integer coefficient matrices A_j.

Indexing convention: storage is 0-based throughout.  Classical 1-based matrix
descriptions are converted here, in one place, as follows: a circulant has
C[i][j] = a[(j - i) mod n] (row i is the first row cyclically right-shifted by
i), a back-circulant has B[i][j] = d[(i + j) mod n], and the back-diagonal
permutation R has ones exactly where i + j = n - 1 (0-based), which is the
1-based condition i + j == 1 (mod n).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence, Union

import numpy as np

__all__ = [
    "MatrixError",
    "VerificationInternalError",
    "IntMatrix",
    "SignedVarMatrix",
    "Matrix",
    "ODType",
    "WeighingType",
    "StructureReport",
    "CheckReport",
    "Var",
    "identity",
    "zero_matrix",
    "kronecker",
    "direct_sum",
    "mat_mul",
    "transpose",
    "negate",
    "circulant",
    "back_circulant",
    "back_diagonal",
    "structure_check",
    "verify_weighing",
    "decompose_family",
    "verify_od",
    "specialize_variables",
    "substitute_integers",
    "variable_matrix",
    "collapse_all_to_one",
    "to_weighing_matrix",
]

_FLOAT_SAFE = 2**53
_INT64_SAFE = 2**63 - 1

_SIGNED_INT_DTYPES = (np.int8, np.int16, np.int32, np.int64)


class MatrixError(ValueError):
    """Malformed matrix input: bad shape, bad entries, or kind mismatch."""


class VerificationInternalError(RuntimeError):
    """An operation's own output failed re-verification; indicates a bug."""


def _is_int(value) -> bool:
    return isinstance(value, (int, np.integer)) and not isinstance(value, bool)


def _as_exact_array(data) -> np.ndarray:
    """Return a 2-D exact-integer array (signed int dtype, or object for big values)."""
    if isinstance(data, np.ndarray):
        if data.ndim != 2:
            raise MatrixError(f"expected a 2-D array, got ndim={data.ndim}")
        if data.dtype in _SIGNED_INT_DTYPES:
            return data.copy()
        if data.dtype == object:
            arr = data.copy()
            for v in arr.flat:
                if not _is_int(v):
                    raise MatrixError(f"non-integer entry {v!r}")
            return arr
        if np.issubdtype(data.dtype, np.integer):
            # unsigned dtypes: route through object to avoid wrap-around
            return _as_exact_array([[int(v) for v in row] for row in data])
        raise MatrixError(f"matrix entries must be integers, got dtype {data.dtype}")
    rows = [list(r) for r in data]
    if not rows:
        raise MatrixError("matrix needs at least one row")
    width = len(rows[0])
    if width == 0:
        raise MatrixError("matrix needs at least one column")
    big = False
    for r in rows:
        if len(r) != width:
            raise MatrixError("ragged rows")
        for v in r:
            if not _is_int(v):
                raise MatrixError(f"non-integer entry {v!r}")
            if not (-_INT64_SAFE <= int(v) <= _INT64_SAFE):
                big = True
    if big:
        arr = np.empty((len(rows), width), dtype=object)
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                arr[i, j] = int(v)
        return arr
    return np.array(rows, dtype=np.int64)


def _max_abs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    if arr.dtype == object:
        return max(abs(int(v)) for v in arr.flat)
    return int(np.max(np.abs(arr.astype(np.int64, copy=False))))


def _exact_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact integer product of two 2-D integer arrays.

    Chooses the cheapest representation whose intermediates provably cannot
    lose exactness: float64 (BLAS) while every partial sum stays below 2**53,
    int64 while below 2**63, Python integers beyond that.
    """
    bound = a.shape[1] * _max_abs(a) * _max_abs(b)
    if bound < _FLOAT_SAFE:
        prod = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
        return prod.astype(np.int64)
    if bound < _INT64_SAFE and a.dtype != object and b.dtype != object:
        return a.astype(np.int64) @ b.astype(np.int64)
    return np.dot(a.astype(object), b.astype(object))


class IntMatrix:
    """Dense matrix with exact integer entries."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        arr = _as_exact_array(entries)
        arr.setflags(write=False)
        self.entries = arr

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def tolist(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(
            np.array_equal(self.entries, other.entries)
        )

    def __hash__(self):
        return hash((self.entries.shape, tuple(self.entries.flat[:16])))

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols})"


class SignedVarMatrix:
    """Square matrix over {0, +-x_1, ..., +-x_l}, encoded as signed variable codes.

    ``codes[i][j] == 0`` means a zero cell; ``codes[i][j] == +-j`` means
    ``+-x_j`` (variables are numbered from 1).  ``num_vars`` is l; every code
    magnitude must lie in [0, l].
    """

    __slots__ = ("codes", "num_vars")

    def __init__(self, codes, num_vars: int | None = None):
        arr = _as_exact_array(codes)
        if arr.dtype == object:
            raise MatrixError("variable codes must fit machine integers")
        if arr.shape[0] != arr.shape[1]:
            raise MatrixError("symbolic matrices must be square")
        top = int(np.max(np.abs(arr))) if arr.size else 0
        if num_vars is None:
            num_vars = top
        if not _is_int(num_vars) or num_vars < 0:
            raise MatrixError("num_vars must be a nonnegative integer")
        if top > num_vars:
            raise MatrixError(f"variable index {top} exceeds num_vars={num_vars}")
        arr.setflags(write=False)
        self.codes = arr
        self.num_vars = int(num_vars)

    @property
    def order(self) -> int:
        return self.codes.shape[0]

    @property
    def rows(self) -> int:
        return self.codes.shape[0]

    @property
    def cols(self) -> int:
        return self.codes.shape[1]

    def tolist(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.codes]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedVarMatrix):
            return NotImplemented
        return self.num_vars == other.num_vars and bool(
            np.array_equal(self.codes, other.codes)
        )

    def __hash__(self):
        return hash((self.codes.shape, self.num_vars))

    def __repr__(self) -> str:
        return f"SignedVarMatrix(order={self.order}, num_vars={self.num_vars})"


Matrix = Union[IntMatrix, SignedVarMatrix]


class Var(NamedTuple):
    """Substitution target meaning 'the variable with this 1-based index'."""

    index: int


@dataclass(frozen=True)
class ODType:
    """Order and type tuple (s_1, ..., s_l) of an orthogonal design claim."""

    order: int
    type_tuple: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "type_tuple", tuple(int(s) for s in self.type_tuple))
        if not _is_int(self.order) or self.order < 1:
            raise MatrixError("order must be a positive integer")
        if len(self.type_tuple) < 1:
            raise MatrixError("type tuple must be nonempty")
        if any(s < 1 for s in self.type_tuple):
            raise MatrixError("type entries must be positive")
        if sum(self.type_tuple) > self.order:
            raise MatrixError(
                f"type weights sum to {sum(self.type_tuple)} > order {self.order}"
            )

    @property
    def num_vars(self) -> int:
        return len(self.type_tuple)

    @property
    def total_weight(self) -> int:
        return sum(self.type_tuple)


@dataclass(frozen=True)
class WeighingType:
    """Order and weight (n, k) of a weighing-matrix claim."""

    order: int
    weight: int

    def __post_init__(self):
        if not _is_int(self.order) or self.order < 1:
            raise MatrixError("order must be a positive integer")
        if not _is_int(self.weight) or self.weight < 1:
            raise MatrixError("weight must be a positive integer")
        if self.weight > self.order:
            raise MatrixError(
                f"weight {self.weight} exceeds order {self.order}"
            )


@dataclass(frozen=True)
class StructureReport:
    """Shape predicates of a square matrix, computed exactly."""

    symmetric: bool
    skew_symmetric: bool
    circulant: bool
    back_circulant: bool
    zero_diagonal: bool


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a verifier: ``ok`` or the first violated condition."""

    ok: bool
    condition: str | None = None
    where: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok

    def message(self) -> str:
        if self.ok:
            return "ok"
        if self.where is None:
            return self.condition or "failed"
        return f"{self.condition} at {self.where}"


def identity(n: int) -> IntMatrix:
    if not _is_int(n) or n < 1:
        raise MatrixError("identity order must be >= 1")
    return IntMatrix(np.eye(n, dtype=np.int64))


def zero_matrix(rows: int, cols: int | None = None) -> IntMatrix:
    cols = rows if cols is None else cols
    if rows < 1 or cols < 1:
        raise MatrixError("zero matrix needs positive dimensions")
    return IntMatrix(np.zeros((rows, cols), dtype=np.int64))


def _payload(m: Matrix) -> np.ndarray:
    return m.entries if isinstance(m, IntMatrix) else m.codes


def _entries_are_signs(arr: np.ndarray) -> bool:
    if arr.dtype == object:
        return all(-1 <= int(v) <= 1 for v in arr.flat)
    return bool(np.all(np.abs(arr) <= 1))


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product.  A symbolic left factor needs a {0,+1,-1} right factor."""
    if isinstance(a, SignedVarMatrix):
        if not isinstance(b, IntMatrix):
            raise MatrixError("Kronecker of two symbolic matrices is not defined here")
        if not _entries_are_signs(b.entries):
            raise MatrixError(
                "symbolic Kronecker requires the numeric factor to have entries in {0,+1,-1}"
            )
        codes = np.kron(a.codes, b.entries.astype(np.int64))
        return SignedVarMatrix(codes, a.num_vars)
    if isinstance(b, SignedVarMatrix):
        if not _entries_are_signs(a.entries):
            raise MatrixError(
                "symbolic Kronecker requires the numeric factor to have entries in {0,+1,-1}"
            )
        codes = np.kron(a.entries.astype(np.int64), b.codes)
        return SignedVarMatrix(codes, b.num_vars)
    ea, eb = a.entries, b.entries
    if ea.dtype == object or eb.dtype == object or _max_abs(ea) * _max_abs(eb) > _INT64_SAFE:
        return IntMatrix(np.kron(ea.astype(object), eb.astype(object)))
    return IntMatrix(np.kron(ea.astype(np.int64), eb.astype(np.int64)))


def direct_sum(a: Matrix, b: Matrix) -> Matrix:
    """Block-diagonal sum.  Symbolic operands must share one variable set."""
    if isinstance(a, SignedVarMatrix) != isinstance(b, SignedVarMatrix):
        raise MatrixError("direct_sum needs operands of the same kind")
    if isinstance(a, SignedVarMatrix):
        assert isinstance(b, SignedVarMatrix)
        if a.num_vars != b.num_vars:
            raise MatrixError("direct_sum of symbolic matrices needs equal num_vars")
        n, m = a.order, b.order
        out = np.zeros((n + m, n + m), dtype=np.int64)
        out[:n, :n] = a.codes
        out[n:, n:] = b.codes
        return SignedVarMatrix(out, a.num_vars)
    ea, eb = a.entries, b.entries
    dtype = object if (ea.dtype == object or eb.dtype == object) else np.int64
    out = np.zeros((a.rows + b.rows, a.cols + b.cols), dtype=dtype)
    out[: a.rows, : a.cols] = ea
    out[a.rows :, a.cols :] = eb
    return IntMatrix(out)


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if not isinstance(a, IntMatrix) or not isinstance(b, IntMatrix):
        raise MatrixError("mat_mul is defined for integer matrices only")
    if a.cols != b.rows:
        raise MatrixError(f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    return IntMatrix(_exact_matmul(a.entries, b.entries))


def transpose(m: Matrix) -> Matrix:
    if isinstance(m, SignedVarMatrix):
        return SignedVarMatrix(m.codes.T, m.num_vars)
    return IntMatrix(m.entries.T)


def negate(m: Matrix) -> Matrix:
    if isinstance(m, SignedVarMatrix):
        return SignedVarMatrix(-m.codes, m.num_vars)
    return IntMatrix(-m.entries)


def circulant(first_row: Sequence[int]) -> IntMatrix:
    """Circulant matrix: row i is ``first_row`` cyclically right-shifted by i."""
    arr = _as_exact_array([list(first_row)])[0]
    n = arr.shape[0]
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return IntMatrix(arr[idx])


def back_circulant(first_row: Sequence[int]) -> IntMatrix:
    """Back-circulant matrix B[i][j] = d[(i + j) mod n]; always symmetric."""
    arr = _as_exact_array([list(first_row)])[0]
    n = arr.shape[0]
    idx = (np.arange(n)[None, :] + np.arange(n)[:, None]) % n
    return IntMatrix(arr[idx])


def back_diagonal(n: int) -> IntMatrix:
    """Back-diagonal permutation: ones where i + j = n - 1 (0-based)."""
    if not _is_int(n) or n < 1:
        raise MatrixError("back_diagonal order must be >= 1")
    return IntMatrix(np.fliplr(np.eye(n, dtype=np.int64)))


def structure_check(m: Matrix) -> StructureReport:
    """Exact shape predicates; works for numeric and symbolic matrices alike."""
    arr = _payload(m)
    if arr.shape[0] != arr.shape[1]:
        raise MatrixError("structure_check needs a square matrix")
    n = arr.shape[0]
    symmetric = bool(np.array_equal(arr, arr.T))
    skew = bool(np.array_equal(arr, -(arr.T)))
    if arr.dtype == object:
        zero_diag = all(int(v) == 0 for v in np.diagonal(arr))
    else:
        zero_diag = not bool(np.any(np.diagonal(arr)))
    shift = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    circ = bool(np.array_equal(arr, arr[0][shift]))
    bshift = (np.arange(n)[None, :] + np.arange(n)[:, None]) % n
    bcirc = bool(np.array_equal(arr, arr[0][bshift]))
    return StructureReport(
        symmetric=symmetric,
        skew_symmetric=skew,
        circulant=circ,
        back_circulant=bcirc,
        zero_diagonal=zero_diag,
    )


def _first_mismatch(a: np.ndarray, b: np.ndarray) -> tuple[int, int] | None:
    diff = a != b
    if not np.any(diff):
        return None
    r, c = np.argwhere(diff)[0]
    return int(r), int(c)


def verify_weighing(w: IntMatrix, k: int) -> CheckReport:
    """Check that ``w`` is a weighing matrix of weight ``k``.

    Conditions, reported in order of first violation: square shape, entries in
    {0,+1,-1}, exactly k nonzeros in every row and every column, and
    W * W^T = k * I computed exactly.
    """
    if not isinstance(w, IntMatrix):
        raise MatrixError("verify_weighing needs an integer matrix")
    if not _is_int(k) or k < 0:
        raise MatrixError("weight must be a nonnegative integer")
    if not w.is_square:
        return CheckReport(False, "not square", (w.rows, w.cols))
    arr = w.entries
    n = w.rows
    if arr.dtype == object:
        for (i, j), v in np.ndenumerate(arr):
            if not -1 <= int(v) <= 1:
                return CheckReport(False, "entry outside {0,+1,-1}", (int(i), int(j)))
        arr = arr.astype(np.int64)
    else:
        bad = np.argwhere(np.abs(arr) > 1)
        if bad.size:
            r, c = bad[0]
            return CheckReport(False, "entry outside {0,+1,-1}", (int(r), int(c)))
    support = np.abs(arr)
    row_counts = support.sum(axis=1)
    off = np.argwhere(row_counts != k)
    if off.size:
        return CheckReport(False, f"row weight != {k}", (int(off[0][0]),))
    col_counts = support.sum(axis=0)
    off = np.argwhere(col_counts != k)
    if off.size:
        return CheckReport(False, f"column weight != {k}", (int(off[0][0]),))
    prod = _exact_matmul(arr, arr.T)
    expect = k * np.eye(n, dtype=np.int64)
    spot = _first_mismatch(prod, expect)
    if spot is not None:
        return CheckReport(False, "rows not orthogonal with weight k", spot)
    return CheckReport(True)


def decompose_family(x: SignedVarMatrix) -> list[IntMatrix]:
    """Coefficient matrices A_1..A_l with x = sum_j x_j * A_j (disjoint by encoding)."""
    if not isinstance(x, SignedVarMatrix):
        raise MatrixError("decompose_family needs a symbolic matrix")
    out = []
    codes = x.codes
    sign = np.sign(codes).astype(np.int8)
    mag = np.abs(codes)
    for j in range(1, x.num_vars + 1):
        out.append(IntMatrix(np.where(mag == j, sign, np.int8(0))))
    return out


def _verify_family(
    fam: Sequence[IntMatrix], weights: Sequence[int], n: int
) -> CheckReport:
    """Shared orthogonal-design family check.

    Condition (i): each A_j is a weighing matrix of weight s_j.  Condition
    (ii): every pair is anti-amicable, A_i A_j^T = -(A_j A_i^T).  Disjointness
    is structural for matrices produced by ``decompose_family``.
    """
    for j, (a, s) in enumerate(zip(fam, weights), start=1):
        rep = verify_weighing(a, s)
        if not rep.ok:
            return CheckReport(
                False, f"variable {j}: {rep.condition}", rep.where
            )
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            left = _exact_matmul(fam[i].entries, fam[j].entries.T)
            right = _exact_matmul(fam[j].entries, fam[i].entries.T)
            spot = _first_mismatch(left, -right)
            if spot is not None:
                return CheckReport(
                    False, f"variables {i + 1},{j + 1} not anti-amicable", spot
                )
    return CheckReport(True)


def verify_od(x: SignedVarMatrix, t: ODType) -> CheckReport:
    """Check that ``x`` is an orthogonal design of the claimed order and type.

    Uses the family characterization: X = sum_j x_j A_j is an orthogonal
    design of type (s_1..s_l) iff the A_j are pairwise disjoint weighing
    matrices of weights s_j satisfying A_i A_j^T = -(A_j A_i^T) for i != j.
    """
    if not isinstance(x, SignedVarMatrix):
        raise MatrixError("verify_od needs a symbolic matrix")
    if x.order != t.order:
        return CheckReport(False, f"order {x.order} != claimed {t.order}", None)
    if x.num_vars != t.num_vars:
        return CheckReport(
            False, f"{x.num_vars} variables != claimed {t.num_vars}", None
        )
    return _verify_family(decompose_family(x), t.type_tuple, t.order)


def _substitution_table(x: SignedVarMatrix, values: Sequence[int]) -> np.ndarray:
    l = x.num_vars
    if len(values) != l:
        raise MatrixError(f"need {l} values, got {len(values)}")
    big = any(abs(int(v)) > 2**31 for v in values)
    table = np.zeros(2 * l + 1, dtype=object if big else np.int64)
    for i, v in enumerate(values, start=1):
        table[l + i] = int(v)
        table[l - i] = -int(v)
    return table


def substitute_integers(x: SignedVarMatrix, values: Sequence[int]) -> IntMatrix:
    """Evaluate the symbolic matrix at integer values (x_j := values[j-1])."""
    table = _substitution_table(x, values)
    return IntMatrix(table[x.codes + x.num_vars])


def specialize_variables(
    x: SignedVarMatrix, mapping: Mapping[int, Union[int, Var]]
) -> Matrix:
    """Substitute each variable by another variable, 0, +1, or -1.

    The mapping must be total on x's variables.  Merging x_i -> x_j adds the
    weights of the two slots; sending x_i -> 0 deletes its slot.  Constant
    targets +1/-1 cannot be mixed with variable targets (the entry types do
    not admit mixed symbolic/numeric cells); an all-constant mapping yields an
    IntMatrix.  Surviving variables are renumbered 1..l' preserving their
    original order.  The result is re-verified; failure raises
    VerificationInternalError because the merge rules preserve the design
    property by construction.
    """
    if not isinstance(x, SignedVarMatrix):
        raise MatrixError("specialize_variables needs a symbolic matrix")
    l = x.num_vars
    if set(mapping.keys()) != set(range(1, l + 1)):
        raise MatrixError("mapping must be total on variables 1..num_vars")
    var_targets: list[int] = []
    has_const_sign = False
    for i in range(1, l + 1):
        tgt = mapping[i]
        if isinstance(tgt, Var):
            if not _is_int(tgt.index) or tgt.index < 1:
                raise MatrixError(f"bad variable target {tgt!r}")
            var_targets.append(tgt.index)
        elif _is_int(tgt):
            if tgt not in (-1, 0, 1):
                raise MatrixError(f"constant target must be one of -1, 0, +1, got {tgt}")
            if tgt != 0:
                has_const_sign = True
        else:
            raise MatrixError(f"target must be Var or one of -1,0,+1, got {tgt!r}")
    if var_targets and has_const_sign:
        raise MatrixError("cannot mix variable targets with +1/-1 constants")

    if var_targets:
        kept = sorted(set(var_targets))
        renumber = {old: new for new, old in enumerate(kept, start=1)}
        images = []
        for i in range(1, l + 1):
            tgt = mapping[i]
            images.append(renumber[tgt.index] if isinstance(tgt, Var) else 0)
        table = np.zeros(2 * l + 1, dtype=np.int64)
        for i, img in enumerate(images, start=1):
            table[l + i] = img
            table[l - i] = -img
        out = SignedVarMatrix(table[x.codes + x.num_vars], len(kept))
        fam = decompose_family(out)
        weights = []
        for a in fam:
            support = np.abs(a.entries.astype(np.int64))
            weights.append(int(support[0].sum()))
        rep = _verify_family(fam, weights, out.order)
        if not rep.ok:
            raise VerificationInternalError(
                f"specialized matrix failed re-verification: {rep.message()}"
            )
        return out

    values = [int(mapping[i]) for i in range(1, l + 1)]
    out_int = substitute_integers(x, values)
    weight = int(np.abs(out_int.entries.astype(np.int64))[0].sum())
    rep = verify_weighing(out_int, weight)
    if not rep.ok:
        raise VerificationInternalError(
            f"specialized matrix failed re-verification: {rep.message()}"
        )
    return out_int


def variable_matrix(index: int, coefficients: IntMatrix) -> SignedVarMatrix:
    """x_index times a {0,+1,-1} coefficient matrix, as a symbolic matrix."""
    if not _is_int(index) or index < 1:
        raise MatrixError("variable index must be >= 1")
    if not isinstance(coefficients, IntMatrix) or not coefficients.is_square:
        raise MatrixError("variable_matrix needs a square integer matrix")
    if not _entries_are_signs(coefficients.entries):
        raise MatrixError("coefficients must lie in {0,+1,-1}")
    return SignedVarMatrix(coefficients.entries.astype(np.int64) * index, index)


def collapse_all_to_one(x: SignedVarMatrix) -> SignedVarMatrix:
    """Merge every variable into x_1 (summing the type weights)."""
    out = specialize_variables(x, {i: Var(1) for i in range(1, x.num_vars + 1)})
    assert isinstance(out, SignedVarMatrix)
    return out


def to_weighing_matrix(x: SignedVarMatrix) -> IntMatrix:
    """Set every variable to +1, yielding a weighing matrix of the summed weight."""
    out = specialize_variables(x, {i: 1 for i in range(1, x.num_vars + 1)})
    assert isinstance(out, IntMatrix)
    return out
