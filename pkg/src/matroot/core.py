"""Dense square matrices over three scalar backends.

Everything downstream (factor polynomials, witness constructions, decision
procedures) works with one matrix type that carries its scalar backend:

* ``rational`` -- exact arithmetic with Python ints / ``fractions.Fraction``,
* ``real``     -- IEEE double precision,
* ``complex``  -- pairs of IEEE doubles.

Backends never mix inside a matrix.  Exact backends compare exactly; float
backends compare entrywise under a ``Tolerance(absolute, relative)`` contract:

    |x - y| <= absolute + relative * max(|x|, |y|)

Storage is a read-only numpy array (``object`` dtype for the rational
backend), so matrices are immutable values and safe to share across threads.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

RATIONAL = "rational"
REAL = "real"
COMPLEX = "complex"

BACKENDS = (RATIONAL, REAL, COMPLEX)

_BACKEND_RANK = {RATIONAL: 0, REAL: 1, COMPLEX: 2}
_BACKEND_DTYPE = {RATIONAL: object, REAL: np.float64, COMPLEX: np.complex128}

RationalScalar = Union[int, Fraction]
Scalar = Union[int, Fraction, float, complex]


class MatrixError(ValueError):
    """Base class for matrix construction/arithmetic failures."""


class DimensionMismatch(MatrixError):
    """Operands have incompatible orders, or a non-square shape was given."""


class BackendMismatch(MatrixError):
    """Operands live over different scalar backends."""


@dataclass(frozen=True)
class Tolerance:
    """Entrywise comparison contract for the float backends.

    The rational backend ignores tolerances entirely: equality there is exact.
    """

    absolute: float = 1e-9
    relative: float = 1e-9

    def __post_init__(self) -> None:
        for name in ("absolute", "relative"):
            v = getattr(self, name)
            if not (isinstance(v, numbers.Real) and math.isfinite(v) and v >= 0):
                raise ValueError(f"{name} tolerance must be finite and >= 0, got {v!r}")


DEFAULT_TOLERANCE = Tolerance()


def _coerce_rational(value) -> RationalScalar:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return int(value)
    raise BackendMismatch(
        f"rational backend requires int or Fraction entries, got {type(value).__name__}"
    )


def _coerce_real(value) -> float:
    if isinstance(value, (complex, np.complexfloating)):
        raise BackendMismatch("real backend cannot hold complex entries")
    x = float(value)
    if not math.isfinite(x):
        raise MatrixError(f"non-finite real entry: {value!r}")
    return x


def _coerce_complex(value) -> complex:
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise MatrixError(f"non-finite complex entry: {value!r}")
    return z


_COERCE = {RATIONAL: _coerce_rational, REAL: _coerce_real, COMPLEX: _coerce_complex}


def infer_backend(entries: Iterable) -> str:
    """Pick the narrowest backend that holds every entry."""
    rank = 0
    for e in entries:
        if isinstance(e, (complex, np.complexfloating)) and not isinstance(e, (float, np.floating)):
            return COMPLEX
        if isinstance(e, (float, np.floating)):
            rank = max(rank, 1)
    return (RATIONAL, REAL, COMPLEX)[rank]


class Matrix:
    """Immutable dense square matrix over a single scalar backend."""

    __slots__ = ("backend", "_arr")

    def __init__(self, rows: Sequence[Sequence], backend: str | None = None):
        data = [list(r) for r in rows]
        k = len(data)
        if k < 1 or any(len(r) != k for r in data):
            raise DimensionMismatch("matrix must be square with order >= 1")
        flat = [e for r in data for e in r]
        if backend is None:
            backend = infer_backend(flat)
        if backend not in BACKENDS:
            raise MatrixError(f"unknown backend {backend!r}")
        coerce = _COERCE[backend]
        arr = np.empty((k, k), dtype=_BACKEND_DTYPE[backend])
        for i in range(k):
            for j in range(k):
                arr[i, j] = coerce(data[i][j])
        arr.flags.writeable = False
        self.backend = backend
        self._arr = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray, backend: str) -> "Matrix":
        # Internal fast path: trusted, already-coerced square array.  Float
        # backends still honour the no-NaN/inf invariant (overflow in an
        # operation must fail loudly, not poison later comparisons).
        if backend != RATIONAL and not np.isfinite(arr).all():
            raise MatrixError("operation produced non-finite entries")
        m = object.__new__(cls)
        if arr.flags.writeable:
            arr = arr.copy()
            arr.flags.writeable = False
        object.__setattr__(m, "backend", backend)
        object.__setattr__(m, "_arr", arr)
        return m

    @property
    def order(self) -> int:
        return self._arr.shape[0]

    @property
    def array(self) -> np.ndarray:
        """Read-only numpy view of the entries."""
        return self._arr

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self._arr[i, j]

    def rows(self) -> list:
        return [list(r) for r in self._arr]

    def entries(self) -> list:
        """Row-major flat entry list."""
        return [e for r in self._arr for e in r]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.backend == other.backend
            and self.order == other.order
            and bool((self._arr == other._arr).all())
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Matrix({self.rows()!r}, backend={self.backend!r})"


def identity(k: int, backend: str = RATIONAL) -> Matrix:
    """k x k identity over the given backend."""
    if k < 1:
        raise DimensionMismatch("order must be >= 1")
    if backend == RATIONAL:
        arr = np.full((k, k), 0, dtype=object)
        for i in range(k):
            arr[i, i] = 1
    else:
        arr = np.eye(k, dtype=_BACKEND_DTYPE[backend])
    return Matrix._wrap(arr, backend)


def zeros(k: int, backend: str = RATIONAL) -> Matrix:
    if k < 1:
        raise DimensionMismatch("order must be >= 1")
    if backend == RATIONAL:
        arr = np.full((k, k), 0, dtype=object)
    else:
        arr = np.zeros((k, k), dtype=_BACKEND_DTYPE[backend])
    return Matrix._wrap(arr, backend)


def scalar_matrix(c: Scalar, k: int, backend: str) -> Matrix:
    """c * I_k over the given backend."""
    m = zeros(k, backend)
    arr = m.array.copy()
    c = _COERCE[backend](c)
    for i in range(k):
        arr[i, i] = c
    return Matrix._wrap(arr, backend)


def scalar_matrix_like(c: Scalar, m: Matrix) -> Matrix:
    """c * I of m's order, with c coerced into m's backend.

    On the rational backend the coercion goes through Fraction, so float
    inputs are taken at their exact binary value.
    """
    if m.backend == RATIONAL:
        return scalar_matrix(Fraction(c), m.order, RATIONAL)
    if m.backend == REAL:
        return scalar_matrix(float(c), m.order, REAL)
    return scalar_matrix(complex(c), m.order, COMPLEX)


def _check_pair(a: Matrix, b: Matrix) -> None:
    if a.order != b.order:
        raise DimensionMismatch(f"order mismatch: {a.order} vs {b.order}")
    if a.backend != b.backend:
        raise BackendMismatch(f"backend mismatch: {a.backend} vs {b.backend}")


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product; exact on the rational backend."""
    _check_pair(a, b)
    return Matrix._wrap(a.array @ b.array, a.backend)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    _check_pair(a, b)
    return Matrix._wrap(a.array + b.array, a.backend)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    _check_pair(a, b)
    return Matrix._wrap(a.array - b.array, a.backend)


def scalar_kind(c: Scalar) -> str:
    """Backend needed to hold the scalar c."""
    if isinstance(c, (complex, np.complexfloating)) and not isinstance(c, (float, np.floating)):
        return COMPLEX
    if isinstance(c, (float, np.floating)):
        return REAL
    if isinstance(c, (Fraction, int, np.integer)):
        return RATIONAL
    raise MatrixError(f"unsupported scalar type {type(c).__name__}")


def as_backend(m: Matrix, backend: str) -> Matrix:
    """Lift a matrix to a wider backend (rational -> real -> complex)."""
    if backend not in BACKENDS:
        raise MatrixError(f"unknown backend {backend!r}")
    if m.backend == backend:
        return m
    if _BACKEND_RANK[backend] < _BACKEND_RANK[m.backend]:
        raise BackendMismatch(f"cannot narrow {m.backend} matrix to {backend}")
    if backend == REAL:
        arr = np.array([[float(e) for e in row] for row in m.array], dtype=np.float64)
    else:
        arr = np.array([[complex(e) for e in row] for row in m.array], dtype=np.complex128)
    return Matrix._wrap(arr, backend)


def common_backend(m: Matrix, c: Scalar) -> str:
    return BACKENDS[max(_BACKEND_RANK[m.backend], _BACKEND_RANK[scalar_kind(c)])]


def scalar_mul(c: Scalar, m: Matrix) -> Matrix:
    """c * M, promoting the backend when the scalar demands it."""
    backend = common_backend(m, c)
    mm = as_backend(m, backend)
    cc = _COERCE[backend](c)
    return Matrix._wrap(cc * mm.array, backend)


def mat_pow(a: Matrix, n: int) -> Matrix:
    """n-th power by binary exponentiation; n = 0 gives the identity."""
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise MatrixError(f"exponent must be an integer, got {n!r}")
    n = int(n)
    if n < 0:
        raise MatrixError("negative powers are not supported")
    result = identity(a.order, a.backend)
    base = a
    while n:
        if n & 1:
            result = mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return result


def mat_eq(a: Matrix, b: Matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Entrywise comparison. Exact on the rational backend, tolerance-aware
    on float backends: |x - y| <= absolute + relative * max(|x|, |y|)."""
    _check_pair(a, b)
    if a.backend == RATIONAL:
        return bool((a.array == b.array).all())
    x, y = a.array, b.array
    bound = tol.absolute + tol.relative * np.maximum(np.abs(x), np.abs(y))
    return bool((np.abs(x - y) <= bound).all())


def is_zero(m: Matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    return mat_eq(m, zeros(m.order, m.backend), tol)


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    """Assemble diag(B1, ..., Bm); off-block entries are exact zeros."""
    blocks = list(blocks)
    if not blocks:
        raise MatrixError("block_diag needs at least one block")
    backend = blocks[0].backend
    if any(b.backend != backend for b in blocks):
        raise BackendMismatch("all blocks must share one backend")
    total = sum(b.order for b in blocks)
    out = zeros(total, backend).array.copy()
    at = 0
    for b in blocks:
        k = b.order
        out[at : at + k, at : at + k] = b.array
        at += k
    return Matrix._wrap(out, backend)


def rotation(theta: float) -> Matrix:
    """2x2 planar rotation [[cos t, -sin t], [sin t, cos t]] (real backend)."""
    t = float(theta)
    if not math.isfinite(t):
        raise MatrixError(f"rotation angle must be finite, got {theta!r}")
    c, s = math.cos(t), math.sin(t)
    return Matrix._wrap(np.array([[c, -s], [s, c]], dtype=np.float64), REAL)


def determinant(m: Matrix) -> Scalar:
    """Determinant: fraction-free (Bareiss) elimination on the rational
    backend, partial-pivot LU (LAPACK) on the float backends."""
    if m.backend == RATIONAL:
        return _bareiss_determinant(m)
    d = np.linalg.det(m.array)
    return complex(d) if m.backend == COMPLEX else float(d)


def _bareiss_determinant(m: Matrix) -> Fraction:
    k = m.order
    a = [[Fraction(e) for e in row] for row in m.array]
    sign = 1
    prev = Fraction(1)
    for col in range(k - 1):
        if a[col][col] == 0:
            for r in range(col + 1, k):
                if a[r][col] != 0:
                    a[col], a[r] = a[r], a[col]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[col][col]
        for r in range(col + 1, k):
            for j in range(col + 1, k):
                a[r][j] = (a[r][j] * pivot - a[r][col] * a[col][j]) / prev
            a[r][col] = Fraction(0)
        prev = pivot
    return sign * a[k - 1][k - 1]


# --- JSON wire form ---------------------------------------------------------
#
# {"backend": "rational"|"real"|"complex", "order": k,
#  "entries": [row-major scalars]}
# rational entries are "num/den" strings, real entries JSON numbers,
# complex entries [re, im] pairs.


def scalar_to_json(value: Scalar, backend: str):
    if backend == RATIONAL:
        f = Fraction(value)
        return f"{f.numerator}/{f.denominator}"
    if backend == REAL:
        return float(value)
    z = complex(value)
    return [z.real, z.imag]


def scalar_from_json(value, backend: str) -> Scalar:
    if backend == RATIONAL:
        if not isinstance(value, str):
            raise MatrixError(f"rational entry must be a 'num/den' string, got {value!r}")
        return Fraction(value)
    if backend == REAL:
        if isinstance(value, bool) or not isinstance(value, numbers.Real):
            raise MatrixError(f"real entry must be a number, got {value!r}")
        return _coerce_real(value)
    if not (isinstance(value, (list, tuple)) and len(value) == 2):
        raise MatrixError(f"complex entry must be a [re, im] pair, got {value!r}")
    return _coerce_complex(complex(float(value[0]), float(value[1])))


def matrix_to_json(m: Matrix) -> dict:
    return {
        "backend": m.backend,
        "order": m.order,
        "entries": [scalar_to_json(e, m.backend) for e in m.entries()],
    }


def matrix_from_json(data: dict) -> Matrix:
    if not isinstance(data, dict):
        raise MatrixError("matrix JSON must be an object")
    try:
        backend = data["backend"]
        order = data["order"]
        entries = data["entries"]
    except KeyError as missing:
        raise MatrixError(f"matrix JSON missing key {missing}") from None
    if backend not in BACKENDS:
        raise MatrixError(f"unknown backend {backend!r}")
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise MatrixError(f"order must be a positive integer, got {order!r}")
    if not isinstance(entries, list) or len(entries) != order * order:
        raise MatrixError(f"expected {order * order} entries for order {order}")
    scalars = [scalar_from_json(e, backend) for e in entries]
    rows = [scalars[i * order : (i + 1) * order] for i in range(order)]
    return Matrix(rows, backend=backend)
