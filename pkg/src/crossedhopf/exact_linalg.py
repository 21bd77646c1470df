"""Exact scalars and dense exact arrays.

A :class:`Tensor` stores an integer numerator array together with a single
positive common denominator.  Arithmetic runs on ``int64`` whenever a cheap
magnitude bound proves that no overflow can happen and falls back to numpy
object arrays of Python integers otherwise, so results are always exact.

Tensor spaces use lexicographic index order with the left factor major: the
basis vector ``e_i (x) e_j`` of ``k^m (x) k^n`` has index ``i * n + j``.
"""
from __future__ import annotations

import math
import re
import string
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Any, Iterable, Sequence, Union

import numpy as np

from .errors import DivisionByZero, ShapeMismatch, Singular

_LIMIT = 2**62


# ---------------------------------------------------------------------------
# fields and scalars


@dataclass(frozen=True)
class Mod:
    """A residue modulo a prime, stored in ``[0, p)``."""

    value: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.p)

    def _lift(self, other: Any) -> "Mod":
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other
        if isinstance(other, int):
            return Mod(other, self.p)
        if isinstance(other, Fraction):
            return Mod(other.numerator, self.p) / Mod(other.denominator, self.p)
        return NotImplemented

    def __add__(self, other: Any) -> "Mod":
        o = self._lift(other)
        return Mod(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Mod":
        o = self._lift(other)
        return Mod(self.value - o.value, self.p)

    def __rsub__(self, other: Any) -> "Mod":
        return self._lift(other) - self

    def __mul__(self, other: Any) -> "Mod":
        o = self._lift(other)
        return Mod(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __neg__(self) -> "Mod":
        return Mod(-self.value, self.p)

    def inverse(self) -> "Mod":
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.p}")
        return Mod(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other: Any) -> "Mod":
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other: Any) -> "Mod":
        return self._lift(other) * self.inverse()

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Mod):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.p))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"Mod({self.value}, {self.p})"


Scalar = Union[Fraction, Mod]


class Field:
    """Ground field descriptor.  Instances are singletons per field."""

    name: str
    characteristic: int

    def __call__(self, value: Any) -> Scalar:
        raise NotImplementedError

    def parse(self, text: str) -> Scalar:
        raise NotImplementedError

    def format(self, value: Scalar) -> str:
        return str(value)

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __repr__(self) -> str:
        return self.name


class Rationals(Field):
    name = "QQ"
    characteristic = 0

    def __call__(self, value: Any) -> Fraction:
        if isinstance(value, Mod):
            raise ValueError("cannot coerce a prime-field residue into QQ")
        if isinstance(value, str):
            return self.parse(value)
        return Fraction(value)

    _pattern = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")

    def parse(self, text: str) -> Fraction:
        if not self._pattern.match(text):
            raise ValueError(f"not an exact rational: {text!r}")
        try:
            return Fraction(text.replace(" ", ""))
        except ZeroDivisionError as exc:
            raise DivisionByZero(f"zero denominator in {text!r}") from exc


class PrimeField(Field):
    def __init__(self, p: int) -> None:
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, value: Any) -> Mod:
        if isinstance(value, Mod):
            if value.p != self.p:
                raise ValueError(f"residue mod {value.p} is not in {self.name}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return Mod(value.numerator, self.p) / Mod(value.denominator, self.p)
        return Mod(int(value), self.p)

    def parse(self, text: str) -> Mod:
        text = text.strip()
        if not re.fullmatch(r"[+-]?\d+", text):
            raise ValueError(f"not a residue: {text!r}")
        return Mod(int(text), self.p)


QQ = Rationals()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    return PrimeField(p)


def field_from_name(name: str) -> Field:
    name = name.strip()
    if name in ("QQ", "Q"):
        return QQ
    m = re.fullmatch(r"GF\((\d+)\)", name)
    if m:
        return GF(int(m.group(1)))
    raise ValueError(f"unknown field {name!r}")


# elementary scalar operations; Fraction and Mod already implement the
# operators, these add the canonical error type for division


def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def sub(a: Scalar, b: Scalar) -> Scalar:
    return a - b


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def neg(a: Scalar) -> Scalar:
    return -a


def inv(a: Scalar) -> Scalar:
    if isinstance(a, Mod):
        return a.inverse()
    if a == 0:
        raise DivisionByZero("0 has no inverse")
    return 1 / Fraction(a)


def div(a: Scalar, b: Scalar) -> Scalar:
    return a * inv(b)


def eq(a: Scalar, b: Scalar) -> bool:
    return a == b


# ---------------------------------------------------------------------------
# arrays


# integer products and sums below 2**53 are exact in binary64, so BLAS can be used
_FLOAT_EXACT = 2**53


def _from_float(a: np.ndarray) -> np.ndarray:
    return np.rint(a).astype(np.int64)


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(np.max(np.abs(a)))


def _fit(a: np.ndarray) -> np.ndarray:
    """Return ``a`` as int64 when every entry fits, otherwise as object."""
    if a.dtype == np.int64:
        return a
    if _maxabs(a) < _LIMIT:
        return a.astype(np.int64)
    return a.astype(object)


def _as_obj(a: np.ndarray) -> np.ndarray:
    return a if a.dtype == object else a.astype(object)


class Tensor:
    """Exact n-dimensional array over a :class:`Field`.

    The value is ``num / den`` with ``den`` a positive Python integer.  Over a
    prime field ``den`` is always 1 and ``num`` holds residues in ``[0, p)``.
    Tensors are immutable by convention; no method mutates ``num``.
    """

    __slots__ = ("field", "num", "den")
    __array_priority__ = 100  # keep numpy from hijacking binary operators

    def __init__(self, field: Field, num: np.ndarray, den: int = 1) -> None:
        if den <= 0:
            raise ValueError("denominator must be positive")
        num = np.asarray(num)
        if num.dtype != object and num.dtype != np.int64:
            num = num.astype(np.int64)
        if isinstance(field, PrimeField):
            if den != 1:
                num = _as_obj(num) * pow(den, -1, field.p)
            num = _fit(_as_obj(num) % field.p if num.dtype == object else num % field.p)
            den = 1
        else:
            num = _fit(num)
            if den != 1 and num.size:
                g = math.gcd(den, int(np.gcd.reduce(num.ravel())))
                if g > 1:
                    num = num // g
                    den //= g
            if num.size and not num.any():
                den = 1
        self.field = field
        self.num = num
        self.den = den

    # construction -----------------------------------------------------------

    @classmethod
    def from_nested(cls, field: Field, data: Any) -> "Tensor":
        """Build from (nested) sequences of anything ``field`` can coerce."""
        arr = np.array(data, dtype=object)
        flat = [field(x) for x in arr.ravel()]
        return cls.from_scalars(field, flat, arr.shape)

    @classmethod
    def from_scalars(cls, field: Field, values: Sequence[Any], shape: Sequence[int]) -> "Tensor":
        shape = tuple(shape)
        if math.prod(shape) != len(values):
            raise ShapeMismatch(f"{len(values)} entries do not fill shape {shape}")
        if isinstance(field, PrimeField):
            nums = [field(v).value for v in values]
            return cls(field, np.array(nums, dtype=object).reshape(shape))
        fr = [Fraction(v) for v in values]
        den = reduce(math.lcm, (f.denominator for f in fr), 1)
        nums = [f.numerator * (den // f.denominator) for f in fr]
        return cls(field, np.array(nums, dtype=object).reshape(shape), den)

    @classmethod
    def zeros(cls, field: Field, shape: Sequence[int] | int) -> "Tensor":
        if isinstance(shape, int):
            shape = (shape,)
        return cls(field, np.zeros(tuple(shape), dtype=np.int64))

    @classmethod
    def eye(cls, field: Field, n: int) -> "Tensor":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def basis(cls, field: Field, n: int, i: int) -> "Tensor":
        v = np.zeros(n, dtype=np.int64)
        v[i] = 1
        return cls(field, v)

    def _new(self, num: np.ndarray, den: int = 1) -> "Tensor":
        return Tensor(self.field, num, den)

    # shape ------------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, ...]:
        return self.num.shape

    @property
    def ndim(self) -> int:
        return self.num.ndim

    @property
    def size(self) -> int:
        return self.num.size

    @property
    def rows(self) -> int:
        return self.shape[0]

    @property
    def cols(self) -> int:
        return self.shape[1]

    def reshape(self, *shape: Any) -> "Tensor":
        if len(shape) == 1 and isinstance(shape[0], (tuple, list)):
            shape = tuple(shape[0])
        return Tensor(self.field, self.num.reshape(shape), self.den)

    def transpose(self, *axes: int) -> "Tensor":
        if len(axes) == 1 and isinstance(axes[0], (tuple, list)):
            axes = tuple(axes[0])
        return Tensor(self.field, self.num.transpose(axes or None), self.den)

    @property
    def T(self) -> "Tensor":
        return self.transpose()

    def ravel(self) -> "Tensor":
        return self.reshape(-1)

    def __getitem__(self, idx: Any) -> "Tensor":
        return Tensor(self.field, np.asarray(self.num[idx]), self.den)

    def column(self, j: int) -> "Tensor":
        return self[:, j]

    # scalar access ----------------------------------------------------------

    def item(self, *idx: int) -> Scalar:
        n = int(self.num[idx])
        if isinstance(self.field, PrimeField):
            return Mod(n, self.field.p)
        return Fraction(n, self.den)

    def entries(self) -> list[Scalar]:
        """All entries in row-major order as field scalars."""
        flat = self.num.ravel().tolist()
        if isinstance(self.field, PrimeField):
            return [Mod(int(n), self.field.p) for n in flat]
        return [Fraction(int(n), self.den) for n in flat]

    def tolist(self) -> Any:
        return np.array(self.entries(), dtype=object).reshape(self.shape).tolist()

    def is_zero(self) -> bool:
        return not self.num.any()

    def nonzero(self) -> list[tuple[int, ...]]:
        return [tuple(int(i) for i in ix) for ix in zip(*np.nonzero(self.num != 0))]

    # arithmetic -------------------------------------------------------------

    def _check(self, other: "Tensor") -> None:
        if not isinstance(other, Tensor):
            raise TypeError(f"expected Tensor, got {type(other).__name__}")
        if other.field is not self.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def _combine(self, other: "Tensor", sign: int) -> "Tensor":
        self._check(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes {self.shape} and {other.shape} differ")
        if isinstance(self.field, PrimeField):
            bound = _maxabs(self.num) + _maxabs(other.num)
            a, b = self.num, other.num
            if bound >= _LIMIT:
                a, b = _as_obj(a), _as_obj(b)
            return self._new(a + sign * b)
        l = math.lcm(self.den, other.den)
        fa, fb = l // self.den, l // other.den
        bound = _maxabs(self.num) * fa + _maxabs(other.num) * fb
        a, b = self.num, other.num
        if bound >= _LIMIT:
            a, b = _as_obj(a), _as_obj(b)
        return self._new(a * fa + sign * (b * fb), l)

    def __add__(self, other: "Tensor") -> "Tensor":
        return self._combine(other, 1)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self._combine(other, -1)

    def __neg__(self) -> "Tensor":
        return self._new(-self.num, self.den)

    def scale(self, c: Any) -> "Tensor":
        c = self.field(c)
        if isinstance(c, Mod):
            n, d = c.value, 1
        else:
            n, d = c.numerator, c.denominator
        a = self.num
        if _maxabs(a) * abs(n) >= _LIMIT:
            a = _as_obj(a)
        return self._new(a * n, self.den * d)

    def __mul__(self, c: Any) -> "Tensor":
        if isinstance(c, Tensor):
            raise TypeError("use @ or einsum for tensor products")
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "Tensor") -> "Tensor":
        return mat_mul(self, other)

    # comparison -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (
            other.field is self.field
            and self.shape == other.shape
            and self.den == other.den
            and bool(np.array_equal(self.num, other.num))
        )

    def __ne__(self, other: object) -> bool:
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = np.array([self.field.format(x) for x in self.entries()], dtype=object)
        return f"Tensor({self.field}, {body.reshape(self.shape).tolist()})"


Matrix = Tensor
Tensor3 = Tensor


def _summed_size(spec: str, shapes: Sequence[tuple[int, ...]]) -> int:
    lhs, _, out = spec.partition("->")
    sizes: dict[str, int] = {}
    for term, shape in zip(lhs.split(","), shapes):
        for ch, n in zip(term, shape):
            sizes[ch] = n
    return math.prod(n for ch, n in sizes.items() if ch not in out)


def einsum(spec: str, *ops: Tensor) -> Tensor:
    """Exact ``numpy.einsum`` with an explicit output (``->``) part."""
    if "->" not in spec:
        raise ValueError("einsum spec must name its output indices")
    field = ops[0].field
    for t in ops[1:]:
        ops[0]._check(t)
    nums = [t.num for t in ops]
    if isinstance(field, PrimeField):
        bound = (field.p - 1) ** len(ops)
    else:
        bound = math.prod(_maxabs(n) for n in nums)
    bound *= max(1, _summed_size(spec, [t.shape for t in ops]))
    if bound >= _LIMIT or any(n.dtype == object for n in nums):
        nums = [_as_obj(n) for n in nums]
        out = np.einsum(spec, *nums, optimize=len(ops) > 2)
    elif bound < _FLOAT_EXACT:
        out = _from_float(np.einsum(spec, *(n.astype(np.float64) for n in nums), optimize=True))
    else:
        out = np.einsum(spec, *nums, optimize=len(ops) > 2)
    den = math.prod(t.den for t in ops)
    return Tensor(field, np.asarray(out), den)


def mat_mul(a: Tensor, b: Tensor) -> Tensor:
    a._check(b)
    if a.ndim != 2 or b.ndim not in (1, 2):
        raise ShapeMismatch(f"cannot multiply shapes {a.shape} and {b.shape}")
    if a.shape[1] != b.shape[0]:
        raise ShapeMismatch(f"inner dimensions differ: {a.shape} @ {b.shape}")
    if isinstance(a.field, PrimeField):
        bound = (a.field.p - 1) ** 2
    else:
        bound = _maxabs(a.num) * _maxabs(b.num)
    bound *= max(1, a.shape[1])
    x, y = a.num, b.num
    if bound >= _LIMIT or x.dtype == object or y.dtype == object:
        x, y = _as_obj(x), _as_obj(y)
    elif bound < _FLOAT_EXACT:
        return Tensor(a.field, _from_float(x.astype(np.float64) @ y.astype(np.float64)), a.den * b.den)
    return Tensor(a.field, x @ y, a.den * b.den)


def kron(a: Tensor, b: Tensor) -> Tensor:
    """Kronecker product of matrices (or vectors), left factor major."""
    a._check(b)
    if a.ndim == 1 and b.ndim == 1:
        return einsum("i,j->ij", a, b).reshape(-1)
    if a.ndim != 2 or b.ndim != 2:
        raise ShapeMismatch("kron expects two matrices or two vectors")
    (m, n), (p, q) = a.shape, b.shape
    return einsum("ij,kl->ikjl", a, b).reshape(m * p, n * q)


def kron_all(*mats: Tensor) -> Tensor:
    return reduce(kron, mats)


def zeros(field: Field, shape: Sequence[int] | int) -> Tensor:
    return Tensor.zeros(field, shape)


def eye(field: Field, n: int) -> Tensor:
    return Tensor.eye(field, n)


def flip(d1: int, d2: int, field: Field = QQ) -> Tensor:
    """Permutation matrix of ``e_i (x) e_j -> e_j (x) e_i`` on ``k^d1 (x) k^d2``."""
    p = np.zeros((d2 * d1, d1 * d2), dtype=np.int64)
    for i in range(d1):
        for j in range(d2):
            p[j * d1 + i, i * d2 + j] = 1
    return Tensor(field, p)


def stack(tensors: Sequence[Tensor], axis: int = 0) -> Tensor:
    """Stack tensors of equal shape along a new axis."""
    field = tensors[0].field
    den = reduce(math.lcm, (t.den for t in tensors), 1)
    nums = [_as_obj(t.num) * (den // t.den) for t in tensors]
    return Tensor(field, np.stack(nums, axis=axis), den)


def block_diag(*mats: Tensor) -> Tensor:
    field = mats[0].field
    rows = sum(m.shape[0] for m in mats)
    cols = sum(m.shape[1] for m in mats)
    den = reduce(math.lcm, (m.den for m in mats), 1)
    out = np.zeros((rows, cols), dtype=object)
    r = c = 0
    for m in mats:
        out[r : r + m.shape[0], c : c + m.shape[1]] = _as_obj(m.num) * (den // m.den)
        r += m.shape[0]
        c += m.shape[1]
    return Tensor(field, out, den)


def concat(tensors: Sequence[Tensor], axis: int = 0) -> Tensor:
    field = tensors[0].field
    den = reduce(math.lcm, (t.den for t in tensors), 1)
    nums = [_as_obj(t.num) * (den // t.den) for t in tensors]
    return Tensor(field, np.concatenate(nums, axis=axis), den)


# ---------------------------------------------------------------------------
# elimination


def _row_reduce(field: Field, m: np.ndarray, ncols: int) -> tuple[np.ndarray, list[int]]:
    """Gauss-Jordan on the first ``ncols`` columns of an integer matrix.

    Works fraction-free over QQ (rows are rescaled by their content after each
    update) and with modular inverses over a prime field.  Returns the reduced
    matrix and the pivot columns; pivot entries are not normalised to 1 over QQ.
    """
    m = _as_obj(m).copy()
    nrows = m.shape[0]
    pivots: list[int] = []
    r = 0
    prime = field.p if isinstance(field, PrimeField) else None
    for c in range(ncols):
        if r == nrows:
            break
        col = m[r:, c]
        nz = [i for i, x in enumerate(col) if x != 0]
        if not nz:
            continue
        piv = r + min(nz, key=lambda i: abs(col[i]))
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        if prime is not None:
            m[r] = (m[r] * pow(int(m[r, c]), -1, prime)) % prime
        others = [i for i in range(nrows) if i != r and m[i, c] != 0]
        if others:
            idx = np.array(others)
            factors = m[idx, c].copy()
            if prime is not None:
                m[idx] = (m[idx] - np.outer(factors, m[r])) % prime
            else:
                p = m[r, c]
                m[idx] = m[idx] * p - np.outer(factors, m[r])
                for i in others:
                    g = int(np.gcd.reduce(m[i]))
                    if g > 1:
                        m[i] //= g
        if prime is None:
            g = int(np.gcd.reduce(m[r]))
            if m[r, c] < 0:
                g = -g
            if g not in (0, 1):
                m[r] //= g
        pivots.append(c)
        r += 1
    return m, pivots


def _quotient(field: Field, m: np.ndarray, pivots: list[int], ncols: int) -> Tensor:
    """Divide each pivot row by its pivot, returning rows as a Tensor."""
    rows = len(pivots)
    if isinstance(field, PrimeField):
        return Tensor(field, m[:rows, ncols:])
    fr = [[Fraction(int(m[i, j]), int(m[i, pivots[i]])) for j in range(ncols, m.shape[1])] for i in range(rows)]
    if not fr or not fr[0]:
        return Tensor(field, np.zeros((rows, m.shape[1] - ncols), dtype=np.int64))
    return Tensor.from_nested(field, fr)


def solve(a: Tensor, b: Tensor) -> Tensor:
    """The unique ``x`` with ``a @ x == b`` for square invertible ``a``."""
    a._check(b)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeMismatch(f"solve needs a square matrix, got {a.shape}")
    vec = b.ndim == 1
    bb = b.reshape(-1, 1) if vec else b
    if bb.shape[0] != a.shape[0]:
        raise ShapeMismatch(f"right-hand side has {bb.shape[0]} rows, expected {a.shape[0]}")
    n = a.shape[0]
    aug = np.concatenate([_as_obj(a.num), _as_obj(bb.num)], axis=1)
    red, piv = _row_reduce(a.field, aug, n)
    if len(piv) < n:
        raise Singular(f"matrix of size {n} has rank {len(piv)}")
    x = _quotient(a.field, red, piv, n)
    # a = A/da, b = B/db  =>  x = A^{-1} B * da/db
    if not isinstance(a.field, PrimeField):
        x = x.scale(Fraction(a.den, bb.den))
    return x.reshape(-1) if vec else x


def mat_inv(a: Tensor) -> Tensor:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeMismatch(f"only square matrices are invertible, got {a.shape}")
    return solve(a, Tensor.eye(a.field, a.shape[0]))


def rank(a: Tensor) -> int:
    if a.size == 0:
        return 0
    _, piv = _row_reduce(a.field, a.num, a.shape[1])
    return len(piv)


def nullspace(a: Tensor) -> Tensor:
    """Matrix whose columns are a basis of ``{x : a @ x == 0}``.

    One vector per free column: it has a 1 in that column, zeros in the other
    free columns, and the pivot entries forced by the reduced rows.
    """
    n = a.shape[1]
    if a.shape[0] == 0:
        return Tensor.eye(a.field, n)
    red, piv = _row_reduce(a.field, a.num, n)
    free = [c for c in range(n) if c not in piv]
    cols = []
    for f in free:
        v = [a.field.zero] * n
        v[f] = a.field.one
        for r, c in enumerate(piv):
            v[c] = a.field(-int(red[r, f])) / a.field(int(red[r, c]))
        cols.append(v)
    if not cols:
        return Tensor.zeros(a.field, (n, 0))
    return Tensor.from_nested(a.field, cols).T


def column_basis(a: Tensor) -> Tensor:
    """Matrix whose columns are a basis of the column space of ``a``.

    The basis is the set of pivot columns of ``a`` itself, so it is
    deterministic and keeps the original (often sparse) vectors.
    """
    _, piv = _row_reduce(a.field, a.num, a.shape[1])
    return a[:, piv]


def solve_in_span(basis: Tensor, b: Tensor) -> Tensor:
    """Coordinates ``x`` with ``basis @ x == b`` for full-column-rank ``basis``."""
    n = basis.shape[1]
    bb = b.reshape(-1, 1) if b.ndim == 1 else b
    aug = np.concatenate([_as_obj(basis.num) * bb.den, _as_obj(bb.num) * basis.den], axis=1)
    red, piv = _row_reduce(basis.field, aug, n)
    if len(piv) < n:
        raise Singular("basis columns are linearly dependent")
    rest = red[n:, n:]
    if rest.size and any(x != 0 for x in rest.ravel()):
        raise ValueError("vector is not in the span")
    x = _quotient(basis.field, red, piv, n)
    return x.reshape(-1) if b.ndim == 1 else x


def letters(n: int) -> str:
    return string.ascii_letters[:n]


def as_tensor(field: Field, data: Union[Tensor, Iterable[Any]]) -> Tensor:
    if isinstance(data, Tensor):
        return data
    return Tensor.from_nested(field, data)


def assemble(field: Field, shape: Sequence[int], blocks: Iterable[tuple[Any, Tensor]]) -> Tensor:
    """Zero tensor of ``shape`` with ``tensor`` added into ``out[index]`` for each block."""
    blocks = list(blocks)
    den = reduce(math.lcm, (t.den for _, t in blocks), 1)
    out = np.zeros(tuple(shape), dtype=object)
    for index, t in blocks:
        out[index] = out[index] + _as_obj(t.num) * (den // t.den)
    return Tensor(field, out, den)
