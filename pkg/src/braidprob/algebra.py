"""
Exact matrix semantics.

An algebra is a vector space ``V`` of dimension ``d`` with a Yang-Baxter
operator ``R`` on ``V (x) V`` and optionally a multiplication/unit and a
comultiplication/counit.  Object ``n`` goes to ``V^(x)n`` with the
lexicographic basis (``e_i (x) e_j`` has 1-based index ``(i-1)d + j``), and a
morphism ``n -> m`` to a ``d^m x d^n`` matrix acting on column vectors.

Scalars are exact: ``fractions.Fraction`` in object arrays over the
rationals, ``int64`` reduced mod ``p`` over a prime field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Union

import numpy as np

from .bimonoid import BimonMorphism
from .braid import BraidWord
from .monoid import MonMorphism, OpMorphism
from .ordinal import OrdinalMap
from .report import Law, Report


class AlgebraError(ValueError):
    pass


# --- fields -----------------------------------------------------------------


@dataclass(frozen=True)
class Rationals:
    def scalar(self, x) -> Fraction:
        if isinstance(x, str):
            value = Fraction(x)
            if "/" in x and str(value) != x.strip():
                raise AlgebraError(f"rational entry {x!r} is not in lowest terms")
            return value
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise AlgebraError(f"rational entries are integers or 'a/b' strings, got {x!r}")
        return Fraction(x)

    def array(self, rows) -> np.ndarray:
        rows = [[self.scalar(x) for x in row] for row in rows]
        out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                out[i, j] = x
        return out

    def identity(self, n: int) -> np.ndarray:
        out = np.full((n, n), Fraction(0), dtype=object)
        for i in range(n):
            out[i, i] = Fraction(1)
        return out

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return a

    def inverse_scalar(self, x):
        return 1 / x

    def to_json(self, x):
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else str(x)

    def spec(self) -> dict:
        return {"type": "rational"}

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if self.p < 2 or any(self.p % k == 0 for k in range(2, int(self.p ** 0.5) + 1)):
            raise AlgebraError(f"{self.p} is not prime")

    def scalar(self, x) -> int:
        if isinstance(x, bool) or not isinstance(x, int):
            raise AlgebraError(f"prime-field entries are integers, got {x!r}")
        if not 0 <= x < self.p:
            raise AlgebraError(f"entry {x} not in [0, {self.p})")
        return x

    def array(self, rows) -> np.ndarray:
        return np.array([[self.scalar(x) for x in row] for row in rows], dtype=np.int64).reshape(
            len(rows), len(rows[0]) if rows else 0)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return a % self.p

    def inverse_scalar(self, x):
        return pow(int(x), -1, self.p)

    def to_json(self, x):
        return int(x)

    def spec(self) -> dict:
        return {"type": "prime", "p": self.p}

    def __str__(self):
        return f"F_{self.p}"


Field = Union[Rationals, PrimeField]


def field_from_spec(spec) -> Field:
    if not isinstance(spec, dict) or "type" not in spec:
        raise AlgebraError(f"bad field specification {spec!r}")
    if spec["type"] == "rational" and set(spec) == {"type"}:
        return Rationals()
    if spec["type"] == "prime" and set(spec) == {"type", "p"} and isinstance(spec["p"], int):
        return PrimeField(spec["p"])
    raise AlgebraError(f"bad field specification {spec!r}")


def matmul(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return field.reduce(a @ b)


def kron(field: Field, *mats: np.ndarray) -> np.ndarray:
    out = mats[0]
    for m in mats[1:]:
        out = field.reduce(np.kron(out, m))
    return out


def inverse(field: Field, a: np.ndarray) -> np.ndarray:
    """Exact Gauss-Jordan inverse; raises ``AlgebraError`` if singular."""
    n = a.shape[0]
    if a.shape != (n, n):
        raise AlgebraError("only square matrices are invertible")
    work = [[a[i, j] for j in range(n)] + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    if isinstance(field, PrimeField):
        work = [[int(x) % field.p for x in row] for row in work]
    else:
        work = [[Fraction(x) for x in row] for row in work]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise AlgebraError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        scale = field.inverse_scalar(work[col][col])
        work[col] = [_norm(field, x * scale) for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                c = work[r][col]
                work[r] = [_norm(field, x - c * y) for x, y in zip(work[r], work[col])]
    return field.array([row[n:] for row in work]) if isinstance(field, Rationals) else \
        np.array([row[n:] for row in work], dtype=np.int64)


def _norm(field, x):
    return x % field.p if isinstance(field, PrimeField) else x


# --- algebra data -------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class YBAlgebraData:
    """Exact structure maps on a ``dimension``-dimensional space; absent maps are ``None``."""

    dimension: int
    field: Field
    R: np.ndarray | None = None
    mul: np.ndarray | None = None
    unit: np.ndarray | None = None
    comul: np.ndarray | None = None
    counit: np.ndarray | None = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        d = self.dimension
        shapes = {"R": (d * d, d * d), "mul": (d, d * d), "unit": (d, 1),
                  "comul": (d * d, d), "counit": (1, d)}
        for key, shape in shapes.items():
            value = getattr(self, key)
            if value is not None and value.shape != shape:
                raise AlgebraError(f"{key} has shape {value.shape}, expected {shape}")
        if (self.mul is None) != (self.unit is None):
            raise AlgebraError("multiplication and unit must be given together")
        if (self.comul is None) != (self.counit is None):
            raise AlgebraError("comultiplication and counit must be given together")
        if self.R is not None:
            self.R_inverse  # raises if singular

    @property
    def has_braiding(self) -> bool:
        return self.R is not None

    @property
    def has_monoid(self) -> bool:
        return self.mul is not None

    @property
    def has_comonoid(self) -> bool:
        return self.comul is not None

    @cached_property
    def R_inverse(self) -> np.ndarray:
        try:
            return inverse(self.field, self.R)
        except AlgebraError:
            raise AlgebraError("R is not invertible") from None

    def identity(self, n: int = 1) -> np.ndarray:
        return self.field.identity(self.dimension ** n)

    def __str__(self):
        return self.name or f"algebra(d={self.dimension}, {self.field})"


# --- evaluation ---------------------------------------------------------------


def _require(A: YBAlgebraData, what: str):
    if getattr(A, what) is None:
        raise AlgebraError(f"{A} has no {what}")


class _State:
    """A batch of vectors in ``V^(x)n``, one per column."""

    def __init__(self, A: YBAlgebraData, n: int):
        self.A, self.n = A, n
        self.data = A.identity(n)

    def apply(self, pos: int, k: int, l: int, mat: np.ndarray) -> None:
        """Apply ``mat: V^(x)k -> V^(x)l`` to tensor factors ``pos .. pos+k-1``."""
        d = self.A.dimension
        cols = self.data.shape[1]
        x = self.data.reshape(d ** pos, d ** k, d ** (self.n - pos - k) * cols)
        self.data = self.A.field.reduce(np.matmul(mat, x))
        self.n += l - k
        self.data = self.data.reshape(d ** self.n, cols)

    def braid(self, word: BraidWord) -> None:
        if word.letters:
            _require(self.A, "R")
        for i, sign in word.letters:
            self.apply(i - 1, 2, 2, self.A.R if sign > 0 else self.A.R_inverse)

    def multiply(self, f: OrdinalMap) -> None:
        """Apply ``f`` with multiplications and units, target block by target block."""
        if f.is_identity:
            return
        _require(self.A, "mul")
        pos = 0
        for k in f.fibers():
            if k == 0:
                self.apply(pos, 0, 1, self.A.unit)
            for _ in range(k - 1):
                self.apply(pos, 2, 1, self.A.mul)
            pos += 1

    def comultiply(self, f: OrdinalMap) -> None:
        """Apply the opposite of ``f`` with comultiplications and counits."""
        if f.is_identity:
            return
        _require(self.A, "comul")
        pos = 0
        for k in f.fibers():
            if k == 0:
                self.apply(pos, 1, 0, self.A.counit)
            for _ in range(k - 1):
                self.apply(pos, 1, 2, self.A.comul)
            pos += k


def evaluate(f, A: YBAlgebraData) -> np.ndarray:
    """Matrix of ``f`` (a braid, order map, monoid-PROB, opposite or bimonoid-PROB morphism)."""
    if isinstance(f, BraidWord):
        st = _State(A, f.strands)
        st.braid(f)
    elif isinstance(f, OrdinalMap):
        st = _State(A, f.src)
        st.multiply(f)
    elif isinstance(f, MonMorphism):
        st = _State(A, f.src)
        st.braid(f.braid)
        st.multiply(f.ord)
    elif isinstance(f, OpMorphism):
        st = _State(A, f.src)
        st.comultiply(f.base.ord)
        st.braid(f.base.braid.reverse())
    elif isinstance(f, BimonMorphism):
        st = _State(A, f.src)
        st.comultiply(f.psi)
        st.braid(f.braid)
        st.multiply(f.phi)
    else:
        raise TypeError(f"cannot evaluate {type(f).__name__}")
    return st.data


# --- law checks -----------------------------------------------------------------


def _compare(name: str, lhs: np.ndarray, rhs: np.ndarray, d: int, arity: int) -> Law:
    if lhs.shape != rhs.shape:
        raise AlgebraError(f"{name}: shapes {lhs.shape} and {rhs.shape} differ")
    bad = np.nonzero(np.any(lhs != rhs, axis=0))[0]
    if len(bad) == 0:
        return Law(name, True)
    col = int(bad[0])
    labels = [int(x) + 1 for x in np.unravel_index(col, (d,) * arity)] if arity else []
    return Law(name, False, " (x) ".join(f"e{i}" for i in labels) if labels else "1")


def check_ybe(R: np.ndarray, d: int, field_: Field | None = None) -> bool:
    """``(R x I)(I x R)(R x I) == (I x R)(R x I)(I x R)`` exactly."""
    if R.shape != (d * d, d * d):
        raise AlgebraError(f"R has shape {R.shape}, expected {(d * d, d * d)}")
    fld = field_ or (Rationals() if R.dtype == object else None)
    if fld is None:
        raise AlgebraError("a field is needed for integer matrices")
    I = fld.identity(d)
    a, b = kron(fld, R, I), kron(fld, I, R)
    return bool(np.array_equal(matmul(fld, a, matmul(fld, b, a)), matmul(fld, b, matmul(fld, a, b))))


def check_monoid(A: YBAlgebraData) -> Report:
    _require(A, "mul")
    fld, d, I = A.field, A.dimension, A.identity()
    m, u = A.mul, A.unit
    return Report([
        _compare("associativity", matmul(fld, m, kron(fld, m, I)), matmul(fld, m, kron(fld, I, m)), d, 3),
        _compare("left unit", matmul(fld, m, kron(fld, u, I)), I, d, 1),
        _compare("right unit", matmul(fld, m, kron(fld, I, u)), I, d, 1),
    ])


def check_comonoid(A: YBAlgebraData) -> Report:
    _require(A, "comul")
    fld, d, I = A.field, A.dimension, A.identity()
    c, e = A.comul, A.counit
    return Report([
        _compare("coassociativity", matmul(fld, kron(fld, c, I), c), matmul(fld, kron(fld, I, c), c), d, 1),
        _compare("left counit", matmul(fld, kron(fld, e, I), c), I, d, 1),
        _compare("right counit", matmul(fld, kron(fld, I, e), c), I, d, 1),
    ])


def check_bimonoid(A: YBAlgebraData) -> Report:
    """Monoid and comonoid laws plus the four compatibility laws (braiding in the mixed one)."""
    _require(A, "R")
    report = Report([Law("Yang-Baxter equation", check_ybe(A.R, A.dimension, A.field))])
    report.extend(check_monoid(A)).extend(check_comonoid(A))
    fld, d, I = A.field, A.dimension, A.identity()
    m, u, c, e, R = A.mul, A.unit, A.comul, A.counit, A.R
    one = fld.identity(1)
    mixed = matmul(fld, kron(fld, m, m), matmul(fld, kron(fld, I, R, I), kron(fld, c, c)))
    report.laws += [
        _compare("comultiplication is multiplicative", matmul(fld, c, m), mixed, d, 2),
        _compare("counit is multiplicative", matmul(fld, e, m), kron(fld, e, e), d, 2),
        _compare("unit is comultiplicative", matmul(fld, c, u), kron(fld, u, u), d, 0),
        _compare("counit of unit", matmul(fld, e, u), one, d, 0),
    ]
    return report


def check_naturality(A: YBAlgebraData) -> Report:
    """The braiding commutes past whichever structure maps are present."""
    _require(A, "R")
    fld, d, I, R = A.field, A.dimension, A.identity(), A.R
    over_21 = matmul(fld, kron(fld, R, I), kron(fld, I, R))  # block braiding (2, 1)
    over_12 = matmul(fld, kron(fld, I, R), kron(fld, R, I))  # block braiding (1, 2)
    report = Report()
    if A.has_monoid:
        m, u = A.mul, A.unit
        report.laws += [
            _compare("braiding natural in multiplication (left)", matmul(fld, R, kron(fld, m, I)),
                     matmul(fld, kron(fld, I, m), over_21), d, 3),
            _compare("braiding natural in multiplication (right)", matmul(fld, R, kron(fld, I, m)),
                     matmul(fld, kron(fld, m, I), over_12), d, 3),
            _compare("braiding natural in unit (left)", matmul(fld, R, kron(fld, u, I)), kron(fld, I, u), d, 1),
            _compare("braiding natural in unit (right)", matmul(fld, R, kron(fld, I, u)), kron(fld, u, I), d, 1),
        ]
    if A.has_comonoid:
        c, e = A.comul, A.counit
        report.laws += [
            _compare("braiding natural in comultiplication (left)", matmul(fld, over_21, kron(fld, c, I)),
                     matmul(fld, kron(fld, I, c), R), d, 2),
            _compare("braiding natural in comultiplication (right)", matmul(fld, over_12, kron(fld, I, c)),
                     matmul(fld, kron(fld, c, I), R), d, 2),
            _compare("braiding natural in counit (left)", matmul(fld, kron(fld, e, I), R), kron(fld, I, e), d, 2),
            _compare("braiding natural in counit (right)", matmul(fld, kron(fld, I, e), R), kron(fld, e, I), d, 2),
        ]
    return report


def check_functoriality(A: YBAlgebraData, cases: int = 50, seed: int = 0, max_object: int = 3) -> Report:
    """``eval(f o g) == eval(f) eval(g)`` on random composable pairs of the bimonoid PROB."""
    import random

    from .samples import random_bimon

    rng = random.Random(seed)
    fld = A.field
    report = check_naturality(A)
    for k in range(cases):
        p, q, r = (rng.randint(0, max_object) for _ in range(3))
        g = random_bimon(rng, p, q)
        f = random_bimon(rng, q, r)
        lhs = evaluate(f.compose(g), A)
        rhs = matmul(fld, evaluate(f, A), evaluate(g, A))
        report.laws.append(_compare(f"composition #{k} ({p}->{q}->{r})", lhs, rhs, A.dimension, p))
    return report


# --- example algebras -------------------------------------------------------------


def _basis_map(fld: Field, rows: int, cols: int, entries: dict) -> np.ndarray:
    out = [[0] * cols for _ in range(rows)]
    for (i, j), v in entries.items():
        out[i][j] = v
    return fld.array(out)


def trivial_algebra(fld: Field | None = None) -> YBAlgebraData:
    fld = fld or Rationals()
    one = fld.array([[1]])
    return YBAlgebraData(1, fld, one, one, one, one, one, name="trivial")


def super_line() -> YBAlgebraData:
    """Exterior algebra on one odd generator ``x``: basis ``(1, x)``, ``R(x (x) x) = -x (x) x``."""
    fld = Rationals()
    d = 2
    R, mul, comul = {}, {}, {}
    for a in range(d):
        for b in range(d):
            R[(b * d + a, a * d + b)] = -1 if a == b == 1 else 1
            if a + b < d:
                mul[(a + b, a * d + b)] = 1
    for n in range(d):
        for k in range(n + 1):
            comul[(k * d + (n - k), n)] = 1
    return YBAlgebraData(
        d, fld,
        R=_basis_map(fld, d * d, d * d, R),
        mul=_basis_map(fld, d, d * d, mul),
        unit=_basis_map(fld, d, 1, {(0, 0): 1}),
        comul=_basis_map(fld, d * d, d, comul),
        counit=_basis_map(fld, 1, d, {(0, 0): 1}),
        name="super-line",
    )


def gaussian_binomial(n: int, k: int, q: int, p: int) -> int:
    """``[n choose k]_q`` mod ``p`` by the q-Pascal rule."""
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for a in range(n + 1):
        table[a][0] = 1
        for b in range(1, a + 1):
            table[a][b] = (table[a - 1][b - 1] + pow(q, b, p) * table[a - 1][b]) % p
    return table[n][k]


def braided_line(p: int = 7, q: int = 2) -> YBAlgebraData:
    """Truncated polynomial algebra ``F_p[x]/(x^d)`` with ``R(x^a (x) x^b) = q^(ab) x^b (x) x^a``.

    ``d`` is the multiplicative order of ``q`` mod ``p`` and the
    comultiplication is ``x^n -> sum_k [n choose k]_q x^k (x) x^(n-k)``.
    """
    fld = PrimeField(p)
    if q % p in (0, 1):
        raise AlgebraError("q must be a unit different from 1")
    d = next(k for k in range(1, p) if pow(q, k, p) == 1)
    R, mul, comul = {}, {}, {}
    for a in range(d):
        for b in range(d):
            R[(b * d + a, a * d + b)] = pow(q, a * b, p)
            if a + b < d:
                mul[(a + b, a * d + b)] = 1
    for n in range(d):
        for k in range(n + 1):
            c = gaussian_binomial(n, k, q, p)
            if c:
                comul[(k * d + (n - k), n)] = c
    return YBAlgebraData(
        d, fld,
        R=_basis_map(fld, d * d, d * d, R),
        mul=_basis_map(fld, d, d * d, mul),
        unit=_basis_map(fld, d, 1, {(0, 0): 1}),
        comul=_basis_map(fld, d * d, d, comul),
        counit=_basis_map(fld, 1, d, {(0, 0): 1}),
        name=f"braided-line(p={p}, q={q})",
    )


BUILTIN = {
    "trivial": trivial_algebra,
    "super-line": super_line,
    "braided-line": braided_line,
}


# --- JSON -------------------------------------------------------------------------

_JSON_KEYS = {"dimension", "field", "R", "m", "u", "delta", "epsilon"}
_JSON_FIELDS = {"R": "R", "m": "mul", "u": "unit", "delta": "comul", "epsilon": "counit"}


def algebra_from_dict(data: dict, name: str = "") -> YBAlgebraData:
    if not isinstance(data, dict):
        raise AlgebraError("algebra data must be a JSON object")
    unknown = set(data) - _JSON_KEYS
    if unknown:
        raise AlgebraError(f"unknown fields: {sorted(unknown)}")
    if "dimension" not in data or "field" not in data:
        raise AlgebraError("'dimension' and 'field' are required")
    d = data["dimension"]
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise AlgebraError(f"bad dimension {d!r}")
    fld = field_from_spec(data["field"])
    kwargs = {}
    for key, attr in _JSON_FIELDS.items():
        if key in data:
            rows = data[key]
            if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows) \
                    or len({len(r) for r in rows}) != 1:
                raise AlgebraError(f"{key} must be a rectangular nested array")
            kwargs[attr] = fld.array(rows)
    return YBAlgebraData(d, fld, name=name, **kwargs)


def algebra_to_dict(A: YBAlgebraData) -> dict:
    out = {"dimension": A.dimension, "field": A.field.spec()}
    for key, attr in _JSON_FIELDS.items():
        value = getattr(A, attr)
        if value is not None:
            out[key] = matrix_to_json(A.field, value)
    return out


def matrix_to_json(fld: Field, a: np.ndarray) -> list:
    return [[fld.to_json(x) for x in row] for row in a]


def load_algebra(path) -> YBAlgebraData:
    path = Path(path)
    with open(path) as fh:
        data = json.load(fh)
    return algebra_from_dict(data, name=path.stem)


def dump_algebra(A: YBAlgebraData, path) -> None:
    with open(path, "w") as fh:
        json.dump(algebra_to_dict(A), fh, indent=1)
        fh.write("\n")
