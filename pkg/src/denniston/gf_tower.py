"""Exact arithmetic in the tower F_p < F_q < F_{q^m} < F_{q^{2m}}.

Everything lives inside the top field.  Nonzero elements are stored by their
discrete logarithm with respect to the root ``alpha`` of a primitive modulus;
``ZERO`` is a sentinel outside the logarithm range.  Addition goes through a
Zech table, subfields are subsets picked out by divisibility of the log.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_pow_mod

ZERO = -1
DEFAULT_SIZE_CAP = 2**24


class FieldError(ValueError):
    """Base class for field construction and arithmetic errors."""


class NotPrimeError(FieldError):
    pass


class SizeCapError(FieldError):
    pass


class ReducibleModulusError(FieldError):
    pass


class NonPrimitiveModulusError(FieldError):
    pass


class SubfieldError(FieldError):
    """An element or order does not fit the requested subfield."""


@dataclass(frozen=True)
class FieldSpec:
    """Description of a field of order p**d.

    For a tower field ``d == 2*m*s``.  A plain field (used to host Paley sets)
    has ``m = None`` and ``s = d``.  ``modulus`` lists the
    coefficients constant term first and is always monic.
    """

    p: int
    d: int
    modulus: tuple[int, ...]
    s: int | None = None
    m: int | None = None

    @property
    def order(self) -> int:
        return self.p**self.d

    @property
    def q(self) -> int:
        if self.s is None:
            raise FieldError("plain field has no tower parameter q")
        return self.p**self.s

    @property
    def is_tower(self) -> bool:
        return self.m is not None

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "s": self.s,
            "m": self.m,
            "d": self.d,
            "modulus": list(self.modulus),
        }


def _check_modulus(p: int, d: int, modulus) -> tuple[int, ...]:
    coeffs = tuple(int(c) % p for c in modulus)
    if len(coeffs) != d + 1 or coeffs[-1] != 1:
        raise FieldError(f"modulus must be monic of degree {d}, got {list(modulus)}")
    # galoistools wants highest degree first
    high_first = [ZZ(c) for c in reversed(coeffs)]
    if not gf_irreducible_p(high_first, p, ZZ):
        raise ReducibleModulusError(f"modulus {list(coeffs)} is not irreducible over F_{p}")
    n1 = p**d - 1
    x = [ZZ(1), ZZ(0)]
    for r in factorint(n1):
        if [int(c) for c in gf_pow_mod(x, n1 // r, high_first, p, ZZ)] == [1]:
            order = _root_order(p, coeffs)
            raise NonPrimitiveModulusError(
                f"modulus {list(coeffs)} is not primitive (root has order {order})"
            )
    return coeffs


def _root_order(p: int, coeffs: tuple[int, ...]) -> int:
    high_first = [ZZ(c) for c in reversed(coeffs)]
    n1 = p ** (len(coeffs) - 1) - 1
    for e in sorted(_divisors(n1)):
        if [int(c) for c in gf_pow_mod([ZZ(1), ZZ(0)], e, high_first, p, ZZ)] == [1]:
            return e
    return n1


def _divisors(n: int) -> list[int]:
    divs = [1]
    for prime, mult in factorint(n).items():
        divs = [a * prime**k for a in divs for k in range(mult + 1)]
    return divs


def smallest_primitive_modulus(p: int, d: int) -> tuple[int, ...]:
    """Lexicographically smallest primitive monic polynomial of degree ``d``.

    Candidates are ordered by the tuple (c_{d-1}, ..., c_1, c_0), i.e. the
    constant term is compared last.
    """
    for high in itertools.product(range(p), repeat=d):
        if high[-1] == 0:
            continue
        coeffs = tuple(reversed(high)) + (1,)
        try:
            return _check_modulus(p, d, coeffs)
        except (ReducibleModulusError, NonPrimitiveModulusError):
            continue
    raise FieldError(f"no primitive polynomial of degree {d} over F_{p}")  # pragma: no cover


@dataclass(frozen=True)
class Subfield:
    """Index tables for the subfield of order p**c inside a FieldTable.

    ``step`` is the log of the subfield generator, so the subfield is ZERO
    together with the logs divisible by ``step``.  ``basis`` holds the
    echelonized F_p basis (rows of coordinates) and ``pivots`` its pivot
    columns; an element's canonical index reads its pivot coordinates as a
    base-p number, least significant first.
    """

    order: int
    c: int
    step: int
    basis: np.ndarray
    pivots: tuple[int, ...]
    index_of_log: np.ndarray
    log_of_index: np.ndarray


class FieldTable:
    """Discrete-log / Zech representation of F_{p^d}.

    Instances are treated as immutable once built; the lazily built subfield
    and trace tables are pure functions of the spec.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        p, d = spec.p, spec.d
        self.p = p
        self.d = d
        self.order = p**d
        self.n1 = self.order - 1
        self._pow = np.array([p**i for i in range(d)], dtype=np.int64)

        coords = np.zeros((self.n1, d), dtype=np.int64)
        low = np.array(spec.modulus[:d], dtype=np.int64)
        cur = np.zeros(d, dtype=np.int64)
        cur[0] = 1
        for j in range(self.n1):
            coords[j] = cur
            top = cur[-1]
            cur = np.roll(cur, 1)
            cur[0] = 0
            cur = (cur - top * low) % p
        self.coords = coords
        self.vec_of_log = coords @ self._pow
        log_of_vec = np.full(self.order, ZERO, dtype=np.int64)
        log_of_vec[self.vec_of_log] = np.arange(self.n1)
        if np.count_nonzero(log_of_vec == ZERO) != 1:
            raise NonPrimitiveModulusError("modulus root does not generate the multiplicative group")
        self.log_of_vec = log_of_vec

        one = coords[0]
        plus_one = (coords + one) % p
        self.zech = log_of_vec[plus_one @ self._pow]
        self._subfields: dict[int, Subfield] = {}
        self._traces: dict[int, np.ndarray] = {}

    def __repr__(self) -> str:
        return f"FieldTable(p={self.p}, d={self.d}, modulus={list(self.spec.modulus)})"

    # --- tower bookkeeping -------------------------------------------------

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def m(self) -> int:
        if self.spec.m is None:
            raise FieldError("plain field has no tower parameter m")
        return self.spec.m

    @property
    def qm(self) -> int:
        return self.q**self.m

    @property
    def N(self) -> int:
        """(q^m - 1)/(q - 1), the number of cyclotomic classes used throughout."""
        return (self.qm - 1) // (self.q - 1)

    @property
    def omega(self) -> int:
        """Log of omega = alpha^(q^m + 1), a generator of F_{q^m}^*."""
        return (self.qm + 1) % self.n1

    def subfield_degree(self, order: int) -> int:
        c, rest = 0, order
        while rest % self.p == 0 and rest > 1:
            rest //= self.p
            c += 1
        if rest != 1 or c == 0 or self.d % c:
            raise SubfieldError(f"{order} is not a subfield order of F_{self.order}")
        return c

    def subfield(self, order: int) -> Subfield:
        if order in self._subfields:
            return self._subfields[order]
        c = self.subfield_degree(order)
        step = self.n1 // (order - 1)
        basis, pivots = self._echelon_basis(step, c)
        logs = np.arange(0, self.n1, step, dtype=np.int64)
        idx = self.coords[logs][:, list(pivots)] @ self._pow[:c]
        index_of_log = np.full(self.n1, -1, dtype=np.int64)
        index_of_log[logs] = idx
        log_of_index = np.full(order, ZERO, dtype=np.int64)
        log_of_index[idx] = logs
        sub = Subfield(order, c, step, basis, pivots, index_of_log, log_of_index)
        self._subfields[order] = sub
        return sub

    def _echelon_basis(self, step: int, c: int) -> tuple[np.ndarray, tuple[int, ...]]:
        p = self.p
        rows: list[np.ndarray] = []
        k = 0
        while len(rows) < c:
            vec = self.coords[(k * step) % self.n1].copy()
            k += 1
            for row in rows:
                piv = int(np.flatnonzero(row)[0])
                if vec[piv]:
                    vec = (vec - vec[piv] * row) % p
            if not vec.any():
                continue
            piv = int(np.flatnonzero(vec)[0])
            vec = (vec * pow(int(vec[piv]), -1, p)) % p
            rows = [(r - r[piv] * vec) % p for r in rows]
            rows.append(vec)
        rows.sort(key=lambda r: int(np.flatnonzero(r)[0]))
        pivots = tuple(int(np.flatnonzero(r)[0]) for r in rows)
        return np.array(rows, dtype=np.int64), pivots

    # --- scalar arithmetic ---------------------------------------------------

    def element(self, coeffs) -> int:
        """Log of the element with the given F_p coordinates (constant first)."""
        vec = np.zeros(self.d, dtype=np.int64)
        vec[: len(coeffs)] = np.asarray(coeffs) % self.p
        return int(self.log_of_vec[int(vec @ self._pow)])

    def to_coords(self, a: int) -> np.ndarray:
        if a == ZERO:
            return np.zeros(self.d, dtype=np.int64)
        return self.coords[a % self.n1].copy()

    def add(self, a: int, b: int) -> int:
        if a == ZERO:
            return b
        if b == ZERO:
            return a
        z = int(self.zech[(b - a) % self.n1])
        return ZERO if z == ZERO else (a + z) % self.n1

    def neg(self, a: int) -> int:
        if a == ZERO or self.p == 2:
            return a
        return (a + self.n1 // 2) % self.n1

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == ZERO or b == ZERO:
            return ZERO
        return (a + b) % self.n1

    def inv(self, a: int) -> int:
        if a == ZERO:
            raise ZeroDivisionError("ZERO has no inverse")
        return (-a) % self.n1

    def pow(self, a: int, e: int) -> int:
        if a == ZERO:
            if e < 0:
                raise ZeroDivisionError("negative power of ZERO")
            return 0 if e == 0 else ZERO
        return (a * e) % self.n1

    def frobenius(self, a: int, k: int) -> int:
        """a^(p^k)."""
        if a == ZERO:
            return ZERO
        return (a * pow(self.p, k, self.n1)) % self.n1

    def is_in_subfield(self, a: int, order: int) -> bool:
        self.subfield_degree(order)
        return a == ZERO or a % (self.n1 // (order - 1)) == 0

    def rel_trace(self, a: int, sub_order_from: int, sub_order_to: int) -> int:
        """Relative trace from the subfield of order ``sub_order_from`` down to
        the subfield of order ``sub_order_to``."""
        c_from = self.subfield_degree(sub_order_from)
        c_to = self.subfield_degree(sub_order_to)
        if c_from % c_to:
            raise SubfieldError(f"F_{sub_order_to} is not a subfield of F_{sub_order_from}")
        if not self.is_in_subfield(a, sub_order_from):
            raise SubfieldError(f"element {a} is not in F_{sub_order_from}")
        if a == ZERO:
            return ZERO
        total = ZERO
        for i in range(c_from // c_to):
            total = self.add(total, (a * pow(sub_order_to, i, self.n1)) % self.n1)
        return total

    def canonical_index(self, a: int, order: int) -> int:
        if not self.is_in_subfield(a, order):
            raise SubfieldError(f"element {a} is not in F_{order}")
        if a == ZERO:
            return 0
        return int(self.subfield(order).index_of_log[a])

    # --- vectorized helpers --------------------------------------------------

    def add_many(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise sum of two log arrays (ZERO allowed)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        out = np.where(a == ZERO, b, a).copy()
        both = (a != ZERO) & (b != ZERO)
        z = self.zech[(b[both] - a[both]) % self.n1]
        out[both] = np.where(z == ZERO, ZERO, (a[both] + z) % self.n1)
        return out

    def rel_trace_many(self, a: np.ndarray, sub_order_from: int, sub_order_to: int) -> np.ndarray:
        """Vectorized :meth:`rel_trace`; membership of ``a`` is not rechecked."""
        c_from = self.subfield_degree(sub_order_from)
        c_to = self.subfield_degree(sub_order_to)
        if c_from % c_to:
            raise SubfieldError(f"F_{sub_order_to} is not a subfield of F_{sub_order_from}")
        a = np.asarray(a, dtype=np.int64)
        acc = np.full(a.shape, ZERO, dtype=np.int64)
        for i in range(c_from // c_to):
            term = np.where(a == ZERO, ZERO, (a * pow(sub_order_to, i, self.n1)) % self.n1)
            acc = self.add_many(acc, term)
        return acc

    def trace_table(self, order: int) -> np.ndarray:
        """Array over logs j: Tr_{F_order/F_p}(alpha^j) as an integer in [0, p).

        Only entries with ``j`` in the subfield are meaningful; the others are
        left at zero.
        """
        if order in self._traces:
            return self._traces[order]
        step = self.n1 // (order - 1)
        logs = np.arange(0, self.n1, step, dtype=np.int64)
        acc = self.rel_trace_many(logs, order, self.p)
        table = np.zeros(self.n1, dtype=np.int64)
        # the result lies in F_p, whose elements have coordinates (c, 0, ..., 0)
        table[logs] = np.where(acc == ZERO, 0, self.vec_of_log[np.maximum(acc, 0)])
        self._traces[order] = table
        return table

    @cached_property
    def subfield_orders(self) -> tuple[int, ...]:
        return tuple(self.p**c for c in range(1, self.d + 1) if self.d % c == 0)


def _check_prime_and_cap(p: int, d: int, size_cap: int) -> None:
    if not isprime(p):
        raise NotPrimeError(f"p={p} is not prime")
    if p**d > size_cap:
        raise SizeCapError(f"field order {p}^{d} exceeds size cap {size_cap}")


def build_field(
    p: int,
    s: int,
    m: int,
    modulus=None,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> FieldTable:
    """Build the tower field F_{q^{2m}} with q = p^s."""
    if s < 1:
        raise FieldError(f"s must be >= 1, got {s}")
    if m < 2:
        raise FieldError(f"m must be >= 2, got {m}")
    d = 2 * m * s
    _check_prime_and_cap(p, d, size_cap)
    mod = smallest_primitive_modulus(p, d) if modulus is None else _check_modulus(p, d, modulus)
    return FieldTable(FieldSpec(p=p, d=d, modulus=mod, s=s, m=m))


def build_plain_field(p: int, d: int, modulus=None, size_cap: int = DEFAULT_SIZE_CAP) -> FieldTable:
    """Build F_{p^d} with no tower structure (hosts Paley sets)."""
    if d < 1:
        raise FieldError(f"d must be >= 1, got {d}")
    _check_prime_and_cap(p, d, size_cap)
    mod = smallest_primitive_modulus(p, d) if modulus is None else _check_modulus(p, d, modulus)
    return FieldTable(FieldSpec(p=p, d=d, modulus=mod, s=d))


def table_from_spec(spec: FieldSpec, size_cap: int = DEFAULT_SIZE_CAP) -> FieldTable:
    if spec.m is not None:
        return build_field(spec.p, spec.s, spec.m, spec.modulus, size_cap=size_cap)
    return build_plain_field(spec.p, spec.d, spec.modulus, size_cap=size_cap)
