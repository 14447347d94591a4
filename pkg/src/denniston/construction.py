"""Partial difference sets: the Denniston-parameter family plus calibration sets.

Group elements are addressed by dense integer indices.  For the product group
F_{q^m} x F_{q^{2m}} the index of (x, y) is idx(x) * q^{2m} + idx(y), where idx
is the canonical subfield index from :mod:`gf_tower`.  Because each idx is a
base-p reading of F_p coordinates, the whole index is a base-p reading of one
coordinate vector in Z_p^n, and group addition is digitwise addition mod p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import cyclotomy
from .cyclotomy import SubspaceR
from .gf_tower import ZERO, FieldTable
from .quad_form import zero_set


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class ParamSet:
    v: int
    k: int
    lam: int
    mu: int

    def satisfies_identity(self) -> bool:
        """k^2 = mu v + (lambda - mu) k + (k - mu)."""
        v, k, lam, mu = self.v, self.k, self.lam, self.mu
        return k * k == mu * v + (lam - mu) * k + (k - mu)

    @property
    def _disc(self) -> int:
        return (self.mu - self.lam) ** 2 + 4 * (self.k - self.mu)

    @property
    def eigenvalues(self) -> tuple[int, int] | None:
        """(theta_pos, theta_neg) when both are integers, else None."""
        disc = self._disc
        if disc < 0:
            return None
        root = math.isqrt(disc)
        if root * root != disc or (self.lam - self.mu + root) % 2:
            return None
        return (self.lam - self.mu + root) // 2, (self.lam - self.mu - root) // 2

    @property
    def theta_pos(self) -> int | None:
        ev = self.eigenvalues
        return ev and ev[0]

    @property
    def theta_neg(self) -> int | None:
        ev = self.eigenvalues
        return ev and ev[1]

    @property
    def multiplicities(self) -> tuple[int, int] | None:
        """(f, g) solving 1 + f + g = v and k + f theta_pos + g theta_neg = 0.

        With irrational eigenvalues the system only has a rational solution in
        the conference case 2k + (v - 1)(lambda - mu) = 0, where f = g.
        """
        ev = self.eigenvalues
        if ev is None:
            if 2 * self.k + (self.v - 1) * (self.lam - self.mu) or (self.v - 1) % 2:
                return None
            return (self.v - 1) // 2, (self.v - 1) // 2
        if ev[0] == ev[1]:
            return None
        tp, tn = ev
        num = -self.k - tn * (self.v - 1)
        if num % (tp - tn):
            return None
        f = num // (tp - tn)
        return f, self.v - 1 - f

    @property
    def f(self) -> int | None:
        mult = self.multiplicities
        return mult and mult[0]

    @property
    def g(self) -> int | None:
        mult = self.multiplicities
        return mult and mult[1]

    def latin_square_type(self) -> tuple[int, int, int] | None:
        """(n, r, eps) if the parameters fit the (negative) Latin square family."""
        n = math.isqrt(self.v)
        if n * n != self.v:
            return None
        for eps in (1, -1):
            if self.k % (n - eps):
                continue
            r = self.k // (n - eps)
            if self.lam == eps * n + r * r - 3 * eps * r and self.mu == r * r - eps * r:
                return n, r, eps
        return None

    def as_dict(self) -> dict:
        return {
            "v": self.v,
            "k": self.k,
            "lambda": self.lam,
            "mu": self.mu,
            "theta_pos": self.theta_pos,
            "theta_neg": self.theta_neg,
            "f": self.f,
            "g": self.g,
        }

    @classmethod
    def from_dict(cls, d: dict) -> ParamSet:
        return cls(d["v"], d["k"], d["lambda"], d["mu"])


@dataclass(frozen=True)
class Group:
    """Additive group of a product of subfields of one FieldTable.

    ``orders`` lists the component subfield orders, most significant first.
    """

    table: FieldTable
    orders: tuple[int, ...]

    @property
    def v(self) -> int:
        return math.prod(self.orders)

    @property
    def p(self) -> int:
        return self.table.p

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(self.table.subfield_degree(o) for o in self.orders)

    @property
    def n(self) -> int:
        return sum(self.degrees)

    def index(self, *logs) -> np.ndarray:
        """Dense index of the element with the given component logs."""
        out = np.zeros(np.broadcast(*[np.asarray(x) for x in logs]).shape, dtype=np.int64)
        for order, comp in zip(self.orders, logs):
            comp = np.asarray(comp, dtype=np.int64)
            sub = self.table.subfield(order)
            idx = np.where(comp == ZERO, 0, sub.index_of_log[np.maximum(comp, 0)])
            if np.any(idx < 0):
                raise ValueError(f"element not in subfield F_{order}")
            out = out * order + idx
        return out

    def logs(self, indices) -> list[np.ndarray]:
        """Inverse of :meth:`index`: component log arrays."""
        rest = np.asarray(indices, dtype=np.int64)
        parts = []
        for order in reversed(self.orders):
            parts.append(self.table.subfield(order).log_of_index[rest % order])
            rest = rest // order
        return parts[::-1]

    def digits(self, indices) -> np.ndarray:
        """Base-p digits (least significant first) of each index, shape (..., n)."""
        idx = np.asarray(indices, dtype=np.int64)
        powers = self.table.p ** np.arange(self.n, dtype=np.int64)
        return (idx[..., None] // powers) % self.table.p

    def from_digits(self, digits: np.ndarray) -> np.ndarray:
        powers = self.table.p ** np.arange(self.n, dtype=np.int64)
        return (np.asarray(digits, dtype=np.int64) % self.table.p) @ powers

    def neg(self, indices) -> np.ndarray:
        return self.from_digits(-self.digits(indices))

    def describe(self) -> str:
        return " x ".join(f"F_{o}" for o in self.orders)


@dataclass(frozen=True)
class PdsSet:
    group: Group
    indicator: np.ndarray
    claimed: ParamSet
    kind: str = "custom"
    meta: dict = field(default_factory=dict)

    @cached_property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.indicator)

    @property
    def k(self) -> int:
        return int(self.indicator.sum())

    def toggled(self, index: int) -> PdsSet:
        """Copy with one group element added or removed; claimed parameters kept."""
        ind = self.indicator.copy()
        ind[index] = not ind[index]
        meta = dict(self.meta, mutated=int(index))
        return PdsSet(self.group, ind, self.claimed, self.kind, meta)


def _pds_from_indices(group: Group, indices, claimed: ParamSet, kind: str, meta=None) -> PdsSet:
    ind = np.zeros(group.v, dtype=bool)
    ind[np.asarray(indices, dtype=np.int64)] = True
    return PdsSet(group, ind, claimed, kind, dict(meta or {}))


def _check_qmr(q: int, m: int, r: int) -> None:
    if q < 2:
        raise ParameterError(f"q must be a prime power, got {q}")
    if m < 2:
        raise ParameterError(f"m must be >= 2, got {m}")
    if not 1 <= r < m:
        raise ParameterError(f"r must satisfy 1 <= r < m, got r={r}, m={m}")


def expected_params(q: int, m: int, r: int) -> ParamSet:
    _check_qmr(q, m, r)
    n = q ** (m + r) - q**m + q**r
    return ParamSet(
        v=q ** (3 * m),
        k=n * (q**m - 1),
        lam=q**m - q**r + n * (q**r - 2),
        mu=n * (q**r - 1),
    )


def srg_params(q: int, m: int, r: int) -> ParamSet:
    """Parameters of the strongly regular Cayley graph with connection set D.

    Valid on the full range 1 <= r < m, the range of the PDS construction.
    """
    return expected_params(q, m, r)


def expected_char_values(q: int, m: int, r: int) -> tuple[int, int]:
    _check_qmr(q, m, r)
    return q**m - q**r, q**m - q**r - q ** (m + r)


def product_group(t: FieldTable) -> Group:
    return Group(t, (t.qm, t.order))


def build_denniston(t: FieldTable, r: int, R: SubspaceR | None = None) -> PdsSet:
    """Union over i of C_i^(N, q^m) x (union over t in T of C_{i+t}^(N, q^2m)),
    together with F_{q^m}^* x {0}."""
    q, m = t.q, t.m
    _check_qmr(q, m, r)
    if R is None:
        R = cyclotomy.default_subspace(t, r)
    if R.r != r:
        raise ParameterError(f"subspace has dimension {R.r}, expected {r}")
    R = cyclotomy.make_subspace(t, R.basis)
    T = cyclotomy.subspace_index_set(t, R)
    N, n1 = t.N, t.n1
    group = product_group(t)

    step_m = t.subfield(t.qm).step
    small_j = np.arange(q - 1, dtype=np.int64)
    big_j = np.arange(n1 // N, dtype=np.int64)
    tt = np.asarray(T.members, dtype=np.int64)
    chunks = []
    for i in range(N):
        xs = (step_m * (i + N * small_j)) % n1
        ys = (((i + tt) % N)[:, None] + N * big_j[None, :]).ravel()
        chunks.append(group.index(xs[:, None], ys[None, :]).ravel())
    nonzero_x = np.arange(0, n1, step_m, dtype=np.int64)
    chunks.append(group.index(nonzero_x, np.full_like(nonzero_x, ZERO)))
    indices = np.concatenate(chunks)
    claimed = expected_params(q, m, r)
    meta = {
        "r": r,
        "basis": list(R.basis),
        "T": list(T.members),
    }
    pds = _pds_from_indices(group, indices, claimed, "denniston", meta)
    if len(np.unique(indices)) != len(indices):
        raise ArithmeticError("construction produced repeated elements")
    return pds


def paley_pds(t: FieldTable) -> PdsSet:
    """Nonzero squares of the whole field ``t`` (order q = 1 mod 4)."""
    q = t.order
    if q % 4 != 1:
        raise ParameterError(f"Paley sets need q = 1 mod 4, got {q}")
    group = Group(t, (q,))
    squares = np.arange(0, t.n1, 2, dtype=np.int64)
    claimed = ParamSet(q, (q - 1) // 2, (q - 5) // 4, (q - 1) // 4)
    return _pds_from_indices(group, group.index(squares), claimed, "paley")


def projective_set_params(n: int, h1: int, h2: int, q: int, mdim: int) -> ParamSet:
    """PDS parameters of the F_q^*-cone over a projective (n, mdim, h1, h2) set."""
    if n < 1 or not 0 <= h1 < h2:
        raise ParameterError(f"need n >= 1 and 0 <= h1 < h2, got n={n}, h1={h1}, h2={h2}")
    prod = (q * h1 - n) * (q * h2 - n)
    return ParamSet(
        v=q**mdim,
        k=(q - 1) * n,
        lam=(q - 1) * n + prod + q * (h1 + h2) - 2 * n,
        mu=(q - 1) * n + prod,
    )


def quadric_params(q: int, m: int) -> ParamSet:
    return ParamSet(
        v=q ** (2 * m),
        k=(q**m + 1) * (q ** (m - 1) - 1),
        lam=q ** (2 * m - 2) - q ** (m - 1) * (q - 1) - 2,
        mu=q ** (2 * m - 2) - q ** (m - 1),
    )


def quadric_pds(t: FieldTable) -> PdsSet:
    group = Group(t, (t.order,))
    X = zero_set(t)
    claimed = quadric_params(t.q, t.m)
    return _pds_from_indices(group, group.index(np.asarray(X.elements)), claimed, "quadric")
