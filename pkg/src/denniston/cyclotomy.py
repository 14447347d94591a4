"""Cyclotomic classes of index N = (q^m-1)/(q-1) and the index sets built on them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .gf_tower import ZERO, FieldTable, SubfieldError


@dataclass(frozen=True)
class CycIndex:
    N: int
    i: int
    ambient: int

    def __post_init__(self):
        if not 0 <= self.i < self.N:
            raise ValueError(f"class index {self.i} out of range [0, {self.N})")
        if (self.ambient - 1) % self.N:
            raise ValueError(f"N={self.N} does not divide {self.ambient}-1")


@dataclass(frozen=True)
class IndexSet:
    modulus: int
    members: tuple[int, ...]

    def __post_init__(self):
        ms = self.members
        if list(ms) != sorted(set(ms)) or any(not 0 <= x < self.modulus for x in ms):
            raise ValueError("index set members must be sorted, distinct and in range")

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return (x % self.modulus) in self._lookup

    @cached_property
    def _lookup(self) -> frozenset[int]:
        return frozenset(self.members)

    def mask(self) -> np.ndarray:
        out = np.zeros(self.modulus, dtype=bool)
        out[list(self.members)] = True
        return out

    def as_dict(self) -> dict:
        return {"modulus": self.modulus, "members": list(self.members)}


@dataclass(frozen=True)
class SubspaceR:
    """F_q-subspace of F_{q^m} given by a basis of element logs."""

    basis: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.basis)


def class_members(t: FieldTable, c: CycIndex) -> frozenset[int]:
    """Logs of C_i^(N, ambient) = {g^(i + N j)} where g generates the ambient subfield."""
    t.subfield_degree(c.ambient)
    step = t.n1 // (c.ambient - 1)
    size = (c.ambient - 1) // c.N
    return frozenset(int(step * (c.i + c.N * j)) % t.n1 for j in range(size))


def trace_zero_index_set(t: FieldTable) -> IndexSet:
    N, q, qm = t.N, t.q, t.qm
    members = tuple(i for i in range(N) if t.rel_trace(t.pow(t.omega, i), qm, q) == ZERO)
    return IndexSet(N, members)


def span(t: FieldTable, basis) -> frozenset[int]:
    """All F_q-linear combinations of ``basis`` (logs), ZERO included."""
    scalars = [ZERO] + [k * t.subfield(t.q).step for k in range(t.q - 1)]
    elems = {ZERO}
    for b in basis:
        elems = {t.add(e, t.mul(c, b)) for e in elems for c in scalars}
    return frozenset(elems)


def _check_basis(t: FieldTable, basis) -> None:
    for b in basis:
        if b == ZERO or not t.is_in_subfield(b, t.qm):
            raise SubfieldError(f"basis element {b} is not a nonzero element of F_{t.qm}")
    if len(span(t, basis)) != t.q ** len(basis):
        raise ValueError(f"basis {list(basis)} is not linearly independent over F_{t.q}")


def make_subspace(t: FieldTable, basis) -> SubspaceR:
    basis = tuple(int(b) % t.n1 for b in basis)
    _check_basis(t, basis)
    return SubspaceR(basis)


def subspace_from_omega_powers(t: FieldTable, exponents) -> SubspaceR:
    """Subspace spanned by omega**e for the given exponents."""
    return make_subspace(t, [t.pow(t.omega, e) for e in exponents])


def _check_r(t: FieldTable, r: int) -> None:
    if not 1 <= r < t.m:
        raise ValueError(f"r must satisfy 1 <= r < m={t.m}, got {r}")


def _extend(t: FieldTable, r: int, candidates) -> SubspaceR:
    basis: list[int] = []
    size = 1
    for cand in candidates:
        if len(basis) == r:
            break
        grown = len(span(t, basis + [cand]))
        if grown > size:
            basis.append(cand)
            size = grown
    return make_subspace(t, basis)


def default_subspace(t: FieldTable, r: int) -> SubspaceR:
    """Span of 1, omega, omega^2, ... skipping any power that adds nothing."""
    _check_r(t, r)
    return _extend(t, r, (t.pow(t.omega, e) for e in range(t.qm - 1)))


def random_subspace(t: FieldTable, r: int, seed: int) -> SubspaceR:
    """Seeded random r-dimensional subspace; basis drawn from F_{q^m}^*."""
    _check_r(t, r)
    rng = np.random.default_rng(seed)
    exps = rng.permutation(t.qm - 1)
    return _extend(t, r, (t.pow(t.omega, int(e)) for e in exps))


def subspace_index_set(t: FieldTable, R: SubspaceR) -> IndexSet:
    elems = span(t, R.basis)
    members = tuple(i for i in range(t.N) if t.pow(t.omega, i) in elems)
    return IndexSet(t.N, members)


def intersection_profile(t: FieldTable, T: IndexSet, I: IndexSet, u: int) -> int:
    """|{alpha^(t+u) : t in T} intersected with the union of C_i, i in I|."""
    if not 0 <= u < t.n1:
        raise ValueError(f"shift u={u} out of range")
    N = I.modulus
    # C_i^(N, q^2m) membership is the log residue mod N
    return sum(1 for x in T.members if ((x + u) % t.n1) % N in I)


def all_intersection_profiles(t: FieldTable, T: IndexSet, I: IndexSet) -> np.ndarray:
    """intersection_profile for every u in [0, q^{2m}-2] at once."""
    u = np.arange(t.n1, dtype=np.int64)
    mask = I.mask()
    tt = np.asarray(T.members, dtype=np.int64)
    return mask[((tt[None, :] + u[:, None]) % t.n1) % I.modulus].sum(axis=1)
