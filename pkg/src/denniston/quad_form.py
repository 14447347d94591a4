"""The quadratic form Q(x) = Tr_{q^m/q}(x^(q^m+1)) on F_{q^{2m}}."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cycint import CycInt
from .cyclotomy import IndexSet
from .gf_tower import ZERO, FieldTable


class QuadricError(ArithmeticError):
    pass


@dataclass(frozen=True)
class QuadricSet:
    elements: tuple[int, ...]
    epsilon: int

    def as_dict(self) -> dict:
        return {"epsilon": self.epsilon, "elements": list(self.elements)}


def eval_Q(t: FieldTable, x: int) -> int:
    return t.rel_trace(t.pow(x, t.qm + 1), t.qm, t.q)


def eval_B(t: FieldTable, u: int, v: int) -> int:
    return t.sub(t.sub(eval_Q(t, t.add(u, v)), eval_Q(t, u)), eval_Q(t, v))


def q_table(t: FieldTable) -> np.ndarray:
    """Q evaluated at every field element, indexed by coordinate vector."""
    vals = np.array([eval_Q(t, int(t.log_of_vec[v])) for v in range(t.order)], dtype=np.int64)
    return vals


def zero_set(t: FieldTable) -> QuadricSet:
    elems = tuple(j for j in range(t.n1) if eval_Q(t, j) == ZERO)
    qm, qm1 = t.qm, t.qm // t.q
    sizes = {(qm - 1) * (qm1 + 1): 1, (qm + 1) * (qm1 - 1): -1}
    if len(elems) not in sizes:
        raise QuadricError(f"zero set of size {len(elems)} matches neither quadric type")
    return QuadricSet(elems, sizes[len(elems)])


def radical(t: FieldTable) -> list[int]:
    """{w : Q(w) = 0 and B(w, v) = 0 for all v}, by exhaustion over vectors."""
    qt = q_table(t)
    vecs = np.arange(t.order, dtype=np.int64)
    out = []
    for w in vecs:
        if qt[w] != ZERO:
            continue
        sums = _vec_add(t, np.full_like(vecs, w), vecs)
        # B(w, v) = Q(w+v) - Q(w) - Q(v) with Q(w) = 0
        if all(t.sub(int(a), int(b)) == ZERO for a, b in zip(qt[sums], qt[vecs])):
            out.append(int(t.log_of_vec[w]))
    return out


def is_nonsingular(t: FieldTable) -> bool:
    return radical(t) == [ZERO]


def _vec_add(t: FieldTable, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros_like(a)
    base = 1
    for _ in range(t.d):
        out += ((a // base + b // base) % t.p) * base
        base *= t.p
    return out


def verify_cyclotomic_description(t: FieldTable, I: IndexSet) -> bool:
    return not cyclotomic_mismatch(t, I)


def cyclotomic_mismatch(t: FieldTable, I: IndexSet) -> list[int]:
    """Symmetric difference between the zero set and the union of C_i over I."""
    zs = set(zero_set(t).elements)
    union = {j for j in range(t.n1) if (j % I.modulus) in I}
    return sorted(zs ^ union)


def character_sum(t: FieldTable, elements, b: int) -> CycInt:
    """sum over x in ``elements`` of xi_p^Tr_{q^2m/p}(b x); b = ZERO gives the cardinality."""
    tr = t.trace_table(t.order)
    if b == ZERO:
        return CycInt.from_int(t.p, len(elements))
    xs = np.asarray(elements, dtype=np.int64)
    return CycInt.from_exponents(t.p, tr[(xs + b) % t.n1])


def zero_set_char_value(t: FieldTable, b: int) -> CycInt:
    if b == ZERO:
        raise ValueError("b must be nonzero")
    return character_sum(t, zero_set(t).elements, b)


def expected_zero_set_char_value(t: FieldTable, b: int) -> int:
    qm1 = t.qm // t.q
    return (qm1 - 1) - t.qm if eval_Q(t, b) == ZERO else qm1 - 1
