"""Exact checks for a PdsSet.

Two independent routes decide whether a set is a PDS: brute-force counting
of differences, and the full additive-character spectrum evaluated in Z[xi_p].
Neither uses floating point.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .construction import Group, PdsSet
from .cycint import CycInt
from .gf_tower import ZERO

MAX_WITNESSES = 10


@dataclass
class DifferenceReport:
    passed: bool
    identity_count: int
    # count value -> (#elements of D with that count, #elements outside D u {0})
    table: dict[int, tuple[int, int]]
    witnesses: list[dict]
    total: int

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "identity_count": self.identity_count,
            "table": {str(k): list(v) for k, v in sorted(self.table.items())},
            "witnesses": self.witnesses,
            "total_nonidentity": self.total,
        }


@dataclass
class SpectrumReport:
    passed: bool
    principal: CycInt
    spectrum: dict[CycInt, int]
    all_rational: bool
    multiplicities_ok: bool | None
    witnesses: list[dict]
    values: list[CycInt] = field(repr=False, default_factory=list)

    def as_dict(self) -> dict:
        items = sorted(self.spectrum.items(), key=lambda kv: (not kv[0].is_rational(), kv[0].coeffs))
        return {
            "passed": self.passed,
            "principal": self.principal.key(),
            "spectrum": {val.key(): mult for val, mult in items},
            "all_rational": self.all_rational,
            "multiplicities_ok": self.multiplicities_ok,
            "witnesses": self.witnesses,
        }


# --- difference counting ------------------------------------------------------


def difference_counts(pds: PdsSet, chunk: int = 256) -> np.ndarray:
    """counts[g] = #{(d1, d2) in D x D : d1 - d2 = g}, for every group index g."""
    group = pds.group
    p = group.p
    dig = group.digits(pds.indices).astype(np.int16)
    powers = p ** np.arange(group.n, dtype=np.int64)
    counts = np.zeros(group.v, dtype=np.int64)
    for start in range(0, len(dig), chunk):
        block = dig[start : start + chunk]
        diff = (block[:, None, :] - dig[None, :, :]) % p
        counts += np.bincount((diff @ powers).ravel(), minlength=group.v)
    return counts


def difference_count(pds: PdsSet) -> DifferenceReport:
    counts = difference_counts(pds)
    inside = pds.indicator.copy()
    c = pds.claimed
    table: dict[int, list[int]] = {}
    witnesses = []
    for g in range(1, pds.group.v):
        val = int(counts[g])
        entry = table.setdefault(val, [0, 0])
        if inside[g]:
            entry[0] += 1
            ok = val == c.lam
        else:
            entry[1] += 1
            ok = val == c.mu
        if not ok and len(witnesses) < MAX_WITNESSES:
            witnesses.append(
                {"element": g, "in_set": bool(inside[g]), "count": val,
                 "expected": c.lam if inside[g] else c.mu}
            )
    identity = int(counts[0])
    passed = not witnesses and identity == c.k and not inside[0]
    return DifferenceReport(
        passed=passed,
        identity_count=identity,
        table={k: tuple(v) for k, v in table.items()},
        witnesses=witnesses,
        total=int(counts[1:].sum()),
    )


# --- characters -----------------------------------------------------------------


def _exponents(group: Group, char_idx: np.ndarray, elem_idx: np.ndarray) -> np.ndarray:
    """Matrix of Tr(a x) + Tr(b y) mod p for characters (rows) and elements (cols)."""
    t = group.table
    char_logs = group.logs(char_idx)
    elem_logs = group.logs(elem_idx)
    out = np.zeros((len(char_idx), len(elem_idx)), dtype=np.int64)
    for order, a, x in zip(group.orders, char_logs, elem_logs):
        tr = t.trace_table(order)
        term = tr[(a[:, None] + x[None, :]) % t.n1]
        term[(a == ZERO)[:, None] | (x == ZERO)[None, :]] = 0
        out += term
    return out % group.p


def naive_character_values(pds: PdsSet, chunk: int = 512) -> np.ndarray:
    """Coefficient array (v, p): row g holds the character sum of D at character g.

    Characters are indexed like group elements: index g <-> (a, b) and the
    character is (x, y) -> xi^(Tr(a x) + Tr(b y)).
    """
    group = pds.group
    p, v = group.p, group.v
    elems = pds.indices
    out = np.zeros((v, p), dtype=np.int64)
    for start in range(0, v, chunk):
        chars = np.arange(start, min(start + chunk, v), dtype=np.int64)
        e = _exponents(group, chars, elems)
        key = (np.arange(len(chars))[:, None] * p + e).ravel()
        out[start : start + len(chars)] = np.bincount(key, minlength=len(chars) * p).reshape(-1, p)
    return out


def fast_character_values(pds: PdsSet) -> np.ndarray:
    """Same result as :func:`naive_character_values` via a p-ary additive transform.

    The indicator is transformed one coordinate at a time over Z_p^n using the
    standard dot product, then each field character is mapped to the dual
    vector w with w . x = Tr(a x) + Tr(b y).
    """
    group = pds.group
    p, n, v = group.p, group.n, group.v
    # C-order reshape puts the most significant digit on axis 0
    arr = np.zeros((v, p), dtype=np.int64)
    arr[:, 0] = pds.indicator
    arr = arr.reshape((p,) * n + (p,))
    for axis in range(n):
        slices = [np.take(arr, x, axis=axis) for x in range(p)]
        new = [sum(np.roll(slices[x], (a * x) % p, axis=-1) for x in range(p)) for a in range(p)]
        arr = np.stack(new, axis=axis)
    transformed = arr.reshape(v, p)
    unit = p ** np.arange(n, dtype=np.int64)
    dual = _exponents(group, np.arange(v, dtype=np.int64), unit)
    return transformed[group.from_digits(dual)]


def _canonical_rows(values: np.ndarray) -> np.ndarray:
    return values - values[:, -1:]


def _cyc_square(rows: np.ndarray, p: int) -> np.ndarray:
    out = np.zeros_like(rows)
    for i in range(p):
        for j in range(p):
            out[:, (i + j) % p] += rows[:, i] * rows[:, j]
    return out


def _eigen_residual(rows: np.ndarray, p: int, lam: int, mu: int, k: int) -> np.ndarray:
    """z^2 - (lambda - mu) z - (k - mu) for each row z, in canonical form."""
    res = _cyc_square(rows, p) - (lam - mu) * rows
    res[:, 0] -= k - mu
    return _canonical_rows(res)


def char_spectrum(pds: PdsSet, fast: bool = False) -> SpectrumReport:
    """Character sums of D at every character, checked against the claimed eigenvalues.

    A nonprincipal value passes when it is a root of
    x^2 - (lambda - mu) x - (k - mu), computed exactly in Z[xi_p].  For integer
    eigenvalues that is membership in {theta_pos, theta_neg}; it also covers
    conference-type parameters whose eigenvalues are quadratic irrationals.
    """
    group = pds.group
    p = group.p
    raw = fast_character_values(pds) if fast else naive_character_values(pds)
    canon = _canonical_rows(raw)
    rows, inverse, counts = np.unique(canon[1:], axis=0, return_inverse=True, return_counts=True)
    inverse = np.asarray(inverse).ravel()
    spectrum = {CycInt(p, row.tolist()): int(c) for row, c in zip(rows, counts)}
    principal = CycInt(p, canon[0].tolist())
    all_rational = bool(not canon[1:, 1:].any())

    c = pds.claimed
    row_ok = ~_eigen_residual(rows, p, c.lam, c.mu, c.k).any(axis=1)
    if c.eigenvalues is not None:
        row_ok &= ~rows[:, 1:].any(axis=1)
    bad = np.flatnonzero(~row_ok[inverse]) + 1
    witnesses = [
        {"character": _char_label(group, int(g)), "value": CycInt(p, canon[g].tolist()).key()}
        for g in bad[:MAX_WITNESSES]
    ]
    mult_ok = None
    if c.multiplicities is not None and not len(bad):
        f, g = c.multiplicities
        if c.eigenvalues is not None:
            got = (
                spectrum.get(CycInt.from_int(p, c.theta_pos), 0),
                spectrum.get(CycInt.from_int(p, c.theta_neg), 0),
            )
            mult_ok = got == (f, g)
        else:
            got = sorted(list(counts) + [0] * (2 - len(counts)))
            mult_ok = got == sorted((f, g))
    passed = not len(bad) and principal == c.k and mult_ok is not False
    values = [CycInt(p, row.tolist()) for row in canon]
    return SpectrumReport(passed, principal, spectrum, all_rational, mult_ok, witnesses, values)


def _char_label(group: Group, g: int) -> dict:
    logs = [int(x[0]) for x in group.logs(np.array([g]))]
    return {"index": g, "logs": [None if x == ZERO else x for x in logs]}


def parseval_check(pds: PdsSet, spectrum: SpectrumReport | None = None) -> bool:
    """sum over all characters of |chi(D)|^2 equals v k, evaluated exactly in Z[xi_p]."""
    if spectrum is None:
        spectrum = char_spectrum(pds)
    total = spectrum.principal.norm2()
    for val, mult in spectrum.spectrum.items():
        total = total + val.norm2() * mult
    return total == pds.group.v * pds.k


# --- structural checks ------------------------------------------------------------


def is_regular(pds: PdsSet) -> bool:
    if pds.indicator[0]:
        return False
    negated = pds.group.neg(pds.indices)
    return bool(pds.indicator[negated].all())


def scalar_invariance(pds: PdsSet, c: int) -> bool:
    """Whether multiplying every component by the field element ``c`` fixes D."""
    group = pds.group
    t = group.table
    if c == ZERO:
        raise ValueError("scalar must be nonzero")
    for order in group.orders:
        if not t.is_in_subfield(c, order):
            raise ValueError(f"scalar {c} does not act on F_{order}")
    logs = group.logs(pds.indices)
    moved = [np.where(x == ZERO, ZERO, (x + c) % t.n1) for x in logs]
    image = group.index(*moved)
    return bool(pds.indicator[image].all())


# --- full report ------------------------------------------------------------------


@dataclass
class VerifyReport:
    description: dict
    claimed: dict
    regular: bool
    identity_excluded: bool
    differences: DifferenceReport | None = None
    spectrum: SpectrumReport | None = None
    parseval: bool | None = None
    invariance: dict[str, bool] = field(default_factory=dict)
    verdicts: dict[str, bool] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def is_pds(self) -> bool:
        return bool(self.verdicts) and all(self.verdicts.values())

    def as_dict(self, with_timings: bool = False) -> dict:
        out = {
            "schema": 1,
            "set": self.description,
            "claimed": self.claimed,
            "regular": self.regular,
            "identity_excluded": self.identity_excluded,
            "difference_count": self.differences.as_dict() if self.differences else None,
            "char_spectrum": self.spectrum.as_dict() if self.spectrum else None,
            "parseval": self.parseval,
            "invariance": self.invariance,
            "verdicts": self.verdicts,
            "verdict": "PDS" if self.is_pds else "FAIL",
        }
        if with_timings:
            out["timings"] = {k: round(v, 4) for k, v in self.timings.items()}
        return out

    def to_text(self) -> str:
        lines = [
            f"set: {self.description.get('kind')} in {self.description.get('group')}",
            "claimed (v,k,lambda,mu) = ({v},{k},{lambda},{mu})".format(**self.claimed),
            f"regular: {self.regular}",
        ]
        if self.differences:
            d = self.differences
            lines.append(f"difference count: {'pass' if d.passed else 'FAIL'}")
            for val, (ins, outs) in sorted(d.table.items()):
                lines.append(f"  count {val}: {ins} in D, {outs} outside")
            for w in d.witnesses:
                lines.append(f"  witness {w}")
        if self.spectrum:
            s = self.spectrum
            lines.append(f"character spectrum: {'pass' if s.passed else 'FAIL'}")
            lines.append(f"  principal: {s.principal.key()}")
            for key, mult in s.as_dict()["spectrum"].items():
                lines.append(f"  value {key}: multiplicity {mult}")
            for w in s.witnesses:
                lines.append(f"  witness {w}")
        if self.parseval is not None:
            lines.append(f"parseval: {'pass' if self.parseval else 'FAIL'}")
        for name, ok in self.invariance.items():
            lines.append(f"invariance {name}: {ok}")
        for name, ok in self.timings.items():
            lines.append(f"time {name}: {ok:.3f}s")
        lines.append(f"verdict: {'PDS' if self.is_pds else 'FAIL'}")
        return "\n".join(lines)


def describe(pds: PdsSet) -> dict:
    out = {
        "kind": pds.kind,
        "group": pds.group.describe(),
        "field": pds.group.table.spec.as_dict(),
        "size": pds.k,
    }
    out.update({k: v for k, v in pds.meta.items() if k != "T"})
    return out


def verify_pds(
    pds: PdsSet,
    check_level: str = "all",
    fast: bool = False,
    invariance: bool = False,
) -> VerifyReport:
    """Run the enabled checks.  ``check_level`` is ``counts``, ``chars`` or ``all``."""
    if check_level not in ("counts", "chars", "all"):
        raise ValueError(f"unknown check level {check_level!r}")
    report = VerifyReport(
        description=describe(pds),
        claimed=pds.claimed.as_dict(),
        regular=is_regular(pds),
        identity_excluded=not bool(pds.indicator[0]),
    )
    report.verdicts["size"] = pds.k == pds.claimed.k
    report.verdicts["regular"] = report.regular
    report.verdicts["parameter_identity"] = pds.claimed.satisfies_identity()
    if check_level in ("counts", "all"):
        t0 = time.perf_counter()
        report.differences = difference_count(pds)
        report.timings["difference_count"] = time.perf_counter() - t0
        report.verdicts["difference_count"] = report.differences.passed
    if check_level in ("chars", "all"):
        t0 = time.perf_counter()
        report.spectrum = char_spectrum(pds, fast=fast)
        report.parseval = parseval_check(pds, report.spectrum)
        report.timings["char_spectrum"] = time.perf_counter() - t0
        report.verdicts["char_spectrum"] = report.spectrum.passed
        report.verdicts["parseval"] = report.parseval
    if invariance and pds.group.table.spec.is_tower:
        t = pds.group.table
        q_step = t.subfield(t.q).step
        ok_fq = all(scalar_invariance(pds, k * q_step) for k in range(t.q - 1))
        report.invariance["F_q^*"] = ok_fq
        report.invariance["omega"] = scalar_invariance(pds, t.omega)
    return report
