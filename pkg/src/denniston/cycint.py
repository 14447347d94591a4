"""Exact elements of Z[xi_p], xi_p a primitive p-th root of unity."""

from __future__ import annotations

from collections.abc import Sequence


class CycInt:
    """Integer combination sum_j coeffs[j] * xi_p**j in canonical form.

    The relation 1 + xi + ... + xi^(p-1) = 0 is used to force the last
    coefficient to zero, after which equality is componentwise.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence[int]):
        if len(coeffs) != p:
            raise ValueError(f"expected {p} coefficients, got {len(coeffs)}")
        top = int(coeffs[-1])
        self.p = p
        self.coeffs = tuple(int(c) - top for c in coeffs)

    @classmethod
    def from_int(cls, p: int, n: int) -> CycInt:
        return cls(p, [n] + [0] * (p - 1))

    @classmethod
    def from_exponents(cls, p: int, exponents) -> CycInt:
        """sum over e in ``exponents`` of xi**e."""
        counts = [0] * p
        for e in exponents:
            counts[int(e) % p] += 1
        return cls(p, counts)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def __add__(self, other: CycInt | int) -> CycInt:
        if isinstance(other, int):
            other = CycInt.from_int(self.p, other)
        self._check(other)
        return CycInt(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        return CycInt(self.p, [-a for a in self.coeffs])

    def __sub__(self, other: CycInt | int) -> CycInt:
        return self + (-other)

    def __rsub__(self, other: int) -> CycInt:
        return (-self) + other

    def __mul__(self, other: CycInt | int) -> CycInt:
        if isinstance(other, int):
            return CycInt(self.p, [a * other for a in self.coeffs])
        self._check(other)
        p = self.p
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[(i + j) % p] += a * b
        return CycInt(p, out)

    __rmul__ = __mul__

    def conj(self) -> CycInt:
        p = self.p
        return CycInt(p, [self.coeffs[(-j) % p] for j in range(p)])

    def norm2(self) -> CycInt:
        """|z|^2 = z * conj(z), again an element of Z[xi_p]."""
        return self * self.conj()

    def _check(self, other: CycInt) -> None:
        if other.p != self.p:
            raise ValueError("mixing roots of unity of different orders")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def key(self) -> str:
        """Stable text form: the integer if rational, else the coefficient list."""
        if self.is_rational():
            return str(self.coeffs[0])
        return "[" + ",".join(map(str, self.coeffs)) + "]"

    def __repr__(self) -> str:
        return f"CycInt(p={self.p}, {self.key()})"
