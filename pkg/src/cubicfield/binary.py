"""Binary forms as coefficient sequences.

``BinaryForm((c0, ..., cn))`` is ``sum c_i x^(n-i) y^i``; products are
convolutions, so identities among forms expand exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class BinaryForm:
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a binary form needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls((0,) * (degree + 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __call__(self, x, y):
        # homogeneous Horner: ((c0 x + c1 y) x + c2 y^2) ...
        acc = 0
        ypow = 1
        n = self.degree
        xpows = [1] * (n + 1)
        for i in range(1, n + 1):
            xpows[i] = xpows[i - 1] * x
        for i, c in enumerate(self.coeffs):
            acc += c * xpows[n - i] * ypow
            ypow *= y
        return acc

    def _check(self, other: "BinaryForm"):
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch {self.degree} vs {other.degree}")

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        self._check(other)
        return BinaryForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        self._check(other)
        return BinaryForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return BinaryForm(tuple(a * other for a in self.coeffs))
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return BinaryForm(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BinaryForm":
        result = BinaryForm((1,))
        for _ in range(k):
            result = result * self
        return result

    def dx(self) -> "BinaryForm":
        n = self.degree
        if n == 0:
            return BinaryForm((0,))
        return BinaryForm(tuple((n - i) * c for i, c in enumerate(self.coeffs[:-1])))

    def dy(self) -> "BinaryForm":
        if self.degree == 0:
            return BinaryForm((0,))
        return BinaryForm(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def substitute(self, p, q, r, s) -> "BinaryForm":
        """The form ``f(p x + q y, r x + s y)``."""
        n = self.degree
        lin1 = BinaryForm((p, q))
        lin2 = BinaryForm((r, s))
        total = BinaryForm.zero(n)
        for i, c in enumerate(self.coeffs):
            if c:
                total = total + (lin1**(n - i)) * (lin2**i) * c
        return total


def form(coeffs: Sequence) -> BinaryForm:
    return BinaryForm(tuple(coeffs))
