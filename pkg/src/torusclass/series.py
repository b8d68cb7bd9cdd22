"""Truncated power series over an arbitrary commutative ring.

Coefficients can be any values supporting +, - and *.  The ring's
multiplicative identity is passed in explicitly, which lets inversion
check its precondition (unit constant term) without further assumptions;
no coefficient division is ever performed.

The conversion between symmetric-power and alternating-power coefficient
sequences lives here because it is pure series algebra: the two
generating series are mutually inverse up to the sign flip t -> -t, which
collapses to the recursion

    sum_{i=0..k} (-1)^i lam[i] * sig[k-i] == 0    for every k >= 1.
"""

from __future__ import annotations

from typing import Sequence


class TruncatedSeries:
    """A power series known through degree ``truncation``."""

    __slots__ = ("coeffs", "one", "zero")

    def __init__(self, coeffs: Sequence, one):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least its constant term")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "one", one)
        object.__setattr__(self, "zero", one - one)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if self.truncation != other.truncation:
            raise ValueError("series truncations differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.one
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.one
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        n = self.truncation
        out = []
        for k in range(n + 1):
            acc = self.zero
            for i in range(k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return TruncatedSeries(out, self.one)

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse to the same truncation.

        Requires constant term equal to the ring's one; the recursion
        u[k] = -sum_{i=1..k} s[i] u[k-i] then needs no division.
        """
        if not self.coeffs[0] == self.one:
            raise ValueError("constant term is not the ring identity; cannot invert")
        n = self.truncation
        out = [self.one]
        for k in range(1, n + 1):
            acc = self.zero
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * out[k - i]
            out.append(self.zero - acc)
        return TruncatedSeries(out, self.one)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return self * other.invert()


def lambda_from_sigma(sigmas: Sequence) -> list:
    """Alternating-power coefficients from symmetric-power coefficients.

    ``sigmas[0]`` must be the ring's one.  Solves the defining recursion
    for lam[k]:  lam[k] = (-1)^(k+1) sum_{i=0..k-1} (-1)^i lam[i] sig[k-i].
    """
    sigmas = list(sigmas)
    if not sigmas:
        raise ValueError("need at least the constant symmetric power")
    one = sigmas[0]
    lams = [one]
    for k in range(1, len(sigmas)):
        acc = None
        for i in range(k):
            term = lams[i] * sigmas[k - i]
            if i % 2 == 1:
                term = one - one - term
            acc = term if acc is None else acc + term
        if k % 2 == 0:
            acc = one - one - acc
        lams.append(acc)
    return lams


def sigma_from_lambda(lams: Sequence) -> list:
    """Inverse of lambda_from_sigma, by the same recursion solved for sig[k]."""
    lams = list(lams)
    if not lams:
        raise ValueError("need at least the constant alternating power")
    one = lams[0]
    sigs = [one]
    for k in range(1, len(lams)):
        acc = None
        for i in range(1, k + 1):
            term = lams[i] * sigs[k - i]
            if i % 2 == 0:
                term = one - one - term
            acc = term if acc is None else acc + term
        sigs.append(acc)
    return sigs
