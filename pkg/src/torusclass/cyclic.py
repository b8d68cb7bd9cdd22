"""Exact arithmetic on integer combinations of transitive actions of a
procyclic group.

An element is a finite integer combination of orbit classes ``[k]``, the
transitive action of the group on k points through its distinguished
generator.  The product is forced by the orbit decomposition of a product
of two cycles:

    [a] * [b] = gcd(a, b) * [lcm(a, b)]

Over a finite field with q elements and Frobenius as the generator, ``[k]``
models the class of Spec of the degree-k extension field, and the mark at
e (fixed points of the e-th power of the generator) is the number of
points over the degree-e extension.  This dictionary loses no information
because the acting group is procyclic, so marks separate elements.

Lambda operations are computed concretely: the symmetric powers of an
effective element are materialized through the g-set engine, virtual
elements are handled by dividing the two symmetric-power series, and
alternating powers come out of the series recursion.
"""

from __future__ import annotations

import math
from typing import Mapping, Sequence

from . import gsets
from .series import TruncatedSeries, lambda_from_sigma


class CyclicBurnside:
    """Integer combination of orbit classes, keyed by orbit size."""

    __slots__ = ("_coeffs",)

    ZERO: "CyclicBurnside"
    ONE: "CyclicBurnside"

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if coeffs:
            for k, c in coeffs.items():
                if not isinstance(k, int) or k < 1:
                    raise ValueError(f"orbit size {k!r} must be a positive integer")
                if not isinstance(c, int):
                    raise ValueError(f"coefficient {c!r} must be an integer")
                if c != 0:
                    clean[k] = c
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("CyclicBurnside is immutable")

    @classmethod
    def orbit(cls, k: int) -> "CyclicBurnside":
        """The class of the transitive action on k points."""
        return cls({k: 1})

    @classmethod
    def from_int(cls, m: int) -> "CyclicBurnside":
        return cls({1: m})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    @staticmethod
    def _coerce(value) -> "CyclicBurnside":
        if isinstance(value, CyclicBurnside):
            return value
        if isinstance(value, int):
            return CyclicBurnside.from_int(value)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items())))

    def __add__(self, other) -> "CyclicBurnside":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return CyclicBurnside(out)

    __radd__ = __add__

    def __neg__(self) -> "CyclicBurnside":
        return CyclicBurnside({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other) -> "CyclicBurnside":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "CyclicBurnside":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "CyclicBurnside":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for a, ca in self._coeffs.items():
            for b, cb in other._coeffs.items():
                k = math.lcm(a, b)
                out[k] = out.get(k, 0) + ca * cb * math.gcd(a, b)
        return CyclicBurnside(out)

    __rmul__ = __mul__

    def mark(self, e: int) -> int:
        """Fixed points of the e-th power of the generator: only orbits
        whose size divides e contribute, each with all its points."""
        if e < 1:
            raise ValueError("mark exponent must be positive")
        return sum(k * c for k, c in self._coeffs.items() if e % k == 0)

    @classmethod
    def from_marks(cls, fix: Sequence[int]) -> "CyclicBurnside":
        """Recover an element from its marks at e = 1..len(fix).

        Inverts fix(e) = sum_{k | e} k a_k by increasing e.  Marks of any
        element supported on orbit sizes <= len(fix) round-trip exactly; an
        inconsistent vector shows up as a non-integral division and is
        rejected.
        """
        coeffs: dict[int, int] = {}
        for e in range(1, len(fix) + 1):
            seen = sum(k * c for k, c in coeffs.items() if e % k == 0)
            num = fix[e - 1] - seen
            if num % e != 0:
                raise ValueError(f"mark vector is inconsistent at exponent {e}")
            c = num // e
            if c:
                coeffs[e] = c
        return cls(coeffs)

    def induce(self, d: int) -> "CyclicBurnside":
        """Additive induction along the index-d subgroup: [k] -> [d k]."""
        if d < 1:
            raise ValueError("induction index must be positive")
        return CyclicBurnside({d * k: c for k, c in self._coeffs.items()})

    def base_change(self, d: int) -> "CyclicBurnside":
        """Restriction to the index-d subgroup:
        [k] -> gcd(d, k) [k / gcd(d, k)]."""
        if d < 1:
            raise ValueError("restriction index must be positive")
        out: dict[int, int] = {}
        for k, c in self._coeffs.items():
            g = math.gcd(d, k)
            kk = k // g
            out[kk] = out.get(kk, 0) + c * g
        return CyclicBurnside(out)

    def sigma_series(self, truncation: int) -> list["CyclicBurnside"]:
        """Symmetric powers sigma^0..sigma^truncation.

        The positive and negative parts are realized as concrete
        single-generator sets and their multiset powers counted; the two
        resulting series are divided, which is exact because a symmetric
        power series has constant term one.
        """
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        pos = {k: c for k, c in self._coeffs.items() if c > 0}
        neg = {k: -c for k, c in self._coeffs.items() if c < 0}
        sp = TruncatedSeries(_effective_sigma(pos, truncation), CyclicBurnside.ONE)
        if not neg:
            return list(sp.coeffs)
        sn = TruncatedSeries(_effective_sigma(neg, truncation), CyclicBurnside.ONE)
        return list((sp / sn).coeffs)

    def lambda_series(self, truncation: int) -> list["CyclicBurnside"]:
        """Alternating powers lambda^0..lambda^truncation."""
        return lambda_from_sigma(self.sigma_series(truncation))

    def lambda_op(self, i: int, truncation: int | None = None) -> "CyclicBurnside":
        """The i-th alternating power, computed through degree
        max(i, truncation)."""
        n = i if truncation is None else truncation
        if not 0 <= i <= n:
            raise ValueError("need 0 <= i <= truncation")
        return self.lambda_series(n)[i]

    def to_json(self) -> dict[str, int]:
        return {str(k): self._coeffs[k] for k in sorted(self._coeffs)}

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> "CyclicBurnside":
        return cls({int(k): c for k, c in obj.items()})

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k in sorted(self._coeffs):
            c = self._coeffs[k]
            if not parts:
                parts.append(f"{c}·[{k}]")
            elif c < 0:
                parts.append(f"- {-c}·[{k}]")
            else:
                parts.append(f"+ {c}·[{k}]")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"CyclicBurnside({self._coeffs!r})"


CyclicBurnside.ZERO = CyclicBurnside()
CyclicBurnside.ONE = CyclicBurnside.orbit(1)


def _effective_sigma(coeffs: Mapping[int, int], truncation: int) -> list[CyclicBurnside]:
    """Symmetric powers of an effective element, by materializing the
    disjoint union of cycles and counting multiset orbits."""
    lengths: list[int] = []
    for k in sorted(coeffs):
        lengths.extend([k] * coeffs[k])
    base = gsets.from_cycle_lengths(lengths)
    return [
        gsets.cyclic_decomposition(gsets.symmetric_power(base, j))
        for j in range(truncation + 1)
    ]
