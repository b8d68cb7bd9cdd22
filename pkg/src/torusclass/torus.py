"""Classes of unit tori of separable algebras over a finite field.

A separable algebra L over the field with q elements is, up to
isomorphism, a product of field extensions of degrees n_1 >= n_2 >= ...,
recorded here as an AlgebraSpec.  The scheme of units of L is an
n-dimensional torus whose class, in a ring of varieties where
zero-dimensional classes and powers of the Lefschetz class L are
independent, is a monic polynomial

    [units] = L^n + a_1 L^(n-1) + ... + a_n

with each a_i an integer combination of classes of finite field
extensions, modelled by CyclicBurnside elements via [k] = [Spec F_{q^k}].

Three independent computations of this polynomial are provided:

* class_via_lambda: a_i = (-1)^i lambda^i of the class of Spec L, with
  the alternating powers computed by symmetric-power series division in
  the procyclic Burnside ring;
* class_via_universal: a_i is the restriction, along the Frobenius cycle
  type, of a universal element of the symmetric-group Burnside subring
  built from an alternating sum over compositions of i;
* class_via_recursion: a direct stratification of affine n-space over
  the base, peeling off loci by the size of their vanishing set within
  each fiber, implemented on concrete finite sets with memoization on
  the isomorphism type of each fibered piece.

Point counting over any extension, and the characteristic polynomial of
Frobenius on the character lattice, are read off from marks and checked
against closed-form oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache
from itertools import combinations
from typing import Mapping, Sequence

from .combinatorics import Composition, Partition
from .cyclic import CyclicBurnside
from .gsets import FiniteGSet, cycle_type, from_cycle_lengths, perm_of_cycle_type
from .schur import restrict_to_cyclic, torus_coefficient


@dataclass(frozen=True)
class AlgebraSpec:
    """Degrees of the field factors of a separable algebra, sorted
    descending.  The empty tuple is the zero algebra (n = 0)."""

    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        parts = tuple(sorted(parts, reverse=True))
        if any(not isinstance(p, int) or p < 1 for p in parts):
            raise ValueError("factor degrees must be positive integers")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @classmethod
    def parse(cls, text: str) -> "AlgebraSpec":
        """Parse a comma-separated degree list such as "2,2" or "3"."""
        try:
            parts = tuple(int(piece) for piece in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse partition {text!r}") from None
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


class TorusClass:
    """Monic degree-n polynomial in the Lefschetz class with
    zero-dimensional coefficients; coeffs[i] multiplies L^(n-i)."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Sequence[CyclicBurnside]):
        coeffs = tuple(coeffs)
        if n < 0 or len(coeffs) != n + 1:
            raise ValueError("need exactly n + 1 coefficients")
        if any(not isinstance(c, CyclicBurnside) for c in coeffs):
            raise ValueError("coefficients must be CyclicBurnside elements")
        if coeffs[0] != CyclicBurnside.ONE:
            raise ValueError("polynomial must be monic")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TorusClass is immutable")

    def coefficient(self, power: int) -> CyclicBurnside:
        """The coefficient of L^power."""
        if not 0 <= power <= self.n:
            raise ValueError(f"power {power} out of range 0..{self.n}")
        return self.coeffs[self.n - power]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusClass):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.n, self.coeffs))

    def __mul__(self, other: "TorusClass") -> "TorusClass":
        if not isinstance(other, TorusClass):
            return NotImplemented
        n = self.n + other.n
        out = [CyclicBurnside.ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return TorusClass(n, out)

    def count_points(self, q: int, e: int) -> int:
        """Number of points over the degree-e extension of a q-element
        field: evaluate each coefficient by its mark at e and L at q^e."""
        if q < 2:
            raise ValueError("q must be at least 2")
        if e < 1:
            raise ValueError("e must be positive")
        qe = q**e
        return sum(a.mark(e) * qe ** (self.n - i) for i, a in enumerate(self.coeffs))

    def char_poly(self) -> tuple[int, ...]:
        """Coefficients, by ascending power, of the characteristic
        polynomial of the generator on the character lattice: each torus
        coefficient contributes its mark at 1."""
        out = [0] * (self.n + 1)
        for i, a in enumerate(self.coeffs):
            out[self.n - i] = a.mark(1)
        return tuple(out)

    def to_json(self) -> dict:
        entries = []
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            entries.append({"power": self.n - i, "artin": a.to_json()})
        return {"n": self.n, "coeffs": entries}

    @classmethod
    def from_json(cls, obj: Mapping) -> "TorusClass":
        n = obj["n"]
        coeffs = [CyclicBurnside.ZERO] * (n + 1)
        for entry in obj["coeffs"]:
            power = entry["power"]
            if not 0 <= power <= n:
                raise ValueError(f"power {power} out of range 0..{n}")
            coeffs[n - power] = CyclicBurnside.from_json(entry["artin"])
        return cls(n, coeffs)

    def text(self) -> str:
        return _render(self, _TEXT)

    def latex(self) -> str:
        return _render(self, _LATEX)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"TorusClass(n={self.n}, {self.text()!r})"


@dataclass(frozen=True)
class _Dialect:
    field: str  # template with {k}, the class of the degree-k extension
    lefschetz: str
    times: str
    power: str  # template with {base} and {power}


_TEXT = _Dialect("[Spec F_q^{k}]", "L", "·", "{base}^{power}")
_LATEX = _Dialect(
    r"[\operatorname{{Spec}}\mathbb{{F}}_{{q^{{{k}}}}}]",
    r"\mathbb{L}",
    "",
    "{base}^{{{power}}}",
)


def _lefschetz_power(power: int, dialect: _Dialect) -> str:
    if power == 1:
        return dialect.lefschetz
    return dialect.power.format(base=dialect.lefschetz, power=power)


def _term_body(mag: int, k: int, power: int | None, dialect: _Dialect) -> str:
    factors = []
    if k >= 2:
        if mag != 1:
            factors.append(str(mag))
        factors.append(dialect.field.format(k=k))
    elif mag != 1 or power is None or power == 0:
        factors.append(str(mag))
    if power is not None and power >= 1:
        factors.append(_lefschetz_power(power, dialect))
    return dialect.times.join(factors)


def _join(pieces: list[tuple[int, str]]) -> str:
    out = []
    for sign, body in pieces:
        if not out:
            out.append(body if sign > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if sign > 0 else f"- {body}")
    return " ".join(out)


def _render(tc: TorusClass, dialect: _Dialect) -> str:
    pieces: list[tuple[int, str]] = []
    for i, a in enumerate(tc.coeffs):
        power = tc.n - i
        terms = sorted(a.coeffs.items(), reverse=True)
        if not terms:
            continue
        if power == 0:
            for k, c in terms:
                pieces.append((1 if c > 0 else -1, _term_body(abs(c), k, None, dialect)))
        elif len(terms) == 1:
            k, c = terms[0]
            pieces.append((1 if c > 0 else -1, _term_body(abs(c), k, power, dialect)))
        else:
            inner = _join(
                [(1 if c > 0 else -1, _term_body(abs(c), k, None, dialect)) for k, c in terms]
            )
            body = f"({inner}){dialect.times}{_lefschetz_power(power, dialect)}"
            pieces.append((1, body))
    return _join(pieces) if pieces else "0"


def spec_class(spec: AlgebraSpec) -> CyclicBurnside:
    """The zero-dimensional class of Spec L itself: one orbit per factor."""
    total = CyclicBurnside.ZERO
    for k in spec.parts:
        total = total + CyclicBurnside.orbit(k)
    return total


def class_via_lambda(spec: AlgebraSpec) -> TorusClass:
    """Alternating-power route: a_i = (-1)^i lambda^i([Spec L])."""
    n = spec.n
    lams = spec_class(spec).lambda_series(n)
    coeffs = [lam if i % 2 == 0 else -lam for i, lam in enumerate(lams)]
    return TorusClass(n, coeffs)


def class_via_universal(spec: AlgebraSpec) -> TorusClass:
    """Universal-coefficient route: restrict the degree-n universal
    coefficients along the Frobenius cycle type."""
    n = spec.n
    coeffs = [CyclicBurnside.ONE]
    for i in range(1, n + 1):
        coeffs.append(restrict_to_cyclic(torus_coefficient(n, i), spec.parts))
    return TorusClass(n, coeffs)


def norm_one_class(spec: AlgebraSpec) -> TorusClass:
    """Class of the norm-one subtorus: degree n - 1, with coefficients
    (-1)^i lambda^i([Spec L] - 1).  Multiplying by L - 1 recovers the
    full unit torus."""
    n = spec.n
    if n < 1:
        raise ValueError("norm-one subtorus needs n >= 1")
    virtual = spec_class(spec) - CyclicBurnside.ONE
    lams = virtual.lambda_series(n - 1)
    coeffs = [lam if i % 2 == 0 else -lam for i, lam in enumerate(lams)]
    return TorusClass(n - 1, coeffs)


def point_count_oracle(spec: AlgebraSpec, q: int, e: int) -> int:
    """Unit count of L tensored up to the degree-e extension, from the
    splitting of each degree-n_j factor into gcd(n_j, e) factors of
    degree lcm(n_j, e)."""
    if q < 2:
        raise ValueError("q must be at least 2")
    if e < 1:
        raise ValueError("e must be positive")
    count = 1
    for nj in spec.parts:
        count *= (q ** math.lcm(nj, e) - 1) ** math.gcd(nj, e)
    return count


def char_poly_oracle(spec: AlgebraSpec) -> tuple[int, ...]:
    """Product of X^(n_j) - 1 over the factors, by ascending power."""
    poly = [1]
    for nj in spec.parts:
        out = [0] * (len(poly) + nj)
        for i, c in enumerate(poly):
            out[i + nj] += c
            out[i] -= c
        poly = out
    return tuple(poly)


class FiberedAlgebra:
    """An equivariant map of single-generator finite sets with fibers of
    uniform size: the combinatorial shadow of a rank-r algebra over a
    separable base."""

    __slots__ = ("total", "base", "proj", "fiber_size")

    def __init__(self, total: FiniteGSet, base: FiniteGSet, proj: Sequence[int]):
        if len(total.generators) != 1 or len(base.generators) != 1:
            raise ValueError("fibered algebra needs single-generator sets")
        proj = tuple(proj)
        if len(proj) != total.size:
            raise ValueError("projection length must match total size")
        if any(not 0 <= t < base.size for t in proj):
            raise ValueError("projection image out of range")
        counts = [0] * base.size
        for t in proj:
            counts[t] += 1
        if base.size == 0:
            fiber_size = 0
        else:
            fiber_size = counts[0]
            if any(c != fiber_size for c in counts):
                raise ValueError("fibers are not of uniform size")
        gt, gb = total.generators[0], base.generators[0]
        if any(gb[proj[x]] != proj[gt[x]] for x in range(total.size)):
            raise ValueError("projection is not equivariant")
        object.__setattr__(self, "total", total)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "proj", proj)
        object.__setattr__(self, "fiber_size", fiber_size)

    def __setattr__(self, name, value):
        raise AttributeError("FiberedAlgebra is immutable")

    def fibers(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.base.size)]
        for x, t in enumerate(self.proj):
            out[t].append(x)
        return out

    def components(self) -> list[tuple[int, Partition]]:
        """Isomorphism data per base orbit: the orbit size b and the cycle
        type of the return map (the b-th power of the generator) on the
        fiber over the orbit's least element.  This is a complete
        isomorphism invariant of the fibered piece over that orbit."""
        gt = self.total.generators[0]
        gb = self.base.generators[0]
        fibers = self.fibers()
        seen = [False] * self.base.size
        out = []
        for start in range(self.base.size):
            if seen[start]:
                continue
            b = 0
            t = start
            while not seen[t]:
                seen[t] = True
                t = gb[t]
                b += 1
            fiber = fibers[start]
            position = {x: j for j, x in enumerate(fiber)}
            perm = []
            for x in fiber:
                y = x
                for _ in range(b):
                    y = gt[y]
                perm.append(position[y])
            out.append((b, cycle_type(perm)))
        return out

    def __repr__(self) -> str:
        return (
            f"FiberedAlgebra(total={self.total.size}, base={self.base.size}, "
            f"fiber_size={self.fiber_size})"
        )


def stratum(fa: FiberedAlgebra, i: int) -> FiberedAlgebra:
    """The rank-(r - i) fibered algebra over the locus where the vanishing
    set has size i: base elements are pairs (base point, i-subset of its
    fiber), total elements add a marked fiber point outside the subset."""
    r = fa.fiber_size
    if not 1 <= i <= r:
        raise ValueError(f"stratum index {i} out of range 1..{r}")
    gt = fa.total.generators[0]
    gb = fa.base.generators[0]
    fibers = fa.fibers()
    base_elems: list[tuple[int, tuple[int, ...]]] = []
    for t in range(fa.base.size):
        for subset in combinations(fibers[t], i):
            base_elems.append((t, subset))
    base_index = {e: j for j, e in enumerate(base_elems)}
    base_perm = [
        base_index[(gb[t], tuple(sorted(gt[x] for x in subset)))]
        for t, subset in base_elems
    ]
    total_elems: list[tuple[int, tuple[int, ...], int]] = []
    proj: list[int] = []
    for j, (t, subset) in enumerate(base_elems):
        inside = set(subset)
        for s in fibers[t]:
            if s not in inside:
                total_elems.append((t, subset, s))
                proj.append(j)
    total_index = {e: j for j, e in enumerate(total_elems)}
    total_perm = [
        total_index[(gb[t], tuple(sorted(gt[x] for x in subset)), gt[s])]
        for t, subset, s in total_elems
    ]
    return FiberedAlgebra(
        FiniteGSet(len(total_elems), (tuple(total_perm),), tuple(total_elems)),
        FiniteGSet(len(base_elems), (tuple(base_perm),), tuple(base_elems)),
        proj,
    )


def _transitive_model(b: int, tau: Partition) -> FiberedAlgebra:
    """The fibered algebra over a single b-orbit whose return map has
    cycle type tau, realized concretely."""
    r = sum(tau)
    fiber_perm = perm_of_cycle_type(tau) if r else ()
    total_perm = []
    for j in range(b):
        for x in range(r):
            if j + 1 < b:
                total_perm.append((j + 1) * r + x)
            else:
                total_perm.append(fiber_perm[x])
    total = FiniteGSet(b * r, (tuple(total_perm),), tuple((j, x) for j in range(b) for x in range(r)))
    base = from_cycle_lengths((b,))
    proj = tuple(j for j in range(b) for _ in range(r))
    return FiberedAlgebra(total, base, proj)


@cache
def _units_of_type(b: int, tau: Partition) -> tuple[CyclicBurnside, ...]:
    """Class of the unit scheme of a fibered algebra of isomorphism type
    (b, tau), as Lefschetz-polynomial coefficients by ascending power.

    Affine r-space over the base splits into the units, the strata with
    vanishing set of size 1..r-1, and the zero section:

        [units] = [T] L^r - sum_i [units(stratum_i)] - [T].

    Rank 0 is the zero algebra, whose unit scheme is the base itself.
    """
    r = sum(tau)
    base_class = CyclicBurnside.orbit(b)
    if r == 0:
        return (base_class,)
    poly = [CyclicBurnside.ZERO] * (r + 1)
    poly[r] = base_class
    poly[0] = -base_class
    if r >= 2:
        model = _transitive_model(b, tau)
        for i in range(1, r):
            for j, c in enumerate(units_class(stratum(model, i))):
                poly[j] = poly[j] - c
    return tuple(poly)


def units_class(fa: FiberedAlgebra) -> list[CyclicBurnside]:
    """Unit-scheme class of a fibered algebra, by ascending Lefschetz
    power; splits over base orbits and is memoized on their isomorphism
    types."""
    poly = [CyclicBurnside.ZERO] * (fa.fiber_size + 1)
    for b, tau in fa.components():
        for j, c in enumerate(_units_of_type(b, tau)):
            poly[j] = poly[j] + c
    return poly


def _initial_algebra(spec: AlgebraSpec) -> FiberedAlgebra:
    total = from_cycle_lengths(spec.parts)
    base = FiniteGSet(1, ((0,),))
    return FiberedAlgebra(total, base, (0,) * spec.n)


def class_via_recursion(spec: AlgebraSpec) -> TorusClass:
    """Stratification route: peel affine n-space over the point down to
    the units, recursing into each stratum."""
    n = spec.n
    poly = units_class(_initial_algebra(spec))
    return TorusClass(n, tuple(poly[n - i] for i in range(n + 1)))


def recursion_stratum_base(spec: AlgebraSpec, alpha: Composition) -> CyclicBurnside:
    """Zero-dimensional class of the stratum base reached from the initial
    algebra by peeling vanishing sets of sizes alpha, in order.  Used to
    cross-check the recursion's intermediate bases against the restricted
    tuple-set classes."""
    fa = _initial_algebra(spec)
    for i in alpha:
        fa = stratum(fa, i)
    from .gsets import cyclic_decomposition

    return cyclic_decomposition(fa.base)
