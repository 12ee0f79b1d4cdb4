"""The intersection lattice of CP^2 # k(-CP^2) for k = 2, 3.

A class is stored as ``(ell; e_1, ..., e_k)`` where ``ell`` pairs with the
line and ``e_i = class . E_i``.  With the form diag(1, -1, ..., -1) this means
the class is ``ell*L - sum e_i*E_i``; c1 is ``(3; 1, ..., 1)``.

Homology classes written ``(n; a, b, c)`` in output mean ``n*L + a*E_1 + ...``,
so E_1 prints as ``(0; 1, 0, 0)`` and L - E_1 - E_2 as ``(1; -1, -1, 0)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .errors import NonPositiveSquare, Unsupported
from .exact import as_rat
from .polytope import DP2, DP3, KahlerParams, SurfaceKind


@dataclass(frozen=True)
class CohClass:
    ell: Fraction
    e: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "ell", as_rat(self.ell))
        object.__setattr__(self, "e", tuple(as_rat(x) for x in self.e))
        if len(self.e) not in (2, 3):
            raise ValueError("only two or three blow-ups are supported")

    @property
    def k(self) -> int:
        return len(self.e)

    @property
    def kind(self) -> SurfaceKind:
        return DP2 if self.k == 2 else DP3

    @classmethod
    def from_coefficients(cls, n, *coeffs) -> "CohClass":
        """Class n*L + sum a_i*E_i."""
        return cls(n, tuple(-as_rat(a) for a in coeffs))

    def coefficients(self) -> tuple:
        """(n, a_1, ..., a_k) with class = n*L + sum a_i*E_i."""
        return (self.ell,) + tuple(-x for x in self.e)

    def __add__(self, other: "CohClass") -> "CohClass":
        _same_k(self, other)
        return CohClass(self.ell + other.ell, tuple(a + b for a, b in zip(self.e, other.e)))

    def __sub__(self, other: "CohClass") -> "CohClass":
        return self + (-other)

    def __neg__(self) -> "CohClass":
        return CohClass(-self.ell, tuple(-a for a in self.e))

    def __mul__(self, c) -> "CohClass":
        c = as_rat(c)
        return CohClass(c * self.ell, tuple(c * a for a in self.e))

    __rmul__ = __mul__

    def square(self) -> Fraction:
        return intersect(self, self)

    def __str__(self):
        n, *rest = self.coefficients()
        return f"({_fmt(n)}; {','.join(_fmt(a) for a in rest)})"


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else str(x)


def _same_k(x: CohClass, y: CohClass):
    if x.k != y.k:
        raise ValueError(f"classes live on different surfaces (k={x.k} vs k={y.k})")


def intersect(x: CohClass, y: CohClass) -> Fraction:
    _same_k(x, y)
    return x.ell * y.ell - sum((a * b for a, b in zip(x.e, y.e)), Fraction(0))


def c1(kind) -> CohClass:
    kind = SurfaceKind.parse(kind)
    return CohClass(3, (1,) * kind.n_blowups)


def line(kind) -> CohClass:
    return CohClass(1, (0,) * SurfaceKind.parse(kind).n_blowups)


def exceptional(kind, i: int) -> CohClass:
    """E_i for i = 1..k."""
    k = SurfaceKind.parse(kind).n_blowups
    return CohClass.from_coefficients(0, *[1 if j == i - 1 else 0 for j in range(k)])


def minus_one_curves(kind) -> list[CohClass]:
    """The (-1)-curves bounding the Kahler cone: E_i and L - E_i - E_j."""
    kind = SurfaceKind.parse(kind)
    k = kind.n_blowups
    out = [exceptional(kind, i) for i in range(1, k + 1)]
    for i, j in combinations(range(1, k + 1), 2):
        out.append(line(kind) - exceptional(kind, i) - exceptional(kind, j))
    return out


def params_from_class(cls: CohClass) -> KahlerParams:
    if cls.k == 3:
        a, b, g = cls.e
        return KahlerParams(a, b, g, cls.ell - a - b - g)
    b, g = cls.e
    return KahlerParams(Fraction(0), b, g, cls.ell - b - g)


def class_from_params(kind, params: KahlerParams) -> CohClass:
    kind = SurfaceKind.parse(kind)
    a, b, g, d = params.as_tuple()
    if kind is DP2:
        if a != 0:
            raise ValueError("DP2 parameters must have alpha = 0")
        return CohClass(b + g + d, (b, g))
    return CohClass(a + b + g + d, (a, b, g))


def is_kahler(cls: CohClass) -> bool:
    return all(intersect(cls, E) > 0 for E in minus_one_curves(cls.kind))


def cremona(cls: CohClass) -> CohClass:
    """Quadratic transformation L -> 2L - sum E, E_i -> L - E_j - E_k."""
    if cls.k != 3:
        raise ValueError("the Cremona involution is defined here for three blow-ups")
    s = sum(cls.e)
    return CohClass(2 * cls.ell - s, tuple(cls.ell - (s - x) for x in cls.e))


def calT(cls: CohClass) -> Fraction:
    """Topological term (c1 . Omega)^2 / Omega^2."""
    sq = cls.square()
    c1w = intersect(c1(cls.kind), cls)
    if sq <= 0 or c1w <= 0:
        raise NonPositiveSquare(f"class {cls} has Omega^2 = {sq}, c1.Omega = {c1w}")
    return c1w * c1w / sq


def enumerate_negative_classes(kind, k_self: int) -> list[CohClass]:
    """All integral A with A.A = -k_self and c1.A = 2 - k_self, sorted by coefficients."""
    kind = SurfaceKind.parse(kind)
    if k_self < 1:
        raise ValueError("k_self must be at least 1")
    m = kind.n_blowups
    target_sum = lambda n: 2 - k_self - 3 * n  # noqa: E731
    # Cauchy-Schwarz: (sum a_i)^2 <= m * sum a_i^2, i.e. (2-k-3n)^2 <= m(n^2+k)
    qa, qb, qc = 9 - m, -6 * (2 - k_self), (2 - k_self) ** 2 - m * k_self
    disc = qb * qb - 4 * qa * qc
    if disc < 0:
        return []
    r = math.isqrt(disc) + 1
    lo, hi = (-qb - r) // (2 * qa) - 1, (-qb + r) // (2 * qa) + 1
    found = []
    for n in range(lo, hi + 1):
        s = target_sum(n)
        sq = n * n + k_self
        if s * s > m * sq:
            continue
        bound = math.isqrt(sq)
        for coeffs in product(range(-bound, bound + 1), repeat=m):
            if sum(coeffs) == s and sum(c * c for c in coeffs) == sq:
                found.append((n,) + coeffs)
    found.sort()
    return [CohClass.from_coefficients(*c) for c in found]


def disk_radius(t) -> Fraction:
    """Squared radius bound 7(t-7)/t of the region T <= t on DP2, for 7 < t < 8."""
    t = as_rat(t)
    if not 7 < t < 8:
        raise Unsupported("the disk description holds only for 7 < t < 8")
    return 7 * (t - 7) / t


def normalized_eta(cls: CohClass) -> CohClass:
    """eta = varpi - c1 where varpi = 7*Omega/(c1 . Omega), so c1 . varpi = 7."""
    if cls.k != 2:
        raise ValueError("eta is defined for DP2 classes")
    c1w = intersect(c1(DP2), cls)
    if cls.square() <= 0 or c1w <= 0:
        raise NonPositiveSquare(f"class {cls} is not in the positive cone")
    return cls * (Fraction(7) / c1w) - c1(DP2)


def T_sublevel_test(cls: CohClass, t, method: str = "both") -> bool:
    """Is T(cls) <= t?  ``both`` evaluates directly and via the disk and insists they agree."""
    t = as_rat(t)
    direct = calT(cls) <= t
    if method == "direct":
        return direct
    eta = normalized_eta(cls)
    disk = -eta.square() <= 7 * (t - 7) / t
    if method == "disk":
        return disk
    if disk != direct:
        raise AssertionError(f"disk and direct tests disagree at {cls}, t={t}")
    return direct


def segment(start: CohClass, end: CohClass, t) -> CohClass:
    """(1-t)*start + t*end for t in [0, 1]."""
    t = as_rat(t)
    if not 0 <= t <= 1:
        raise ValueError("t must lie in [0, 1]")
    return start * (1 - t) + end * t


def pullback(omega2: CohClass) -> CohClass:
    """DP2 class as a DP3 class with zero area on the new exceptional curve E_1."""
    if omega2.k != 2:
        raise ValueError("pullback expects a DP2 class")
    return CohClass(omega2.ell, (Fraction(0),) + omega2.e)


def degeneration_path(omega2: CohClass, t) -> CohClass:
    """(1-t)*c1 + t*p^*(omega2) on DP3."""
    if not is_kahler(omega2):
        raise ValueError(f"{omega2} is not a Kahler class on DP2")
    return segment(c1(DP3), pullback(omega2), t)


def parse_class_coordinates(values: Sequence) -> CohClass:
    """``(n, a, b[, c])`` homology coefficients to a class."""
    return CohClass.from_coefficients(*values)
