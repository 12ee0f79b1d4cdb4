"""Coefficient-dominance certificates for the upper bound on B and for
positivity of the extremal scalar curvature.

A certificate asserts ``target = residual + sum(m_i * w_i)`` where the
residual has no negative coefficient and each w_i is a whitelisted form that
is nonnegative on the whole parameter space.  On the closed positive orthant
the target is then >= residual, hence > 0 once the residual has a positive
constant term.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConeViolation, NotVerified
from .exact import MPoly, RatFn
from .invariants import calB, calB_symbolic, specialize, vertex_values_symbolic
from .polytope import DP2, DP3, KahlerParams, SurfaceKind, curve_areas

WHITELIST = ("sextic", "monomial", "square")


@dataclass(frozen=True)
class WitnessForm:
    """A manifestly nonnegative polynomial scaled by a nonnegative multiplier.

    * ``sextic``: t^2 (1 - t^2 + t^4) in one variable t; nonnegative because
      1 - t^2 + t^4 = (t^2 - 1/2)^2 + 3/4.
    * ``monomial``: a product of variables (nonnegative on the orthant).
    * ``square``: p^2 for a polynomial p.
    """

    shape: str
    data: object
    multiplier: Fraction = Fraction(1)

    def polynomial(self) -> MPoly:
        if self.shape == "sextic":
            t = MPoly.var(self.data)
            return self.multiplier * t * t * (1 - t * t + t ** 4)
        if self.shape == "monomial":
            return MPoly.monomial(self.data, self.multiplier)
        if self.shape == "square":
            p = self.data if isinstance(self.data, MPoly) else MPoly.parse(self.data)
            return self.multiplier * p * p
        raise ValueError(f"form shape {self.shape!r} is not on the whitelist")

    def is_whitelisted(self) -> bool:
        if self.shape not in WHITELIST or self.multiplier < 0:
            return False
        if self.shape == "sextic":
            t = MPoly.var(self.data)
            # the reduction to a sum of squares the whitelist relies on
            return 1 - t * t + t ** 4 == (t * t - Fraction(1, 2)) ** 2 + Fraction(3, 4)
        return True

    def to_record(self) -> dict:
        data = self.data
        if isinstance(data, MPoly):
            data = str(data)
        elif isinstance(data, tuple):
            data = list(data)
        return {"shape": self.shape, "data": data, "multiplier": str(self.multiplier)}

    @classmethod
    def from_record(cls, rec: dict) -> "WitnessForm":
        data = rec["data"]
        if rec["shape"] == "monomial":
            data = tuple(data)
        return cls(rec["shape"], data, Fraction(rec["multiplier"]))


@dataclass
class Certificate:
    statement: str
    target: MPoly
    residual: MPoly
    witness_forms: list[WitnessForm]
    verified: bool
    details: dict = field(default_factory=dict)

    def recheck(self) -> bool:
        """Re-derive ``verified`` from the stored data alone."""
        total = self.residual
        for w in self.witness_forms:
            total = total + w.polynomial()
        return (
            total == self.target
            and self.residual.min_coefficient() >= 0
            and self.residual.constant_term() > 0
            and all(w.is_whitelisted() for w in self.witness_forms)
        )

    def require(self) -> "Certificate":
        if not self.verified:
            raise NotVerified(f"{self.statement}: certificate failed", self.details)
        return self

    def to_record(self) -> dict:
        return {
            "statement": self.statement,
            "verified": self.verified,
            "target": self.target.to_record(),
            "residual": self.residual.to_record(),
            "witness_forms": [w.to_record() for w in self.witness_forms],
        }

    @classmethod
    def from_record(cls, rec: dict) -> "Certificate":
        cert = cls(
            rec["statement"],
            MPoly.from_record(rec["target"]),
            MPoly.from_record(rec["residual"]),
            [WitnessForm.from_record(w) for w in rec["witness_forms"]],
            False,
        )
        cert.verified = cert.recheck()
        return cert

    def to_json(self) -> str:
        return json.dumps(self.to_record(), indent=1)


def dominance_certificate(statement: str, target: MPoly, forms: list[WitnessForm]) -> Certificate:
    residual = target
    for w in forms:
        residual = residual - w.polynomial()
    negatives = residual.negative_terms()
    bad_forms = [w for w in forms if not w.is_whitelisted()]
    ok = not negatives and not bad_forms and residual.constant_term() > 0
    details = {}
    if negatives:
        details["negative_terms"] = {str(e): str(c) for e, c in sorted(negatives.items())}
    if bad_forms:
        details["bad_forms"] = [w.to_record() for w in bad_forms]
    if residual.constant_term() <= 0:
        details["constant_term"] = str(residual.constant_term())
    return Certificate(statement, target, residual, forms, ok, details)


def _orthant_vars(kind) -> tuple[str, ...]:
    return ("beta", "gamma") if SurfaceKind.parse(kind) is DP2 else ("alpha", "beta", "gamma")


def comparison_forms(kind, multiplier=4) -> list[WitnessForm]:
    """Q = 4 * sum v^2 (1 - v^2 + v^4) over the parameters of the orthant."""
    m = Fraction(multiplier)
    return [WitnessForm("sextic", v, m) for v in _orthant_vars(kind)]


def calB_parts(kind) -> tuple[MPoly, MPoly]:
    """(N, D) with calB = N/D at delta = 1 and D(0) = 1."""
    f = specialize(calB_symbolic(kind))
    return f.num, f.den


def verify_B_bound(kind, bound_multiplier=4, forms: list[WitnessForm] | None = None) -> Certificate:
    """Certify calB < 1/bound_multiplier on the cone via D - k*N - Q >= 0 termwise.

    For DP3 the statement at delta = 1 covers delta > 0 by homogeneity, the
    Cremona involution covers delta < 0, and divisibility of the numerator by
    delta^2 gives calB = 0 on the hyperplane delta = 0; that last fact is
    checked here too.
    """
    kind = SurfaceKind.parse(kind)
    N, D = calB_parts(kind)
    forms = comparison_forms(kind) if forms is None else forms
    k = Fraction(bound_multiplier)
    name = "up1" if kind is DP2 else "up2"
    cert = dominance_certificate(f"{name}: calB < 1/{k} ({kind.value})", D - k * N, forms)
    cert.details["denominator_nonnegative"] = D.min_coefficient() >= 0 and D.constant_term() > 0
    if not cert.details["denominator_nonnegative"]:
        cert.verified = False
    if kind is DP3:
        num = calB_symbolic(kind).num
        divisible = num.divides_monomial((0, 0, 0, 2))
        cert.details["delta_squared_divides_numerator"] = divisible
        cert.verified = cert.verified and divisible
    return cert


@dataclass
class PositivityReport:
    statement: str
    verified: bool
    vertices: list[dict]

    def require(self) -> "PositivityReport":
        if not self.verified:
            bad = [v for v in self.vertices if not v["ok"]]
            raise NotVerified(f"{self.statement}: failing vertices", {"vertices": bad})
        return self

    def to_record(self) -> dict:
        return {"statement": self.statement, "verified": self.verified, "vertices": self.vertices}


def _sign_report(p: MPoly) -> dict:
    neg = p.negative_terms()
    return {
        "min_coefficient": str(p.min_coefficient()),
        "nonzero": not p.is_zero(),
        "negative_terms": {str(e): str(c) for e, c in sorted(neg.items())},
    }


def verify_scalar_positivity(kind, negate: bool = False,
                             values: list[RatFn] | None = None) -> PositivityReport:
    """Every vertex value of the potential is N/D with N, D termwise >= 0 at delta = 1.

    The homogeneous forms are also checked at delta = 0: both stay nonzero with
    nonnegative coefficients, so the extension across that hyperplane is
    continuous and positive.
    """
    kind = SurfaceKind.parse(kind)
    values = list(vertex_values_symbolic(kind)) if values is None else values
    rows = []
    all_ok = True
    for i, v in enumerate(values):
        num, den = (-v.num if negate else v.num), v.den
        n1, d1 = num.subs({"delta": 1}), den.subs({"delta": 1})
        n0, d0 = num.subs({"delta": 0}), den.subs({"delta": 0})
        ok1 = n1.min_coefficient() >= 0 and d1.min_coefficient() >= 0 and n1 and d1
        ok0 = n0.min_coefficient() >= 0 and d0.min_coefficient() >= 0 and n0 and d0
        rows.append({
            "vertex": i,
            "degrees": [num.degree(), den.degree()],
            "homogeneous": num.is_homogeneous() and den.is_homogeneous(),
            "delta1_numerator": _sign_report(n1),
            "delta1_denominator": _sign_report(d1),
            "delta0_numerator": _sign_report(n0),
            "delta0_denominator": _sign_report(d0),
            "ok": bool(ok1 and ok0),
        })
        all_ok = all_ok and bool(ok1 and ok0)
    name = "pos2" if kind is DP2 else "pos3"
    return PositivityReport(f"{name}: vertex values positive ({kind.value})", all_ok, rows)


def homogenization_check(kind) -> dict:
    """Re-homogenize the delta = 1 vertex values to degrees (9, 10) and compare.

    Passes when the round trip reproduces the symbolic forms and the top-degree
    parts (the delta = 0 restriction) are nonzero.
    """
    out = {"ok": True, "vertices": []}
    for v in vertex_values_symbolic(kind):
        n1 = v.num.subs({"delta": 1})
        d1 = v.den.subs({"delta": 1})
        nh, dh = n1.homogenize("delta", 9), d1.homogenize("delta", 10)
        same = nh == v.num and dh == v.den
        top = (not nh.subs({"delta": 0}).is_zero()) and (not dh.subs({"delta": 0}).is_zero())
        degrees = (n1.degree(), d1.degree())
        ok = same and top and degrees == (9, 10)
        out["vertices"].append({"degrees": list(degrees), "round_trip": same, "top_terms": top, "ok": ok})
        out["ok"] = out["ok"] and ok
    return out


# --------------------------------------------------------------------------
# sampling and numeric spot checks
# --------------------------------------------------------------------------

def _rand_pos(rng: random.Random, max_num=400, max_den=97) -> Fraction:
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def random_params(kind, rng: random.Random, delta: str = "any") -> KahlerParams:
    """Random rational point of the open Kahler cone.

    ``delta`` is ``"any"`` (DP3 may go negative), ``"one"`` or ``"zero"``
    (DP3 only).
    """
    kind = SurfaceKind.parse(kind)
    if kind is DP2:
        d = Fraction(1) if delta == "one" else _rand_pos(rng)
        if delta == "zero":
            raise ConeViolation("delta = 0 is the boundary of the DP2 cone")
        return KahlerParams.dp2(_rand_pos(rng), _rand_pos(rng), d)
    a, b, g = _rand_pos(rng), _rand_pos(rng), _rand_pos(rng)
    if delta == "one":
        d = Fraction(1)
    elif delta == "zero":
        d = Fraction(0)
    else:
        low = -min(a, b, g)
        d = low + (_rand_pos(rng) + 1) * rng.randint(1, 99) / 100
        if d == low:
            d += Fraction(1, 7)
    params = KahlerParams(a, b, g, d)
    assert all(x > 0 for x in curve_areas(kind, params.as_tuple()))
    return params


@dataclass
class SpotcheckReport:
    kind: str
    n_samples: int
    seed: int
    max_calB: Fraction
    argmax: KahlerParams
    all_pass: bool


def numeric_spotcheck_B(kind, n_samples: int, seed: int, delta: str = "any") -> SpotcheckReport:
    """Exact calB at random cone points; asserts 0 <= calB < 1/4 at each."""
    if n_samples < 1:
        raise ValueError("n_samples must be positive")
    kind = SurfaceKind.parse(kind)
    rng = random.Random(seed)
    best, where = Fraction(-1), None
    for _ in range(n_samples):
        p = random_params(kind, rng, delta)
        val = calB(kind, p)
        if not (0 <= val < Fraction(1, 4)):
            raise AssertionError(f"calB = {val} outside [0, 1/4) at {p}")
        if delta == "zero" and val != 0:
            raise AssertionError(f"calB = {val} != 0 on delta = 0 at {p}")
        if val > best:
            best, where = val, p
    return SpotcheckReport(kind.value, n_samples, seed, best, where, True)


__all__ = [
    "Certificate", "PositivityReport", "SpotcheckReport", "WitnessForm", "calB_parts",
    "comparison_forms", "dominance_certificate", "homogenization_check",
    "numeric_spotcheck_B", "random_params", "verify_B_bound", "verify_scalar_positivity",
]
