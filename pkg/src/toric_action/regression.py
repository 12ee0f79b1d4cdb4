"""Golden fixtures of the published closed forms and the regression check
against the polygon pipeline.

Each fixture is a JSON file holding a rational function at delta = 1 in the
bit-exact polynomial record format, plus its power of pi.  Derived values are
compared by cross-multiplication; when that fails the report names the
monomials that differ.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable

from .errors import ToricError
from .exact import MPoly, RatFn, ratfn_eq
from .invariants import (
    calB_symbolic,
    corner_lower_bound_symbolic,
    invariant_set_symbolic,
    specialize,
    vertex_values_symbolic,
)
from .polytope import DP2, DP3
from .published import PRINTED


class ConfigurationError(ToricError):
    """A mandatory fixture is missing or unreadable."""


def _p(key: str) -> MPoly:
    return MPoly.parse(PRINTED[key])


def _up_diff(kind) -> RatFn:
    f = specialize(calB_symbolic(kind))
    return RatFn(f.den - 4 * f.num)


@dataclass(frozen=True)
class FixtureSpec:
    name: str
    surface: str
    quantity: str
    printed: Callable[[], tuple[MPoly, MPoly]]
    derived: Callable[[], RatFn]
    pi_power: int
    mandatory: bool
    note: str = ""


def _inv(kind, attr):
    def f():
        v = getattr(invariant_set_symbolic(kind), attr)
        return specialize(v.coeff if hasattr(v, "coeff") else v)
    return f


def _specs() -> list[FixtureSpec]:
    one = MPoly.const(1)
    s = []
    for kind, tag in ((DP2, "dp2"), (DP3, "dp3")):
        V = lambda tag=tag: _p(f"{tag}_V")  # noqa: E731
        s += [
            FixtureSpec(f"{tag}_V", tag, "V", lambda V=V: (V(), one), _inv(kind, "V"), 0, True),
            FixtureSpec(f"{tag}_F1", tag, "F1", lambda tag=tag, V=V: (_p(f"{tag}_F1_bracket"), V()),
                        _inv(kind, "F1"), 0, True),
            FixtureSpec(f"{tag}_F2", tag, "F2", lambda tag=tag, V=V: (_p(f"{tag}_F2_bracket"), V()),
                        _inv(kind, "F2"), 0, True),
            FixtureSpec(f"{tag}_A", tag, "A", lambda tag=tag, V=V: (_p(f"{tag}_A_num"), 288 * V()),
                        _inv(kind, "A"), -2, True),
            FixtureSpec(f"{tag}_B", tag, "B", lambda tag=tag, V=V: (_p(f"{tag}_B_num"), 288 * V()),
                        _inv(kind, "B"), -2, True),
            FixtureSpec(f"{tag}_C", tag, "C", lambda tag=tag, V=V: (-_p(f"{tag}_C_num"), 576 * V()),
                        _inv(kind, "C"), -2, True),
        ]
    s += [
        FixtureSpec("dp2_calB", "dp2", "calB", lambda: (_p("dp2_calB_num"), _p("dp2_calB_den")),
                    lambda: specialize(calB_symbolic(DP2)), 0, True),
        FixtureSpec("dp2_a", "dp2", "a", lambda: (_p("dp2_a_num"), _p("dp2_a_den")),
                    _inv(DP2, "a"), 2, True),
        FixtureSpec("dp2_smin", "dp2", "smin", lambda: (_p("dp2_smin_num"), _p("dp2_smin_den")),
                    lambda: specialize(corner_lower_bound_symbolic()), 1, True,
                    "potential at the bounding-box corner (beta+1, gamma+1)"),
        FixtureSpec("dp2_up1_diff", "dp2", "D-4N", lambda: (_p("dp2_up1_diff"), one),
                    lambda: _up_diff(DP2), 0, False),
        FixtureSpec("dp3_calB", "dp3", "calB", lambda: (8 * _p("dp3_calB_num"), _p("dp3_calB_den")),
                    lambda: specialize(calB_symbolic(DP3)), 0, False,
                    "printed display repaired: missing overall factor 8, a missing '+', one missing ')'"),
        FixtureSpec("dp3_up2_diff", "dp3", "D-4N", lambda: (_p("dp3_up2_diff"), one),
                    lambda: _up_diff(DP3), 0, False),
        FixtureSpec("dp3_pos3", "dp3", "s_vertex", lambda: (_p("dp3_pos3_num"), _p("dp3_pos3_den")),
                    lambda: specialize(vertex_values_symbolic(DP3)[0]), 1, False,
                    "potential at the vertex (alpha, 0)"),
    ]
    return s


SPECS = {s.name: s for s in _specs()}
MANDATORY = tuple(name for name, s in SPECS.items() if s.mandatory)


def default_fixture_dir() -> Path:
    return Path(str(resources.files("toric_action") / "fixtures"))


def fixture_record(spec: FixtureSpec) -> dict:
    num, den = spec.printed()
    return {
        "name": spec.name,
        "surface": spec.surface,
        "quantity": spec.quantity,
        "delta": "1",
        "pi_power": spec.pi_power,
        "mandatory": spec.mandatory,
        "note": spec.note,
        "numerator": num.to_record(spec.pi_power),
        "denominator": den.to_record(0),
    }


def write_fixtures(directory) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for spec in SPECS.values():
        path = directory / f"{spec.name}.json"
        path.write_text(json.dumps(fixture_record(spec), indent=1) + "\n")
        out.append(path)
    return out


def load_fixture(path) -> tuple[dict, RatFn]:
    rec = json.loads(Path(path).read_text())
    return rec, RatFn(MPoly.from_record(rec["numerator"]), MPoly.from_record(rec["denominator"]))


def _mono_name(e) -> str:
    return str(MPoly.monomial(e)) if any(e) else "1"


def explain_difference(derived: RatFn, stored: RatFn) -> dict:
    """Name the monomials where the stored fixture departs from the derived value."""
    for side, (target, other_num, other_den, mine) in {
        "numerator": (stored.num, derived.num, derived.den, stored.den),
        "denominator": (stored.den, derived.den, derived.num, stored.num),
    }.items():
        try:
            expected = (other_num * mine).exact_div(other_den)
        except (ValueError, ZeroDivisionError):
            continue
        diff = target - expected
        if not diff.is_zero():
            return {
                "side": side,
                "monomials": {
                    _mono_name(e): {"stored": str(target.coefficient(e)), "expected": str(expected.coefficient(e))}
                    for e, _ in diff.sorted_terms()[:10]
                },
            }
    return {"side": "unknown", "monomials": {}}


@dataclass
class FixtureResult:
    name: str
    passed: bool
    detail: dict


def check_fixture(path) -> FixtureResult:
    rec, stored = load_fixture(path)
    spec = SPECS.get(rec["name"])
    if spec is None:
        return FixtureResult(rec["name"], False, {"error": "no derived counterpart"})
    if rec["pi_power"] != spec.pi_power:
        return FixtureResult(spec.name, False, {"error": f"pi power {rec['pi_power']} != {spec.pi_power}"})
    derived = spec.derived()
    if ratfn_eq(derived, stored):
        return FixtureResult(spec.name, True, {})
    return FixtureResult(spec.name, False, explain_difference(derived, stored))


def fixture_regression(fixture_dir=None) -> list[FixtureResult]:
    """Check every fixture in ``fixture_dir``; mandatory ones must be present."""
    fixture_dir = Path(fixture_dir) if fixture_dir is not None else default_fixture_dir()
    if not fixture_dir.is_dir():
        raise ConfigurationError(f"fixture directory {fixture_dir} does not exist")
    files = sorted(fixture_dir.glob("*.json"))
    present = {f.stem for f in files}
    missing = [m for m in MANDATORY if m not in present]
    if missing:
        raise ConfigurationError(f"missing mandatory fixtures: {', '.join(missing)}")
    results = []
    for f in files:
        try:
            results.append(check_fixture(f))
        except (KeyError, ValueError, json.JSONDecodeError) as exc:
            results.append(FixtureResult(f.stem, False, {"error": f"unreadable fixture: {exc}"}))
    return results


def derived_quantity(surface: str, what: str) -> tuple[RatFn, int]:
    """Derived value at delta = 1 for the ``derive`` command."""
    kind = DP2 if surface == "dp2" else DP3
    if what == "calB":
        return specialize(calB_symbolic(kind)), 0
    inv = invariant_set_symbolic(kind)
    v = getattr(inv, what)
    if hasattr(v, "pi_power"):
        return specialize(v.coeff), v.pi_power
    return specialize(v), 0


__all__ = [
    "ConfigurationError", "FixtureResult", "MANDATORY", "SPECS", "check_fixture",
    "default_fixture_dir", "derived_quantity", "explain_difference", "fixture_record",
    "fixture_regression", "load_fixture", "write_fixtures",
]
