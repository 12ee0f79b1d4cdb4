"""Exact rational arithmetic: pi-graded scalars, sparse polynomials in
(alpha, beta, gamma, delta) and unreduced rational functions.

Coefficients are :class:`fractions.Fraction`.  Nothing in this module ever
approximates pi; a :class:`PiScalar` only carries its integer power.
"""
from __future__ import annotations

import ast
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import GradeMismatch

Rat = Fraction

VARS = ("alpha", "beta", "gamma", "delta")
_ALIASES = {
    "alpha": 0, "a": 0, "α": 0,
    "beta": 1, "b": 1, "β": 1,
    "gamma": 2, "g": 2, "γ": 2,
    "delta": 3, "d": 3, "δ": 3,
}

Exponent = tuple[int, int, int, int]
Scalar = Union[int, Fraction]


def as_rat(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/7"`` to a Fraction.

    Floats are refused: silently turning 0.1 into a 55-bit fraction hides bugs.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def var_index(name) -> int:
    if isinstance(name, int):
        if 0 <= name < 4:
            return name
        raise ValueError(f"variable index out of range: {name}")
    try:
        return _ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}; expected one of {VARS}") from None


def _grlex_key(exp: Exponent):
    # graded lex with alpha < beta < gamma < delta
    return (sum(exp), exp[3], exp[2], exp[1], exp[0])


# --------------------------------------------------------------------------
# polynomials
# --------------------------------------------------------------------------

class MPoly:
    """Sparse polynomial over Q in the fixed variables (alpha, beta, gamma, delta).

    Immutable.  ``terms`` maps exponent 4-tuples to nonzero Fractions.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | None = None):
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != 4 or min(exp) < 0:
                    raise ValueError(f"bad exponent {exp}")
                c = as_rat(c)
                if c:
                    clean[exp] = clean.get(exp, Fraction(0)) + c
                    if not clean[exp]:
                        del clean[exp]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "MPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # constructors ---------------------------------------------------------
    @classmethod
    def const(cls, c: Scalar) -> "MPoly":
        c = as_rat(c)
        return cls._raw({(0, 0, 0, 0): c} if c else {})

    @classmethod
    def var(cls, name) -> "MPoly":
        e = [0, 0, 0, 0]
        e[var_index(name)] = 1
        return cls._raw({tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, exp: Iterable[int], c: Scalar = 1) -> "MPoly":
        return cls({tuple(exp): c})

    @classmethod
    def parse(cls, text: str) -> "MPoly":
        """Parse an arithmetic expression in the four variables.

        Accepts ``+ - * / **``, parentheses, integer literals and the names
        ``alpha beta gamma delta`` (or ``a b g d``).  Division is only allowed
        by rational constants.
        """
        tree = ast.parse(text.strip(), mode="eval")
        return _eval_ast(tree.body)

    # basic protocol -------------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def coefficient(self, exp: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0, 0, 0, 0))

    def sorted_terms(self):
        """Terms in descending graded-lex order (alpha < beta < gamma < delta)."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, var) -> int:
        i = var_index(var)
        return max((e[i] for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def homogeneous_part(self, d: int) -> "MPoly":
        return MPoly._raw({e: c for e, c in self._terms.items() if sum(e) == d})

    def variables(self) -> set[str]:
        return {VARS[i] for e in self._terms for i in range(4) if e[i]}

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return MPoly()
            return MPoly._raw({e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, MPoly):
            return RatFn(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatFn(MPoly.const(other), self)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # calculus and substitution -------------------------------------------
    def partial(self, var) -> "MPoly":
        i = var_index(var)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return MPoly._raw(out)

    def eval(self, point) -> Fraction:
        """Exact value at a point.

        ``point`` is a 4-sequence or a mapping from variable names; variables
        that do not occur in the polynomial may be omitted or None.
        """
        vals = _point_values(point)
        total = Fraction(0)
        powcache: dict[tuple[int, int], Fraction] = {}
        for e, c in self._terms.items():
            term = c
            for i in range(4):
                if e[i]:
                    v = vals[i]
                    if v is None:
                        raise ValueError(f"no value supplied for {VARS[i]}")
                    key = (i, e[i])
                    if key not in powcache:
                        powcache[key] = v ** e[i]
                    term *= powcache[key]
            total += term
        return total

    def subs(self, values: Mapping) -> "MPoly":
        """Substitute rationals or polynomials for some of the variables."""
        sub: dict[int, object] = {}
        for k, v in values.items():
            i = var_index(k)
            sub[i] = v if isinstance(v, MPoly) else as_rat(v)
        if not sub:
            return self
        poly_sub = {i: v for i, v in sub.items() if isinstance(v, MPoly)}
        out = MPoly()
        scalar_out: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            coeff = c
            keep = list(e)
            for i, v in sub.items():
                if i in poly_sub:
                    continue
                if e[i]:
                    coeff *= v ** e[i]
                keep[i] = 0
            if poly_sub:
                factor = MPoly._raw({tuple(0 if i in poly_sub else keep[i] for i in range(4)): coeff}) if coeff else MPoly()
                for i, p in poly_sub.items():
                    if e[i]:
                        factor = factor * p ** e[i]
                out = out + factor
            elif coeff:
                k = tuple(keep)
                s = scalar_out.get(k, 0) + coeff
                if s:
                    scalar_out[k] = s
                else:
                    scalar_out.pop(k, None)
        if poly_sub:
            return out
        return MPoly._raw(scalar_out)

    def swap(self, v1, v2) -> "MPoly":
        i, j = var_index(v1), var_index(v2)
        out = {}
        for e, c in self._terms.items():
            f = list(e)
            f[i], f[j] = f[j], f[i]
            out[tuple(f)] = c
        return MPoly._raw(out)

    def permute(self, perm: Mapping) -> "MPoly":
        """Rename variables: ``perm`` maps old variable -> new variable."""
        idx = {var_index(k): var_index(v) for k, v in perm.items()}
        out = {}
        for e, c in self._terms.items():
            f = [0, 0, 0, 0]
            for i in range(4):
                f[idx.get(i, i)] += e[i]
            out[tuple(f)] = c
        return MPoly(out)

    def homogenize(self, var="delta", degree: int | None = None) -> "MPoly":
        """Multiply each monomial of degree d by ``var**(degree - d)``."""
        i = var_index(var)
        top = self.degree()
        if degree is None:
            degree = max(top, 0)
        if degree < top:
            raise ValueError(f"target degree {degree} is below the polynomial degree {top}")
        if any(e[i] for e in self._terms):
            raise ValueError(f"polynomial already involves {VARS[i]}")
        out = {}
        for e, c in self._terms.items():
            f = list(e)
            f[i] = degree - sum(e)
            out[tuple(f)] = c
        return MPoly._raw(out)

    def min_coefficient(self) -> Fraction:
        """Smallest stored coefficient (0 for the zero polynomial)."""
        return min(self._terms.values(), default=Fraction(0))

    def negative_terms(self) -> dict[Exponent, Fraction]:
        return {e: c for e, c in self._terms.items() if c < 0}

    def content(self) -> Fraction:
        """Positive rational g with self/g integral and primitive."""
        if not self._terms:
            return Fraction(0)
        nums = math.gcd(*(c.numerator for c in self._terms.values()))
        dens = math.lcm(*(c.denominator for c in self._terms.values()))
        return Fraction(nums, dens)

    def divides_monomial(self, exp: Iterable[int]) -> bool:
        exp = tuple(exp)
        return all(all(e[i] >= exp[i] for i in range(4)) for e in self._terms)

    def exact_div(self, divisor: "MPoly") -> "MPoly":
        """Quotient ``self / divisor``; ValueError unless the division is exact."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        lt_e, lt_c = divisor.leading_term()
        dterms = list(divisor._terms.items())
        rem = dict(self._terms)
        quot: dict[Exponent, Fraction] = {}
        while rem:
            e = max(rem, key=_grlex_key)
            c = rem[e]
            if any(e[i] < lt_e[i] for i in range(4)):
                raise ValueError("polynomial division is not exact")
            qe = (e[0] - lt_e[0], e[1] - lt_e[1], e[2] - lt_e[2], e[3] - lt_e[3])
            qc = c / lt_c
            quot[qe] = qc
            for de, dc in dterms:
                k = (qe[0] + de[0], qe[1] + de[1], qe[2] + de[2], qe[3] + de[3])
                v = rem.get(k, 0) - qc * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return MPoly._raw(quot)

    def strip_factor(self, divisor: "MPoly", times: int = 1) -> "MPoly":
        p = self
        for _ in range(times):
            p = p.exact_div(divisor)
        return p

    # rendering and serialization -----------------------------------------
    def __repr__(self):
        return f"MPoly({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                VARS[i] if e[i] == 1 else f"{VARS[i]}**{e[i]}" for i in range(4) if e[i]
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{_fmt_rat(mag)}*{mono}"
            else:
                body = _fmt_rat(mag)
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_record(self, pi_power: int = 0) -> dict:
        """Fixture record: vars, pi_power and bit-exact decimal coefficient strings."""
        return {
            "vars": list(VARS),
            "pi_power": int(pi_power),
            "terms": [
                {"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_record(cls, rec: Mapping) -> "MPoly":
        names = list(rec.get("vars", VARS))
        if [var_index(n) for n in names] != list(range(len(names))) or len(names) != 4:
            raise ValueError(f"unexpected variable list {names}")
        return cls({tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in rec["terms"]})

    def to_json(self, pi_power: int = 0) -> str:
        return json.dumps(self.to_record(pi_power), indent=1)


def _fmt_rat(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"({c.numerator}/{c.denominator})"


def _point_values(point):
    if isinstance(point, Mapping):
        vals = [None] * 4
        for k, v in point.items():
            vals[var_index(k)] = None if v is None else as_rat(v)
        return vals
    vals = list(point)
    if len(vals) != 4:
        raise ValueError("a point needs four coordinates (alpha, beta, gamma, delta)")
    return [None if v is None else as_rat(v) for v in vals]


def _eval_ast(node):
    if isinstance(node, ast.BinOp):
        left, right = _eval_ast(node.left), _eval_ast(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if isinstance(right, MPoly):
                if right.degree() > 0:
                    raise ValueError("only division by constants is supported")
                right = right.constant_term()
            return left / right
        if isinstance(node.op, ast.Pow):
            if isinstance(right, MPoly):
                right = right.constant_term()
            if Fraction(right).denominator != 1:
                raise ValueError("exponent must be an integer")
            return _as_poly(left) ** int(right)
        raise ValueError(f"unsupported operator {type(node.op).__name__}")
    if isinstance(node, ast.UnaryOp):
        val = _eval_ast(node.operand)
        if isinstance(node.op, ast.USub):
            return -val
        if isinstance(node.op, ast.UAdd):
            return val
        raise ValueError("unsupported unary operator")
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return MPoly.const(node.value)
    if isinstance(node, ast.Name):
        return MPoly.var(node.id)
    raise ValueError(f"unsupported expression element: {ast.dump(node)}")


def _as_poly(x) -> MPoly:
    return x if isinstance(x, MPoly) else MPoly.const(x)


ALPHA, BETA, GAMMA, DELTA = (MPoly.var(v) for v in VARS)


def homogenize(p: MPoly, var="delta", target_degree: int | None = None) -> MPoly:
    return p.homogenize(var, target_degree)


def min_coefficient(p: MPoly) -> Fraction:
    return p.min_coefficient()


def mpoly_arith(op: str, p: MPoly, q) -> MPoly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "pow":
        return p ** q
    raise ValueError(f"unknown operation {op!r}")


# --------------------------------------------------------------------------
# rational functions
# --------------------------------------------------------------------------

class RatFn:
    """Quotient of two MPolys, never reduced by a gcd.

    The denominator is sign-normalized so its graded-lex leading coefficient
    is positive.  Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num, den=None):
        num = _as_poly(num) if not isinstance(num, MPoly) else num
        den = MPoly.const(1) if den is None else (_as_poly(den) if not isinstance(den, MPoly) else den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if den.leading_term()[1] < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    @staticmethod
    def _coerce(x) -> "RatFn":
        if isinstance(x, RatFn):
            return x
        if isinstance(x, MPoly):
            return RatFn(x)
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return RatFn(MPoly.const(x))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFn(self.num + o.num, self.den)
        return RatFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RatFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFn(self.den ** (-n), self.num ** (-n))
        return RatFn(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ratfn_eq(self, o)

    def is_zero(self) -> bool:
        return not self.num

    def eval(self, point) -> Fraction:
        d = self.den.eval(point)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.eval(point) / d

    def subs(self, values: Mapping) -> "RatFn":
        return RatFn(self.num.subs(values), self.den.subs(values))

    def swap(self, v1, v2) -> "RatFn":
        return RatFn(self.num.swap(v1, v2), self.den.swap(v1, v2))

    def partial(self, var) -> "RatFn":
        n, d = self.num, self.den
        return RatFn(n.partial(var) * d - n * d.partial(var), d * d)

    def strip(self, num_factor: MPoly | None = None, den_factor: MPoly | None = None,
              num_times: int = 1, den_times: int = 1) -> "RatFn":
        """Divide known polynomial factors out of numerator and/or denominator."""
        n, d = self.num, self.den
        if num_factor is not None:
            n = n.strip_factor(num_factor, num_times)
        if den_factor is not None:
            d = d.strip_factor(den_factor, den_times)
        return RatFn(n, d)

    def cancel_common(self, factor: MPoly, times: int = 1) -> "RatFn":
        return self.strip(factor, factor, times, times)

    def normalized(self) -> "RatFn":
        """Scale so the denominator is a primitive integer polynomial."""
        g = self.den.content()
        return RatFn(self.num / g, self.den / g)

    def __repr__(self):
        return f"RatFn(({self.num}) / ({self.den}))"

    def to_record(self, pi_power: int = 0) -> dict:
        return {"numerator": self.num.to_record(pi_power), "denominator": self.den.to_record(0)}

    @classmethod
    def from_record(cls, rec: Mapping) -> "RatFn":
        return cls(MPoly.from_record(rec["numerator"]), MPoly.from_record(rec["denominator"]))


def ratfn_eq(f, g) -> bool:
    """True iff f and g agree as rational functions (cross-multiplication)."""
    f, g = RatFn._coerce(f), RatFn._coerce(g)
    return (f.num * g.den - g.num * f.den).is_zero()


# --------------------------------------------------------------------------
# pi-graded scalars
# --------------------------------------------------------------------------

def _is_zero(c) -> bool:
    if isinstance(c, RatFn):
        return c.is_zero()
    if isinstance(c, MPoly):
        return c.is_zero()
    return c == 0


@dataclass(frozen=True, eq=False)
class PiScalar:
    """``coeff * pi**pi_power``.

    ``coeff`` is normally a Fraction; the symbolic pipeline also stores RatFn
    coefficients here.  Sums across different powers of pi raise GradeMismatch.
    """

    coeff: object
    pi_power: int = 0

    def __post_init__(self):
        c = self.coeff
        if isinstance(c, int) and not isinstance(c, bool):
            object.__setattr__(self, "coeff", Fraction(c))
        if _is_zero(self.coeff):
            object.__setattr__(self, "pi_power", 0)

    def is_zero(self) -> bool:
        return _is_zero(self.coeff)

    def _check(self, other: "PiScalar"):
        if self.is_zero() or other.is_zero():
            return
        if self.pi_power != other.pi_power:
            raise GradeMismatch(
                f"cannot add pi^{self.pi_power} and pi^{other.pi_power} quantities"
            )

    def __add__(self, other):
        if not isinstance(other, PiScalar):
            if _is_zero(other):
                return self
            other = PiScalar(other, 0)
        self._check(other)
        power = other.pi_power if self.is_zero() else self.pi_power
        return PiScalar(self.coeff + other.coeff, power)

    __radd__ = __add__

    def __neg__(self):
        return PiScalar(-self.coeff, self.pi_power)

    def __sub__(self, other):
        if not isinstance(other, PiScalar):
            other = PiScalar(other, 0)
        return self + (-other)

    def __rsub__(self, other):
        return PiScalar(other, 0) - self

    def __mul__(self, other):
        if isinstance(other, PiScalar):
            return PiScalar(self.coeff * other.coeff, self.pi_power + other.pi_power)
        return PiScalar(self.coeff * other, self.pi_power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiScalar):
            return PiScalar(self.coeff / other.coeff, self.pi_power - other.pi_power)
        return PiScalar(self.coeff / other, self.pi_power)

    def __pow__(self, n: int):
        return PiScalar(self.coeff ** n, self.pi_power * n)

    def __eq__(self, other):
        if not isinstance(other, PiScalar):
            other = PiScalar(other, 0)
        if self.is_zero() and other.is_zero():
            return True
        if self.pi_power != other.pi_power:
            return False
        if isinstance(self.coeff, RatFn) or isinstance(other.coeff, RatFn):
            return ratfn_eq(self.coeff, other.coeff)
        return self.coeff == other.coeff

    __hash__ = None

    def _cmp_coeffs(self, other):
        if not isinstance(other, PiScalar):
            other = PiScalar(other, 0)
        if not (self.is_zero() or other.is_zero()):
            self._check(other)
        return self.coeff, other.coeff

    # pi > 0, so same-grade comparison reduces to the coefficients
    def __lt__(self, other):
        a, b = self._cmp_coeffs(other)
        return a < b

    def __le__(self, other):
        a, b = self._cmp_coeffs(other)
        return a <= b

    def __gt__(self, other):
        a, b = self._cmp_coeffs(other)
        return a > b

    def __ge__(self, other):
        a, b = self._cmp_coeffs(other)
        return a >= b

    def __float__(self):
        return float(self.coeff) * math.pi ** self.pi_power

    def __str__(self):
        if self.is_zero():
            return "0"
        if self.pi_power == 0:
            return str(self.coeff)
        p = "pi" if self.pi_power == 1 else f"pi^{self.pi_power}"
        return f"{self.coeff}*{p}"
