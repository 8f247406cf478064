"""Exact coefficient arithmetic: sparse multivariate Laurent polynomials and
cyclotomic numbers.

Polynomials live in q, Q_1..Q_m and a fixed tuple of z-variables.  Only q may
carry negative exponents.  Coefficients are Fractions, or Cyclotomic numbers
after specializing q -> 1, Q_a -> s^a (s a primitive m-th root of unity).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache


class Universe:
    """Variable layout shared by a family of polynomials.

    Exponent vectors are flat tuples (e_q, e_Q1..e_Qm, e_z1..e_zn).
    """

    __slots__ = ("m", "zvars")

    def __init__(self, m: int, zvars: tuple[str, ...] = ()):
        if m < 1:
            raise ValueError("universe needs m >= 1")
        self.m = int(m)
        self.zvars = tuple(zvars)
        if len(set(self.zvars)) != len(self.zvars):
            raise ValueError("duplicate z-variable names")

    @property
    def nvars(self) -> int:
        return len(self.zvars)

    @property
    def width(self) -> int:
        return 1 + self.m + len(self.zvars)

    def names(self) -> tuple[str, ...]:
        return ("q",) + tuple(f"Q{a}" for a in range(1, self.m + 1)) + self.zvars

    def index_of(self, name: str) -> int:
        try:
            return self.names().index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r} in this universe") from None

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Universe)
            and self.m == other.m
            and self.zvars == other.zvars
        )

    def __hash__(self) -> int:
        return hash((self.m, self.zvars))

    def __repr__(self) -> str:
        return f"Universe(m={self.m}, zvars={self.zvars!r})"


# ---------------------------------------------------------------------------
# cyclotomic numbers


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[Fraction, ...]:
    """Dense coefficients (low to high) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("order must be positive")
    if m == 1:
        return (Fraction(-1), Fraction(1))
    # x^m - 1 divided by the product of Phi_d over proper divisors d of m
    num = [Fraction(0)] * (m + 1)
    num[0] = Fraction(-1)
    num[m] = Fraction(1)
    for d in range(1, m):
        if m % d == 0:
            num = _polydiv_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _polydiv_exact(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    """Exact division of dense polynomials; remainder must vanish."""
    num = list(num)
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] / den[-1]
        out[i] = c
        if c:
            for j, dc in enumerate(den):
                num[i + j] -= c * dc
    if any(num):
        raise ArithmeticError("nonzero remainder in exact polynomial division")
    return out


def _cyclo_reduce(m: int, dense: list[Fraction]) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    dense = list(dense)
    if len(dense) < deg:
        dense += [Fraction(0)] * (deg - len(dense))
    for i in range(len(dense) - 1, deg - 1, -1):
        c = dense[i]
        if c:
            # subtract c * x^(i-deg) * phi
            for j, pc in enumerate(phi):
                dense[i - deg + j] -= c * pc
    return tuple(dense[:deg])


class Cyclotomic:
    """Exact element of Q(s), s a primitive m-th root of unity.

    Stored as the residue of a rational polynomial in s modulo the m-th
    cyclotomic polynomial.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        self.order = int(order)
        deg = len(cyclotomic_polynomial(self.order)) - 1
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = list(_cyclo_reduce(self.order, cs))
        cs += [Fraction(0)] * (deg - len(cs))
        self.coeffs = tuple(cs)

    @classmethod
    def from_rational(cls, order: int, value) -> Cyclotomic:
        return cls(order, [Fraction(value)])

    @classmethod
    def zero(cls, order: int) -> Cyclotomic:
        return cls(order, [])

    @classmethod
    def one(cls, order: int) -> Cyclotomic:
        return cls(order, [Fraction(1)])

    @classmethod
    def root_power(cls, order: int, j: int) -> Cyclotomic:
        """s^j reduced into the residue ring."""
        j %= order
        dense = [Fraction(0)] * (j + 1)
        dense[j] = Fraction(1)
        return cls(order, dense)

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.order, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        dense = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        dense[i + j] += a * b
        return Cyclotomic(self.order, _cyclo_reduce(self.order, dense))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative cyclotomic powers not supported")
        out = Cyclotomic.one(self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conjugate(self) -> Cyclotomic:
        """Complex conjugate: substitutes s -> s^(m-1)."""
        m = self.order
        dense = [Fraction(0)] * (m + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                dense[(m - i) % m] += a
        return Cyclotomic(m, _cyclo_reduce(m, dense))

    def norm_squared(self) -> Cyclotomic:
        return self * self.conjugate()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __str__(self) -> str:
        if not self:
            return "0"
        bits = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            if i == 0:
                mono = str(a)
            else:
                head = "s" if i == 1 else f"s^{i}"
                if a == 1:
                    mono = head
                elif a == -1:
                    mono = f"-{head}"
                else:
                    mono = f"{a}*{head}"
            bits.append(mono)
        out = bits[0]
        for b in bits[1:]:
            out += f" - {b[1:]}" if b.startswith("-") else f" + {b}"
        return out

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}, {list(self.coeffs)!r})"


# ---------------------------------------------------------------------------
# sparse polynomials


def _is_scalar(c) -> bool:
    return isinstance(c, (int, Fraction, Cyclotomic))


def _normalize_scalar(c):
    return Fraction(c) if isinstance(c, int) else c


class MPoly:
    """Immutable sparse polynomial over a Universe.

    terms maps exponent tuples to nonzero coefficients.  All arithmetic is
    exact; operands must share the universe.
    """

    __slots__ = ("universe", "terms")

    def __init__(self, universe: Universe, terms: dict | None = None):
        self.universe = universe
        clean = {}
        if terms:
            w = universe.width
            for exps, c in terms.items():
                if len(exps) != w:
                    raise ValueError(
                        f"exponent vector of length {len(exps)}, universe width {w}"
                    )
                if any(e < 0 for e in exps[1:]):
                    raise ValueError("negative exponent outside q")
                c = _normalize_scalar(c)
                if c:
                    clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, universe: Universe) -> MPoly:
        return cls(universe)

    @classmethod
    def const(cls, universe: Universe, value) -> MPoly:
        return cls(universe, {(0,) * universe.width: value})

    @classmethod
    def one(cls, universe: Universe) -> MPoly:
        return cls.const(universe, 1)

    @classmethod
    def var(cls, universe: Universe, name: str, exp: int = 1) -> MPoly:
        idx = universe.index_of(name)
        if exp < 0 and idx != 0:
            raise ValueError("only q supports negative exponents")
        exps = [0] * universe.width
        exps[idx] = exp
        return cls(universe, {tuple(exps): 1})

    @classmethod
    def q_power(cls, universe: Universe, exp: int) -> MPoly:
        exps = [0] * universe.width
        exps[0] = exp
        return cls(universe, {tuple(exps): 1})

    # -- ring structure ----------------------------------------------------

    def _check(self, other: MPoly) -> None:
        if self.universe != other.universe:
            raise ValueError("operands from different variable universes")

    def __add__(self, other):
        if _is_scalar(other):
            other = MPoly.const(self.universe, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            acc = terms.get(exps, 0) + c
            if acc:
                terms[exps] = acc
            else:
                terms.pop(exps, None)
        out = MPoly(self.universe)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MPoly(self.universe)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if _is_scalar(other):
            other = MPoly.const(self.universe, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            c = _normalize_scalar(other)
            if not c:
                return MPoly.zero(self.universe)
            out = MPoly(self.universe)
            out.terms = {e: cc * c for e, cc in self.terms.items()}
            out.terms = {e: cc for e, cc in out.terms.items() if cc}
            return out
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(e, 0) + c1 * c2
                if acc:
                    terms[e] = acc
                else:
                    terms.pop(e, None)
        out = MPoly(self.universe)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial powers not supported")
        out = MPoly.one(self.universe)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if _is_scalar(other):
            other = MPoly.const(self.universe, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        if self.universe != other.universe:
            return False
        if self.terms.keys() != other.terms.keys():
            return False
        return all(other.terms[e] == c for e, c in self.terms.items())

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def zpart(self, exps: tuple[int, ...]) -> tuple[int, ...]:
        return exps[1 + self.universe.m :]

    def qQpart(self, exps: tuple[int, ...]) -> tuple[int, ...]:
        return exps[: 1 + self.universe.m]

    def z_support(self) -> list[tuple[int, ...]]:
        """Distinct z-exponent vectors, in descending graded-lex order."""
        seen = {self.zpart(e) for e in self.terms}
        return sorted(seen, key=lambda z: (sum(z),) + z, reverse=True)

    def coefficient_of(self, zmono: tuple[int, ...]) -> MPoly:
        """Coefficient of the given z-monomial, as a polynomial in q and Q."""
        m = self.universe.m
        if len(zmono) != self.universe.nvars:
            raise ValueError("z-monomial length mismatch")
        zmono = tuple(zmono)
        pad = (0,) * self.universe.nvars
        terms = {}
        for exps, c in self.terms.items():
            if self.zpart(exps) == zmono:
                terms[exps[: 1 + m] + pad] = c
        out = MPoly(self.universe)
        out.terms = terms
        return out

    def total_z_degree(self) -> int:
        return max((sum(self.zpart(e)) for e in self.terms), default=0)

    def specialize(self) -> MPoly:
        """Ring map q -> 1, Q_a -> s^a with s a primitive m-th root of unity.

        The result has Cyclotomic coefficients and zero q/Q exponents.
        """
        m = self.universe.m
        out = MPoly.zero(self.universe)
        terms: dict = {}
        for exps, c in self.terms.items():
            scale = Cyclotomic.one(m)
            for a in range(1, m + 1):
                e = exps[a]
                if e:
                    scale = scale * Cyclotomic.root_power(m, a * e)
            key = (0,) * (1 + m) + self.zpart(exps)
            acc = terms.get(key, Cyclotomic.zero(m)) + scale * c
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)
        out.terms = terms
        return out

    def constant_value(self):
        """The coefficient of the empty monomial, for scalar-valued polynomials."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) != 1:
            raise ValueError("not a constant polynomial")
        ((exps, c),) = self.terms.items()
        if any(exps):
            raise ValueError("not a constant polynomial")
        return c

    # -- printing ----------------------------------------------------------

    def _mono_str(self, exps: tuple[int, ...], lo: int, hi: int) -> str:
        names = self.universe.names()
        bits = []
        for i in range(lo, hi):
            e = exps[i]
            if e == 0:
                continue
            bits.append(names[i] if e == 1 else f"{names[i]}^{e}")
        return "*".join(bits)

    @staticmethod
    def _coeff_str(c) -> tuple[str, bool]:
        """String of a coefficient and whether it needs parentheses."""
        if isinstance(c, Cyclotomic):
            if c.is_rational():
                return str(c.as_rational()), False
            return str(c), True
        return str(c), False

    def _qq_group_str(self, terms: list[tuple[tuple[int, ...], object]]) -> str:
        """Render a sum of (q,Q)-monomial terms, canonical descending order."""
        terms = sorted(
            terms, key=lambda t: (sum(t[0][: 1 + self.universe.m]),) + t[0], reverse=True
        )
        out = ""
        for exps, c in terms:
            mono = self._mono_str(exps, 0, 1 + self.universe.m)
            cs, paren = self._coeff_str(c)
            neg = cs.startswith("-") and not paren
            if neg:
                cs = cs[1:]
            if paren:
                cs = f"({cs})"
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            if not out:
                out = f"-{body}" if neg else body
            else:
                out += f" - {body}" if neg else f" + {body}"
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        m = self.universe.m
        groups: dict[tuple[int, ...], list] = {}
        for exps, c in self.terms.items():
            groups.setdefault(self.zpart(exps), []).append((exps, c))
        out = ""
        for z in sorted(groups, key=lambda z: (sum(z),) + z, reverse=True):
            zname = self._mono_str((0,) * (1 + m) + z, 1 + m, self.universe.width)
            sub = groups[z]
            if len(sub) == 1:
                exps, c = sub[0]
                qqmono = self._mono_str(exps, 0, 1 + m)
                cs, paren = self._coeff_str(c)
                neg = cs.startswith("-") and not paren
                if neg:
                    cs = cs[1:]
                if paren:
                    cs = f"({cs})"
                factors = [b for b in (cs if cs != "1" else "", qqmono, zname) if b]
                body = "*".join(factors) if factors else "1"
            else:
                rendered = self._qq_group_str(sub)
                neg = rendered.startswith("-")
                if neg:
                    # factor the sign out of the whole group
                    rendered = self._qq_group_str([(e, -c) for e, c in sub])
                body = f"({rendered})*{zname}" if zname else f"({rendered})"
            if not out:
                out = f"-{body}" if neg else body
            else:
                out += f" - {body}" if neg else f" + {body}"
        return out

    def __repr__(self) -> str:
        return f"MPoly({self})"

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        terms = []
        for exps in sorted(self.terms, key=lambda e: (sum(e),) + e, reverse=True):
            c = self.terms[exps]
            if isinstance(c, Cyclotomic):
                coeff = {"order": c.order, "coeffs": [str(x) for x in c.coeffs]}
            else:
                coeff = str(c)
            terms.append({"exps": list(exps), "coeff": coeff})
        return {"m": self.universe.m, "zvars": list(self.universe.zvars), "terms": terms}

    @classmethod
    def from_json_dict(cls, data: dict) -> MPoly:
        u = Universe(data["m"], tuple(data["zvars"]))
        terms = {}
        for t in data["terms"]:
            c = t["coeff"]
            if isinstance(c, dict):
                coeff = Cyclotomic(c["order"], [Fraction(x) for x in c["coeffs"]])
            else:
                coeff = Fraction(c)
            terms[tuple(t["exps"])] = coeff
        return cls(u, terms)


# ---------------------------------------------------------------------------
# parsing


_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[A-Za-z]\w*(?:\.\d+)?|\^|\*|\+|\-|\(|\))")


def _tokenize(text: str) -> list[str]:
    pos = 0
    out = []
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise ValueError(f"cannot tokenize polynomial text at {text[pos:]!r}")
        out.append(mt.group(1))
        pos = mt.end()
    return out


class _Parser:
    def __init__(self, universe: Universe, tokens: list[str]):
        self.u = universe
        self.toks = tokens
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of polynomial text")
        self.i += 1
        return tok

    def parse_expr(self) -> MPoly:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        acc = self.parse_term() * sign
        while self.peek() in ("+", "-"):
            sign = 1 if self.take() == "+" else -1
            while self.peek() in ("+", "-"):
                if self.take() == "-":
                    sign = -sign
            acc = acc + self.parse_term() * sign
        return acc

    def parse_term(self) -> MPoly:
        acc = self.parse_factor()
        while self.peek() == "*":
            self.take()
            acc = acc * self.parse_factor()
        return acc

    def parse_factor(self) -> MPoly:
        base = self.parse_atom()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            tok = self.take()
            if not tok.isdigit():
                raise ValueError(f"bad exponent token {tok!r}")
            e = -int(tok) if neg else int(tok)
            if e >= 0:
                return base**e
            # negative exponents: only a bare q power can absorb them
            if len(base.terms) == 1:
                ((exps, c),) = base.terms.items()
                if c == 1 and exps[0] != 0 and not any(exps[1:]):
                    return MPoly.q_power(self.u, exps[0] * e)
            raise ValueError("negative exponent on a non-q factor")
        return base

    def parse_atom(self) -> MPoly:
        tok = self.take()
        if tok == "(":
            inner = self.parse_expr()
            if self.take() != ")":
                raise ValueError("unbalanced parenthesis")
            return inner
        if tok == "-":
            return -self.parse_atom()
        if re.fullmatch(r"\d+/\d+|\d+", tok):
            return MPoly.const(self.u, Fraction(tok))
        if tok == "s":
            return MPoly.const(self.u, Cyclotomic.root_power(self.u.m, 1))
        return MPoly.var(self.u, tok)


def parse_poly(universe: Universe, text: str) -> MPoly:
    """Parse the canonical polynomial string form back into an MPoly."""
    parser = _Parser(universe, _tokenize(text))
    poly = parser.parse_expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing tokens in polynomial text: {parser.toks[parser.i:]}")
    return poly
