"""Parity-integer sequences, up-down structure, and sequence weights.

A sequence is a word over the symbols 1..k+l of a HookParams alphabet.  Its
weight against a multipartition mu is read off row segment by row segment of
the superstandard filling of mu.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from fractions import Fraction

from .combinatorics import HookParams, Multipartition, superstandard
from .exactalg import MPoly


@dataclass(frozen=True)
class ParitySequence:
    params: HookParams
    symbols: tuple[int, ...]

    def __post_init__(self):
        syms = tuple(int(s) for s in self.symbols)
        object.__setattr__(self, "symbols", syms)
        for s in syms:
            self.params._check_symbol(s)

    def __len__(self) -> int:
        return len(self.symbols)

    def parities(self) -> tuple[int, ...]:
        return tuple(self.params.parity(s) for s in self.symbols)

    def colors(self) -> tuple[int, ...]:
        return tuple(self.params.color(s) for s in self.symbols)

    def color(self) -> int:
        """Color of the sequence: the color of its maximal symbol."""
        if not self.symbols:
            raise ValueError("empty sequence has no color")
        return self.params.color(max(self.symbols))

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.symbols)

    def dotted(self) -> str:
        return ",".join(self.params.dotted_name(s) for s in self.symbols)

    @classmethod
    def parse(cls, params: HookParams, text: str) -> ParitySequence:
        """Accepts plain symbol indices or dotted names like x1.2,y1.1."""
        toks = [t.strip() for t in text.strip().split(",") if t.strip()]
        syms = []
        for tok in toks:
            if tok.isdigit():
                syms.append(int(tok))
            else:
                syms.append(params.symbol_from_dotted(tok))
        return cls(params, tuple(syms))


def updown_peak(symbols: tuple[int, ...]) -> int | None:
    """Peak position of an up-down word, or None.

    The word must strictly increase through the peak and weakly decrease
    afterwards; singletons are up-down with the peak at position 1.
    """
    if not symbols:
        raise ValueError("empty row has no up-down structure")
    p = 1
    while p < len(symbols) and symbols[p - 1] < symbols[p]:
        p += 1
    for j in range(p, len(symbols)):
        if symbols[j - 1] < symbols[j]:
            return None
    return p


def row_weight(row: ParitySequence) -> MPoly:
    """Weight of one row: zero unless up-down, else a signed power of q.

    Positions before the peak contribute -q^-1 (even) or q (odd); positions
    after the peak contribute q (even) or -q^-1 (odd); the peak itself
    contributes nothing.
    """
    u = row.params.universe()
    p = updown_peak(row.symbols)
    if p is None:
        return MPoly.zero(u)
    out = MPoly.one(u)
    for pos, s in enumerate(row.symbols, start=1):
        if pos == p:
            continue
        even = row.params.parity(s) == 0
        before = pos < p
        if (before and even) or (not before and not even):
            out = out * MPoly.q_power(u, -1) * Fraction(-1)
        else:
            out = out * MPoly.q_power(u, 1)
    return out


def z_monomial(seq: ParitySequence) -> MPoly:
    """(-1)^(number of odd symbols) times the product of the variables."""
    u = seq.params.universe()
    exps = [0] * u.width
    sign = 1
    for s in seq.symbols:
        exps[u.m + s] += 1
        if seq.params.parity(s) == 1:
            sign = -sign
    return MPoly(u, {tuple(exps): Fraction(sign)})


def mu_weight_sequence(seq: ParitySequence, mu: Multipartition) -> MPoly:
    """Weight of a sequence against mu: zero unless every row segment of the
    superstandard filling is up-down, else the product of row weights times
    Q_(color of the peak symbol)^(component of the row)."""
    if len(seq) != mu.size:
        raise ValueError(f"sequence length {len(seq)} but |mu| = {mu.size}")
    u = seq.params.universe()
    if mu.m != seq.params.m:
        raise ValueError("mu and params disagree on the number of components")
    out = MPoly.one(u)
    for start, length, comp in superstandard(mu).segments:
        segment = seq.symbols[start - 1 : start - 1 + length]
        p = updown_peak(segment)
        if p is None:
            return MPoly.zero(u)
        row = ParitySequence(seq.params, segment)
        qfactor = MPoly.var(u, f"Q{seq.params.color(segment[p - 1])}", comp)
        out = out * row_weight(row) * qfactor
    return out


# ---------------------------------------------------------------------------
# weakly increasing words as exponent pairs


@dataclass(frozen=True)
class SortedComposition:
    """A weakly increasing word recorded as exponents: alpha over the even
    symbols and beta over the odd symbols, in global symbol order."""

    params: HookParams
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(v) for v in self.alpha)
        b = tuple(int(v) for v in self.beta)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        if len(a) != self.params.total_k or len(b) != self.params.total_l:
            raise ValueError("alpha/beta lengths must match the alphabet")
        if any(v < 0 for v in a + b):
            raise ValueError("exponents must be nonnegative")

    @property
    def t(self) -> int:
        return sum(self.alpha) + sum(self.beta)

    def ell_alpha(self) -> int:
        return sum(1 for v in self.alpha if v)

    def ell_beta(self) -> int:
        return sum(1 for v in self.beta if v)

    def to_sequence(self) -> ParitySequence:
        even_syms = [s for s in self.params.symbols() if self.params.parity(s) == 0]
        odd_syms = [s for s in self.params.symbols() if self.params.parity(s) == 1]
        reps: list[tuple[int, int]] = []
        reps += [(s, e) for s, e in zip(even_syms, self.alpha)]
        reps += [(s, e) for s, e in zip(odd_syms, self.beta)]
        reps.sort()
        word = []
        for s, e in reps:
            word.extend([s] * e)
        return ParitySequence(self.params, tuple(word))

    def q_color(self) -> int:
        """Color of the largest symbol carrying a nonzero exponent."""
        return self.to_sequence().color()


def enumerate_sorted_compositions(t: int, params: HookParams):
    """All (alpha; beta) with |alpha| + |beta| = t over the alphabet."""
    nv = params.nsymbols

    def rec(slots: int, remaining: int):
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining + 1):
            for rest in rec(slots - 1, remaining - first):
                yield (first,) + rest

    if nv == 0:
        if t == 0:
            yield SortedComposition(params, (), ())
        return
    kk = params.total_k
    for vec in rec(nv, t):
        yield SortedComposition(params, vec[:kk], vec[kk:])


def distinct_permutations(word: tuple[int, ...]) -> set[tuple[int, ...]]:
    return set(permutations(word))


def permutation_sum_check(sc: SortedComposition):
    """Sum row weights over all distinct rearrangements and compare with the
    closed-form prefactor.  Returns (ok, lhs, rhs)."""
    from .superfunctions import tilde_q_prefactor

    if sc.t < 1:
        raise ValueError("need a nonempty word")
    u = sc.params.universe()
    base = sc.to_sequence().symbols
    lhs = MPoly.zero(u)
    for word in distinct_permutations(base):
        lhs = lhs + row_weight(ParitySequence(sc.params, word))
    rhs = tilde_q_prefactor(sc)
    return lhs == rhs, lhs, rhs
