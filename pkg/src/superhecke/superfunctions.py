"""Supersymmetric power sums, Schur functions, and the deformed power sums.

These polynomials are the algebraic side of every identity in the package:
q_mu expands in the Schur basis with character values as coefficients, and
specializes at q = 1, Q_a = s^a to the power sum P_mu.
"""

from __future__ import annotations

from fractions import Fraction

from .combinatorics import (
    HookParams,
    Multipartition,
    _cached_hook_tableaux,
)
from .exactalg import Cyclotomic, MPoly
from .sequences import SortedComposition, enumerate_sorted_compositions


def power_sum_color(t: int, color: int, params: HookParams) -> MPoly:
    """p_t over one color block: sum of x^t minus sum of y^t."""
    if t < 1:
        raise ValueError("power sums need t >= 1")
    u = params.universe()
    out = MPoly.zero(u)
    for s in params.symbols_of_color(color):
        sign = 1 if params.parity(s) == 0 else -1
        out = out + MPoly.var(u, params.var_name(s), t) * Fraction(sign)
    return out


def power_sum(t: int, params: HookParams) -> MPoly:
    """p_t over the whole alphabet."""
    u = params.universe()
    out = MPoly.zero(u)
    for c in range(1, params.m + 1):
        out = out + power_sum_color(t, c, params)
    return out


def P_t_i(t: int, i: int, params: HookParams) -> MPoly:
    """Sum over colors j of s^(-i*j) p_t of block j; cyclotomic coefficients."""
    m = params.m
    u = params.universe()
    out = MPoly.zero(u)
    for j in range(1, m + 1):
        root = Cyclotomic.root_power(m, (-i * j) % m)
        out = out + power_sum_color(t, j, params) * root
    return out


def P_mu(mu: Multipartition, params: HookParams) -> MPoly:
    """Product over components i and their parts t of P_t^(i)."""
    u = params.universe()
    out = MPoly.const(u, Cyclotomic.one(params.m))
    for comp, _row, part in mu.rows():
        out = out * P_t_i(part, comp, params)
    return out


def schur_super(shape: Multipartition, params: HookParams) -> MPoly:
    """Signed generating function of semistandard hook fillings of the shape.

    Every box contributes its variable, with a minus sign for odd symbols;
    non-hook shapes give zero because they admit no filling.
    """
    u = params.universe()
    out = MPoly.zero(u)
    for ft in _cached_hook_tableaux(shape, params):
        exps = [0] * u.width
        sign = 1
        for comp in ft.rows:
            for row in comp:
                for s in row:
                    exps[u.m + s] += 1
                    if params.parity(s) == 1:
                        sign = -sign
        out = out + MPoly(u, {tuple(exps): Fraction(sign)})
    return out


def tilde_q_prefactor(sc: SortedComposition) -> MPoly:
    """(-q^-1)^(|beta|-l(beta)) q^(|alpha|-l(alpha)) (q-q^-1)^(l(alpha;beta)-1)."""
    if sc.t < 1:
        raise ValueError("prefactor undefined for the empty word")
    u = sc.params.universe()
    la, lb = sc.ell_alpha(), sc.ell_beta()
    eb = sum(sc.beta) - lb
    ea = sum(sc.alpha) - la
    out = MPoly.q_power(u, ea - eb) * Fraction((-1) ** eb)
    bracket = MPoly.q_power(u, 1) - MPoly.q_power(u, -1)
    return out * bracket ** (la + lb - 1)


def tilde_q(sc: SortedComposition) -> MPoly:
    """Prefactor times x^alpha (-y)^beta."""
    u = sc.params.universe()
    params = sc.params
    even_syms = [s for s in params.symbols() if params.parity(s) == 0]
    odd_syms = [s for s in params.symbols() if params.parity(s) == 1]
    exps = [0] * u.width
    sign = 1
    for s, e in zip(even_syms, sc.alpha):
        exps[u.m + s] += e
    for s, e in zip(odd_syms, sc.beta):
        exps[u.m + s] += e
        if e % 2:
            sign = -sign
    mono = MPoly(u, {tuple(exps): Fraction(sign)})
    return tilde_q_prefactor(sc) * mono


def q_t_a(t: int, a: int, params: HookParams) -> MPoly:
    """Deformed power sum: sum over weakly increasing words of length t of
    Q_(color of the word)^a times the tilde-q term."""
    if t < 1:
        raise ValueError("need t >= 1")
    if not 1 <= a <= params.m:
        raise ValueError(f"color exponent {a} outside 1..{params.m}")
    u = params.universe()
    out = MPoly.zero(u)
    for sc in enumerate_sorted_compositions(t, params):
        qvar = MPoly.var(u, f"Q{sc.q_color()}", a)
        out = out + qvar * tilde_q(sc)
    return out


def q_mu(mu: Multipartition, params: HookParams) -> MPoly:
    """Product over all rows of mu of the deformed power sums q_t^(i)."""
    if mu.m != params.m:
        raise ValueError("mu and params disagree on the number of components")
    u = params.universe()
    out = MPoly.one(u)
    for comp, _row, part in mu.rows():
        out = out * q_t_a(part, comp, params)
    return out
