"""Irreducible character values by two independent routes.

The insertion route sums transported tableau weights over the standard
tableaux of a shape.  The oracle route never touches insertion: it expands
the deformed power sum q_mu in the super Schur basis by an exact linear
solve over the z-monomial coefficient matrix, which is integral because the
Schur polynomials are signed counts of hook fillings.  On disagreement the
oracle wins; the insertion route is the artifact under test.

Specializing q -> 1, Q_a -> (m-th root of unity)^a turns a table into the
ordinary character table of the wreath product of a cyclic group of order m
by the symmetric group.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .combinatorics import (
    HookParams,
    Multipartition,
    _cached_standard_tableaux,
    enumerate_multipartitions,
)
from .exactalg import Cyclotomic, MPoly
from .rsk import certify, tableau_weight
from .superfunctions import q_mu, schur_super


def char_rsk(
    lam: Multipartition,
    mu: Multipartition,
    params: HookParams,
    strategy: str = "corrected",
) -> MPoly:
    """Character value as the weight sum over standard tableaux of lam.

    Requires the strategy to be certified at this size (run certify first);
    tableau_weight refuses otherwise.
    """
    if lam.size != mu.size:
        raise ValueError("|lambda| and |mu| disagree")
    total = MPoly.zero(params.universe())
    for T in _cached_standard_tableaux(lam):
        total = total + tableau_weight(T, mu, params, strategy)
    return total


class OracleError(Exception):
    """Raised when the linear system behind char_oracle is not solvable."""


def char_oracle(
    mu: Multipartition, params: HookParams
) -> dict[Multipartition, MPoly]:
    """Coefficients of q_mu in the super Schur basis, by exact linear solve.

    Builds the integer matrix of z-monomial coefficients of the Schur
    family, solves A c = b with Fraction pivots (b holds the q,Q-polynomial
    coefficients of q_mu), demands full rank and a zero residual, and
    re-checks the expansion before returning.
    """
    n = mu.size
    m = params.m
    shapes = enumerate_multipartitions(n, m)
    schurs = [schur_super(lam, params) for lam in shapes]
    target = q_mu(mu, params)

    monos: list[tuple[int, ...]] = []
    seen = set()
    for poly in schurs + [target]:
        for z in poly.z_support():
            if z not in seen:
                seen.add(z)
                monos.append(z)
    monos.sort(key=lambda z: (sum(z),) + z, reverse=True)

    ncols = len(shapes)
    A = []
    b = []
    for z in monos:
        row = []
        for poly in schurs:
            coeff = poly.coefficient_of(z)
            row.append(Fraction(coeff.constant_value()) if not coeff.is_zero() else Fraction(0))
        A.append(row)
        b.append(target.coefficient_of(z))

    # Gaussian elimination with Fraction pivots; the same row operations are
    # applied to the polynomial right-hand side.
    rank = 0
    pivot_cols = []
    for col in range(ncols):
        piv = None
        for r in range(rank, len(A)):
            if A[r][col]:
                piv = r
                break
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        b[rank], b[piv] = b[piv], b[rank]
        inv = Fraction(1) / A[rank][col]
        A[rank] = [x * inv for x in A[rank]]
        b[rank] = b[rank] * inv
        for r in range(len(A)):
            if r != rank and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[rank])]
                b[r] = b[r] - b[rank] * f
        pivot_cols.append(col)
        rank += 1

    if rank < ncols:
        missing = [str(shapes[c]) for c in range(ncols) if c not in pivot_cols]
        raise OracleError(
            f"Schur coefficient matrix is rank deficient ({rank} of {ncols}); "
            f"no pivot for shapes {missing}; params {params} do not separate the basis"
        )
    for r in range(rank, len(A)):
        if not b[r].is_zero():
            raise OracleError(
                f"inconsistent system: residual {b[r]} on z-monomial row {monos[r]}"
            )

    coeffs = {shapes[c]: b[c] for c in range(ncols)}
    check = MPoly.zero(params.universe())
    for lam, c in coeffs.items():
        check = check + c * schur_super(lam, params)
    if check != target:
        raise OracleError("re-expansion of the solved coefficients missed q_mu")
    return coeffs


def centralizer_order(mu: Multipartition) -> int:
    """Order of the centralizer of the class mu in the wreath product:
    product over colors c and part sizes j of mult! * (j*m)^mult."""
    m = mu.m
    out = 1
    for c in range(1, m + 1):
        mults: dict[int, int] = {}
        for part in mu.component(c).parts:
            mults[part] = mults.get(part, 0) + 1
        for j, k in mults.items():
            out *= _factorial(k) * (j * m) ** k
    return out


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def dimension(lam: Multipartition) -> int:
    """Number of standard tableaux of the shape."""
    return len(_cached_standard_tableaux(lam))


# ---------------------------------------------------------------------------
# tables


@dataclass(frozen=True)
class CharacterTable:
    m: int
    n: int
    params: HookParams
    shapes: tuple[Multipartition, ...]
    entries: dict
    provenance: str

    def entry(self, lam: Multipartition, mu: Multipartition) -> MPoly:
        return self.entries[(lam, mu)]

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "params": str(self.params),
            "provenance": self.provenance,
            "shapes": [str(s) for s in self.shapes],
            "entries": [
                [str(self.entries[(lam, mu)]) for mu in self.shapes]
                for lam in self.shapes
            ],
        }

    def to_text(self) -> str:
        cells = [[""] + [str(mu) for mu in self.shapes]]
        for lam in self.shapes:
            cells.append(
                [str(lam)] + [str(self.entries[(lam, mu)]) for mu in self.shapes]
            )
        widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
        lines = [
            "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
            for row in cells
        ]
        return "\n".join(lines)


@dataclass(frozen=True)
class SpecializedTable:
    m: int
    n: int
    shapes: tuple[Multipartition, ...]
    entries: dict

    def entry(self, lam: Multipartition, mu: Multipartition) -> Cyclotomic:
        return self.entries[(lam, mu)]

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "shapes": [str(s) for s in self.shapes],
            "entries": [
                [str(self.entries[(lam, mu)]) for mu in self.shapes]
                for lam in self.shapes
            ],
        }

    def to_text(self) -> str:
        cells = [[""] + [str(mu) for mu in self.shapes]]
        for lam in self.shapes:
            cells.append(
                [str(lam)] + [str(self.entries[(lam, mu)]) for mu in self.shapes]
            )
        widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
        lines = [
            "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
            for row in cells
        ]
        return "\n".join(lines)


def _as_cyclotomic(poly: MPoly, m: int) -> Cyclotomic:
    spec = poly.specialize()
    if spec.is_zero():
        return Cyclotomic.zero(m)
    ((exps, c),) = spec.terms.items()
    if any(exps):
        raise ValueError("specialized entry kept a variable")
    if isinstance(c, Cyclotomic):
        return c
    return Cyclotomic.from_rational(m, c)


def specialize_table(table: CharacterTable) -> SpecializedTable:
    """Entrywise q -> 1, Q_a -> (m-th root)^a; the ordinary table."""
    entries = {
        key: _as_cyclotomic(val, table.m) for key, val in table.entries.items()
    }
    return SpecializedTable(table.m, table.n, table.shapes, entries)


def code_version() -> str:
    """Hash of the package sources; cache files are keyed by it."""
    src = Path(__file__).resolve().parent
    h = hashlib.sha256()
    for path in sorted(src.glob("*.py")):
        h.update(path.name.encode())
        h.update(path.read_bytes())
    return h.hexdigest()[:16]


def build_table(
    m: int,
    n: int,
    params: HookParams | None = None,
    strategy: str = "corrected",
    provenance: str = "rsk",
    cache_dir: str | Path | None = None,
) -> CharacterTable:
    """Full character table over the canonical shape order, optionally
    persisted to cache_dir keyed by (m, n, params, strategy, provenance,
    code version)."""
    if params is None:
        params = HookParams.default(m, n)
    if provenance not in ("rsk", "oracle"):
        raise ValueError("provenance must be rsk or oracle")
    shapes = enumerate_multipartitions(n, m)
    cache_path = None
    if cache_dir is not None:
        tag = f"{m}-{n}-{params}-{strategy}-{provenance}-{code_version()}"
        digest = hashlib.sha256(tag.encode()).hexdigest()[:24]
        cache_path = Path(cache_dir) / f"chartable-{digest}.json"
        if cache_path.exists():
            data = json.loads(cache_path.read_text())
            u = params.universe()
            from .exactalg import parse_poly

            entries = {}
            for i, lam in enumerate(shapes):
                for j, mu in enumerate(shapes):
                    entries[(lam, mu)] = parse_poly(u, data["entries"][i][j])
            return CharacterTable(m, n, params, tuple(shapes), entries, provenance)

    entries = {}
    if provenance == "rsk":
        certify(params, n, strategy)
        for lam in shapes:
            for mu in shapes:
                entries[(lam, mu)] = char_rsk(lam, mu, params, strategy)
    else:
        for mu in shapes:
            col = char_oracle(mu, params)
            for lam in shapes:
                entries[(lam, mu)] = col[lam]
    table = CharacterTable(m, n, params, tuple(shapes), entries, provenance)
    if cache_path is not None:
        cache_path.parent.mkdir(parents=True, exist_ok=True)
        cache_path.write_text(json.dumps(table.to_json_dict(), indent=1))
    return table


# ---------------------------------------------------------------------------
# verification


@dataclass
class FrobeniusReport:
    m: int
    n: int
    params: HookParams
    strategy: str
    results: list

    @property
    def passed(self) -> bool:
        return all(ok_q and ok_o for _, ok_q, ok_o, _ in self.results)

    def summary(self) -> str:
        lines = [f"frobenius m={self.m} n={self.n} params={self.params}"]
        for mu, ok_q, ok_o, detail in self.results:
            status = "PASS" if (ok_q and ok_o) else "FAIL"
            line = f"  mu={mu}: expansion={'ok' if ok_q else 'BAD'} oracle={'ok' if ok_o else 'BAD'} [{status}]"
            if detail:
                line += f" {detail}"
            lines.append(line)
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def _first_difference(a: MPoly, b: MPoly) -> str:
    diff = a - b
    if diff.is_zero():
        return ""
    exps = sorted(diff.terms)[0]
    return f"first differing monomial exponents {exps}"


def verify_frobenius(
    m: int,
    n: int,
    params: HookParams | None = None,
    strategy: str = "corrected",
) -> FrobeniusReport:
    """For every mu: q_mu equals the Schur expansion with insertion-route
    coefficients, and those coefficients match the oracle entrywise."""
    if params is None:
        params = HookParams.default(m, n)
    certify(params, n, strategy)
    shapes = enumerate_multipartitions(n, m)
    results = []
    for mu in shapes:
        rsk_col = {lam: char_rsk(lam, mu, params, strategy) for lam in shapes}
        expansion = MPoly.zero(params.universe())
        for lam in shapes:
            expansion = expansion + rsk_col[lam] * schur_super(lam, params)
        target = q_mu(mu, params)
        ok_q = expansion == target
        detail = "" if ok_q else _first_difference(expansion, target)
        oracle_col = char_oracle(mu, params)
        bad = [lam for lam in shapes if oracle_col[lam] != rsk_col[lam]]
        ok_o = not bad
        if bad and not detail:
            detail = f"routes disagree at lambda={bad[0]}"
        results.append((str(mu), ok_q, ok_o, detail))
    return FrobeniusReport(m, n, params, strategy, results)
