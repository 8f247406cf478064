"""Shapes and fillings: partitions, multipartitions, hook conditions, and
enumeration of standard and semistandard hook tableaux.

Boxes are addressed (row, col, component), all 1-based.  Lists of shapes and
tableaux come back in a fixed canonical order: componentwise lexicographic
comparison of part lists, larger first, so ((2);-) precedes ((1,1);-) which
precedes ((1);(1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .exactalg import Universe


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        ps = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", ps)
        if any(p <= 0 for p in ps):
            raise ValueError(f"parts must be positive: {ps}")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError(f"parts must weakly decrease: {ps}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-based; zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def removable_corners(self) -> list[int]:
        """Row indices (1-based) whose last box can be removed."""
        out = []
        for r in range(1, len(self.parts) + 1):
            if self.part(r) > self.part(r + 1):
                out.append(r)
        return out

    def remove_corner(self, row: int) -> Partition:
        ps = list(self.parts)
        ps[row - 1] -= 1
        return Partition(tuple(p for p in ps if p > 0))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "-"

    @classmethod
    def parse(cls, text: str) -> Partition:
        text = text.strip().strip("()")
        if text in ("", "-", "0"):
            return cls(())
        return cls(tuple(int(tok) for tok in text.split(",")))


@dataclass(frozen=True)
class Multipartition:
    components: tuple[Partition, ...]

    def __post_init__(self):
        comps = tuple(
            c if isinstance(c, Partition) else Partition(tuple(c))
            for c in self.components
        )
        object.__setattr__(self, "components", comps)
        if not comps:
            raise ValueError("need at least one component")

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    def component(self, c: int) -> Partition:
        return self.components[c - 1]

    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c.parts for c in self.components)

    def boxes(self):
        """Yield (row, col, component) over all boxes, reading order."""
        for c, comp in enumerate(self.components, start=1):
            for r, p in enumerate(comp.parts, start=1):
                for col in range(1, p + 1):
                    yield (r, col, c)

    def rows(self):
        """Yield (component, row, part) over nonempty rows in order."""
        for c, comp in enumerate(self.components, start=1):
            for r, p in enumerate(comp.parts, start=1):
                yield (c, r, p)

    def __str__(self) -> str:
        return ";".join(f"({comp})" if comp.parts else "-" for comp in self.components)

    @classmethod
    def parse(cls, text: str, m: int | None = None) -> Multipartition:
        comps = tuple(Partition.parse(tok) for tok in text.strip().split(";"))
        if m is not None and len(comps) != m:
            raise ValueError(f"expected {m} components, got {len(comps)}")
        return cls(comps)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, largest-first lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(remaining: int, cap: int) -> list[tuple[int, ...]]:
        if remaining == 0:
            return [()]
        out = []
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first):
                out.append((first,) + rest)
        return out

    return [Partition(ps) for ps in rec(n, n)]


def enumerate_multipartitions(n: int, m: int) -> list[Multipartition]:
    """All multipartitions of n with m components, canonical order."""
    if m < 1:
        raise ValueError("m must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")

    def splits(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in splits(total - first, parts - 1):
                yield (first,) + rest

    out = []
    for sizes in splits(n, m):
        pools = [enumerate_partitions(s) for s in sizes]
        for combo in product(*pools):
            out.append(Multipartition(tuple(combo)))
    out.sort(key=Multipartition.sort_key, reverse=True)
    return out


# ---------------------------------------------------------------------------
# symbol alphabets


@dataclass(frozen=True)
class HookParams:
    """Alphabet parameters: m color blocks, block a holding k_a even symbols
    followed by l_a odd symbols.  Symbols are numbered 1..k+l across blocks."""

    m: int
    k: tuple[int, ...]
    l: tuple[int, ...]

    def __post_init__(self):
        k = tuple(int(v) for v in self.k)
        l = tuple(int(v) for v in self.l)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "l", l)
        if self.m < 1 or len(k) != self.m or len(l) != self.m:
            raise ValueError("k and l must each have one entry per component")
        if any(v < 0 for v in k + l):
            raise ValueError("k and l entries must be nonnegative")

    @classmethod
    def default(cls, m: int, n: int) -> HookParams:
        """k_i = l_i = n for every color; every shape is hook-admissible."""
        return cls(m, (n,) * m, (n,) * m)

    @classmethod
    def parse(cls, text: str) -> HookParams:
        pairs = []
        for tok in text.strip().split(","):
            a, _, b = tok.partition("|")
            pairs.append((int(a), int(b)))
        return cls(len(pairs), tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    def __str__(self) -> str:
        return ",".join(f"{a}|{b}" for a, b in zip(self.k, self.l))

    @property
    def total_k(self) -> int:
        return sum(self.k)

    @property
    def total_l(self) -> int:
        return sum(self.l)

    @property
    def nsymbols(self) -> int:
        return self.total_k + self.total_l

    @property
    def boundaries(self) -> tuple[int, ...]:
        """d_0..d_m with d_a = d_(a-1) + k_a + l_a."""
        d = [0]
        for a in range(self.m):
            d.append(d[-1] + self.k[a] + self.l[a])
        return tuple(d)

    def color(self, symbol: int) -> int:
        self._check_symbol(symbol)
        d = self.boundaries
        for a in range(1, self.m + 1):
            if symbol <= d[a]:
                return a
        raise AssertionError("unreachable")

    def parity(self, symbol: int) -> int:
        """0 for even (an x variable), 1 for odd (a y variable)."""
        self._check_symbol(symbol)
        d = self.boundaries
        a = self.color(symbol)
        return 0 if symbol <= d[a - 1] + self.k[a - 1] else 1

    def _check_symbol(self, symbol: int) -> None:
        if not 1 <= symbol <= self.nsymbols:
            raise ValueError(f"symbol {symbol} outside 1..{self.nsymbols}")

    def symbols(self) -> range:
        return range(1, self.nsymbols + 1)

    def symbols_of_color(self, a: int) -> range:
        d = self.boundaries
        return range(d[a - 1] + 1, d[a] + 1)

    def var_name(self, symbol: int) -> str:
        """Global variable name: j-th even symbol is xj, j-th odd symbol yj."""
        p = self.parity(symbol)
        rank = sum(
            1 for s in range(1, symbol + 1) if self.parity(s) == p
        )
        return f"{'x' if p == 0 else 'y'}{rank}"

    def dotted_name(self, symbol: int) -> str:
        """Per-color name: third odd symbol of color 2 prints as y3.2."""
        a = self.color(symbol)
        p = self.parity(symbol)
        d = self.boundaries
        base = d[a - 1] if p == 0 else d[a - 1] + self.k[a - 1]
        return f"{'x' if p == 0 else 'y'}{symbol - base}.{a}"

    def symbol_from_dotted(self, name: str) -> int:
        head, _, color = name.partition(".")
        if not color or head[0] not in "xy":
            raise ValueError(f"bad symbol name {name!r}")
        a = int(color)
        idx = int(head[1:])
        if not 1 <= a <= self.m:
            raise ValueError(f"color {a} outside 1..{self.m}")
        d = self.boundaries
        if head[0] == "x":
            if not 1 <= idx <= self.k[a - 1]:
                raise ValueError(f"no symbol {name!r}")
            return d[a - 1] + idx
        if not 1 <= idx <= self.l[a - 1]:
            raise ValueError(f"no symbol {name!r}")
        return d[a - 1] + self.k[a - 1] + idx

    def universe(self) -> Universe:
        return _universe_of(self)


@lru_cache(maxsize=None)
def _universe_of(params: HookParams) -> Universe:
    return Universe(params.m, tuple(params.var_name(s) for s in params.symbols()))


def is_hook(shape: Multipartition, params: HookParams) -> bool:
    """Componentwise hook test: part k_c + 1 of component c must be <= l_c."""
    if shape.m != params.m:
        raise ValueError("shape and params disagree on the number of components")
    return all(
        shape.component(c).part(params.k[c - 1] + 1) <= params.l[c - 1]
        for c in range(1, params.m + 1)
    )


# ---------------------------------------------------------------------------
# tableaux


def _rows_str(rows: tuple[tuple, ...], render) -> str:
    return ",".join("(" + ",".join(render(v) for v in row) + ")" for row in rows)


@dataclass(frozen=True)
class StandardTableau:
    shape: Multipartition
    rows: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(tuple(r) for r in comp) for comp in self.rows)
        object.__setattr__(self, "rows", rows)
        n = self.shape.size
        if len(rows) != self.shape.m:
            raise ValueError("one row block per component required")
        seen = []
        for c in range(1, self.shape.m + 1):
            comp = self.rows[c - 1]
            part = self.shape.component(c).parts
            if tuple(len(r) for r in comp) != part:
                raise ValueError("rows do not match the shape")
            for r, row in enumerate(comp):
                for j, v in enumerate(row):
                    if j + 1 < len(row) and row[j + 1] <= v:
                        raise ValueError("rows must strictly increase")
                    if r + 1 < len(comp) and j < len(comp[r + 1]) and comp[r + 1][j] <= v:
                        raise ValueError("columns must strictly increase")
                    seen.append(v)
        if sorted(seen) != list(range(1, n + 1)):
            raise ValueError("entries must be exactly 1..n")

    @property
    def n(self) -> int:
        return self.shape.size

    def box_of(self, entry: int) -> tuple[int, int, int]:
        """(row, col, component) of an entry, 1-based."""
        for c, comp in enumerate(self.rows, start=1):
            for r, row in enumerate(comp, start=1):
                for j, v in enumerate(row, start=1):
                    if v == entry:
                        return (r, j, c)
        raise KeyError(entry)

    def component_of(self, entry: int) -> int:
        return self.box_of(entry)[2]

    def __str__(self) -> str:
        return ";".join(
            _rows_str(comp, str) if comp else "-" for comp in self.rows
        )


@dataclass(frozen=True)
class HookTableau:
    shape: Multipartition
    params: HookParams
    rows: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(tuple(r) for r in comp) for comp in self.rows)
        object.__setattr__(self, "rows", rows)
        validate_hook_tableau(self.shape, self.params, rows)

    def symbol_at(self, r: int, col: int, c: int) -> int:
        return self.rows[c - 1][r - 1][col - 1]

    def sort_key(self):
        return self.rows

    def __str__(self) -> str:
        p = self.params
        return ";".join(
            _rows_str(comp, lambda s: p.var_name(s)) if comp else "-"
            for comp in self.rows
        )


def validate_hook_tableau(shape, params, rows) -> None:
    """Raise unless the filling is semistandard for the hook alphabet.

    Per component: only symbols of that color; rows and columns weakly
    increase; equal horizontal neighbours must be even, equal vertical
    neighbours must be odd.
    """
    if shape.m != params.m:
        raise ValueError("shape and params disagree on the number of components")
    if len(rows) != shape.m:
        raise ValueError("one row block per component required")
    for c in range(1, shape.m + 1):
        comp = rows[c - 1]
        part = shape.component(c).parts
        if tuple(len(r) for r in comp) != part:
            raise ValueError("rows do not match the shape")
        for r, row in enumerate(comp):
            for j, v in enumerate(row):
                if params.color(v) != c:
                    raise ValueError(f"symbol {v} has the wrong color for component {c}")
                if j + 1 < len(row):
                    nxt = row[j + 1]
                    if nxt < v or (nxt == v and params.parity(v) == 1):
                        raise ValueError("row condition violated")
                if r + 1 < len(comp) and j < len(comp[r + 1]):
                    below = comp[r + 1][j]
                    if below < v or (below == v and params.parity(v) == 0):
                        raise ValueError("column condition violated")


def standard_tableaux(shape: Multipartition) -> list[StandardTableau]:
    """All standard tableaux of the shape; the count is the dimension d."""
    n = shape.size

    # place entries 1..n forward; a box is legal once its left and upper
    # neighbours are already filled, which keeps rows and columns increasing
    def forward(partial: list[list[list[int]]], entry: int, out: list) -> None:
        if entry > n:
            rows = tuple(tuple(tuple(r) for r in comp) for comp in partial)
            out.append(StandardTableau(shape, rows))
            return
        for ci in range(shape.m):
            target = shape.component(ci + 1).parts
            comp = partial[ci]
            for r in range(len(target)):
                cur = len(comp[r])
                if cur >= target[r]:
                    continue
                if r > 0 and len(comp[r - 1]) <= cur:
                    continue
                comp[r].append(entry)
                forward(partial, entry + 1, out)
                comp[r].pop()

    seed = [[[] for _ in shape.component(c + 1).parts] for c in range(shape.m)]
    out: list[StandardTableau] = []
    forward(seed, 1, out)
    out.sort(key=lambda t: t.rows)
    return out


def dimension(shape: Multipartition) -> int:
    return len(standard_tableaux(shape))


def hook_tableaux(shape: Multipartition, params: HookParams) -> list[HookTableau]:
    """All semistandard hook fillings; empty exactly for non-hook shapes."""
    if shape.m != params.m:
        raise ValueError("shape and params disagree on the number of components")

    def component_fillings(part: tuple[int, ...], symbols: range) -> list:
        boxes = [(r, j) for r, p in enumerate(part) for j in range(p)]
        rows = [[0] * p for p in part]
        out = []

        def place(i: int) -> None:
            if i == len(boxes):
                out.append(tuple(tuple(row) for row in rows))
                return
            r, j = boxes[i]
            for v in symbols:
                if j > 0:
                    left = rows[r][j - 1]
                    if v < left or (v == left and params.parity(v) == 1):
                        continue
                if r > 0 and j < len(rows[r - 1]):
                    up = rows[r - 1][j]
                    if v < up or (v == up and params.parity(v) == 0):
                        continue
                rows[r][j] = v
                place(i + 1)
            rows[r][j] = 0

        place(0)
        return out

    per_comp = [
        component_fillings(shape.component(c).parts, params.symbols_of_color(c))
        for c in range(1, shape.m + 1)
    ]
    out = [
        HookTableau(shape, params, tuple(combo)) for combo in product(*per_comp)
    ]
    out.sort(key=HookTableau.sort_key)
    return out


@dataclass(frozen=True)
class SuperstandardTableau:
    """The canonical filling of mu with 1..n, row by row through components.

    segments lists (start entry, length, component index) per nonempty row.
    """

    shape: Multipartition
    segments: tuple[tuple[int, int, int], ...]

    def entry_rows(self) -> list[tuple[int, ...]]:
        return [
            tuple(range(start, start + length)) for start, length, _ in self.segments
        ]

    def component_of(self, entry: int) -> int:
        for start, length, comp in self.segments:
            if start <= entry < start + length:
                return comp
        raise KeyError(entry)


def superstandard(mu: Multipartition) -> SuperstandardTableau:
    segments = []
    nxt = 1
    for comp, _row, part in mu.rows():
        segments.append((nxt, part, comp))
        nxt += part
    return SuperstandardTableau(mu, tuple(segments))


@lru_cache(maxsize=None)
def _cached_hook_tableaux(shape: Multipartition, params: HookParams):
    return tuple(hook_tableaux(shape, params))


@lru_cache(maxsize=None)
def _cached_standard_tableaux(shape: Multipartition):
    return tuple(standard_tableaux(shape))
