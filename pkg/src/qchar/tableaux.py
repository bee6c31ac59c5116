"""Semistandard tableaux for Kirillov-Reshetikhin modules and the tableaux
sum formula for their q-characters.

A tableau for the descriptor ``(i, k, c)`` has rows ``alpha <= i`` and
columns ``1 <= beta <= k``; entries weakly increase along rows (in beta),
strictly increase down columns (in alpha) and equal ``alpha`` for all but
finitely many cells.  Writing ``T[alpha, beta] = alpha + d[alpha, beta]``,
the deviations ``d`` are nonnegative and weakly increase in both
directions, so only a finite corner next to row ``i`` is ever stored,
column by column (ordered by ``(beta, alpha)``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .cartan import InfiniteA, WindowA
from .character import QCharacter
from .monomial import Monomial


@dataclass(frozen=True)
class KRDescriptor:
    """KR module of node ``i``, level ``k``, spectral string starting at ``q^c``."""

    i: int
    k: int
    c: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"KR level must be >= 1, got {self.k}")


@dataclass(frozen=True)
class Window:
    n: int


@dataclass(frozen=True)
class Depth:
    D: int


@dataclass(frozen=True)
class Tableau:
    desc: KRDescriptor
    deviations: tuple[tuple[tuple[int, int], int], ...] = ()
    window: int | None = field(default=None, compare=True)

    def entry(self, alpha: int, beta: int) -> int:
        for (a, b), d in self.deviations:
            if a == alpha and b == beta:
                return alpha + d
        return alpha

    @property
    def depth(self) -> int:
        return sum(d for _, d in self.deviations)

    def rows(self, lowest: int) -> list[list[int]]:
        """Entries of rows ``lowest..i`` as a list of lists (for display)."""
        return [[self.entry(a, b) for b in range(1, self.desc.k + 1)] for a in range(lowest, self.desc.i + 1)]

    def is_semistandard(self) -> bool:
        i, k = self.desc.i, self.desc.k
        if any(d < 0 for _, d in self.deviations):
            return False
        lowest = min([a for (a, _), _ in self.deviations], default=i) - 1
        for a in range(lowest, i + 1):
            for b in range(1, k + 1):
                if b < k and self.entry(a, b) > self.entry(a, b + 1):
                    return False
                if a < i and self.entry(a, b) >= self.entry(a + 1, b):
                    return False
        if self.window is not None:
            n = self.window
            for (a, _), d in self.deviations:
                if a < i - n or a + d > i + n + 1:
                    return False
        return True


def box_monomial(r: int, s: int) -> Monomial:
    """The box ``[r]`` at ``a q^s``: ``Y[r-1, s+r]^{-1} Y[r, s+r-1]``."""
    return Monomial(((r - 1, s + r, -1), (r, s + r - 1, 1)))


def cell_shift(desc: KRDescriptor, alpha: int, beta: int) -> int:
    return desc.c + desc.i - 1 + 2 * (beta - alpha)


def highest_monomial(desc: KRDescriptor) -> Monomial:
    return Monomial([(desc.i, desc.c + 2 * (b - 1), 1) for b in range(1, desc.k + 1)])


def tableau_monomial(T: Tableau, columns: tuple[int, ...] | None = None) -> Monomial:
    """Product of the boxes of ``T`` (optionally only over the given columns)."""
    desc = T.desc
    i, c = desc.i, desc.c
    cols = range(1, desc.k + 1) if columns is None else columns
    acc: dict[tuple[int, int], int] = {}
    if T.window is not None:
        # finite product of boxes over the window rows, with the variables
        # of nodes i-n-1 and i+n+1 set to 1
        n = T.window
        dev = dict(T.deviations)
        for a in range(i - n, i + 1):
            for b in cols:
                r = a + dev.get((a, b), 0)
                s = c + i - 1 + 2 * (b - a)
                if r - 1 >= i - n:
                    acc[(r - 1, s + r)] = acc.get((r - 1, s + r), 0) - 1
                if r <= i + n:
                    acc[(r, s + r - 1)] = acc.get((r, s + r - 1), 0) + 1
        return Monomial._from_dict(acc)
    # the default part telescopes to the highest monomial; each deviating
    # cell contributes box(alpha + d) / box(alpha)
    for b in cols:
        acc[(i, c + 2 * (b - 1))] = 1
    for (a, b), d in T.deviations:
        if columns is not None and b not in columns:
            continue
        s = c + i - 1 + 2 * (b - a)
        r = a + d
        for key, e in (((r - 1, s + r), -1), ((r, s + r - 1), 1), ((a - 1, s + a), 1), ((a, s + a - 1), -1)):
            acc[key] = acc.get(key, 0) + e
    return Monomial._from_dict(acc)


def _tableau_key(T: Tableau):
    return (T.depth, tableau_monomial(T).items, T.deviations)


def _from_rows(desc: KRDescriptor, rows: list[tuple[int, ...]], window: int | None) -> Tableau:
    # rows[0] is row i, rows[1] is row i-1, ...; each row lists d over beta=1..k
    devs = []
    for off, row in enumerate(rows):
        for b, d in enumerate(row, start=1):
            if d:
                devs.append(((desc.i - off, b), d))
    devs.sort(key=lambda x: (x[0][1], x[0][0]))
    return Tableau(desc, tuple(devs), window)


def _window_raw(desc: KRDescriptor, n: int):
    """Yield ``(columns, depth, monomial)`` for every window tableau, unordered.

    Columns are indices into the list of strictly increasing columns that
    is returned first.
    """
    if n < 0:
        raise ValueError("window size must be >= 0")
    i, k = desc.i, desc.k
    columns = list(combinations(range(i - n, i + n + 2), n + 1))
    col_devs = [tuple((r, t - (i - n + r)) for r, t in enumerate(col) if t != i - n + r) for col in columns]
    col_depth = [sum(d for _, d in devs) for devs in col_devs]
    # the monomial factors over columns: precompute each column's share
    share = []
    for b in range(1, k + 1):
        share.append([
            tableau_monomial(Tableau(desc, tuple(((i - n + r, b), d) for r, d in devs), n), columns=(b,)).exps()
            for devs in col_devs
        ])
    after = [[y for y, right in enumerate(columns) if all(a <= b for a, b in zip(left, right))]
             for left in columns]

    def gen():
        stack: list[tuple[int, tuple[int, ...]]] = [(x, (x,)) for x in range(len(columns))]
        while stack:
            last, chosen = stack.pop()
            if len(chosen) < k:
                stack.extend((y, chosen + (y,)) for y in after[last])
                continue
            acc = dict(share[0][chosen[0]])
            for b in range(1, k):
                for key, e in share[b][chosen[b]].items():
                    acc[key] = acc.get(key, 0) + e
            yield chosen, sum(col_depth[x] for x in chosen), Monomial._from_dict(acc)

    return col_devs, gen()


def enumerate_window(desc: KRDescriptor, n: int) -> list[Tableau]:
    """All semistandard fillings of rows ``i-n..i`` with entries in ``[i-n, i+n+1]``,
    in canonical order (depth, then monomial)."""
    col_devs, raw = _window_raw(desc, n)
    i = desc.i
    # deviations of column x placed in column b, already in storage order
    placed = [[tuple(((i - n + r, b), d) for r, d in devs) for devs in col_devs] for b in range(1, desc.k + 1)]
    out = []
    for chosen, depth, m in raw:
        devs = ()
        for b, x in enumerate(chosen):
            devs += placed[b][x]
        out.append((depth, m.items, Tableau(desc, devs, n)))
    out.sort(key=lambda t: t[:2])
    return [T for _, _, T in out]


def enumerate_by_depth(desc: KRDescriptor, D: int) -> list[Tableau]:
    """All tableaux of the infinite family with depth ``<= D``.

    Rows are chosen from row ``i`` downwards; each row of deviations is
    weakly increasing in beta and bounded cellwise by the row above, and
    the remaining depth budget prunes the search.  The first all-zero row
    ends the tableau.
    """
    if D < 0:
        raise ValueError("depth bound must be >= 0")
    k = desc.k
    out = []

    def row_choices(upper: tuple[int, ...], budget: int):
        # weakly increasing tuples r with r[b] <= upper[b] and sum(r) <= budget, r != 0
        def rec(b: int, lo: int, left: int, acc: list[int]):
            if b == k:
                if any(acc):
                    yield tuple(acc)
                return
            for v in range(lo, min(upper[b], left) + 1):
                # later entries are >= v, so they need (k - b) * v of the budget
                if v * (k - b) > left:
                    break
                acc.append(v)
                yield from rec(b + 1, v, left - v, acc)
                acc.pop()

        yield from rec(0, 0, budget, [])

    def extend(rows: list[tuple[int, ...]], upper: tuple[int, ...], budget: int):
        out.append(_from_rows(desc, rows, None))
        for row in row_choices(upper, budget):
            extend(rows + [row], row, budget - sum(row))

    extend([], (D,) * k, D)
    out.sort(key=_tableau_key)
    return out


def kr_qcharacter(desc: KRDescriptor, mode: Window | Depth) -> QCharacter:
    """q-character of the KR module as the sum of its tableau monomials.

    ``Window(n)`` gives the exact character of the restriction to nodes
    ``[i-n, i+n]``; ``Depth(D)`` gives all terms of depth ``<= D`` of the
    full infinite-rank character.
    """
    terms: dict[Monomial, int] = {}
    depths: dict[Monomial, int] = {}
    if isinstance(mode, Window):
        _, raw = _window_raw(desc, mode.n)
        triples = ((depth, m) for _, depth, m in raw)
        cartan = WindowA(desc.i - mode.n, desc.i + mode.n)
        bound = desc.k * (mode.n + 1) ** 2
    elif isinstance(mode, Depth):
        triples = ((T.depth, tableau_monomial(T)) for T in enumerate_by_depth(desc, mode.D))
        cartan = InfiniteA()
        bound = mode.D
    else:
        raise TypeError(f"mode must be Window or Depth, got {mode!r}")
    for depth, m in triples:
        terms[m] = terms.get(m, 0) + 1
        depths[m] = depth
    chi = QCharacter(cartan, terms, bound, highest_monomial(desc))
    chi._depth.update(depths)
    return chi

