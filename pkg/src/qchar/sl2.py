"""Rank-one machinery: q-strings and the expansion E_i of a monomial at a node.

For an ``i``-dominant monomial ``m``, ``E_i(m)`` is ``m`` times the
normalized q-character of the simple rank-one module whose Drinfeld data
is the node-``i`` part of ``m``.  That part is cut into q-strings in
general position; the rank-one simple module is then the tensor product of
the string (evaluation) modules, so ``E_i(m)`` is the product of the string
expansions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanDatum, a_monomial
from .character import QCharacter
from .monomial import ONE, Monomial


@dataclass(frozen=True, order=True)
class QString:
    """Shifts ``start, start+2, ..., start+2(length-1)``."""

    start: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"q-string length must be >= 1, got {self.length}")

    @property
    def end(self) -> int:
        return self.start + 2 * (self.length - 1)

    def shifts(self) -> list[int]:
        return list(range(self.start, self.end + 1, 2))


def in_general_position(a: QString, b: QString) -> bool:
    if (a.start - b.start) % 2:
        return True
    if (a.start <= b.start and b.end <= a.end) or (b.start <= a.start and a.end <= b.end):
        return True
    # same parity, no containment: the union is one string iff they overlap or touch
    return a.end + 2 < b.start or b.end + 2 < a.start


def string_decompose(part: dict[int, int]) -> list[QString]:
    """Cut a multiset of shifts into q-strings in pairwise general position.

    Greedy: repeatedly take the longest string starting at the smallest
    remaining shift.
    """
    left = {s: c for s, c in part.items() if c}
    if any(c < 0 for c in left.values()):
        raise ValueError(f"string decomposition needs positive multiplicities, got {part}")
    out = []
    while left:
        s0 = min(left)
        length = 0
        while left.get(s0 + 2 * length, 0) > 0:
            left[s0 + 2 * length] -= 1
            if not left[s0 + 2 * length]:
                del left[s0 + 2 * length]
            length += 1
        out.append(QString(s0, length))
    for x in range(len(out)):
        for y in range(x + 1, len(out)):
            assert in_general_position(out[x], out[y]), (out[x], out[y])
    return out


def _string_ratios(d: CartanDatum, i: int, st: QString) -> list[Monomial]:
    """``m_j / m_0`` for ``j = 0..l``: successive A-inverses peeling the string from the top."""
    out = [ONE]
    cur = ONE
    for j in range(1, st.length + 1):
        cur = cur / a_monomial(d, i, st.start + 2 * (st.length - j) + 1)
        out.append(cur)
    return out


def string_expansion(d: CartanDatum, i: int, st: QString) -> QCharacter:
    top = Monomial([(d.normalize(i), s, 1) for s in st.shifts()])
    terms = {top * r: 1 for r in _string_ratios(d, i, st)}
    return QCharacter(d, terms, highest=top)


@lru_cache(maxsize=1 << 16)
def _expansion_ratios(d: CartanDatum, i: int, strings: tuple[QString, ...]) -> tuple[tuple[Monomial, int, int], ...]:
    # (ratio, multiplicity, number of A-inverses) for the product over strings
    acc: dict[Monomial, list[int]] = {ONE: [1, 0]}
    for st in strings:
        nxt: dict[Monomial, list[int]] = {}
        for r, (c, depth) in acc.items():
            for j, q in enumerate(_string_ratios(d, i, st)):
                key = r * q
                if key in nxt:
                    nxt[key][0] += c
                else:
                    nxt[key] = [c, depth + j]
        acc = nxt
    items = sorted(acc.items(), key=lambda kv: (kv[1][1], kv[0].items))
    return tuple((r, c, depth) for r, (c, depth) in items)


def expansion_terms(d: CartanDatum, i: int, m: Monomial) -> tuple[tuple[Monomial, int, int], ...]:
    """Terms of ``E_i(m)`` as ``(ratio to m, multiplicity, depth increment)``.

    The first entry is always ``(1, 1, 0)``.
    """
    i = d.normalize(i)
    part = m.part(i)
    if any(e < 0 for e in part.values()):
        raise ValueError(f"{m} is not dominant at node {i}")
    strings = tuple(sorted(string_decompose(part)))
    return _expansion_ratios(d, i, strings)


def i_expansion(d: CartanDatum, i: int, m: Monomial) -> QCharacter:
    terms = {m * r: c for r, c, _ in expansion_terms(d, i, m)}
    return QCharacter(d, terms, highest=m)
