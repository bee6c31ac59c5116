"""Laurent monomials in the variables Y[i, s] and weights in the Lambda basis.

A variable ``Y[i, s]`` stands for ``Y_{i, a q^s}`` with a fixed base ``a``;
only the integer shift ``s`` is stored.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping

INT64_MAX = 2**63 - 1


def check_int64(value: int) -> int:
    if value > INT64_MAX or value < -INT64_MAX - 1:
        raise OverflowError(f"integer {value} does not fit in 64 bits")
    return value


class Monomial:
    """Finitely supported map ``(node, shift) -> nonzero exponent``.

    Entries are stored as a sorted tuple of ``(node, shift, exponent)``
    triples, so equality and hashing are structural.
    """

    __slots__ = ("items", "_hash")

    def __init__(self, exps: Mapping[tuple[int, int], int] | Iterable[tuple[int, int, int]] = ()):
        if isinstance(exps, Mapping):
            triples = [(i, s, e) for (i, s), e in exps.items() if e]
        else:
            acc: dict[tuple[int, int], int] = {}
            for i, s, e in exps:
                acc[(i, s)] = acc.get((i, s), 0) + e
            triples = [(i, s, e) for (i, s), e in acc.items() if e]
        for t in triples:
            check_int64(t[2])
        triples.sort()
        self.items: tuple[tuple[int, int, int], ...] = tuple(triples)
        self._hash = hash(self.items)

    @classmethod
    def _from_sorted(cls, triples: tuple[tuple[int, int, int], ...]) -> Monomial:
        m = object.__new__(cls)
        m.items = triples
        m._hash = hash(triples)
        return m

    @classmethod
    def _from_dict(cls, acc: dict[tuple[int, int], int]) -> Monomial:
        triples = [(i, s, e) for (i, s), e in acc.items() if e]
        triples.sort()
        if triples and (max(t[2] for t in triples) > INT64_MAX or min(t[2] for t in triples) < -INT64_MAX - 1):
            for t in triples:
                check_int64(t[2])
        return cls._from_sorted(tuple(triples))

    # -- group law ---------------------------------------------------------

    def exps(self) -> dict[tuple[int, int], int]:
        return {(i, s): e for i, s, e in self.items}

    def __mul__(self, other: Monomial) -> Monomial:
        if not other.items:
            return self
        if not self.items:
            return other
        acc = self.exps()
        for i, s, e in other.items:
            acc[(i, s)] = acc.get((i, s), 0) + e
        return Monomial._from_dict(acc)

    def __truediv__(self, other: Monomial) -> Monomial:
        return combine(self, other, -1)

    def __pow__(self, e: int) -> Monomial:
        if e == 0:
            return ONE
        return Monomial._from_sorted(tuple((i, s, check_int64(x * e)) for i, s, x in self.items))

    def inverse(self) -> Monomial:
        return self**-1

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._hash == other._hash and self.items == other.items

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Monomial) -> bool:
        return self.items < other.items

    def is_one(self) -> bool:
        return not self.items

    # -- queries -----------------------------------------------------------

    def exponent(self, i: int, s: int) -> int:
        for node, shift, e in self.items:
            if node == i and shift == s:
                return e
        return 0

    def nodes(self) -> list[int]:
        return sorted({i for i, _, _ in self.items})

    def part(self, i: int) -> dict[int, int]:
        """Exponents at node ``i``, keyed by shift."""
        return {s: e for node, s, e in self.items if node == i}

    def is_dominant_at(self, i: int) -> bool:
        return all(e > 0 for node, _, e in self.items if node == i)

    def negative_nodes(self) -> list[int]:
        return sorted({i for i, _, e in self.items if e < 0})

    def relabel(self, f) -> Monomial:
        """Apply ``f`` to every node index, merging collisions."""
        acc: dict[tuple[int, int], int] = {}
        for i, s, e in self.items:
            key = (f(i), s)
            acc[key] = acc.get(key, 0) + e
        return Monomial._from_dict(acc)

    def shift(self, t: int) -> Monomial:
        return Monomial._from_sorted(tuple((i, s + t, e) for i, s, e in self.items))

    def translate_nodes(self, t: int) -> Monomial:
        return Monomial._from_sorted(tuple((i + t, s, e) for i, s, e in self.items))

    def restrict(self, keep) -> Monomial:
        """Set every variable whose node fails ``keep`` to 1."""
        return Monomial._from_sorted(tuple(x for x in self.items if keep(x[0])))

    # -- rendering ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"

    def __str__(self) -> str:
        if not self.items:
            return "1"
        return " ".join(f"Y[{i},{s}]" + ("" if e == 1 else f"^{e}") for i, s, e in self.items)

    def latex(self) -> str:
        if not self.items:
            return "1"
        out = []
        for i, s, e in self.items:
            if s == 0:
                arg = "1"
            elif s == 1:
                arg = "q"
            else:
                arg = f"q^{{{s}}}"
            out.append(f"Y_{{{i},{arg}}}" + ("" if e == 1 else f"^{{{e}}}"))
        return "".join(out)

    def to_json(self) -> list[list[int]]:
        return [[i, s, e] for i, s, e in self.items]

    @classmethod
    def from_json(cls, data) -> Monomial:
        if not isinstance(data, list):
            raise ValueError(f"monomial must be a list of [node, s, exp], got {data!r}")
        triples = []
        for t in data:
            if not (isinstance(t, list) and len(t) == 3 and all(type(x) is int for x in t)):
                raise ValueError(f"bad monomial factor {t!r}")
            triples.append(tuple(t))
        return cls(triples)


ONE = Monomial()

_FACTOR = re.compile(r"Y\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\](?:\^\(?(-?\d+)\)?)?")


def parse_monomial(text: str) -> Monomial:
    """Parse ``"Y[0,0] Y[2,4]"``-style text (also ``*``-joined or adjacent)."""
    text = text.strip()
    if text in ("", "1"):
        return ONE
    pos = 0
    triples = []
    for m in _FACTOR.finditer(text):
        gap = text[pos:m.start()].strip()
        if gap not in ("", "*", "·"):
            raise ValueError(f"cannot parse monomial {text!r}")
        triples.append((int(m.group(1)), int(m.group(2)), int(m.group(3) or 1)))
        pos = m.end()
    if not triples or text[pos:].strip():
        raise ValueError(f"cannot parse monomial {text!r}")
    return Monomial(triples)


def Y(i: int, s: int, e: int = 1) -> Monomial:
    return Monomial(((i, s, e),))


def combine(m1: Monomial, m2: Monomial, e: int = 1) -> Monomial:
    """Return ``m1 * m2**e``."""
    if e == 0 or not m2.items:
        return m1
    acc = m1.exps()
    for i, s, x in m2.items:
        acc[(i, s)] = acc.get((i, s), 0) + e * x
    return Monomial._from_dict(acc)


def is_dominant(m: Monomial) -> bool:
    return all(e > 0 for _, _, e in m.items)


class Weight:
    """Integral weight ``sum_i c_i Lambda_i + delta * (null root)``.

    ``delta`` is only nonzero for weights of the cyclic (toroidal) datum,
    where the Lambda coordinates alone cannot see the null root.
    """

    __slots__ = ("coeffs", "delta", "_key")

    def __init__(self, coeffs: Mapping[int, int] | None = None, delta: int = 0):
        c = {i: v for i, v in (coeffs or {}).items() if v}
        self.coeffs: dict[int, int] = dict(sorted(c.items()))
        self.delta = delta
        self._key = (tuple(self.coeffs.items()), delta)

    @classmethod
    def fundamental(cls, i: int) -> Weight:
        return cls({i: 1})

    def __add__(self, other: Weight) -> Weight:
        c = dict(self.coeffs)
        for i, v in other.coeffs.items():
            c[i] = c.get(i, 0) + v
        return Weight(c, self.delta + other.delta)

    def __neg__(self) -> Weight:
        return Weight({i: -v for i, v in self.coeffs.items()}, -self.delta)

    def __sub__(self, other: Weight) -> Weight:
        return self + (-other)

    def __rmul__(self, k: int) -> Weight:
        return Weight({i: k * v for i, v in self.coeffs.items()}, k * self.delta)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Weight) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __lt__(self, other: Weight) -> bool:
        return self._key < other._key

    def relabel(self, f) -> Weight:
        c: dict[int, int] = {}
        for i, v in self.coeffs.items():
            c[f(i)] = c.get(f(i), 0) + v
        return Weight(c, self.delta)

    def __repr__(self) -> str:
        return f"Weight({str(self)!r})"

    def __str__(self) -> str:
        parts = []
        for i, v in self.coeffs.items():
            sign = "-" if v < 0 else "+"
            mag = "" if abs(v) == 1 else f"{abs(v)}"
            parts.append(f"{sign} {mag}L{i}")
        if self.delta:
            v = self.delta
            parts.append(f"{'+' if v > 0 else '-'} {'' if abs(v) == 1 else abs(v)}delta")
        if not parts:
            return "0"
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def to_json(self) -> dict:
        return {"lambda": [[i, v] for i, v in self.coeffs.items()], "delta": self.delta}


def weight_of(m: Monomial) -> Weight:
    """Lambda-coordinates of ``m``: exponents summed over shifts, per node."""
    c: dict[int, int] = {}
    for i, _, e in m.items:
        c[i] = c.get(i, 0) + e
    return Weight(c)
