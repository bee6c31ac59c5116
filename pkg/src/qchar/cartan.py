"""Type-A Cartan data: the doubly infinite line, finite windows of it, and
its cyclic quotients (the toroidal diagrams)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .monomial import Monomial, Weight


class CartanError(ValueError):
    pass


@dataclass(frozen=True)
class CartanDatum:
    kind: str
    lo: int | None = None
    hi: int | None = None
    n: int | None = None

    def __post_init__(self):
        if self.kind == "window":
            if self.lo is None or self.hi is None or self.lo > self.hi:
                raise CartanError(f"window needs lo <= hi, got ({self.lo}, {self.hi})")
        elif self.kind == "cyclic":
            if self.n is None or self.n < 1:
                raise CartanError(f"cyclic datum needs n >= 1, got {self.n}")
        elif self.kind != "infinite":
            raise CartanError(f"unknown Cartan kind {self.kind!r}")

    # -- node arithmetic -----------------------------------------------------

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    @property
    def is_window(self) -> bool:
        return self.kind == "window"

    @property
    def is_cyclic(self) -> bool:
        return self.kind == "cyclic"

    def normalize(self, i: int) -> int:
        """Canonical representative of node ``i``; raises on window overflow."""
        if self.kind == "cyclic":
            return i % (self.n + 1)
        if self.kind == "window" and not (self.lo <= i <= self.hi):
            raise CartanError(f"node {i} outside window [{self.lo}, {self.hi}]")
        return i

    def contains(self, i: int) -> bool:
        return self.kind != "window" or self.lo <= i <= self.hi

    def nodes(self) -> list[int]:
        if self.kind == "window":
            return list(range(self.lo, self.hi + 1))
        if self.kind == "cyclic":
            return list(range(self.n + 1))
        raise CartanError("the infinite datum has no finite node list")

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        if self.kind == "window":
            return {"kind": "window", "lo": self.lo, "hi": self.hi}
        if self.kind == "cyclic":
            return {"kind": "cyclic", "n": self.n}
        return {"kind": "infinite"}

    @classmethod
    def from_json(cls, data) -> CartanDatum:
        if not isinstance(data, dict) or "kind" not in data:
            raise CartanError(f"bad Cartan datum {data!r}")
        kind = data["kind"]
        if kind == "infinite" and set(data) == {"kind"}:
            return InfiniteA()
        if kind == "window" and set(data) == {"kind", "lo", "hi"}:
            return WindowA(_as_int(data["lo"]), _as_int(data["hi"]))
        if kind == "cyclic" and set(data) == {"kind", "n"}:
            return CyclicA(_as_int(data["n"]))
        raise CartanError(f"bad Cartan datum {data!r}")

    def __str__(self) -> str:
        if self.kind == "window":
            return f"WindowA({self.lo},{self.hi})"
        if self.kind == "cyclic":
            return f"CyclicA({self.n})"
        return "InfiniteA"


def _as_int(x) -> int:
    if type(x) is not int:
        raise CartanError(f"expected an integer, got {x!r}")
    return x


def InfiniteA() -> CartanDatum:
    return CartanDatum("infinite")


def WindowA(lo: int, hi: int) -> CartanDatum:
    return CartanDatum("window", lo=lo, hi=hi)


def CyclicA(n: int) -> CartanDatum:
    return CartanDatum("cyclic", n=n)


def cartan_entry(d: CartanDatum, i: int, j: int) -> int:
    i, j = d.normalize(i), d.normalize(j)
    if i == j:
        return 2
    if d.is_cyclic:
        size = d.n + 1
        if d.n == 1:
            return -2
        return -1 if (i - j) % size in (1, size - 1) else 0
    return -1 if abs(i - j) == 1 else 0


@lru_cache(maxsize=None)
def a_monomial(d: CartanDatum, i: int, s: int) -> Monomial:
    """The monomial ``A[i, s]`` (``A_{i, a q^s}``) for the datum ``d``."""
    i = d.normalize(i)
    if d.is_cyclic:
        if d.n == 1:
            # the two-node torus has a doubled bond, not two single ones
            return Monomial(((i, s - 1, 1), (i, s + 1, 1), ((i + 1) % 2, s, -2)))
        size = d.n + 1
        return Monomial(((i, s - 1, 1), (i, s + 1, 1), ((i + 1) % size, s, -1), ((i - 1) % size, s, -1)))
    factors = [(i, s - 1, 1), (i, s + 1, 1), (i + 1, s, -1), (i - 1, s, -1)]
    if d.is_window:
        factors = [f for f in factors if d.lo <= f[0] <= d.hi]
    return Monomial(factors)


def simple_root(d: CartanDatum, j: int) -> Weight:
    """Simple root ``alpha_j`` in Lambda coordinates.

    For the cyclic datum ``alpha_0`` also carries one null root, so that
    the roots stay linearly independent (``sum_j alpha_j = delta``).
    """
    j = d.normalize(j)
    if d.is_cyclic:
        coeffs = {i: cartan_entry(d, i, j) for i in d.nodes()}
        return Weight(coeffs, 1 if j == 0 else 0)
    coeffs = {i: cartan_entry(d, i, j) for i in (j - 1, j, j + 1) if d.contains(i)}
    return Weight(coeffs)
