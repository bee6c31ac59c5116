"""q-characters: finite sums of monomials with integer multiplicities, their
depth relative to a highest monomial, classical characters and folding."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from functools import lru_cache

from .cartan import CartanDatum, CyclicA, a_monomial, simple_root
from .monomial import Monomial, Weight, check_int64, weight_of


class QCharacter:
    """Finite map ``Monomial -> nonzero integer`` over a Cartan datum.

    ``highest`` and ``depth_bound`` are optional metadata: when ``highest``
    is set, depths are measured against it, and ``depth_bound`` records that
    every term of depth ``<= depth_bound`` of the full (possibly infinite)
    character is present.
    """

    __slots__ = ("cartan", "terms", "depth_bound", "highest", "_depth")

    def __init__(
        self,
        cartan: CartanDatum,
        terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = (),
        depth_bound: int | None = None,
        highest: Monomial | None = None,
    ):
        acc: dict[Monomial, int] = {}
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in pairs:
            acc[m] = acc.get(m, 0) + c
        if cartan.is_infinite:
            lo = hi = None
        elif cartan.is_cyclic:
            lo, hi = 0, cartan.n
        else:
            lo, hi = cartan.lo, cartan.hi
        clean = {}
        for m, c in acc.items():
            if c:
                check_int64(c)
                # items are sorted by node, so the ends bound the node range
                if lo is not None and m.items and (m.items[0][0] < lo or m.items[-1][0] > hi):
                    raise ValueError(f"{m} has nodes outside {cartan}")
                clean[m] = c
        self.cartan = cartan
        self.terms: dict[Monomial, int] = clean
        self.depth_bound = depth_bound
        self.highest = highest
        self._depth: dict[Monomial, int | None] = {}

    # -- container protocol ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __contains__(self, m: Monomial) -> bool:
        return m in self.terms

    def __getitem__(self, m: Monomial) -> int:
        return self.terms.get(m, 0)

    def items(self):
        return self.terms.items()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QCharacter):
            return NotImplemented
        return self.cartan == other.cartan and self.terms == other.terms

    def __repr__(self) -> str:
        return f"QCharacter({self.cartan}, {len(self.terms)} terms)"

    def mass(self) -> int:
        return sum(self.terms.values())

    # -- metadata --------------------------------------------------------------

    def depth(self, m: Monomial) -> int | None:
        if self.highest is None:
            return None
        if m not in self._depth:
            self._depth[m] = depth_of(m, self.highest, self.cartan)
        return self._depth[m]

    def sort_key(self, m: Monomial):
        d = self.depth(m)
        return (-1 if d is None else d, m.items)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: self.sort_key(mc[0]))

    def with_terms(self, terms) -> QCharacter:
        return QCharacter(self.cartan, terms, self.depth_bound, self.highest)

    def truncate(self, depth: int) -> QCharacter:
        """Keep only terms of depth ``<= depth``."""
        if self.highest is None:
            raise ValueError("truncation by depth needs a highest monomial")
        keep = {}
        for m, c in self.terms.items():
            dm = self.depth(m)
            if dm is None:
                raise ValueError(f"{m} is not below the highest monomial {self.highest}")
            if dm <= depth:
                keep[m] = c
        bound = depth if self.depth_bound is None else min(depth, self.depth_bound)
        return QCharacter(self.cartan, keep, bound, self.highest)

    # -- arithmetic ------------------------------------------------------------

    def _check_compatible(self, other: QCharacter):
        if self.cartan != other.cartan:
            raise ValueError(f"cannot combine characters over {self.cartan} and {other.cartan}")

    def __add__(self, other: QCharacter) -> QCharacter:
        self._check_compatible(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return QCharacter(self.cartan, acc, _min_bound(self.depth_bound, other.depth_bound),
                          self.highest or other.highest)

    def __neg__(self) -> QCharacter:
        return self.scale(-1)

    def __sub__(self, other: QCharacter) -> QCharacter:
        return self + (-other)

    def scale(self, c: int) -> QCharacter:
        return QCharacter(self.cartan, {m: c * v for m, v in self.terms.items()}, self.depth_bound, self.highest)

    def monomial_map(self, f, cartan: CartanDatum | None = None) -> QCharacter:
        acc: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            fm = f(m)
            acc[fm] = acc.get(fm, 0) + c
        return QCharacter(cartan or self.cartan, acc, self.depth_bound,
                          None if self.highest is None else f(self.highest))


def _min_bound(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


# -- depth --------------------------------------------------------------------


@lru_cache(maxsize=1 << 18)
def a_factorization(m: Monomial, m_plus: Monomial, d: CartanDatum) -> tuple[tuple[int, int, int], ...] | None:
    """Exponents ``x[j, s]`` with ``m_plus / m = prod A[j, s]^x[j, s]``.

    Returns sorted ``(j, s, x)`` triples, or ``None`` when ``m_plus / m`` is
    not an integral product of A-monomials.  Every ``A[j, s]`` contains
    ``Y[j, s+1]`` and nothing at a higher shift, so the system is triangular
    in the shift: the top-shift entries of the remainder fix the top layer
    of exponents, which are peeled off in turn.
    """
    rest = (m_plus / m).exps()
    if not rest:
        return ()
    floor = min(s for _, s in rest) + 1  # lowest shift any A can sit at
    x: dict[tuple[int, int], int] = {}
    while rest:
        top = max(s for _, s in rest)
        if top - 1 < floor:
            return None
        for (j, s), e in [(k, v) for k, v in rest.items() if k[1] == top]:
            if not d.contains(j):
                return None
            key = (d.normalize(j), top - 1)
            x[key] = x.get(key, 0) + e
            for jj, ss, ee in a_monomial(d, j, top - 1).items:
                v = rest.get((jj, ss), 0) - e * ee
                if v:
                    rest[(jj, ss)] = v
                else:
                    rest.pop((jj, ss), None)
    return tuple(sorted((j, s, v) for (j, s), v in x.items() if v))


def depth_of(m: Monomial, m_plus: Monomial, d: CartanDatum) -> int | None:
    """Number of ``A^{-1}`` factors separating ``m`` from ``m_plus``.

    ``None`` when ``m_plus / m`` is not a product of A-monomials with
    nonnegative exponents.
    """
    x = a_factorization(m, m_plus, d)
    if x is None or any(v < 0 for _, _, v in x):
        return None
    return sum(v for _, _, v in x)


def root_content(m: Monomial, m_plus: Monomial, d: CartanDatum) -> dict[int, int] | None:
    """How many ``A[j, .]^{-1}`` factors of each node separate ``m`` from ``m_plus``."""
    x = a_factorization(m, m_plus, d)
    if x is None or any(v < 0 for _, _, v in x):
        return None
    out: dict[int, int] = {}
    for j, _, v in x:
        out[j] = out.get(j, 0) + v
    return out


# -- weights ----------------------------------------------------------------


def affine_weight(m: Monomial, m_plus: Monomial, d: CartanDatum) -> Weight:
    """Weight of ``m`` as ``wt(m_plus) - sum_j c_j alpha_j``.

    Coincides with :func:`weight_of` except for the cyclic datum, where it
    also records the null-root component.
    """
    content = root_content(m, m_plus, d)
    if content is None:
        raise ValueError(f"{m} is not below {m_plus} over {d}")
    w = weight_of(m_plus)
    for j, c in content.items():
        w = w - c * simple_root(d, j)
    return w


def classical_character(chi: QCharacter) -> dict[Weight, int]:
    """Replace every monomial by its weight and collect multiplicities."""
    out: dict[Weight, int] = {}
    cyclic = chi.cartan.is_cyclic
    if cyclic and chi.highest is None:
        raise ValueError("a cyclic character needs a highest monomial to resolve null-root weights")
    for m, c in chi.terms.items():
        w = affine_weight(m, chi.highest, chi.cartan) if cyclic else weight_of(m)
        out[w] = out.get(w, 0) + c
    return {w: c for w, c in sorted(out.items()) if c}


# -- folding ----------------------------------------------------------------


def fold_monomial(m: Monomial, n: int) -> Monomial:
    size = n + 1
    return m.relabel(lambda i: i % size)


def fold_weight(w: Weight, n: int) -> Weight:
    size = n + 1
    return w.relabel(lambda i: i % size)


def fold_qcharacter(chi: QCharacter, n: int) -> QCharacter:
    """Relabel ``Y[i, s] -> Y[i mod (n+1), s]``, summing collisions."""
    if not chi.cartan.is_infinite:
        raise ValueError(f"folding expects a character over InfiniteA, got {chi.cartan}")
    if n < 1:
        raise ValueError("fold needs n >= 1")
    return chi.monomial_map(lambda m: fold_monomial(m, n), CyclicA(n))
