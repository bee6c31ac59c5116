"""Characterization engine: membership in the rings K_i, the unique dominant
monomial check, a Frenkel-Mukhin style generator and greedy decomposition
into simple characters."""

from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass, field

from .cartan import CartanDatum
from .character import QCharacter
from .monomial import Monomial, is_dominant
from .sl2 import expansion_terms


class ContractError(ValueError):
    """A character lacks the metadata an operation needs."""


class GenerationError(RuntimeError):
    """The generator met a monomial it cannot account for."""

    def __init__(self, message: str, monomial: Monomial | None = None, partial: dict | None = None):
        super().__init__(message)
        self.monomial = monomial
        self.partial = partial or {}


class DecompositionError(RuntimeError):
    pass


PASS = "pass"
PASS_WITH_FRONTIER = "pass_with_frontier"
FAIL = "fail"


@dataclass
class Verdict:
    status: str
    residual: QCharacter | None = None
    witness: Monomial | None = None
    node: int | None = None
    reason: str = ""
    nodes: dict[int, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        out = {"verdict": self.status, "reason": self.reason}
        out["node"] = self.node
        out["witness"] = None if self.witness is None else self.witness.to_json()
        out["nodes"] = {str(k): v for k, v in sorted(self.nodes.items())}
        out["residual_terms"] = 0 if self.residual is None else len(self.residual)
        return out


def _require_depths(chi: QCharacter) -> None:
    if chi.highest is None:
        raise ContractError("character has no highest monomial, so depths are undefined")


def _effective_frontier(chi: QCharacter, frontier: float) -> float:
    # beyond the depth bound the character is incomplete and cannot be judged
    if chi.depth_bound is None:
        return frontier
    return min(frontier, chi.depth_bound)


def verify_ki(chi: QCharacter, i: int, frontier: float = float("inf")) -> Verdict:
    """Check that ``chi`` is a sum of ``E_i(m)`` for ``i``-dominant ``m``.

    Repeatedly takes the shallowest remaining monomial (canonical tie-break)
    and subtracts its coefficient times ``E_i`` of it; the terms added are
    all strictly deeper, which guarantees termination.
    """
    _require_depths(chi)
    d = chi.cartan
    i = d.normalize(i)
    limit = _effective_frontier(chi, frontier)
    rem: dict[Monomial, int] = dict(chi.terms)
    depth: dict[Monomial, int] = {}
    heap = []
    for m in rem:
        dm = chi.depth(m)
        if dm is None:
            raise ContractError(f"{m} is not below the highest monomial {chi.highest}")
        depth[m] = dm
        heap.append((dm, m.items, m))
    heapq.heapify(heap)
    while heap:
        dm, _, m = heapq.heappop(heap)
        c = rem.pop(m, 0)
        if not c:
            continue
        if dm > limit:
            rem[m] = c
            residual = QCharacter(d, rem, chi.depth_bound, chi.highest)
            residual._depth.update({x: depth[x] for x in residual})
            return Verdict(PASS_WITH_FRONTIER, residual=residual, node=i)
        if not m.is_dominant_at(i):
            return Verdict(FAIL, witness=m, node=i, reason=f"{m} has coefficient {c} and is not dominant at node {i}")
        for r, mult, inc in expansion_terms(d, i, m)[1:]:
            mm = m * r
            if mm not in depth:
                depth[mm] = dm + inc
                heapq.heappush(heap, (dm + inc, mm.items, mm))
            v = rem.get(mm, 0) - c * mult
            if v:
                rem[mm] = v
            else:
                rem.pop(mm, None)
    return Verdict(PASS, node=i)


def dominant_monomials(chi: QCharacter, max_depth: float | None = None) -> dict[Monomial, int]:
    out = {}
    for m, c in chi.sorted_terms():
        if is_dominant(m) and (max_depth is None or (chi.depth(m) or 0) <= max_depth):
            out[m] = c
    return out


def _verify_nodes(chi: QCharacter) -> list[int]:
    if chi.cartan.is_infinite:
        # a node absent from every monomial is satisfied trivially
        return sorted({i for m in chi for i, _, _ in m.items})
    return chi.cartan.nodes()


def verify_characterization(chi: QCharacter, m_plus: Monomial, frontier: float = float("inf")) -> Verdict:
    """K_i membership at every node plus ``m_plus`` as the only dominant monomial.

    Passes when every node passes, possibly with a frontier; the per-node
    statuses are kept in ``nodes``.
    """
    if chi.highest is None:
        chi = QCharacter(chi.cartan, chi.terms, chi.depth_bound, m_plus)
    elif chi.highest != m_plus:
        raise ContractError(f"character is tagged with highest {chi.highest}, not {m_plus}")
    limit = _effective_frontier(chi, frontier)
    statuses: dict[int, str] = {}
    residual = None
    for i in _verify_nodes(chi):
        v = verify_ki(chi, i, frontier)
        statuses[i] = v.status
        if v.status == FAIL:
            v.nodes = statuses
            return v
        if v.status == PASS_WITH_FRONTIER and residual is None:
            residual = v.residual
    dominants = dominant_monomials(chi, limit)
    if dominants != {m_plus: 1}:
        extra = [m for m in dominants if m != m_plus]
        witness = extra[0] if extra else m_plus
        return Verdict(FAIL, witness=witness, nodes=statuses,
                       reason=f"dominant monomials {[(str(m), c) for m, c in dominants.items()]} != {{{m_plus}: 1}}")
    # frontier residue is reported per node, never judged
    return Verdict(PASS, residual=residual, nodes=statuses)


def fm_generate(d: CartanDatum, m_plus: Monomial, D: int, *, check: bool = True,
                experimental: bool = False) -> QCharacter:
    """Terms of depth ``<= D`` of the character with highest monomial
    ``m_plus`` whose only dominant monomial is ``m_plus``.

    Depth layers are settled in order.  A monomial that is not dominant at
    some node must be fully accounted for by the expansions at that node of
    shallower monomials, which fixes its coefficient; the nodes where it is
    dominant then push its own expansion onto deeper layers.  Disagreement
    between two nodes means no such character exists.
    """
    if not is_dominant(m_plus):
        raise GenerationError(f"highest monomial {m_plus} is not dominant", m_plus)
    if D < 0:
        raise ValueError("depth must be >= 0")
    if d.is_cyclic and not experimental:
        raise GenerationError("generation over a cyclic datum is experimental; pass experimental=True")
    for i, _, _ in m_plus.items:
        if not d.contains(i) or (d.is_cyclic and not 0 <= i <= d.n):
            raise GenerationError(f"node {i} of {m_plus} is not a node of {d}", m_plus)
    chi: dict[Monomial, int] = {}
    depths: dict[Monomial, int] = {}
    layers: dict[int, dict[Monomial, None]] = defaultdict(dict)
    layers[0][m_plus] = None
    contrib: dict[int, dict[Monomial, int]] = defaultdict(dict)
    for level in range(D + 1):
        for m in sorted(layers.pop(level, {}), key=lambda x: x.items):
            neg = m.negative_nodes()
            if m == m_plus:
                value = 1
            elif neg:
                wanted = {j: contrib[j].get(m, 0) for j in neg}
                vals = set(wanted.values())
                if len(vals) > 1:
                    raise GenerationError(
                        f"nodes disagree on the coefficient of {m} at depth {level}: {wanted}", m, chi)
                value = vals.pop()
                if value < 0:
                    raise GenerationError(f"{m} would need negative coefficient {value}", m, chi)
            else:
                value = 0
            for j in neg:
                contrib[j].pop(m, None)
            if value:
                chi[m] = value
                depths[m] = level
            for i in sorted({j for j, _, _ in m.items} - set(neg)):
                r = value - contrib[i].pop(m, 0)
                if not r:
                    continue
                for ratio, mult, inc in expansion_terms(d, i, m)[1:]:
                    if level + inc > D:
                        continue
                    mm = m * ratio
                    contrib[i][mm] = contrib[i].get(mm, 0) + r * mult
                    layers[level + inc][mm] = None
    out = QCharacter(d, chi, D, m_plus)
    out._depth.update(depths)
    if check:
        verdict = verify_characterization(out, m_plus, D)
        if not verdict.ok:
            raise GenerationError(f"generated character fails its characterization: {verdict.reason}",
                                  verdict.witness, chi)
    return out


@dataclass
class Decomposition:
    components: list[tuple[Monomial, int]]
    residual: QCharacter

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)


def decompose_into_simples(chi: QCharacter, D: int | None = None, *, margin: int = 0,
                           experimental: bool = False) -> Decomposition:
    """Peel off generated simple characters headed by the shallowest
    remaining monomial until nothing is left at depth ``<= D - margin``."""
    _require_depths(chi)
    if D is None:
        if chi.depth_bound is None:
            raise ContractError("decomposition needs a depth bound")
        D = chi.depth_bound
    limit = D - margin
    d = chi.cartan
    rem: dict[Monomial, int] = dict(chi.terms)
    probe = QCharacter(d, (), chi.depth_bound, chi.highest)
    for m in rem:
        if probe.depth(m) is None:
            raise ContractError(f"{m} is not below the highest monomial {chi.highest}")
    out: list[tuple[Monomial, int]] = []
    while True:
        live = [(probe.sort_key(m), m) for m, c in rem.items() if c and probe.depth(m) <= limit]
        if not live:
            break
        _, m = min(live)
        c = rem[m]
        if not is_dominant(m):
            raise DecompositionError(f"shallowest remaining monomial {m} (coefficient {c}) is not dominant")
        out.append((m, c))
        g = fm_generate(d, m, limit - probe.depth(m), experimental=experimental)
        for mm, v in g.items():
            x = rem.get(mm, 0) - c * v
            if x:
                rem[mm] = x
            else:
                rem.pop(mm, None)
    residual = QCharacter(d, {m: c for m, c in rem.items() if c}, chi.depth_bound, chi.highest)
    return Decomposition(out, residual)
