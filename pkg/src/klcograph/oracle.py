"""Exhaustive ground truth for small graphs.

Everything here works on vertex bitmasks of a fixed parent graph, with
per-invocation memo tables.  Results are exact; exceeding the vertex budget
is an error, never an approximation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graphs import Graph, complement
from .sequences import PartitionSequence


class BudgetExceededError(ValueError):
    """Raised when a graph is too large for exhaustive computation."""


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 12
    max_cliques_enumerated: int = 1_000_000

    def __post_init__(self) -> None:
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be at least 1")


DEFAULT_BUDGET = OracleBudget()


def _check_budget(g: Graph, budget: OracleBudget) -> None:
    if g.n > budget.max_vertices:
        raise BudgetExceededError(
            f"graph has {g.n} vertices, budget allows {budget.max_vertices}"
        )


def _adj_masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def _co_masks(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    return [full & ~m & ~(1 << v) for v, m in enumerate(_adj_masks(g))]


def _maximal_cliques(
    adj: list[int], mask: int, limit: int | None = None
) -> Iterator[int]:
    """Bron-Kerbosch with pivoting, restricted to the vertices in ``mask``."""
    count = 0

    def bk(r: int, p: int, x: int) -> Iterator[int]:
        nonlocal count
        if p == 0 and x == 0:
            count += 1
            if limit is not None and count > limit:
                raise BudgetExceededError("maximal clique enumeration limit hit")
            yield r
            return
        # pivot: vertex of p|x with most neighbours in p
        pivot, best = -1, -1
        px = p | x
        while px:
            v = (px & -px).bit_length() - 1
            px &= px - 1
            deg = bin(p & adj[v]).count("1")
            if deg > best:
                pivot, best = v, deg
        cand = p & ~adj[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            bit = 1 << v
            yield from bk(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit
    if mask == 0:
        return
    yield from bk(0, mask, 0)


class _Engine:
    """Memoized exact computations over one fixed graph."""

    def __init__(self, g: Graph, budget: OracleBudget) -> None:
        _check_budget(g, budget)
        self.n = g.n
        self.budget = budget
        self.adj = _adj_masks(g)
        self.co = _co_masks(g)
        self._chi: dict[int, int] = {0: 0}
        self._theta: dict[int, int] = {0: 0}
        self._kappa: dict[tuple[int, int], int] = {}
        self._lamb: dict[tuple[int, int], int] = {}

    def chi(self, mask: int) -> int:
        """Chromatic number of the induced subgraph, by removing maximal
        independent sets that contain the lowest vertex."""
        known = self._chi.get(mask)
        if known is not None:
            return known
        low = mask & -mask
        best = self.n + 1
        for ind in _maximal_cliques(
            self.co, mask, self.budget.max_cliques_enumerated
        ):
            if ind & low:
                best = min(best, 1 + self.chi(mask & ~ind))
        self._chi[mask] = best
        return best

    def kappa(self, mask: int, l: int) -> int:
        if mask == 0:
            return 0
        if l == 0:
            return self.chi(mask)
        known = self._kappa.get((mask, l))
        if known is not None:
            return known
        best = self.kappa(mask, l - 1)
        for cl in _maximal_cliques(
            self.adj, mask, self.budget.max_cliques_enumerated
        ):
            best = min(best, self.kappa(mask & ~cl, l - 1))
        self._kappa[(mask, l)] = best
        return best

    def theta(self, mask: int) -> int:
        """Clique cover number of the induced subgraph (chromatic number of
        its complement), by removing maximal cliques."""
        known = self._theta.get(mask)
        if known is not None:
            return known
        low = mask & -mask
        best = self.n + 1
        for cl in _maximal_cliques(
            self.adj, mask, self.budget.max_cliques_enumerated
        ):
            if cl & low:
                best = min(best, 1 + self.theta(mask & ~cl))
        self._theta[mask] = best
        return best

    def lamb(self, mask: int, k: int) -> int:
        """Minimum clique parts, by direct removal of maximal independent sets."""
        if mask == 0:
            return 0
        if k == 0:
            return self.theta(mask)
        known = self._lamb.get((mask, k))
        if known is not None:
            return known
        best = self.lamb(mask, k - 1)
        for ind in _maximal_cliques(
            self.co, mask, self.budget.max_cliques_enumerated
        ):
            best = min(best, self.lamb(mask & ~ind, k - 1))
        self._lamb[(mask, k)] = best
        return best


def chromatic_number_exact(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    if g.n == 0:
        return 0
    return _Engine(g, budget).chi((1 << g.n) - 1)


def kappa_oracle(g: Graph, l: int, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    if g.n == 0:
        return 0
    return _Engine(g, budget).kappa((1 << g.n) - 1, l)


def kappa_hat_oracle(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET
) -> PartitionSequence:
    if g.n == 0:
        return PartitionSequence()
    eng = _Engine(g, budget)
    full = (1 << g.n) - 1
    out = []
    l = 0
    while True:
        k = eng.kappa(full, l)
        if k == 0:
            break
        out.append(k)
        l += 1
    return PartitionSequence(out)


def lambda_hat_oracle(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET
) -> PartitionSequence:
    """Lambda sequence via independent-set removal, cross-checked against the
    kappa sequence of the complement."""
    if g.n == 0:
        return PartitionSequence()
    eng = _Engine(g, budget)
    full = (1 << g.n) - 1
    out = []
    k = 0
    while True:
        l = eng.lamb(full, k)
        if l == 0:
            break
        out.append(l)
        k += 1
    direct = PartitionSequence(out)
    via_complement = kappa_hat_oracle(complement(g), budget)
    if direct != via_complement:  # pragma: no cover - internal consistency
        raise AssertionError(
            f"lambda computation paths disagree: {direct} vs {via_complement}"
        )
    return direct


def is_kl_colourable_oracle(
    g: Graph, k: int, l: int, budget: OracleBudget = DEFAULT_BUDGET
) -> bool:
    return kappa_oracle(g, l, budget) <= k


def is_kl_colourable_exhaustive(g: Graph, k: int, l: int) -> bool:
    """Independent second route: raw search over part assignments (n <= 8)."""
    if g.n > 8:
        raise BudgetExceededError("exhaustive partition search limited to n <= 8")
    adj = _adj_masks(g)
    ind_parts = [0] * k
    cl_parts = [0] * l

    def place(v: int) -> bool:
        if v == g.n:
            return True
        bit = 1 << v
        seen_empty = False
        for i in range(k):
            if ind_parts[i] == 0 and seen_empty:
                continue
            if ind_parts[i] == 0:
                seen_empty = True
            if ind_parts[i] & adj[v]:
                continue
            ind_parts[i] |= bit
            if place(v + 1):
                return True
            ind_parts[i] &= ~bit
        seen_empty = False
        for j in range(l):
            if cl_parts[j] == 0 and seen_empty:
                continue
            if cl_parts[j] == 0:
                seen_empty = True
            if cl_parts[j] & ~adj[v]:
                continue
            cl_parts[j] |= bit
            if place(v + 1):
                return True
            cl_parts[j] &= ~bit
        return False

    return place(0)


# --- recursive box-cograph membership --------------------------------------


def _components_mask(adj: list[int], mask: int) -> list[int]:
    comps = []
    todo = mask
    while todo:
        start = todo & -todo
        comp = start
        frontier = start
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & todo & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        todo &= ~comp
    return comps


def box_cograph_dimension(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[int, int] | None:
    """(chromatic number, clique cover number) if g is a box cograph, else None.

    Membership follows the recursive definition: K1 is in; the class is closed
    under complement; and under disjoint unions of two members with equal
    chromatic number.
    """
    if g.n == 0:
        return None
    _check_budget(g, budget)
    eng = _Engine(g, budget)
    adjs = (eng.adj, eng.co)
    full = (1 << g.n) - 1

    def chi_side(side: int, mask: int) -> int:
        # chromatic number of the induced subgraph of g (side 0) or of its
        # complement (side 1); the latter equals the clique cover number of g
        return eng.chi(mask) if side == 0 else eng.theta(mask)

    memo: dict[tuple[int, int], bool] = {}

    def member(side: int, mask: int) -> bool:
        if mask & (mask - 1) == 0:
            return True  # single vertex
        key = (side, mask)
        known = memo.get(key)
        if known is not None:
            return known
        comps = _components_mask(adjs[side], mask)
        if len(comps) > 1:
            result = False
            # binary splits of the component set into two nonempty groups
            for split in range(0, 1 << (len(comps) - 1)):
                a = comps[0]
                b = 0
                for i in range(1, len(comps)):
                    if (split >> (i - 1)) & 1:
                        a |= comps[i]
                    else:
                        b |= comps[i]
                if b == 0:
                    continue
                if chi_side(side, a) != chi_side(side, b):
                    continue
                if member(side, a) and member(side, b):
                    result = True
                    break
        else:
            other = 1 - side
            if len(_components_mask(adjs[other], mask)) > 1:
                result = member(other, mask)
            else:
                result = False  # connected in both: contains a P4
        memo[key] = result
        return result

    if not member(0, full):
        return None
    return (eng.chi(full), eng.theta(full))


def is_box_cograph_oracle(
    g: Graph, k: int, l: int, budget: OracleBudget = DEFAULT_BUDGET
) -> bool:
    """True iff g is a box cograph of dimension k times l."""
    dim = box_cograph_dimension(g, budget)
    return dim == (k, l)
