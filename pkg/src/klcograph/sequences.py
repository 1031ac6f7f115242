"""Non-increasing integer sequences and the bottom-up colouring calculus.

Two engines compute the minimum-independent-parts sequence of a cograph:
a plain-array traversal of the cotree, and a run-length-encoded variant on
the binary pseudocotree that always merges the smaller child's sequence
into the larger one.  Both are kept and cross-checked by the tests.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .cotree import AnyCotree, Cotree, CotreeNode, Pseudocotree, binarize, postorder
from .graphs import Graph, VertexSet, is_clique, is_independent_set


class PartitionSequence:
    """Finite non-increasing sequence of positive integers."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[int] = ()) -> None:
        es = tuple(int(e) for e in entries)
        for i, e in enumerate(es):
            if e < 1:
                raise ValueError(f"entry {e} is not positive")
            if i and es[i - 1] < e:
                raise ValueError("entries must be non-increasing")
        self._entries = es

    @classmethod
    def constant(cls, value: int, count: int) -> "PartitionSequence":
        """The sequence of ``count`` copies of ``value``."""
        return cls((value,) * count)

    @classmethod
    def from_runs(cls, runs: Iterable[tuple[int, int]]) -> "PartitionSequence":
        entries: list[int] = []
        for value, mult in runs:
            if mult < 1:
                raise ValueError(f"run multiplicity {mult} is not positive")
            entries.extend([value] * mult)
        return cls(entries)

    @classmethod
    def from_text(cls, text: str) -> "PartitionSequence":
        """Parse ``3,3,1`` or run-length ``3^2,1``."""
        text = text.strip()
        if not text:
            return cls()
        runs = []
        for part in text.split(","):
            part = part.strip()
            if "^" in part:
                value, mult = part.split("^", 1)
                runs.append((int(value), int(mult)))
            else:
                runs.append((int(part), 1))
        return cls.from_runs(runs)

    @property
    def entries(self) -> tuple[int, ...]:
        return self._entries

    @property
    def runs(self) -> tuple[tuple[int, int], ...]:
        """Run-length form: (value, multiplicity) with strictly decreasing values."""
        out: list[tuple[int, int]] = []
        for e in self._entries:
            if out and out[-1][0] == e:
                out[-1] = (e, out[-1][1] + 1)
            else:
                out.append((e, 1))
        return tuple(out)

    @property
    def total(self) -> int:
        return sum(self._entries)

    def to_text(self) -> str:
        return ",".join(str(e) for e in self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __getitem__(self, i: int) -> int:
        return self._entries[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PartitionSequence):
            return self._entries == other._entries
        if isinstance(other, tuple):
            return self._entries == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"PartitionSequence({self._entries})"


def entrywise_add(a: PartitionSequence, b: PartitionSequence) -> PartitionSequence:
    """Positional sum; the shorter sequence is zero-padded."""
    ea, eb = a.entries, b.entries
    if len(ea) < len(eb):
        ea, eb = eb, ea
    return PartitionSequence(
        tuple(x + y for x, y in zip(ea, eb)) + ea[len(eb):]
    )


def star_merge(a: PartitionSequence, b: PartitionSequence) -> PartitionSequence:
    """Multiset union sorted from largest to smallest."""
    return PartitionSequence(sorted(a.entries + b.entries, reverse=True))


def conjugate(s: PartitionSequence) -> PartitionSequence:
    """Reflection of the Ferrers diagram along the main diagonal."""
    es = s.entries
    if not es:
        return PartitionSequence()
    out = [0] * es[0]
    for e in es:
        for j in range(e):
            out[j] += 1
    return PartitionSequence(out)


def kappa_at(s: PartitionSequence, l: int) -> int:
    """Entry l, with the convention that entries beyond the length are 0."""
    if l < 0:
        raise ValueError("index must be a natural number")
    return s[l] if l < len(s) else 0


def is_kl_colourable(s: PartitionSequence, k: int, l: int) -> bool:
    """Decide (k,l)-colourability from the graph's kappa sequence."""
    return kappa_at(s, l) <= k


def bichromatic_number(s: PartitionSequence) -> int:
    """Least r such that every split k+l = r admits a colouring."""
    if not len(s):
        return 0  # the empty graph needs no parts at all
    return max(s[l] + l for l in range(len(s)))


def cochromatic_number(s: PartitionSequence) -> int:
    """Least r such that some split k+l = r admits a colouring."""
    if not len(s):
        return 0  # the empty graph needs no parts at all
    return min(kappa_at(s, l) + l for l in range(len(s) + 1))


# --- bottom-up computation on trees ---------------------------------------


def kappa_hat_naive(t: AnyCotree) -> PartitionSequence:
    """Plain-array traversal: concatenate-and-sort at 0-nodes, add at 1-nodes."""
    return PartitionSequence(_naive_values(t.root, swap=False))


def lambda_hat_naive(t: AnyCotree) -> PartitionSequence:
    """Same traversal with the two operators swapped."""
    return PartitionSequence(_naive_values(t.root, swap=True))


def _naive_values(root: CotreeNode, swap: bool) -> list[int]:
    vals: dict[CotreeNode, list[int]] = {}
    for node in postorder(root):
        if node.is_leaf:
            vals[node] = [1]
            continue
        parts = [vals.pop(c) for c in node.children]
        star = (node.label == 0) != swap
        if star:
            merged: list[int] = []
            for part in parts:
                merged += part
            merged.sort(reverse=True)
            vals[node] = merged
        else:
            acc = parts[0]
            for part in parts[1:]:
                if len(part) > len(acc):
                    acc, part = part, acc
                for i, e in enumerate(part):
                    acc[i] += e
            vals[node] = acc
    return vals[root]


def kappa_hat_annotated(
    t: Cotree,
) -> tuple[PartitionSequence, dict[CotreeNode, PartitionSequence]]:
    """Kappa sequence plus the per-node sequences the certificate search needs."""
    ann: dict[CotreeNode, PartitionSequence] = {}
    vals: dict[CotreeNode, list[int]] = {}
    for node in postorder(t.root):
        if node.is_leaf:
            vals[node] = [1]
        elif node.label == 0:
            merged: list[int] = []
            for c in node.children:
                merged += vals[c]
            merged.sort(reverse=True)
            vals[node] = merged
        else:
            acc: list[int] = []
            for c in node.children:
                part = vals[c]
                if len(part) > len(acc):
                    acc, part = list(part), acc
                else:
                    acc = list(acc)
                for i, e in enumerate(part):
                    acc[i] += e
            vals[node] = acc
        ann[node] = PartitionSequence(vals[node])
    return ann[t.root], ann


# Run-length lists are [value, count] pairs with strictly decreasing values.


def _rle_star_into(big: list[list[int]], small: list[list[int]]) -> None:
    """Merge small's runs into big as a multiset (binary search + insert)."""
    for value, count in small:
        i = bisect_left(big, -value, key=lambda r: -r[0])
        if i < len(big) and big[i][0] == value:
            big[i][1] += count
        else:
            big.insert(i, [value, count])


def _rle_add_into(big: list[list[int]], small: list[list[int]]) -> None:
    """Entrywise-add small into big's prefix, splitting the straddling run.

    Run boundaries of either operand force a strict decrease in the sum, so
    no coalescing is needed.
    """
    new: list[list[int]] = []
    bi = 0
    b_off = 0  # entries of big[bi] already consumed
    for s_value, s_count in small:
        while s_count:
            if bi < len(big):
                b_value, b_count = big[bi]
                take = min(s_count, b_count - b_off)
                new.append([b_value + s_value, take])
                s_count -= take
                b_off += take
                if b_off == big[bi][1]:
                    bi += 1
                    b_off = 0
            else:
                new.append([s_value, s_count])
                s_count = 0
    if b_off:
        big[bi][1] -= b_off
    big[:bi] = new


def _fast_rle(t: Pseudocotree, swap: bool) -> list[list[int]]:
    results: dict[CotreeNode, list[list[int]]] = {}
    for node in postorder(t.root):
        if node.is_leaf:
            results[node] = [[1, 1]]
            continue
        c1, c2 = node.children
        r1, r2 = results.pop(c1), results.pop(c2)
        if c1.size >= c2.size:
            big, small = r1, r2
        else:
            big, small = r2, r1
        if (node.label == 0) != swap:
            _rle_star_into(big, small)
        else:
            _rle_add_into(big, small)
        results[node] = big
    return results[t.root]


def kappa_hat_fast(t: AnyCotree) -> PartitionSequence:
    """Run-length variant on the pseudocotree, smaller child merged into larger."""
    pt = t if isinstance(t, Pseudocotree) else binarize(t)
    return PartitionSequence.from_runs(
        (v, c) for v, c in _fast_rle(pt, swap=False)
    )


def lambda_hat_fast(t: AnyCotree) -> PartitionSequence:
    pt = t if isinstance(t, Pseudocotree) else binarize(t)
    return PartitionSequence.from_runs(
        (v, c) for v, c in _fast_rle(pt, swap=True)
    )


def kappa_hat(t: AnyCotree) -> PartitionSequence:
    """Kappa sequence of the represented cograph; first entry is its chromatic
    number, length its clique cover number."""
    return kappa_hat_fast(t)


def lambda_hat(t: AnyCotree) -> PartitionSequence:
    """Lambda sequence, computed by the operator-swapped traversal."""
    return lambda_hat_fast(t)


# --- explicit colourings ---------------------------------------------------


@dataclass(frozen=True)
class KLColouring:
    """Partition of the vertices into independent parts and clique parts."""

    independent_parts: tuple[VertexSet, ...]
    clique_parts: tuple[VertexSet, ...]

    def parts(self) -> tuple[VertexSet, ...]:
        return self.independent_parts + self.clique_parts


def validate_colouring(
    g: Graph, colouring: KLColouring, k: int | None = None, l: int | None = None
) -> bool:
    """Check disjointness, coverage and part validity (and part counts if given)."""
    parts = colouring.parts()
    if sum(len(p) for p in parts) != g.n:
        return False
    union: set[int] = set()
    for p in parts:
        union |= p
    if union != set(range(g.n)):
        return False
    if k is not None and len(colouring.independent_parts) > k:
        return False
    if l is not None and len(colouring.clique_parts) > l:
        return False
    return all(is_independent_set(g, p) for p in colouring.independent_parts) and all(
        is_clique(g, p) for p in colouring.clique_parts
    )


def extract_colouring(t: AnyCotree, k: int, l: int) -> KLColouring:
    """Explicit (k,l)-colouring read off the Ferrers diagram representation."""
    from .ferrers import build_ferrers, read_colouring

    if not is_kl_colourable(kappa_hat(t), k, l):
        raise ValueError(f"graph is not ({k},{l})-colourable")
    return read_colouring(build_ferrers(t), k, l)
