"""Brute-force exact solvers for the cut constants.

Every oracle enumerates its search space exhaustively, returns an exact
rational optimum and a deterministic certificate: among optimal solutions
the lexicographically smallest serialized set list wins, and 2-cut
certificates are normalized so vertex 0 lies in the first set.  Caps are
arguments; exceeding one raises TooLarge instead of degrading silently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

from .errors import BadK, Disconnected, TooLarge, UnknownProblem
from .graph import Graph, cut_weight, is_connected, vol

DEFAULT_SUBSET_CAP = 20
DEFAULT_PAIR_CAP = 14
DEFAULT_WORK_CAP = 2_000_000


@dataclass(frozen=True)
class CutCertificate:
    kind: str  # subset | set_pair | subpartition | partition
    sets: tuple  # tuple of frozensets
    value: Fraction

    def serialized(self) -> tuple:
        return tuple(tuple(sorted(s)) for s in self.sets)

    def to_json(self) -> str:
        return json.dumps(
            {
                "kind": self.kind,
                "value": str(self.value),
                "sets": [sorted(s) for s in self.sets],
            },
            sort_keys=True,
        )


def _mask_set(mask: int, n: int):
    return frozenset(i for i in range(n) if mask >> i & 1)


def _best(kind, candidates, maximize):
    """candidates: iterable of (value, sets tuple); deterministic tie-break."""
    best = None
    for value, sets in candidates:
        key = tuple(tuple(sorted(s)) for s in sets)
        if (
            best is None
            or (value > best[0] if maximize else value < best[0])
            or (value == best[0] and key < best[2])
        ):
            best = (value, sets, key)
    if best is None:
        return None
    return CutCertificate(kind=kind, sets=best[1], value=best[0])


def _bipartition_candidates(g: Graph, nontrivial: bool):
    """Yield (S, Sc, boundary weight) with vertex 0 in S."""
    n = g.n
    edge_masks = [(1 << u | 1 << v, w) for u, v, w in g.edges]
    for mask in range(1 << (n - 1)):
        smask = (mask << 1) | 1  # vertex 0 always in S
        if nontrivial and smask == (1 << n) - 1:
            continue
        cut = sum(
            (w for em, w in edge_masks if (em & smask) and (em & ~smask)),
            Fraction(0),
        )
        yield _mask_set(smask, n), _mask_set(~smask & ((1 << n) - 1), n), cut


def cheeger(g: Graph, cap: int = DEFAULT_SUBSET_CAP) -> CutCertificate:
    if not is_connected(g):
        raise Disconnected("Cheeger constant needs a connected graph")
    if g.n < 2:
        raise BadK("need at least two vertices")
    if g.n > cap:
        raise TooLarge(f"cheeger oracle capped at n={cap}")

    def gen():
        for s, sc, cut in _bipartition_candidates(g, nontrivial=True):
            yield cut / min(vol(g, s), vol(g, sc)), (s,)

    return _best("subset", gen(), maximize=False)


def maxcut(g: Graph, cap: int = DEFAULT_SUBSET_CAP) -> CutCertificate:
    if g.n < 2:
        raise BadK("need at least two vertices")
    if g.n > cap:
        raise TooLarge(f"maxcut oracle capped at n={cap}")
    volV = vol(g, range(g.n))

    def gen():
        for s, sc, cut in _bipartition_candidates(g, nontrivial=True):
            yield 2 * cut / volV, (s,)

    return _best("subset", gen(), maximize=True)


def mincut(g: Graph, cap: int = DEFAULT_SUBSET_CAP) -> CutCertificate:
    if g.n < 2:
        raise BadK("need at least two vertices")
    if g.n > cap:
        raise TooLarge(f"mincut oracle capped at n={cap}")
    volV = vol(g, range(g.n))

    def gen():
        for s, sc, cut in _bipartition_candidates(g, nontrivial=True):
            yield 2 * cut / volV, (s,)

    return _best("subset", gen(), maximize=False)


def anti_cheeger(g: Graph, cap: int = DEFAULT_SUBSET_CAP) -> CutCertificate:
    if g.n < 2:
        raise BadK("need at least two vertices")
    if g.n > cap:
        raise TooLarge(f"anti-Cheeger oracle capped at n={cap}")

    def gen():
        for s, sc, cut in _bipartition_candidates(g, nontrivial=True):
            yield cut / max(vol(g, s), vol(g, sc)), (s,)

    return _best("subset", gen(), maximize=True)


def _mask_vol(g: Graph):
    """vol lookup for every vertex bitmask, built by peeling the low bit."""
    table = [Fraction(0)] * (1 << g.n)
    for m in range(1, 1 << g.n):
        low = (m & -m).bit_length() - 1
        table[m] = table[m & (m - 1)] + g.mu[low]
    return table


def _mask_pairs(n: int):
    """Disjoint bitmask pairs (a, b) with nonempty union and the union's
    lowest vertex in a (swap symmetry removed)."""
    full = (1 << n) - 1
    for mask_a in range(1 << n):
        rest = ~mask_a & full
        mask_b = rest
        while True:
            union = mask_a | mask_b
            if union and (union & -union) & mask_a:
                yield mask_a, mask_b
            if mask_b == 0:
                break
            mask_b = (mask_b - 1) & rest


def _pair_oracle(g: Graph, cap: int, modified: bool) -> CutCertificate:
    if g.n > cap:
        raise TooLarge(f"pair oracle capped at n={cap}")
    volm = _mask_vol(g)
    edges = [(1 << u, 1 << v, w) for u, v, w in g.edges]
    def key_of(mask_a, mask_b):
        return (
            tuple(i for i in range(g.n) if mask_a >> i & 1),
            tuple(i for i in range(g.n) if mask_b >> i & 1),
        )

    best = None  # (value, mask_a, mask_b, key)
    for mask_a, mask_b in _mask_pairs(g.n):
        union = mask_a | mask_b
        cross = Fraction(0)
        bnd = Fraction(0)
        for bu, bv, w in edges:
            in_a = bool(bu & mask_a) + bool(bv & mask_a)
            in_b = bool(bu & mask_b) + bool(bv & mask_b)
            if in_a == 1 and in_b == 1:
                cross += w
            elif modified and in_a + in_b == 1:
                bnd += w
        value = (2 * cross + bnd) / (volm[union] + bnd)
        if best is None or value > best[0]:
            best = (value, mask_a, mask_b, key_of(mask_a, mask_b))
        elif value == best[0]:
            key = key_of(mask_a, mask_b)
            if key < best[3]:
                best = (value, mask_a, mask_b, key)
    return CutCertificate(
        kind="set_pair",
        sets=(frozenset(best[3][0]), frozenset(best[3][1])),
        value=best[0],
    )


def dual_cheeger(g: Graph, cap: int = DEFAULT_PAIR_CAP) -> CutCertificate:
    return _pair_oracle(g, cap, modified=False)


def modified_dual_cheeger(g: Graph, cap: int = DEFAULT_PAIR_CAP) -> CutCertificate:
    return _pair_oracle(g, cap, modified=True)


def k_way_dual_cheeger(
    g: Graph, k: int, work_cap: int = DEFAULT_WORK_CAP
) -> CutCertificate:
    """h+_k: max over k disjoint set pairs of the worst per-pair ratio."""
    if k < 1 or k > g.n:
        raise BadK(f"k={k} outside [1, n]")
    states = 2 * k + 1
    if states**g.n > work_cap:
        raise TooLarge(f"(2k+1)^n = {states ** g.n} exceeds work cap {work_cap}")
    volm = _mask_vol(g)
    edges = [(1 << u, 1 << v, w) for u, v, w in g.edges]

    def key_of(masks):
        return tuple(
            tuple(i for i in range(g.n) if m >> i & 1) for m in masks
        )

    best = None  # (value, masks, key)
    for assign in product(range(states), repeat=g.n):
        masks = [0] * (2 * k)
        for i, s in enumerate(assign):
            if s:
                masks[s - 1] |= 1 << i
        if any(not (masks[2 * j] | masks[2 * j + 1]) for j in range(k)):
            continue
        value = None
        for j in range(k):
            ma, mb = masks[2 * j], masks[2 * j + 1]
            cross = Fraction(0)
            for bu, bv, w in edges:
                if (bool(bu & ma) + bool(bv & ma) == 1) and (
                    bool(bu & mb) + bool(bv & mb) == 1
                ):
                    cross += w
            ratio = 2 * cross / volm[ma | mb]
            if value is None or ratio < value:
                value = ratio
        if best is None or value > best[0]:
            best = (value, masks, key_of(masks))
        elif value == best[0]:
            key = key_of(masks)
            if key < best[2]:
                best = (value, masks, key)
    if best is None:
        raise BadK(f"no feasible {k}-way pair system")
    return CutCertificate(
        kind="subpartition",
        sets=tuple(frozenset(t) for t in best[2]),
        value=best[0],
    )


def _mc_value(g: Graph, blocks, rest) -> Fraction:
    """MC of a subpartition: twice the best bipartition-of-blocks cut plus
    the total boundary toward the unassigned rest."""
    k = len(blocks)
    pair = [[Fraction(0)] * k for _ in range(k)]
    to_rest = [Fraction(0)] * k
    idx = {}
    for bi, blk in enumerate(blocks):
        for v in blk:
            idx[v] = bi
    for u, v, w in g.edges:
        bu, bv = idx.get(u), idx.get(v)
        if bu is not None and bv is not None and bu != bv:
            pair[bu][bv] += w
            pair[bv][bu] += w
        elif bu is not None and bv is None:
            to_rest[bu] += w
        elif bv is not None and bu is None:
            to_rest[bv] += w
    best = Fraction(0)
    for smask in range(1 << k):
        cross = sum(
            (
                pair[i][j]
                for i in range(k)
                for j in range(k)
                if smask >> i & 1 and not smask >> j & 1
            ),
            Fraction(0),
        )
        best = max(best, cross)
    return 2 * best + sum(to_rest, Fraction(0))


def minmax_k_cut(
    g: Graph,
    k: int,
    require_partition: bool = False,
    work_cap: int = DEFAULT_WORK_CAP,
) -> CutCertificate:
    """M_k over subpartitions with k nonempty blocks, or M'_k over
    partitions into k nonempty blocks when require_partition is set."""
    if k < 1 or k > g.n:
        raise BadK(f"k={k} outside [1, n]")
    states = k if require_partition else k + 1
    work = states**g.n * (1 << k)
    if work > work_cap:
        raise TooLarge(f"minmax {k}-cut work {work} exceeds cap {work_cap}")
    offset = 0 if require_partition else 1

    def gen():
        for assign in product(range(states), repeat=g.n):
            blocks = tuple(
                frozenset(i for i in range(g.n) if assign[i] == b + offset)
                for b in range(k)
            )
            if any(not blk for blk in blocks):
                continue
            rest = (
                frozenset()
                if require_partition
                else frozenset(i for i in range(g.n) if assign[i] == 0)
            )
            yield _mc_value(g, blocks, rest), blocks

    kind = "partition" if require_partition else "subpartition"
    cert = _best(kind, gen(), maximize=False)
    if cert is None:
        raise BadK(f"no subpartition with {k} nonempty blocks")
    return cert


RATIO_ORACLES = {
    "cheeger_tv": (cheeger, False),
    "cheeger_new": (cheeger, False),
    "dual": (dual_cheeger, True),
    "mdual": (modified_dual_cheeger, True),
    "maxcut_ratio": (maxcut, False),
    "anti": (anti_cheeger, False),
}


def ratio_oracle(problem_id: str, g: Graph, cap: Optional[int] = None) -> CutCertificate:
    """Combinatorial optimum of the continuous ratio objective: the cut
    constant itself, or 1 minus it for the two dual forms."""
    if problem_id not in RATIO_ORACLES:
        raise UnknownProblem(f"no oracle registered for {problem_id!r}")
    fn, complement = RATIO_ORACLES[problem_id]
    cert = fn(g) if cap is None else fn(g, cap)
    if complement:
        return CutCertificate(kind=cert.kind, sets=cert.sets, value=1 - cert.value)
    return cert
