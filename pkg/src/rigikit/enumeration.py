"""Isomorphism-free generation of graphs under degree, edge-count, sparsity,
and connectivity constraints, by orderly edge extension.

Each accepted graph is reached along a unique canonical path from the empty
graph: a child survives only when its new edge is automorphism-equivalent to
the child's canonical deletable edge, and candidate edges are tried once per
parent-automorphism orbit. Streams therefore carry one canonically labeled
representative per isomorphism class; a hash set over emitted codes backs the
pruning up. Dense regimes (min degree above half the graph) generate
complements instead, where the degree cap prunes far earlier.

Streams are resumable: DFS subtrees rooted at a fixed depth are dealt
round-robin to `partition` shards, so shard outputs are disjoint and their
union is the full stream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

from .canon import canon_raw, code_bytes
from .graph import Graph, complement, graph6_decode, is_k_connected
from .rigidity import is_d_sparse

_SHARD_DEPTH = 5  # subtree hand-off level for --partition sharding


@dataclass(frozen=True)
class SearchSpec:
    """Degree/edge/sparsity window for constrained enumeration.

    degree_max defaults to n-1 and edge_max to C(n,2); bounds are validated
    eagerly so infeasible or odd-parity regular requests fail up front.
    """

    n: int
    degree_min: int = 0
    degree_max: Optional[int] = None
    edge_min: int = 0
    edge_max: Optional[int] = None
    d_sparse_filter: Optional[int] = None
    connectivity_min: Optional[int] = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        dmax = max(self.n - 1, 0) if self.degree_max is None else self.degree_max
        emax = math.comb(self.n, 2) if self.edge_max is None else self.edge_max
        emax = min(emax, math.comb(self.n, 2))
        if self.d_sparse_filter is not None and self.n >= self.d_sparse_filter + 2:
            d = self.d_sparse_filter
            emax = min(emax, d * self.n - math.comb(d + 1, 2))
        object.__setattr__(self, "degree_max", dmax)
        object.__setattr__(self, "edge_max", emax)
        if not (0 <= self.degree_min <= dmax <= max(self.n - 1, 0)):
            raise ValueError(f"infeasible degree bounds [{self.degree_min}, {dmax}]")
        if self.degree_min == dmax and (self.n * dmax) % 2:
            raise ValueError(f"parity: no {dmax}-regular graph on {self.n} vertices")
        if self.n * self.degree_min > 2 * emax:
            raise ValueError("infeasible: min degree exceeds the edge budget")
        if self.edge_min > emax:
            raise ValueError(f"infeasible edge window [{self.edge_min}, {emax}]")


def enumerate_constrained(
    spec: SearchSpec, partition: tuple[int, int] = (0, 1)
) -> Iterator[Graph]:
    """All isomorphism classes meeting the spec, canonically labeled."""
    shard_i, shard_m = partition
    if not (0 <= shard_i < shard_m):
        raise ValueError("partition must be (i, m) with 0 <= i < m")
    n = spec.n
    if n == 0:
        if spec.edge_min == 0 and shard_i == 0:
            yield Graph(0)
        return

    total = math.comb(n, 2)
    comp_cap = n - 1 - spec.degree_min
    use_complement = comp_cap < spec.degree_max

    seen: set[bytes] = set()
    if use_complement:
        lo = total - spec.edge_max
        hi = total - spec.edge_min
        dmin_c = n - 1 - spec.degree_max
        for adj in _grow(n, comp_cap, dmin_c, lo, hi, partition):
            # degree floor on the complement caps the direct-side max degree
            if any(a.bit_count() < dmin_c for a in adj):
                continue
            g = complement(_from_adj(n, adj))
            if _passes_final(g, spec):
                code, perm, _ = canon_raw(g.adj, n)
                cb = code_bytes(n, code)
                if cb not in seen:
                    seen.add(cb)
                    yield graph6_decode(cb.decode("ascii"))
    else:
        for adj in _grow(n, spec.degree_max, spec.degree_min, spec.edge_min,
                         spec.edge_max, partition):
            if any(a.bit_count() < spec.degree_min for a in adj):
                continue
            g = _from_adj(n, adj)
            if _passes_final(g, spec):
                code, _, _ = canon_raw(adj, n)
                cb = code_bytes(n, code)
                if cb not in seen:
                    seen.add(cb)
                    yield graph6_decode(cb.decode("ascii"))


def enumerate_regular(
    n: int, k: int, partition: tuple[int, int] = (0, 1)
) -> Iterator[Graph]:
    """All k-regular graphs on n vertices up to isomorphism."""
    if not (0 <= k < max(n, 1)):
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
    spec = SearchSpec(n=n, degree_min=k, degree_max=k,
                      edge_min=n * k // 2, edge_max=n * k // 2)
    return enumerate_constrained(spec, partition)


def _from_adj(n: int, adj: list[int]) -> Graph:
    edges = []
    for u in range(n):
        rest = adj[u] >> (u + 1) << (u + 1)
        while rest:
            low = rest & -rest
            edges.append((u, low.bit_length() - 1))
            rest ^= low
    return Graph(n, tuple(edges))


def _passes_final(g: Graph, spec: SearchSpec) -> bool:
    if not (spec.edge_min <= g.m <= spec.edge_max):
        return False
    if spec.d_sparse_filter is not None and not is_d_sparse(g, spec.d_sparse_filter):
        return False
    if spec.connectivity_min is not None:
        ok, _ = is_k_connected(g, spec.connectivity_min)
        if not ok:
            return False
    return True


def _grow(
    n: int,
    cap: int,
    dmin: int,
    edge_lo: int,
    edge_hi: int,
    partition: tuple[int, int],
) -> Iterator[list[int]]:
    """Canonical-construction-path DFS over edge additions.

    Yields raw adjacency bitmask lists for every tree node whose edge count
    lies in [edge_lo, edge_hi]; the caller applies final filters.
    """
    shard_i, shard_m = partition
    if cap <= 0 or edge_hi <= 0:
        if edge_lo <= 0 and shard_i == 0:
            yield [0] * n
        return
    shard_depth = min(_SHARD_DEPTH, edge_hi)

    pair_index: dict[tuple[int, int], int] = {}
    all_pairs: list[tuple[int, int]] = []
    for j in range(1, n):
        for i in range(j):
            pair_index[(i, j)] = len(all_pairs)
            all_pairs.append((i, j))
    nbits = len(all_pairs)
    # j such that j(j-1)/2 <= k, for decoding bit positions back to pairs
    tri = [j * (j - 1) // 2 for j in range(n + 1)]

    def mu_edge(code: int, perm: tuple[int, ...]) -> tuple[int, int]:
        # last set position in graph6 bit order = lowest set bit of the code
        b = (code & -code).bit_length() - 1
        k = nbits - 1 - b
        j = 1
        while tri[j + 1] <= k:
            j += 1
        i = k - tri[j]
        inv = [0] * n
        for v, pos in enumerate(perm):
            inv[pos] = v
        a, b2 = inv[i], inv[j]
        return (a, b2) if a < b2 else (b2, a)

    def pair_orbit(e: tuple[int, int], gens: list[tuple[int, ...]]) -> set[tuple[int, int]]:
        orbit = {e}
        frontier = [e]
        while frontier:
            u, v = frontier.pop()
            for s in gens:
                w = (s[u], s[v]) if s[u] < s[v] else (s[v], s[u])
                if w not in orbit:
                    orbit.add(w)
                    frontier.append(w)
        return orbit

    def candidate_reps(
        cand: list[tuple[int, int]], gens: list[tuple[int, ...]]
    ) -> list[tuple[int, int]]:
        if not gens or len(cand) < 2:
            return cand
        idx = {e: i for i, e in enumerate(cand)}
        parent = list(range(len(cand)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s in gens:
            for e, i in idx.items():
                u, v = e
                w = (s[u], s[v]) if s[u] < s[v] else (s[v], s[u])
                j = idx.get(w)
                if j is not None:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj
        return [e for i, e in enumerate(cand) if find(i) == i]

    shard_counter = 0

    # generators of the full symmetric group serve the (edgeless) root
    if n >= 2:
        rot = tuple(range(1, n)) + (0,)
        swap = (1, 0) + tuple(range(2, n))
        root_gens = [rot, swap] if n > 2 else [swap]
    else:
        root_gens = []

    def dfs(adj: list[int], degs: list[int], m: int, deficit: int,
            gens: list[tuple[int, ...]]) -> Iterator[list[int]]:
        nonlocal shard_counter
        if m >= edge_lo and (m >= shard_depth or shard_i == 0):
            yield adj
        if m == edge_hi:
            return
        free = sum(cap - dv for dv in degs)
        if m + 1 + (free - 2) // 2 < edge_lo:
            return
        budget = edge_hi - m - 1
        cand = []
        for u, v in all_pairs:
            if adj[u] >> v & 1:
                continue
            du, dv = degs[u], degs[v]
            if du >= cap or dv >= cap:
                continue
            d_child = deficit - (du < dmin) - (dv < dmin)
            if d_child > 2 * budget:
                continue
            cand.append((u, v))
        for u, v in candidate_reps(cand, gens):
            adj2 = adj[:]
            adj2[u] |= 1 << v
            adj2[v] |= 1 << u
            code, perm, cgens = canon_raw(adj2, n)
            if (u, v) not in pair_orbit(mu_edge(code, perm), cgens):
                continue
            if m + 1 == shard_depth:
                shard_counter += 1
                if (shard_counter - 1) % shard_m != shard_i:
                    continue
            degs2 = degs[:]
            degs2[u] += 1
            degs2[v] += 1
            d2 = deficit - (degs[u] < dmin) - (degs[v] < dmin)
            yield from dfs(adj2, degs2, m + 1, d2, cgens)

    yield from dfs([0] * n, [0] * n, 0, n * max(dmin, 0), root_gens)
