"""Canonical labeling by partition refinement with full backtracking.

The canonical code of a graph is the lexicographically least adjacency bit
string, read in graph6 bit order, over every vertex ordering the search
explores. Equitable refinement narrows the orderings considered and
discovered automorphisms prune equivalent branches; both steps are
isomorphism-equivariant, so the minimum over the surviving branches is still
a complete invariant: two graphs receive equal codes exactly when they are
isomorphic. Designed for the n <= ~15 range, correctness over speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph


@dataclass(frozen=True)
class CanonicalLabeling:
    permutation: tuple[int, ...]  # original vertex -> canonical position
    code: bytes                   # graph6 of the relabeled graph


def canonical_labeling(g: Graph) -> CanonicalLabeling:
    code_int, perm, _ = canon_raw(g.adj, g.n)
    return CanonicalLabeling(permutation=perm, code=code_bytes(g.n, code_int))


def canonical_code(g: Graph) -> bytes:
    return canonical_labeling(g).code


def canonical_form(g: Graph) -> Graph:
    """The canonically relabeled copy of g."""
    _, perm, _ = canon_raw(g.adj, g.n)
    return g.relabel(perm)


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    """Generators of the automorphism group discovered during canonization."""
    _, _, gens = canon_raw(g.adj, g.n, want_gens=True)
    return gens


def code_bytes(n: int, code_int: int) -> bytes:
    """Render a packed canonical bit string as graph6 bytes."""
    if n > 62:
        raise ValueError("graph6 support limited to n <= 62")
    nbits = n * (n - 1) // 2
    pad = (-nbits) % 6
    stream = code_int << pad
    groups = (nbits + pad) // 6
    out = [n + 63]
    for k in range(groups - 1, -1, -1):
        out.append(((stream >> (6 * k)) & 63) + 63)
    return bytes(out)


def canon_raw(
    adj: Sequence[int],
    n: int,
    want_gens: bool = False,
) -> tuple[int, tuple[int, ...], list[tuple[int, ...]]]:
    """Canonize a bitmask adjacency.

    Returns (code, perm, gens): `code` packs the canonical adjacency bits
    (graph6 order, most significant bit first) into one int, `perm` maps each
    original vertex to its canonical position, and `gens` lists automorphisms
    found along the way (vertex -> vertex tuples). `gens` is populated even
    when want_gens is False since the search needs them for pruning; the flag
    only guarantees they are worth returning.
    """
    if n == 0:
        return 0, (), []
    degs = [adj[v].bit_count() for v in range(n)]
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(degs[v], []).append(v)
    cells = [by_deg[d] for d in sorted(by_deg)]

    best_code: Optional[int] = None
    best_order: list[int] = []
    gens: list[tuple[int, ...]] = []
    # a few stored leaves so ties against non-best branches still yield gens
    seen_leaves: dict[int, list[int]] = {}
    path: list[int] = []

    def refine(cells: list[list[int]]) -> list[list[int]]:
        while True:
            masks = []
            for cell in cells:
                m = 0
                for v in cell:
                    m |= 1 << v
                masks.append(m)
            new_cells: list[list[int]] = []
            changed = False
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                keyed: dict[tuple[int, ...], list[int]] = {}
                for v in cell:
                    av = adj[v]
                    k = tuple((av & mk).bit_count() for mk in masks)
                    keyed.setdefault(k, []).append(v)
                if len(keyed) > 1:
                    changed = True
                for k in sorted(keyed):
                    new_cells.append(keyed[k])
            cells = new_cells
            if not changed:
                return cells

    def code_of(order: list[int]) -> int:
        code = 0
        for j in range(1, n):
            col = adj[order[j]]
            for i in range(j):
                code = (code << 1) | (col >> order[i] & 1)
        return code

    def record_leaf(order: list[int]) -> None:
        nonlocal best_code, best_order
        code = code_of(order)
        if best_code is None or code < best_code:
            best_code = code
            best_order = order[:]
        prev = seen_leaves.get(code)
        if prev is not None:
            aut = [0] * n
            nontrivial = False
            for a, b in zip(prev, order):
                aut[a] = b
                if a != b:
                    nontrivial = True
            if nontrivial:
                t = tuple(aut)
                if t not in gens:
                    gens.append(t)
        elif len(seen_leaves) < 64:
            seen_leaves[code] = order[:]

    def same_orbit_as_tried(v: int, tried: list[int]) -> bool:
        fixing = [s for s in gens if all(s[x] == x for x in path)]
        if not fixing:
            return False
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s in fixing:
            for x in range(n):
                rx, ry = find(x), find(s[x])
                if rx != ry:
                    parent[rx] = ry
        rv = find(v)
        return any(find(u) == rv for u in tried)

    def descend(cells: list[list[int]]) -> None:
        cells = refine(cells)
        idx = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                idx = i
                break
        if idx < 0:
            record_leaf([c[0] for c in cells])
            return
        cell = cells[idx]
        tried: list[int] = []
        for v in cell:
            if tried and same_orbit_as_tried(v, tried):
                continue
            tried.append(v)
            path.append(v)
            rest = [u for u in cell if u != v]
            descend(cells[:idx] + [[v], rest] + cells[idx + 1:])
            path.pop()

    descend(cells)
    assert best_code is not None
    perm = [0] * n
    for pos, v in enumerate(best_order):
        perm[v] = pos
    return best_code, tuple(perm), gens
