import itertools
import random

import networkx as nx
from hypothesis import given
from hypothesis import strategies as st

from rigikit import (
    Graph,
    canonical_code,
    canonical_form,
    canonical_labeling,
    complete_graph,
    cycle_graph,
)
from rigikit.canon import automorphism_generators

from conftest import graphs


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism search, independent of the canonizer."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    n = g.n
    mapping = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or g.degrees[v] != h.degrees[w]:
                continue
            ok = True
            for u in range(v):
                if bool(g.adj[v] >> u & 1) != bool(h.adj[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
        return False

    return extend(0)


class TestInvariance:
    def test_200_permutations_of_20_graphs(self):
        # isomorphism-invariance at the sample sizes the contract names
        rng = random.Random(77)
        graphs_pool = []
        while len(graphs_pool) < 20:
            n = rng.randrange(1, 11)
            es = tuple(e for e in itertools.combinations(range(n), 2)
                       if rng.random() < rng.choice([0.2, 0.5, 0.8]))
            graphs_pool.append(Graph(n, es))
        checks = 0
        while checks < 200:
            g = graphs_pool[checks % 20]
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_code(g.relabel(perm)) == canonical_code(g)
            checks += 1

    @given(graphs(), st.randoms(use_true_random=False))
    def test_relabel_invariance(self, g, r):
        perm = list(range(g.n))
        r.shuffle(perm)
        assert canonical_code(g.relabel(perm)) == canonical_code(g)

    def test_code_is_graph6_of_canonical_form(self):
        g = cycle_graph(6)
        lab = canonical_labeling(g)
        assert g.relabel(lab.permutation).to_graph6() == lab.code.decode("ascii")
        assert canonical_form(g).to_graph6() == lab.code.decode("ascii")

    def test_c6_differs_from_two_triangles(self):
        two_tri = Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
        assert canonical_code(cycle_graph(6)) != canonical_code(two_tri)


class TestCompleteness:
    def test_equal_codes_iff_brute_isomorphic(self):
        rng = random.Random(3)
        for _ in range(150):
            n = rng.randrange(2, 9)
            p = rng.choice([0.3, 0.5, 0.7])
            e1 = tuple(e for e in itertools.combinations(range(n), 2) if rng.random() < p)
            e2 = tuple(e for e in itertools.combinations(range(n), 2) if rng.random() < p)
            g, h = Graph(n, e1), Graph(n, e2)
            assert (canonical_code(g) == canonical_code(h)) == brute_isomorphic(g, h)

    def test_equal_codes_iff_networkx_isomorphic(self):
        rng = random.Random(4)
        for _ in range(100):
            n = rng.randrange(2, 9)
            e1 = tuple(e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5)
            e2 = tuple(e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5)
            g, h = Graph(n, e1), Graph(n, e2)
            G = nx.Graph(list(e1))
            G.add_nodes_from(range(n))
            H = nx.Graph(list(e2))
            H.add_nodes_from(range(n))
            assert (canonical_code(g) == canonical_code(h)) == nx.is_isomorphic(G, H)


class TestAutomorphisms:
    def brute_orbits(self, g: Graph) -> list[frozenset]:
        n = g.n
        autos = []
        for perm in itertools.permutations(range(n)):
            if g.relabel(list(perm)) == g:
                autos.append(perm)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in autos:
            for v in range(n):
                ra, rb = find(v), find(a[v])
                if ra != rb:
                    parent[ra] = rb
        groups = {}
        for v in range(n):
            groups.setdefault(find(v), set()).add(v)
        return sorted(frozenset(s) for s in groups.values())

    def test_generator_orbits_match_brute_force(self):
        rng = random.Random(9)
        for _ in range(40):
            n = rng.randrange(2, 8)
            es = tuple(e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5)
            g = Graph(n, es)
            gens = automorphism_generators(g)
            for a in gens:
                assert g.relabel(list(a)) == g  # real automorphisms
            parent = list(range(n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for a in gens:
                for v in range(n):
                    ra, rb = find(v), find(a[v])
                    if ra != rb:
                        parent[ra] = rb
            groups = {}
            for v in range(n):
                groups.setdefault(find(v), set()).add(v)
            got = sorted(frozenset(s) for s in groups.values())
            assert got == self.brute_orbits(g)

    def test_symmetric_extremes(self):
        # vertex-transitive cases exercise the orbit pruning heavily
        for g in (complete_graph(8), Graph(8), cycle_graph(8)):
            code = canonical_code(g)
            for _ in range(5):
                perm = list(range(8))
                random.Random(1).shuffle(perm)
                assert canonical_code(g.relabel(perm)) == code
