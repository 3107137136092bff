"""Generic rigidity oracle: rigidity matrices, randomized rank with explicit
certificate semantics, matroid predicates, and sparsity counts.

Certificate semantics
---------------------
The rank of the rigidity matrix at any specialization is a lower bound on the
generic rank, so:

* independence (rank = |E|) claimed from one full-row-rank evaluation is a
  proof, as is rigidity claimed from an evaluation meeting the count bound
  d|V| - C(d+1,2);
* dependence and flexibility are proved deterministically when a counting
  certificate applies (a subgraph violating the sparsity count, or a vertex
  cut of size <= d-1 in a graph meeting the count bound), and otherwise rest
  on Schwartz-Zippel: the probability that `trials` independent uniform
  evaluations all miss the generic rank is at most (r/p)^trials, r being the
  count upper bound.

Any dependence-style claim whose failure bound exceeds the configured
threshold is reported as unresolved (None) rather than guessed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from typing import Optional

from .graph import Graph, is_k_connected
from .linalg import DEFAULT_PRIME, rank_and_left_null_mod_p, rank_exact_int, rank_mod_p

# Dependence claims with a Monte Carlo failure bound above this are unresolved.
DEFAULT_THRESHOLD = 2.0**-80
DEFAULT_TRIALS = 2

CERT_INDEPENDENT = "deterministic-independent"
CERT_DEPENDENT_COUNT = "deterministic-dependent-count"
CERT_DEPENDENT_CUT = "deterministic-dependent-cut"
CERT_MONTE_CARLO = "monte-carlo"


@dataclass(frozen=True)
class Realization:
    """d field-element coordinates per vertex; field None means exact integers."""

    d: int
    coords: tuple[tuple[int, ...], ...]
    field: Optional[int] = DEFAULT_PRIME

    def __post_init__(self) -> None:
        for c in self.coords:
            if len(c) != self.d:
                raise ValueError("every vertex needs exactly d coordinates")


@dataclass(frozen=True)
class RigidityMatrix:
    d: int
    n: int
    field: Optional[int]
    rows: tuple[tuple[int, ...], ...]  # one row per edge, in Graph.edges order


@dataclass(frozen=True)
class Certificate:
    kind: str
    failure_bound: float = 0.0
    witness: Optional[frozenset[int]] = None  # violating subset or cut

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == CERT_MONTE_CARLO:
            out["failure_bound"] = self.failure_bound
        if self.witness is not None:
            out["witness"] = sorted(self.witness)
        return out


@dataclass(frozen=True)
class MatroidVerdict:
    d: int
    rank_lb: int
    count_ub: int
    trials: int
    field_primes: tuple[int, ...]
    certificate: Certificate
    independent: Optional[bool] = None
    rigid: Optional[bool] = None
    circuit: Optional[bool] = None
    flexible_circuit: Optional[bool] = None

    def flags(self) -> dict[str, Optional[bool]]:
        return {
            "independent": self.independent,
            "rigid": self.rigid,
            "circuit": self.circuit,
            "flexible_circuit": self.flexible_circuit,
        }

    def to_json(self, g: Optional[Graph] = None) -> dict:
        out = {
            "d": self.d,
            "rank_lb": self.rank_lb,
            "count_ub": self.count_ub,
            "trials": self.trials,
            "primes": list(self.field_primes),
            "certificate": self.certificate.to_json(),
            "flags": self.flags(),
        }
        if g is not None:
            out["graph6"] = g.to_graph6()
        return out


def count_upper_bound(g: Graph, d: int) -> int:
    """min(|E|, d|V| - C(d+1,2)): a certified upper bound on generic rank."""
    if g.n >= d + 2:
        return min(g.m, d * g.n - math.comb(d + 1, 2))
    return g.m


def rigidity_target(g: Graph, d: int) -> int:
    return d * g.n - math.comb(d + 1, 2)


def random_realization(
    g: Graph, d: int, seed: int, field: Optional[int] = DEFAULT_PRIME
) -> Realization:
    """Coordinates drawn uniformly from [0, p); with field=None the same
    integers are kept exact for the rational path."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    rng = random.Random(seed)
    span = field if field is not None else DEFAULT_PRIME
    coords = tuple(tuple(rng.randrange(span) for _ in range(d)) for _ in range(g.n))
    return Realization(d=d, coords=coords, field=field)


def rigidity_matrix(g: Graph, r: Realization) -> RigidityMatrix:
    if len(r.coords) != g.n:
        raise ValueError("realization does not cover the vertex set")
    d = r.d
    p = r.field
    rows = []
    for u, v in g.edges:
        row = [0] * (d * g.n)
        pu, pv = r.coords[u], r.coords[v]
        for k in range(d):
            diff = pu[k] - pv[k]
            if p is not None:
                diff %= p
            row[d * u + k] = diff
            row[d * v + k] = -diff if p is None else (p - diff) % p
        rows.append(tuple(row))
    return RigidityMatrix(d=d, n=g.n, field=p, rows=tuple(rows))


def _matrix_rows(g: Graph, d: int, seed: int, p: Optional[int]) -> list[list[int]]:
    r = random_realization(g, d, seed, field=p)
    return [list(row) for row in rigidity_matrix(g, r).rows]


def sz_bound(count_ub: int, p: int, trials: int) -> float:
    """Schwartz-Zippel: an r x r minor of total degree <= r vanishes at a
    uniform point with probability <= r/p; trials are independent."""
    return float((count_ub / p) ** trials)


@dataclass(frozen=True)
class SparsityReport:
    d: int
    sparse: bool
    tight: bool
    violator: Optional[frozenset[int]] = None
    excess: int = 0  # max over subsets of |E'| - (d|V'| - C(d+1,2))

    def __bool__(self) -> bool:
        return self.sparse


def is_d_sparse(g: Graph, d: int) -> SparsityReport:
    """Exhaustive subset check of |E'| <= d|V'| - C(d+1,2) over all vertex
    sets with >= d+2 vertices. Returns a maximally violating subset when the
    check fails, and reports tightness when |E| meets the bound exactly.
    """
    if g.n > 20:
        raise ValueError("subset search limited to n <= 20")
    cdd = math.comb(d + 1, 2)
    adj = g.adj
    worst: tuple[int, int] = (0, 0)  # (excess, size)
    worst_set = -1
    if g.n >= d + 2:
        nedges = [0] * (1 << g.n)
        for s in range(1, 1 << g.n):
            low = s & -s
            rest = s ^ low
            v = low.bit_length() - 1
            cnt = nedges[rest] + (adj[v] & rest).bit_count()
            nedges[s] = cnt
            size = s.bit_count()
            if size >= d + 2:
                excess = cnt - (d * size - cdd)
                if excess > 0 and (excess, size) > worst:
                    worst = (excess, size)
                    worst_set = s
    sparse = worst_set < 0
    violator = None
    if not sparse:
        violator = frozenset(v for v in range(g.n) if worst_set >> v & 1)
    tight = sparse and g.m == d * g.n - cdd
    return SparsityReport(d=d, sparse=sparse, tight=tight, violator=violator, excess=worst[0])


def small_cut(g: Graph, d: int) -> Optional[frozenset[int]]:
    """A vertex cut of size <= d-1, or None. An empty frozenset means the
    graph is disconnected."""
    if g.n < 2:
        return None
    ok, witness = is_k_connected(g, d)
    return witness if not ok else None


def dependent_by_cut(g: Graph, d: int) -> Optional[frozenset[int]]:
    """Deterministic dependence certificate: a vertex cut of size <= d-1 in a
    d-tight graph forces r_d(G) <= d|V| - C(d+1,2) - 1 < |E|."""
    if g.n < d + 2:
        raise ValueError("cut certificate needs |V| >= d+2")
    cut = small_cut(g, d)
    if cut is None:
        return None
    if not is_d_sparse(g, d).tight:
        return None
    return cut


def generic_rank(
    g: Graph,
    d: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    p: int = DEFAULT_PRIME,
    threshold: float = DEFAULT_THRESHOLD,
) -> MatroidVerdict:
    """Best observed rank of R(G,p) over up to `trials` random prime-field
    points. Stops early once the count upper bound is reached, since the
    generic rank is then known exactly. Fills the independent/rigid flags;
    circuit flags stay undetermined unless independence already settles them
    (use is_circuit / is_flexible_circuit for those).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    ub = count_upper_bound(g, d)
    rng = random.Random(seed)
    rank_lb = 0
    used = 0
    for _ in range(trials):
        s = rng.getrandbits(63)
        used += 1
        rank_lb = max(rank_lb, rank_mod_p(_matrix_rows(g, d, s, p), p))
        if rank_lb >= ub:
            break
    return _assess(g, d, rank_lb, ub, used, p, threshold)


def _assess(
    g: Graph,
    d: int,
    rank_lb: int,
    ub: int,
    used: int,
    p: int,
    threshold: float,
) -> MatroidVerdict:
    m = g.m
    bound = sz_bound(ub, p, used)

    if rank_lb == m:
        cert = Certificate(CERT_INDEPENDENT)
        independent: Optional[bool] = True
    else:
        sp = is_d_sparse(g, d) if g.n >= d + 2 else SparsityReport(d, True, False)
        if not sp.sparse:
            cert = Certificate(CERT_DEPENDENT_COUNT, witness=sp.violator)
            independent = False
        else:
            cut = small_cut(g, d) if g.n >= d + 2 and sp.tight else None
            if cut is not None:
                cert = Certificate(CERT_DEPENDENT_CUT, witness=cut)
                independent = False
            else:
                cert = Certificate(CERT_MONTE_CARLO, failure_bound=bound)
                independent = False if bound <= threshold else None

    rigid: Optional[bool]
    target = rigidity_target(g, d)
    if g.n <= d + 1:
        # small graphs: every graph is independent, rank known once witnessed
        if rank_lb == m:
            rigid = m == math.comb(g.n, 2) or rank_lb == target
        else:
            rigid = None  # freak specialization failure; do not guess
    elif rank_lb >= target:
        rigid = True
    elif ub < target:
        rigid = False  # too few edges to ever reach the bound
    elif small_cut(g, d) is not None:
        rigid = False
    else:
        rigid = False if bound <= threshold else None

    circuit: Optional[bool] = None
    flexible: Optional[bool] = None
    if independent:
        circuit = False
        flexible = False

    return MatroidVerdict(
        d=d,
        rank_lb=rank_lb,
        count_ub=ub,
        trials=used,
        field_primes=(p,),
        certificate=cert,
        independent=independent,
        rigid=rigid,
        circuit=circuit,
        flexible_circuit=flexible,
    )


def is_independent(
    g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = 0,
    p: int = DEFAULT_PRIME, threshold: float = DEFAULT_THRESHOLD,
) -> tuple[Optional[bool], MatroidVerdict]:
    v = generic_rank(g, d, trials=trials, seed=seed, p=p, threshold=threshold)
    return v.independent, v


def is_rigid(
    g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = 0,
    p: int = DEFAULT_PRIME, threshold: float = DEFAULT_THRESHOLD,
) -> tuple[Optional[bool], MatroidVerdict]:
    v = generic_rank(g, d, trials=trials, seed=seed, p=p, threshold=threshold)
    return v.rigid, v


def is_circuit(
    g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = 0,
    p: int = DEFAULT_PRIME, threshold: float = DEFAULT_THRESHOLD,
) -> tuple[Optional[bool], MatroidVerdict]:
    """Minimal dependence: G dependent but G-e independent for every edge.

    The deletion side is settled deterministically whenever possible: at a
    point where R(G) has rank |E|-1 and the one-dimensional left null space
    has no zero entry, every single-row deletion is witnessed full-row-rank
    at that same point. Remaining cases fall back to per-edge evaluations.
    """
    m = g.m
    verdict = generic_rank(g, d, trials=trials, seed=seed, p=p, threshold=threshold)
    if verdict.independent:
        return False, verdict
    if verdict.independent is None:
        return None, verdict

    if verdict.rank_lb < m - 1:
        # some deletion would still be dependent, so G is not minimal;
        # deterministic when a sparsity violation survives any one deletion
        sp = is_d_sparse(g, d) if g.n >= d + 2 else None
        if sp is not None and sp.excess >= 2:
            return False, replace(verdict, circuit=False, flexible_circuit=False)
        szb = sz_bound(verdict.count_ub, p, verdict.trials)
        circuit = False if szb <= threshold else None
        flex = False if circuit is False else None
        return circuit, replace(verdict, circuit=circuit, flexible_circuit=flex)

    # rank_lb == m-1: stress support fast path, reusing the trial points
    rng = random.Random(seed)
    for _ in range(verdict.trials):
        rows = _matrix_rows(g, d, rng.getrandbits(63), p)
        rank, null = rank_and_left_null_mod_p(rows, p)
        if rank == m:
            # a better point: G is independent after all
            out = _assess(g, d, m, verdict.count_ub, verdict.trials, p, threshold)
            return False, out
        if rank == m - 1 and len(null) == 1 and all(null[0]):
            return True, _finish_circuit_true(g, d, verdict, threshold)
    # fall back to explicit per-edge checks with fresh points
    mc_bound = verdict.certificate.failure_bound
    for e in g.edges:
        ge = g.without_edge(*e)
        sub, subv = is_independent(ge, d, trials=trials, seed=rng.getrandbits(63),
                                   p=p, threshold=threshold)
        if sub is True:
            continue
        circuit = False if sub is False else None
        if circuit is False:
            mc_bound += subv.certificate.failure_bound
        out = replace(verdict, circuit=circuit,
                      certificate=_with_bound(verdict.certificate, mc_bound),
                      flexible_circuit=False if circuit is False else None)
        return circuit, out
    return True, _finish_circuit_true(g, d, verdict, threshold)


def _with_bound(cert: Certificate, bound: float) -> Certificate:
    if cert.kind != CERT_MONTE_CARLO:
        return cert
    return Certificate(cert.kind, failure_bound=bound, witness=cert.witness)


def _finish_circuit_true(
    g: Graph, d: int, verdict: MatroidVerdict, threshold: float
) -> MatroidVerdict:
    """Once G is a circuit its generic rank is |E|-1, so flexibility reduces
    to a count comparison; a small cut settles it outright."""
    target = rigidity_target(g, d)
    if g.m - 1 >= target:
        flex: Optional[bool] = False
    elif g.n >= d + 2 and small_cut(g, d) is not None:
        flex = True
    elif verdict.certificate.kind != CERT_MONTE_CARLO:
        flex = True
    else:
        flex = True if verdict.certificate.failure_bound <= threshold else None
    rigid = (not flex) if flex is not None else verdict.rigid
    return replace(verdict, circuit=True, flexible_circuit=flex, rigid=rigid)


def is_flexible_circuit(
    g: Graph, d: int, trials: int = DEFAULT_TRIALS, seed: int = 0,
    p: int = DEFAULT_PRIME, threshold: float = DEFAULT_THRESHOLD,
) -> tuple[Optional[bool], MatroidVerdict]:
    """Circuit and not rigid."""
    circ, verdict = is_circuit(g, d, trials=trials, seed=seed, p=p, threshold=threshold)
    if circ is None:
        return None, verdict
    if circ is False:
        return False, replace(verdict, flexible_circuit=False)
    return verdict.flexible_circuit, verdict


def stress_support(
    g: Graph, d: int, seed: int = 0, p: int = DEFAULT_PRIME
) -> Optional[frozenset[tuple[int, int]]]:
    """Support of the unique row dependency of R(G,p) at a random point.

    Returns the edges carrying a nonzero entry of the one-dimensional left
    null space, or None when the nullity at the sampled point is not one.
    When the generic nullity is one this support contains the unique circuit,
    and each edge outside it deterministically leaves a dependent deletion.
    """
    rng = random.Random(seed)
    rows = _matrix_rows(g, d, rng.getrandbits(63), p)
    rank, null = rank_and_left_null_mod_p(rows, p)
    if len(null) != 1:
        return None
    return frozenset(e for e, x in zip(g.edges, null[0]) if x)


def rank_rational(g: Graph, d: int, seed: int = 0) -> int:
    """Exact rank over Q at integer coordinates (cross-check path)."""
    rows = _matrix_rows(g, d, seed, None)
    return rank_exact_int(rows)
