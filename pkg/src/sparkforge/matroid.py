"""Transversal matroid girth via Hall's condition and random representations.

A bipartite graph on ground elements (left) and match targets (right)
defines a transversal matroid: a set of ground elements is independent when
it can be matched injectively into its neighborhoods.  The girth, the size
of the smallest dependent set, is the smallest |C| whose total neighborhood
has at most |C| - 1 vertices.

A random integer matrix supported on the bipartite adjacency represents
the matroid with probability at least 1/2 per draw, which turns spark
computations into one-sided girth estimates: spark never exceeds girth, so
the max over independent draws only improves.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .errors import BadK, BudgetExceeded, ShapeError, ZeroMatrix
from .exact_linalg import ExactMatrix
from .spark_engine import DEFAULT_BUDGET, spark

__all__ = [
    "BipartiteGraph",
    "SimpleGraph",
    "GirthResult",
    "hall_girth",
    "random_representation",
    "girth_via_representation",
    "clique_gadget",
]


@dataclass(frozen=True)
class BipartiteGraph:
    """Ground elements 0..ground_size-1, each adjacent to right vertices."""

    ground_size: int
    right_size: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.ground_size < 0 or self.right_size < 0:
            raise ShapeError("negative sizes")
        adj = tuple(tuple(sorted(set(nbrs))) for nbrs in self.adj)
        object.__setattr__(self, "adj", adj)
        if len(adj) != self.ground_size:
            raise ShapeError("adjacency length must equal ground_size")
        for nbrs in adj:
            for v in nbrs:
                if not 0 <= v < self.right_size:
                    raise ShapeError(f"right vertex {v} out of range")

    @classmethod
    def from_dict(cls, data: dict) -> "BipartiteGraph":
        return cls(
            ground_size=int(data["ground"]),
            right_size=int(data["right"]),
            adj=tuple(tuple(int(v) for v in nbrs) for nbrs in data["adj"]),
        )

    def to_dict(self) -> dict:
        return {
            "ground": self.ground_size,
            "right": self.right_size,
            "adj": [list(nbrs) for nbrs in self.adj],
        }


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected loop-free graph; edges stored as sorted pairs."""

    vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertices < 0:
            raise ShapeError("negative vertex count")
        canon = set()
        for a, b in self.edges:
            if a == b:
                raise ShapeError("self loops are not allowed")
            if not (0 <= a < self.vertices and 0 <= b < self.vertices):
                raise ShapeError(f"edge ({a}, {b}) out of range")
            canon.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @classmethod
    def from_dict(cls, data: dict) -> "SimpleGraph":
        return cls(
            vertices=int(data["vertices"]),
            edges=tuple((int(a), int(b)) for a, b in data["edges"]),
        )

    def to_dict(self) -> dict:
        return {"vertices": self.vertices, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class GirthResult:
    """Girth value with provenance.

    ``girth`` equals ground_size + 1 (with witness None) when no dependent
    set exists.  A witness from the hall method fails Hall's condition; a
    witness from the representation method indexes ground columns that were
    rank deficient in the best draw.
    """

    girth: int
    ground_size: int
    witness: tuple[int, ...] | None
    method: str
    trials: int | None = None
    seed: int | None = None

    @property
    def sentinel(self) -> bool:
        return self.girth == self.ground_size + 1

    def as_dict(self) -> dict:
        return {
            "girth": self.girth,
            "ground": self.ground_size,
            "sentinel": self.sentinel,
            "witness": list(self.witness) if self.witness is not None else None,
            "method": self.method,
            "trials": self.trials,
            "seed": self.seed,
        }


def hall_girth(g: BipartiteGraph, budget: int = DEFAULT_BUDGET) -> GirthResult:
    """Exact girth by checking Hall's condition on ascending subset sizes.

    A subset C is dependent as soon as its total neighborhood has at most
    |C| - 1 vertices; the first such C in size-then-lexicographic order is
    the witness.
    """
    n = g.ground_size
    masks = [0] * n
    for e, nbrs in enumerate(g.adj):
        for v in nbrs:
            masks[e] |= 1 << v
    checked = 0
    for k in range(1, n + 1):
        level = math.comb(n, k)
        if checked + level > budget:
            raise BudgetExceeded(
                f"size-{k} level needs {level} more subsets, budget {budget}",
                k_reached=k,
            )
        for combo in itertools.combinations(range(n), k):
            checked += 1
            union = 0
            for e in combo:
                union |= masks[e]
            if union.bit_count() <= k - 1:
                return GirthResult(
                    girth=k, ground_size=n, witness=combo, method="hall_oracle"
                )
    return GirthResult(girth=n + 1, ground_size=n, witness=None, method="hall_oracle")


def random_representation(g: BipartiteGraph, rng_seed: int) -> ExactMatrix:
    """Random integer matrix supported on the adjacency pattern.

    Entry (i, j) for right vertex i adjacent to ground element j is drawn
    uniformly from {1, ..., ground_size * 2^(ground_size + 1)}; other
    entries are zero.  Each draw represents the transversal matroid with
    probability at least 1/2, and failures only shrink independent sets,
    never enlarge them.
    """
    if g.right_size < 1:
        raise ShapeError("need at least one right vertex")
    n = g.ground_size
    hi = n * 2 ** (n + 1)
    rng = random.Random(rng_seed)
    columns = []
    for j in range(n):
        col = [0] * g.right_size
        for i in g.adj[j]:
            col[i] = rng.randint(1, hi)
        columns.append(col)
    entries = [columns[j][i] for i in range(g.right_size) for j in range(n)]
    return ExactMatrix(g.right_size, n, entries)


def girth_via_representation(
    g: BipartiteGraph, trials: int, rng_seed: int, budget: int = DEFAULT_BUDGET
) -> GirthResult:
    """One-sided girth estimate: the max spark over random representations.

    Every draw satisfies spark <= girth, so the estimate only ever falls
    short, and each draw independently achieves equality with probability
    at least 1/2.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    if g.right_size < 1:
        raise ShapeError("need at least one right vertex")
    master = random.Random(rng_seed)
    seeds = [master.randrange(2**62) for _ in range(trials)]
    best = None
    for s in seeds:
        matrix = random_representation(g, s)
        try:
            cert = spark(matrix, budget=budget)
        except ZeroMatrix:
            # Every ground element is isolated; singletons are dependent.
            return GirthResult(
                girth=1,
                ground_size=g.ground_size,
                witness=(0,),
                method="representation",
                trials=trials,
                seed=rng_seed,
            )
        if best is None or cert.spark > best.spark:
            best = cert
    return GirthResult(
        girth=best.spark,
        ground_size=g.ground_size,
        witness=best.witness,
        method="representation",
        trials=trials,
        seed=rng_seed,
    )


def clique_gadget(g: SimpleGraph, k: int) -> BipartiteGraph:
    """Bipartite gadget whose transversal matroid girth detects k-cliques.

    Ground elements are the edges of g in sorted order.  Each edge is
    adjacent to its two endpoints plus C(k,2) - k - 1 shared padding
    vertices, so a set of c edges is dependent exactly when it spans at
    most c + k - C(k,2) vertices.  The smallest such set of size C(k,2)
    is a k-clique, making the girth equal C(k,2) if and only if g contains
    one.  Needs k >= 4 so the padding count is nonnegative.
    """
    if k < 4:
        raise BadK("gadget needs k >= 4")
    pads = math.comb(k, 2) - k - 1
    right = g.vertices + pads
    pad_block = tuple(range(g.vertices, right))
    adj = tuple((a, b) + pad_block for a, b in g.edges)
    return BipartiteGraph(ground_size=len(g.edges), right_size=right, adj=adj)
