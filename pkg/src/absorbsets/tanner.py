"""Tanner graphs, induced subgraphs and the absorbing-set predicate.

Variables and checks are indexed from 0 internally.  Human-facing labels
(``v1``, ``c3``) are 1-based and produced by :func:`var_label` / :func:`check_label`.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from absorbsets import gf2


def var_label(i: int) -> str:
    return f"v{i + 1}"


def check_label(j: int) -> str:
    return f"c{j + 1}"


@dataclass(frozen=True)
class TannerGraph:
    """Bipartite graph of ``num_variables`` variables and ``num_checks`` checks.

    ``check_nbrs[j]`` is the sorted tuple of variables adjacent to check ``j``.
    """

    num_variables: int
    check_nbrs: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        for j, nbrs in enumerate(self.check_nbrs):
            if len(set(nbrs)) != len(nbrs):
                raise ValueError(f"duplicate edge at check {check_label(j)}")
            for v in nbrs:
                if not 0 <= v < self.num_variables:
                    raise ValueError(f"variable index {v} out of range at check {check_label(j)}")

    @classmethod
    def from_edges(cls, num_variables: int, num_checks: int, edges: Iterable[tuple[int, int]], name: str = "") -> TannerGraph:
        """Build from 0-based ``(variable, check)`` pairs."""
        nbrs: list[set[int]] = [set() for _ in range(num_checks)]
        for v, c in edges:
            if not 0 <= c < num_checks:
                raise ValueError(f"check index {c} out of range")
            if v in nbrs[c]:
                raise ValueError(f"duplicate edge ({var_label(v)}, {check_label(c)})")
            nbrs[c].add(v)
        return cls(num_variables, tuple(tuple(sorted(s)) for s in nbrs), name)

    @property
    def num_checks(self) -> int:
        return len(self.check_nbrs)

    @cached_property
    def var_nbrs(self) -> tuple[tuple[int, ...], ...]:
        acc: list[list[int]] = [[] for _ in range(self.num_variables)]
        for c, nbrs in enumerate(self.check_nbrs):
            for v in nbrs:
                acc[v].append(c)
        return tuple(tuple(a) for a in acc)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All ``(variable, check)`` pairs in check-major order."""
        return tuple((v, c) for c, nbrs in enumerate(self.check_nbrs) for v in nbrs)

    def var_degree(self, v: int) -> int:
        return len(self.var_nbrs[v])

    def check_degree(self, c: int) -> int:
        return len(self.check_nbrs[c])

    def to_biadjacency(self) -> gf2.BitMatrix:
        H = gf2.zeros(self.num_checks, self.num_variables)
        for c, nbrs in enumerate(self.check_nbrs):
            H[c, list(nbrs)] = 1
        return H

    def neighborhood(self, variables: Iterable[int]) -> frozenset[int]:
        """N(S): every check adjacent to some variable of S."""
        return frozenset(c for v in variables for c in self.var_nbrs[v])


def from_biadjacency(H: gf2.BitMatrix, name: str = "") -> TannerGraph:
    """Tanner graph with an edge (v_i, c_j) exactly when H[j, i] = 1."""
    H = gf2.as_bits(H, ndim=2)
    return TannerGraph(H.shape[1], tuple(tuple(int(i) for i in np.flatnonzero(row)) for row in H), name)


def _check_subset(G: TannerGraph, S: Iterable[int]) -> frozenset[int]:
    members = frozenset(S)
    if not members:
        raise ValueError("variable subset must be non-empty")
    bad = [v for v in members if not 0 <= v < G.num_variables]
    if bad:
        raise ValueError(f"variable indices out of range: {sorted(bad)}")
    return members


@dataclass(frozen=True)
class SubgraphProfile:
    """Degree/parity profile of the subgraph induced by S and N(S)."""

    variables: frozenset[int]
    odd_checks: frozenset[int]
    even_checks: frozenset[int]
    # per variable: (even-degree neighbours, odd-degree neighbours) inside G_S
    tallies: dict[int, tuple[int, int]]
    check_degrees: dict[int, int]

    @property
    def a(self) -> int:
        return len(self.variables)

    @property
    def b(self) -> int:
        return len(self.odd_checks)

    @property
    def neighborhood(self) -> frozenset[int]:
        return self.odd_checks | self.even_checks

    @property
    def absorbing(self) -> bool:
        return all(even > odd for even, odd in self.tallies.values())


def induced_profile(G: TannerGraph, S: Iterable[int]) -> SubgraphProfile:
    """Profile of G_S; check degrees are counted inside G_S, not in G."""
    members = _check_subset(G, S)
    degree: Counter[int] = Counter(c for v in members for c in G.var_nbrs[v])
    odd = frozenset(c for c, d in degree.items() if d % 2)
    even = frozenset(degree) - odd
    tallies = {}
    for v in members:
        n_odd = sum(1 for c in G.var_nbrs[v] if c in odd)
        tallies[v] = (G.var_degree(v) - n_odd, n_odd)
    return SubgraphProfile(members, odd, even, tallies, dict(degree))


def is_absorbing(G: TannerGraph, S: Iterable[int]) -> tuple[int, int] | None:
    """Return ``(a, b)`` if S is an (a,b)-absorbing set, else ``None``."""
    p = induced_profile(G, S)
    return (p.a, p.b) if p.absorbing else None


def closure_condition(G: TannerGraph, S: Iterable[int], checks: Iterable[int]) -> bool:
    """True iff every listed check has all of its neighbours in G inside S."""
    members = frozenset(S)
    for c in checks:
        if not 0 <= c < G.num_checks:
            raise ValueError(f"check index {c} out of range")
        if not members.issuperset(G.check_nbrs[c]):
            return False
    return True


@dataclass(frozen=True)
class StructureSummary:
    connected: bool
    acyclic: bool
    leaves: frozenset[tuple[str, int]]  # ("v", i) or ("c", j)


def structure_summary(G: TannerGraph, S: Iterable[int]) -> StructureSummary:
    """Connectivity, acyclicity and leaves (degree-1 nodes) of G_S."""
    members = _check_subset(G, S)
    checks = G.neighborhood(members)
    adj: dict[tuple[str, int], list[tuple[str, int]]] = {("v", v): [] for v in members}
    adj.update({("c", c): [] for c in checks})
    n_edges = 0
    for v in members:
        for c in G.var_nbrs[v]:
            adj[("v", v)].append(("c", c))
            adj[("c", c)].append(("v", v))
            n_edges += 1
    components = _count_components(adj)
    # a forest has |E| = |V| - (#components)
    acyclic = n_edges == len(adj) - components
    leaves = frozenset(node for node, nb in adj.items() if len(nb) == 1)
    return StructureSummary(components == 1, acyclic, leaves)


def _count_components(adj: dict) -> int:
    seen = set()
    count = 0
    for start in adj:
        if start in seen:
            continue
        count += 1
        stack = [start]
        seen.add(start)
        while stack:
            node = stack.pop()
            for nb in adj[node]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
    return count


def subgraph(G: TannerGraph, S: Iterable[int], name: str = "") -> tuple[TannerGraph, list[int], list[int]]:
    """The induced graph G_S relabelled compactly.

    Returns the new graph plus the original indices of its variables and checks
    (both in ascending order), so results can be mapped back to G.
    """
    members = sorted(_check_subset(G, S))
    checks = sorted(G.neighborhood(members))
    vpos = {v: i for i, v in enumerate(members)}
    nbrs = tuple(tuple(sorted(vpos[v] for v in G.check_nbrs[c] if v in vpos)) for c in checks)
    return TannerGraph(len(members), nbrs, name), members, checks
