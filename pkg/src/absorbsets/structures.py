"""Failure-inducing sets, trapping sets, absorbing-set censuses and certificates.

Every search here is exhaustive and runs in lexicographic order of variable
indices, so repeated runs give identical results.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from absorbsets import gf2
from absorbsets.decoder import (
    DEFAULT_MAX_ITERS,
    ConvergenceReport,
    Outcome,
    Status,
    classify_outcome,
    compute_syndrome,
    convergence_report,
    gallager_b_decode,
)
from absorbsets.tanner import TannerGraph, induced_profile, is_absorbing, structure_summary, subgraph

# ---------------------------------------------------------------------------
# failure-inducing sets


@dataclass(frozen=True)
class FailureRecord:
    variables: frozenset[int]
    outcome: Outcome
    report: ConvergenceReport
    status: Status
    period: int | None = None


@dataclass(frozen=True)
class FailureCensus:
    """Failures among all error patterns of weight 1..w_max."""

    graph_name: str
    w_max: int
    tested: int
    failures: tuple[FailureRecord, ...]

    @property
    def critical_number(self) -> int | None:
        """Smallest failure size, or ``None`` when nothing failed up to ``w_max``."""
        return min((len(f.variables) for f in self.failures), default=None)

    @property
    def critical_number_label(self) -> str:
        mu = self.critical_number
        return f"> {self.w_max}" if mu is None else str(mu)

    @property
    def strength(self) -> int:
        mu = self.critical_number
        return sum(1 for f in self.failures if len(f.variables) == mu) if mu is not None else 0


def _default_stabilizers(G: TannerGraph, stabilizers) -> np.ndarray:
    if stabilizers is None:
        return G.to_biadjacency()
    stabilizers = gf2.as_bits(stabilizers, ndim=2)
    if stabilizers.shape[1] != G.num_variables:
        raise ValueError(f"stabilizer matrix has {stabilizers.shape[1]} columns, graph has {G.num_variables} variables")
    return stabilizers


def decode_subset(G: TannerGraph, subset: Iterable[int], stabilizers=None, max_iters: int = DEFAULT_MAX_ITERS):
    """Decode the syndrome of the error supported on ``subset``; returns (trace, outcome)."""
    e = gf2.indicator(subset, G.num_variables)
    trace = gallager_b_decode(G, compute_syndrome(G, e), max_iters)
    return trace, classify_outcome(e, trace, _default_stabilizers(G, stabilizers))


def _failure_record(G, subset, stabilizers, max_iters) -> FailureRecord | None:
    trace, outcome = decode_subset(G, subset, stabilizers, max_iters)
    if outcome.is_success:
        return None
    return FailureRecord(frozenset(subset), outcome, convergence_report(trace), trace.status, trace.period)


def _census_shard(args) -> list[FailureRecord]:
    G, stabilizers, max_iters, subsets = args
    return [r for S in subsets if (r := _failure_record(G, S, stabilizers, max_iters)) is not None]


def _patterns(variables: Sequence[int], w_max: int) -> Iterator[tuple[int, ...]]:
    for w in range(1, w_max + 1):
        yield from itertools.combinations(variables, w)


def census_failure_inducing(
    G: TannerGraph,
    stabilizers=None,
    w_max: int = 3,
    max_iters: int = DEFAULT_MAX_ITERS,
    workers: int = 1,
) -> FailureCensus:
    """Decode every error pattern of weight 1..w_max and collect the failures.

    ``stabilizers`` defaults to the graph's own check matrix.  A pattern fails
    when its outcome is neither exact nor degenerate recovery.  With
    ``workers > 1`` the patterns are split into shards decoded in separate
    processes; results are merged back in lexicographic order.
    """
    if not 0 <= w_max <= G.num_variables:
        raise ValueError(f"w_max must lie in [0, {G.num_variables}], got {w_max}")
    stabilizers = _default_stabilizers(G, stabilizers)
    patterns = list(_patterns(range(G.num_variables), w_max))
    if workers <= 1 or len(patterns) < 2 * workers:
        failures = _census_shard((G, stabilizers, max_iters, patterns))
    else:
        step = -(-len(patterns) // workers)
        shards = [(G, stabilizers, max_iters, patterns[i : i + step]) for i in range(0, len(patterns), step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            failures = [r for part in pool.map(_census_shard, shards) for r in part]
    return FailureCensus(G.name, w_max, len(patterns), tuple(failures))


def failure_against(G: TannerGraph, T: Iterable[int], F: Iterable[int], stabilizers=None, max_iters: int = DEFAULT_MAX_ITERS) -> bool:
    """Whether F, initially in error, leaves T failing.

    Failing means a logical error, a check of N(T) not matched on the
    terminal window, or a variable of T whose estimate never settles.
    """
    T = frozenset(T)
    trace, outcome = decode_subset(G, F, stabilizers, max_iters)
    if outcome.is_success:
        return False
    if outcome is Outcome.LOGICAL_ERROR:
        return True
    rep = convergence_report(trace)
    return bool(rep.checks_not_matched & G.neighborhood(T)) or bool(rep.vars_not_converged & T)


def is_trapping_set(G: TannerGraph, T: Iterable[int], stabilizers=None, w_max: int | None = None, max_iters: int = DEFAULT_MAX_ITERS) -> frozenset[int] | None:
    """Return the first failure-inducing F within T (by weight, then lexicographic), else ``None``."""
    members = sorted(frozenset(T))
    if not members:
        raise ValueError("trapping-set candidate must be non-empty")
    w_max = len(members) if w_max is None else min(w_max, len(members))
    for F in _patterns(members, w_max):
        if failure_against(G, members, F, stabilizers, max_iters):
            return frozenset(F)
    return None


# ---------------------------------------------------------------------------
# absorbing-set census


def _variable_adjacency(G: TannerGraph) -> list[set[int]]:
    adj = [set() for _ in range(G.num_variables)]
    for nbrs in G.check_nbrs:
        for v in nbrs:
            adj[v].update(nbrs)
    for v in range(G.num_variables):
        adj[v].discard(v)
    return adj


def connected_subsets(G: TannerGraph, max_size: int, variables: Iterable[int] | None = None) -> Iterator[frozenset[int]]:
    """Every subset of at most ``max_size`` variables whose induced graph is connected.

    Variables are connected when they share a check.  Each subset is produced
    once, grown from its smallest member (the ESU scheme).
    """
    allowed = frozenset(range(G.num_variables)) if variables is None else frozenset(variables)
    adj = [frozenset(u for u in nb if u in allowed) for nb in _variable_adjacency(G)]

    def extend(sub: frozenset[int], closed: frozenset[int], ext: list[int], root: int) -> Iterator[frozenset[int]]:
        # closed = sub plus every neighbour of sub
        yield sub
        if len(sub) == max_size:
            return
        ext = list(ext)
        while ext:
            w = ext.pop()
            exclusive = [u for u in adj[w] if u > root and u not in closed]
            yield from extend(sub | {w}, closed | adj[w], ext + exclusive, root)

    if max_size < 1:
        return
    for root in sorted(allowed):
        nbrs = [u for u in adj[root] if u > root]
        yield from extend(frozenset({root}), adj[root] | {root}, nbrs, root)


def census_absorbing(
    G: TannerGraph,
    a_max: int,
    variables: Iterable[int] | None = None,
    connected_only: bool = False,
) -> list[tuple[frozenset[int], tuple[int, int]]]:
    """All absorbing sets of size at most ``a_max``, optionally within ``variables``.

    Each connected component of an absorbing set is itself absorbing, and
    components have disjoint check neighbourhoods, so the census enumerates
    connected absorbing sets and then closes under unions of pairwise
    check-disjoint members.  Results are sorted by size, then lexicographically.
    """
    if a_max < 0:
        raise ValueError("a_max must be non-negative")
    connected = [S for S in connected_subsets(G, a_max, variables) if G.neighborhood(S) and is_absorbing(G, S)]
    connected.sort(key=lambda S: (len(S), sorted(S)))
    found: set[frozenset[int]] = set(connected)
    if not connected_only:
        hoods = [G.neighborhood(S) for S in connected]

        def combine(start: int, acc: frozenset[int], acc_hood: frozenset[int], parts: int) -> None:
            for i in range(start, len(connected)):
                S = connected[i]
                if len(acc) + len(S) > a_max or acc_hood & hoods[i] or acc & S:
                    continue
                union = acc | S
                if parts >= 1:
                    found.add(union)
                combine(i + 1, union, acc_hood | hoods[i], parts + 1)

        combine(0, frozenset(), frozenset(), 0)
    out = []
    for S in found:
        ab = is_absorbing(G, S)
        if ab is None:
            raise AssertionError(f"census produced a non-absorbing set {sorted(S)}")
        out.append((S, ab))
    out.sort(key=lambda item: (len(item[0]), sorted(item[0])))
    return out


# ---------------------------------------------------------------------------
# partitions and symmetric stabilizers


def _absorbing_subsets_containing(G: TannerGraph, pivot: int, pool: Sequence[int]) -> Iterator[frozenset[int]]:
    rest = [v for v in pool if v != pivot]
    for size in range(0, len(rest) + 1):
        for extra in itertools.combinations(rest, size):
            S = frozenset((pivot, *extra))
            if is_absorbing(G, S):
                yield S


def partition_into_absorbing(G: TannerGraph, S: Iterable[int], parts: int) -> list[frozenset[int]] | None:
    """Split S into ``parts`` disjoint absorbing sets, or return ``None``.

    Parts are searched smallest first, each containing the lowest variable not
    yet covered.  For two parts of an (a,0)-absorbing S the returned parts are
    checked to share their odd-check sets.
    """
    members = sorted(frozenset(S))
    if not members:
        raise ValueError("subset must be non-empty")
    if parts < 1:
        raise ValueError("parts must be at least 1")

    def search(pool: list[int], remaining: int) -> list[frozenset[int]] | None:
        if remaining == 1:
            return [frozenset(pool)] if pool and is_absorbing(G, pool) else None
        if len(pool) < remaining:
            return None
        for first in _absorbing_subsets_containing(G, pool[0], pool):
            rest = [v for v in pool if v not in first]
            tail = search(rest, remaining - 1)
            if tail is not None:
                return [first, *tail]
        return None

    result = search(members, parts)
    whole = is_absorbing(G, members)
    if result is not None and parts == 2 and whole is not None and whole[1] == 0:
        p1, p2 = (induced_profile(G, part) for part in result)
        if p1.odd_checks != p2.odd_checks:
            raise AssertionError("two absorbing parts of an (a,0)-absorbing set must share odd checks")
    return result


def _local_structure(G: TannerGraph, part: Iterable[int]) -> tuple[list[int], Counter]:
    """Variables of the part and the multiset of in-part check neighbourhoods."""
    members = sorted(part)
    mset = frozenset(members)
    hoods = Counter(frozenset(v for v in G.check_nbrs[c] if v in mset) for c in G.neighborhood(members))
    return members, hoods


def induced_isomorphism(G: TannerGraph, P: Iterable[int], Q: Iterable[int]) -> dict[int, int] | None:
    """A variable bijection P -> Q that carries G_P onto G_Q, or ``None``.

    Checks of an induced graph are identified by their variable
    neighbourhoods, so a bijection is an isomorphism exactly when it maps the
    multiset of check neighbourhoods of P onto that of Q.  Backtracking is
    pruned by the sorted check-degree signature of each variable.
    """
    pv, ph = _local_structure(G, P)
    qv, qh = _local_structure(G, Q)
    if len(pv) != len(qv) or sorted(len(h) for h in ph.elements()) != sorted(len(h) for h in qh.elements()):
        return None

    def signature(hoods: Counter, v: int) -> tuple[int, ...]:
        return tuple(sorted(len(h) for h in hoods.elements() if v in h))

    psig = {v: signature(ph, v) for v in pv}
    qsig = {v: signature(qh, v) for v in qv}
    if sorted(psig.values()) != sorted(qsig.values()):
        return None

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent() -> bool:
        # every P-check wholly inside the mapped domain must appear in Q
        image = Counter(frozenset(mapping[v] for v in h) for h in ph.elements() if h <= mapping.keys())
        return all(qh[h] >= n for h, n in image.items())

    def backtrack(i: int) -> bool:
        if i == len(pv):
            return Counter(frozenset(mapping[v] for v in h) for h in ph.elements()) == qh
        v = pv[i]
        for w in qv:
            if w in used or qsig[w] != psig[v]:
                continue
            mapping[v] = w
            used.add(w)
            if consistent() and backtrack(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if backtrack(0) else None


def _equal_partitions(items: list[int], size: int) -> Iterator[list[frozenset[int]]]:
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for extra in itertools.combinations(rest, size - 1):
        block = frozenset((head, *extra))
        remaining = [v for v in rest if v not in block]
        for tail in _equal_partitions(remaining, size):
            yield [block, *tail]


class CertificateKind(enum.Enum):
    THM1_ODD_CHECKS = "Thm1_OddChecks"
    THM2_ROWSPACE = "Thm2_Rowspace"
    THM6_PARTITION_UNION = "Thm6_PartitionUnion"
    THM7_EMBEDDED_UNION = "Thm7_EmbeddedUnion"
    THM8_SINGLE_PATH = "Thm8_SinglePath"
    THM9_MULTI_PATH = "Thm9_MultiPath"
    THM10_TREE = "Thm10_Tree"
    THM11_MULTI_TREE = "Thm11_MultiTree"
    THM12_MULTI_PARTITION = "Thm12_MultiPartition"
    SYMMETRIC_STABILIZER = "SymmetricStabilizer"


@dataclass(frozen=True, eq=False)
class Certificate:
    """A satisfied hypothesis set together with the evidence for it.

    ``designated_checks`` are the checks the theorem proves stay unmatched
    when A1 is in error.  ``decoded_unmatched`` and ``decode_confirms`` record
    the cross-check by actual decoding (``None`` when not applicable).
    """

    kind: CertificateKind
    witness: dict = field(default_factory=dict)
    designated_checks: frozenset[int] = frozenset()
    decoded_unmatched: frozenset[int] | None = None
    decode_confirms: bool | None = None


def check_symmetric_stabilizer(G: TannerGraph, S: Iterable[int]) -> Certificate | None:
    """Search for an even partition of S into isomorphic parts with equal odd-check sets.

    G_S must have no odd checks.  Partitions whose parts are all absorbing are
    tried before the rest; within each pass the number of parts grows from 2.
    """
    members = sorted(frozenset(S))
    if not members:
        raise ValueError("subset must be non-empty")
    profile = induced_profile(G, members)
    if profile.b != 0:
        return None
    a = len(members)
    counts = [m for m in range(2, a + 1, 2) if a % m == 0]
    for absorbing_only in (True, False):
        for m in counts:
            for partition in _equal_partitions(members, a // m):
                if absorbing_only and not all(is_absorbing(G, p) for p in partition):
                    continue
                odd = {induced_profile(G, p).odd_checks for p in partition}
                if len(odd) != 1:
                    continue
                maps = [induced_isomorphism(G, partition[0], p) for p in partition[1:]]
                if any(mp is None for mp in maps):
                    continue
                return Certificate(
                    CertificateKind.SYMMETRIC_STABILIZER,
                    {"parts": tuple(partition), "odd_checks": next(iter(odd)), "isomorphisms": tuple(maps)},
                    designated_checks=next(iter(odd)),
                )
    return None


# ---------------------------------------------------------------------------
# structure certificates


@dataclass(frozen=True)
class Connector:
    """A component of G outside the designated sets, cut at their variables.

    ``attachments`` lists (set index, variable, check) for every edge from
    the component into a designated set; those edges end at leaves of G_T.
    """

    variables: frozenset[int]
    checks: frozenset[int]
    attachments: tuple[tuple[int, int, int], ...]
    acyclic: bool
    is_path: bool
    dangling: bool  # has a leaf that is not a designated-set variable

    @property
    def sets_touched(self) -> frozenset[int]:
        return frozenset(i for i, _, _ in self.attachments)

    @property
    def size(self) -> int:
        return len(self.variables) + len(self.checks) + len(self.attachments)


def connectors(G: TannerGraph, sets: Sequence[frozenset[int]]) -> list[Connector]:
    """Components joining the sets, ordered by their smallest check."""
    owner = {v: i for i, A in enumerate(sets) for v in A}
    internal = set()
    for A in sets:
        internal |= induced_profile(G, A).even_checks
    free_checks = [c for c in range(G.num_checks) if c not in internal]
    seen: set[tuple[str, int]] = set()
    out = []
    for c0 in free_checks:
        if ("c", c0) in seen:
            continue
        vs: set[int] = set()
        cs: set[int] = set()
        attach: list[tuple[int, int, int]] = []
        stack = [("c", c0)]
        seen.add(("c", c0))
        while stack:
            kind, x = stack.pop()
            if kind == "c":
                cs.add(x)
                for v in G.check_nbrs[x]:
                    if v in owner:
                        attach.append((owner[v], v, x))
                    elif ("v", v) not in seen:
                        seen.add(("v", v))
                        stack.append(("v", v))
            else:
                vs.add(x)
                for c in G.var_nbrs[x]:
                    if c not in internal and ("c", c) not in seen:
                        seen.add(("c", c))
                        stack.append(("c", c))
        n_edges = sum(len(G.check_nbrs[c]) for c in cs)
        n_nodes = len(vs) + len(cs) + len(attach)
        acyclic = n_edges == n_nodes - 1
        degrees = [len(G.check_nbrs[c]) for c in cs] + [G.var_degree(v) for v in vs]
        is_path = acyclic and all(d <= 2 for d in degrees)
        dangling = any(d == 1 for d in degrees)
        out.append(Connector(frozenset(vs), frozenset(cs), tuple(sorted(attach)), acyclic, is_path, dangling))
    return out


@dataclass(frozen=True)
class CertifyResult:
    certificates: tuple[Certificate, ...]
    violations: dict[str, str]

    def kinds(self) -> set[CertificateKind]:
        return {c.kind for c in self.certificates}

    def get(self, kind: CertificateKind) -> Certificate | None:
        return next((c for c in self.certificates if c.kind is kind), None)


def _decode_unmatched(G: TannerGraph, A1: frozenset[int], max_iters: int) -> tuple[Status, frozenset[int]]:
    e = gf2.indicator(A1, G.num_variables)
    trace = gallager_b_decode(G, compute_syndrome(G, e), max_iters)
    return trace.status, convergence_report(trace).checks_not_matched


def certify(
    G: TannerGraph,
    A1: Iterable[int],
    others: Sequence[Iterable[int]] = (),
    size_limit: int = 20,
    cross_validate: bool = True,
    max_iters: int = DEFAULT_MAX_ITERS,
) -> CertifyResult:
    """Check the hypotheses of each failure theorem for A1 against ``others``.

    The odd-check and rowspace certificates concern A1 on its own induced
    graph.  The rest need A1 and the other sets to be disjoint absorbing sets
    with b >= 1 whose even checks see nothing outside their own set.  Connecting paths and trees are
    the components of G left after removing the sets and their even checks;
    only acyclic components of at most ``size_limit`` nodes whose leaves all
    lie in the sets qualify.
    """
    A1 = frozenset(A1)
    sets = [A1] + [frozenset(o) for o in others]
    certs: list[Certificate] = []
    violations: dict[str, str] = {}
    profiles = [induced_profile(G, A) for A in sets]
    p1 = profiles[0]

    # --- certificates on G_A1 alone
    sub, sub_vars, sub_checks = subgraph(G, A1)
    ones = np.ones(sub.num_variables, dtype=np.uint8)
    if not p1.absorbing:
        violations["Thm1_OddChecks"] = violations["Thm2_Rowspace"] = "A1 is not absorbing"
    elif p1.b >= 1:
        odd_local = frozenset(sub_checks[j] for j in range(sub.num_checks) if len(sub.check_nbrs[j]) % 2)
        trace = gallager_b_decode(sub, compute_syndrome(sub, ones), max_iters)
        zero_always = all(not r.estimated_syndrome.any() for r in trace.iterations)
        unmatched = frozenset(sub_checks[j] for j in convergence_report(trace).checks_not_matched)
        certs.append(Certificate(
            CertificateKind.THM1_ODD_CHECKS,
            {"a": p1.a, "b": p1.b},
            designated_checks=odd_local,
            decoded_unmatched=unmatched if cross_validate else None,
            decode_confirms=(zero_always and unmatched == p1.odd_checks) if cross_validate else None,
        ))
        violations["Thm2_Rowspace"] = "A1 has odd checks"
    else:
        violations["Thm1_OddChecks"] = "A1 has no odd checks"
        H_A = sub.to_biadjacency()
        in_rowspace = gf2.rowspace_contains(H_A, ones)
        expected = Outcome.DEGENERATE_RECOVERY if in_rowspace else Outcome.LOGICAL_ERROR
        confirms = None
        if cross_validate:
            trace = gallager_b_decode(sub, compute_syndrome(sub, ones), max_iters)
            confirms = classify_outcome(ones, trace, H_A) is expected
        certs.append(Certificate(
            CertificateKind.THM2_ROWSPACE,
            {"ones_in_rowspace": in_rowspace, "predicted": expected.value},
            decode_confirms=confirms,
        ))

    # --- shared hypotheses for the joint certificates
    def shared() -> str | None:
        if len(sets) < 2:
            return "needs at least one other set"
        for i, (A, p) in enumerate(zip(sets, profiles)):
            if not p.absorbing:
                return f"set {i + 1} is not absorbing"
            if p.b < 1:
                return f"set {i + 1} has no odd checks"
            if any(not set(G.check_nbrs[c]) <= A for c in p.even_checks):
                return f"an even check of set {i + 1} has neighbours outside it"
        for (i, A), (j, B) in itertools.combinations(enumerate(sets), 2):
            if A & B:
                return f"sets {i + 1} and {j + 1} overlap"
        return None

    reason = shared()
    later = [k.value for k in CertificateKind if k not in (CertificateKind.THM1_ODD_CHECKS, CertificateKind.THM2_ROWSPACE, CertificateKind.SYMMETRIC_STABILIZER)]
    if reason is not None:
        for name in later:
            violations[name] = reason
        return CertifyResult(tuple(certs), violations)

    found: list[tuple[CertificateKind, dict, frozenset[int]]] = []
    O1 = p1.odd_checks

    # partition union: the union is (a,0) with every check of N(A) closed, and b1 == b2
    if len(sets) == 2:
        union = sets[0] | sets[1]
        up = induced_profile(G, union)
        if not up.absorbing or up.b != 0:
            violations["Thm6_PartitionUnion"] = "A1 and A2 do not form an (a,0)-absorbing union"
        elif any(not set(G.check_nbrs[c]) <= union for c in up.neighborhood):
            violations["Thm6_PartitionUnion"] = "a check of N(A) has neighbours outside A"
        elif profiles[0].b != profiles[1].b:
            violations["Thm6_PartitionUnion"] = "b1 != b2"
        else:
            found.append((CertificateKind.THM6_PARTITION_UNION, {"union": union, "b": p1.b}, O1))
        D = O1 & profiles[1].odd_checks
        if D:
            found.append((CertificateKind.THM7_EMBEDDED_UNION, {"D": D}, D))
        else:
            violations["Thm7_EmbeddedUnion"] = "O_A1 and O_A2 are disjoint"
    else:
        violations["Thm6_PartitionUnion"] = violations["Thm7_EmbeddedUnion"] = "needs exactly two sets"

    comps = connectors(G, sets)
    qualifying = [k for k in comps if k.acyclic and not k.dangling and k.size <= size_limit and len(k.sets_touched) >= 2]

    def o1_hits(k: Connector) -> frozenset[int]:
        return O1 & k.checks

    if len(sets) == 2:
        paths = [k for k in qualifying if k.is_path]
        trees = [k for k in qualifying if not k.is_path]
        if len(paths) == 1:
            found.append((CertificateKind.THM8_SINGLE_PATH, {"path": paths[0]}, o1_hits(paths[0])))
        else:
            violations["Thm8_SinglePath"] = f"found {len(paths)} connecting paths, need exactly 1"
        if len(paths) >= 2:
            found.append((CertificateKind.THM9_MULTI_PATH, {"paths": tuple(paths)}, frozenset().union(*map(o1_hits, paths))))
        else:
            violations["Thm9_MultiPath"] = f"found {len(paths)} connecting paths, need at least 2"
        good_trees = [k for k in trees if len(o1_hits(k)) == 1]
        if trees and len(good_trees) != len(trees):
            violations["Thm10_Tree"] = violations["Thm11_MultiTree"] = "a connecting tree meets O_A1 more than once"
        else:
            if len(good_trees) == 1:
                found.append((CertificateKind.THM10_TREE, {"tree": good_trees[0]}, o1_hits(good_trees[0])))
            else:
                violations["Thm10_Tree"] = f"found {len(good_trees)} connecting trees, need exactly 1"
            if len(good_trees) >= 2:
                found.append((CertificateKind.THM11_MULTI_TREE, {"trees": tuple(good_trees)}, frozenset().union(*map(o1_hits, good_trees))))
            else:
                violations["Thm11_MultiTree"] = f"found {len(good_trees)} connecting trees, need at least 2"
        violations["Thm12_MultiPartition"] = "needs at least three sets"
    else:
        for name in ("Thm8_SinglePath", "Thm9_MultiPath", "Thm10_Tree", "Thm11_MultiTree"):
            violations[name] = "needs exactly two sets"
        incident = [k for k in qualifying if 0 in k.sets_touched]
        if not incident:
            violations["Thm12_MultiPartition"] = "no connecting tree touches A1"
        elif any(len(o1_hits(k)) != 1 for k in incident):
            violations["Thm12_MultiPartition"] = "a tree touching A1 meets O_A1 more than once"
        else:
            found.append((CertificateKind.THM12_MULTI_PARTITION, {"trees": tuple(qualifying)}, frozenset().union(*map(o1_hits, incident))))

    if found and cross_validate:
        status, unmatched = _decode_unmatched(G, A1, max_iters)
    for kind, witness, designated in found:
        confirms = decoded = None
        if cross_validate:
            decoded = unmatched
            confirms = status is not Status.MATCHED and designated <= unmatched <= O1
        certs.append(Certificate(kind, witness, designated, decoded, confirms))
    return CertifyResult(tuple(certs), violations)


# ---------------------------------------------------------------------------
# acyclic (a,0) sets


def acyclic_leaf_witness(G: TannerGraph, A: Iterable[int]) -> tuple[int, int] | None:
    """For an acyclic (a,0)-absorbing A, a leaf variable and its only check.

    Returns ``None`` when A is not an acyclic (a,0)-absorbing set.
    """
    A = frozenset(A)
    ab = is_absorbing(G, A)
    if ab is None or ab[1] != 0:
        return None
    summary = structure_summary(G, A)
    if not summary.acyclic:
        return None
    leaves = sorted(i for kind, i in summary.leaves if kind == "v")
    if not leaves:
        return None
    v = leaves[0]
    return v, G.var_nbrs[v][0]
