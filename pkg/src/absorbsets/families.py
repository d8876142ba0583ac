"""Graph families and named fixtures.

Family parameters count edges along paths and cycles.  Every generator uses a
canonical labelling documented on the function, so the same parameters always
give the same graph.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field

from absorbsets.tanner import TannerGraph, from_biadjacency


class FamilyError(ValueError):
    """Parameters that admit no legal bipartite labelling."""


@dataclass(frozen=True)
class FamilySpec:
    kind: str  # "path" | "cycle" | "theta" | "dumbbell"
    params: tuple[int, ...]
    variant: str = "variables"  # theta only: node type of the two junctions


def path(a: int) -> TannerGraph:
    """v1 c1 v2 c2 ... c_{a-1} v_a."""
    if a < 2:
        raise FamilyError(f"path needs a >= 2 variables, got {a}")
    return TannerGraph(a, tuple((i, i + 1) for i in range(a - 1)), f"path({a})")


def cycle(a: int) -> TannerGraph:
    """v_i -- c_i -- v_{i+1} around, with c_a closing back to v_1."""
    if a < 2:
        raise FamilyError(f"cycle needs a >= 2 variables, got {a}")
    return TannerGraph(a, tuple(tuple(sorted((i, (i + 1) % a))) for i in range(a)), f"cycle({a})")


class _Builder:
    def __init__(self) -> None:
        self.n = 0
        self.checks: list[set[int]] = []

    def var(self) -> int:
        self.n += 1
        return self.n - 1

    def check(self, *vs: int) -> int:
        self.checks.append(set(vs))
        return len(self.checks) - 1

    def link(self, v: int, c: int) -> None:
        self.checks[c].add(v)

    def build(self, name: str) -> TannerGraph:
        return TannerGraph(self.n, tuple(tuple(sorted(s)) for s in self.checks), name)


def theta(a: int, b: int, c: int, variant: str = "variables") -> tuple[TannerGraph, dict[str, frozenset[int]]]:
    """Two junctions joined by three internally disjoint paths of a, b, c edges.

    ``variant="variables"`` makes both junctions variable nodes, ``"checks"``
    makes them check nodes.  Both force every length to be even.  Variables
    are numbered along path A, then B, then C.  The returned subsets are the
    variable sets of the cycles A+C ("upper") and B+C ("lower").
    """
    lengths = (a, b, c)
    if variant not in ("variables", "checks"):
        raise FamilyError(f"unknown theta variant {variant!r}")
    if any(L < 2 or L % 2 for L in lengths):
        raise FamilyError(f"theta path lengths must be even and >= 2 when junctions share a node type, got {lengths}")
    bld = _Builder()
    junction_is_var = variant == "variables"
    if junction_is_var:
        u, w = bld.var(), bld.var()
    else:
        u, w = bld.check(), bld.check()
    path_vars: list[set[int]] = []
    for L in lengths:
        prev, prev_is_var = u, junction_is_var
        pv: set[int] = set()
        for _ in range(L - 1):
            if prev_is_var:
                node = bld.check(prev)
            else:
                node = bld.var()
                bld.link(node, prev)
                pv.add(node)
            prev, prev_is_var = node, not prev_is_var
        # L even, so the last interior node has the opposite type to w
        if junction_is_var:
            bld.link(w, prev)
        else:
            bld.link(prev, w)
        path_vars.append(pv)
    G = bld.build(f"theta({a},{b},{c},{variant})")
    junction_vars = {u, w} if variant == "variables" else set()
    subsets = {
        "upper": frozenset(junction_vars | path_vars[0] | path_vars[2]),
        "lower": frozenset(junction_vars | path_vars[1] | path_vars[2]),
        "all": frozenset(range(G.num_variables)),
    }
    return G, subsets


def dumbbell(a1: int, a2: int, b: int) -> tuple[TannerGraph, dict[str, frozenset[int]]]:
    """Two cycles of a1 and a2 edges joined by a path of b edges between variables.

    Cycle 1 holds variables 0..a1/2-1 (joined at variable 0), cycle 2 the next
    a2/2 (joined at its first variable), and the path interior comes last.
    With ``b = 0`` the two cycles share the joining variable.
    """
    if a1 < 4 or a2 < 4 or a1 % 2 or a2 % 2:
        raise FamilyError(f"dumbbell cycle lengths must be even and >= 4, got ({a1}, {a2})")
    if b < 0 or b % 2:
        raise FamilyError(f"dumbbell path joins two variables so its length must be even and >= 0, got {b}")
    bld = _Builder()
    cyc1 = [bld.var() for _ in range(a1 // 2)]
    for i in range(len(cyc1)):
        bld.check(cyc1[i], cyc1[(i + 1) % len(cyc1)])
    first2 = cyc1[0] if b == 0 else bld.var()
    cyc2 = [first2] + [bld.var() for _ in range(a2 // 2 - 1)]
    for i in range(len(cyc2)):
        bld.check(cyc2[i], cyc2[(i + 1) % len(cyc2)])
    prev = cyc1[0]
    for _ in range(b // 2 - 1):
        nxt = bld.var()
        bld.check(prev, nxt)
        prev = nxt
    if b:
        bld.check(prev, cyc2[0])
    G = bld.build(f"dumbbell({a1},{a2};{b})")
    return G, {"A1": frozenset(cyc1), "A2": frozenset(cyc2), "all": frozenset(range(G.num_variables))}


def generate(spec: FamilySpec) -> TannerGraph:
    kind = spec.kind.lower()
    try:
        if kind == "path":
            (a,) = spec.params
            return path(a)
        if kind == "cycle":
            (a,) = spec.params
            return cycle(a)
        if kind == "theta":
            a, b, c = spec.params
            return theta(a, b, c, spec.variant)[0]
        if kind == "dumbbell":
            a1, a2, b = spec.params
            return dumbbell(a1, a2, b)[0]
    except ValueError as exc:
        if isinstance(exc, FamilyError):
            raise
        raise FamilyError(f"{kind} takes a different number of parameters, got {spec.params}") from exc
    raise FamilyError(f"unknown family {spec.kind!r}")


def parse_family(text: str) -> FamilySpec:
    """Parse ``path:5``, ``cycle:7``, ``theta:6,6,4:checks`` or ``dumbbell:6,6,2``."""
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise FamilyError(f"cannot parse family {text!r}")
    try:
        params = tuple(int(p) for p in parts[1].split(","))
    except ValueError as exc:
        raise FamilyError(f"family parameters must be integers: {text!r}") from exc
    variant = parts[2] if len(parts) == 3 else "variables"
    return FamilySpec(parts[0], params, variant)


# ---------------------------------------------------------------------------
# constructions used by the theorem suites


def cycle_with_pendants(a: int, pendants: set[int] | frozenset[int]) -> TannerGraph:
    """cycle(a) plus one degree-1 check on each listed variable."""
    base = cycle(a)
    extra = tuple((v,) for v in sorted(pendants))
    return TannerGraph(a, base.check_nbrs + extra, f"cycle({a})+pendants{sorted(pendants)}")


def star_connected(cycle_sizes: list[int], stars: list[list[tuple[int, int]]]) -> tuple[TannerGraph, dict[str, frozenset[int]]]:
    """Cycles joined by stars.

    ``cycle_sizes[i]`` is the number of variables of cycle i.  Each star is a
    hub variable with one arm per ``(cycle index, variable position)``; an arm
    is a check adjacent to the hub and that cycle variable.  Subsets ``A1``,
    ``A2``, ... are the cycles' variable sets.
    """
    bld = _Builder()
    cycles = []
    for size in cycle_sizes:
        if size < 2:
            raise FamilyError("each cycle needs at least 2 variables")
        vs = [bld.var() for _ in range(size)]
        for i in range(size):
            bld.check(vs[i], vs[(i + 1) % size])
        cycles.append(vs)
    for arms in stars:
        hub = bld.var()
        for ci, pos in arms:
            bld.check(hub, cycles[ci][pos])
    G = bld.build(f"stars{cycle_sizes}")
    subsets = {f"A{i + 1}": frozenset(vs) for i, vs in enumerate(cycles)}
    return G, subsets


def random_even_tree(rng: random.Random, max_variables: int = 12) -> TannerGraph:
    """Random tree whose checks all have even degree and whose leaves are variables.

    Grown by hanging a new check (degree 2 or 4) with fresh variables on a
    random existing variable, so G itself is an acyclic (a,0)-absorbing set.
    """
    if max_variables < 2:
        raise FamilyError("need room for at least 2 variables")
    bld = _Builder()
    root = bld.var()
    bld.check(root, bld.var())
    while True:
        room = max_variables - bld.n
        options = [d for d in (2, 4) if d - 1 <= room]
        if not options or rng.random() < 0.2:
            break
        d = rng.choice(options)
        anchor = rng.randrange(bld.n)
        fresh = [bld.var() for _ in range(d - 1)]
        bld.check(anchor, *fresh)
    return bld.build("random_even_tree")


# ---------------------------------------------------------------------------
# named fixtures: literal 1-based (variable, check) edge lists read off the figures

_FIG1 = (4, 7, ((1, 1), (2, 1), (1, 4), (4, 4), (4, 3), (3, 3), (2, 2), (3, 2), (1, 6), (3, 6), (2, 5), (4, 7)))

_FIG2A = (5, 9, ((1, 1), (2, 1), (1, 4), (4, 4), (4, 3), (3, 3), (2, 2), (3, 2), (1, 5), (5, 5), (5, 6), (3, 6),
                 (5, 7), (2, 8), (4, 9)))

_FIG3A = (5, 15, ((1, 1), (2, 2), (3, 3), (4, 4), (5, 5),
                  (1, 6), (2, 6), (2, 7), (3, 7), (3, 8), (4, 8), (4, 9), (5, 9), (5, 10), (1, 10),
                  (1, 11), (3, 11), (1, 14), (4, 14), (2, 12), (4, 12), (2, 15), (5, 15), (5, 13), (3, 13)))

_FIG5 = (10, 25, tuple(
    [(i, i) for i in range(1, 11)]
    + [(i + 1, i) for i in range(1, 10)] + [(1, 10)]
    + [(i, i + 10) for i in (1, 3, 5, 7, 9)] + [(i, i + 11) for i in (1, 3, 5, 7, 9)]
    + [(8, 11), (8, 16), (4, 12), (4, 17), (10, 13), (10, 18), (6, 14), (6, 19), (2, 15), (2, 20)]
    + [(1, 21), (6, 21), (3, 22), (8, 22), (5, 23), (10, 23), (2, 24), (7, 24), (4, 25), (9, 25)]))

_FIG6 = (8, 10, ((1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 3),
                 (1, 4), (5, 4), (2, 5), (6, 5), (3, 6), (7, 6), (4, 7), (8, 7),
                 (5, 8), (6, 8), (6, 9), (7, 9), (7, 10), (8, 10)))

_EX7_H = (
    "11000000000",
    "01100000000",
    "00110000000",
    "00011000000",
    "00001100000",
    "00000110000",
    "00000011000",
    "00000001100",
    "00000000110",
    "00000000011",
    "10000000001",
    "01000000010",
    "00100100000",
    "00000010100",
)

# 1-based variable labels of designated subsets
_SUBSETS: dict[str, dict[str, tuple[int, ...]]] = {
    "fig1": {"T": (1, 2, 3, 4)},
    "fig2a": {"T": (1, 2, 3, 4, 5)},
    "fig3a": {"T": (1, 2, 3, 4, 5)},
    "fig5": {"all": tuple(range(1, 11))},
    "fig6": {"all": tuple(range(1, 9)), "A1": (1, 2, 5, 6), "A2": (3, 4, 7, 8)},
    "ex7_H": {"all": tuple(range(1, 12)), "A1": (1, 2, 10, 11), "A2": (3, 4, 5, 6), "A3": (7, 8, 9)},
}

FIXTURE_NAMES = ("fig1", "fig2a", "fig3a", "fig5", "fig6", "ex7_H")

# sha256 over the canonical edge text, see fixture_checksum
FIXTURE_CHECKSUMS = {
    "fig1": "18a8a97751fff36fcdca5344a46fa52e2d1a69988242a4dd71dba45c6a112122",
    "fig2a": "882eb3ec2e7f4b597b064b3c84769aa4ede05c1506ec3edbb5bbd22d57e08660",
    "fig3a": "fce6cb5905942a35d9a3796145898dcf9c9d5598b135a8220abd55290da2e137",
    "fig5": "64f010ee87f730f589e1e26a16a02dabb7834adb195a351d18c3b1a66d2eb7ad",
    "fig6": "2ad290643d0f239db2dfe6eccb090cde4caed91b2e2e43c50d75e84dab2dab37",
    "ex7_H": "606f056dca44786f1aa0fec46290270163301c3895488595c7c9bd80f8059544",
}


def ex7_matrix():
    from absorbsets import gf2

    return gf2.as_bits([[int(ch) for ch in row] for row in _EX7_H], ndim=2)


def _raw_graph(name: str) -> TannerGraph:
    if name == "ex7_H":
        return from_biadjacency(ex7_matrix(), name)
    n, k, edges = {"fig1": _FIG1, "fig2a": _FIG2A, "fig3a": _FIG3A, "fig5": _FIG5, "fig6": _FIG6}[name]
    return TannerGraph.from_edges(n, k, ((v - 1, c - 1) for v, c in edges), name)


def fixture_checksum(G: TannerGraph) -> str:
    text = ";".join(",".join(str(v + 1) for v in nbrs) for nbrs in G.check_nbrs)
    return hashlib.sha256(f"{G.num_variables}|{text}".encode()).hexdigest()


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: TannerGraph
    subsets: dict[str, frozenset[int]] = field(default_factory=dict)


def fixture(name: str) -> Fixture:
    """Load a named fixture; raises ``KeyError`` for unknown names."""
    if name == "ex7":
        name = "ex7_H"
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")
    G = _raw_graph(name)
    expected = FIXTURE_CHECKSUMS[name]
    if expected and fixture_checksum(G) != expected:
        raise RuntimeError(f"fixture {name} does not match its recorded checksum")
    subsets = {k: frozenset(v - 1 for v in vs) for k, vs in _SUBSETS[name].items()}
    return Fixture(name, G, subsets)
