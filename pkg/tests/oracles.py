"""Slow, independent reference implementations used only by the tests.

Nothing here imports the package's algorithms; inputs are plain lists.
"""

from __future__ import annotations

import itertools


def span(rows: list[list[int]], n: int) -> set[tuple[int, ...]]:
    """Every GF(2) combination of ``rows``, by repeated closure."""
    out = {tuple([0] * n)}
    for r in rows:
        out |= {tuple(a ^ b for a, b in zip(s, r)) for s in out}
    return out


def span_rank(rows: list[list[int]], n: int) -> int:
    return len(span(rows, n)).bit_length() - 1


def naive_product(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) % 2 for j in range(len(B[0]) if B else 0)] for i in range(len(A))]


def naive_kron(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    rA, cA, rB, cB = len(A), len(A[0]), len(B), len(B[0])
    out = [[0] * (cA * cB) for _ in range(rA * rB)]
    for i, j, k, l in itertools.product(range(rA), range(cA), range(rB), range(cB)):
        out[i * rB + k][j * cB + l] = A[i][j] * B[k][l]
    return out


def naive_gallager_b(check_nbrs: list[list[int]], n: int, sigma: list[int], iterations: int) -> list[tuple[list[int], list[int]]]:
    """Node-by-node syndrome Gallager-B; returns (syndrome estimate, error estimate) per iteration 1..iterations."""
    var_checks = {v: [c for c, nb in enumerate(check_nbrs) if v in nb] for v in range(n)}
    v2c = {(v, c): 0 for c, nb in enumerate(check_nbrs) for v in nb}
    history = []
    for _ in range(iterations):
        c2v = {}
        for c, nb in enumerate(check_nbrs):
            for v in nb:
                c2v[(c, v)] = (sigma[c] + sum(v2c[(u, c)] for u in nb if u != v)) % 2
        new_v2c = {}
        e_hat = []
        for v in range(n):
            incoming = [c2v[(c, v)] for c in var_checks[v]]
            e_hat.append(1 if sum(incoming) > len(incoming) - sum(incoming) else 0)
            for c in var_checks[v]:
                others = [c2v[(d, v)] for d in var_checks[v] if d != c]
                ones = sum(others)
                new_v2c[(v, c)] = 1 if ones > len(others) - ones else 0
        v2c = new_v2c
        s_hat = [sum(v2c[(v, c)] for v in nb) % 2 for c, nb in enumerate(check_nbrs)]
        history.append((s_hat, e_hat))
    return history


def brute_absorbing(check_nbrs: list[list[int]], n: int, a_max: int) -> dict[frozenset[int], tuple[int, int]]:
    """Every absorbing set up to size a_max by trying all subsets."""
    var_checks = {v: [c for c, nb in enumerate(check_nbrs) if v in nb] for v in range(n)}
    out = {}
    for size in range(1, a_max + 1):
        for S in itertools.combinations(range(n), size):
            members = set(S)
            deg = {}
            for v in S:
                for c in var_checks[v]:
                    deg[c] = deg.get(c, 0) + 1
            if not deg:
                continue
            ok = all(
                sum(1 for c in var_checks[v] if deg[c] % 2 == 0) > sum(1 for c in var_checks[v] if deg[c] % 2)
                for v in members
            )
            if ok:
                out[frozenset(S)] = (size, sum(1 for d in deg.values() if d % 2))
    return out


def syndrome(check_nbrs: list[list[int]], support: set[int]) -> list[int]:
    return [sum(1 for v in nb if v in support) % 2 for nb in check_nbrs]


def brute_failures(check_nbrs: list[list[int]], n: int, w_max: int, iterations: int = 100) -> set[frozenset[int]]:
    """Error patterns up to w_max that the node-level decoder fails on.

    Success means the first syndrome match leaves a residual in the span of the checks.
    """
    rows = [[1 if v in nb else 0 for v in range(n)] for nb in check_nbrs]
    stabs = span(rows, n)
    out = set()
    for w in range(1, w_max + 1):
        for S in itertools.combinations(range(n), w):
            e = [1 if v in S else 0 for v in range(n)]
            sigma = [sum(e[v] for v in nb) % 2 for nb in check_nbrs]
            if not any(sigma):
                ok = tuple(e) in stabs
            else:
                ok = False
                for s_hat, e_hat in naive_gallager_b(check_nbrs, n, sigma, iterations):
                    if s_hat == sigma:
                        ok = tuple(a ^ b for a, b in zip(e, e_hat)) in stabs
                        break
            if not ok:
                out.add(frozenset(S))
    return out
