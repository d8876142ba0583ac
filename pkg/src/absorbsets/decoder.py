"""Syndrome-based Gallager-B decoding with full trace capture.

Messages live on edges in the check-major order of :attr:`TannerGraph.edges`.
One iteration is a flooding round: every check updates, then every variable.
The estimated syndrome of an iteration is the parity of the variable-to-check
messages arriving at each check; the error estimate is the majority of all
check-to-variable messages at each variable (ties resolve to 0).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from absorbsets import gf2
from absorbsets.tanner import TannerGraph

DEFAULT_MAX_ITERS = 100


class Status(enum.Enum):
    MATCHED = "matched"
    OSCILLATING = "oscillating"
    UNMATCHED_AT_MAX_ITERS = "unmatched_at_max_iters"


class Outcome(enum.Enum):
    EXACT_RECOVERY = "ExactRecovery"
    DEGENERATE_RECOVERY = "DegenerateRecovery"
    LOGICAL_ERROR = "LogicalError"
    SYNDROME_MISMATCH_CONVERGED = "SyndromeMismatchConverged"
    SYNDROME_MISMATCH_OSCILLATING = "SyndromeMismatchOscillating"

    @property
    def is_success(self) -> bool:
        return self in (Outcome.EXACT_RECOVERY, Outcome.DEGENERATE_RECOVERY)


@dataclass(frozen=True)
class IterationRecord:
    index: int
    var_to_check: np.ndarray
    check_to_var: np.ndarray  # all zeros at iteration 0, before any check update
    estimated_error: np.ndarray
    estimated_syndrome: np.ndarray


@dataclass(frozen=True)
class DecodeTrace:
    """Per-iteration record of a decode run.

    For ``OSCILLATING`` the message state at ``cycle_start`` reappears at
    ``cycle_start + period``; the final record is that repeat.
    """

    syndrome: np.ndarray
    iterations: tuple[IterationRecord, ...]
    status: Status
    matched_at: int | None = None
    cycle_start: int | None = None
    period: int | None = None

    @property
    def final_estimate(self) -> np.ndarray:
        return self.iterations[-1].estimated_error

    @property
    def terminal_window(self) -> tuple[IterationRecord, ...]:
        """Iterations that repeat forever: the cycle, or the last record otherwise."""
        if self.status is Status.OSCILLATING:
            return self.iterations[self.cycle_start : self.cycle_start + self.period]
        return self.iterations[-1:]

    @property
    def converged(self) -> bool:
        """True when ê and σ̂ are constant across the terminal window."""
        window = self.terminal_window
        if self.status is Status.UNMATCHED_AT_MAX_ITERS:
            window = self.iterations[-2:]
        first = window[0]
        return all(
            np.array_equal(r.estimated_error, first.estimated_error)
            and np.array_equal(r.estimated_syndrome, first.estimated_syndrome)
            for r in window
        )


def compute_syndrome(G: TannerGraph, e: np.ndarray) -> np.ndarray:
    """σ = H eᵀ over GF(2)."""
    e = gf2.as_bits(e, ndim=1)
    if e.shape[0] != G.num_variables:
        raise ValueError(f"error pattern has length {e.shape[0]}, graph has {G.num_variables} variables")
    out = np.zeros(G.num_checks, dtype=np.uint8)
    for c, nbrs in enumerate(G.check_nbrs):
        out[c] = int(e[list(nbrs)].sum()) & 1 if nbrs else 0
    return out


class _EdgeIndex:
    """Precomputed edge endpoint arrays for vectorised message updates."""

    def __init__(self, G: TannerGraph) -> None:
        edges = G.edges
        self.var = np.array([v for v, _ in edges], dtype=np.intp)
        self.chk = np.array([c for _, c in edges], dtype=np.intp)
        self.n = G.num_variables
        self.k = G.num_checks
        self.var_deg = np.bincount(self.var, minlength=self.n)

    def check_parity(self, msgs: np.ndarray) -> np.ndarray:
        return (np.bincount(self.chk, weights=msgs, minlength=self.k).astype(np.int64) & 1).astype(np.uint8)

    def var_ones(self, msgs: np.ndarray) -> np.ndarray:
        return np.bincount(self.var, weights=msgs, minlength=self.n).astype(np.int64)


def gallager_b_decode(G: TannerGraph, syndrome: np.ndarray, max_iters: int = DEFAULT_MAX_ITERS) -> DecodeTrace:
    """Decode ``syndrome`` on ``G`` starting from the all-zero error estimate.

    Stops at the first iteration whose estimated syndrome equals the input,
    at the first repeat of the full message state, or after ``max_iters``.
    """
    sigma = gf2.as_bits(syndrome, ndim=1)
    if sigma.shape[0] != G.num_checks:
        raise ValueError(f"syndrome has length {sigma.shape[0]}, graph has {G.num_checks} checks")
    if max_iters < 1:
        raise ValueError("max_iters must be at least 1")

    idx = _EdgeIndex(G)
    n_edges = len(idx.var)
    v2c = np.zeros(n_edges, dtype=np.uint8)
    zero_n = np.zeros(G.num_variables, dtype=np.uint8)
    records = [IterationRecord(0, v2c, np.zeros(n_edges, dtype=np.uint8), zero_n, np.zeros(G.num_checks, dtype=np.uint8))]
    if not sigma.any():
        return DecodeTrace(sigma, tuple(records), Status.MATCHED, matched_at=0)

    sigma_on_edge = sigma[idx.chk]
    seen: dict[bytes, int] = {}
    for it in range(1, max_iters + 1):
        # check update: syndrome bit XOR extrinsic variable messages
        c2v = (idx.check_parity(v2c)[idx.chk] ^ v2c ^ sigma_on_edge).astype(np.uint8)
        # variable update: extrinsic majority, ties -> 0
        ones = idx.var_ones(c2v)
        ext_ones = ones[idx.var] - c2v
        ext_deg = idx.var_deg[idx.var] - 1
        v2c = (2 * ext_ones > ext_deg).astype(np.uint8)
        e_hat = (2 * ones > idx.var_deg).astype(np.uint8)
        s_hat = idx.check_parity(v2c)
        records.append(IterationRecord(it, v2c, c2v, e_hat, s_hat))

        if np.array_equal(s_hat, sigma):
            return DecodeTrace(sigma, tuple(records), Status.MATCHED, matched_at=it)
        key = c2v.tobytes() + v2c.tobytes()
        if key in seen:
            start = seen[key]
            return DecodeTrace(sigma, tuple(records), Status.OSCILLATING, cycle_start=start, period=it - start)
        seen[key] = it
    return DecodeTrace(sigma, tuple(records), Status.UNMATCHED_AT_MAX_ITERS)


def classify_outcome(e: np.ndarray, trace: DecodeTrace, stabilizers: np.ndarray) -> Outcome:
    """Classify a decode of the syndrome of ``e`` against the stabilizer rowspace."""
    e = gf2.as_bits(e, ndim=1)
    stabilizers = gf2.as_bits(stabilizers, ndim=2)
    if stabilizers.shape[1] != e.shape[0]:
        raise ValueError(f"stabilizer matrix has {stabilizers.shape[1]} columns, error has length {e.shape[0]}")
    if trace.final_estimate.shape[0] != e.shape[0]:
        raise ValueError("trace and error pattern lengths differ")
    if trace.status is Status.MATCHED:
        e_hat = trace.final_estimate
        if np.array_equal(e_hat, e):
            return Outcome.EXACT_RECOVERY
        if gf2.rowspace_contains(stabilizers, e ^ e_hat):
            return Outcome.DEGENERATE_RECOVERY
        return Outcome.LOGICAL_ERROR
    if trace.converged:
        return Outcome.SYNDROME_MISMATCH_CONVERGED
    return Outcome.SYNDROME_MISMATCH_OSCILLATING


@dataclass(frozen=True)
class ConvergenceReport:
    vars_not_converged: frozenset[int]
    checks_not_matched: frozenset[int]


def convergence_report(trace: DecodeTrace) -> ConvergenceReport:
    """Variables whose estimate varies, and checks not always matched, on the terminal window."""
    if trace.status is Status.MATCHED:
        return ConvergenceReport(frozenset(), frozenset())
    window = trace.terminal_window
    errs = np.array([r.estimated_error for r in window])
    syns = np.array([r.estimated_syndrome for r in window])
    varying = np.flatnonzero((errs != errs[0]).any(axis=0))
    unmatched = np.flatnonzero((syns != trace.syndrome).any(axis=0))
    return ConvergenceReport(frozenset(int(i) for i in varying), frozenset(int(j) for j in unmatched))
