"""Command-line interface, alist I/O and report rendering.

Exit status is 0 on success, 2 for bad input and 1 when an internal
consistency check fails.  Reports go to stdout as a plain table, or with
``--out`` to a JSON document with sorted keys.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from collections.abc import Sequence
from pathlib import Path

import numpy as np

from absorbsets import __version__, css, gf2
from absorbsets import families as fam
from absorbsets import structures as st
from absorbsets.decoder import (
    DEFAULT_MAX_ITERS,
    Status,
    classify_outcome,
    compute_syndrome,
    convergence_report,
    gallager_b_decode,
)
from absorbsets.tanner import TannerGraph, check_label, from_biadjacency, var_label


class InputError(ValueError):
    """Malformed or inconsistent user input (exit status 2)."""


class InvariantError(RuntimeError):
    """An internal consistency check failed (exit status 1)."""


# ---------------------------------------------------------------------------
# alist


def write_alist(H: gf2.BitMatrix) -> str:
    """Render H (m rows, n columns) in alist format, zero-padding short lists."""
    H = gf2.as_bits(H, ndim=2)
    m, n = H.shape
    cols = [[int(r) + 1 for r in np.flatnonzero(H[:, j])] for j in range(n)]
    rows = [[int(c) + 1 for c in np.flatnonzero(H[i])] for i in range(m)]
    max_col = max((len(c) for c in cols), default=0)
    max_row = max((len(r) for r in rows), default=0)

    def pad(entries: list[int], width: int) -> str:
        return " ".join(str(x) for x in entries + [0] * (width - len(entries)))

    lines = [f"{n} {m}", f"{max_col} {max_row}", " ".join(str(len(c)) for c in cols), " ".join(str(len(r)) for r in rows)]
    lines += [pad(c, max_col) for c in cols]
    lines += [pad(r, max_row) for r in rows]
    return "\n".join(lines) + "\n"


def parse_alist(text: str) -> gf2.BitMatrix:
    """Parse alist text into an m x n bit matrix, cross-checking both adjacency halves."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()

    def ints(lineno: int, expected: int | None, what: str) -> list[int]:
        if lineno > len(lines):
            raise InputError(f"alist line {lineno}: file ends before {what}")
        try:
            values = [int(tok) for tok in lines[lineno - 1].split()]
        except ValueError as exc:
            raise InputError(f"alist line {lineno}: non-integer token in {what}") from exc
        if expected is not None and len(values) != expected:
            raise InputError(f"alist line {lineno}: {what} needs {expected} entries, found {len(values)}")
        if any(v < 0 for v in values):
            raise InputError(f"alist line {lineno}: negative entry in {what}")
        return values

    n, m = ints(1, 2, "the size header 'n m'")
    max_col, max_row = ints(2, 2, "the maximum degrees")
    col_deg = ints(3, n, "column degrees")
    row_deg = ints(4, m, "row degrees")
    if max(col_deg, default=0) != max_col or max(row_deg, default=0) != max_row:
        raise InputError("alist line 2: maximum degrees disagree with the degree lists")
    if sum(col_deg) != sum(row_deg):
        raise InputError("alist lines 3-4: column and row degrees count different numbers of edges")

    def neighbour_lists(first: int, count: int, degrees: list[int], bound: int, kind: str) -> list[set[int]]:
        out = []
        for k in range(count):
            lineno = first + k
            values = ints(lineno, None, f"{kind} {k + 1} neighbour list")
            nonzero = [v for v in values if v]
            if values[len(nonzero):] != [0] * (len(values) - len(nonzero)):
                raise InputError(f"alist line {lineno}: zero padding must come after the indices")
            if len(nonzero) != degrees[k]:
                raise InputError(f"alist line {lineno}: {kind} {k + 1} lists {len(nonzero)} neighbours, degree says {degrees[k]}")
            if any(v > bound for v in nonzero):
                raise InputError(f"alist line {lineno}: index out of range 1..{bound}")
            if len(set(nonzero)) != len(nonzero):
                raise InputError(f"alist line {lineno}: repeated index")
            out.append(set(nonzero))
        return out

    cols = neighbour_lists(5, n, col_deg, m, "column")
    rows = neighbour_lists(5 + n, m, row_deg, n, "row")
    if len(lines) > 4 + n + m:
        raise InputError(f"alist line {5 + n + m}: unexpected trailing content")
    H = gf2.zeros(m, n)
    for j, rs in enumerate(cols):
        for r in rs:
            H[r - 1, j] = 1
    for i, cs in enumerate(rows):
        if {j + 1 for j in np.flatnonzero(H[i])} != cs:
            raise InputError(f"alist line {5 + n + i}: row {i + 1} disagrees with the column lists")
    return H


# ---------------------------------------------------------------------------
# input helpers


def matrix_checksum(H: gf2.BitMatrix) -> str:
    return hashlib.sha256(write_alist(H).encode()).hexdigest()


def bits_string(v: np.ndarray) -> str:
    return "".join(str(int(b)) for b in v)


def parse_bits(text: str, length: int, what: str) -> np.ndarray:
    text = text.strip().strip("()").replace(",", "").replace(" ", "")
    if len(text) != length or set(text) - {"0", "1"}:
        raise InputError(f"{what} must be a {length}-character bit string")
    return np.array([int(ch) for ch in text], dtype=np.uint8)


def parse_support(text: str, n: int, what: str = "error") -> frozenset[int]:
    """Accept ``v1,v4`` (1-based labels) or an n-character bit string."""
    text = text.strip()
    if text and set(text) <= {"0", "1"} and len(text) == n and not text.startswith("v"):
        return frozenset(int(i) for i in np.flatnonzero(parse_bits(text, n, what)))
    if text in ("", "{}"):
        return frozenset()
    out = set()
    for tok in text.strip("{}").split(","):
        tok = tok.strip().lower()
        if not tok.startswith("v") or not tok[1:].isdigit():
            raise InputError(f"cannot read {what} entry {tok!r}; use v1,v2,... or a bit string")
        i = int(tok[1:])
        if not 1 <= i <= n:
            raise InputError(f"{what} entry {tok} out of range v1..v{n}")
        out.add(i - 1)
    return frozenset(out)


def labels(support, label=var_label) -> list[str]:
    return [label(i) for i in sorted(support)]


def load_matrix(source: str) -> tuple[gf2.BitMatrix, str]:
    """A fixture name or alist path; returns the matrix and a descriptor."""
    try:
        G = fam.fixture(source).graph
        return G.to_biadjacency(), f"fixture:{G.name}"
    except KeyError:
        pass
    path = Path(source)
    if not path.exists():
        raise InputError(f"{source!r} is neither a fixture ({', '.join(fam.FIXTURE_NAMES)}) nor a readable file")
    try:
        return parse_alist(path.read_text()), f"alist:{path.name}"
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}") from exc


def load_graph(args) -> tuple[TannerGraph, dict, dict]:
    """Graph plus its input descriptor and named subsets from the graph options."""
    chosen = [x for x in (args.fixture, args.alist, args.family) if x]
    if len(chosen) != 1:
        raise InputError("give exactly one of --fixture, --alist or --family")
    subsets: dict = {}
    if args.fixture:
        try:
            fx = fam.fixture(args.fixture)
        except KeyError as exc:
            raise InputError(exc.args[0]) from exc
        G, subsets, desc = fx.graph, fx.subsets, f"fixture:{fx.name}"
    elif args.alist:
        H, desc = load_matrix(args.alist)
        G = from_biadjacency(H, desc)
    else:
        spec = fam.parse_family(args.family)
        G = fam.generate(spec)
        desc = f"family:{args.family}"
    return G, {"source": desc, "checksum": matrix_checksum(G.to_biadjacency())}, subsets


# ---------------------------------------------------------------------------
# commands


def _trace_rows(records, with_messages: bool) -> list[dict]:
    rows = []
    for r in records:
        row = {
            "iteration": r.index,
            "estimated_syndrome": bits_string(r.estimated_syndrome),
            "estimated_syndrome_support": labels(gf2.support(r.estimated_syndrome), check_label),
            "estimated_error": bits_string(r.estimated_error),
            "estimated_error_support": labels(gf2.support(r.estimated_error)),
        }
        if with_messages:
            row["var_to_check"] = bits_string(r.var_to_check)
            row["check_to_var"] = bits_string(r.check_to_var)
        rows.append(row)
    return rows


def cmd_decode(args) -> dict:
    G, source, _ = load_graph(args)
    if (args.error is None) == (args.syndrome is None):
        raise InputError("give exactly one of --error or --syndrome")
    e = None
    if args.error is not None:
        e = gf2.indicator(parse_support(args.error, G.num_variables), G.num_variables)
        sigma = compute_syndrome(G, e)
    else:
        sigma = parse_bits(args.syndrome, G.num_checks, "syndrome")
    if args.max_iters < 1:
        raise InputError("--max-iters must be at least 1")
    trace = gallager_b_decode(G, sigma, args.max_iters)
    if trace.status is Status.MATCHED and not np.array_equal(trace.iterations[-1].estimated_syndrome, sigma):
        raise InvariantError("decoder reported a match with a different syndrome")
    report = convergence_report(trace)
    final = trace.iterations[-1]
    result = {
        "input_syndrome": bits_string(sigma),
        "input_syndrome_support": labels(gf2.support(sigma), check_label),
        "status": trace.status.value,
        "matched_at": trace.matched_at,
        "cycle_start": trace.cycle_start,
        "period": trace.period,
        "final_estimated_syndrome": bits_string(final.estimated_syndrome),
        "final_estimated_error": bits_string(final.estimated_error),
        "final_estimated_error_support": labels(gf2.support(final.estimated_error)),
        "terminal_window": _trace_rows(trace.terminal_window, False),
        "vars_not_converged": labels(report.vars_not_converged),
        "checks_not_matched": labels(report.checks_not_matched, check_label),
        "iterations": _trace_rows(trace.iterations, args.trace),
    }
    if e is not None:
        stab = G.to_biadjacency()
        if args.stabilizers not in (None, "self"):
            stab, _ = load_matrix(args.stabilizers)
            if stab.shape[1] != G.num_variables:
                raise InputError(f"stabilizer matrix has {stab.shape[1]} columns, graph has {G.num_variables} variables")
        result["error"] = bits_string(e)
        result["error_support"] = labels(gf2.support(e))
        result["outcome"] = classify_outcome(e, trace, stab).value
    return {"input": source, "results": result}


def cmd_census(args) -> dict:
    G, source, _ = load_graph(args)
    if args.fis_weight is None and args.abs_size is None:
        raise InputError("give --fis-weight and/or --abs-size")
    result: dict = {}
    if args.fis_weight is not None:
        if not 0 <= args.fis_weight <= G.num_variables:
            raise InputError(f"--fis-weight must lie in 0..{G.num_variables}")
        census = st.census_failure_inducing(G, None, args.fis_weight, args.max_iters, args.workers)
        for f in census.failures:
            if f.outcome.is_success:
                raise InvariantError("census listed a successful decode as a failure")
        result["failure_inducing"] = {
            "w_max": census.w_max,
            "patterns_tested": census.tested,
            "critical_number": census.critical_number_label,
            "strength": census.strength,
            "note": None if census.failures else f"no failure-inducing sets <= {census.w_max}",
            "sets": [
                {
                    "variables": labels(f.variables),
                    "outcome": f.outcome.value,
                    "status": f.status.value,
                    "period": f.period,
                    "vars_not_converged": labels(f.report.vars_not_converged),
                    "checks_not_matched": labels(f.report.checks_not_matched, check_label),
                }
                for f in census.failures
            ],
        }
    if args.abs_size is not None:
        if args.abs_size < 0:
            raise InputError("--abs-size must be non-negative")
        found = st.census_absorbing(G, args.abs_size)
        result["absorbing"] = {
            "a_max": args.abs_size,
            "count": len(found),
            "sets": [{"variables": labels(S), "a": a, "b": b} for S, (a, b) in found],
        }
    return {"input": source, "results": result}


def _resolve_subset(token: str, G: TannerGraph, named: dict) -> frozenset[int]:
    if token in named:
        return named[token]
    S = parse_support(token, G.num_variables, "subset")
    if not S:
        raise InputError("subsets must be non-empty")
    return S


def _render_witness(value):
    if isinstance(value, st.Connector):
        return {
            "variables": labels(value.variables),
            "checks": labels(value.checks, check_label),
            "leaves": [var_label(v) for _, v, _ in value.attachments],
        }
    if isinstance(value, frozenset):
        return sorted(value)
    if isinstance(value, (tuple, list)):
        return [_render_witness(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _render_witness(v) for k, v in value.items()}
    return value


def cmd_certify(args) -> dict:
    G, source, named = load_graph(args)
    A1 = _resolve_subset(args.a1, G, named)
    others = [_resolve_subset(t, G, named) for t in args.other or []]
    res = st.certify(G, A1, others, size_limit=args.size_limit)
    certs = []
    for c in res.certificates:
        witness = dict(c.witness)
        for key in ("union", "D"):
            if key in witness:
                witness[key] = labels(witness[key]) if key == "union" else labels(witness[key], check_label)
        certs.append({
            "kind": c.kind.value,
            "designated_checks": labels(c.designated_checks, check_label),
            "decoded_unmatched": None if c.decoded_unmatched is None else labels(c.decoded_unmatched, check_label),
            "decode_confirms": c.decode_confirms,
            "witness": _render_witness(witness),
        })
    result = {"A1": labels(A1), "others": [labels(o) for o in others], "certificates": certs, "violations": res.violations}
    if args.symmetric:
        ss = st.check_symmetric_stabilizer(G, A1)
        result["symmetric_stabilizer"] = None if ss is None else {
            "parts": [labels(p) for p in ss.witness["parts"]],
            "odd_checks": labels(ss.designated_checks, check_label),
        }
    if args.parts:
        parts = st.partition_into_absorbing(G, A1, args.parts)
        result["absorbing_partition"] = None if parts is None else [labels(p) for p in parts]
    return {"input": source, "results": result}


def cmd_hgp(args) -> dict:
    H1, d1 = load_matrix(args.h1)
    H2, d2 = load_matrix(args.h2)
    code = css.hypergraph_product(H1, H2)
    valid = css.css_valid(code)
    if not valid:
        raise InvariantError("hypergraph product is not a valid CSS code")
    result = {
        "H_X_shape": list(code.H_X.shape),
        "H_Z_shape": list(code.H_Z.shape),
        "css_valid": valid,
        "H_X_checksum": matrix_checksum(code.H_X),
        "H_Z_checksum": matrix_checksum(code.H_Z),
    }
    if args.write_hx:
        Path(args.write_hx).write_text(write_alist(code.H_X))
    if args.write_hz:
        Path(args.write_hz).write_text(write_alist(code.H_Z))
    inputs = {"h1": {"source": d1, "checksum": matrix_checksum(H1)}, "h2": {"source": d2, "checksum": matrix_checksum(H2)}}
    return {"input": inputs, "results": result}


def cmd_generate(args) -> dict:
    G, source, named = load_graph(args)
    text = write_alist(G.to_biadjacency())
    if args.alist_out:
        Path(args.alist_out).write_text(text)
    result = {
        "num_variables": G.num_variables,
        "num_checks": G.num_checks,
        "subsets": {k: labels(v) for k, v in sorted(named.items())},
        "alist": text,
    }
    return {"input": source, "results": result}


# ---------------------------------------------------------------------------
# rendering


def _iteration_line(row: dict) -> str:
    line = f"{row['iteration']:>4}  {row['estimated_syndrome']}  {{{', '.join(row['estimated_error_support'])}}}"
    if "var_to_check" in row:
        line += f"  v2c={row['var_to_check']} c2v={row['check_to_var']}"
    return line


def render_text(doc: dict) -> str:
    """Plain indented key/value listing, keys in sorted order.

    Iteration records print one per line as ``index  syndrome  {error support}``.
    """
    out: list[str] = []

    def emit(value, indent: int, key: str | None) -> None:
        pad = "  " * indent
        prefix = f"{pad}{key}: " if key is not None else f"{pad}- "
        if key in ("iterations", "terminal_window") and isinstance(value, list):
            out.append(prefix + "iteration  estimated_syndrome  {estimated_error}")
            out.extend(pad + "  " + _iteration_line(r) for r in value)
        elif key == "command" and isinstance(value, list):
            out.append(prefix + " ".join(value))
        elif isinstance(value, dict):
            out.append(prefix.rstrip())
            for k in sorted(value):
                emit(value[k], indent + 1, k)
        elif isinstance(value, list) and value and all(isinstance(v, (dict, list)) for v in value):
            out.append(prefix.rstrip())
            for v in value:
                emit(v, indent + 1, None)
        elif isinstance(value, list) and all(isinstance(v, str) for v in value):
            out.append(prefix + "{" + ", ".join(value) + "}")
        elif isinstance(value, list):
            out.append(prefix + "[" + ", ".join(str(v) for v in value) + "]")
        elif isinstance(value, str) and "\n" in value:
            out.append(prefix.rstrip())
            out.extend(pad + "  " + line for line in value.rstrip("\n").split("\n"))
        else:
            out.append(prefix + ("none" if value is None else str(value)))

    for k in sorted(doc):
        emit(doc[k], 0, k)
    return "\n".join(out) + "\n"


def write_report(doc: dict, destination: str | Path | None) -> str:
    """Serialise the report as sorted-key JSON, to ``destination`` if given."""
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if destination is not None:
        try:
            Path(destination).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write report to {destination}: {exc.strerror or exc}") from exc
    return text


def _graph_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--fixture", help=f"named fixture ({', '.join(fam.FIXTURE_NAMES)})")
    p.add_argument("--alist", help="parity-check matrix in alist format")
    p.add_argument("--family", help="generated family, e.g. path:5, cycle:7, theta:6,6,4:checks, dumbbell:6,6,2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="absorbsets", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"absorbsets {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decode", help="run the Gallager-B decoder on one error or syndrome")
    _graph_options(p)
    p.add_argument("--error", help="error support (v1,v4) or bit string")
    p.add_argument("--syndrome", help="syndrome bit string")
    p.add_argument("--max-iters", type=int, default=DEFAULT_MAX_ITERS)
    p.add_argument("--stabilizers", help="'self' (default), a fixture name or an alist file")
    p.add_argument("--trace", action="store_true", help="include every message in each iteration record")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("census", help="failure-inducing and/or absorbing-set census")
    _graph_options(p)
    p.add_argument("--fis-weight", type=int, help="decode every error pattern up to this weight")
    p.add_argument("--abs-size", type=int, help="list absorbing sets up to this size")
    p.add_argument("--max-iters", type=int, default=DEFAULT_MAX_ITERS)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("certify", help="check theorem hypotheses for an absorbing set")
    _graph_options(p)
    p.add_argument("--a1", required=True, help="A1 as v1,v2,... or a fixture subset name")
    p.add_argument("--other", action="append", help="another set (repeatable)")
    p.add_argument("--size-limit", type=int, default=20)
    p.add_argument("--symmetric", action="store_true", help="also search A1 for a symmetric-stabilizer partition")
    p.add_argument("--parts", type=int, help="also partition A1 into this many absorbing sets")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("hgp", help="hypergraph product of two check matrices")
    p.add_argument("--h1", required=True, help="fixture name (e.g. ex7) or alist file")
    p.add_argument("--h2", required=True, help="fixture name (e.g. ex7) or alist file")
    p.add_argument("--write-hx", help="save H_X as alist")
    p.add_argument("--write-hz", help="save H_Z as alist")
    p.set_defaults(func=cmd_hgp)

    p = sub.add_parser("generate", help="emit a family member or fixture as alist")
    _graph_options(p)
    p.add_argument("--alist-out", help="write the alist here")
    p.set_defaults(func=cmd_generate)

    for action in sub.choices.values():
        action.add_argument("--out", help="write the JSON report here instead of printing a table")
    return parser


def _recorded_command(argv: Sequence[str]) -> list[str]:
    out, skip = [], False
    for tok in argv:
        if skip:
            skip = False
            continue
        if tok == "--out":
            skip = True
            continue
        if tok.startswith("--out="):
            continue
        out.append(tok)
    return out


def run(argv: Sequence[str] | None = None) -> tuple[int, dict | None]:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None
    try:
        doc = args.func(args)
        doc["command"] = _recorded_command(argv)
        doc["tool_version"] = __version__
        if args.out:
            write_report(doc, args.out)
        else:
            sys.stdout.write(render_text(doc))
        return 0, doc
    except (InputError, fam.FamilyError, ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return 2, None
    except (InvariantError, AssertionError) as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 1, None


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)[0]


if __name__ == "__main__":
    sys.exit(main())
