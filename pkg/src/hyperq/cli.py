"""Command-line surface: spectra, bound audits, generators, corpus sweeps.

Exit codes: 0 success, 2 parse error, 3 validation/feasibility error,
4 asserted-bound violation (or audited finding under --strict-audit).
"""

from __future__ import annotations

import argparse
import concurrent.futures
import hashlib
import json
import os
import sys
import tempfile
from typing import Optional, Sequence

from . import bounds as bounds_mod
from . import eigen, exact, hypergraph as hg
from . import matrices
from .errors import (
    HypergraphError,
    InfeasibleParameters,
    ParseError,
    ValidationError,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_VIOLATION = 4


def _fmt(x: float) -> str:
    """Shortest round-trip decimal; reports diff cleanly across platforms."""
    return repr(float(x))


def _atomic_write(path: str, data: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-hyperq-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load(path: str) -> hg.Hypergraph:
    with open(path) as fh:
        text = fh.read()
    return hg.parse_auto(text)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        _atomic_write(out, text)
    else:
        sys.stdout.write(text)


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

def cmd_spectrum(args) -> int:
    h = _load(args.file)
    if args.require_connected and not hg.is_connected(h):
        print("error: hypergraph is not connected", file=sys.stderr)
        return EXIT_VALIDATION
    spectra = {}
    for kind, builder in (
        ("adjacency", matrices.adjacency_matrix),
        ("laplacian", matrices.laplacian),
        ("signlessLaplacian", matrices.signless_laplacian),
    ):
        spec = eigen.eigenvalues(builder(h), kind, args.tol)
        spectra[kind] = list(spec.values)
    summary = eigen.spectral_summary(h, args.tol)
    payload = {
        **spectra,
        "summary": {
            "qMax": summary.q_max,
            "qMin": summary.q_min,
            "muMax": summary.mu_max,
            "lambdaMax": summary.lambda_max,
            "lambdaMin": summary.lambda_min,
            "sQ": summary.s_q,
            "sA": summary.s_a,
            "degenerate": summary.degenerate,
        },
    }
    _emit(_json_dumps(payload), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

def cmd_bounds(args) -> int:
    h = _load(args.file)
    if not args.allow_any:
        if h.uniformity is None:
            print("error: input is not k-uniform (use --allow-any)", file=sys.stderr)
            return EXIT_VALIDATION
        if not hg.is_connected(h):
            print("error: input is not connected (use --allow-any)", file=sys.stderr)
            return EXIT_VALIDATION
    slack_tol = args.tol if args.tol is not None else bounds_mod.SLACK_TOL
    # --tol overrides both tolerances unless --eq-tol is given separately
    if args.eq_tol is not None:
        eq_tol = args.eq_tol
    elif args.tol is not None:
        eq_tol = args.tol
    else:
        eq_tol = bounds_mod.EQ_TOL
    evals = bounds_mod.evaluate_all(h, slack_tol=slack_tol, eq_tol=eq_tol)
    if args.csv:
        _emit(bounds_mod.evaluations_to_csv(evals), args.output)
    else:
        payload = {"evaluations": [e.to_dict() for e in evals]}
        if args.audit:
            payload["equality_report"] = bounds_mod.equality_consistency_report(evals)
        _emit(_json_dumps(payload), args.output)
    asserted_violation = any(
        e.applicable and e.holds is False and e.assurance == "asserted" for e in evals
    )
    audited_finding = any(
        e.applicable and e.holds is False and e.assurance == "audited" for e in evals
    )
    if asserted_violation or (audited_finding and args.strict_audit):
        return EXIT_VIOLATION
    return EXIT_OK


# ---------------------------------------------------------------------------
# generate / complement
# ---------------------------------------------------------------------------

def _generate_family(family: str, params: list[int], seed: int) -> hg.Hypergraph:
    if family == "completeUniform":
        return hg.complete_uniform(*params)
    if family == "singleEdge":
        return hg.single_edge(*params)
    if family == "completeBipartiteGraph":
        return hg.complete_bipartite_graph(*params)
    if family == "completeBipartiteUniform":
        return hg.complete_bipartite_uniform(*params)
    if family == "randomConnectedUniform":
        return hg.random_connected_uniform(*params, seed=seed)
    raise InfeasibleParameters(f"unknown family {family!r}")


def cmd_generate(args) -> int:
    h = _generate_family(args.family, args.params, args.seed)
    text = hg.format_json(h) + "\n" if args.json else hg.format_hg(h)
    _emit(text, args.output)
    return EXIT_OK


def cmd_complement(args) -> int:
    h = _load(args.file)
    comp = hg.complement(h)
    text = hg.format_json(comp) + "\n" if args.json else hg.format_hg(comp)
    _emit(text, args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def _mix_seed(seed: int, n: int, k: int, m: int, sample: int) -> int:
    data = f"{seed}:{n}:{k}:{m}:{sample}".encode()
    return int.from_bytes(hashlib.sha256(data).digest()[:8], "big")


def _edge_hash(h: hg.Hypergraph) -> str:
    canon = f"{h.n}|" + ";".join(",".join(map(str, e)) for e in h.edges)
    return hashlib.sha256(canon.encode()).hexdigest()[:12]


def _sweep_cell(task: tuple[int, int, int, int, int, float, float]) -> list[dict]:
    n, k, m, sample, inst_seed, slack_tol, eq_tol = task
    h = hg.random_connected_uniform(n, k, m, inst_seed)
    evals = bounds_mod.evaluate_all(h, slack_tol=slack_tol, eq_tol=eq_tol)
    digest = _edge_hash(h)
    rows = []
    for ev in evals:
        rows.append(
            {
                "n": n,
                "k": k,
                "m": m,
                "sample": sample,
                "seed": inst_seed,
                "digest": digest,
                "eval": ev,
            }
        )
    return rows


SWEEP_COLUMNS = ["n", "k", "m", "sample", "seed", "digest"] + bounds_mod.CSV_COLUMNS


def cmd_sweep(args) -> int:
    ks = [int(x) for x in args.k.split(",")]
    if args.n_min > args.n_max or args.m_min > args.m_max or args.samples < 1:
        print("error: empty sweep ranges", file=sys.stderr)
        return EXIT_VALIDATION
    slack_tol = args.tol if args.tol is not None else bounds_mod.SLACK_TOL
    eq_tol = args.eq_tol if args.eq_tol is not None else bounds_mod.EQ_TOL
    tasks = []
    for n in range(args.n_min, args.n_max + 1):
        for k in ks:
            if k < 2 or n < k:
                continue
            lo = max(1, -(-(n - 1) // (k - 1)))
            hi = hg.binomial(n, k)
            for m in range(max(args.m_min, lo), min(args.m_max, hi) + 1):
                for sample in range(args.samples):
                    tasks.append(
                        (n, k, m, sample, _mix_seed(args.seed, n, k, m, sample),
                         slack_tol, eq_tol)
                    )
    if args.workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.workers) as ex:
            all_rows = list(ex.map(_sweep_cell, tasks, chunksize=8))
    else:
        all_rows = [_sweep_cell(t) for t in tasks]

    csv_lines = [",".join(SWEEP_COLUMNS)]
    per_bound: dict[str, dict] = {}
    violations = []
    for rows in all_rows:
        for row in rows:
            ev: bounds_mod.BoundEvaluation = row["eval"]
            rec = ev.to_dict()
            cells = [str(row[c]) for c in ("n", "k", "m", "sample", "seed", "digest")]
            cells += [bounds_mod._csv_cell(rec[c]) for c in bounds_mod.CSV_COLUMNS]
            csv_lines.append(",".join(cells))
            agg = per_bound.setdefault(
                ev.bound_id,
                {"min_slack": None, "equality_hits": 0, "violations": 0, "evaluated": 0},
            )
            if ev.applicable:
                agg["evaluated"] += 1
                if agg["min_slack"] is None or ev.slack < agg["min_slack"]:
                    agg["min_slack"] = ev.slack
                if abs(ev.slack) <= eq_tol:
                    agg["equality_hits"] += 1
                if ev.holds is False:
                    agg["violations"] += 1
                    violations.append(
                        {
                            "bound_id": ev.bound_id,
                            "assurance": ev.assurance,
                            "n": row["n"],
                            "k": row["k"],
                            "m": row["m"],
                            "sample": row["sample"],
                            "seed": row["seed"],
                            "slack": ev.slack,
                        }
                    )
    summary = {
        "instances": len(tasks),
        "per_bound": {b: per_bound[b] for b in sorted(per_bound)},
        "violations": violations,
    }
    _atomic_write(args.out_csv, "\n".join(csv_lines) + "\n")
    _atomic_write(args.out_summary, _json_dumps(summary))
    asserted = [v for v in violations if v["assurance"] == "asserted"]
    return EXIT_VIOLATION if asserted else EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    h = _load(args.file)
    checks: list[tuple[str, bool, str]] = []

    def check(name: str, ok: bool, detail: str = "") -> None:
        checks.append((name, bool(ok), detail))

    inv = hg.invariants(h)
    k = h.uniformity
    if k is not None:
        check("degree-sum", sum(inv.degrees) == k * h.m,
              f"sum d_i = {sum(inv.degrees)}, km = {k * h.m}")
    summary = eigen.spectral_summary(h)
    q = matrices.signless_laplacian(h)
    check("mu_max <= q_max", summary.mu_max <= summary.q_max + 1e-9)
    check("trace(Q) = sum d_i", abs(float(q.trace()) - sum(inv.degrees)) <= 1e-9)
    if k is not None:
        tr_q2 = float((q @ q).trace())
        ident = inv.z1 + inv.alpha / (k - 1) ** 2
        check("trace(Q^2) identity", abs(tr_q2 - ident) <= 1e-9 * max(1.0, ident))
    if h.n <= exact.CHARPOLY_CAP and k is not None:
        for kind, builder in (
            ("adjacency", matrices.adjacency_matrix),
            ("laplacian", matrices.laplacian),
            ("signlessLaplacian", matrices.signless_laplacian),
        ):
            poly = exact.exact_charpoly(h, kind)
            spec = eigen.eigenvalues(builder(h), kind)
            res = exact.residuals(poly, spec.values, float(k - 1))
            check(f"charpoly residuals [{kind}]", max(res, default=0.0) <= 1e-6,
                  f"max residual {max(res, default=0.0):.3e}")
    if h.n <= exact.NAIVE_CAP and hg.is_connected(h):
        from . import structure

        check("tau oracle", structure.weak_independence_number(h) == exact.naive_tau(h))
        check("chi oracle", structure.strong_chromatic_number(h) == exact.naive_chi(h))
    evals = bounds_mod.evaluate_all(h)
    bad = [e.bound_id for e in evals
           if e.applicable and e.holds is False and e.assurance == "asserted"]
    check("asserted bounds", not bad, f"violated: {bad}" if bad else "")

    payload = {
        "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in checks],
        "all_ok": all(ok for _, ok, _ in checks),
    }
    _emit(_json_dumps(payload), args.output)
    return EXIT_OK if payload["all_ok"] else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperq",
        description="Spectra and eigenvalue-bound audits for uniform hypergraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="eigenvalues of A, L and Q")
    sp.add_argument("file")
    sp.add_argument("--tol", type=float, default=1e-12)
    sp.add_argument("--require-connected", action="store_true")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_spectrum)

    bp = sub.add_parser("bounds", help="evaluate the full bound catalog")
    bp.add_argument("file")
    fmt = bp.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--csv", action="store_true", default=False)
    bp.add_argument("--tol", type=float, default=None,
                    help="slack tolerance (also equality unless --eq-tol)")
    bp.add_argument("--eq-tol", type=float, default=None, dest="eq_tol")
    bp.add_argument("--audit", action="store_true",
                    help="include the equality consistency report")
    bp.add_argument("--strict-audit", action="store_true", dest="strict_audit")
    bp.add_argument("--allow-any", action="store_true", dest="allow_any")
    bp.add_argument("-o", "--output")
    bp.set_defaults(func=cmd_bounds)

    gp = sub.add_parser("generate", help="emit a hypergraph from a named family")
    gp.add_argument("family", choices=[
        "completeUniform", "singleEdge", "completeBipartiteGraph",
        "completeBipartiteUniform", "randomConnectedUniform",
    ])
    gp.add_argument("params", nargs="+", type=int)
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--json", action="store_true")
    gp.add_argument("-o", "--output")
    gp.set_defaults(func=cmd_generate)

    cp = sub.add_parser("complement", help="k-uniform complement of the input")
    cp.add_argument("file")
    cp.add_argument("--json", action="store_true")
    cp.add_argument("-o", "--output")
    cp.set_defaults(func=cmd_complement)

    wp = sub.add_parser("sweep", help="bound audit over a generated corpus")
    wp.add_argument("--n-min", type=int, required=True)
    wp.add_argument("--n-max", type=int, required=True)
    wp.add_argument("--k", required=True, help="comma-separated uniformities")
    wp.add_argument("--m-min", type=int, default=1)
    wp.add_argument("--m-max", type=int, required=True)
    wp.add_argument("--samples", type=int, default=1)
    wp.add_argument("--seed", type=int, default=0)
    wp.add_argument("--workers", type=int, default=1)
    wp.add_argument("--tol", type=float, default=None)
    wp.add_argument("--eq-tol", type=float, default=None, dest="eq_tol")
    wp.add_argument("--out-csv", required=True)
    wp.add_argument("--out-summary", required=True)
    wp.set_defaults(func=cmd_sweep)

    vp = sub.add_parser("verify", help="run the invariant suite on one input")
    vp.add_argument("file")
    vp.add_argument("-o", "--output")
    vp.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValidationError, InfeasibleParameters) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except HypergraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
