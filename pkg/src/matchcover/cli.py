"""Command-line interface.

One subcommand per library operation.  Exit codes: 0 success, 1 the
analysis came back negative (not an r-graph, bound unmet, no double
cover, membership failure), 2 usage or input error, 3 a configured cap
was exhausted.  JSON reports follow one schema for every subcommand:
command, graph {n, m, source}, params, result, certificates, and a
machine-parsable exit_reason; rationals are reduced 'p/q' strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .bounds import (
    approx_decimal,
    bound_table,
    format_fraction,
    geometric_bound,
    product_bound,
    small_k_bound,
)
from .cover import EXACT_LEMMA, FAST, MODES, audits_pass, greedy_cover
from .errors import (
    CapExceededError,
    EdgeListError,
    GeneratorError,
    MembershipFailure,
    NoPerfectMatchingError,
    NotRegularError,
    NotRGraphError,
    UncoverableEdgeError,
)
from .exact import excessive_index, m_exact
from .fractional import bf_double_cover, decompose, multicoloring, uniform
from .generators import from_spec, generator_names
from .multigraph import Multigraph, parse_edge_list, serialize
from .oddcuts import is_r_graph


def _frac(f: Fraction) -> str:
    return format_fraction(f)


def _vset(s) -> list[int]:
    return sorted(s)


def _matching_json(m) -> list[int]:
    return list(m.edge_ids)


def _audit_json(families):
    if families is None:
        return None
    return [
        {
            "cardinality": f.cardinality,
            "clause": f.clause,
            "num_cuts": f.num_cuts,
            "worst": f.worst,
            "status": f.status,
            "witness": _vset(f.witness) if f.witness is not None else None,
        }
        for f in families
    ]


def _cert_json(c):
    return {
        "step": c.step,
        "level": c.level,
        "membership_verified": c.membership_verified,
        "tight_honored": c.tight_honored,
        "predicted_gain": _frac(c.predicted_gain),
        "actual_gain": c.actual_gain,
        "covered_after": c.covered_after,
        "stalled": c.stalled,
        "audit": _audit_json(c.audit),
    }


def _audit_text(families) -> str:
    if families is None:
        return "audit: skipped (beyond odd-cap)"
    parts = []
    for f in families:
        if f.status == "vacuous":
            parts.append(f"{f.cardinality}-cuts: none exist")
        elif f.status == "not-checked":
            parts.append(
                f"{f.cardinality}-cuts: {f.num_cuts} seen, no clause"
                + (f", max total {f.worst}" if f.worst is not None else "")
            )
        elif f.status == "satisfied":
            parts.append(f"{f.cardinality}-cuts: {f.clause} ok ({f.num_cuts} cuts)")
        else:
            parts.append(
                f"{f.cardinality}-cuts: VIOLATED {f.clause}, total {f.worst} "
                f"on {{{', '.join(map(str, _vset(f.witness)))}}}"
            )
    return "audit: " + "; ".join(parts)


class _Failure(Exception):
    """Internal carrier for (exit code, machine reason, result payload)."""

    def __init__(self, code: int, reason: str, result: dict | None = None):
        super().__init__(reason)
        self.code = code
        self.reason = reason
        self.result = result or {}


def _classify(exc: Exception) -> _Failure:
    if isinstance(exc, _Failure):
        return exc
    if isinstance(exc, EdgeListError):
        return _Failure(2, f"edge-list: {exc}")
    if isinstance(exc, GeneratorError):
        return _Failure(2, f"generator: {exc}")
    if isinstance(exc, NotRGraphError):
        res = {}
        if exc.witness is not None:
            res = {
                "witness": _vset(exc.witness),
                "cut_value": _frac(exc.value),
            }
        return _Failure(1, f"not-r-graph: {exc}", res)
    if isinstance(exc, NotRegularError):
        return _Failure(1, f"not-regular: {exc}")
    if isinstance(exc, UncoverableEdgeError):
        return _Failure(1, f"uncoverable-edge: {exc}", {"edge": exc.edge_id})
    if isinstance(exc, NoPerfectMatchingError):
        return _Failure(1, f"no-perfect-matching: {exc}")
    if isinstance(exc, MembershipFailure):
        return _Failure(1, f"membership: {exc}")
    if isinstance(exc, CapExceededError):
        return _Failure(3, f"cap: {exc}")
    if isinstance(exc, (ValueError, OSError)):
        return _Failure(2, f"usage: {exc}")
    raise exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="matchcover",
        description="Cover the edges of an r-graph with k perfect matchings, "
        "with exact rational certificates.",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    def add_graph_opts(sp, corpus=True):
        sp.add_argument("--gen", metavar="NAME[:P1,P2]",
                        help=f"generator spec; one of: {', '.join(generator_names())}")
        sp.add_argument("--input", metavar="FILE", help="edge-list file")
        if corpus:
            sp.add_argument("--corpus", metavar="DIR",
                            help="run over every edge-list file in DIR")
        sp.add_argument("--seed", type=int, default=None,
                        help="seed for random generators")

    def add_caps(sp):
        sp.add_argument("--pm-cap", type=int, default=100_000,
                        help="max perfect matchings to enumerate (default 100000)")
        sp.add_argument("--odd-cap", type=int, default=20,
                        help="max n for exhaustive odd-cut scans (default 20)")

    sp = sub.add_parser("gen", help="emit a generated graph as edge-list text")
    sp.add_argument("--gen", metavar="NAME[:P1,P2]", required=True)
    sp.add_argument("--seed", type=int, default=None)

    sp = sub.add_parser("check", help="test the odd-cut condition (is this an r-graph)")
    sp.add_argument("-r", type=int, required=True)
    add_graph_opts(sp)

    sp = sub.add_parser("cover", help="greedy k-matching cover with certificates")
    sp.add_argument("-r", type=int, required=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--mode", choices=MODES, default=FAST)
    add_graph_opts(sp)
    add_caps(sp)

    sp = sub.add_parser("exact", help="exact best k-cover fraction / excessive index")
    sp.add_argument("-k", type=int, default=None)
    sp.add_argument("--excessive", action="store_true",
                    help="also compute the minimum full-cover size")
    add_graph_opts(sp)
    add_caps(sp)

    sp = sub.add_parser("bounds", help="coverage-fraction lower bounds")
    sp.add_argument("-r", type=int, default=None)
    sp.add_argument("-k", type=int, default=None)
    sp.add_argument("--table", action="store_true",
                    help="print the full bound table (r=3,4,5; k=2..9)")

    sp = sub.add_parser("decompose", help="convex decomposition of the uniform vector")
    sp.add_argument("-r", type=int, required=True)
    add_graph_opts(sp)
    add_caps(sp)

    sp = sub.add_parser("multicolor", help="p-fold cover by r*p perfect matchings")
    sp.add_argument("-r", type=int, required=True)
    add_graph_opts(sp)
    add_caps(sp)

    sp = sub.add_parser("bf-search", help="exhaustive search for a double cover "
                        "by 2r perfect matchings")
    sp.add_argument("-r", type=int, required=True)
    add_graph_opts(sp)
    add_caps(sp)

    sp = sub.add_parser("audit", help="run a cover and audit the small odd-cut families")
    sp.add_argument("-r", type=int, required=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--mode", choices=MODES, default=FAST)
    add_graph_opts(sp)
    add_caps(sp)

    return p


def _load_graph(args) -> tuple[Multigraph, str]:
    gen = getattr(args, "gen", None)
    inp = getattr(args, "input", None)
    if (gen is None) == (inp is None):
        raise _Failure(2, "usage: exactly one of --gen or --input is required")
    if gen is not None:
        return from_spec(gen, seed=getattr(args, "seed", None)), f"gen:{gen}"
    path = Path(inp)
    return parse_edge_list(path.read_text()), f"file:{inp}"


def _params_json(args) -> dict:
    out = {}
    for key in ("r", "k", "mode", "pm_cap", "odd_cap", "seed", "excessive"):
        if hasattr(args, key) and getattr(args, key) is not None:
            out[key] = getattr(args, key)
    return out


def _cmd_check(g: Multigraph, args):
    ok, cut = is_r_graph(g, args.r)
    if cut is None:
        return 0, {"r_graph": True}, None, ["r-graph: yes (empty graph)"]
    result = {
        "r_graph": ok,
        "min_odd_cut": _frac(cut.value),
        "witness": _vset(cut.witness),
    }
    if ok:
        return 0, result, None, [f"r-graph: yes (min odd cut {_frac(cut.value)})"]
    text = [
        f"r-graph: no (odd cut of value {_frac(cut.value)} < {args.r}; "
        f"witness {{{', '.join(map(str, _vset(cut.witness)))}}})"
    ]
    raise _Failure(1, f"not-r-graph: min odd cut {_frac(cut.value)} < {args.r}",
                   {**result, "text": text})


def _cover_text(rep) -> list[str]:
    lines = [f"mode {rep.mode}, r={rep.r}, k={rep.k}"]
    for c in rep.certificates:
        flags = []
        if c.stalled:
            flags.append("stalled")
        if c.membership_verified is False:
            flags.append("membership-failed")
        suffix = f" [{', '.join(flags)}]" if flags else ""
        lines.append(
            f"step {c.step}: level {c.level} predicted {_frac(c.predicted_gain)} "
            f"actual {c.actual_gain} covered {c.covered_after}{suffix}"
        )
        lines.append("  " + _audit_text(c.audit))
    verdict = "yes" if rep.bound_met else "NO"
    lines.append(
        f"covered {len(rep.state.covered)}/{rep.state.graph.m} = {_frac(rep.fraction)}"
        f" (bound {_frac(rep.bound)}: {verdict})"
    )
    return lines


def _cover_result(rep) -> dict:
    return {
        "matchings": [_matching_json(m) for m in rep.matchings],
        "covered": len(rep.state.covered),
        "fraction": _frac(rep.fraction),
        "bound": _frac(rep.bound),
        "bound_met": rep.bound_met,
        "all_l1": rep.all_l1,
    }


def _cmd_cover(g: Multigraph, args):
    rep = greedy_cover(g, args.r, args.k, mode=args.mode,
                       pm_cap=args.pm_cap, odd_cap=args.odd_cap)
    certs = [_cert_json(c) for c in rep.certificates]
    result = _cover_result(rep)
    text = _cover_text(rep)
    if not rep.bound_met:
        raise _Failure(1, f"bound-unmet: {_frac(rep.fraction)} < {_frac(rep.bound)}",
                       {**result, "certificates": certs, "text": text})
    return 0, result, certs, text


def _cmd_exact(g: Multigraph, args):
    if args.k is None and not args.excessive:
        raise _Failure(2, "usage: exact needs -k and/or --excessive")
    result = {}
    text = []
    if args.k is not None:
        cov = m_exact(g, args.k, pm_cap=args.pm_cap)
        result["k"] = args.k
        result["fraction"] = _frac(cov.fraction)
        result["witness_indices"] = list(cov.witness_indices)
        result["matchings"] = [_matching_json(m) for m in cov.matchings]
        result["pm_count"] = cov.pm_count
        dec, _ = approx_decimal(cov.fraction)
        text.append(
            f"best {args.k}-cover fraction: {_frac(cov.fraction)} (~{dec}) "
            f"over {cov.pm_count} matchings; witness indices {list(cov.witness_indices)}"
        )
    if args.excessive:
        ei = excessive_index(g, pm_cap=args.pm_cap)
        result["excessive_index"] = ei.value
        result["excessive_witness"] = list(ei.witness_indices)
        text.append(
            f"excessive index: {ei.value} (witness indices {list(ei.witness_indices)})"
        )
    return 0, result, None, text


def _cmd_bounds(args):
    if args.table:
        rows = bound_table()
        result = [
            {"r": r, "k": k, "bound": _frac(b), "decimal": approx_decimal(b)[0],
             "exact": approx_decimal(b)[1]}
            for r, k, b in rows
        ]
        text = []
        for r in (3, 4, 5):
            cells = []
            for rr, k, b in rows:
                if rr != r:
                    continue
                dec, exact = approx_decimal(b)
                cells.append(f"k={k}: {_frac(b)} ({'=' if exact else '~'}{dec})")
            text.append(f"r={r}:  " + "; ".join(cells))
        return 0, {"table": result}, None, text
    if args.r is None or args.k is None:
        raise _Failure(2, "usage: bounds needs --table or both -r and -k")
    result = {
        "r": args.r,
        "k": args.k,
        "product": _frac(product_bound(args.r, args.k)),
        "geometric": _frac(geometric_bound(args.r, args.k)),
    }
    text = [
        f"product bound: {result['product']} "
        f"(~{approx_decimal(product_bound(args.r, args.k))[0]})",
        f"geometric bound: {result['geometric']} "
        f"(~{approx_decimal(geometric_bound(args.r, args.k))[0]})",
    ]
    if args.k <= 2 * args.r - 1:
        sk = small_k_bound(args.r, args.k)
        result["small_k"] = _frac(sk)
        text.append(f"small-k bound: {_frac(sk)} (~{approx_decimal(sk)[0]})")
    return 0, result, None, text


def _cmd_decompose(g: Multigraph, args):
    w = uniform(g, args.r)
    dec = decompose(g, w, cap=args.pm_cap)
    result = {
        "terms": [
            {"coefficient": _frac(c), "matching": _matching_json(m)}
            for m, c in dec.terms
        ],
        "num_terms": len(dec.terms),
        "coefficients_sum": _frac(dec.coefficients_sum()),
    }
    text = [f"decomposed the uniform vector into {len(dec.terms)} matchings "
            "(reconstruction verified exactly)"]
    for m, c in dec.terms:
        text.append(f"  {_frac(c)} * edges {list(m.edge_ids)}")
    return 0, result, None, text


def _cmd_multicolor(g: Multigraph, args):
    mc = multicoloring(g, args.r, cap=args.pm_cap)
    result = {
        "p": mc.p,
        "num_matchings": len(mc.matchings),
        "matchings": [_matching_json(m) for m in mc.matchings],
    }
    text = [
        f"p = {mc.p}: {len(mc.matchings)} matchings "
        f"(= {args.r}*{mc.p}) cover every edge exactly {mc.p} times"
    ]
    return 0, result, None, text


def _cmd_bf_search(g: Multigraph, args):
    res = bf_double_cover(g, args.r, cap=args.pm_cap)
    if res.found:
        result = {
            "found": True,
            "matchings": [_matching_json(m) for m in res.matchings],
            "pm_count": res.pm_count,
            "nodes": res.nodes,
        }
        text = [
            f"double cover found: {len(res.matchings)} matchings "
            f"(2*{args.r}), every edge exactly twice"
        ]
        return 0, result, None, text
    raise _Failure(
        1,
        f"no-double-cover: exhausted {res.pm_count} matchings ({res.nodes} nodes)",
        {"found": False, "pm_count": res.pm_count, "nodes": res.nodes,
         "exhausted": True,
         "text": [f"no double cover: search space fully explored "
                  f"({res.pm_count} matchings, {res.nodes} nodes)"]},
    )


def _cmd_audit(g: Multigraph, args):
    rep = greedy_cover(g, args.r, args.k, mode=args.mode,
                       pm_cap=args.pm_cap, odd_cap=args.odd_cap)
    fams = rep.certificates[-1].audit
    if fams is None:
        raise CapExceededError(
            f"audit needs an exhaustive scan; n = {g.n} exceeds odd-cap {args.odd_cap}"
        )
    result = {"audit": _audit_json(fams), "mode": args.mode,
              "fraction": _frac(rep.fraction)}
    text = [_audit_text(fams)]
    if not audits_pass(fams):
        raise _Failure(1, "audit-violation: some cut family broke its clause",
                       {**result, "text": text})
    return 0, result, None, text


_GRAPH_COMMANDS = {
    "check": _cmd_check,
    "cover": _cmd_cover,
    "exact": _cmd_exact,
    "decompose": _cmd_decompose,
    "multicolor": _cmd_multicolor,
    "bf-search": _cmd_bf_search,
    "audit": _cmd_audit,
}


def _report(command, args, graph_meta, result, certificates, reason) -> dict:
    return {
        "command": command,
        "graph": graph_meta,
        "params": _params_json(args),
        "result": result,
        "certificates": certificates or [],
        "exit_reason": reason,
    }


def _emit(args, report: dict, text: list[str], code: int):
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        for line in text:
            print(line)
        if code != 0:
            print(f"error: {report['exit_reason']}", file=sys.stderr)


def _run_single(args, g: Multigraph, source: str) -> tuple[int, dict, list[str]]:
    meta = {"n": g.n, "m": g.m, "source": source}
    handler = _GRAPH_COMMANDS[args.command]
    try:
        code, result, certs, text = handler(g, args)
        report = _report(args.command, args, meta, result, certs, "ok")
        return code, report, text
    except Exception as exc:  # noqa: BLE001 - classified and re-raised if unknown
        fail = _classify(exc)
        text = fail.result.pop("text", [])
        certs = fail.result.pop("certificates", [])
        report = _report(args.command, args, meta, fail.result, certs, fail.reason)
        return fail.code, report, text


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "bounds":
        try:
            code, result, _, text = _cmd_bounds(args)
            report = _report("bounds", args, None, result, None, "ok")
        except Exception as exc:  # noqa: BLE001
            fail = _classify(exc)
            report = _report("bounds", args, None, fail.result, None, fail.reason)
            code, text = fail.code, []
        _emit(args, report, text, code)
        return code

    if args.command == "gen":
        try:
            g = from_spec(args.gen, seed=args.seed)
            meta = {"n": g.n, "m": g.m, "source": f"gen:{args.gen}"}
            report = _report("gen", args, meta, {"edge_list": serialize(g)}, None, "ok")
            _emit(args, report, [serialize(g).rstrip("\n")], 0)
            return 0
        except Exception as exc:  # noqa: BLE001
            fail = _classify(exc)
            report = _report("gen", args, None, fail.result, None, fail.reason)
            _emit(args, report, [], fail.code)
            return fail.code

    corpus = getattr(args, "corpus", None)
    if corpus:
        directory = Path(corpus)
        if not directory.is_dir():
            report = _report(args.command, args, None, {}, None,
                             f"usage: corpus directory not found: {corpus}")
            _emit(args, report, [], 2)
            return 2
        files = sorted(
            f for f in directory.iterdir() if f.is_file() and not f.name.startswith(".")
        )
        worst = 0
        reports = []
        all_text = []
        counts = {"ok": 0, "negative": 0, "error": 0, "capped": 0}
        for f in files:
            try:
                g = parse_edge_list(f.read_text())
            except Exception as exc:  # noqa: BLE001
                fail = _classify(exc)
                rep = _report(args.command, args,
                              {"n": None, "m": None, "source": f"file:{f}"},
                              fail.result, None, fail.reason)
                code, text = fail.code, []
            else:
                code, rep, text = _run_single(args, g, f"file:{f}")
            reports.append(rep)
            all_text.append(f"== {f.name} ==")
            all_text.extend(text)
            if code != 0:
                all_text.append(f"  ({rep['exit_reason']})")
            key = {0: "ok", 1: "negative", 2: "error", 3: "capped"}[code]
            counts[key] += 1
            worst = max(worst, code)
        summary = {"files": len(files), **counts}
        all_text.append(
            f"corpus: {len(files)} files, {counts['ok']} ok, "
            f"{counts['negative']} negative, {counts['error']} errors, "
            f"{counts['capped']} capped"
        )
        batch = {
            "command": args.command,
            "corpus": str(directory),
            "params": _params_json(args),
            "reports": reports,
            "summary": summary,
            "exit_reason": "ok" if worst == 0 else f"corpus-worst-exit: {worst}",
        }
        if args.format == "json":
            print(json.dumps(batch, indent=2))
        else:
            for line in all_text:
                print(line)
        return worst

    try:
        g, source = _load_graph(args)
    except Exception as exc:  # noqa: BLE001
        fail = _classify(exc)
        report = _report(args.command, args, None, fail.result, None, fail.reason)
        _emit(args, report, [], fail.code)
        return fail.code
    code, report, text = _run_single(args, g, source)
    _emit(args, report, text, code)
    return code


if __name__ == "__main__":
    sys.exit(main())
