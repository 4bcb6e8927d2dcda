"""Command-line interface.

Exit codes: 0 all asserted checks passed, 1 a verification failed,
2 usage error.  Output is deterministic for a fixed data bundle: JSON is
emitted with sorted keys and no timestamps.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Tuple

from . import data as bundle
from .codes import table2_report
from .exact import ExactMatrix, charpoly_int, minimal_polynomial_degree
from .graphs import (Graph, GraphError, antipodal_fold, complement,
                     cycle_graph, distance_data, intersection_array,
                     load_graph6, save_graph6, tensor_product,
                     zero_forcing_closure, zero_forcing_number_exhaustive)
from .hamming import hamming_graph, tensor_signing, zeta
from .johnson import (forcing_candidate, frame_vectors, johnson_graph,
                      signed_adjacency_A, word_list)
from .obstruction import (parity_certificate, phi, sign_exhaust,
                          verify_parity_family)
from .qbounds import SPEC_VERSION, q_bounds, table1_reproduce
from .scheme import (hamming_eigenmatrix, idempotent_EI, johnson_eigenmatrix,
                     scheme_from_graph, two_eig_search)


class UsageError(Exception):
    pass


class VerificationFailure(Exception):
    pass


def _emit(obj: dict, fmt: str) -> None:
    obj = {"spec_version": SPEC_VERSION, **obj}
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        for k in sorted(obj):
            print(f"{k}: {obj[k]}")


def _load_graph_spec(spec: str, data_dir: Optional[str]) -> Tuple[str, Graph]:
    """Resolve a graph argument: '-' for graph6/JSON on stdin, a family
    spec like johnson:6:3, a bundled name, or a .g6 file path."""
    if spec == "-":
        raw = sys.stdin.buffer.read().strip()
        if raw.startswith(b"{"):
            obj = json.loads(raw)
            g = Graph(int(obj["graph"]["n"]),
                      [tuple(e) for e in obj["graph"]["edges"]])
            return obj.get("id", "stdin"), g
        return "stdin", load_graph6(raw.splitlines()[0])
    parts = spec.split(":")
    fam = parts[0]
    try:
        if fam == "johnson" and len(parts) in (3, 4):
            n, d = int(parts[1]), int(parts[2])
            j = int(parts[3]) if len(parts) == 4 else 1
            return spec, johnson_graph(n, d, j)
        if fam == "kneser" and len(parts) == 3:
            n, d = int(parts[1]), int(parts[2])
            return spec, johnson_graph(n, d, d)
        if fam == "hamming" and len(parts) in (3, 4):
            d, n = int(parts[1]), int(parts[2])
            j = int(parts[3]) if len(parts) == 4 else 1
            return spec, hamming_graph(d, n, j)
        if fam == "cycle" and len(parts) == 2:
            return spec, cycle_graph(int(parts[1]))
    except ValueError as exc:
        raise UsageError(f"bad family spec {spec!r}: {exc}")
    if spec.endswith(".g6"):
        try:
            with open(spec, "rb") as fh:
                return spec, load_graph6(fh.read().splitlines()[0])
        except OSError as exc:
            raise UsageError(f"cannot read {spec}: {exc}")
    try:
        return spec, bundle.load_bundled_graph(spec, data_dir)
    except FileNotFoundError:
        raise UsageError(f"unknown graph {spec!r}")


def _signed_record(name: str, G: Graph, M: ExactMatrix) -> dict:
    return {
        "id": name,
        "graph": {"n": G.n, "edges": [list(e) for e in G.edges]},
        "matrix": json.loads(M.to_json()),
    }


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_gen(args, fmt, data_dir) -> int:
    if args.family == "johnson":
        G = johnson_graph(args.n, args.d, args.j)
        if args.emit == "signed":
            A = signed_adjacency_A(args.n, args.d)
            print(json.dumps(_signed_record(
                f"johnson:{args.n}:{args.d}", G, A), sort_keys=True))
            return 0
    elif args.family == "kneser":
        G = johnson_graph(args.n, args.d, args.d)
    elif args.family == "hamming":
        G = hamming_graph(args.d, args.n, args.j)
    elif args.family == "complement":
        _, base = _load_graph_spec(args.of, data_dir)
        G = complement(base)
    elif args.family == "tensor":
        orders = [int(x) for x in args.orders.split(",")]
        cert = tensor_signing(orders, data_dir)
        if args.emit == "signed":
            G = Graph(cert.matrix.rows, [
                (u, v) for u in range(cert.matrix.rows)
                for v in range(u + 1, cert.matrix.rows)
                if cert.matrix.num[u][v] != 0])
            print(json.dumps(_signed_record(
                f"tensor:{args.orders}", G, cert.matrix), sort_keys=True))
            return 0
        support = cert.matrix.offdiag_support()
        G = Graph(cert.matrix.rows,
                  [(u, v) for u in range(support.shape[0])
                   for v in range(u + 1, support.shape[0]) if support[u, v]])
    else:
        raise UsageError(f"unknown family {args.family}")
    sys.stdout.buffer.write(save_graph6(G) + b"\n")
    return 0


def cmd_certify(args, fmt, data_dir) -> int:
    upper = []
    if args.target == "-":
        raw = sys.stdin.buffer.read().strip()
        if raw.startswith(b"{"):
            obj = json.loads(raw)
            G = Graph(int(obj["graph"]["n"]),
                      [tuple(e) for e in obj["graph"]["edges"]])
            gid = obj.get("id", "stdin")
            if "matrix" in obj:
                M = ExactMatrix.from_json(json.dumps(obj["matrix"]))
                upper.append(("supplied-matrix", M))
        else:
            gid, G = "stdin", load_graph6(raw.splitlines()[0])
    else:
        gid, G = _load_graph_spec(args.target, data_dir)
        parts = args.target.split(":")
        if parts[0] == "johnson" and len(parts) == 3:
            upper.append((f"A({parts[1]},{parts[2]})",
                          signed_adjacency_A(int(parts[1]), int(parts[2]))))
    report = q_bounds(G, gid, exhaust_budget=args.exhaust_budget,
                      upper_matrices=upper)
    _emit(report.to_dict(), fmt)
    return 0


def cmd_obstruct(args, fmt, data_dir) -> int:
    gid, G = _load_graph_spec(args.graph, data_dir)
    sys_ = phi(G, args.j)
    out = {"graph": gid, "j": args.j, "polynomials": len(sys_.polynomials)}
    ok = True
    if args.mode in ("parity", "both"):
        cert = parity_certificate(sys_)
        out["parity"] = (None if cert is None else
                         {"bound": cert.bound, "witness": cert.witness})
    if args.mode in ("exhaust", "both"):
        cert = sign_exhaust(sys_)
        out["exhaust"] = {"bound": cert.bound, "stats": cert.stats,
                          "witness": cert.witness}
    _emit(out, fmt)
    return 0 if ok else 1


def _scheme_pair(args, data_dir):
    if args.family == "johnson":
        eig = johnson_eigenmatrix(args.n, args.d)
        G = johnson_graph(args.n, args.d)
    elif args.family == "hamming":
        eig = hamming_eigenmatrix(args.d, args.n)
        G = hamming_graph(args.d, args.n)
    else:
        raise UsageError(f"unknown scheme family {args.family}")
    return scheme_from_graph(G), eig


def cmd_scheme(args, fmt, data_dir) -> int:
    if args.action == "eigenmatrix":
        if args.family == "johnson":
            eig = johnson_eigenmatrix(args.n, args.d)
        elif args.family == "hamming":
            eig = hamming_eigenmatrix(args.d, args.n)
        else:
            raise UsageError(f"unknown scheme family {args.family}")
        _emit({"family": args.family, "n": args.n, "d": args.d,
               "P": eig.P, "multiplicities": eig.multiplicities}, fmt)
        return 0
    scheme, eig = _scheme_pair(args, data_dir)
    if args.action == "idempotent":
        if not args.I:
            raise UsageError("--I is required for scheme idempotent")
        I = [int(x) for x in args.I.split(",")]
        w = idempotent_EI(scheme, eig, I)
        _emit({"family": args.family, "n": args.n, "d": args.d,
               "I": list(w.I), "J": list(w.J), "rank": w.rank,
               "coefficients": [str(c) for c in w.coefficients],
               "connected": w.connected}, fmt)
        return 0
    if args.action == "search":
        found = two_eig_search(scheme, eig, args.max_size)
        _emit({"family": args.family, "n": args.n, "d": args.d,
               "witnesses": [{"I": list(w.I), "J": list(w.J),
                              "rank": w.rank, "connected": w.connected}
                             for w in found]}, fmt)
        return 0
    raise UsageError(f"unknown scheme action {args.action}")


def cmd_codes(args, fmt, data_dir) -> int:
    report = table2_report(args.n, args.d)
    _emit(report.to_dict(), fmt)
    return 0 if report.verified else 1


def cmd_fold(args, fmt, data_dir) -> int:
    gid, G = _load_graph_spec(args.target, data_dir)
    folded = antipodal_fold(G)
    if folded is None:
        raise VerificationFailure(f"{gid} is not an antipodal 2-cover")
    fold_graph, signed = folded
    S = signed.signed_adjacency()
    cover_cp = charpoly_int(ExactMatrix.from_int_array(G.adjacency_int()))
    fold_cp = charpoly_int(
        ExactMatrix.from_int_array(fold_graph.adjacency_int()))
    signed_cp = charpoly_int(S)
    from .exact import poly_mul
    factored = poly_mul(fold_cp, signed_cp) == cover_cp
    if not factored:
        raise VerificationFailure("cover charpoly does not factor")
    _emit({"graph": gid, "cover_order": G.n, "folded_order": fold_graph.n,
           "signed_minpoly_degree": minimal_polynomial_degree(S),
           "charpoly_factorization": "verified"}, fmt)
    return 0


def cmd_zeta(args, fmt, data_dir) -> int:
    rows = []
    for j in range(args.d + 1):
        for t in range(3):
            z = zeta(args.d, j, t)
            rows.append({"j": j, "t": t, "value": z.value, "kappa": z.kappa})
    _emit({"d": args.d, "identities": len(rows), "table": rows,
           "all_match": True}, fmt)
    return 0


def cmd_zf(args, fmt, data_dir) -> int:
    parts = args.target.split(":")
    out = {"graph": args.target}
    if parts[0] == "johnson" and len(parts) == 3:
        n, d = int(parts[1]), int(parts[2])
        G = johnson_graph(n, d)
        cand = forcing_candidate(n, d)
        closure = zero_forcing_closure(G, cand)
        out["candidate_size"] = len(cand)
        out["candidate_forces"] = len(closure) == G.n
        if not out["candidate_forces"]:
            raise VerificationFailure("candidate set does not force")
    else:
        _, G = _load_graph_spec(args.target, data_dir)
    if args.exhaustive:
        z = zero_forcing_number_exhaustive(G)
        if z is None:
            raise UsageError("graph too large for exhaustive zero forcing")
        out["zero_forcing_number"] = z
    _emit(out, fmt)
    return 0


def cmd_table1(args, fmt, data_dir) -> int:
    rows = table1_reproduce(data_dir)
    _emit({"rows": rows,
           "matches_paper": sum(1 for r in rows if r["matches_paper"]),
           "total": len(rows)}, fmt)
    return 0 if all(r["matches_paper"] for r in rows) else 1


def cmd_frames(args, fmt, data_dir) -> int:
    cert = frame_vectors(args.n, args.d)
    _emit({"n": args.n, "d": args.d, "vectors": cert.vectors.cols,
           "ambient_dim": cert.ambient_dim, "frame_rank": cert.frame_rank,
           "tight": cert.tight}, fmt)
    return 0 if cert.tight else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"),
                        default=argparse.SUPPRESS)
    common.add_argument("--data-dir", default=argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="spectracert", parents=[common])
    sub = p.add_subparsers(dest="command", required=True,
                           parser_class=lambda **kw: argparse.ArgumentParser(
                               parents=[common], **kw))

    g = sub.add_parser("gen", help="emit a graph (graph6) or signed record")
    g.add_argument("family", choices=("johnson", "hamming", "kneser",
                                      "complement", "tensor"))
    g.add_argument("--n", type=int, default=0)
    g.add_argument("--d", type=int, default=0)
    g.add_argument("--j", type=int, default=1)
    g.add_argument("--of", default=None, help="base graph for complement")
    g.add_argument("--orders", default="", help="tensor factor orders, csv")
    g.add_argument("--emit", choices=("graph6", "signed"), default="graph6")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("certify", help="q-bound report for a graph")
    c.add_argument("target", help="graph6 file, family spec, bundled name, -")
    c.add_argument("--exhaust-budget", type=int, default=24,
                   choices=range(0, 33), metavar="N")
    c.set_defaults(func=cmd_certify)

    o = sub.add_parser("obstruct", help="run obstruction rules at level j")
    o.add_argument("--graph", required=True)
    o.add_argument("--j", type=int, required=True)
    o.add_argument("--mode", choices=("parity", "exhaust", "both"),
                   default="parity")
    o.set_defaults(func=cmd_obstruct)

    s = sub.add_parser("scheme", help="association scheme computations")
    s.add_argument("action", choices=("eigenmatrix", "idempotent", "search"))
    s.add_argument("--family", choices=("johnson", "hamming"),
                   default="johnson")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--I", default=None, help="eigenspace indices, csv")
    s.add_argument("--max-size", type=int, default=None)
    s.set_defaults(func=cmd_scheme)

    k = sub.add_parser("codes", help="ternary code relations")
    k.add_argument("action", choices=("table2",))
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--d", type=int, required=True)
    k.set_defaults(func=cmd_codes)

    f = sub.add_parser("fold", help="antipodal fold with charpoly check")
    f.add_argument("target")
    f.set_defaults(func=cmd_fold)

    z = sub.add_parser("zeta", help="mod-3 binomial sum table")
    z.add_argument("--d", type=int, required=True)
    z.set_defaults(func=cmd_zeta)

    zf = sub.add_parser("zf", help="zero forcing checks")
    zf.add_argument("target")
    zf.add_argument("--exhaustive", action="store_true")
    zf.set_defaults(func=cmd_zf)

    t1 = sub.add_parser("table1", help="reproduce the twelve-row survey")
    t1.set_defaults(func=cmd_table1)

    fr = sub.add_parser("frames", help="tight frame certificate")
    fr.add_argument("--n", type=int, required=True)
    fr.add_argument("--d", type=int, required=True)
    fr.set_defaults(func=cmd_frames)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "format", "json")
    data_dir = getattr(args, "data_dir", None)
    try:
        return args.func(args, fmt, data_dir)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (VerificationFailure, AssertionError, GraphError,
            ValueError, bundle.DataIntegrityError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
