"""Command-line entry point: ``socode <command> ...``.

Exit status: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from ._backend import backend_name
from .code import DimensionLimitError, LinearCode, griesmer_upper, min_distance
from .embedding import CacheError, TableRangeError, build_coset_table, embed
from .io import Config, MatrixFormatError, parse_matrix, read_bounds, write_matrix
from .quantum import QuantumError, css_params
from .reed_muller import rm_generator, so_matrix
from .search import SearchBudgetError, puncture_embed_search
from .so_analysis import ell_vector, syndrome

DOMAIN_ERRORS = (
    MatrixFormatError,
    DimensionLimitError,
    TableRangeError,
    CacheError,
    QuantumError,
    SearchBudgetError,
    ValueError,
    IndexError,
    OSError,
)


def _emit(cfg: Config, text: str, payload: dict) -> None:
    if cfg.output_format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _load(path: str, cfg: Config):
    mf = parse_matrix(path)
    if mf.k > 16:
        raise ValueError(f"{path}: {mf.k} rows is more than the supported 16")
    return mf


def _table(cfg: Config, k: int):
    if k > cfg.max_k and not (k == 7 and cfg.allow_k7):
        raise TableRangeError(f"k={k} exceeds max_k={cfg.max_k}")
    return build_coset_table(k, cache=cfg.cache_dir, allow_k7=cfg.allow_k7)


def cmd_check(args, cfg: Config) -> int:
    g = _load(args.input, cfg).matrix
    ell = ell_vector(g)
    syn = syndrome(g)
    ok = syn.is_zero()
    verdict = "self-orthogonal" if ok else "not self-orthogonal"
    text = "\n".join(
        [
            f"[n={g.cols}, k={g.rows}] {verdict}",
            f"ell(G)    = {ell.parity}",
            f"counts    = {' '.join(map(str, ell.counts))}",
            f"syndrome  = {syn}",
        ]
    )
    payload = {
        "counts": list(ell.counts),
        "ell": str(ell.parity),
        "k": g.rows,
        "n": g.cols,
        "self_orthogonal": ok,
        "syndrome": str(syn),
        "verdict": verdict,
        "zero_columns": ell.zero_columns,
    }
    _emit(cfg, text, payload)
    return 0


def cmd_embed(args, cfg: Config) -> int:
    g = _load(args.input, cfg).matrix
    out, report = embed(g, _table(cfg, g.rows))
    write_matrix(args.output, out, comment=f"SO embedding of {Path(args.input).name}")
    if args.report:
        Path(args.report).write_text(json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n")
    d_in = report.input_min_distance if report.input_min_distance is not None else "-"
    text = (
        f"[{report.n},{report.k},{d_in}] -> [{report.output_n},{report.output_k},{report.output_min_distance}]\n"
        f"syndrome  = {report.syndrome}\n"
        f"appended  = {' '.join(map(str, report.leader_support)) or '(none, already SO)'}"
    )
    _emit(cfg, text, report.to_dict())
    return 0


def cmd_mindist(args, cfg: Config) -> int:
    code = LinearCode(_load(args.input, cfg).matrix)
    d = min_distance(code, cfg.mindist_limit_k)
    _emit(cfg, str(d), {"d": d, "k": code.dimension, "n": code.length})
    return 0


def cmd_so_matrix(args, cfg: Config) -> int:
    so = so_matrix(args.k)
    rows = so.matrix.to_strings()
    labels = [f"r{i}*r{j}" for i, j in so.pairs]
    text = "\n".join(f"{lab:>8}  {row}" for lab, row in zip(labels, rows))
    _emit(cfg, text, {"k": args.k, "pairs": [list(p) for p in so.pairs], "rows": rows})
    return 0


def cmd_rm(args, cfg: Config) -> int:
    m = rm_generator(args.r, args.m)
    _emit(cfg, "\n".join(m.to_strings()), {"m": args.m, "r": args.r, "rows": m.to_strings()})
    return 0


def cmd_covrad(args, cfg: Config) -> int:
    table = _table(cfg, args.k)
    rho = table.covering_radius
    _emit(cfg, str(rho), {"covering_radius": rho, "k": args.k, "syndromes": len(table)})
    return 0


def cmd_quantum(args, cfg: Config) -> int:
    code = LinearCode(_load(args.input, cfg).matrix, name=Path(args.input).stem)
    q = css_params(code, cfg.max_dual_dim)
    _emit(cfg, str(q), q.to_dict())
    return 0


def cmd_search(args, cfg: Config) -> int:
    g = _load(args.input, cfg).matrix
    bounds = read_bounds(cfg.bounds_csv) if cfg.bounds_csv else None
    seed = LinearCode(g, name=Path(args.input).stem)
    records = puncture_embed_search(
        seed,
        args.max_puncture,
        _table(cfg, g.rows),
        bounds=bounds,
        max_subsets=args.max_subsets,
        allow_large=args.allow_large,
    )
    lines = [r.to_json() for r in records]
    if args.output:
        Path(args.output).write_text("".join(line + "\n" for line in lines))
    if cfg.output_format == "json" or not args.output:
        for line in lines:
            print(line)
    else:
        for r in records:
            print(f"[{r.n},{r.k},{r.d}] {r.optimality}")
    return 0


def cmd_griesmer(args, cfg: Config) -> int:
    d = griesmer_upper(args.n, args.k)
    _emit(cfg, str(d), {"d_upper": d, "k": args.k, "n": args.n})
    return 0


def _common_options(suppress: bool) -> argparse.ArgumentParser:
    # accepted before or after the subcommand; the subcommand copy only overrides when given
    def default(value):
        return argparse.SUPPRESS if suppress else value

    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("--format", choices=("text", "json"), default=default("text"), dest="output_format")
    c.add_argument("--cache-dir", type=Path, default=default(None), help="coset-table cache directory")
    c.add_argument("--no-cache", action="store_true", default=default(False), help="never read or write table caches")
    c.add_argument("--bounds", type=Path, default=default(None), help="CSV with header n,k,d of best known d(n,k)")
    c.add_argument("--max-k", type=int, default=default(6))
    c.add_argument("--allow-k7", action="store_true", default=default(False), help="permit the 2^28-entry k=7 table")
    c.add_argument("--mindist-limit-k", type=int, default=default(28))
    c.add_argument("--max-dual-dim", type=int, default=default(24))
    c.add_argument("-v", "--verbose", action="store_true", default=default(False))
    return c


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="socode", description="Self-orthogonal binary code toolkit.", parents=[_common_options(False)]
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({backend_name()})")
    sub = p.add_subparsers(dest="command", required=True)
    common = _common_options(True)

    s = sub.add_parser("check", parents=[common], help="self-orthogonality verdict, ell(G) and syndrome")
    s.add_argument("-i", "--input", required=True)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("embed", parents=[common], help="shortest self-orthogonal embedding")
    s.add_argument("-i", "--input", required=True)
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--report")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("mindist", parents=[common], help="exact minimum distance")
    s.add_argument("-i", "--input", required=True)
    s.set_defaults(func=cmd_mindist)

    s = sub.add_parser("so-matrix", parents=[common], help="print SO_k")
    s.add_argument("-k", type=int, required=True)
    s.set_defaults(func=cmd_so_matrix)

    s = sub.add_parser("rm", parents=[common], help="print a Reed-Muller generator RM(r, m)")
    s.add_argument("-r", type=int, required=True)
    s.add_argument("-m", type=int, required=True)
    s.set_defaults(func=cmd_rm)

    s = sub.add_parser("covrad", parents=[common], help="covering radius of the SO_k coset table")
    s.add_argument("-k", type=int, required=True)
    s.set_defaults(func=cmd_covrad)

    s = sub.add_parser("quantum", parents=[common], help="CSS parameters [[n, n-2k, d]] of an SO code")
    s.add_argument("-i", "--input", required=True)
    s.set_defaults(func=cmd_quantum)

    s = sub.add_parser("search", parents=[common], help="puncture + embed search from a seed code")
    s.add_argument("-i", "--input", required=True)
    s.add_argument("--max-puncture", type=int, required=True)
    s.add_argument("--max-subsets", type=int, default=2_000_000)
    s.add_argument("--allow-large", action="store_true")
    s.add_argument("-o", "--output", help="write JSON lines here")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("griesmer", parents=[common], help="Griesmer upper bound on d for [n, k]")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-k", type=int, required=True)
    s.set_defaults(func=cmd_griesmer)
    return p


def _config(args) -> Config:
    kwargs = dict(
        max_k=args.max_k,
        max_table_k=7 if args.allow_k7 else 6,
        mindist_limit_k=args.mindist_limit_k,
        max_dual_dim=args.max_dual_dim,
        bounds_csv=args.bounds,
        output_format=args.output_format,
    )
    if args.no_cache:
        kwargs["cache_dir"] = None
    elif args.cache_dir is not None:
        kwargs["cache_dir"] = args.cache_dir
    return Config(**kwargs)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        cfg = _config(args)
    except ValueError as exc:
        print(f"socode: error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args, cfg)
    except DOMAIN_ERRORS as exc:
        print(f"socode: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
