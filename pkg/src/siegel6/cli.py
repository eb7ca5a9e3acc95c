"""Command-line front end: ``siegel6 <command> [options]``.

Exit status is 0 exactly when every check a command performs passes.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from . import cache
from .hecke import format_factorization, format_poly
from .index_lattice import Index
from .rcpoly import is_harmonic, is_homogeneous, solve_rc_space
from .structure import (
    CHI140_INDEX,
    CHI140_VALUE,
    LABELS,
    TABLE3,
    TABLE3_DETERMINANT,
    ClassicalStore,
    DimSeries,
    build_generators,
    chi140_coefficients,
    format_table3,
    hecke_table,
    plan_precision,
    table3_columns,
    table3_determinant,
)

CLASSICAL_NAMES = ("phi4", "phi6", "chi10", "chi12", "chi5")


@dataclass(frozen=True)
class Config:
    cache_dir: Path | None
    threads: int
    seed: int
    tmax: int | None

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError("threads must be at least 1")


def config_from_args(args: argparse.Namespace) -> Config:
    cache_dir = args.cache or os.environ.get("SIEGEL6_CACHE")
    threads = args.threads or int(os.environ.get("SIEGEL6_THREADS", "1"))
    return Config(Path(cache_dir) if cache_dir else None, threads, args.seed, args.tmax)


class Output:
    def __init__(self, path: str | None):
        self.lines: list[str] = []
        self.path = path

    def __call__(self, line: str = ""):
        self.lines.append(line)
        print(line)

    def close(self):
        if self.path:
            tmp = Path(self.path + ".tmp")
            tmp.write_text("\n".join(self.lines) + "\n")
            os.replace(tmp, self.path)


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


# --- commands -------------------------------------------------------------------------------


def cmd_classical(cfg: Config, out: Output, form: str, route: str) -> int:
    tmax = cfg.tmax if cfg.tmax is not None else 8
    store = ClassicalStore(route, cfg.cache_dir)
    f = store.get(form, tmax)
    text = cache.dumps(f)
    digest = text.split("\n")[6].split()[1]
    out(f"{form} weight={f.weight} coset={f.coset} tmax={f.tmax} nonzero={len(f.coeffs)}")
    out(f"sha256 {digest}")
    if store.cache_dir is not None:
        out(f"cache {store.path(form)}")
    return 0


def cmd_generators(cfg: Config, out: Output) -> int:
    tmax = cfg.tmax if cfg.tmax is not None else 10
    store = ClassicalStore(cache_dir=cfg.cache_dir)
    gens = build_generators(tmax, store)
    ok = True
    for i, (cusp, eq) in sorted(gens.check().items()):
        out(f"F{i} weight=(6,{i}) nonzero={len(gens[i].coeffs)} cusp={cusp} equivariant={eq}")
        ok &= cusp and eq
        if cfg.cache_dir is not None:
            cache.store(gens[i], cfg.cache_dir / f"F{i}.txt")
    if tmax >= max(n.trace for n, _ in TABLE3.values()):
        cols = table3_columns(gens)
        out(format_table3(cols))
        match = all(tuple(cols[i]) == TABLE3[i][1] for i in LABELS)
        det = table3_determinant(cols)
        out(f"table {_status(match)}")
        out(f"determinant {det} {_status(det == TABLE3_DETERMINANT)}")
        ok &= match and det == TABLE3_DETERMINANT
    return 0 if ok else 1


def cmd_hecke(cfg: Config, out: Output, p: int, j: int, k: int, show_charpoly: bool) -> int:
    if j != 6:
        out("only j = 6 is supported")
        return 2
    probe = 8 if p == 2 else 6
    tmax = cfg.tmax if cfg.tmax is not None else p * probe
    store = ClassicalStore(cache_dir=cfg.cache_dir)
    table = hecke_table(p, k, tmax, store)
    out(f"T({p}) on M_(6,{k}) basis: {', '.join(table.labels)}")
    for f in table.factors:
        if len(f) == 2:
            out(f"eigenvalue {-f[1]}")
        elif show_charpoly:
            out(f"charpoly {format_poly(f)}")
    if show_charpoly:
        out(f"full {format_poly(table.charpoly)}")
    for d, fac in table.discriminants:
        sign = "-" if d < 0 else ""
        out(f"discriminant {d} = {sign}{format_factorization(fac)}")
    return 0


def cmd_dims(cfg: Config, out: Output, parity: str, kmax: int) -> int:
    series = DimSeries()
    start = 1 if parity == "odd" else 0
    vals = [f"{k}:{series.coefficient(k)}" for k in range(start, kmax + 1, 2) if series.coefficient(k)]
    out(" ".join(vals))
    return 0


def _parse_index(text: str) -> Index:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("index must be n,m,r")
    from fractions import Fraction

    return Index.from_nmr(*(Fraction(p) for p in parts))


def cmd_verify(cfg: Config, out: Output, index: Index, checkpoint: str | None) -> int:
    plan = plan_precision("chi140", n=index)
    tmax = max(plan[f"F{i}"] for i in LABELS)
    if cfg.tmax is not None:
        tmax = max(tmax, cfg.tmax)
    store = ClassicalStore(cache_dir=cfg.cache_dir)
    gens = build_generators(max(tmax, 0), store)
    mirror = Index(index.nu1, index.nu2, -index.rho)
    vals = chi140_coefficients(gens, [index, mirror], checkpoint_dir=checkpoint, threads=cfg.threads)
    c, c2 = vals[index], vals[mirror]
    label = ",".join(str(x) for x in index.nmr)
    out(f"c({label}) = {c}")
    out(f"c(mirror) = {c2} {_status(c == c2)}")
    ok = c == c2
    if index == CHI140_INDEX:
        out(f"expected {CHI140_VALUE} {_status(c == CHI140_VALUE)}")
        ok &= c == CHI140_VALUE
    return 0 if ok else 1


def cmd_rc_space(cfg: Config, out: Output, j: int, ell: int, types: list[int]) -> int:
    space = solve_rc_space(j, ell, types)
    out(f"dim RC({j},{ell}; {tuple(types)}) = {len(space)}")
    ok = True
    for idx, P in enumerate(space):
        hom = is_homogeneous(P, j, ell, seed=cfg.seed)
        harm = is_harmonic(P, types, seed=cfg.seed)
        ok &= hom and harm
        out(f"basis[{idx}] terms={len(P.terms)} homogeneous={hom} harmonic={harm}")
    return 0 if ok else 1


# --- entry point ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tmax", type=int, default=None, help="doubled-trace precision")
    common.add_argument("--cache", default=None, help="cache directory (env SIEGEL6_CACHE)")
    common.add_argument("--threads", type=int, default=None, help="worker threads (env SIEGEL6_THREADS)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized identity checks")
    common.add_argument("--out", default=None, help="also write the report to this file")

    parser = argparse.ArgumentParser(prog="siegel6", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classical", parents=[common], help="compute and cache a classical form")
    p.add_argument("form", choices=CLASSICAL_NAMES)
    p.add_argument("--route", choices=("maass", "theta"), default="maass")

    sub.add_parser("generators", parents=[common], help="build the seven generators and check the table")

    p = sub.add_parser("hecke", parents=[common], help="T(p) on M_(j,k)")
    p.add_argument("p", type=int)
    p.add_argument("j", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--charpoly", action="store_true")

    p = sub.add_parser("dims", parents=[common], help="dimensions of M_(6,k)")
    p.add_argument("parity", choices=("odd", "even"))
    p.add_argument("kmax", type=int)

    p = sub.add_parser("verify-theorem", parents=[common], help="wedge-form coefficient c(n)")
    p.add_argument("index", nargs="?", type=_parse_index, default=CHI140_INDEX, help="n,m,r (default 12,8,4)")
    p.add_argument("--checkpoint", default=None, help="directory for stage checkpoints")

    p = sub.add_parser("rc-space", parents=[common], help="solve for RC polynomials")
    p.add_argument("j", type=int)
    p.add_argument("ell", type=int)
    p.add_argument("types", type=int, nargs="+")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = config_from_args(args)
    random.seed(cfg.seed)
    os.environ.setdefault("SIEGEL6_THREADS", str(cfg.threads))
    out = Output(args.out)
    try:
        if args.command == "classical":
            code = cmd_classical(cfg, out, args.form, args.route)
        elif args.command == "generators":
            code = cmd_generators(cfg, out)
        elif args.command == "hecke":
            code = cmd_hecke(cfg, out, args.p, args.j, args.k, args.charpoly)
        elif args.command == "dims":
            code = cmd_dims(cfg, out, args.parity, args.kmax)
        elif args.command == "verify-theorem":
            code = cmd_verify(cfg, out, args.index, args.checkpoint)
        else:
            code = cmd_rc_space(cfg, out, args.j, args.ell, args.types)
    except (ValueError, KeyError) as exc:
        module = type(exc).__module__.rsplit(".", 1)[-1]
        out(f"error [{module}]: {exc}")
        code = 2
    out.close()
    return code


if __name__ == "__main__":
    sys.exit(main())
