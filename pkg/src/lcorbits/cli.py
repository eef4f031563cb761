"""Command-line interface.

Exit codes: 0 success, 2 parse error, 3 budget refusal, 4 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import db
from .boolean import AnfParseError, parse_anf
from .canon import canonical_form
from .codes import CodeError, parse_matrix, profile, to_graph_form
from .construct import ConstructionError, build, load_spec
from .formats import FormatError, from_graph6, to_graph6
from .interlace import log2_par_recursive
from .orbit import (MAX_N_DEFAULT, BudgetError, capital_lambda, decomposable_records,
                    iter_levels, lc_orbit, orbit_record, tables)
from .spectra import BudgetError as SpectrumBudgetError
from .spectra import par, par_exact, sample_par

EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_INVARIANT = 4

THREADS_ENV = "LCORBITS_THREADS"

log = logging.getLogger("lcorbits")


class ParseError(ValueError):
    pass


@dataclass
class RunConfig:
    subcommand: str
    n: int | None = None
    inp: str | None = None
    out: str | None = None
    threads: int = 1
    long_run: bool = False
    seed: int = 0

    def check(self):
        if self.n is not None and self.n > MAX_N_DEFAULT and not self.long_run:
            if self.subcommand in ("enumerate", "tables", "lambda"):
                raise BudgetError(f"n={self.n} needs --long-run")


def format_par(value, quadratic: bool) -> str:
    v = Fraction(value).limit_denominator(1 << 20)
    if quadratic and v.denominator == 1 and v.numerator & (v.numerator - 1) == 0:
        return f"2^{v.numerator.bit_length() - 1} (= {v.numerator})"
    return f"{float(value):.4f}"


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror}") from None


def _graph_arg(args):
    if args.graph6:
        return from_graph6(args.graph6)
    f = parse_anf(args.anf, args.vars)
    if f.degree() > 2:
        raise ParseError("orbit needs a quadratic function")
    return f.graph()


def _load_or_compute(cfg: RunConfig, n_max: int):
    if cfg.inp:
        recs = db.load_db(cfg.inp)
        missing = [n for n in range(1, n_max + 1) if n not in recs]
        if missing:
            raise ParseError(f"{cfg.inp}: no records for n={missing}")
        return recs
    return dict(iter_levels(n_max, cfg.long_run, threads=cfg.threads))


# -- subcommands ---------------------------------------------------------------

def cmd_enumerate(args, cfg: RunConfig):
    resume = {}
    out_path = Path(args.out)
    if args.resume and out_path.exists():
        resume = db.load_db(out_path)

    def report(n, done, total):
        if done == total or done % 50 == 0:
            print(f"n={n}: {done}/{total} parents", file=sys.stderr)

    progress = report if args.progress else None
    conn = {}
    with open(out_path, "w") as fh:
        for n, recs in iter_levels(cfg.n, cfg.long_run, progress, resume,
                                   cfg.threads):
            conn[n] = recs
            level = list(recs)
            if not args.connected_only:
                level += decomposable_records(n, conn)
            # Checkpoint: each completed level is flushed before the next starts.
            db.write_records(level, fh)
            fh.flush()
            print(f"n={n}: {len(recs)} connected orbits", file=sys.stderr)
    return 0


def cmd_tables(args, cfg: RunConfig):
    recs = _load_or_compute(cfg, cfg.n)
    tabs = tables({n: recs[n] for n in range(1, cfg.n + 1)})
    which = tuple(x.strip() for x in args.which.split(","))
    sys.stdout.write(db.tables_csv(tabs, which))
    return 0


def cmd_par(args, cfg: RunConfig):
    f = parse_anf(args.anf, args.vars)
    quadratic = f.degree() <= 2
    if args.method == "recursive":
        if not quadratic:
            raise ParseError("--method recursive needs a quadratic function")
        if args.set != "ihn":
            raise ParseError("--method recursive computes PAR_IHN only")
        e = log2_par_recursive(f.graph())
        print(format_par(1 << e, True))
        return 0
    if args.float:
        value = par(f, args.set, "float", cfg.long_run)
    else:
        value = par_exact(f, args.set, cfg.long_run)
    print(format_par(value, quadratic))
    return 0


def cmd_orbit(args, cfg: RunConfig):
    g = _graph_arg(args)
    members = lc_orbit(g)
    for m in members:
        print(to_graph6(m.graph))
    rec = orbit_record(g)
    print(f"# members={len(members)} lambda={rec.lam} distance={rec.distance} "
          f"par_ihn={rec.par_ihn}", file=sys.stderr)
    return 0


def cmd_code(args, cfg: RunConfig):
    code = parse_matrix(_read(args.matrix))
    if not code.is_self_dual():
        raise ParseError(f"{args.matrix}: code is not self-dual")
    g, gcode = to_graph_form(code)
    prof = profile(gcode)
    if prof != profile(code):
        raise AssertionError("graph form changed the weight distribution")
    print(f"graph6 {to_graph6(g)}")
    print(f"canonical {to_graph6(canonical_form(g).graph)}")
    print("matrix")
    print(gcode.to_text())
    print(f"distance {prof.distance}")
    print("weights " + " ".join(str(x) for x in prof.weight_dist))
    return 0


def cmd_construct(args, cfg: RunConfig):
    if args.example:
        from .construct import example_spec
        spec = example_spec(args.example)
    else:
        spec = load_spec(_read(args.spec))
    p = build(spec)
    print(f"anf {p.to_text(shorthand=p.n <= 10)}")
    print(f"degree {p.degree()}")
    if args.measure != "none":
        value = par_exact(p, args.measure, cfg.long_run)
        print(f"par_{args.measure} {format_par(value, p.degree() <= 2)}")
    return 0


def cmd_sample(args, cfg: RunConfig):
    lo, hi = sample_par(cfg.n, args.count, cfg.seed, long_run=cfg.long_run)
    print(f"min {lo:.4f}")
    print(f"max {hi:.4f}")
    return 0


def cmd_lambda(args, cfg: RunConfig):
    recs = _load_or_compute(cfg, cfg.n)
    print(capital_lambda(cfg.n, recs[cfg.n]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lcorbits", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=int,
                   default=int(os.environ.get(THREADS_ENV, "1")),
                   help=f"worker processes (default ${THREADS_ENV} or 1)")
    p.add_argument("--long-run", action="store_true",
                   help="allow sizes that take hours")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("enumerate", help="classify LC orbits into a JSON-lines DB")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--connected-only", action="store_true")
    s.add_argument("--out", required=True)
    s.add_argument("--resume", action="store_true",
                   help="keep completed levels already in --out")
    s.add_argument("--progress", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("tables", help="classification tables as CSV")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--db")
    s.add_argument("--which", default="counts,distance,lambda",
                   help="comma-separated subset of " + ",".join(db.TABLE_NAMES))
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("par", help="PAR of a Boolean function")
    s.add_argument("--anf", required=True)
    s.add_argument("--set", choices=("ihn", "ih", "hn"), default="ihn")
    s.add_argument("--method", choices=("spectral", "recursive"), default="spectral")
    s.add_argument("--vars", type=int, help="number of variables (default: inferred)")
    s.add_argument("--float", action="store_true", help="floating-point backend")
    s.set_defaults(func=cmd_par)

    s = sub.add_parser("orbit", help="LC orbit members as graph6")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--anf")
    g.add_argument("--graph6")
    s.add_argument("--vars", type=int, help="number of variables for --anf")
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("code", help="graph form and weights of a GF(4) code")
    s.add_argument("--matrix", required=True)
    s.set_defaults(func=cmd_code)

    s = sub.add_parser("construct", help="build a function from a block spec")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--spec")
    src.add_argument("--example", choices=("hexacode-a", "hexacode-b", "triangle-3x3"))
    s.add_argument("--measure", choices=("ihn", "hn", "ih", "none"), default="ihn")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("sample", help="PAR_IHN range of random functions")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_sample)

    s = sub.add_parser("lambda", help="minimum lambda over orbits on n vertices")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--db")
    s.set_defaults(func=cmd_lambda)
    return p


def _config(args) -> RunConfig:
    n = getattr(args, "n", None)
    if n is None:
        n = getattr(args, "max_n", None)
    return RunConfig(
        subcommand=args.cmd,
        n=n,
        inp=getattr(args, "db", None),
        out=getattr(args, "out", None),
        threads=max(1, args.threads),
        long_run=args.long_run,
        seed=getattr(args, "seed", 0),
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = _config(args)
        cfg.check()
        return args.func(args, cfg)
    except (BudgetError, SpectrumBudgetError) as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, AnfParseError, FormatError, CodeError, ConstructionError,
            db.DatabaseError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except AssertionError as e:
        print(f"invariant violation: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
