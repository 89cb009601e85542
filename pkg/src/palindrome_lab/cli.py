"""Command-line front end.

Subcommands: enumerate, census, sbd, k2, poisson, oscillate, vdc,
discrepancy, verify-all. Reports are CSV (RFC-4180 quoting) or JSON and are
byte-identical for identical configurations regardless of thread count; the
PALINDROME_LAB_THREADS environment variable supplies a default thread count.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
from dataclasses import dataclass

from . import acceptance, census, expsum, harness, oscillate
from .digits import to_digits
from .parallel import resolve_threads
from .report import emit, fmt_real
from .streams import stream_fixed_length, stream_up_to


@dataclass(frozen=True)
class RunConfig:
    """One resolved CLI invocation."""

    base: int | None = None
    x: int | None = None
    n_digits: int | None = None
    d_dyadic: int | None = None
    q_max: int | None = None
    d_max: int | None = None
    restricted: bool = False
    threads: int = 1
    fmt: str = "csv"
    output: str | None = None
    seed: int = harness.DEFAULT_SEED
    quick: bool = False


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        base=getattr(args, "base", None),
        x=getattr(args, "max", None),
        n_digits=getattr(args, "digits", None),
        d_dyadic=getattr(args, "d", None),
        q_max=getattr(args, "q_max", None),
        d_max=getattr(args, "d_max", None),
        restricted=getattr(args, "restricted", False),
        threads=resolve_threads(getattr(args, "threads", None)),
        fmt=getattr(args, "format", "csv"),
        output=getattr(args, "output", None),
        seed=getattr(args, "seed", harness.DEFAULT_SEED),
        quick=getattr(args, "quick", False),
    )


def _open_out(cfg: RunConfig):
    if cfg.output:
        return open(cfg.output, "w", encoding="utf-8", newline="")
    return sys.stdout


def _close_out(cfg: RunConfig, handle) -> None:
    if cfg.output:
        handle.close()


# ---------------------------------------------------------------------------
# subcommand records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SbdRecord:
    base: int
    x: int
    d_dyadic: int
    count_stream: int
    count_multiples: int


@dataclass(frozen=True)
class K2Record:
    a1: int
    a2: int
    a3: int
    q: int
    c: int
    full_re: float
    full_im: float
    stationary_re: float
    stationary_im: float
    difference: float


@dataclass(frozen=True)
class PoissonRecord:
    demo: str
    q: int
    lhs_re: float
    lhs_im: float
    rhs_re: float
    rhs_im: float
    difference: float
    modes: int


@dataclass(frozen=True)
class OscillateRecord:
    family: str
    index: int
    observed: float
    bound: float
    passed: bool


@dataclass(frozen=True)
class VdcRecord:
    family: str
    d_dyadic: int
    q_max: int
    lhs: float
    rhs: float
    ratio: float


@dataclass(frozen=True)
class DiscrepancyRecord:
    base: int
    x: int
    d_max: int
    value: float


@dataclass(frozen=True)
class CriterionRecord:
    cid: int
    name: str
    passed: bool
    detail: str


# ---------------------------------------------------------------------------
# handlers
# ---------------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    cfg = _config(args)
    if (cfg.x is None) == (cfg.n_digits is None):
        print("enumerate: exactly one of --max/--digits is required", file=sys.stderr)
        return 2
    if cfg.n_digits is not None:
        stream = stream_fixed_length(cfg.base, cfg.n_digits, restricted=cfg.restricted)
    else:
        stream = stream_up_to(cfg.base, cfg.x, restricted=cfg.restricted)
    out = _open_out(cfg)
    try:
        for n in stream:
            if args.render_digits:
                rendered = ".".join(str(d) for d in to_digits(n, cfg.base).reversed_digits())
                out.write(f"{n},{rendered}\n")
            else:
                out.write(f"{n}\n")
    finally:
        _close_out(cfg, out)
    return 0


def cmd_census(args) -> int:
    cfg = _config(args)
    records = []
    code = 0
    if cfg.x is None and cfg.n_digits is None:
        print("census: one of --max/--digits is required", file=sys.stderr)
        return 2
    try:
        if cfg.x is not None:
            if args.self_test_inject_fault:
                direct = census.q_star_direct(cfg.base, cfg.x, threads=cfg.threads)
                via_mobius = census.q_star_mobius(cfg.base, cfg.x, threads=cfg.threads) + 1
                raise ArithmeticError(
                    f"mobius census identity failed at b={cfg.base}, x={cfg.x}: "
                    f"direct={direct} mobius={via_mobius}")
            records.append(census.census_up_to(cfg.base, cfg.x, threads=cfg.threads))
        if cfg.n_digits is not None:
            records.append(census.q_fixed_length(cfg.base, cfg.n_digits))
    except ArithmeticError as exc:
        print(f"census: {exc}", file=sys.stderr)
        return 1
    out = _open_out(cfg)
    try:
        emit(records, cfg.fmt, out)
    finally:
        _close_out(cfg, out)
    return code


def cmd_sbd(args) -> int:
    cfg = _config(args)
    via_stream = census.s_b(cfg.base, cfg.x, cfg.d_dyadic, strategy="stream")
    via_multiples = census.s_b(cfg.base, cfg.x, cfg.d_dyadic, strategy="multiples")
    rec = SbdRecord(base=cfg.base, x=cfg.x, d_dyadic=cfg.d_dyadic,
                    count_stream=via_stream, count_multiples=via_multiples)
    out = _open_out(cfg)
    try:
        emit([rec], cfg.fmt, out)
    finally:
        _close_out(cfg, out)
    return 0 if via_stream == via_multiples else 1


def cmd_k2(args) -> int:
    cfg = _config(args)
    params = expsum.ExpSumParams(args.a1, args.a2, args.a3, args.q, args.c)
    full = expsum.k2_full(params)
    if args.c >= 2:
        sp = expsum.k2_stationary_phase(params)
    else:
        sp = full
    diff = abs(full - sp)
    rec = K2Record(a1=args.a1, a2=args.a2, a3=args.a3, q=args.q, c=args.c,
                   full_re=full.real, full_im=full.imag,
                   stationary_re=sp.real, stationary_im=sp.imag, difference=diff)
    out = _open_out(cfg)
    try:
        emit([rec], cfg.fmt, out)
    finally:
        _close_out(cfg, out)
    if args.check_identity and diff >= 1e-9 * math.sqrt(args.c):
        print(f"k2: identity violated, |full - stationary| = {fmt_real(diff)}",
              file=sys.stderr)
        return 1
    return 0


def cmd_poisson(args) -> int:
    cfg = _config(args)
    q = args.q
    if args.demo == "triangle":
        f = lambda u: max(0.0, 1.0 - abs(u))
        rep = expsum.poisson_check(f, [1.0] * q, support=(-1.0, 1.0),
                                   breakpoints=(0.0,))
    else:
        g_vals = [complex(math.cos(2 * math.pi * y / q), math.sin(2 * math.pi * y / q))
                  for y in range(q)]
        rep = expsum.poisson_check(oscillate.PSI, g_vals)
    rec = PoissonRecord(demo=args.demo, q=q,
                        lhs_re=rep.lhs.real, lhs_im=rep.lhs.imag,
                        rhs_re=rep.rhs.real, rhs_im=rep.rhs.imag,
                        difference=rep.difference, modes=rep.m_cut)
    out = _open_out(cfg)
    try:
        emit([rec], cfg.fmt, out)
    finally:
        _close_out(cfg, out)
    return 0 if rep.difference < 1e-8 else 1


def cmd_oscillate(args) -> int:
    cfg = _config(args)
    rng = random.Random(cfg.seed)
    records = []
    failures = 0
    for i in range(args.count):
        spec, m = oscillate.random_first_derivative_spec(rng)
        rep = oscillate.check_first_derivative_bound(spec, m, strict=False)
        records.append(OscillateRecord("first-derivative", i, rep.observed,
                                       rep.bound, rep.passed))
        failures += 0 if rep.passed else 1
    for i in range(args.count):
        spec, r = oscillate.random_second_derivative_spec(rng)
        rep = oscillate.check_second_derivative_bound(spec, r, strict=False)
        records.append(OscillateRecord("second-derivative", i, rep.observed,
                                       rep.bound, rep.passed))
        failures += 0 if rep.passed else 1
    out = _open_out(cfg)
    try:
        emit(records, cfg.fmt, out)
    finally:
        _close_out(cfg, out)
    return 0 if failures == 0 else 1


def cmd_vdc(args) -> int:
    cfg = _config(args)
    records = []
    worst = 0.0
    for name, z in harness._vdc_families(cfg.d_dyadic, cfg.q_max, cfg.seed):
        rep = harness.weyl_vdc_check(z, cfg.d_dyadic, cfg.q_max)
        records.append(VdcRecord(name, cfg.d_dyadic, cfg.q_max,
                                 rep.lhs, rep.rhs, rep.ratio))
        worst = max(worst, rep.ratio)
    out = _open_out(cfg)
    try:
        emit(records, cfg.fmt, out)
    finally:
        _close_out(cfg, out)
    return 0 if worst <= 4.0 else 1


def cmd_discrepancy(args) -> int:
    cfg = _config(args)
    value = census.equidistribution_discrepancy(cfg.base, cfg.x, cfg.d_max,
                                                threads=cfg.threads)
    rec = DiscrepancyRecord(base=cfg.base, x=cfg.x, d_max=cfg.d_max, value=value)
    out = _open_out(cfg)
    try:
        emit([rec], cfg.fmt, out)
    finally:
        _close_out(cfg, out)
    return 0


def cmd_verify_all(args) -> int:
    cfg = _config(args)
    results = acceptance.run_all(quick=cfg.quick, threads=cfg.threads)
    records = [CriterionRecord(r.cid, r.name, r.passed, r.detail) for r in results]
    out = _open_out(cfg)
    try:
        emit(records, cfg.fmt, out)
    finally:
        _close_out(cfg, out)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] {r.cid:2d} {r.name}", file=sys.stderr)
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_common(sub, base=False, fmt=True):
    if base:
        sub.add_argument("--base", type=int, required=True, help="numeral base b >= 2")
    if fmt:
        sub.add_argument("--format", choices=("csv", "json"), default="csv")
        sub.add_argument("--output", help="output path (default: stdout)")
    sub.add_argument("--threads", type=int, default=None,
                     help="worker threads (default: PALINDROME_LAB_THREADS or 1)")
    sub.add_argument("--seed", type=int, default=harness.DEFAULT_SEED)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="palindrome-lab",
        description="Palindrome enumeration, square-free censuses, and "
                    "exponential-sum verification experiments.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("enumerate", help="stream palindromes")
    _add_common(p, base=True, fmt=False)
    p.add_argument("--max", type=int, help="upper bound x")
    p.add_argument("--digits", type=int, help="fixed digit length N")
    p.add_argument("--restricted", action="store_true",
                   help="only palindromes coprime to b^3 - b")
    p.add_argument("--render-digits", action="store_true",
                   help="append the base-b digit string")
    p.add_argument("--output", help="output path (default: stdout)")
    p.set_defaults(handler=cmd_enumerate)

    p = subs.add_parser("census", help="square-free census")
    _add_common(p, base=True)
    p.add_argument("--max", type=int, help="census of restricted palindromes <= x")
    p.add_argument("--digits", type=int, help="census of unrestricted N-digit palindromes")
    p.add_argument("--self-test-inject-fault", action="store_true",
                   help=argparse.SUPPRESS)
    p.set_defaults(handler=cmd_census)

    p = subs.add_parser("sbd", help="palindromes with a square divisor d^2, d in [D, 2D]")
    _add_common(p, base=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--d", type=int, required=True, help="dyadic parameter D")
    p.set_defaults(handler=cmd_sbd)

    p = subs.add_parser("k2", help="quadratic Kloosterman sum")
    _add_common(p)
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--a3", type=int, default=0)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--check-identity", action="store_true",
                   help="fail unless direct and stationary-phase values agree")
    p.set_defaults(handler=cmd_k2)

    p = subs.add_parser("poisson", help="Poisson summation identity demo")
    _add_common(p)
    p.add_argument("--demo", choices=("triangle", "psi"), required=True)
    p.add_argument("--q", type=int, default=1, help="period of g")
    p.set_defaults(handler=cmd_poisson)

    p = subs.add_parser("oscillate", help="randomized oscillatory-integral bound checks")
    _add_common(p)
    p.add_argument("--count", type=int, default=100, help="specs per bound family")
    p.set_defaults(handler=cmd_oscillate)

    p = subs.add_parser("vdc", help="smoothed Weyl differencing on canonical families")
    _add_common(p)
    p.add_argument("--d", type=int, required=True, help="dyadic parameter D")
    p.add_argument("--q-max", dest="q_max", type=int, required=True)
    p.set_defaults(handler=cmd_vdc)

    p = subs.add_parser("discrepancy", help="equidistribution discrepancy mod d^2")
    _add_common(p, base=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--d-max", dest="d_max", type=int, required=True)
    p.set_defaults(handler=cmd_discrepancy)

    p = subs.add_parser("verify-all", help="run the full verification suite")
    _add_common(p)
    p.add_argument("--quick", action="store_true", help="reduced smoke-test grids")
    p.set_defaults(handler=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
