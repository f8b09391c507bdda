"""Command-line front end.

    geoskew compute --alpha 1 --lambda 0.5 --p p.json --q q.csv
    geoskew sweep --out fig1.csv
    geoskew gaussian-sweep --out fig4.csv
    geoskew verify --seed 0

Exit codes: 0 success, 1 verification failure, 2 I/O or parse error,
3 domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import divergences as dv
from . import measures as ms
from .errors import ConvergenceError, DomainError
from .measures import DensityFn, ProbVec
from .scalar import as_alpha, check_lambda
from .verify import run_verify

EXIT_OK, EXIT_VERIFY, EXIT_IO, EXIT_DOMAIN = 0, 1, 2, 3

# options whose values may start with "-" (e.g. -inf, -1,0,1)
_SIGNED_OPTIONS = ("--alpha", "--lambda")


class SourceError(Exception):
    """A distribution source could not be read or parsed."""


def fmt(x: float) -> str:
    if x == 0:
        return "0"
    return format(x, ".12g")


def parse_value(text, parse=float):
    try:
        return parse(text)
    except DomainError:
        raise
    except (TypeError, ValueError) as exc:
        raise SourceError(f"cannot parse {text!r}") from exc


def parse_grid(text: str, parse=float) -> list[float]:
    """``a,b,c`` or ``start:stop:step`` (inclusive of stop)."""
    text = text.strip()
    if text.count(":") == 2:
        start, stop, step = (parse_value(t) for t in text.split(":"))
        if step <= 0 or stop < start:
            raise DomainError(f"bad range {text!r}")
        count = int(round((stop - start) / step)) + 1
        return [parse(float(format(start + k * step, ".12g"))) for k in range(count)]
    return [parse_value(t, parse) for t in text.split(",") if t.strip()]


def _read_weights(path: Path) -> tuple[list[float], bool]:
    try:
        text = path.read_text()
    except OSError as exc:
        raise SourceError(f"cannot read {path}: {exc}") from exc
    stripped = text.lstrip()
    try:
        if path.suffix.lower() == ".json" or stripped.startswith("{"):
            doc = json.loads(text)
            if not isinstance(doc, dict) or not isinstance(doc.get("weights"), list):
                raise SourceError(f"{path}: expected an object with a 'weights' array")
            do_norm = doc.get("normalize", True)
            if not isinstance(do_norm, bool):
                raise SourceError(f"{path}: 'normalize' must be true or false")
            return [float(w) for w in doc["weights"]], do_norm
        rows = [line.strip().rstrip(",") for line in text.splitlines()]
        return [float(r) for r in rows if r], True
    except (ValueError, TypeError) as exc:
        raise SourceError(f"{path}: {exc}") from exc


def load_source(spec: str, mode: str = "strict", eps: float = ms.CLAMP_EPS):
    """Resolve a file path or an inline generator to a ProbVec or DensityFn."""
    head, _, rest = spec.partition(":")
    if head in ("binomial", "gaussian") and rest:
        args = rest.split(":")
        try:
            if head == "binomial":
                n, prob = args
                return ms.binomial_pmf(int(n), float(prob))
            mu, var = args
            return ms.gaussian_density(float(mu), float(var))
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            raise SourceError(f"bad generator {spec!r}") from exc
    weights, do_norm = _read_weights(Path(spec))
    if do_norm or mode == "clamp":
        return ms.normalize(weights, mode=mode, eps=eps)
    return ProbVec(weights)


def _evaluate(kind, alpha, lam, p, q) -> float:
    if isinstance(p, DensityFn) or isinstance(q, DensityFn):
        if not (isinstance(p, DensityFn) and isinstance(q, DensityFn)):
            raise DomainError("cannot mix a density with a probability vector")
        if kind == "gs":
            return dv.geodesical_skew_continuous(alpha, lam, p, q)
        if kind == "sym":
            return 0.5 * (dv.geodesical_skew_continuous(alpha, lam, p, q)
                          + dv.geodesical_skew_continuous(alpha, lam, q, p))
        raise DomainError(f"divergence {kind!r} is only available for vectors")
    funcs = {
        "gs": lambda: dv.geodesical_skew(alpha, lam, p, q),
        "sym": lambda: dv.symmetrized_geodesical_skew(alpha, lam, p, q),
        "kl": lambda: dv.kl(p, q),
        "js": lambda: dv.js(p, q),
        "jeffreys": lambda: dv.jeffreys(p, q),
        "skew": lambda: dv.skew(lam, p, q),
        "alpha": lambda: dv.alpha_divergence(alpha, p, q),
        "lower": lambda: dv.divergence_lower_bound(p, q),
        "upper": lambda: dv.divergence_upper_bound(p, q),
    }
    return funcs[kind]()


def cmd_compute(args) -> int:
    alpha = parse_value(args.alpha, as_alpha)
    lam = parse_value(args.lam, check_lambda)
    p = load_source(args.p, args.mode, args.eps)
    q = load_source(args.q, args.mode, args.eps)
    print(fmt(_evaluate(args.divergence, alpha, lam, p, q)))
    return EXIT_OK


def write_csv(path: str | None, header, rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    if path in (None, "-"):
        sys.stdout.write(buf.getvalue())
        return
    try:
        with open(path, "w", newline="") as fh:
            fh.write(buf.getvalue())
    except OSError as exc:
        raise SourceError(f"cannot write {path}: {exc}") from exc


def sweep_rows(alphas, lams, p, q):
    rows = []
    for alpha in alphas:
        for lam in lams:
            rows.append((fmt(alpha), fmt(lam), fmt(dv.geodesical_skew(alpha, lam, p, q))))
    return rows


def cmd_sweep(args) -> int:
    alphas = parse_grid(args.alpha, as_alpha)
    lams = parse_grid(args.lam, check_lambda)
    if not alphas or not lams:
        raise DomainError("alpha and lambda grids must be non-empty")
    p = load_source(args.p, args.mode, args.eps)
    q = load_source(args.q, args.mode, args.eps)
    if not (isinstance(p, ProbVec) and isinstance(q, ProbVec)):
        raise DomainError("sweep needs discrete sources; use gaussian-sweep for densities")
    write_csv(args.out, ("alpha", "lambda", "divergence"), sweep_rows(alphas, lams, p, q))
    return EXIT_OK


def gaussian_sweep_rows(ref: DensityFn, count, mu0, var0, mu_step, var_step, alphas, lams):
    rows = []
    for j in range(1, count + 1):
        mu = mu0 + (j - 1) * mu_step
        var = var0 + (j - 1) * var_step
        p = ms.gaussian_density(mu, var)
        for alpha in alphas:
            for lam in lams:
                d = dv.geodesical_skew_continuous(alpha, lam, p, ref)
                rows.append((str(j), fmt(mu), fmt(var), fmt(alpha), fmt(lam), fmt(d)))
    return rows


def cmd_gaussian_sweep(args) -> int:
    alphas = parse_grid(args.alpha, as_alpha)
    lams = parse_grid(args.lam, check_lambda)
    ref = load_source(args.q)
    if not isinstance(ref, DensityFn):
        raise DomainError("gaussian-sweep needs a density reference, e.g. gaussian:0:0.5")
    rows = gaussian_sweep_rows(ref, args.count, args.mu0, args.var0,
                               args.mu_step, args.var_step, alphas, lams)
    write_csv(args.out, ("j", "mu", "var", "alpha", "lambda", "divergence"), rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verify(seed=args.seed, samples=args.samples)
    print(report.format_table())
    return EXIT_OK if report.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geoskew", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, alpha_default, lam_default, p_default=None, q_default=None):
        sp.add_argument("--alpha", default=alpha_default,
                        help="alpha value (or grid); accepts inf and -inf")
        sp.add_argument("--lambda", dest="lam", default=lam_default)
        sp.add_argument("--p", default=p_default, required=p_default is None)
        sp.add_argument("--q", default=q_default, required=q_default is None)
        sp.add_argument("--mode", choices=("strict", "clamp"), default="strict")
        sp.add_argument("--eps", type=float, default=ms.CLAMP_EPS)

    sp = sub.add_parser("compute", help="evaluate one divergence")
    common(sp, "1", "0.5")
    sp.add_argument("--divergence", default="gs",
                    choices=("gs", "sym", "kl", "js", "jeffreys", "skew", "alpha", "lower", "upper"))
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("sweep", help="alpha x lambda grid between two vectors")
    common(sp, "-1,0,1,3", "0:1:0.01", "binomial:10:0.3", "binomial:10:0.7")
    sp.add_argument("--out", default="-")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("gaussian-sweep", help="Gaussian family against a fixed reference")
    sp.add_argument("--alpha", default="-1,0,1,3")
    sp.add_argument("--lambda", dest="lam", default="0.25,0.5,0.75,1")
    sp.add_argument("--q", default="gaussian:0:0.5", help="reference density")
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--mu0", type=float, default=0.0)
    sp.add_argument("--var0", type=float, default=0.5)
    sp.add_argument("--mu-step", type=float, default=0.5)
    sp.add_argument("--var-step", type=float, default=0.2)
    sp.add_argument("--out", default="-")
    sp.set_defaults(func=cmd_gaussian_sweep)

    sp = sub.add_parser("verify", help="run the property suite")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=100)
    sp.set_defaults(func=cmd_verify)
    return parser


def _glue_signed(argv: list[str]) -> list[str]:
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _SIGNED_OPTIONS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_glue_signed(argv))
    try:
        return args.func(args)
    except SourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DomainError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
