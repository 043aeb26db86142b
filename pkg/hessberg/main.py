"""Command-line driver: inspection commands and the verification suite."""
import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from . import __version__
from .basisgen import basis_elements, candidate_basis, random_perms, verify_basis, verify_generic_basis
from .errors import ArityError, CeilingExceededError, HessbergError, InclusionError, NotArtinianError, UnsupportedTypeError
from .hessfn import (
    HessFn,
    complex_dimension,
    covering_subfunctions,
    enumerate_all,
    enumerate_sub,
    flag,
    ideal_roots,
    is_subfunction,
    parse_hessfn,
    to_ideal,
    validate,
)
from .hessfn import to_json as hessfn_json
from .idealgen import generators, random_generic_coefficients
from .pdual import (
    covering_gysin,
    gysin_injective,
    pdual_class,
    quotient_for,
    verify_basis_extends_duals,
    verify_duals_independent,
)
from .polyring import degree, format_poly
from .quotient import (
    check_normal_form,
    cofactor_injectivity,
    hilbert_series,
    is_palindromic,
    is_poincare_duality_algebra,
    product_formula_series,
    root_product_series,
)
from .rootsystem import (
    LieType,
    build_root_table,
    covering_ok,
    exponents,
    height,
    root_poly,
    simple_roots,
    weyl_group_order,
)
from .rootsystem import to_json as table_json
from .settings import Settings

logger = logging.getLogger(__name__)

OUT_OF_SCOPE = "E6, E7, E8 and F4 presentations are not reproduced"

PASS, FAIL = "✅", "❌"


class UsageError(HessbergError, ValueError):
    """Command line does not name a valid target."""


@dataclass(frozen=True)
class SuiteConfig:
    seed: int
    perm_samples: int
    coeff_samples: int
    nf_samples: int


def _mark(ok: bool) -> str:
    return PASS if ok else FAIL


def _emit(report: Dict[str, Any], as_json: bool, lines: List[str]) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        print("\n".join(lines))


def _base_report(command: str, seed: int) -> Dict[str, Any]:
    return {"command": command, "version": __version__, "seed": seed}


def _check_ceiling(t: LieType, settings: Settings, override: bool) -> None:
    ceiling = settings.ceilings.get(t.family)
    if ceiling is not None and t.rank > ceiling and not override:
        raise CeilingExceededError(t.label, ceiling)


def resolve_type(args: argparse.Namespace) -> LieType:
    if args.h:
        return parse_hessfn(args.h, check=False).type
    if not args.type:
        raise UsageError("give --h or --type")
    if len(args.type) > 1:
        return LieType.parse(args.type)
    family = args.type.upper()
    if family == "G":
        return LieType("G", 3)
    if args.rank is None:
        raise UsageError(f"--type {family} needs --rank")
    return LieType(family, args.rank)


def resolve_h(args: argparse.Namespace) -> HessFn:
    if not args.h:
        raise UsageError("this command needs --h, e.g. --h 'D4:3,5,4,7'")
    return parse_hessfn(args.h)


# ---------------------------------------------------------------- commands


def cmd_roots(args, settings: Settings) -> int:
    t = resolve_type(args)
    table = build_root_table(t)
    ok = covering_ok(table)
    report = _base_report("roots", args.seed)
    report.update(table_json(table))
    report.update(
        {
            "label": t.label,
            "heights": {f"{r.row},{r.col}": height(r, table) for r in table.roots()},
            "simple_roots": [[r.row, r.col] for r in simple_roots(table)],
            "exponents": list(exponents(table)),
            "weyl_group_order": weyl_group_order(table),
            "covering_ok": ok,
        }
    )
    lines = [f"{t.label}: {len(table.roots())} positive roots, |W| = {report['weyl_group_order']}"]
    for chain in table.chains:
        for r in chain:
            lines.append(f"  alpha_{{{r.row},{r.col}}} = {format_poly(root_poly(r))}   (ht {height(r, table)})")
    lines.append(f"{_mark(ok)} chain coverings")
    _emit(report, args.json, lines)
    return 0 if ok else 1


def cmd_hess(args, settings: Settings) -> int:
    report = _base_report("hess", args.seed)
    if not args.h:
        t = resolve_type(args)
        _check_ceiling(t, settings, args.ceiling_override)
        funcs = enumerate_all(t)
        report.update({"type": t.family, "rank": t.rank, "count": len(funcs), "functions": [list(h.values) for h in funcs]})
        _emit(report, args.json, [f"{t.label}: {len(funcs)} Hessenberg functions"] + [f"  {h.label}  dim {complex_dimension(h)}" for h in funcs])
        return 0

    h = parse_hessfn(args.h, check=False)
    validity = validate(h)
    report.update({"hessfn": hessfn_json(h), "ok": validity.ok, "violations": list(validity.violations)})
    lines = [f"{_mark(validity.ok)} {h.label}" + ("" if validity.ok else f"  violates {', '.join(validity.violations)}")]
    if validity.ok:
        roots = ideal_roots(h)
        report["complex_dimension"] = complex_dimension(h)
        report["ideal"] = [[r.row, r.col] for r in roots]
        lines.append(f"  complex dimension {complex_dimension(h)}, ideal of {len(roots)} roots")
        if args.list_sub:
            subs = enumerate_sub(h)
            report["sub"] = [list(g.values) for g in subs]
            lines += [f"  {g.label}" for g in subs]
    _emit(report, args.json, lines)
    return 0 if validity.ok else 1


def cmd_ideal(args, settings: Settings) -> int:
    h = resolve_h(args)
    gens = generators(h.type, h)
    report = _base_report("ideal", args.seed)
    report.update({"hessfn": hessfn_json(h), "generators": [{"poly": format_poly(g), "degree": degree(g)} for g in gens.gens]})
    lines = [f"f_{{{i},{h(i)}}} = {format_poly(g)}   [deg {degree(g)}]" for i, g in enumerate(gens.gens, start=1)]
    _emit(report, args.json, lines)
    return 0


def cmd_hilbert(args, settings: Settings) -> int:
    h = resolve_h(args)
    qr = quotient_for(h)
    series = hilbert_series(qr)
    formula = product_formula_series(h)
    heights = root_product_series(to_ideal(h), build_root_table(h.type))
    match = series == formula == heights
    report = _base_report("hilbert", args.seed)
    report.update(
        {
            "hessfn": hessfn_json(h),
            "hilbert": series,
            "product_formula": formula,
            "root_height_series": heights,
            "match": match,
            "palindromic": is_palindromic(series),
            "dim": qr.dim,
        }
    )
    lines = [
        f"{h.label}: dim {qr.dim}",
        f"  hilbert          {series}",
        f"  product formula  {formula}",
        f"{_mark(match)} product formula   {_mark(is_palindromic(series))} palindromic",
    ]
    _emit(report, args.json, lines)
    return 0 if match else 1


def cmd_basis(args, settings: Settings) -> int:
    h = resolve_h(args)
    spec = None
    if args.perm_seed is not None:
        if h.type.family == "D":
            raise UsageError("type D bases take no permutations")
        spec = random_perms(h, np.random.default_rng([args.perm_seed, *h.values]))
    elements = candidate_basis(h, spec)
    result = verify_basis(quotient_for(h), elements)
    report = _base_report("basis", args.seed)
    report.update({"hessfn": hessfn_json(h), "count": result.count, "dim": result.dim, "rank": result.rank, "is_basis": result.is_basis})
    if spec is not None:
        report["perms"] = [list(p) for p in spec.perms]
    lines = [f"{_mark(result.is_basis)} {h.label}: count {result.count}, dim {result.dim}, rank {result.rank}"]
    if args.dump:
        dumped = []
        for el in elements:
            entry = {"m": list(el.m), "poly": format_poly(el.poly)}
            if el.trace is not None:
                entry["trace"] = {"steps": list(el.trace.steps), "sequence": [list(s) for s in el.trace.sequence], "terminal": el.trace.terminal}
            dumped.append(entry)
            lines.append(f"  m={el.m}  {entry['poly']}")
        report["elements"] = dumped
    _emit(report, args.json, lines)
    return 0 if result.is_basis else 1


def cmd_pdual(args, settings: Settings) -> int:
    h = resolve_h(args)
    result = verify_duals_independent(h)
    table = build_root_table(h.type)
    digests = dict(result.digests)
    classes = []
    lines = []
    for g in enumerate_sub(h):
        dual = pdual_class(h, g, table)
        classes.append({"h_sub": list(g.values), "degree": dual.degree, "scalar": str(dual.scalar), "coords_sha256": digests[g.label]})
        lines.append(f"  {g.label}  deg {dual.degree}  scalar {dual.scalar}  {digests[g.label]}")
    report = _base_report("pdual", args.seed)
    report.update({"hessfn": hessfn_json(h), "classes": classes, "count": result.count, "rank": result.rank, "independent": result.independent})
    lines.append(f"{_mark(result.independent)} {h.label}: {result.count} dual classes, rank {result.rank}")
    _emit(report, args.json, lines)
    return 0 if result.independent else 1


def cmd_gysin(args, settings: Settings) -> int:
    h = resolve_h(args)
    reports = [gysin_injective(parse_hessfn(args.sub), h)] if args.sub else covering_gysin(h)
    rows = [
        {
            "h_sub": list(r.h_sub.values),
            "source_dim": r.source_dim,
            "rank": r.rank,
            "injective": r.injective,
            "well_defined": r.well_defined,
            "degree_shift_ok": r.degree_shift_ok,
        }
        for r in reports
    ]
    ok = all(r.injective and r.well_defined and r.degree_shift_ok for r in reports)
    report = _base_report("gysin", args.seed)
    report.update({"hessfn": hessfn_json(h), "maps": rows, "ok": ok})
    lines = [f"{_mark(r.injective)} {r.h_sub.label} -> {h.label}: rank {r.rank} / {r.source_dim}" for r in reports]
    _emit(report, args.json, lines)
    return 0 if ok else 1


# ---------------------------------------------------------------- suite


def _guarded(errors: Dict[str, str], name: str, fn: Callable[[], bool]) -> bool:
    try:
        return bool(fn())
    except HessbergError as e:
        errors[name] = str(e)
        return False


def check_hessenberg_function(h: HessFn, config: SuiteConfig) -> Dict[str, Any]:
    """Every per-function check; module level so worker processes can pickle it."""
    rng = np.random.default_rng([config.seed, *h.values])
    errors: Dict[str, str] = {}
    try:
        qr = quotient_for(h)
    except HessbergError as e:
        return {"h": h.label, "values": list(h.values), "checks": {"quotient": False}, "errors": {"quotient": str(e)}}
    table = build_root_table(h.type)
    series = hilbert_series(qr)

    checks = {
        "hilbert": _guarded(errors, "hilbert", lambda: series == product_formula_series(h) == root_product_series(to_ideal(h), table)),
        "complete_intersection": qr.dim == qr.expected_dim,
        "palindromic": is_palindromic(series),
        "poincare_duality": _guarded(errors, "poincare_duality", lambda: is_poincare_duality_algebra(qr)),
        "normal_form": _guarded(errors, "normal_form", lambda: check_normal_form(qr, rng, config.nf_samples)),
        "basis": _guarded(errors, "basis", lambda: verify_basis(qr, candidate_basis(h)).is_basis),
    }
    if h.type.family != "D":
        checks["perm_basis"] = _guarded(
            errors,
            "perm_basis",
            lambda: all(verify_basis(qr, basis_elements(random_perms(h, rng))).is_basis for _ in range(config.perm_samples)),
        )
    checks["duals_independent"] = _guarded(errors, "duals_independent", lambda: verify_duals_independent(h, qr).independent)
    checks["basis_extends_duals"] = _guarded(errors, "basis_extends_duals", lambda: verify_basis_extends_duals(h, qr).ok)
    pairs = covering_subfunctions(h)
    checks["gysin"] = _guarded(
        errors,
        "gysin",
        lambda: all(r.injective and r.well_defined and r.degree_shift_ok for r in (gysin_injective(g, h) for g in pairs)),
    )
    return {
        "h": h.label,
        "values": list(h.values),
        "dim": qr.dim,
        "hilbert": series,
        "covering_pairs": len(pairs),
        "checks": checks,
        "errors": errors,
    }


def _collect(h: HessFn, compute: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
    """Result row for ``h``; a crashed check becomes a failed row instead of aborting the run."""
    try:
        return compute()
    except Exception as e:
        logger.exception("checks for %s crashed", h)
        return {"h": h.label, "values": list(h.values), "checks": {"worker": False}, "errors": {"worker": f"{type(e).__name__}: {e}"}}


def _generic_basis_check(t: LieType, config: SuiteConfig) -> Dict[str, Any]:
    rng = np.random.default_rng([config.seed, ord(t.family), t.rank])
    artinian = bases = 0
    for _ in range(config.coeff_samples):
        coeffs = random_generic_coefficients(t, rng)
        try:
            report = verify_generic_basis(t, coeffs, random_perms(flag(t), rng))
        except NotArtinianError:
            continue
        artinian += 1
        bases += report.is_basis
    return {"samples": config.coeff_samples, "artinian": artinian, "bases": bases, "ok": artinian > 0 and bases == artinian}


def _suite_checks(t: LieType, config: SuiteConfig) -> Dict[str, Dict[str, Any]]:
    out: Dict[str, Dict[str, Any]] = {}
    if t.family in ("A", "B"):
        out["generic_basis"] = _generic_basis_check(t, config)
    if t.family == "A" and t.rank >= 2:
        reports = [cofactor_injectivity(t.rank, m0) for m0 in range(t.rank - 1)]
        out["cofactor_injectivity"] = {
            "ranks": [[r.rank, r.source_dim] for r in reports],
            "ok": all(r.injective for r in reports),
        }
    return out


def run_suite(
    t: LieType,
    config: SuiteConfig,
    jobs: int = 1,
    ceiling: Optional[int] = None,
    progress: bool = False,
) -> Dict[str, Any]:
    """Run every check for every Hessenberg function of ``t``."""
    if ceiling is not None and t.rank > ceiling:
        raise CeilingExceededError(t.label, ceiling)
    funcs = enumerate_all(t)
    logger.info("suite %s: %d Hessenberg functions, %d jobs", t, len(funcs), jobs)
    bar = tqdm(total=len(funcs), desc=t.label, file=sys.stderr, disable=not progress)
    results = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [(h, pool.submit(check_hessenberg_function, h, config)) for h in funcs]
            for h, fut in futures:
                results.append(_collect(h, fut.result))
                bar.update(1)
    else:
        for h in funcs:
            results.append(_collect(h, partial(check_hessenberg_function, h, config)))
            bar.update(1)
    bar.close()
    results.sort(key=lambda r: r["values"])

    suite_checks = _suite_checks(t, config)
    failures = [{"h": r["h"], "check": name} for r in results for name, ok in sorted(r["checks"].items()) if not ok]
    failures += [{"h": "*", "check": name} for name, res in sorted(suite_checks.items()) if not res["ok"]]
    return {
        "version": __version__,
        "seed": config.seed,
        "type": t.family,
        "rank": t.rank,
        "label": t.label,
        "instances": results,
        "suite_checks": suite_checks,
        "failures": failures,
        "passed": not failures,
        "out_of_scope": OUT_OF_SCOPE,
    }


def cmd_suite(args, settings: Settings) -> int:
    t = resolve_type(args)
    ceiling = None if args.ceiling_override else settings.ceilings.get(t.family)
    config = SuiteConfig(args.seed, settings.perm_samples, settings.coeff_samples, settings.nf_samples)
    report = run_suite(t, config, jobs=args.jobs, ceiling=ceiling, progress=not args.json)
    report["command"] = "suite"
    lines = []
    for inst in report["instances"]:
        marks = "  ".join(f"{_mark(ok)} {name}" for name, ok in inst["checks"].items())
        lines.append(f"{inst['h']:<24} dim {inst.get('dim', '-'):>5}  {marks}")
    for name, res in report["suite_checks"].items():
        lines.append(f"{_mark(res['ok'])} {name}")
    lines.append(f"{_mark(report['passed'])} {t.label}: {len(report['instances'])} functions, {len(report['failures'])} failures")
    lines.append(f"({OUT_OF_SCOPE})")
    _emit(report, args.json, lines)
    return 0 if report["passed"] else 1


COMMANDS: Dict[str, Tuple[Callable[..., int], str]] = {
    "roots": (cmd_roots, "positive-root table, heights and Weyl group order"),
    "hess": (cmd_hess, "validate one Hessenberg function or list all of a type"),
    "ideal": (cmd_ideal, "defining-ideal generators"),
    "hilbert": (cmd_hilbert, "Hilbert series against the product formula"),
    "basis": (cmd_basis, "verify the candidate additive basis"),
    "pdual": (cmd_pdual, "linear independence of Poincare duals"),
    "gysin": (cmd_gysin, "injectivity of multiplication by beta"),
    "suite": (cmd_suite, "run every check for every Hessenberg function of a type"),
}


def _default_jobs(settings: Settings) -> int:
    env = os.environ.get("HESSBERG_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            logger.warning("ignoring HESSBERG_JOBS=%r", env)
    return settings.jobs


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--h", help="Hessenberg function, e.g. 'D4:3,5,4,7'")
    common.add_argument("--type", help="family letter (A/B/C/D/G) or Cartan label such as D4")
    common.add_argument("--rank", type=int, help="number of variables n (A: n for A_{n-1})")
    common.add_argument("--seed", type=int, default=settings.seed)
    common.add_argument("--jobs", type=int, default=_default_jobs(settings))
    common.add_argument("--json", action="store_true", default=settings.output == "json")
    common.add_argument("--dump", action="store_true", help="include every basis element")
    common.add_argument("--ceiling-override", action="store_true")
    common.add_argument("--perm-seed", type=int, help="random window permutations (types A/B/C/G2)")
    common.add_argument("--sub", help="source Hessenberg function for gysin")
    common.add_argument("--list-sub", action="store_true", help="list sub-Hessenberg functions")
    common.add_argument("--verbose", "-v", action="store_true")

    parser = argparse.ArgumentParser(prog="hessberg", description=__doc__)
    parser.add_argument("--version", action="version", version=f"hessberg {__version__}")
    parser.add_argument("--config", help="settings file (default $HESSBERG_CONFIG or ~/.hessberg/config.json)")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def _config_path(argv: List[str]) -> Optional[str]:
    for k, arg in enumerate(argv):
        if arg == "--config" and k + 1 < len(argv):
            return argv[k + 1]
        if arg.startswith("--config="):
            return arg.split("=", 1)[1]
    return None


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    settings = Settings(_config_path(argv))
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    args.jobs = max(1, args.jobs)
    handler = COMMANDS[args.command][0]

    try:
        if args.command != "suite":
            if (args.h or args.type) and args.command != "roots":
                _check_ceiling(resolve_type(args), settings, args.ceiling_override)
            if args.h and args.command != "hess":
                resolve_h(args)
            if args.sub:
                h_sub = parse_hessfn(args.sub)
                if args.h and not is_subfunction(h_sub, resolve_h(args)):
                    raise InclusionError(f"{h_sub.label} is not contained in {args.h}")
    except (HessbergError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    try:
        return handler(args, settings)
    except (UsageError, UnsupportedTypeError, CeilingExceededError, ArityError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except HessbergError as e:
        print(f"{FAIL} {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
