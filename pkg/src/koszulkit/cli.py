"""Batch front door: parse inputs, run checks, emit deterministic reports.

Subcommands:
  check        run a set of checks on a presentation (+ optional action)
  fixtures     write the built-in input files by name
  report-diff  compare two reports ignoring timing

Exit status of `check`: 0 all requested checks pass; 1 a validation-style
check failed; 2 parse or usage error; 3 an internal invariant was violated
(something a theorem guarantees failed -- an implementation bug, reported
with coordinates).

Reports are byte-deterministic for identical inputs: timing lives under a
separate top-level "timing" key that `report-diff` ignores.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time

from koszulkit import __version__
from koszulkit.exactlin import F1, Mat, Subspace
from koszulkit.graded import check_d_squared, hilbert, homology
from koszulkit.quadratic import (
    DualityPairing, QuadraticPresentation, euler_identity, grow,
    koszulity_check, quadratic_dual, right_koszul_complex,
    verify_psi_intertwiner,
)

CHECK_NAMES = ["validate", "hilbert", "dual", "koszul", "smash", "takiff",
               "duality", "roundtrip"]
SCHEMA = "koszulkit/1"
DEFAULT_SEED = 20230521


class UsageError(Exception):
    pass


class ParseFailure(Exception):
    pass


class InternalInvariant(Exception):
    pass


def _sha256(path):
    h = hashlib.sha256()
    with open(path, "rb") as f:
        h.update(f.read())
    return h.hexdigest()


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except (OSError, ValueError) as exc:
        raise ParseFailure("cannot read %s: %s" % (path, exc))


def _load_presentation(path):
    obj = _load_json(path)
    if isinstance(obj, dict) and "presentation" in obj:
        obj = obj["presentation"]
    try:
        return QuadraticPresentation.from_json_obj(obj)
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseFailure("bad presentation in %s: %s" % (path, exc))


def _load_action(path):
    from koszulkit.action import action_bundle_from_json
    obj = _load_json(path)
    try:
        return action_bundle_from_json(obj)
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseFailure("bad action bundle in %s: %s" % (path, exc))


def _default_modules(dim=1):
    return {"k": None}


# ---------------------------------------------------------------------------
# individual checks; each returns (status, details) with status in
# "pass" | "fail" | "skipped"; InternalInvariant aborts with exit 3

def _check_validate(pres, provider, modules):
    from koszulkit.action import (
        validate_action_multiplicative, validate_bialgebra, validate_jacobi,
        validate_left_modules, validate_lie, validate_module_algebra,
    )
    details = {"generators": pres.gen_names,
               "relation_count": pres.relations.dim}
    if provider is None:
        return "pass", details
    if provider.kind == "bialgebra":
        ok, axiom = validate_bialgebra(provider.base)
        details["acting_object"] = "bialgebra"
        if not ok:
            details["failure"] = "bialgebra axiom: %s" % axiom
            return "fail", details
    else:
        ok, where = validate_lie(provider.base)
        details["acting_object"] = "lie"
        if not ok:
            details["failure"] = "lie axiom: %r" % (where,)
            return "fail", details
    for r in (1, 2):
        ok, where = validate_action_multiplicative(provider, r)
        if not ok:
            details["failure"] = "action not multiplicative: %r" % (where,)
            return "fail", details
    ok, where = validate_module_algebra(provider, pres)
    if not ok:
        details["failure"] = "relations not stable: %r" % (where,)
        return "fail", details
    ok, where = validate_left_modules(provider, modules)
    if not ok:
        details["failure"] = "module law: %r" % (where,)
        return "fail", details
    details["modules"] = sorted(modules)
    return "pass", details


def _check_hilbert(alg, N):
    hs = alg.hdims()
    ks = alg.kdims()
    details = {"algebra_dims": [str(x) for x in hs],
               "koszul_subspace_dims": [str(x) for x in ks],
               "euler_identity": euler_identity(alg.pres, N)}
    return ("pass" if details["euler_identity"] else "fail"), details


def _check_dual(pres, alg, dual_alg, N):
    dd = quadratic_dual(quadratic_dual(pres))
    details = {
        "dual_dims": [str(x) for x in dual_alg.hdims()],
        "double_dual_recovers_relations": dd.relations == pres.relations,
        "dim_K_matches_dual": alg.kdims() == dual_alg.hdims(),
    }
    if not details["double_dual_recovers_relations"]:
        raise InternalInvariant("double dual lost the relation space")
    if not details["dim_K_matches_dual"]:
        raise InternalInvariant("Koszul subspace dims differ from the dual")
    return "pass", details


def _check_koszul(pres, alg, N):
    res = koszulity_check(pres, N, alg)
    cx = right_koszul_complex(alg)
    ok, where = check_d_squared(cx)
    if not ok:
        raise InternalInvariant("Koszul complex d^2 != 0 at %r" % (where,))
    details = {
        "per_degree": {str(d): v for d, v in res["per_degree"].items()},
        "koszul_up_to_N": res["koszul_up_to_N"],
        "first_failure": res["first_failure"],
        "verdict": ("Koszul up to %d" % N) if res["koszul_up_to_N"]
        else ("not Koszul at degree %s" % res["first_failure"]),
    }
    return "pass", details


def _check_smash(provider, alg, dual_alg):
    from koszulkit.action import dual_action, smash
    details = {}
    try:
        s = smash(provider, alg, "right")
    except ValueError as exc:
        return "fail", {"failure": str(exc)}
    ok, where = s.validate_associativity()
    details["right_smash_associative"] = ok
    if not ok:
        details["failure"] = "associativity at %r" % (where,)
        return "fail", details
    try:
        s2 = smash(dual_action(provider), dual_alg, "left")
    except ValueError as exc:
        return "fail", {"failure": "dual side: %s" % exc}
    ok, where = s2.validate_associativity()
    details["dual_smash_associative"] = ok
    if not ok:
        details["failure"] = "dual associativity at %r" % (where,)
        return "fail", details
    return "pass", details


def _check_takiff(provider):
    from koszulkit.action import takiff, takiff_graded_dims, validate_jacobi
    if provider is None or provider.kind != "lie":
        return "skipped", {"reason": "takiff applies to lie actions only"}
    details = {}
    for parity in ("even", "super"):
        t = takiff(provider.base, parity)
        ok, where = validate_jacobi(t)
        details["%s_jacobi" % parity] = ok
        if not ok:
            details["failure"] = "%s jacobi at %r" % (parity, where)
            return "fail", details
        pbw, grown = takiff_graded_dims(t, 3)
        details["%s_graded_dims" % parity] = grown
        if pbw != grown:
            details["failure"] = "%s graded dims %r != %r" % (parity, pbw,
                                                              grown)
            return "fail", details
    return "pass", details


def _modules_for(provider, modules, n):
    from koszulkit.action import ActionProvider
    from koszulkit.fixtures import trivial_provider
    if provider is None:
        return trivial_provider(n), {"k": [Mat.identity(1)]}
    return provider, modules


def _check_duality(provider, modules, alg, dual_alg, N):
    from koszulkit.duality import (
        degree_zero_module, diagonal_vanishing, identify_socI, identify_topP,
        koszulity_via_duality, socI_model_module, validate_module,
    )
    pairing = DualityPairing(alg, dual_alg)
    provider, modules = _modules_for(provider, modules, alg.n)
    details = {"modules": {}}
    status = "pass"
    for name in sorted(modules):
        mats = modules[name]
        X = degree_zero_module(provider, alg, mats)
        ok, where = validate_module(X)
        if not ok:
            details["modules"][name] = {"failure": "module: %r" % (where,)}
            status = "fail"
            continue
        res = koszulity_via_duality(provider, pairing, mats, N)
        entry = {
            "per_degree_injective":
                {str(k): v for k, v in res["per_degree_injective"].items()},
            "per_degree_projective":
                {str(k): v for k, v in res["per_degree_projective"].items()},
            "per_degree_koszul_complex":
                {str(k): v
                 for k, v in res["per_degree_koszul_complex"].items()},
            "h0_isomorphic_to_module": res["h0_injective"]
            and res["h0_projective"],
            "assumptions": res["assumptions"],
        }
        if not res["agree"]:
            raise InternalInvariant(
                "duality verdicts disagree for module %r: %r" % (name, res))
        soc = identify_socI(X, pairing, N)
        entry["socle_identification"] = soc["ok"]
        Y = socI_model_module(provider, pairing, mats, N)
        top = identify_topP(Y, pairing, N)
        entry["top_identification"] = top["ok"]
        if not (soc["ok"] and top["ok"]):
            raise InternalInvariant(
                "identification failed for module %r at %r" %
                (name, soc["first_failure"] or top["first_failure"]))
        entry["verdict"] = res["verdict"]
        details["modules"][name] = entry
        if not res["verdict"]:
            # not-Koszul is data, not a failure; disagreement was fatal above
            entry["note"] = "algebra not Koszul up to requested degree"
    return status, details


def _check_roundtrip(provider, modules, alg, dual_alg, N):
    from koszulkit.duality import roundtrip_A, roundtrip_B
    pairing = DualityPairing(alg, dual_alg)
    provider, modules = _modules_for(provider, modules, alg.n)
    ok_psi, where = verify_psi_intertwiner(pairing, min(N, 4))
    if not ok_psi:
        raise InternalInvariant("pairing intertwiner fails at %r" % (where,))
    details = {"modules": {}}
    for name in sorted(modules):
        mats = modules[name]
        ra = roundtrip_A(provider, pairing, mats, N)
        rb = roundtrip_B(provider, pairing, mats, N)
        details["modules"][name] = {
            "injective_side": ra["checks"], "cells_A": ra["cells"],
            "projective_side": rb["checks"], "cells_B": rb["cells"],
            "sign_convention": rb["sign_convention"],
        }
        if not ra["ok"]:
            raise InternalInvariant(
                "round trip A failed for %r at %r" % (name,
                                                      ra["first_failure"]))
        if not rb["ok"]:
            raise InternalInvariant(
                "round trip B failed for %r at %r" % (name,
                                                      rb["first_failure"]))
    return "pass", details


# ---------------------------------------------------------------------------
# seeded random property cases

def _random_presentation(rng):
    n = rng.choice([1, 1, 2, 2, 2, 3])
    names = ["x%d" % (i + 1) for i in range(n)]
    m = rng.randrange(0, n * n + 1)
    rows = []
    for _ in range(m):
        rows.append([F1 * rng.randrange(-2, 3) for _ in range(n * n)])
    return QuadraticPresentation(names, Subspace.from_rows(n * n, rows))


def property_cases_report(seed, count):
    """Seeded random property sweep: random small presentations, grown
    exactly; every complex built must satisfy d^2 = 0, the Euler identity,
    and (on a subsample) the duality-side equivariance.  The returned
    object is deterministic for a fixed seed."""
    from koszulkit.duality import (
        I_complex, degree_zero_module, validate_complex_equivariance,
    )
    from koszulkit.fixtures import trivial_provider
    rng = random.Random(seed)
    stats = {"cases": 0, "d_squared_ok": 0, "euler_ok": 0,
             "equivariance_checked": 0, "koszul_count": 0}
    failures = []
    for case in range(count):
        pres = _random_presentation(rng)
        N = 3
        alg = grow(pres, N)
        cx = right_koszul_complex(alg)
        ok, where = check_d_squared(cx)
        stats["cases"] += 1
        if ok:
            stats["d_squared_ok"] += 1
        else:
            failures.append({"case": case, "kind": "d_squared",
                             "at": list(where)})
        if euler_identity(pres, N):
            stats["euler_ok"] += 1
        else:
            failures.append({"case": case, "kind": "euler"})
        if koszulity_check(pres, N, alg)["koszul_up_to_N"]:
            stats["koszul_count"] += 1
        if case % 10 == 0:
            provider = trivial_provider(alg.n)
            X = degree_zero_module(provider, alg, [Mat.identity(1)])
            icx = I_complex(X, min(N, 2))
            ok2, where2 = validate_complex_equivariance(icx)
            stats["equivariance_checked"] += 1
            if not ok2:
                failures.append({"case": case, "kind": "equivariance",
                                 "at": list(where2)})
    return {"schema": SCHEMA, "seed": seed, "stats": stats,
            "failures": failures,
            "ok": not failures and stats["d_squared_ok"] == stats["cases"]}


# ---------------------------------------------------------------------------
# subcommands

def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items() if k != "timing"}
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


def run_check(args):
    requested = [c.strip() for c in args.checks.split(",") if c.strip()]
    if not requested:
        raise UsageError("empty checks set")
    if "all" in requested:
        requested = list(CHECK_NAMES)
    unknown = [c for c in requested if c not in CHECK_NAMES]
    if unknown:
        raise UsageError("unknown checks: %s" % ", ".join(unknown))
    if args.max_degree < 0:
        raise UsageError("--max-degree must be >= 0")
    # dependency order
    order = [c for c in CHECK_NAMES if c in requested]
    pres = _load_presentation(args.input)
    provider, modules = (None, {})
    if args.action:
        provider, modules = _load_action(args.action)
        if args.module:
            if args.module not in modules:
                raise ParseFailure("module %r not in action bundle"
                                   % args.module)
            modules = {args.module: modules[args.module]}
    elif args.module:
        raise UsageError("--module requires --action")
    N = args.max_degree
    report = {
        "schema": SCHEMA,
        "tool": {"name": "koszulkit", "version": __version__},
        "inputs": {
            "presentation": {"path": os.path.basename(args.input),
                             "sha256": _sha256(args.input)},
            "action": ({"path": os.path.basename(args.action),
                        "sha256": _sha256(args.action)}
                       if args.action else None),
            "max_degree": N,
            "checks": order,
            "seed": args.seed,
        },
        "checks": {},
    }
    timing = {}
    alg = dual_alg = None

    def need_alg():
        nonlocal alg, dual_alg
        if alg is None:
            alg = grow(pres, N)
            dual_alg = grow(quadratic_dual(pres), N)
        return alg, dual_alg

    overall = "pass"
    for name in order:
        t0 = time.monotonic()
        try:
            if name == "validate":
                status, details = _check_validate(pres, provider, modules)
            elif name == "hilbert":
                status, details = _check_hilbert(need_alg()[0], N)
            elif name == "dual":
                a, d = need_alg()
                status, details = _check_dual(pres, a, d, N)
            elif name == "koszul":
                status, details = _check_koszul(pres, need_alg()[0], N)
            elif name == "smash":
                if provider is None:
                    status, details = "skipped", {"reason": "no action given"}
                else:
                    a, d = need_alg()
                    status, details = _check_smash(provider, a, d)
            elif name == "takiff":
                status, details = _check_takiff(provider)
            elif name == "duality":
                a, d = need_alg()
                status, details = _check_duality(provider, modules, a, d, N)
            elif name == "roundtrip":
                a, d = need_alg()
                status, details = _check_roundtrip(provider, modules, a, d, N)
        except InternalInvariant as exc:
            report["checks"][name] = {"status": "internal-error",
                                      "details": {"failure": str(exc)}}
            report["verdict"] = "internal-error"
            report["timing"] = timing
            return report, 3
        timing[name] = round(time.monotonic() - t0, 6)
        report["checks"][name] = {"status": status, "details": details}
        if status == "fail":
            overall = "fail"
    if args.property_cases:
        t0 = time.monotonic()
        prop = property_cases_report(args.seed, args.property_cases)
        timing["property"] = round(time.monotonic() - t0, 6)
        report["checks"]["property"] = {
            "status": "pass" if prop["ok"] else "fail",
            "details": {k: prop[k] for k in ("seed", "stats", "failures")}}
        if not prop["ok"]:
            overall = "fail"
    report["verdict"] = overall
    report["timing"] = timing
    return report, (0 if overall == "pass" else 1)


def run_fixtures(args):
    from koszulkit.fixtures import FIXTURE_NAMES, fixture_bundle
    if args.list:
        for name in FIXTURE_NAMES:
            print(name)
        return 0
    if not args.name:
        raise UsageError("fixtures requires --name or --list")
    try:
        bundle = fixture_bundle(args.name)
    except KeyError as exc:
        raise UsageError(str(exc))
    outdir = args.out_dir or "."
    os.makedirs(outdir, exist_ok=True)
    written = []
    ppath = os.path.join(outdir, "%s.presentation.json" % args.name)
    with open(ppath, "w", encoding="utf-8") as f:
        json.dump(bundle["presentation"], f, indent=2, sort_keys=True)
        f.write("\n")
    written.append(ppath)
    if bundle["action"] is not None:
        apath = os.path.join(outdir, "%s.action.json" % args.name)
        with open(apath, "w", encoding="utf-8") as f:
            json.dump(bundle["action"], f, indent=2, sort_keys=True)
            f.write("\n")
        written.append(apath)
    for path in written:
        print(path)
    return 0


def run_report_diff(args):
    a = _strip_timing(_load_json(args.report_a))
    b = _strip_timing(_load_json(args.report_b))
    if a == b:
        print("reports identical (timing ignored)")
        return 0
    def walk(pa, pb, prefix):
        diffs = []
        if isinstance(pa, dict) and isinstance(pb, dict):
            for k in sorted(set(pa) | set(pb)):
                if k not in pa:
                    diffs.append("%s.%s: only in second" % (prefix, k))
                elif k not in pb:
                    diffs.append("%s.%s: only in first" % (prefix, k))
                elif pa[k] != pb[k]:
                    diffs.extend(walk(pa[k], pb[k], "%s.%s" % (prefix, k)))
            return diffs
        return ["%s: %r != %r" % (prefix, pa, pb)]
    for line in walk(a, b, "$")[:50]:
        print(line)
    return 1


def _print_summary(report):
    for name, entry in report["checks"].items():
        line = "%-10s %s" % (name, entry["status"])
        det = entry.get("details", {})
        if "verdict" in det:
            line += "  (%s)" % det["verdict"]
        if "failure" in det:
            line += "  (%s)" % det["failure"]
        print(line)
    print("verdict: %s" % report["verdict"])


def build_parser():
    p = argparse.ArgumentParser(prog="koszulkit", description=__doc__)
    sub = p.add_subparsers(dest="command")
    pc = sub.add_parser("check", help="run checks on an input presentation")
    pc.add_argument("--input", required=True,
                    help="presentation JSON (or bundle with a presentation)")
    pc.add_argument("--action", help="action bundle JSON")
    pc.add_argument("--module",
                    help="restrict duality/roundtrip checks to one module")
    pc.add_argument("--max-degree", type=int, default=4)
    pc.add_argument("--checks", default="all",
                    help="comma list of %s or all" % ",".join(CHECK_NAMES))
    pc.add_argument("--out", help="write the JSON report here")
    pc.add_argument("--seed", type=int, default=DEFAULT_SEED)
    pc.add_argument("--property-cases", type=int, default=0,
                    help="additionally run this many seeded random cases")
    pc.add_argument("--jobs", type=int, default=1,
                    help="accepted for interface stability; single process")
    pf = sub.add_parser("fixtures", help="emit built-in input files")
    pf.add_argument("--name")
    pf.add_argument("--out-dir")
    pf.add_argument("--list", action="store_true")
    pd = sub.add_parser("report-diff",
                        help="compare two reports ignoring timing")
    pd.add_argument("report_a")
    pd.add_argument("report_b")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            report, code = run_check(args)
            text = json.dumps(report, indent=2, sort_keys=True)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as f:
                    f.write(text)
                    f.write("\n")
            _print_summary(report)
            return code
        if args.command == "fixtures":
            return run_fixtures(args)
        if args.command == "report-diff":
            return run_report_diff(args)
        parser.print_usage()
        return 2
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2
    except ParseFailure as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
