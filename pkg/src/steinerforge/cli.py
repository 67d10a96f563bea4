"""Command-line interface.

Subcommands
-----------
build    construct a code and write it to disk
weights  compute a weight distribution (enumeration, closed form, or transform)
design   extract fixed-weight supports and certify them as a t-design
check    run certifications: --klp, --affine, --am (combinable)

Exit codes: 0 success / certification held, 1 usage error, 2 infeasible
request (size caps), 3 certification or consistency failure.

Code selection is shared across subcommands: -m and -E pick the cyclic
base code; --extended appends the parity coordinate, then --dual dualises.
Thread counts come from --threads or the STEINERFORGE_THREADS variable.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from math import gcd

from . import __version__
from .affine import certify_invariance
from .am import assmus_mattson
from .codes import LinearCode, build_cyclic, dual, extend, save_code
from .cyclotomic import defining_set_for, klp_affine_invariant
from .designs import (
    certify,
    design_from_code,
    save_blocks,
    save_certificate,
    steiner_check,
)
from .errors import CertificationError, ConsistencyError, InfeasibleError
from .gf2 import GF2m
from .kernels import BRUTE_DIM_CAP, resolve_threads
from .weights import (
    WeightDistribution,
    brute_weight_distribution,
    closed_form_dual_wd,
    extended_primal_wd_closed_form,
    macwilliams_transform,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_CERTIFICATION = 3

RUN_FORMAT = "steinerforge-run-v1"


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; remap to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_cosets(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(sorted({int(p) for p in text.split(",") if p.strip() != ""}))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad coset list {text!r}; use e.g. 1,2")
    if not vals:
        raise argparse.ArgumentTypeError("coset list must be nonempty")
    return vals


def _add_code_args(sub: argparse.ArgumentParser, *, need_E: bool = True):
    sub.add_argument("-m", type=int, required=True, help="field degree m (n = 2^m - 1)")
    sub.add_argument(
        "-E", "--cosets", dest="E", type=_parse_cosets, required=need_E,
        help="comma-separated exponent set, e.g. 2 or 1,2 (cosets of 1 + 2^e)",
    )
    sub.add_argument("--modulus", type=int, default=None, help="override field modulus")
    sub.add_argument("--extended", action="store_true", help="append the parity coordinate")
    sub.add_argument("--dual", action="store_true", help="take the dual (after --extended)")


def _make_code(args) -> tuple[GF2m, LinearCode]:
    field = GF2m(args.m, modulus=args.modulus)
    code = build_cyclic(field, args.E)
    if args.extended:
        code = extend(code)
    if args.dual:
        code = dual(code)
    return field, code


def _sha256_file(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _write_manifest(path: str | None, command: str, params: dict, results: dict,
                    outputs: list[str]) -> None:
    if path is None:
        return
    payload = {
        "format": RUN_FORMAT,
        "version": __version__,
        "command": command,
        "params": params,
        "results": results,
        "outputs": {os.path.basename(p): _sha256_file(p) for p in outputs},
    }
    with open(path, "w") as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write("\n")


def _code_params(args) -> dict:
    return {
        "m": args.m,
        "E": list(args.E) if getattr(args, "E", None) else None,
        "extended": bool(getattr(args, "extended", False)),
        "dual": bool(getattr(args, "dual", False)),
        "modulus": getattr(args, "modulus", None),
    }


# ---------------------------------------------------------------------------
# subcommands


def _cmd_build(args) -> int:
    _, code = _make_code(args)
    outputs: list[str] = []
    if args.out:
        json_path, blob_path = save_code(code, args.out)
        outputs = [json_path, blob_path]
        where = f" -> {json_path}, {blob_path}"
    else:
        where = ""
    print(
        f"[OK] built [{code.length}, {code.dimension}] code "
        f"(role={code.provenance.role}){where}"
    )
    _write_manifest(
        args.manifest, "build", _code_params(args),
        {"length": code.length, "dimension": code.dimension,
         "role": code.provenance.role, "gen_poly": code.gen_poly},
        outputs,
    )
    return EXIT_OK


def _auto_weights(args, code: LinearCode, threads: int) -> tuple[WeightDistribution, str]:
    single_e = len(args.E) == 1
    closed_ok = single_e and args.dual
    closed_primal_ok = (
        single_e and args.extended and not args.dual
        and args.m % 4 == 2 and args.m >= 6
        and gcd(args.m, args.E[0]) == 2
    )
    if args.method == "brute":
        return brute_weight_distribution(code, threads=threads), "brute"
    if args.method == "closed":
        if closed_ok:
            return closed_form_dual_wd(args.m, args.E[0], extended=args.extended), "closed"
        if closed_primal_ok:
            return extended_primal_wd_closed_form(args.m), "closed"
        raise ValueError(
            "no closed form for this selection (need --dual with a single "
            "exponent, or --extended with gcd(m, e) = 2 and m = 2 mod 4)"
        )
    if args.method == "macwilliams":
        dual_code = dual(code)
        if dual_code.dimension > BRUTE_DIM_CAP:
            raise InfeasibleError(
                f"dual dimension {dual_code.dimension} exceeds the enumeration cap"
            )
        dwd = brute_weight_distribution(dual_code, threads=threads)
        return macwilliams_transform(dwd, dual_code.dimension), "macwilliams"
    # auto
    if code.dimension <= BRUTE_DIM_CAP:
        return brute_weight_distribution(code, threads=threads), "brute"
    if closed_ok:
        return closed_form_dual_wd(args.m, args.E[0], extended=args.extended), "closed"
    if closed_primal_ok:
        return extended_primal_wd_closed_form(args.m), "closed"
    if code.length - code.dimension <= BRUTE_DIM_CAP:
        dual_code = dual(code)
        dwd = brute_weight_distribution(dual_code, threads=threads)
        return macwilliams_transform(dwd, dual_code.dimension), "macwilliams"
    raise InfeasibleError(
        "no feasible route: both dimensions exceed the enumeration cap and "
        "no closed form applies"
    )


def _cmd_weights(args) -> int:
    threads = resolve_threads(args.threads)
    _, code = _make_code(args)
    wd, method = _auto_weights(args, code, threads)
    if wd.length != code.length:
        raise ConsistencyError("weight distribution length mismatch")
    nz = wd.nonzero()
    print(f"[OK] weight distribution via {method}: [{code.length}, {code.dimension}]")
    for w in sorted(nz):
        print(f"  A_{w} = {nz[w]}")
    outputs = []
    if args.out:
        with open(args.out, "w") as f:
            json.dump(wd.to_json_dict(), f, indent=2, sort_keys=True)
            f.write("\n")
        outputs.append(args.out)
    _write_manifest(
        args.manifest, "weights",
        {**_code_params(args), "method": args.method},
        {"method_used": method, "nonzero": {str(k): str(v) for k, v in nz.items()}},
        outputs,
    )
    return EXIT_OK


def _cmd_design(args) -> int:
    threads = resolve_threads(args.threads)
    _, code = _make_code(args)
    design = design_from_code(code, args.weight, mode=args.mode, threads=threads)
    cert = certify(design, args.t, threads=threads)
    steiner = steiner_check(design)
    tag = " (Steiner system)" if steiner else ""
    print(
        f"[OK] weight-{args.weight} supports form a {cert.t}-design: "
        f"lambda={cert.lam}, b={cert.b}, v={design.v}{tag}"
    )
    outputs = []
    if args.blocks_out:
        save_blocks(design, args.blocks_out, source=f"m={args.m},E={list(args.E)}")
        outputs.append(args.blocks_out)
    if args.certificate_out:
        save_certificate(design, args.certificate_out)
        outputs.append(args.certificate_out)
    _write_manifest(
        args.manifest, "design",
        {**_code_params(args), "weight": args.weight, "t": args.t, "mode": args.mode},
        {"lambda": cert.lam, "b": cert.b, "steiner": steiner},
        outputs,
    )
    return EXIT_OK


def _cmd_check(args) -> int:
    if not (args.klp or args.affine or args.am):
        raise ValueError("pick at least one of --klp, --affine, --am")
    threads = resolve_threads(args.threads)
    results: dict = {}
    failed = False

    if args.klp:
        ds = defining_set_for(args.m, args.E, extended=True)
        holds, witness = klp_affine_invariant(ds)
        results["klp"] = {"holds": holds, "witness": list(witness) if witness else None}
        if holds:
            print("[OK] KLP criterion holds: extended defining set is closed downward")
        else:
            print(f"[FAIL] KLP criterion: witness pair {witness}")
            failed = True

    if args.affine or args.am:
        field = GF2m(args.m, modulus=args.modulus)

    if args.affine:
        code = extend(build_cyclic(field, args.E))
        report = certify_invariance(
            field, code, mode=args.group_mode, samples=args.samples, seed=args.seed
        )
        results["affine"] = {
            "holds": report.ok, "checked": report.checked,
            "group_order": report.group_order, "mode": report.mode,
        }
        if report.ok:
            print(
                f"[OK] affine invariance: {report.checked} maps checked "
                f"({report.mode}; group order {report.group_order})"
            )
        else:
            w = report.witness
            print(f"[FAIL] affine invariance: map y -> {w.a}*y + {w.b} breaks the code")
            failed = True

    if args.am:
        code = build_cyclic(field, args.E)
        if args.extended:
            code = extend(code)
        if args.dual:
            code = dual(code)
        wd, _ = _auto_weights(args, code, threads)
        dcode = dual(code)
        if dcode.dimension <= BRUTE_DIM_CAP:
            dwd = brute_weight_distribution(dcode, threads=threads)
        else:
            dwd = macwilliams_transform(wd, code.dimension)
        report = assmus_mattson(wd, dwd, args.t)
        results["am"] = report.to_json_dict()
        if report.holds:
            pairs = ", ".join(
                f"w={k} (lambda={lam})"
                for k, lam in zip(report.design_weights, report.design_lambdas)
            )
            print(
                f"[OK] Assmus-Mattson holds at t={report.t}: s={report.s} <= "
                f"d-t={report.d - report.t}; design weights: {pairs or 'none'}"
            )
        else:
            print(
                f"[FAIL] Assmus-Mattson at t={report.t}: s={report.s} > "
                f"d-t={report.d - report.t}"
            )
            failed = True

    _write_manifest(
        args.manifest, "check",
        {**_code_params(args),
         "klp": args.klp, "affine": args.affine, "am": args.am, "t": args.t},
        results, [],
    )
    if failed:
        raise CertificationError("one or more checks failed")
    return EXIT_OK


# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="steinerforge", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version",
                        version=f"steinerforge {__version__}")
    subs = parser.add_subparsers(dest="cmd")

    p_build = subs.add_parser("build", help="construct a code and write it to disk")
    _add_code_args(p_build)
    p_build.add_argument("--out", help="output path prefix (.json/.bits)")
    p_build.add_argument("--manifest", help="write a run manifest JSON here")
    p_build.set_defaults(func=_cmd_build)

    p_weights = subs.add_parser("weights", help="compute a weight distribution")
    _add_code_args(p_weights)
    p_weights.add_argument(
        "--method", choices=["auto", "brute", "closed", "macwilliams"],
        default="auto",
    )
    p_weights.add_argument("--out", help="write the distribution JSON here")
    p_weights.add_argument("--threads", type=int, default=None)
    p_weights.add_argument("--manifest", help="write a run manifest JSON here")
    p_weights.set_defaults(func=_cmd_weights)

    p_design = subs.add_parser("design", help="extract and certify a design")
    _add_code_args(p_design)
    p_design.add_argument("-w", "--weight", type=int, required=True,
                          help="codeword weight whose supports form the blocks")
    p_design.add_argument("-t", type=int, default=2, help="design strength to certify")
    p_design.add_argument("--mode", choices=["auto", "exhaustive", "mitm"],
                          default="auto")
    p_design.add_argument("--blocks-out", help="write the block list here")
    p_design.add_argument("--certificate-out", help="write the certificate JSON here")
    p_design.add_argument("--threads", type=int, default=None)
    p_design.add_argument("--manifest", help="write a run manifest JSON here")
    p_design.set_defaults(func=_cmd_design)

    p_check = subs.add_parser("check", help="run certifications")
    _add_code_args(p_check)
    p_check.add_argument("--klp", action="store_true",
                         help="downward-closure criterion on the extended defining set")
    p_check.add_argument("--affine", action="store_true",
                         help="certify invariance of the extended code under AGL(1, 2^m)")
    p_check.add_argument("--am", action="store_true",
                         help="evaluate the Assmus-Mattson criterion")
    p_check.add_argument("-t", type=int, default=2, help="strength for --am")
    p_check.add_argument("--group-mode", choices=["full", "sample"], default="full")
    p_check.add_argument("--samples", type=int, default=1000)
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--method", choices=["auto", "brute", "closed", "macwilliams"],
                         default="auto", help="weight-distribution route for --am")
    p_check.add_argument("--threads", type=int, default=None)
    p_check.add_argument("--manifest", help="write a run manifest JSON here")
    p_check.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "cmd", None):
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except InfeasibleError as exc:
        sys.stdout.flush()
        print(f"error: infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (CertificationError, ConsistencyError) as exc:
        sys.stdout.flush()
        print(f"error: certification failed: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATION
    except ValueError as exc:
        sys.stdout.flush()
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
