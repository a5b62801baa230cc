"""Command-line front end. Every command writes newline-delimited JSON records
(or plain text lines with ``--format text``) in a deterministic order.

Exit codes: 0 success, 1 verification mismatch, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext

from .combinatorics import (
    InfiniteGTPattern,
    enumerate_infinite_patterns,
    enumerate_patterns,
    enumerate_tableaux,
    highest_weight,
    padded,
    pattern_weight,
    weyl_dimension,
)
from .errors import GTError, NotHomogeneous, StabilityViolation, ValidationError, ZeroVector
from .linalg import EchelonBasis
from .operators import gt_basis, gt_basis_vector, spectral_check
from .tower import fundamental_basis, stability_check, stable_basis_vector
from .weyl_module import ModuleVector, highest_weight_vector, weight_of

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def parse_weight(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise ValidationError(f"weight {text!r} is not a comma-separated list of integers") from None
    return highest_weight(parts)


class _Out:
    def __init__(self, stream, fmt: str):
        self.stream, self.fmt = stream, fmt

    def record(self, data: dict, text: str) -> None:
        if self.fmt == "json":
            self.stream.write(json.dumps(data, separators=(",", ":")) + "\n")
        else:
            self.stream.write(text + "\n")


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("GT_THREADS", "1")))
    except ValueError:
        return 1


def cmd_dim(args, out: _Out) -> int:
    dim = weyl_dimension(args.weight, args.rank)
    count = len(enumerate_patterns(args.weight, args.rank))
    out.record(
        {"weight": list(args.weight), "n": args.rank, "dimension": dim, "patterns": count},
        str(dim) if dim == count else f"{dim} (but {count} patterns)",
    )
    return EXIT_OK if dim == count else EXIT_MISMATCH


def cmd_patterns(args, out: _Out) -> int:
    if args.max_degree is not None:
        for p in enumerate_infinite_patterns(args.weight, args.max_degree):
            out.record(p.to_dict(), f"deg {p.degree}: {p.triangle}")
        return EXIT_OK
    for p in enumerate_patterns(args.weight, args.rank):
        out.record(p.to_dict(), str(p))
    return EXIT_OK


def cmd_tableaux(args, out: _Out) -> int:
    for t in enumerate_tableaux(args.weight, args.rank):
        out.record(t.to_dict(), " | ".join(" ".join(map(str, r)) for r in t.rows))
    return EXIT_OK


def cmd_basis(args, out: _Out) -> int:
    for p, v in gt_basis(args.weight, args.rank):
        out.record({"pattern": p.to_dict(), "vector": v.to_dict()}, f"{p} -> {v!r}")
    return EXIT_OK


def cmd_spectrum(args, out: _Out) -> int:
    reports = _spectral_reports(
        [(p, m, None) for p in enumerate_patterns(args.weight, args.rank) for m in range(1, args.rank + 1)]
    )
    for r in reports:
        out.record(r.to_dict(), f"{r.pattern} m={r.m} {r.expected} {r.status}")
    return EXIT_OK if all(reports) else EXIT_MISMATCH


def _spectral_job(job):
    pattern, m, vector = job
    return spectral_check(pattern, m, vector)


def _spectral_reports(jobs):
    threads = _threads()
    if threads == 1 or len(jobs) < 2:
        return [_spectral_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_spectral_job, jobs, chunksize=8))


def perturb(vector: ModuleVector, weight, n: int) -> ModuleVector:
    """Break a basis vector on purpose.

    Adds the highest weight monomial, which changes the weight unless the
    vector is v_lambda itself; a 1-dimensional module gets its only vector zeroed.
    """
    top = highest_weight_vector(weight, n)
    if weyl_dimension(weight, n) == 1:
        return vector * 0
    if vector == top:
        raise ValueError("the highest weight vector cannot be perturbed by itself")
    return vector + top


def verify(weight, n: int, perturbed: bool = False) -> dict:
    """Run the full property suite on one module and summarize it."""
    patterns = enumerate_patterns(weight, n)
    dim = weyl_dimension(weight, n)
    tableaux = len(enumerate_tableaux(weight, n))
    vectors = [gt_basis_vector(p) for p in patterns]
    if perturbed:
        vectors[0] = perturb(vectors[0], weight, n)

    reports = _spectral_reports([(p, m, v) for p, v in zip(patterns, vectors) for m in range(1, n + 1)])
    mismatches = [r for r in reports if not r]

    weight_failures = 0
    for p, v in zip(patterns, vectors):
        try:
            if weight_of(v) != pattern_weight(p):
                weight_failures += 1
        except (NotHomogeneous, ZeroVector):
            weight_failures += 1

    basis = EchelonBasis()
    for v in vectors:
        basis.add(v.terms)

    stability_failures = 0
    for p in patterns:
        try:
            stability_check(InfiniteGTPattern.from_pattern(p), n + 1)
        except StabilityViolation:
            stability_failures += 1

    ok = (
        len(patterns) == dim == tableaux
        and not mismatches
        and not weight_failures
        and basis.rank == dim
        and not stability_failures
    )
    summary = f"{len(patterns)} patterns, {len(reports)} spectral checks, " + (
        "all match" if not mismatches else f"{len(mismatches)} mismatches"
    )
    if weight_failures:
        summary += f", {weight_failures} weight failures"
    if basis.rank != dim:
        summary += f", rank {basis.rank} of {dim}"
    if stability_failures:
        summary += f", {stability_failures} stability failures"
    return {
        "weight": list(weight),
        "n": n,
        "dimension": dim,
        "patterns": len(patterns),
        "tableaux": tableaux,
        "spectral_checks": len(reports),
        "spectral_mismatches": [r.to_dict() for r in mismatches],
        "weight_failures": weight_failures,
        "rank": basis.rank,
        "stability_failures": stability_failures,
        "status": "pass" if ok else "fail",
        "summary": summary,
    }


def cmd_verify(args, out: _Out) -> int:
    report = verify(args.weight, args.rank, args.perturb)
    out.record(report, report["summary"])
    return EXIT_OK if report["status"] == "pass" else EXIT_MISMATCH


def cmd_embed(args, out: _Out) -> int:
    max_degree = args.max_degree if args.max_degree is not None else args.rank
    if args.rank < max_degree:
        raise ValidationError(f"--rank {args.rank} must be at least --max-degree {max_degree}")
    status = EXIT_OK
    for p in enumerate_infinite_patterns(args.weight, max_degree):
        tower = stable_basis_vector(p)
        try:
            stable = stability_check(p, args.rank)
        except StabilityViolation:
            stable, status = False, EXIT_MISMATCH
        out.record(
            {
                "pattern": p.to_dict(),
                "base_rank": tower.base_rank,
                "vector": tower.representative.to_dict(),
                "checked_up_to": args.rank,
                "stable": stable,
            },
            f"deg {p.degree}: {p.triangle} -> {tower.representative!r} stable={stable}",
        )
    return status


def cmd_fundamental(args, out: _Out) -> int:
    for el in fundamental_basis(args.k, args.rank):
        out.record(
            {
                "indices": list(el.indices),
                "pattern": el.pattern.to_dict(),
                "scalar": str(el.scalar),
                "vector": el.vector.to_dict(),
            },
            f"e_{el.indices} <- {el.pattern} scalar {el.scalar}",
        )
    return EXIT_OK


COMMANDS = {
    "dim": cmd_dim,
    "patterns": cmd_patterns,
    "tableaux": cmd_tableaux,
    "basis": cmd_basis,
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
    "embed": cmd_embed,
    "fundamental": cmd_fundamental,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gtbasis", description="Gelfand-Tsetlin bases of polynomial gl(n)-modules.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--weight", default="", help='comma-separated parts, e.g. "2,1"; empty for the trivial weight')
        p.add_argument("--rank", type=int, default=None)
        p.add_argument("--max-degree", type=int, default=None)
        p.add_argument("--output", default="-", help="output path, '-' for stdout")
        p.add_argument("--format", choices=["json", "text"], default="json")
        if name == "verify":
            p.add_argument("--perturb", action="store_true", help="corrupt one basis vector; the run must fail")
        if name == "fundamental":
            p.add_argument("--k", type=int, required=True, help="wedge degree")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.weight = parse_weight(args.weight)
        if args.rank is None:
            if args.command in ("patterns", "embed") and args.max_degree is not None:
                args.rank = args.max_degree
            else:
                args.rank = max(1, len(args.weight))
        if args.rank < 1:
            raise ValidationError("--rank must be positive")
        if args.max_degree is not None and args.max_degree < 1:
            raise ValidationError("--max-degree must be positive")
        padded(args.weight, args.rank)
        if args.max_degree is not None:
            padded(args.weight, args.max_degree)
        ctx = open(args.output, "w") if args.output != "-" else nullcontext(sys.stdout)
        with ctx as stream:
            return COMMANDS[args.command](args, _Out(stream, args.format))
    except GTError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
