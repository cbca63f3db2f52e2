"""Command-line front end: ``jsmap <command> [options]``.

Exit status 0 on success, 1 when a checked property fails, 2 on I/O or
parse errors (a JSON error object is written to stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field, fields
from pathlib import Path

import numpy as np

from . import checks, groups, io, kernel, spectra, whs
from .hardy import HardyElement, torus_grid

COMMANDS = ("kernel", "apply", "spectra", "norms", "examples", "group", "verify")


@dataclass
class JobSpec:
    command: str
    input: str | None = None
    function: str | None = None
    output: str | None = None
    N: int | None = None
    fiber_dim: int = 1
    grid: int | None = None
    weights: list = field(default_factory=list)
    seed: int = 0
    tol: float | None = None
    example_id: str = "all"
    element: str | None = None
    calc: str | None = None
    check_all: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise io.ParseError(f"unknown command {self.command!r}")
        if self.N is not None and self.N < 1:
            raise io.ParseError("N must be positive")
        if self.fiber_dim < 1:
            raise io.ParseError("fiber dimension must be positive")
        for attr in ("input", "function"):
            p = getattr(self, attr)
            if p is not None and not Path(p).exists():
                raise io.ParseError(f"{attr} file not found: {p}", p)

    @classmethod
    def from_json(cls, path) -> "JobSpec":
        try:
            data = json.loads(Path(path).read_text())
        except OSError as exc:
            raise io.ParseError(f"cannot read job file: {exc.strerror}", path) from None
        except json.JSONDecodeError as exc:
            raise io.ParseError(f"invalid JSON: {exc.msg}", path, exc.lineno, exc.colno) from None
        known = {f.name for f in fields(cls)}
        data = {k.replace("-", "_"): v for k, v in data.items()}
        unknown = set(data) - known
        if unknown:
            raise io.ParseError(f"unknown job fields {sorted(unknown)}", path)
        if isinstance(data.get("weights"), str):
            data["weights"] = parse_weights(data["weights"])
        return cls(**data)


def parse_weights(text: str) -> list:
    try:
        return [whs.WeightPair.parse(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise io.ParseError(f"weights must look like 'r:p,r:p', got {text!r}") from None


# ---- commands ----

def _require(job, attr):
    if getattr(job, attr) is None:
        raise io.ParseError(f"command {job.command!r} needs --{attr.replace('_', '-')}")
    return getattr(job, attr)


def cmd_kernel(job: JobSpec) -> int:
    A = io.read_matrix(_require(job, "input"), job.N)
    K = kernel.kernel_from_matrix(A)
    M = job.grid or 2 * A.N + 2
    theta = torus_grid(M)
    vals = K.grid(M)
    rows = [
        (io.fmt(theta[j]), io.fmt(theta[k]), io.fmt(vals[j, k].real), io.fmt(vals[j, k].imag))
        for j in range(M)
        for k in range(M)
    ]
    io.write_csv(job.output, ("phi", "psi", "re", "im"), rows)
    return 0


def cmd_apply(job: JobSpec) -> int:
    A = io.read_matrix(_require(job, "input"), job.N)
    f = io.read_hardy(_require(job, "function"), job.fiber_dim)
    if f.N != A.N:
        raise io.ParseError(f"function has {f.N} modes but the matrix is {A.N}x{A.N}", job.function)
    g = kernel.apply_kernel(kernel.kernel_from_matrix(A), f, job.grid)
    rows = [
        (n + 1, j, io.fmt(g.coeffs[n, j].real), io.fmt(g.coeffs[n, j].imag))
        for j in range(g.d)
        for n in range(g.N)
    ]
    io.write_csv(job.output, ("n", "fiber", "re", "im"), rows)
    return 0


def cmd_spectra(job: JobSpec) -> int:
    A = io.read_matrix(_require(job, "input"), job.N)
    rep = spectra.compare_spectra(A)
    rows = [("A", io.fmt(z.real), io.fmt(z.imag)) for z in rep.eigsA[np.lexsort((rep.eigsA.imag, rep.eigsA.real))]]
    rows += [("D", io.fmt(z.real), io.fmt(z.imag)) for z in rep.eigsD[np.lexsort((rep.eigsD.imag, rep.eigsD.real))]]
    io.write_csv(job.output, ("source", "re", "im"), rows)
    summary = rep.summary()
    tol = 1e-8 if job.tol is None else job.tol
    summary["tol"] = tol
    summary["passed"] = rep.maxMismatch <= tol
    text = json.dumps(summary, indent=2, sort_keys=True) + "\n"
    if job.output and job.output != "-":
        Path(job.output).with_suffix(".summary.json").write_text(text)
    sys.stderr.write(text) if job.output in (None, "-") else sys.stdout.write(text)
    return 0 if summary["passed"] else 1


def cmd_norms(job: JobSpec) -> int:
    A = io.read_matrix(_require(job, "input"), job.N)
    pairs = job.weights or [whs.WeightPair(0, 0)]
    rows = []
    for w in pairs:
        w = w if isinstance(w, whs.WeightPair) else whs.WeightPair(*w)
        rows.append((w.r, w.p, io.fmt(whs.whs_norm(A, w)), io.fmt(whs.operator_norm_sobolev(A, w))))
    io.write_csv(job.output, ("r", "p", "whs", "opnorm"), rows)
    return 0


def _write_check_rows(path, rows):
    out = [
        (r.group, r.check, io.fmt(r.deviation), io.fmt(r.bound) if np.isfinite(r.bound) else "nan", r.status, r.note.replace(",", ";"))
        for r in rows
    ]
    io.write_csv(path, ("id", "check", "deviation", "bound", "status", "note"), out)


def cmd_examples(job: JobSpec) -> int:
    ids = "abcde" if job.example_id == "all" else job.example_id
    rows = checks.run_examples(ids, job.N or 24, job.seed)
    _write_check_rows(job.output, rows)
    return 1 if any(r.failed for r in rows) else 0


def cmd_group(job: JobSpec) -> int:
    G, window = io.read_group(_require(job, "input"))
    N = job.N or (8 if window is None else 64)
    report = {}
    if window is None:
        element = job.element if job.element is not None else G.elements[G.identity]
        D = groups.embed_finite(G, element, N)
    else:
        element = int(job.element) if job.element is not None else 1
        D = groups.embed_integers(element, N)
    report["element"] = str(element)
    report["N"] = N
    report["interior_size"] = int(len(D.interior))
    if job.check_all:
        rep = groups.check_homomorphism(G, N, window or 4)
        report["homomorphism"] = rep.as_dict()
    matrix = D.matrix
    if job.calc:
        if job.calc != "sqrt":
            raise io.ParseError(f"unsupported --calc {job.calc!r} (only 'sqrt')")
        matrix = groups.functional_calculus(D, groups.principal_sqrt)
        report["calc"] = {"function": "sqrt", "residual": float(np.max(np.abs(matrix @ matrix - D.matrix)))}
    matrix = np.asarray(matrix, complex)
    rows = [
        (i + 1, j + 1, io.fmt(matrix[i, j].real), io.fmt(matrix[i, j].imag))
        for i, j in zip(*np.nonzero(np.abs(matrix) > 1e-14))
    ]
    io.write_csv(job.output, ("m", "n", "re", "im"), rows)
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    (sys.stderr if job.output in (None, "-") else sys.stdout).write(text)
    failed = job.check_all and not report["homomorphism"]["ok"]
    return 1 if failed else 0


def cmd_verify(job: JobSpec) -> int:
    result = checks.run_verify(job.N or 32, job.fiber_dim, job.seed)
    rows = result.pop("properties")
    _write_check_rows(job.output, rows)
    result["failed"] = [f"{r.group}/{r.check}" for r in rows if r.failed]
    result["counts"] = {s: sum(r.status == s for r in rows) for s in ("pass", "fail", "info")}
    text = json.dumps(result, indent=2, sort_keys=True) + "\n"
    (sys.stderr if job.output in (None, "-") else sys.stdout).write(text)
    return 0 if result["passed"] else 1


HANDLERS = {
    "kernel": cmd_kernel,
    "apply": cmd_apply,
    "spectra": cmd_spectra,
    "norms": cmd_norms,
    "examples": cmd_examples,
    "group": cmd_group,
    "verify": cmd_verify,
}


def run(job: JobSpec) -> int:
    return HANDLERS[job.command](job)


# ---- argument parsing ----

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="matrix (.csv/.json) or group (.json) file")
    common.add_argument("--output", help="output CSV path (default: stdout)")
    common.add_argument("--N", type=int, help="truncation size")
    common.add_argument("--fiber-dim", type=int, default=1, help="dimension d of the fiber K")
    common.add_argument("--grid", type=int, help="torus grid size M (default 2N+2)")
    common.add_argument("--weights", type=parse_weights, default=[], help="weight pairs 'r:p,...'")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float)
    common.add_argument("--job", help="load the job specification from a JSON file")

    parser = argparse.ArgumentParser(prog="jsmap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("kernel", parents=[common], help="sample the kernel of D(A) on the torus grid")
    p = sub.add_parser("apply", parents=[common], help="apply the kernel of D(A) to a Hardy element")
    p.add_argument("--function", help="Hardy element JSON ([re, im] pairs, fiber-major)")
    sub.add_parser("spectra", parents=[common], help="compare eigenvalues of A and D(A)")
    sub.add_parser("norms", parents=[common], help="weighted Hilbert-Schmidt and Sobolev operator norms")
    p = sub.add_parser("examples", parents=[common], help="closed-form kernel catalog comparisons")
    p.add_argument("--id", dest="example_id", default="all", choices=["a", "b", "c", "d", "e", "all"])
    p = sub.add_parser("group", parents=[common], help="group embedding and functional calculus")
    p.add_argument("--element")
    p.add_argument("--calc", choices=["sqrt"])
    p.add_argument("--check-all", action="store_true")
    sub.add_parser("verify", parents=[common], help="run the full invariant suite")
    return parser


def job_from_args(args) -> JobSpec:
    if args.job:
        job = JobSpec.from_json(args.job)
        if job.command != args.command:
            raise io.ParseError(f"job file is for {job.command!r}, not {args.command!r}", args.job)
        return job
    kw = {f.name: getattr(args, f.name) for f in fields(JobSpec) if hasattr(args, f.name)}
    return JobSpec(**kw)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(job_from_args(args))
    except io.ParseError as exc:
        sys.stderr.write(json.dumps(exc.as_dict()) + "\n")
        return 2
    except (OSError, ValueError) as exc:
        sys.stderr.write(json.dumps({"error": str(exc), "kind": type(exc).__name__}) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
