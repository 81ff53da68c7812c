"""Command-line entry point.

Subcommands: ``scan`` (expectation sweeps over a theta grid), ``verify``
(invariant suites), ``count`` (exact path counts), ``bench`` (scaling /
truncation / cusp / kernel comparison) and ``vqe`` (ansatz benchmarks).
Exit codes: 0 success, 2 configuration error, 3 engine failure.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence

import numpy as np

from . import analytic, bench, output, verifysuite
from .lattice import (WhipCircuit, build_cycle, build_whip, build_whip_no_pt,
                      serialize_circuit)
from .pauli import PauliString, PauliSum

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_ENGINE = 3


class ConfigError(ValueError):
    pass


def parse_theta_grid(spec: str) -> List[float]:
    """``start:stop:count`` (inclusive endpoints, radians) or a comma list."""
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise ConfigError(f"bad theta grid {spec!r}; expected start:stop:count")
        try:
            start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as exc:
            raise ConfigError(f"bad theta grid {spec!r}: {exc}") from None
        if count < 1:
            raise ConfigError("theta grid count must be >= 1")
        if count == 1:
            return [start]
        return list(np.linspace(start, stop, count))
    try:
        return [float(tok) for tok in spec.split(",") if tok]
    except ValueError as exc:
        raise ConfigError(f"bad theta list {spec!r}: {exc}") from None


def build_circuit(args) -> WhipCircuit:
    kind = args.circuit
    if kind == "whip1d":
        return build_whip(1, args.L)
    if kind == "whip2d":
        return build_whip(2, args.L)
    if kind == "whip3d":
        return build_whip(3, args.L)
    if kind == "whip-nopt":
        return build_whip_no_pt(args.L)
    if kind == "cycle":
        return build_cycle(args.L, "uniform-half")
    if kind == "cycle-bipolar":
        return build_cycle(args.L, "bipolar")
    if kind == "wala":
        from .wala import build_wala
        return build_wala(args.variant)
    raise ConfigError(f"unknown circuit {kind!r}")


def _edge_sum(circuit: WhipCircuit) -> PauliSum:
    L = circuit.shape[0]
    if circuit.kind in ("cycle", "cycle-bipolar"):
        pairs = [(( i,), ((i + 1) % L,)) for i in range(L)]
    elif circuit.d == 1:
        pairs = [((i,), (i + 1,)) for i in range(L - 1)]
    else:
        pairs = []
        for site in circuit.sites:
            for axis in range(circuit.d):
                nxt = list(site)
                nxt[axis] += 1
                if nxt[axis] < circuit.shape[axis]:
                    pairs.append((site, tuple(nxt)))
    return PauliSum({PauliString({a: "Z", b: "Z"}): 1.0 for a, b in pairs})


# module-level so ProcessPoolExecutor can pickle it
def _scan_point(payload):
    from . import propagation, statevector as sv
    from .wala import plaquette_operator, vertex_operator, cube_vertices

    circuit, engine, obs_kind, obs_arg, theta = payload
    import time
    t0 = time.perf_counter_ns()
    try:
        if obs_kind == "entropy":
            if engine != "statevector":
                raise ValueError("entanglement spectra need the statevector engine")
            state = sv.run_circuit(circuit, theta)
            entropy, xi = sv.entanglement(state, sv.half_lattice_cut(circuit.shape[0]))
            finite = [float(v) for v in xi if math.isfinite(v)]
            row = {"theta": theta, "value": entropy, "ok": True, "error": "",
                   "wall_ns": time.perf_counter_ns() - t0}
            for k in range(4):
                row[f"xi{k}"] = finite[k] if k < len(finite) else math.inf
            return row
        if engine == "early":
            if obs_kind == "zz":
                pair = propagation.sink_pair(circuit)
            elif obs_kind == "corr":
                pair = propagation.diagonal_pair(circuit, obs_arg)
            else:
                raise ValueError(f"early engine does not evaluate {obs_kind!r}")
            value = propagation.early_eval_expectation(circuit, pair, theta)
        else:
            if obs_kind == "zz":
                pair = propagation.sink_pair(circuit)
                observable = PauliSum.single(PauliString({pair[0]: "Z", pair[1]: "Z"}))
            elif obs_kind == "corr":
                pair = propagation.diagonal_pair(circuit, obs_arg)
                observable = PauliSum.single(PauliString({pair[0]: "Z", pair[1]: "Z"}))
            elif obs_kind == "energy":
                edge_sum = _edge_sum(circuit)
                observable = edge_sum.scaled(-1.0 / len(edge_sum))
            elif obs_kind == "order":
                observable = sv.order_parameter_operator(circuit.shape[0]).scaled(
                    1.0 / (2 * circuit.shape[0] - 2))
            elif obs_kind == "plaquette":
                observable = PauliSum.single(plaquette_operator(obs_arg))
            elif obs_kind == "vertex":
                observable = PauliSum({vertex_operator(v): 1.0 for v in cube_vertices()}) \
                    .scaled(1.0 / len(cube_vertices()))
            else:
                raise ValueError(f"unknown observable {obs_kind!r}")
            if engine == "naive":
                value, _ = propagation.naive_expectation(circuit, observable, theta)
            elif engine == "statevector":
                value = sv.expectation(sv.run_circuit(circuit, theta), observable)
            else:
                raise ValueError(f"unknown engine {engine!r}")
        return {"theta": theta, "value": value, "ok": True, "error": "",
                "wall_ns": time.perf_counter_ns() - t0}
    except Exception as exc:  # per-row failure, reported in the table
        return {"theta": theta, "value": math.nan, "ok": False, "error": str(exc),
                "wall_ns": time.perf_counter_ns() - t0}


_WALA_FACE_BY_INDEX = {1: "top", 2: "north", 3: "east", 4: "west",
                       5: "bottom", 6: "south"}


def parse_observable(spec: str):
    if spec == "zz":
        return "zz", None
    if spec.startswith("corr:"):
        return "corr", int(spec.split(":", 1)[1])
    if spec in ("energy", "order", "vertex", "entropy"):
        return spec, None
    if spec.startswith("plaquette:"):
        token = spec.split(":", 1)[1]
        if token.isdigit():
            idx = int(token)
            if idx not in _WALA_FACE_BY_INDEX:
                raise ConfigError(f"plaquette index {idx} outside 1..6")
            return "plaquette", _WALA_FACE_BY_INDEX[idx]
        return "plaquette", token
    raise ConfigError(f"unknown observable {spec!r}")


def cmd_scan(args) -> int:
    circuit = build_circuit(args)
    thetas = parse_theta_grid(args.theta)
    obs_kind, obs_arg = parse_observable(args.obs)
    if args.engine is None:
        # early evaluation covers the 2-d whip ZZ observables; everything
        # else defaults to the dense oracle
        if args.circuit == "whip2d" and obs_kind in ("zz", "corr"):
            args.engine = "early"
        else:
            args.engine = "statevector"
    if args.dump_circuit:
        output.write_text(args.dump_circuit, serialize_circuit(circuit))
    payloads = [(circuit, args.engine, obs_kind, obs_arg, float(t)) for t in thetas]
    workers = args.threads or os.cpu_count() or 1
    if workers > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_scan_point, payloads))
    else:
        rows = [_scan_point(p) for p in payloads]
    for row in rows:
        row.update({"engine": args.engine, "L": args.L, "obs": args.obs})
        if obs_kind == "zz":
            row["energy_density"] = -row["value"] if row["ok"] else math.nan
    if args.dump_state:
        from . import statevector as sv
        state = sv.run_circuit(circuit, thetas[0])
        state.amps.astype("<c16").tofile(args.dump_state)
    columns = ["theta", "value", "engine", "L", "obs"]
    if obs_kind == "zz":
        columns.append("energy_density")
    if obs_kind == "entropy":
        columns += [f"xi{k}" for k in range(4)]
    if not args.no_timing:
        columns.append("wall_ns")
    columns += ["ok", "error"]
    meta = {"command": "scan", "circuit": args.circuit, "engine": args.engine,
            "obs": args.obs, "L": str(args.L), "seed": str(args.seed)}
    output.write_table(args.out, rows, columns, meta, args.format)
    if not all(r["ok"] for r in rows):
        bad = next(r for r in rows if not r["ok"])
        print(f"error: {bad['error']}", file=sys.stderr)
        return EXIT_ENGINE
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(verifysuite.SUITES) if args.suite == "all" else [args.suite]
    all_ok = True
    for name in names:
        for check, ok, detail in verifysuite.SUITES[name]():
            all_ok &= ok
            status = "PASS" if ok else "FAIL"
            line = f"[{status}] {name}: {check}"
            if detail:
                line += f"  ({detail})"
            print(line)
    return EXIT_OK if all_ok else EXIT_ENGINE


def cmd_count(args) -> int:
    if args.family == "lgv":
        if len(args.indices) != 2:
            raise ConfigError("count lgv needs l w")
        print(analytic.lgv_count(args.indices[0], args.indices[1]))
    elif args.family == "layer":
        if len(args.indices) != 1:
            raise ConfigError("count layer needs one index")
        print(analytic.cycle_count_layer(args.indices[0]))
    elif args.family == "correlation":
        if len(args.indices) != 3:
            raise ConfigError("count correlation needs d w l")
        print(analytic.correlation_path_count(*args.indices))
    else:
        raise ConfigError(f"unknown count family {args.family!r}")
    return EXIT_OK


def cmd_bench(args) -> int:
    meta = bench.environment_metadata()
    meta["command"] = f"bench {args.what}"
    if args.what == "scaling":
        sizes = [int(s) for s in args.L.split(",")]
        time_slope, strings_slope, samples = bench.scaling_run(
            sizes, theta=args.theta_value, repeats=args.repeats)
        rows = [{"L": s.L, "wall_ns": s.wall_ns, "max_strings": s.max_strings,
                 "value": s.value, "theta": s.theta} for s in samples]
        meta["time_slope"] = f"{time_slope:.4f}"
        meta["strings_slope"] = f"{strings_slope:.4f}"
        output.write_table(args.out, rows, ["L", "wall_ns", "max_strings", "value", "theta"],
                           meta, args.format)
        print(f"time slope {time_slope:.3f}, strings slope {strings_slope:.3f}")
    elif args.what == "truncation":
        thetas = parse_theta_grid(args.theta)
        cutoffs = [int(c) for c in args.cutoffs.split(",")]
        rows_nested = bench.truncation_transition(thetas, cutoffs)
        rows = []
        for rec in rows_nested:
            for cutoff, err in zip(rec["cutoffs"], rec["errors"]):
                rows.append({"theta": rec["theta"], "cutoff": cutoff, "error": err,
                             "loglog_slope": rec["loglog_slope"],
                             "semilog_slope": rec["semilog_slope"]})
        output.write_table(args.out, rows,
                           ["theta", "cutoff", "error", "loglog_slope", "semilog_slope"],
                           meta, args.format)
    elif args.what == "cusp":
        sizes = [int(s) for s in args.L.split(",")]
        rows = []
        for rec in bench.cusp_scan(sizes, points=args.points):
            for theta, deriv in zip(rec["thetas"], rec["second_derivs"]):
                rows.append({"L": rec["L"], "theta": theta, "second_deriv": deriv,
                             "peak": rec["peak"]})
        output.write_table(args.out, rows, ["L", "theta", "second_deriv", "peak"],
                           meta, args.format)
    elif args.what == "compare":
        sizes = [int(s) for s in args.L.split(",")]
        rows = bench.compare_kernels(sizes, theta=args.theta_value, repeats=args.repeats)
        output.write_table(args.out, rows,
                           ["L", "numba_ns", "numpy_ns", "numba_value", "numpy_value"],
                           meta, args.format)
    else:
        raise ConfigError(f"unknown bench target {args.what!r}")
    return EXIT_OK


def cmd_vqe(args) -> int:
    from . import vqe as vqe_mod

    grid = list(np.linspace(0.0, 1.0, args.grid))
    ansaetze = ["with_pt", "without_pt"] if args.ansatz == "both" else [args.ansatz]
    rows = []
    for ansatz in ansaetze:
        if args.model == "tfim":
            results = vqe_mod.tfim_vqe(args.L, ansatz, grid)
        elif args.model == "z2":
            results = vqe_mod.z2_vqe(ansatz, grid)
        else:
            raise ConfigError(f"unknown vqe model {args.model!r}")
        for res in results:
            rows.append({"x": res.x, "theta_star": res.theta_star, "e_vqe": res.e_vqe,
                         "e_exact": res.e_exact, "rel_error": res.rel_error,
                         "ansatz": res.ansatz})
        worst = vqe_mod.worst_case_error(results)
        print(f"{args.model} {ansatz}: worst-case relative error {worst:.4f}")
    meta = {"command": f"vqe {args.model}", "grid": str(args.grid)}
    output.write_table(args.out, rows,
                       ["x", "theta_star", "e_vqe", "e_exact", "rel_error", "ansatz"],
                       meta, args.format)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="whiplab",
        description="Sequential ZY-rotation circuit laboratory: expectation "
                    "engines, closed forms, counts, scaling benchmarks and "
                    "ansatz comparisons.")
    sub = parser.add_subparsers(dest="command", required=True)

    scan = sub.add_parser("scan", help="sweep an observable over a theta grid")
    scan.add_argument("--circuit", default="whip2d",
                      choices=["whip1d", "whip2d", "whip3d", "whip-nopt",
                               "cycle", "cycle-bipolar", "wala"])
    scan.add_argument("--L", type=int, default=4, help="side length / cycle size")
    scan.add_argument("--variant", default="with_pt",
                      choices=["with_pt", "without_pt"], help="wala variant")
    scan.add_argument("--engine", default=None,
                      choices=["early", "naive", "statevector"],
                      help="default: early for whip2d zz/corr, else statevector")
    scan.add_argument("--obs", default="zz",
                      help="zz | corr:D | energy | order | entropy | "
                           "plaquette:N | vertex")
    scan.add_argument("--theta", required=True, help="start:stop:count or comma list")
    scan.add_argument("--out", default="-", help="output path, '-' for stdout")
    scan.add_argument("--format", default="csv", choices=["csv", "json"])
    scan.add_argument("--threads", type=int, default=None,
                      help="worker processes for the grid (default: cores)")
    scan.add_argument("--seed", type=int, default=0)
    scan.add_argument("--no-timing", action="store_true",
                      help="omit wall_ns for byte-reproducible output")
    scan.add_argument("--dump-circuit", default=None, metavar="PATH",
                      help="also write the circuit in the line text format")
    scan.add_argument("--dump-state", default=None, metavar="PATH",
                      help="dump the first grid point's statevector "
                           "(little-endian complex128; debugging only)")
    scan.set_defaults(func=cmd_scan)

    verify = sub.add_parser("verify", help="run invariant suites")
    verify.add_argument("suite", choices=sorted(verifysuite.SUITES) + ["all"])
    verify.set_defaults(func=cmd_verify)

    count = sub.add_parser("count", help="exact path counts")
    count.add_argument("family", choices=["lgv", "layer", "correlation"])
    count.add_argument("indices", type=int, nargs="+")
    count.set_defaults(func=cmd_count)

    bench_p = sub.add_parser("bench", help="scaling and criticality measurements")
    bench_p.add_argument("what", choices=["scaling", "truncation", "cusp", "compare"])
    bench_p.add_argument("--L", default="16,32,64,128", help="comma list of sizes")
    bench_p.add_argument("--theta", default="0.7853981633974483",
                         help="grid for truncation (start:stop:count or list)")
    bench_p.add_argument("--theta-value", type=float, default=math.pi / 4,
                         help="angle for scaling/compare runs")
    bench_p.add_argument("--cutoffs", default="8,16,32,64,128,256")
    bench_p.add_argument("--points", type=int, default=21)
    bench_p.add_argument("--repeats", type=int, default=5)
    bench_p.add_argument("--out", default="-")
    bench_p.add_argument("--format", default="csv", choices=["csv", "json"])
    bench_p.set_defaults(func=cmd_bench)

    vqe_p = sub.add_parser("vqe", help="variational benchmarks against exact energies")
    vqe_p.add_argument("model", choices=["tfim", "z2"])
    vqe_p.add_argument("--ansatz", default="both",
                       choices=["with_pt", "without_pt", "both"])
    vqe_p.add_argument("--L", type=int, default=4)
    vqe_p.add_argument("--grid", type=int, default=21)
    vqe_p.add_argument("--out", default="-")
    vqe_p.add_argument("--format", default="csv", choices=["csv", "json"])
    vqe_p.set_defaults(func=cmd_vqe)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    argv = list(argv)
    # let grid specs start with a negative angle: --theta -1.57:1.57:129
    for i, token in enumerate(argv[:-1]):
        if token == "--theta" and argv[i + 1].startswith("-"):
            argv[i:i + 2] = [f"--theta={argv[i + 1]}"]
            break
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Exception as exc:  # engine failure
        print(f"engine error: {exc}", file=sys.stderr)
        return EXIT_ENGINE


if __name__ == "__main__":
    sys.exit(main())
