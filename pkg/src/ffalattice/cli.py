"""Command-line front end: parameter parsing, scan orchestration and
CSV/JSON emission.

Each run writes one primary data file (CSV by default) plus a JSON sidecar
holding the fully resolved configuration, the library version and derived
quantities.  Re-feeding the sidecar through --config reproduces the data
file byte for byte.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__, dynamics, scattering, selfenergy, spectrum
from .errors import DomainError
from .model import ModelParams
from .resolvent import find_poles_second_sheet

_SCHEMA_VERSION = 1

_COMMANDS = ("singularities", "domain-scan", "reflectance", "wavepacket",
             "decay", "selfenergy", "poles")


def _fmt(x: float) -> str:
    if math.isinf(x):
        return "inf"
    return format(x, ".17g")


def _write_rows(path: str, header: list[str], rows, fmt: str):
    if fmt == "csv":
        with open(path, "w", newline="") as f:
            f.write(",".join(header) + "\n")
            for row in rows:
                f.write(",".join(c if isinstance(c, str) else _fmt(c)
                                 for c in row) + "\n")
    else:
        payload = [dict(zip(header, [c if isinstance(c, str) else float(c)
                                     for c in row])) for row in rows]
        with open(path, "w", newline="") as f:
            json.dump({"columns": header, "rows": payload}, f, indent=2,
                      sort_keys=True)
            f.write("\n")


def _write_sidecar(path: str, command: str, options: dict, derived: dict):
    doc = {
        "schema_version": _SCHEMA_VERSION,
        "version": __version__,
        "command": command,
        "config": options,
        "derived": derived,
    }
    with open(path, "w", newline="") as f:
        json.dump(doc, f, indent=2, sort_keys=True)
        f.write("\n")


def _n_workers() -> int:
    env = os.environ.get("FFA_THREADS")
    if env is not None:
        n = int(env)
        if n < 1:
            raise DomainError("FFA_THREADS must be a positive integer")
        return n
    return min(4, os.cpu_count() or 1)


def _chunked_map(func, items: list, workers: int) -> list:
    """Apply func over items in parallel chunks, preserving order."""
    if workers <= 1 or len(items) < 2 * workers:
        return [func(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def _add_model_flags(sub):
    sub.add_argument("--kappa0", type=float, default=1.0)
    sub.add_argument("--kappaA", type=float, default=1.0)
    sub.add_argument("--reEa", type=float, default=0.0)
    sub.add_argument("--imEa", type=float, default=0.0)


def _add_out_flags(sub):
    sub.add_argument("--out", type=str, default=None)
    sub.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffa",
        description="Non-Hermitian boundary-impurity lattice model toolkit")
    parser.add_argument("--config", type=str, default=None,
                        help="JSON sidecar from a previous run; replays it")
    subs = parser.add_subparsers(dest="command")

    s = subs.add_parser("singularities",
                        help="locate spectral singularities in the band")
    _add_model_flags(s)
    _add_out_flags(s)

    s = subs.add_parser("domain-scan",
                        help="map the real-spectrum domain over parameters")
    s.add_argument("--reEaOverKappa0", type=float, default=0.0)
    s.add_argument("--grid", type=str, default="200x200",
                   help="resolution as ROWSxCOLS, e.g. 200x200")
    _add_out_flags(s)

    s = subs.add_parser("reflectance", help="reflectance sweep over momentum")
    _add_model_flags(s)
    s.add_argument("--kpoints", type=int, default=2000)
    _add_out_flags(s)

    s = subs.add_parser("wavepacket",
                        help="scatter a Gaussian packet off the boundary")
    _add_model_flags(s)
    s.add_argument("--k", type=float, required=True)
    s.add_argument("--n0", type=int, required=True)
    s.add_argument("--deltaN", type=float, required=True)
    s.add_argument("--tFinal", type=float, required=True)
    s.add_argument("--dt", type=float, default=None)
    _add_out_flags(s)

    s = subs.add_parser("decay", help="survival probability of the impurity")
    _add_model_flags(s)
    s.add_argument("--tFinal", type=float, required=True)
    s.add_argument("--dt", type=float, default=None)
    s.add_argument("--legacy-cn-init", action="store_true",
                   help="start every lattice site at amplitude 1")
    _add_out_flags(s)

    s = subs.add_parser("selfenergy",
                        help="tabulate boundary values across the band")
    _add_model_flags(s)
    s.add_argument("--epoints", type=int, default=400)
    _add_out_flags(s)

    s = subs.add_parser("poles",
                        help="second-sheet resolvent poles from above the cut")
    _add_model_flags(s)
    _add_out_flags(s)

    return parser


def _model_from(opts: dict) -> ModelParams:
    return ModelParams(kappa0=opts["kappa0"], kappa_a=opts["kappaA"],
                       ea=complex(opts["reEa"], opts["imEa"]))


def _model_options(args) -> dict:
    return {"kappa0": args.kappa0, "kappaA": args.kappaA,
            "reEa": args.reEa, "imEa": args.imEa}


def _run_singularities(opts: dict):
    params = _model_from(opts)
    report = spectrum.find_singularities(params)
    rows = [(s.energy, s.momentum, s.kind.value) for s in report.singularities]
    derived = {"count": report.count, "degenerate": report.degenerate,
               "energies": list(report.energies)}
    return ["E0", "k0", "kind"], rows, derived


def _run_domain_scan(opts: dict):
    rows_n, cols_n = (int(v) for v in opts["grid"].lower().split("x"))
    if rows_n < 2 or cols_n < 2:
        raise DomainError("grid must be at least 2x2")
    ratios = np.linspace(0.0, 2.0, rows_n)
    ims = np.linspace(-3.0, 3.0, cols_n)
    workers = _n_workers()
    chunks = np.array_split(np.arange(rows_n), workers)

    def work(idx):
        return spectrum.reality_domain_scan(ratios[idx], ims,
                                            opts["reEaOverKappa0"])

    grid = np.vstack(_chunked_map(work, list(chunks), workers))
    rows = [(float(ratios[i]), float(ims[j]), float(grid[i, j]))
            for i in range(rows_n) for j in range(cols_n)]
    derived = {"real_fraction": float(np.mean(grid)),
               "ratio_range": [0.0, 2.0], "im_ea_range": [-3.0, 3.0]}
    return ["kappaRatio", "imEaOverKappa0", "real"], rows, derived


def _run_reflectance(opts: dict):
    params = _model_from(opts)
    if opts["kpoints"] < 2:
        raise DomainError("kpoints must be at least 2")
    k_grid = scattering.default_k_grid(opts["kpoints"])
    workers = _n_workers()

    def work(k):
        return scattering.reflectance_sample(params, float(k))

    samples = _chunked_map(work, list(k_grid), workers)
    rows = [(s.k, s.energy, math.inf if s.divergent else s.reflectance,
             float(s.divergent)) for s in samples]
    n_div = sum(1 for s in samples if s.divergent)
    derived = {"divergent_points": n_div,
               "max_finite_R": max((s.reflectance for s in samples
                                    if not s.divergent), default=0.0)}
    return ["k", "E", "R", "Rflag"], rows, derived


def _run_wavepacket(opts: dict):
    params = _model_from(opts)
    pkt = dynamics.WavePacketSpec(n0=opts["n0"], delta_n=opts["deltaN"],
                                  k=opts["k"])
    result = dynamics.run_wavepacket(params, pkt, opts["tFinal"],
                                     dt=opts["dt"])
    final = result.snapshots[-1]
    rows = [(float(n + 1), float(abs(c) ** 2))
            for n, c in enumerate(final.c_sites)]
    derived = {"gain": result.gain, "incident_norm": result.incident_norm,
               "reflected_norm": result.reflected_norm,
               "window": list(result.window), "t_final": final.t}
    return ["n", "abs2"], rows, derived


def _run_decay(opts: dict):
    params = _model_from(opts)
    t, p, amp = dynamics.run_decay(params, opts["tFinal"], dt=opts["dt"],
                                   legacy_site_init=opts["legacyCnInit"])
    rows = [(float(ti), float(pi), float(ai.real), float(ai.imag))
            for ti, pi, ai in zip(t, p, amp)]
    derived = {"P_final": float(p[-1]), "samples": len(t)}
    return ["t", "P", "ReCa", "ImCa"], rows, derived


def _run_selfenergy(opts: dict):
    params = _model_from(opts)
    if opts["epoints"] < 2:
        raise DomainError("epoints must be at least 2")
    edge = params.band_edge
    energies = np.linspace(-edge, edge, opts["epoints"] + 2)[1:-1]
    rows = []
    for e in energies:
        sig = selfenergy.sigma_boundary(params, float(e), side=+1)
        rows.append((float(e), selfenergy.delta_shift(params, float(e)),
                     -sig.imag / math.pi, sig.real, sig.imag))
    derived = {"band_edge": edge,
               "coupling_integral": params.kappa_a ** 2}
    return ["E", "Delta", "V", "ReSigmaPlus", "ImSigmaPlus"], rows, derived


def _run_poles(opts: dict):
    params = _model_from(opts)
    edge = params.band_edge
    region = (-0.999 * edge, 0.999 * edge,
              -3.0 * params.kappa0, 0.25 * params.kappa0)
    report = find_poles_second_sheet(params, region)
    rows = [(p.z.real, p.z.imag, p.residue.real, p.residue.imag)
            for p in report.poles]
    derived = {"count": len(report.poles)}
    return ["Rez", "Imz", "ReResidue", "ImResidue"], rows, derived


_RUNNERS = {
    "singularities": _run_singularities,
    "domain-scan": _run_domain_scan,
    "reflectance": _run_reflectance,
    "wavepacket": _run_wavepacket,
    "decay": _run_decay,
    "selfenergy": _run_selfenergy,
    "poles": _run_poles,
}


def _options_from_args(args) -> dict:
    cmd = args.command
    opts: dict = {"out": args.out, "format": args.format}
    if cmd == "domain-scan":
        opts.update({"reEaOverKappa0": args.reEaOverKappa0, "grid": args.grid})
    else:
        opts.update(_model_options(args))
    if cmd == "reflectance":
        opts["kpoints"] = args.kpoints
    elif cmd == "wavepacket":
        opts.update({"k": args.k, "n0": args.n0, "deltaN": args.deltaN,
                     "tFinal": args.tFinal, "dt": args.dt})
    elif cmd == "decay":
        opts.update({"tFinal": args.tFinal, "dt": args.dt,
                     "legacyCnInit": args.legacy_cn_init})
    elif cmd == "selfenergy":
        opts["epoints"] = args.epoints
    return opts


def execute(command: str, options: dict) -> int:
    """Run one command from resolved options; returns the exit status."""
    if command not in _RUNNERS:
        print(f"ffa: unknown command {command!r}", file=sys.stderr)
        return 2
    options = dict(options)
    out = options.get("out") or command
    ext = ".csv" if options.get("format", "csv") == "csv" else ".json"
    data_path = out if out.endswith(ext) else out + ext
    stem = data_path[: -len(ext)]
    sidecar_path = stem + ".config.json"
    try:
        header, rows, derived = _RUNNERS[command](options)
    except (DomainError, ValueError, TypeError, KeyError) as exc:
        print(f"ffa: invalid configuration: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, RuntimeError) as exc:
        print(f"ffa: numerical failure: {exc}", file=sys.stderr)
        return 3
    _write_rows(data_path, header, rows, options.get("format", "csv"))
    _write_sidecar(sidecar_path, command, options, derived)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config is not None:
        try:
            with open(args.config) as f:
                doc = json.load(f)
            command = doc["command"]
            options = doc["config"]
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            print(f"ffa: cannot read config: {exc}", file=sys.stderr)
            return 2
        return execute(command, options)
    if args.command is None:
        parser.print_help(sys.stderr)
        return 2
    return execute(args.command, _options_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
