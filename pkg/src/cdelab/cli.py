"""Command-line interface.

Subcommands: equilibria, integrate, lyapunov, ground-state, continuation,
homoclinic, transform, verify.  Exit codes: 0 on success, 1 on solver
failure, 2 on invalid input.
"""

import argparse
import sys

import numpy as np

from . import dynamics, integrators, linear, spectral, orbits, geometry
from . import serialize, verify
from .errors import (CdelabError, NewtonDivergence, NonFiniteState,
                     ConvergenceFailure, NoEllipticPair, SolverStall,
                     NonConvergence, ConvergedToEquilibrium)

SOLVER_ERRORS = (NewtonDivergence, NonFiniteState, ConvergenceFailure,
                 NoEllipticPair, SolverStall, NonConvergence,
                 ConvergedToEquilibrium)


def _common_flags(parser):
    parser.add_argument("--out", metavar="FILE", default=None,
                        help="write output to FILE instead of stdout")
    parser.add_argument("--format", choices=("csv", "json"), default=None,
                        help="output format (default depends on subcommand)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized checks")
    parser.add_argument("--tol", type=float, default=None,
                        help="tolerance override where applicable")


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _parse_floats(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ValueError(f"could not parse number list {text!r}") from exc


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cdelab",
        description="Numerical laboratory for the cylinder Hamiltonian system "
                    "and its spectral/variational ground states.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("equilibria", help="list equilibria and energies")
    _common_flags(p)

    p = sub.add_parser("integrate", help="integrate the cylinder system")
    p.add_argument("--state", required=True,
                   help="initial state as u,v,a,b")
    p.add_argument("--t-final", type=float, required=True)
    p.add_argument("--dt", type=float, default=1e-3)
    p.add_argument("--method", choices=("implicit_midpoint", "rk4"),
                   default="implicit_midpoint")
    _common_flags(p)

    p = sub.add_parser("lyapunov", help="small-orbit family continuation")
    p.add_argument("--amplitudes", required=True,
                   help="comma-separated amplitudes, e.g. 1e-2,1e-3")
    _common_flags(p)

    p = sub.add_parser("ground-state", help="spectral ground state at epsilon")
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--modes", type=int, default=None)
    _common_flags(p)

    p = sub.add_parser("continuation", help="delta_eps versus period diagram")
    p.add_argument("--eps-grid", required=True,
                   help="comma-separated epsilon values")
    _common_flags(p)

    p = sub.add_parser("homoclinic", help="derive and verify the homoclinic")
    p.add_argument("--paper-constants", action="store_true",
                   help="also report the profile built from the quoted "
                        "amplitude constants")
    _common_flags(p)

    p = sub.add_parser("transform", help="transport a radial profile")
    p.add_argument("--from", dest="src", required=True,
                   choices=("cylinder", "euclidean"))
    p.add_argument("--to", dest="dst", required=True,
                   choices=("euclidean", "sphere"))
    p.add_argument("--input", required=True, help="profile CSV path")
    _common_flags(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help="suite name or 'all': "
                                 + ", ".join(sorted(verify.SUITES)))
    _common_flags(p)
    return parser


# ----------------------------------------------------------------------
# subcommand bodies

def cmd_equilibria(args):
    cat = dynamics.equilibria()
    if args.format == "csv":
        lines = ["name,u,v,a,b,H"]
        for name, point, energy in cat.items():
            lines.append(",".join([name] + [repr(float(x)) for x in point]
                                  + [repr(float(energy))]))
        _emit("\n".join(lines), args.out)
    else:
        doc = {"schema": geometry.SCHEMA,
               "equilibria": [{"name": name,
                               "state": [float(x) for x in point],
                               "H": float(energy)}
                              for name, point, energy in cat.items()]}
        _emit(serialize.dumps(doc), args.out)
    return 0


def cmd_integrate(args):
    state = _parse_floats(args.state)
    if len(state) != 4:
        raise ValueError("--state needs exactly four numbers u,v,a,b")
    cfg = integrators.StepperConfig(method=args.method, dt=args.dt)
    tr = integrators.integrate(np.array(state), args.t_final, cfg)
    if args.format == "json":
        doc = {"schema": geometry.SCHEMA,
               "drift": integrators.energy_drift(tr),
               "samples": [[float(tr.times[i])] + [float(x) for x in tr.states[i]]
                           + [float(tr.energy_series[i])]
                           for i in range(len(tr))]}
        _emit(serialize.dumps(doc), args.out)
    else:
        _emit(serialize.trajectory_to_csv(tr), args.out)
    return 0


def cmd_lyapunov(args):
    amplitudes = _parse_floats(args.amplitudes)
    tol = args.tol or 1e-9
    family = orbits.lyapunov_family(amplitudes, tol=tol)
    records = []
    for h, orbit in zip(amplitudes, family):
        rec = serialize.orbit_record(orbit, provenance={
            "kind": "lyapunov_family", "amplitude": h})
        rec["period"] = orbit.period
        rec["distance_to_center"] = float(np.max(np.linalg.norm(
            orbit.trajectory.states - dynamics.P_PLUS, axis=1)))
        records.append(rec)
    if args.format == "csv":
        lines = ["amplitude,period,H,residual,distance_to_center"]
        for h, rec in zip(amplitudes, records):
            lines.append(",".join(repr(float(x)) for x in
                                  (h, rec["period"], rec["H"], rec["residual"],
                                   rec["distance_to_center"])))
        _emit("\n".join(lines), args.out)
    else:
        _emit(serialize.dumps({"schema": geometry.SCHEMA, "orbits": records}),
              args.out)
    return 0


def cmd_ground_state(args):
    kwargs = {}
    if args.tol:
        kwargs["grad_tol"] = args.tol
    result = spectral.ground_state(args.epsilon, K=args.modes, **kwargs)
    orbit = orbits.field_to_orbit(result.field)
    if args.format == "csv":
        _emit(serialize.field_grid_to_csv(result.field), args.out)
        return 0
    rec = serialize.orbit_record(orbit, provenance={
        "kind": "ground_state", "epsilon": args.epsilon,
        "modes": result.field.num_modes,
        "gradient_norm": result.diagnostics["final_gradient_norm"]},
        epsilon=args.epsilon)
    rec["delta_eps"] = result.delta_eps
    rec["field"] = serialize.field_to_json(result.field)
    _emit(serialize.dumps(rec), args.out)
    return 0


def cmd_continuation(args):
    eps_grid = _parse_floats(args.eps_grid)
    diagram = orbits.period_energy_diagram(eps_grid)
    if args.format == "json":
        doc = {"schema": geometry.SCHEMA, "delta0": diagram["delta0"],
               "rows": [{k: row[k] for k in
                         ("epsilon", "T", "delta_eps", "gap", "converged")}
                        for row in diagram["rows"]]}
        _emit(serialize.dumps(doc), args.out)
    else:
        _emit(serialize.diagram_to_csv(diagram), args.out)
    return 0


def cmd_homoclinic(args):
    rep = orbits.derive_constants()
    doc = {
        "schema": geometry.SCHEMA,
        "alpha": rep.alpha, "beta": rep.beta,
        "alpha_sq": rep.alpha_sq, "beta_sq": rep.beta_sq,
        "ode_residual": rep.residual_derived,
        "quoted_amplitudes": list(rep.quoted_amplitudes),
        "quoted_amplitudes_residual": rep.residual_quoted,
    }
    prof = orbits.quoted_profile() if args.paper_constants else orbits.derived_profile()
    t = np.linspace(-10.0, 10.0, 81)
    doc["profile"] = {"convention": "quoted" if args.paper_constants else "derived",
                      "samples": [[float(tt)] + [float(x) for x in prof(tt)]
                                  for tt in t]}
    _emit(serialize.dumps(doc), args.out)
    return 0


def cmd_transform(args):
    with open(args.input) as fh:
        profile = serialize.profile_from_csv(fh, chart=args.src)
    if args.src == "cylinder":
        euc = geometry.cylinder_to_euclidean(profile, np.exp(-profile.grid))
    else:
        euc = profile
    if args.dst == "euclidean":
        result = euc
    else:
        result, convention = geometry.euclidean_to_sphere(euc)
        if args.format == "json" or args.out is None:
            sys.stderr.write(serialize.dumps(convention) + "\n")
    _emit(serialize.profile_to_csv(result), args.out)
    return 0


def cmd_verify(args):
    results = verify.run_suite(args.suite, seed=args.seed, tol=args.tol)
    lines = []
    ok = True
    for name, passed, detail in results:
        ok = ok and passed
        status = "PASS" if passed else "FAIL"
        lines.append(f"[{status}] {name}" + (f" ({detail})" if detail else ""))
    lines.append(f"{'all checks passed' if ok else 'FAILURES present'}: "
                 f"{sum(p for _, p, _ in results)}/{len(results)}")
    _emit("\n".join(lines), args.out)
    return 0 if ok else 1


COMMANDS = {
    "equilibria": cmd_equilibria,
    "integrate": cmd_integrate,
    "lyapunov": cmd_lyapunov,
    "ground-state": cmd_ground_state,
    "continuation": cmd_continuation,
    "homoclinic": cmd_homoclinic,
    "transform": cmd_transform,
    "verify": cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return COMMANDS[args.command](args)
    except SOLVER_ERRORS as exc:
        sys.stderr.write(f"solver failure: {exc}\n")
        return 1
    except (CdelabError, ValueError, OSError) as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
