"""CSV and JSON export of trajectories, fields, orbits, and profiles.

All documents carry the schema tag "cde-lab/1".  CSV files have a header row
and fixed column order; numbers are written in full double precision with
locale-independent formatting (repr).
"""

import csv
import io
import json

import numpy as np

from . import spectral
from .geometry import RadialProfile, SCHEMA

PROFILE_COLUMNS = {
    "cylinder": ("t", "u", "a", "b"),
    "euclidean": ("r", "u", "f1", "f2"),
    "sphere": ("theta", "u", "f1", "f2"),
}


def _write_rows(stream, header, rows):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(float(x)) for x in row])


def trajectory_to_csv(tr, stream=None):
    """Columns t,u,v,a,b,H."""
    out = stream or io.StringIO()
    rows = np.column_stack([tr.times, tr.states, tr.energy_series])
    _write_rows(out, ("t", "u", "v", "a", "b", "H"), rows)
    return None if stream else out.getvalue()


def field_grid_to_csv(field, stream=None):
    """Collocation samples of a spectral field: columns t,u,a,b."""
    out = stream or io.StringIO()
    N = spectral.grid_size(field.num_modes)
    t = spectral.grid(N)
    z = field.z_values(N)
    rows = np.column_stack([t, field.u_values(N), z[:, 0], z[:, 1]])
    _write_rows(out, ("t", "u", "a", "b"), rows)
    return None if stream else out.getvalue()


def _complex_list(c):
    return [[float(x.real), float(x.imag)] for x in c]


def _complex_array(pairs):
    return np.array([complex(re, im) for re, im in pairs])


def field_to_json(field, energy=None, residuals=None):
    doc = {
        "schema": SCHEMA,
        "epsilon": field.epsilon,
        "K": field.num_modes,
        "u_coeffs": _complex_list(field.u_coeffs),
        "z_plus_coeffs": _complex_list(field.z_plus),
        "z_minus_coeffs": _complex_list(field.z_minus),
    }
    eb = energy if energy is not None else spectral.energy(field)
    doc["energy"] = {
        "scalar_quadratic": eb.scalar_quadratic,
        "spinor_quadratic": eb.spinor_quadratic,
        "coupling": eb.coupling,
        "total": eb.total,
    }
    res = residuals if residuals is not None else spectral.nehari_residuals(field)
    doc["residuals"] = {"r1": res.r1, "r2": res.r2, "r3": res.r3,
                        "coupling": res.coupling}
    return doc


def field_from_json(doc):
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unknown schema {doc.get('schema')!r}")
    return spectral.PeriodicField(
        epsilon=float(doc["epsilon"]),
        num_modes=int(doc["K"]),
        u_coeffs=_complex_array(doc["u_coeffs"]),
        z_plus=_complex_array(doc["z_plus_coeffs"]),
        z_minus=_complex_array(doc["z_minus_coeffs"]),
    )


def orbit_record(orbit, provenance, epsilon=None, max_samples=400):
    """JSON document for a periodic orbit or converted field."""
    tr = orbit.trajectory
    stride = max(1, len(tr) // max_samples)
    samples = [[float(tr.times[i])] + [float(x) for x in tr.states[i]]
               for i in range(0, len(tr), stride)]
    return {
        "schema": SCHEMA,
        "T": orbit.half_period,
        "epsilon": epsilon,
        "H": orbit.energy,
        "residual": orbit.residual,
        "initial_state": [float(x) for x in orbit.initial_state],
        "samples": samples,
        "provenance": provenance,
    }


def profile_to_csv(profile, stream=None):
    out = stream or io.StringIO()
    header = PROFILE_COLUMNS[profile.chart]
    rows = np.column_stack([profile.grid, profile.u, profile.f1, profile.f2])
    _write_rows(out, header, rows)
    return None if stream else out.getvalue()


def profile_from_csv(stream_or_text, chart=None):
    """Read a profile CSV; the chart is inferred from the header if omitted."""
    if isinstance(stream_or_text, str):
        stream_or_text = io.StringIO(stream_or_text)
    reader = csv.reader(stream_or_text)
    header = tuple(next(reader))
    if chart is None:
        matches = [c for c, cols in PROFILE_COLUMNS.items() if cols == header]
        if not matches:
            raise ValueError(f"unrecognized profile header {header!r}")
        chart = matches[0]
    data = np.array([[float(x) for x in row] for row in reader if row])
    if data.shape[0] < 2 or data.shape[1] != 4:
        raise ValueError("profile CSV must have >= 2 rows of 4 columns")
    return RadialProfile(chart=chart, grid=data[:, 0], u=data[:, 1],
                         f1=data[:, 2], f2=data[:, 3])


def diagram_to_csv(diagram, stream=None):
    """Continuation table: columns epsilon,T,delta_eps,gap,converged."""
    out = stream or io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(("epsilon", "T", "delta_eps", "gap", "converged"))
    for row in diagram["rows"]:
        writer.writerow([repr(float(row["epsilon"])), repr(float(row["T"])),
                         repr(float(row["delta_eps"])), repr(float(row["gap"])),
                         int(row["converged"])])
    return None if stream else out.getvalue()


def dumps(doc):
    return json.dumps(doc, indent=2)
