"""Two-mode cavity QED simulator: entangled coherent states from a single atom.

Thin layer over the compiled ``_core`` module. States are flat complex arrays in the
layout index = (n * dim2 + m) * atom_dim + s, with s = 0 for the atomic |-> level.
"""

from ._core import (  # noqa: F401
    DEFAULT_LEAK_TOL,
    EcsimError,
    ModeRotation,
    __version__,
    adiabatic_residual,
    beam_splitter,
    cat_target,
    coherent_dim,
    coherent_overlap,
    coherent_state,
    coherent_tail_mass,
    decouple_params,
    entropy,
    evolve_exact_jc,
    evolve_oracle,
    half_revival_time,
    husimi_q,
    interaction_hamiltonian,
    prepare_cat,
    prepare_dispersive,
    preparation_time,
    purity,
    reduced_density_matrix,
    revival_peak_time,
    rotation_params,
    scenario_defaults,
    squeeze_composition,
    squeezed_vacuum,
    to_quasi_amplitudes,
    transform_residuals,
)
from . import _core

SCENARIOS = ("validate", "zero-detuning", "large-detuning", "adiabatic-sweep", "qfunc")


def _as_params(params):
    out = {}
    for key, value in params.items():
        if isinstance(value, (list, tuple)):
            value = ",".join(repr(float(v)) for v in value)
        elif isinstance(value, bool):
            raise TypeError(f"{key}: booleans are not scenario parameters")
        elif isinstance(value, float):
            value = repr(value)
        out[key] = str(value)
    return out


def run_scenario(scenario, **params):
    """Run a scenario with file-style parameter names (``g1=0.5``, ``sweep_deltas=[25, 50]``).

    Returns a dict with ``scalars``, ``checks``, ``columns``, ``rows``, ``passed`` and,
    for qfunc, the ``qgrid`` array (rows follow the imaginary axis).
    """
    return _core.run_scenario(scenario, _as_params(params))


def write_outputs(scenario, out, **params):
    """Run a scenario and write timeseries.csv, summary.json (and qgrid.csv) into ``out``."""
    return _core.write_outputs(scenario, _as_params(params), str(out))
