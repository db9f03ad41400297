"""Zero-determinant strategies for threshold public goods and snowdrift games."""

import json

from ._core import (
    RNG_ALGORITHM,
    Family,
    GameSpec,
    InfeasibleParameters,
    InvalidArgument,
    InvalidSpec,
    MemoryOneStrategy,
    NotEnforceable,
    PayoffTable,
    SlopeOutOfRange,
    StateSpaceTooLarge,
    ZdClass,
    ZdtError,
    axis_grid,
    best_p0,
    check_social_dilemma,
    closed_form_bound,
    construct_zd,
    enforceable,
    equalizer_exists,
    exact_discounted_payoffs,
    feasible_phi_interval,
    l_bounds,
    min_enforceable_delta,
    numeric_slope_bound,
    payoffs,
    preset_baseline,
    random_memory_one,
    region_sweep_json,
    relation_residual,
    simulate_monte_carlo,
)

__version__ = "0.1.0"


def region_sweep(family, n, axis1, m_values, cls, c=1.0, threads=0):
    """Sweep (axis1, m) cells; returns the parsed JSON document."""
    return json.loads(region_sweep_json(family, n, list(axis1), list(m_values), cls, c, threads))


def zd_strategy(spec, cls, s, delta=0.999, phi=None, p0=None):
    """Build a generous or extortionate strategy at slope s.

    p0 defaults to the width-maximizing value and phi to the interval midpoint.
    """
    table = payoffs(spec)
    l = preset_baseline(table, cls)
    if not enforceable(table, s, l):
        raise NotEnforceable(f"s = {s} is not enforceable for the {cls.name.lower()} preset")
    if p0 is None:
        p0 = best_p0(table, s, l, delta)
        if p0 is None:
            raise InfeasibleParameters(f"no p0 admits a phi at delta = {delta}")
    if phi is None:
        iv = feasible_phi_interval(table, s, l, delta, p0)
        if iv is None:
            raise InfeasibleParameters(f"empty phi interval at delta = {delta}, p0 = {p0}")
        phi = 0.5 * (iv[0] + iv[1])
    return construct_zd(table, s, l, phi, delta, p0)
