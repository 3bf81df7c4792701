import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from zalcman import (
    Covector,
    ExceptionalPoint,
    GridSpec,
    InvalidDirection,
    LiftedMapSpec,
    euclidean,
    functional_A,
    functional_B,
    hom_part_eval,
    hom_parts,
    l1_space,
    lp_space,
    make_extremal_ball,
    make_extremal_domain,
    reduction_crosscheck,
    restrict_h,
    rho,
    sample_direction,
    sample_lifted_spec,
    sample_point,
    starlikeness_scan,
    sup_space,
    zalcman_nd,
)
from zalcman.mappings import h_eval

from support import lifted_specs, unit_complex

FAMILIES = [euclidean(3), lp_space(3, 3.0), sup_space(3), l1_space(3)]


def family_ids():
    return [f"{s.kind}{s.p or ''}" for s in FAMILIES]


def single_atom(entries) -> LiftedMapSpec:
    return LiftedMapSpec(((1.0, Covector(tuple(entries))),))


E2 = euclidean(2)
FIRST_COORDINATE = single_atom((1.0, 0.0))


def test_spec_validation():
    with pytest.raises(ValueError):
        LiftedMapSpec(())
    with pytest.raises(ValueError):
        LiftedMapSpec(((-0.2, Covector((1.0,))), (1.2, Covector((1.0,)))))
    with pytest.raises(ValueError):
        LiftedMapSpec(((0.7, Covector((1.0,))),))


def test_validate_for_checks_dual_norms():
    spec = single_atom((1.0, 1.0))
    spec.validate_for(l1_space(2))  # dual norm is max |b_i| = 1: allowed
    with pytest.raises(ValueError):
        spec.validate_for(sup_space(2))  # dual norm is sum |b_i| = 2: rejected


def test_json_roundtrip_is_exact():
    spec = LiftedMapSpec(
        ((0.25, Covector((0.3 + 0.1j, -0.2))), (0.75, Covector((0.0, 0.9j))))
    )
    assert LiftedMapSpec.from_json(spec.to_json()) == spec


def test_hom_parts_trivial_and_capped():
    assert hom_part_eval(FIRST_COORDINATE, 0, np.array([0.9, 0.1])) == 1.0
    with pytest.raises(ValueError):
        hom_parts(FIRST_COORDINATE, np.array([0.5, 0.0]), 7)


@given(unit_complex)
def test_single_atom_hom_parts_match_the_squared_reciprocal(x):
    # f(z) = (1 - x)^{-2} along the ray, so f_j = (j+1) x^j.
    z = np.array([0.5 * x, 0.3])
    f = hom_parts(FIRST_COORDINATE, z, 6)
    for j, fj in enumerate(f):
        assert abs(fj - (j + 1) * (0.5 * x) ** j) < 1e-12


def test_two_atom_first_part_is_the_weighted_trace():
    spec = LiftedMapSpec(
        ((0.5, Covector((1.0, 0.0))), (0.5, Covector((0.0, 1.0))))
    )
    z = np.array([0.3 + 0.1j, -0.2])
    assert abs(hom_part_eval(spec, 1, z) - (z[0] + z[1])) < 1e-15


@pytest.mark.parametrize("r", [0.3, 0.75])
def test_extremal_ball_functionals_hit_234(r):
    u = np.array([1.0, 0.5]) / rho(E2, np.array([1.0, 0.5]))
    spec = make_extremal_ball(E2, u)
    values = [functional_A(E2, spec, r * u, k) for k in (2, 3, 4)]
    for v, expected in zip(values, (2.0, 3.0, 4.0)):
        assert abs(v - expected) < 1e-12


def test_functionals_vanish_on_the_kernel():
    z = np.array([0.0, 0.5])
    for k in (2, 3, 4):
        assert functional_A(E2, FIRST_COORDINATE, z, k) == 0.0


def test_diagonal_point_pins_the_known_values():
    z = 0.6 * np.array([1.0, 1.0]) / math.sqrt(2.0)
    a2 = functional_A(E2, FIRST_COORDINATE, z, 2)
    a3 = functional_A(E2, FIRST_COORDINATE, z, 3)
    a4 = functional_A(E2, FIRST_COORDINATE, z, 4)
    assert abs(a2 - math.sqrt(2.0)) < 1e-12
    assert abs(a3 - 1.5) < 1e-12
    assert abs(a4 - math.sqrt(2.0)) < 1e-12
    fv = zalcman_nd(E2, FIRST_COORDINATE, z)
    assert abs(fv.zalcman - math.sqrt(2.0) / 2.0) < 1e-12


def test_polydisk_domain_functionals_hit_234():
    s = sup_space(2)
    spec = make_extremal_domain(s, 1.0)
    z = 0.8 * np.array([1.0, 0.5])
    values = [functional_B(s, spec, z, k) for k in (2, 3, 4)]
    for v, expected in zip(values, (2.0, 3.0, 4.0)):
        assert abs(v - expected) < 1e-12
    assert functional_B(s, spec, np.array([0.0, 0.5]), 3) == 0.0


def test_functional_order_and_method_are_validated():
    z = np.array([0.5, 0.2])
    with pytest.raises(ValueError):
        functional_A(E2, FIRST_COORDINATE, z, 5)
    with pytest.raises(ValueError):
        functional_A(E2, FIRST_COORDINATE, z, 2, method="magic")


@pytest.mark.parametrize("space", FAMILIES, ids=family_ids())
def test_closed_form_agrees_with_both_pairing_routes(space):
    rng = np.random.default_rng(21)
    for _ in range(40):
        spec = sample_lifted_spec(space, rng)
        z = sample_point(space, rng, min_gap=1e-3)
        for k in (2, 3, 4):
            closed = functional_A(space, spec, z, k)
            assert abs(closed - functional_A(space, spec, z, k, method="pairing")) < 1e-12
            assert abs(closed - functional_B(space, spec, z, k, method="gradient")) < 1e-12


def test_restrict_h_of_the_trivial_spec_is_one():
    spec = single_atom((0.0, 0.0))
    h = restrict_h(spec, np.array([0.7, 0.1]))
    assert h.coeffs[0] == 1
    assert max(abs(c) for c in h.coeffs[1:]) == 0.0


@given(unit_complex)
def test_single_atom_transfer_coefficients_are_koebe_moments(x):
    z0 = np.array([x, 0.0])
    h = restrict_h(FIRST_COORDINATE, z0, order=5)
    assert h.coeffs[0] == 1
    for k in range(1, 6):
        assert abs(h.coeffs[k] - 2.0 * x**k) < 1e-12


@pytest.mark.parametrize("space", FAMILIES, ids=family_ids())
def test_transfer_function_is_caratheodory_along_rays(space):
    rng = np.random.default_rng(31)
    for _ in range(10):
        spec = sample_lifted_spec(space, rng)
        z0 = sample_direction(space, rng, min_gap=1e-3)
        h = restrict_h(spec, z0)
        # Rational values stay in the right half plane all the way out;
        # the order-6 truncation is only trusted on a smaller disk.
        for r in (0.3, 0.6, 0.99):
            for j in range(12):
                zeta = r * np.exp(2j * np.pi * j / 12)
                assert h_eval(spec, z0, zeta).real > 0.0
                if r <= 0.6:
                    assert h(zeta).real > 0.0


def test_zalcman_nd_validates_inputs():
    z = np.array([0.5, 0.2])
    with pytest.raises(ValueError):
        zalcman_nd(E2, FIRST_COORDINATE, z, mode="annulus")
    with pytest.raises(ExceptionalPoint):
        zalcman_nd(E2, FIRST_COORDINATE, np.zeros(2))
    with pytest.raises(ExceptionalPoint):
        zalcman_nd(sup_space(2), FIRST_COORDINATE, np.array([0.5, 0.5]))


@pytest.mark.parametrize("space", FAMILIES, ids=family_ids())
@pytest.mark.parametrize("mode", ["ball", "domain"])
def test_bound_holds_on_random_lifted_maps(space, mode):
    rng = np.random.default_rng(41)
    for _ in range(60):
        spec = sample_lifted_spec(space, rng)
        z = sample_point(space, rng)
        assert zalcman_nd(space, spec, z, mode=mode).zalcman <= 2.0 + 1e-9


@pytest.mark.parametrize("space", FAMILIES, ids=family_ids())
def test_scale_and_phase_invariance(space):
    rng = np.random.default_rng(51)
    for _ in range(25):
        spec = sample_lifted_spec(space, rng)
        z = sample_point(space, rng, min_gap=1e-3)
        base = zalcman_nd(space, spec, z).zalcman
        halved = zalcman_nd(space, spec, 0.5 * z).zalcman
        if space.kind in ("sup", "l1"):
            assert halved == base
        else:
            assert abs(halved - base) < 1e-14
        ph = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
        assert abs(zalcman_nd(space, spec, ph * z).zalcman - base) < 1e-11


@pytest.mark.parametrize("space", FAMILIES, ids=family_ids())
def test_reduction_residual_stays_tiny(space):
    rng = np.random.default_rng(61)
    worst = 0.0
    for _ in range(60):
        spec = sample_lifted_spec(space, rng)
        z = sample_point(space, rng, min_gap=1e-3)
        worst = max(worst, reduction_crosscheck(space, spec, z))
    assert worst <= 1e-10


def test_reduction_on_the_extremal_map_is_exact_to_working_precision():
    u = np.array([1.0, 0.5]) / rho(E2, np.array([1.0, 0.5]))
    spec = make_extremal_ball(E2, u)
    assert reduction_crosscheck(E2, spec, 0.75 * u) <= 1e-12


def test_scan_passes_on_extremal_and_sampled_specs():
    rep = starlikeness_scan(E2, make_extremal_ball(E2, np.array([1.0, 0.0])))
    assert rep.passed and rep.witness is None
    assert rep.min_real > 0.0
    assert rep.samples == 24 * 16 * 64

    rng = np.random.default_rng(71)
    spec = sample_lifted_spec(sup_space(3), rng)
    rep = starlikeness_scan(sup_space(3), spec, GridSpec(directions=6))
    assert rep.passed


def test_scan_flags_the_overweight_spec():
    # Weights summing to 2 ((1 - z_1)^{-4}) escape the Caratheodory class,
    # and the scan must produce a concrete certificate.
    bad = [(2.0, Covector((1.0, 0.0)))]
    rep = starlikeness_scan(E2, bad, seed=3)
    assert not rep.passed
    assert rep.witness is not None
    assert rep.min_real <= 0.0
    assert rep.witness.h_value.real <= 0.0
    w = rep.witness.to_json()
    assert set(w) == {"direction", "zeta", "h"}


def test_scan_of_the_trivial_spec_is_flat():
    rep = starlikeness_scan(E2, single_atom((0.0, 0.0)))
    assert rep.min_real == 1.0
    assert rep.passed


def test_grid_spec_validation():
    with pytest.raises(ValueError):
        GridSpec(directions=0)


def test_make_extremal_ball_contracts():
    with pytest.raises(InvalidDirection):
        make_extremal_ball(E2, np.array([1.0, 1.0]))
    spec = make_extremal_ball(E2, np.array([1.0, 0.0]))
    assert spec.atoms[0][0] == 1.0
    assert spec.atoms[0][1].entries == (1.0, 0.0)


def test_make_extremal_domain_contracts():
    with pytest.raises(ValueError):
        make_extremal_domain(sup_space(2), 0.0)
    spec = make_extremal_domain(sup_space(3), 1.0)
    assert spec.atoms[0][1].entries == (1.0, 0.0, 0.0)
    rep = starlikeness_scan(sup_space(3), spec)
    assert rep.passed


@given(lifted_specs(euclidean(2)))
def test_generated_specs_satisfy_their_own_invariants(spec):
    spec.validate_for(euclidean(2))
    total = sum(lam for lam, _ in spec.atoms)
    assert abs(total - 1.0) < 1e-12
    assert LiftedMapSpec.from_json(spec.to_json()) == spec


def test_functional_values_serialize():
    fv = zalcman_nd(E2, FIRST_COORDINATE, np.array([0.4, 0.1]))
    obj = fv.to_json()
    assert obj["mode"] == "ball"
    assert len(obj["values"]) == 3
    assert obj["space"] == {"dim": 2, "kind": "lp", "p": 2.0}
