import json
import math

import pytest

import swell


def test_well_parameters():
    w = swell.PotentialWell.from_depth(2.4, 10.0)
    assert w.alpha == pytest.approx(math.sqrt(115.2))
    assert int(w.qb) == 3
    assert w.scaled(5.0).a == pytest.approx(12.0)


def test_unitary_limit_and_zero_delay():
    w = swell.PotentialWell.from_depth(2.4, 10.0)
    k = math.sqrt((3.5 * math.pi) ** 2 - w.alpha**2) / w.a
    assert swell.resonant_cross_section(w, k) == pytest.approx(4.0, abs=1e-12)
    assert abs(swell.time_delay(w, k)) < 1e-8


def test_scan_and_quadrature():
    w = swell.PotentialWell.from_depth(12.0, 10.0)
    samples = swell.scatter_scan(w, [0.1 * i for i in range(1, 20)])
    assert len(samples) == 19
    for s in samples[::5]:
        assert swell.trapping_probability_quadrature(w, s.k) == pytest.approx(s.p_trap, abs=1e-9)


def test_first_resonance_and_poles():
    w = swell.PotentialWell.from_depth(2.4, 10.0)
    r = swell.first_resonance(w)
    assert r.k_sigma == pytest.approx(0.9950, abs=5e-4)
    assert r.pole.imag < 0
    bound = [p for p in swell.find_poles(w, 3.0) if p.kind == swell.PoleKind.bound]
    assert len(bound) == 3


def test_table1_and_scaling():
    rows = swell.table1()
    assert [r.well_label for r in rows] == ["I", "II", "III", "IV", "V", "VI", "VII"]
    assert rows[2].record.k_star == pytest.approx(rows[0].record.k_star / 5, abs=1e-8)
    assert rows[4].record.tau_boundary
    assert swell.scaling_check(rows[0].well, 5.0).passed


def test_cli_roundtrip():
    code, out, err = swell.run_cli(["bound-states", "--a", "2.4", "--v0", "10", "--format", "json"])
    assert code == 0, err
    assert len(json.loads(out)) == 3
    code, _, err = swell.run_cli(["scan", "--a", "2.4", "--kmax", "1"])
    assert code == 2
    assert "--v0" in err


def test_domain_errors():
    with pytest.raises(ValueError):
        swell.PotentialWell.from_depth(-1.0, 1.0)
