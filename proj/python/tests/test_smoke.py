import csv
import io
import math

import pytest

import feynman_checkers as fc


def test_first_amplitudes():
    p = fc.LatticeParams(1.0, 1.0)
    a = fc.amplitude(1, 1, p, fc.GaugeField.homogeneous())
    assert a.a1 == 0.0 and a.a2 == -1.0
    a = fc.amplitude(1, 1, p, fc.GaugeField.trivial())
    assert a.a2 == 1.0
    s = 1 / (2 * math.sqrt(2))
    a = fc.amplitude(0, 4, p, fc.GaugeField.homogeneous())
    assert a.a1 == pytest.approx(2 * s) and a.a2 == pytest.approx(-s)


def test_three_routes_agree():
    p = fc.LatticeParams(0.8, 1.0)
    u = fc.GaugeField.homogeneous()
    for ti in (5, 12, 31):
        for xi in range(-ti + 2, ti + 1, 2):
            rec = fc.amplitude(xi, ti, p, u)
            closed = fc.amplitude_closed(xi, ti, 0.8)
            spec = fc.amplitude_integral(xi, ti, p)
            for other in (closed, spec):
                assert abs(other.a1 - rec.a1) < 1e-9
                assert abs(other.a2 - rec.a2) < 1e-9


def test_unitarity_and_limits():
    p = fc.LatticeParams(1.0, 0.5)
    s = fc.evolve_to(200, p, fc.GaugeField.seeded(7))
    assert fc.total_probability(s) == pytest.approx(1.0, abs=1e-12)
    assert fc.limit_cdf(0.0, fc.LatticeParams(1.0, 1.0)) == pytest.approx(1 / 3)
    assert fc.bessel_j0(0.0) == 1.0
    assert fc.airy_ai(0.0) == pytest.approx(0.3550280538878172)


def test_errors_map_to_exceptions():
    with pytest.raises(fc.InvalidArgs):
        fc.LatticeParams(-1.0, 1.0)
    with pytest.raises(fc.CheckersError):
        fc.amplitude_integral(0, 4, fc.LatticeParams(0.0, 1.0))


def test_cli_in_process():
    code, out, err = fc.run_cli(["evolve", "--t", "4"])
    assert code == 0 and err == ""
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["x", "a1", "a2", "P"]
    assert len(rows) == 5
    code, _, err = fc.run_cli(["evolve", "--t", "0"])
    assert code == 2 and "--t" in err
