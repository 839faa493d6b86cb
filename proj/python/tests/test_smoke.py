import math

import numpy as np
import pytest

import fastdiam

C_STAR = math.sqrt(5 - 2 * math.sqrt(3))


def test_constants():
    assert fastdiam.c_star() == pytest.approx(C_STAR, abs=1e-15)
    assert fastdiam.rho_star() == pytest.approx(C_STAR / 2, abs=1e-15)


def test_point_set_round_trip():
    arr = np.array([[0.0, 0.0], [3.0, 4.0]])
    s = fastdiam.PointSet(arr)
    assert (s.n, s.m, len(s)) == (2, 2, 2)
    np.testing.assert_array_equal(s.to_numpy(), arr)
    assert fastdiam.brute_force_diameter(s).diameter == 5.0


def test_worst_case_five_points():
    s = fastdiam.worst_case_five_points()
    ds = fastdiam.double_sweep(s, 0)
    assert ds.lower == pytest.approx(1.0, abs=1e-12)
    exact = fastdiam.brute_force_diameter(s)
    assert exact.diameter == pytest.approx(C_STAR, abs=1e-12)
    assert tuple(exact.witness) == (3, 4)
    cs = fastdiam.c_star_estimate_2d(s, 0)
    assert cs.upper == pytest.approx(exact.diameter, abs=1e-9)


def test_iterative_and_randomized():
    s = fastdiam.generate("cube", n=2000, m=3, seed=4)
    exact = fastdiam.brute_force_diameter(s).diameter
    it = fastdiam.iterative_approx(s, t=2)
    rd = fastdiam.randomized_approx(s, t=2, seed=9)
    assert it.lower <= exact and rd.lower <= exact
    assert it.distance_evaluations == 4 * 2 * 2000
    assert rd.distance_evaluations == 3 * 2 * 2000


def test_calipers_match_brute_force():
    s = fastdiam.generate("ball", n=500, m=2, seed=2)
    assert fastdiam.rotating_calipers_diameter_2d(s).diameter == \
        fastdiam.brute_force_diameter(s).diameter


def test_generate_is_seeded():
    a = fastdiam.generate("ellipsoid-rotated", n=100, m=4, seed=5)
    b = fastdiam.generate("ellipsoid-rotated", n=100, m=4, seed=5)
    assert a == b
    np.testing.assert_allclose(np.linalg.norm(fastdiam.generate("sphere", n=50, m=5).to_numpy(),
                                              axis=1), 1.0, atol=1e-12)


def test_save_and_load(tmp_path):
    s = fastdiam.generate("ball", n=64, m=3, seed=1)
    path = str(tmp_path / "pts.txt")
    fastdiam.save_points(s, path)
    assert fastdiam.load_points(path) == s


def test_run_cli():
    code, out, err = fastdiam.run_cli(["run", "--distribution", "worst-case-5",
                                       "--algorithm", "cstar-2d"])
    assert code == 0, err
    header, row = out.strip().splitlines()
    record = dict(zip(header.split(","), row.split(",")))
    assert record["certificate"] == "RHO_STAR_BALL"


def test_errors():
    with pytest.raises(fastdiam.UsageError):
        fastdiam.c_star_estimate_2d(fastdiam.generate("cube", n=10, m=3))
    with pytest.raises(ValueError):
        fastdiam.generate("torus", n=3, m=2)
    with pytest.raises(fastdiam.ParseError):
        path = "/tmp/fastdiam_bad_points.txt"
        with open(path, "w") as fh:
            fh.write("2 2\n0 0\n")
        fastdiam.load_points(path)
    with pytest.raises(OSError):
        fastdiam.load_points("/no/such/file.txt")
