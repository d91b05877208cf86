import os
import subprocess
import sys
from fractions import Fraction

import pytest

import hzbound


def test_class_numbers():
    assert hzbound.class_number(-3) == 1
    assert hzbound.class_number(-4) == 1
    assert hzbound.class_number(-23) == 3
    assert hzbound.h_prime(-3) == Fraction(1, 3)
    assert hzbound.hurwitz(0) == Fraction(-1, 12)
    assert hzbound.hurwitz(3) == Fraction(1, 3)
    assert hzbound.hurwitz(2) == 0
    with pytest.raises(ValueError):
        hzbound.class_number(-5)


def test_arith():
    assert hzbound.legendre(3, 13) == 1
    assert hzbound.legendre(2, 5) == -1
    assert hzbound.sqrt_mod(4, 5) == [2, 3]
    assert hzbound.sigma(1, 6) == 12
    assert hzbound.sigma(1, Fraction(5, 4)) == 0
    assert hzbound.divisors(12) == [1, 2, 3, 4, 6, 12]


def test_fundamental_unit():
    u = hzbound.fundamental_unit(5)
    assert u.eps.a == Fraction(1, 2)
    assert u.eps.b == Fraction(1, 2)
    assert u.norm == -1
    assert u.eps_plus.is_totally_positive()
    assert float(u.eps) == pytest.approx(1.618033988749895)


def test_self_intersection():
    assert hzbound.self_intersection(13, 3) == Fraction(-2, 3)
    assert hzbound.self_intersection(5, 1) == Fraction(-1, 6)
    full = hzbound.self_intersection_full(5, 1, tol=1e-10)
    assert full == pytest.approx(5.0 / 6.0, abs=1e-9)
    assert hzbound.unit_orbit_sum(5, 2) == 0.0
    assert hzbound.unit_orbit_sum(5, 1) == pytest.approx(1.0, abs=1e-9)
    assert hzbound.split_prime_products(13, 20) == [3, 17]
    assert hzbound.is_eligible(13, 3)
    assert not hzbound.is_eligible(13, 2)


def test_bounds():
    assert hzbound.paley_lower(3) == pytest.approx(1.353533197076297)
    two_term, merged = hzbound.robin_upper(12)
    assert two_term > 28.0  # sigma_1(12) = 28, the tight case
    assert hzbound.asymptotic_floor(13) == pytest.approx(-19.602397215512997)
    c = hzbound.BoundConstants.riemann()
    assert c.rh_mode and c.delta == pytest.approx(2 * hzbound.BoundConstants.standard().delta)


def test_surface():
    assert hzbound.zeta_minus_one(5) == Fraction(1, 30)
    assert hzbound.zeta_minus_one(13) == Fraction(1, 6)
    assert hzbound.volume(13, 1) == Fraction(1, 3)
    assert hzbound.sigma0_sum(13) == 6
    assert hzbound.exact_bound_coefficient() < 9.0
    assert hzbound.chern_negativity_bound(13) == pytest.approx(-427.52651425354705)
    q = hzbound.quotient_singularity_bounds(13)
    assert q["a2_exact"] == 2 and not q["valid_range"]


def test_scan_rows():
    rows = hzbound.scan_rows(13, 20)
    assert [r["N"] for r in rows] == [3, 17]
    assert rows[0]["tn2"] == Fraction(-2, 3)
    assert rows[0]["viol_statement"]


CLI = os.environ.get("HZBOUND_CLI")


@pytest.mark.skipif(CLI is None, reason="HZBOUND_CLI not set")
class TestCli:
    def run(self, *args, **kw):
        return subprocess.run([CLI, *args], capture_output=True, text=True, **kw)

    def test_classnum(self):
        r = self.run("classnum", "-d", "-23", "--no-cache")
        assert r.returncode == 0
        assert r.stdout.strip() == "3"

    def test_selfint(self):
        r = self.run("selfint", "-p", "13", "-N", "3", "--no-cache")
        assert r.returncode == 0
        assert r.stdout.strip() == "-2/3"

    def test_invalid_prime_exits_2(self):
        r = self.run("chern", "-p", "6")
        assert r.returncode == 2
        assert "prime" in r.stderr

    def test_unwritable_output_exits_3(self):
        r = self.run("scan", "-p", "13", "--n-max", "20", "-o",
                     "/nonexistent-dir/out.csv", "--no-cache")
        assert r.returncode == 3

    def test_scan_csv(self, tmp_path):
        out = tmp_path / "scan.csv"
        r = self.run("scan", "-p", "13", "--n-max", "20", "-o", str(out), "--no-cache")
        assert r.returncode == 0
        lines = out.read_text().splitlines()
        assert lines[0] == ("N,eligible,tn2,sigma_floor,lemma2_statement,"
                            "lemma2_proof,viol_statement,viol_proof")
        assert lines[1].startswith("3,1,-2/3,-2/3,")
        assert "min_tn2=-2/3" in r.stdout

    def test_scan_include_ip(self, tmp_path):
        out = tmp_path / "scan_ip.csv"
        r = self.run("scan", "-p", "5", "--n-max", "12", "--include-ip",
                     "-o", str(out), "--no-cache")
        assert r.returncode == 0
        lines = out.read_text().splitlines()
        # tn2 column is a decimal in this mode
        tn2 = float(lines[1].split(",")[2])
        compact = hzbound.self_intersection(5, 11)
        assert tn2 >= float(compact) - 1e-9

    def test_verify_csv(self, tmp_path):
        out = tmp_path / "claims.csv"
        r = self.run("verify", "-p", "13", "--n-max", "60", "--d-max", "50",
                     "-o", str(out), "--no-cache")
        assert r.returncode == 0
        text = out.read_text()
        assert text.startswith("schema,claim_id,parameters,status,witness\n")
        assert ",tn2_lower_statement," in text

    def test_chern(self):
        r = self.run("chern", "-p", "13")
        assert r.returncode == 0
        assert "zeta_K(-1): 1/6" in r.stdout

    def test_surface_bound(self):
        r = self.run("surface-bound", "--c2", "4", "--ksq", "2")
        assert r.returncode == 0
        assert "d2: 10" in r.stdout
        assert "bound_nine: -90" in r.stdout

    def test_cache_roundtrip(self, tmp_path):
        cache = tmp_path / "classnum.tsv"
        r1 = self.run("classnum", "-d", "-23", "--cache", str(cache))
        assert r1.returncode == 0
        assert cache.read_text() == "-23\t3\n"
        r2 = self.run("classnum", "-d", "-23", "--cache", str(cache))
        assert r2.returncode == 0 and r2.stdout.strip() == "3"
