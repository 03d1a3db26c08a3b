"""Acceptance suite: one test per criterion, exact tolerances, one
pass/fail line printed per criterion (run with -s to see them live).

Criterion 4 note: the representation decision is checked against a
conclusive exhaustive oracle (class-bound scan, see conftest) rather than
a fixed |x|,|y| <= 60 window, because several represented values in the
tested range have minimal witnesses outside that window (e.g. the smallest
solution of x^2 - 29 y^2 = -1 is (70, 13)).  The one-sided box-60 check is
asserted as well.  Zero disagreements are required against the sound
oracle.
"""

import json

from conftest import (U, brute_values, diag, dsum,
                      representation_oracle_values)
from reflekt import binary, construct, roots, serialize
from reflekt.arith import nonresidue_prime
from reflekt.cli import main
from reflekt.lattice import Lattice, Sublattice

U3 = dsum(U, U, U)


def report(num, text):
    print(f"[acceptance] criterion {num}: PASS - {text}")


def cli_json(capsys, *argv):
    code = main(["--format", "json", *argv])
    out = capsys.readouterr().out
    assert code == 0, out
    return json.loads(out)


def test_criterion_1_square_family_mu(capsys):
    for a in range(2, 51):
        obj = cli_json(capsys, "binary", "mu", "-D", str(a * a - 1))
        assert obj == {"mu": 2 - 2 * a}, a
    report(1, "mu(x^2 - (a^2-1) y^2) = 2 - 2a for a = 2..50, exact")


def test_criterion_2_avoid_roots_family():
    for n in range(1, 7):
        for b in range(1, 6):
            cert = construct.avoid_roots(n, b)
            ab = cert.a * cert.b
            assert not binary.is_square(ab), (n, b)
            vals = brute_values(1, 0, -ab, 50)
            for k in range(0, n + 1):
                assert -k not in vals, (n, b, k)
            assert construct.validate_avoid_roots(cert) == []
    report(2, "avoid-roots certificates for n <= 6, b <= 5: ab non-square, "
              "no value in {0,..,-n} under brute force box 50")


def test_criterion_3_nonresidue_primes():
    for k in range(1, 11):
        p = nonresidue_prime(k)
        assert p % 8 == 7, k
        assert all((x * x + k) % p != 0 for x in range(p)), k
    report(3, "nonresidue primes for k = 1..10 pass the exhaustive residue "
              "check and are congruent to 7 mod 8")


def test_criterion_4_representation_oracle_equivalence():
    disagreements = []
    for d in range(2, 61):
        if binary.is_square(d):
            continue
        f = binary.BinaryForm.from_d(d)
        sound = representation_oracle_values(d, 40)
        boxed = {v for v in brute_values(1, 0, -d, 60) if abs(v) <= 40}
        assert boxed <= sound
        for n in range(-40, 41):
            got = binary.represents(f, n)
            if n == 0:
                assert got is False
                continue
            if got != (n in sound):
                disagreements.append((d, n))
            if n in boxed:
                assert got, (d, n)
    assert disagreements == []
    report(4, "representation decision has zero disagreements with the "
              "conclusive exhaustive oracle for D in 2..60, |n| <= 40 "
              "(box-60 witnesses all confirmed)")


def test_criterion_5_reflection_suite(battery12):
    checked = 0
    for lat in battery12:
        for v in roots.find_roots_in_box(lat, 10):
            basis = tuple(tuple(int(i == j) for j in range(lat.rank))
                          for i in range(lat.rank))
            for u in basis:
                image = roots.reflect(lat, v, u)
                assert all(isinstance(x, int) for x in image)
                assert lat.norm(image) == lat.norm(u)
                assert roots.reflect(lat, v, image) == u
            assert roots.reflect(lat, v, v) == tuple(-x for x in v)
            checked += 1
    assert checked > 100
    report(5, f"{checked} roots across the 12-lattice battery: reflections "
              "integral, norm-preserving, involutive")


def test_criterion_6_discriminant_identities(battery12):
    for lat in battery12:
        data = lat.discriminant()
        assert data.order == abs(lat.determinant())
        expected_exp = data.invariant_factors[-1] if data.invariant_factors else 1
        assert data.exponent == expected_exp
    report(6, "discriminant group order = |det| and exponent = last "
              "invariant factor across the battery")


def test_criterion_7_mj_construction():
    cert = construct.mj_family(U3, (1, 1, 0, 0, 0, 0), 2, 3)
    assert construct.validate_mj(cert) == []
    assert len(cert.entries) == 3
    prev = 0
    for entry in cert.entries:
        mj = Sublattice(U3, entry.basis)
        assert mj.contains(cert.h)
        assert mj.index_in(mj.saturate()) == 1
        form = binary.BinaryForm.from_gram(Lattice(entry.gram))
        assert binary.is_anisotropic(form)
        assert entry.mu == binary.mu(form)
        assert entry.mu < -4
        qv = U3.norm(entry.v)
        assert qv < prev
        prev = qv
    report(7, "ambient construction on U+U+U with q(h)=2, N=2: three "
              "primitive anisotropic entries, mu < -4, q(v_j) strictly "
              "decreasing")


def test_criterion_8_rank2_reflectivity_dichotomy():
    battery = (2, 3, 5, 6, 7, 8, 10, 11, 12, 13,
               14, 15, 17, 18, 19, 20, 21, 22, 23, 161)
    assert len(battery) == 20
    for d in battery:
        lat = diag(1, -d)
        verdict = roots.reflectivity_indicator(lat)
        assert verdict.status != roots.UNKNOWN, d
        if verdict.status == roots.NON_REFLECTIVE:
            m = verdict.evidence.isometry
            g = lat.gram
            mt_g_m = tuple(
                tuple(sum(m[k][i] * sum(g[k][l] * m[l][j] for l in range(2))
                          for k in range(2)) for j in range(2))
                for i in range(2))
            assert mt_g_m == g
            assert m[0][0] + m[1][1] > 2
            assert verdict.evidence.roots == ()
            assert verdict.evidence.candidate_norms is not None
        else:
            assert verdict.evidence.roots, d
            for v in verdict.evidence.roots:
                assert roots.is_root(lat, v), (d, v)
    report(8, "rank-2 verdicts for the 20-discriminant battery: complete "
              "dichotomy, certificates verified, no Unknown")


def test_criterion_9_certificate_round_trips(tmp_path, capsys):
    certs = [
        serialize.avoid_roots_to_obj(construct.avoid_roots(2, 1)),
        serialize.pell_family_to_obj(construct.pell_family(5)),
        serialize.mj_to_obj(construct.mj_family(U3, (1, 1, 0, 0, 0, 0), 2, 2)),
        serialize.nv_to_obj(dsum(U, U), 2, 2,
                            construct.nv_complements(dsum(U, U), 2, 2)),
    ]
    for i, obj in enumerate(certs):
        text = serialize.dumps(obj)
        reparsed = json.loads(text)
        assert serialize.dumps(reparsed) == text
        assert serialize.verify_certificate_obj(reparsed) == []
        path = tmp_path / f"cert{i}.json"
        path.write_text(text)
        code = main(["--format", "json", "verify", str(path)])
        out = capsys.readouterr().out
        assert code == 0
        assert json.loads(out) == {"valid": True}
    report(9, "all four certificate kinds round-trip byte-identically and "
              "re-verify through the CLI")
