import pytest

from conftest import U, brute_roots, diag
from reflekt import roots as rt
from reflekt.errors import InvalidInputError, NotARootError
from reflekt.lattice import Lattice


class TestIsRoot:
    def test_examples(self):
        assert rt.is_root(diag(1, -8), (2, 1)) is True
        assert rt.is_root(diag(1, -7), (2, 1)) is False

    def test_small_norms_are_automatic(self, battery12):
        for lat in battery12:
            for v, q in lat.box_vectors(3):
                if q in (-1, -2):
                    from math import gcd
                    g = 0
                    for x in v:
                        g = gcd(g, x)
                    if g == 1:
                        assert rt.is_root(lat, v), (lat.gram, v)

    def test_rejects_bad_candidates(self):
        with pytest.raises(InvalidInputError):
            rt.is_root(U, (1, 0))  # isotropic
        with pytest.raises(InvalidInputError):
            rt.is_root(diag(1, -8), (4, 2))  # imprimitive
        with pytest.raises(InvalidInputError):
            rt.is_root(U, (0, 0))


class TestReflect:
    def test_examples(self):
        lat = diag(1, -8)
        assert rt.reflect(lat, (2, 1), (1, 0)) == (3, 1)
        assert rt.reflect(lat, (2, 1), (0, 1)) == (-8, -3)
        assert rt.reflect(lat, (2, 1), (2, 1)) == (-2, -1)

    def test_rejects_non_root(self):
        with pytest.raises(NotARootError):
            rt.reflect(diag(1, -7), (2, 1), (1, 0))

    def test_involution_preserves_norm(self, battery12):
        for lat in battery12:
            for v in rt.find_roots_in_box(lat, 4):
                for u, qu in lat.box_vectors(2):
                    image = rt.reflect(lat, v, u)
                    assert lat.norm(image) == qu
                    assert rt.reflect(lat, v, image) == u
                assert rt.reflect(lat, v, v) == tuple(-x for x in v)


class TestRootNormCandidates:
    def test_examples(self):
        assert rt.root_norm_candidates(diag(1, -8)) == (-1, -2, -4, -8, -16)
        assert rt.root_norm_candidates(U) == (-1, -2)
        assert rt.root_norm_candidates(diag(2, -2)) == (-1, -2, -4)

    def test_every_root_norm_is_a_candidate(self, battery12):
        for lat in battery12:
            cands = set(rt.root_norm_candidates(lat))
            for v in rt.find_roots_in_box(lat, 5):
                assert lat.norm(v) in cands


class TestFindRootsInBox:
    def test_example_d8(self):
        # oracle-confirmed: (2,-1) is a third sign class
        assert rt.find_roots_in_box(diag(1, -8), 3) == ((0, 1), (2, -1), (2, 1))

    def test_example_d161(self):
        # (0,1) has norm -161 dividing twice every pairing, hence is a root
        assert rt.find_roots_in_box(diag(1, -161), 20) == ((0, 1),)

    def test_example_u(self):
        assert rt.find_roots_in_box(U, 1) == ((1, -1),)

    def test_agrees_with_brute_force(self, battery12):
        for lat in battery12:
            box = 4 if lat.rank >= 4 else 6
            assert set(rt.find_roots_in_box(lat, box)) == brute_roots(lat, box), \
                lat.gram


class TestReflectivity:
    def test_rank1_and_definite(self):
        assert rt.reflectivity_indicator(diag(5)).status == rt.REFLECTIVE
        assert rt.reflectivity_indicator(diag(-7)).status == rt.REFLECTIVE
        assert rt.reflectivity_indicator(diag(2, 3)).status == rt.REFLECTIVE
        assert rt.reflectivity_indicator(Lattice(((-2, 1), (1, -2)))).status \
            == rt.REFLECTIVE

    def test_diagonal_forms_are_reflective(self):
        # (0,1) is always a root of diag(1,-D), so the Weyl group has
        # finite index for every D in this family
        for d in (2, 7, 8, 15, 161):
            verdict = rt.reflectivity_indicator(diag(1, -d))
            assert verdict.status == rt.REFLECTIVE
            assert verdict.evidence.roots
            for v in verdict.evidence.roots:
                assert rt.is_root(diag(1, -d), v)

    def test_non_reflective_with_certificate(self):
        lat = Lattice(((3, 4), (4, -7)))
        verdict = rt.reflectivity_indicator(lat)
        assert verdict.status == rt.NON_REFLECTIVE
        assert verdict.evidence.roots == ()
        assert verdict.evidence.candidate_norms is not None
        m = verdict.evidence.isometry
        g = lat.gram
        mt_g_m = tuple(tuple(sum(m[k][i] * sum(g[k][l] * m[l][j]
                                               for l in range(2))
                                 for k in range(2)) for j in range(2))
                       for i in range(2))
        assert mt_g_m == g
        assert m[0][0] + m[1][1] > 2
        assert brute_roots(lat, 60) == set()

    def test_isotropic_rank2_reflective(self):
        assert rt.reflectivity_indicator(U).status == rt.REFLECTIVE
        assert rt.reflectivity_indicator(diag(1, -9)).status == rt.REFLECTIVE

    def test_rank3_unknown_with_evidence(self):
        verdict = rt.reflectivity_indicator(diag(1, -1, -1), budget=2)
        assert verdict.status == rt.UNKNOWN
        assert (0, 1, 0) in verdict.evidence.roots
        assert (0, 0, 1) in verdict.evidence.roots
        assert (0, 1, 1) in verdict.evidence.roots
        assert (0, 1, -1) in verdict.evidence.roots

    def test_never_decides_indefinite_rank3_plus(self, battery12):
        for lat in battery12:
            if lat.rank < 3:
                continue
            pos, neg = lat.signature()
            if pos and neg:
                assert rt.reflectivity_indicator(lat, budget=3).status \
                    == rt.UNKNOWN
