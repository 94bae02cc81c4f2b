"""Unit tests for family validation and the homology catalog."""

import pytest

from isofloer.catalog import (
    FamilyError,
    MissingTableError,
    cited_facts,
    collapse_step,
    data_from_json,
    data_to_json,
    enumerate_families,
    family_from_json,
    family_to_json,
    gauss_image_betti_g3,
    gauss_image_data,
    minimal_maslov,
    munzner_betti_N,
    orientable,
    validate_family,
)
from isofloer.homology import DimBound, check_poincare, total_betti


class TestValidation:
    def test_dimension_formula(self):
        assert validate_family(4, 2, 3).n == 10
        assert validate_family(2, 1, 4).n == 5
        assert validate_family(6, 2, 2).n == 12
        assert validate_family(1, 3, 3).n == 3

    def test_multiplicities_normalized(self):
        f = validate_family(4, 2, 1)
        assert (f.m1, f.m2) == (1, 2)

    def test_invalid_g(self):
        for g in (0, 5, 7, -1):
            with pytest.raises(FamilyError):
                validate_family(g, 1, 1)

    def test_nonpositive_multiplicity(self):
        with pytest.raises(FamilyError):
            validate_family(4, 0, 2)
        with pytest.raises(FamilyError):
            validate_family(2, 1, -3)

    def test_odd_g_needs_equal_multiplicities(self):
        with pytest.raises(FamilyError):
            validate_family(3, 1, 2)
        with pytest.raises(FamilyError):
            validate_family(1, 2, 3)

    def test_g3_multiplicity_whitelist(self):
        for m in (1, 2, 4, 8):
            assert validate_family(3, m, m).n == 3 * m
        for m in (3, 5, 6, 7, 16):
            with pytest.raises(FamilyError):
                validate_family(3, m, m)

    def test_g6_multiplicity_whitelist(self):
        assert validate_family(6, 1, 1).n == 6
        assert validate_family(6, 2, 2).n == 12
        with pytest.raises(FamilyError):
            validate_family(6, 1, 2)
        with pytest.raises(FamilyError):
            validate_family(6, 3, 3)


class TestInvariants:
    def test_minimal_maslov(self):
        assert minimal_maslov(validate_family(4, 2, 2)) == 4
        assert minimal_maslov(validate_family(3, 1, 1)) == 2
        assert minimal_maslov(validate_family(1, 5, 5)) == 10
        assert minimal_maslov(validate_family(6, 2, 2)) == 4

    def test_maslov_times_g_is_twice_n(self):
        for f in enumerate_families(12):
            assert minimal_maslov(f) * f.g == 2 * f.n

    def test_orientability_follows_maslov_parity(self):
        assert orientable(validate_family(4, 1, 1))       # maslov 2
        assert not orientable(validate_family(4, 1, 2))   # maslov 3
        assert not orientable(validate_family(2, 1, 2))   # maslov 3
        assert orientable(validate_family(3, 2, 2))       # maslov 4

    def test_collapse_step(self):
        assert collapse_step(validate_family(4, 1, 2)) == 2   # floor(7/3)
        assert collapse_step(validate_family(6, 2, 2)) == 3   # floor(13/4)
        assert collapse_step(validate_family(3, 2, 2)) == 1   # floor(7/4)
        assert collapse_step(validate_family(3, 1, 1)) == 2   # floor(4/2)


class TestCoveringTables:
    def test_g4_12_table(self):
        p = munzner_betti_N(validate_family(4, 1, 2))
        assert p.dims() == (1, 1, 1, 2, 1, 1, 1)

    def test_g4_22_table(self):
        p = munzner_betti_N(validate_family(4, 2, 2))
        assert p.dims() == (1, 0, 2, 0, 2, 0, 2, 0, 1)

    def test_g2_equal_multiplicities_merge(self):
        # m1 = m2 = 1 puts two classes in the middle degree
        p = munzner_betti_N(validate_family(2, 1, 1))
        assert p.dims() == (1, 2, 1)

    def test_g1_sphere(self):
        p = munzner_betti_N(validate_family(1, 3, 3))
        assert p.dims() == (1, 0, 0, 1)

    def test_total_betti_is_2g_below_g6(self):
        for f in enumerate_families(10):
            if f.g == 6:
                continue
            assert total_betti(munzner_betti_N(f)) == DimBound.exact(2 * f.g)

    def test_poincare_symmetry_below_g6(self):
        for f in enumerate_families(10):
            if f.g == 6:
                continue
            assert check_poincare(munzner_betti_N(f))

    def test_g6_m2_partial_table(self):
        p = munzner_betti_N(validate_family(6, 2, 2))
        assert p.bound(0) == DimBound.exact(1)
        assert p.bound(3) == DimBound.exact(0)
        assert p.bound(6) == DimBound.exact(2)
        assert p.bound(9) == DimBound.exact(0)
        assert p.bound(12) == DimBound.exact(1)
        assert not p.fully_known
        assert p.bound(1) == DimBound(0, None)

    def test_g6_m1_has_no_table(self):
        with pytest.raises(MissingTableError):
            munzner_betti_N(validate_family(6, 1, 1))


class TestGaussImageHomology:
    def test_m1_is_cited_sphere(self):
        h = gauss_image_betti_g3(validate_family(3, 1, 1))
        assert h.cited
        assert h.profile.dims() == (1, 0, 0, 1)

    @pytest.mark.parametrize("m", [2, 4, 8])
    def test_even_m_computed_sphere(self, m):
        h = gauss_image_betti_g3(validate_family(3, m, m))
        assert not h.cited
        dims = h.profile.dims()
        assert dims[0] == dims[3 * m] == 1
        assert sum(dims) == 2

    def test_rejects_other_g(self):
        with pytest.raises(FamilyError):
            gauss_image_betti_g3(validate_family(4, 2, 2))

    def test_cited_facts_by_family(self):
        assert len(cited_facts(validate_family(2, 1, 3))) == 1
        assert len(cited_facts(validate_family(3, 1, 1))) == 1
        assert cited_facts(validate_family(4, 2, 2)) == ()


class TestEnumeration:
    def test_bound_2_families(self):
        fams = [(f.g, f.m1, f.m2) for f in enumerate_families(2)]
        assert fams == [(1, 1, 1), (2, 1, 1), (3, 1, 1), (4, 1, 1), (6, 1, 1)]

    def test_sorted_and_unique(self):
        fams = enumerate_families(16)
        keys = [(f.g, f.m1, f.m2) for f in fams]
        assert keys == sorted(keys)
        assert len(keys) == len(set(keys))

    def test_bound_respected(self):
        assert all(f.m1 + f.m2 <= 9 for f in enumerate_families(9))

    def test_all_normalized(self):
        assert all(f.m1 <= f.m2 for f in enumerate_families(16))

    def test_bound_below_2_rejected(self):
        with pytest.raises(FamilyError):
            enumerate_families(1)


class TestGaussImageData:
    def test_g3_record_has_both_profiles(self):
        rec = gauss_image_data(validate_family(3, 2, 2))
        assert rec.covering_degree == 3
        assert rec.betti_N is not None and rec.betti_N.fully_known
        assert rec.betti_L is not None and rec.betti_L.dims() == (1, 0, 0, 0, 0, 0, 1)

    def test_g6_m1_record_has_no_tables(self):
        rec = gauss_image_data(validate_family(6, 1, 1))
        assert rec.betti_N is None
        assert rec.betti_L is None
        assert rec.maslov == 2 and rec.nu == 3

    def test_g4_record(self):
        rec = gauss_image_data(validate_family(4, 1, 3))
        assert rec.betti_L is None
        assert rec.maslov == 4
        assert rec.orientable

    def test_json_round_trip(self):
        for g, m1, m2 in [(1, 2, 2), (2, 1, 3), (3, 2, 2), (4, 1, 2), (6, 1, 1), (6, 2, 2)]:
            rec = gauss_image_data(validate_family(g, m1, m2))
            assert data_from_json(data_to_json(rec)) == rec

    def test_family_json_round_trip(self):
        f = validate_family(4, 3, 5)
        assert family_from_json(family_to_json(f)) == f

    def test_family_json_checks_consistency(self):
        with pytest.raises(FamilyError):
            family_from_json({"g": 4, "m1": 1, "m2": 2, "n": 7})

    def test_family_json_rejects_missing_keys(self):
        with pytest.raises(FamilyError):
            family_from_json({"g": 4, "m1": 1})
