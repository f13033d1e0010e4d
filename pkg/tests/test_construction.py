import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import bhattacharyya_by_path
from polarcat.construction import (
    bhattacharyya_profile,
    construct,
    design_snr_to_z0,
    select_frozen_set,
)


def test_one_stage():
    assert bhattacharyya_profile(1, 0.5).z.tolist() == [0.75, 0.25]


def test_two_stages():
    assert bhattacharyya_profile(2, 0.5).z.tolist() == [0.9375, 0.5625, 0.4375, 0.0625]


def test_three_stages_best_four():
    z = bhattacharyya_profile(3, 0.5).z
    assert sorted(np.argsort(z)[:4].tolist()) == [3, 5, 6, 7]


@pytest.mark.parametrize("n", [1, 3, 6, 9])
@pytest.mark.parametrize("z0", [0.5, 0.1, 0.9])
def test_matches_path_oracle(n, z0):
    z = bhattacharyya_profile(n, z0).z
    np.testing.assert_allclose(z, bhattacharyya_by_path(n, z0), rtol=0, atol=1e-15)


def test_paper_frozen_set():
    assert select_frozen_set(bhattacharyya_profile(3, 0.5), 4).frozen == (0, 1, 2, 4)


def test_full_rate_and_small():
    assert select_frozen_set(bhattacharyya_profile(3, 0.5), 8).frozen == ()
    assert select_frozen_set(bhattacharyya_profile(2, 0.5), 2).frozen == (0, 1)


def test_tie_break_freezes_lower_index():
    class Flat:
        z = np.full(8, 0.3)
    assert select_frozen_set(Flat, 5).frozen == (0, 1, 2)


def test_domain_errors():
    with pytest.raises(ValueError):
        bhattacharyya_profile(3, 0.0)
    with pytest.raises(ValueError):
        bhattacharyya_profile(3, 1.0)
    with pytest.raises(ValueError):
        bhattacharyya_profile(0, 0.5)
    with pytest.raises(ValueError):
        select_frozen_set(bhattacharyya_profile(3, 0.5), 0)
    with pytest.raises(ValueError):
        select_frozen_set(bhattacharyya_profile(3, 0.5), 9)
    with pytest.raises(ValueError):
        construct(3, 4, z0=0.5, design_snr_db=1.0)


@given(st.floats(1e-6, 1 - 1e-6))
def test_split_identities(z):
    up, low = 2 * z - z * z, z * z
    assert up + low == pytest.approx(2 * z, abs=1e-15)
    assert low <= z <= up


def test_profile_in_unit_interval():
    z = bhattacharyya_profile(10, 0.5).z
    assert ((z >= 0) & (z <= 1)).all()


def test_design_snr_mapping():
    assert design_snr_to_z0(0.0) == pytest.approx(np.exp(-1.0))
    a = construct(8, 128, design_snr_db=2.0)
    b = construct(8, 128, z0=design_snr_to_z0(2.0))
    assert a == b


def test_deterministic():
    assert construct(10, 512) == construct(10, 512)
