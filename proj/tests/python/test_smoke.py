import pytest

import rootfold


def test_presets_listed():
    names = rootfold.preset_names()
    assert "split-A2" in names
    assert "tower-u3" in names


def test_verify_small_preset():
    report = rootfold.verify(["split-A2"], threads=1)
    assert report["exit_code"] == 0
    assert report["summary"]["fail"] == 0
    assert report["presets"][0]["preset"] == "split-A2"


def test_unitary_parameters():
    assert rootfold.hecke_parameters("su3-unramified") == {"s1": 3, "s0": 1}


def test_kl_polynomial():
    assert rootfold.kl_polynomial("su3-unramified", [2, 2], [0, 0]) == "v^4 - v^2 + 1"


def test_counts():
    assert rootfold.weyl_dimension("E6", "sc", [1, 0, 0, 0, 0, 0]) == 27
    assert rootfold.admissible_size("split-A1", [1]) == 3


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        rootfold.kl_polynomial("no-such-preset", [0], [0])
    with pytest.raises(ValueError):
        rootfold.kl_polynomial("su3-unramified", [1, 0], [0, 0])
