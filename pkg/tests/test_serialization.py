import json

import numpy as np
import numpy.testing as npt
import pytest

from logent.amplitude_damping import coupling_model
from logent.serialization import (distribution_from_json, dump_json,
                                  ensemble_from_json, load_json,
                                  matrix_from_json, matrix_to_json,
                                  model_from_json, model_to_json,
                                  partition_from_json)


def test_matrix_round_trip_is_lossless():
    rng = np.random.default_rng(4)
    m = rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2))
    # through the dict, then through actual JSON text
    npt.assert_array_equal(matrix_from_json(matrix_to_json(m)), m)
    npt.assert_array_equal(matrix_from_json(json.loads(json.dumps(matrix_to_json(m)))), m)


def test_matrix_rejects_wrong_data_length():
    with pytest.raises(ValueError, match="exactly rows\\*cols=4"):
        matrix_from_json({"rows": 2, "cols": 2, "data": [[1, 0], [0, 0], [0, 0]]})
    with pytest.raises(ValueError, match="exactly rows\\*cols=4"):
        matrix_from_json({"rows": 2, "cols": 2,
                          "data": [[1, 0], [0, 0], [0, 0], [0, 0], [9, 9]]})


def test_matrix_rejects_malformed_entries():
    with pytest.raises(ValueError, match="missing key"):
        matrix_from_json({"rows": 1, "cols": 1})
    with pytest.raises(ValueError, match=r"data\[0\]"):
        matrix_from_json({"rows": 1, "cols": 1, "data": [[1.0]]})
    with pytest.raises(ValueError, match=r"data\[0\]"):
        matrix_from_json({"rows": 1, "cols": 1, "data": [[True, 0.0]]})
    with pytest.raises(ValueError, match=r"data\[1\]"):
        matrix_from_json({"rows": 1, "cols": 2, "data": [[1.0, 0.0], ["x", 0.0]]})
    with pytest.raises(ValueError, match="positive integers"):
        matrix_from_json({"rows": 0, "cols": 1, "data": []})
    with pytest.raises(ValueError, match="JSON object"):
        matrix_from_json([[1, 0]])


def test_model_round_trip():
    model = coupling_model(0.7)
    back = model_from_json(json.loads(json.dumps(model_to_json(model))))
    npt.assert_array_equal(back.unitary, model.unitary)
    assert (back.dim_s, back.dim_e, back.env_init) == (2, 2, 0)


def test_model_env_init_defaults_to_zero():
    obj = model_to_json(coupling_model(0.3))
    del obj["env_init"]
    assert model_from_json(obj).env_init == 0


def test_model_rejects_bad_fields():
    obj = model_to_json(coupling_model(0.3))
    obj["dim_s"] = "2"
    with pytest.raises(ValueError, match="dim_s"):
        model_from_json(obj)
    with pytest.raises(ValueError, match="missing key"):
        model_from_json({"dim_s": 2, "dim_e": 2})


def test_partition_from_json():
    assert partition_from_json({"blocks": [[0, 1], [2]]}) == [[0, 1], [2]]
    with pytest.raises(ValueError, match="blocks"):
        partition_from_json({})
    with pytest.raises(ValueError, match="not an integer"):
        partition_from_json({"blocks": [[0.5]]})


def test_ensemble_from_json():
    obj = {"weights": [0.5, 0.5],
           "states": [matrix_to_json(np.diag([1.0, 0.0]).astype(complex)),
                      matrix_to_json(np.diag([0.0, 1.0]).astype(complex))]}
    ens = ensemble_from_json(obj)
    assert len(ens) == 2 and ens.dim == 2
    with pytest.raises(ValueError, match="missing key"):
        ensemble_from_json({"weights": [1.0]})


def test_distribution_from_json():
    npt.assert_array_equal(distribution_from_json({"probs": [0.25, 0.75]}), [0.25, 0.75])
    with pytest.raises(ValueError, match="probs"):
        distribution_from_json({"weights": [1.0]})
    with pytest.raises(ValueError, match="not a number"):
        distribution_from_json({"probs": [0.5, "0.5"]})


def test_dump_and_load_json(tmp_path):
    path = tmp_path / "m.json"
    m = np.array([[0.5 + 0.25j]], dtype=complex)
    dump_json(matrix_to_json(m), str(path))
    npt.assert_array_equal(matrix_from_json(load_json(str(path))), m)
