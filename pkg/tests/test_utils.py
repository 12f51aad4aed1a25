import io
import json
from fractions import Fraction

import pytest

from hilbq.base import GenPartition, ModelError, preset
from hilbq.closedforms import ConstantsTable
from hilbq.fock import basis_vector, vacuum
from hilbq.series import ZQSeries, block, euler_pow
from hilbq.utils import (from_dict, load, load_path, resolve_models,
    series_to_json, series_from_json, dump_series, dump_table, dump_reports,
    format_series, format_vector, pformat)
from hilbq.verify import Report


MODEL = {"r": 2, "P": [[1, 0], ["0", "-1"]], "K": [0, 0],
    "lineBundles": {"L1": [1, 0], "L2": ["1/2", 1]}, "name": "custom-2"}


### Loading ###


def test_load_model_stream():
    m = load(io.StringIO(json.dumps(MODEL)))
    assert (m.name, m.r, m.chi) == ("custom-2", 2, 4)
    assert m.line("L2").c2 == (Fraction(1, 2), Fraction(1))


def test_load_path_uses_file_stem(tmp_path):
    data = dict(MODEL)
    del data["name"]
    path = tmp_path / "my-surface.json"
    path.write_text(json.dumps(data))
    assert load_path(str(path)).name == "my-surface"


@pytest.mark.parametrize("data", [
    {"r": 1, "P": [[0]]},
    {"r": 2, "P": [[1]]},
    {"P": [[1]], "K": [1, 1]},
    {"P": [[1]], "genus": 0},
    {"P": [["0.5"]]},
    {"K": [0]},
    [1, 2],
])
def test_malformed_models(data):
    with pytest.raises(ModelError):
        from_dict(data)


def test_invalid_json():
    with pytest.raises(ModelError):
        load(io.StringIO("{not json"))


def test_missing_file(tmp_path):
    with pytest.raises(ModelError):
        load_path(str(tmp_path / "absent.json"))


def test_resolve_models_mixes_presets_and_files(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps(MODEL))
    models = resolve_models(f"minimal, kpos:kk=3, {path}")
    assert [m.name for m in models] == ["minimal", "kpos", "custom-2"]
    K = models[1].canonical()
    assert models[1].pair(K, K) == 3
    with pytest.raises(ModelError):
        resolve_models(" , ")


### Export ###


def test_series_records_are_sorted():
    s = ZQSeries({(2, (1,)): Fraction(-1, 3), (0, (0,)): 1, (2, (-1,)): 4},
        qmax=3, nz=1)
    assert series_to_json(s) == [
        {"q": 0, "z": [0], "c": "1/1"},
        {"q": 2, "z": [-1], "c": "4/1"},
        {"q": 2, "z": [1], "c": "-1/3"}]


def test_series_json_round_trip():
    s = euler_pow(-3, 6) * Fraction(5, 7)
    f = io.StringIO()
    dump_series(s, f)
    assert series_from_json(json.loads(f.getvalue()), qmax=6) == s


def test_series_csv():
    f = io.StringIO()
    dump_series(block(1, 1, 1, zstep=1, qmax=2), f, "csv")
    assert f.getvalue() == "q,z,c\n1,1,1/1\n2,1,1/1\n"


def test_table_export_is_deterministic():
    t = ConstantsTable()
    t.set(("b", 5, 0), Fraction(2, 5), "computed")
    t.set(("b", 1, 1), Fraction(3, 2), "seeded")
    a, b = io.StringIO(), io.StringIO()
    dump_table(t, a, "csv")
    dump_table(t, b, "csv")
    assert a.getvalue() == b.getvalue() == (
        "family,i,j,value,provenance\n"
        "b,1,1,3/2,seeded\n"
        "b,5,0,2/5,computed\n")


def test_unknown_format():
    with pytest.raises(ValueError):
        dump_series(euler_pow(1, 2), io.StringIO(), "xml")


def test_dump_reports():
    f = io.StringIO()
    dump_reports([Report("gottsche", "minimal", 6, "pass", 1)], f)
    assert json.loads(f.getvalue())[0]["status"] == "pass"


### Printing ###


def test_format_series():
    s = ZQSeries({(0, ()): 1, (1, ()): -2, (3, ()): Fraction(1, 2)}, qmax=3)
    assert format_series(s) == "1 - 2*q + 1/2*q^3 + O(q^4)"
    assert str(ZQSeries(qmax=2)) == "0 + O(q^3)"


def test_format_series_with_z():
    s = ZQSeries.monomial(-1, 2, (1, -2), qmax=2)
    assert format_series(s) == "-q^2*z1*z2^-2 + O(q^3)"


def test_format_vector():
    v = basis_vector(((1, 2),)) * 3 - vacuum()
    assert format_vector(v) == "-|0> + 3*a_{-1}(b2)|0>"


def test_pformat_dispatch():
    assert pformat(euler_pow(1, 2), width=20) == \
        "ZQSeries(1 - q - q^2 + O(q^3), nz=0)"
