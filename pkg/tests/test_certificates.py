"""Round-trip and strictness of the certificate JSON format."""

import dataclasses
import json
from fractions import Fraction

import pytest

from ellspec.certificates import (
    certificate_from_dict,
    certificate_to_dict,
    divisor_from_json,
    divisor_to_json,
    dumps_certificates,
    load_certificates,
    loads_certificates,
    rational_from_str,
    rational_to_str,
    save_certificates,
)
from ellspec.errors import SchemaError, TamperError
from ellspec.lattice import Surface, named_class
from ellspec.solver import SearchBounds, solve, verify_certificate

SMALL_BOUNDS = SearchBounds(u_abs=4, x_abs=8, z_min=0, z_max=2, d_abs=12, a_max=1)


@pytest.fixture(scope="module")
def certs():
    found = solve(3, 6, SMALL_BOUNDS)
    assert found
    return found


# === scalars ===


def test_rational_strings_canonical():
    assert rational_to_str(Fraction(-3, 6)) == "-1/2"
    assert rational_to_str(Fraction(4)) == "4"
    assert rational_from_str("-1/2") == Fraction(-1, 2)
    assert rational_from_str("0") == 0


@pytest.mark.parametrize("bad", ["2/4", "1.5", " 1", "1/-2", "-0", "+3", 7, None])
def test_rational_strings_reject_noncanonical(bad):
    with pytest.raises(SchemaError):
        rational_from_str(bad)


# === divisor classes ===


def test_divisor_round_trip():
    d = named_class(Surface.BPRIME, "xi") * Fraction(5, 3)
    assert divisor_from_json(divisor_to_json(d)) == d


def test_divisor_rejects_malformed():
    good = divisor_to_json(named_class(Surface.B, "f"))
    with pytest.raises(SchemaError):
        divisor_from_json({**good, "surface": "A"})
    with pytest.raises(SchemaError):
        divisor_from_json({**good, "coeffs": good["coeffs"][:9]})
    with pytest.raises(SchemaError):
        divisor_from_json({**good, "extra": 1})
    with pytest.raises(SchemaError):
        divisor_from_json([])


# === whole certificates ===


def test_certificate_dict_round_trip(certs):
    for cert in certs:
        assert certificate_from_dict(certificate_to_dict(cert)) == cert


def test_single_certificate_serializes_as_object(certs):
    payload = json.loads(dumps_certificates(certs[:1]))
    assert payload["version"] == "1"
    assert "certificates" not in payload
    assert loads_certificates(dumps_certificates(certs[:1])) == certs[:1]


def test_many_certificates_serialize_as_array(certs):
    text = dumps_certificates(certs)
    payload = json.loads(text)
    assert [c["k"] for c in payload["certificates"]] == [c.k for c in certs]
    assert loads_certificates(text) == list(certs)


def test_file_round_trip(tmp_path, certs):
    path = tmp_path / "certs.json"
    save_certificates(path, certs)
    assert load_certificates(path) == list(certs)


def test_loaded_certificate_verifies(certs):
    reloaded = certificate_from_dict(certificate_to_dict(certs[0]))
    assert verify_certificate(reloaded).all_pass


def test_doctored_file_fails_verification(certs):
    obj = certificate_to_dict(certs[0])
    for entry in obj["report"]["entries"]:
        if entry["name"] == "S_s":
            entry["value"] = "-14"
    doctored = certificate_from_dict(obj)
    with pytest.raises(TamperError):
        verify_certificate(doctored)


# === strict loading ===


def test_rejects_wrong_version(certs):
    obj = certificate_to_dict(certs[0])
    obj["version"] = "2"
    with pytest.raises(SchemaError):
        certificate_from_dict(obj)


def test_rejects_missing_field(certs):
    obj = certificate_to_dict(certs[0])
    del obj["params"]
    with pytest.raises(SchemaError):
        certificate_from_dict(obj)


def test_rejects_non_integer_scalars(certs):
    obj = certificate_to_dict(certs[0])
    obj["u"] = "minus three"
    with pytest.raises(SchemaError):
        certificate_from_dict(obj)
    obj = certificate_to_dict(certs[0])
    obj["z"] = True
    with pytest.raises(SchemaError):
        certificate_from_dict(obj)


def test_rejects_row_param_mismatch(certs):
    obj = certificate_to_dict(certs[0])
    obj["params"]["k2"] = 2
    obj["params"]["k3"] = 6
    with pytest.raises(SchemaError):
        certificate_from_dict(obj)


def test_rejects_noncanonical_rational_in_coeffs(certs):
    obj = certificate_to_dict(certs[0])
    obj["params"]["l2"]["coeffs"][0] = "2/4"
    with pytest.raises(SchemaError):
        certificate_from_dict(obj)


def test_rejects_bad_json_text():
    with pytest.raises(SchemaError):
        loads_certificates("{not json")
    with pytest.raises(SchemaError):
        loads_certificates('{"version": "1", "certificates": 3}')


def test_null_z_round_trips(certs):
    cert = dataclasses.replace(certs[0], z=None)
    again = certificate_from_dict(certificate_to_dict(cert))
    assert again.z is None
    assert again == cert
