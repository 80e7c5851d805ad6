"""Certificate documents: round-trips and verdict recomputation on load."""

import pytest

from catalemma import certrecords as cr
from catalemma import summation as sm


@pytest.fixture(scope="module")
def gosper_record(paper_identity1_term):
    cert = sm.gosper(sm.hyperterm(paper_identity1_term))
    assert isinstance(cert, sm.GosperCertificate)
    return cr.record_from_gosper("identity1", paper_identity1_term, cert)


@pytest.fixture(scope="module")
def zeilberger_record(paper_identity3_term):
    F = sm.bivariate_hyperterm(paper_identity3_term, "m")
    rec = sm.zeilberger(F, 2, rhs_param_samples={"l": [41, 43, 47]})
    assert isinstance(rec, sm.TelescopedRecurrence)
    return cr.record_from_zeilberger(
        "identity3", paper_identity3_term, "m", rec, {"l": [41, 43]}
    )


class TestGoldenDocument:
    def test_exact_text_form(self, gosper_record):
        # canonical fractions, expanded monomials in degree-descending order
        assert cr.to_text(gosper_record) == (
            "catalemma-certificate: v1\n"
            "identity: identity1\n"
            "kind: gosper\n"
            "variable: i\n"
            "parameters: s\n"
            "term: (-1)^i*catalan(i)*binomial(i+1, s-i)\n"
            "certificate: (((-4)/(s^2 + s))*i^2 + ((4*s - 2)/(s^2 + s))*i"
            " + (-s + 1)/(s + 1))\n"
            "verdict: verified\n"
        )


class TestRoundTrips:
    def test_text_round_trip(self, gosper_record):
        text = cr.to_text(gosper_record)
        again = cr.from_text(text)
        assert again == gosper_record

    def test_json_round_trip(self, zeilberger_record):
        payload = cr.to_json(zeilberger_record)
        again = cr.from_json(payload)
        assert again == zeilberger_record

    def test_text_round_trip_zeilberger(self, zeilberger_record):
        assert cr.from_text(cr.to_text(zeilberger_record)) == zeilberger_record

    def test_rejects_foreign_documents(self):
        with pytest.raises(ValueError):
            cr.from_text("just some file\n")


class TestReverification:
    def test_fresh_records_verify(self, gosper_record, zeilberger_record):
        assert gosper_record.verdict == "verified"
        assert zeilberger_record.verdict == "verified"

    def test_verdict_is_recomputed_not_trusted(self, gosper_record):
        lying = cr.from_text(
            cr.to_text(gosper_record).replace("verdict: verified", "verdict: failed")
        )
        assert lying.verdict == "failed"  # as stored ...
        assert cr.reverify(lying).verdict == "verified"  # ... but recomputation wins

    def test_tampered_certificate_fails(self, gosper_record):
        tampered = cr.from_text(
            cr.to_text(gosper_record).replace("i^2", "i^3", 1)
        )
        assert cr.reverify(tampered).verdict == "failed"

    def test_tampered_coefficients_fail(self, zeilberger_record):
        text = cr.to_text(zeilberger_record)
        assert "coefficients: -m - 1; m + 2" in text
        tampered = cr.from_text(text.replace("-m - 1; m + 2", "-m - 2; m + 2"))
        assert cr.reverify(tampered).verdict == "failed"

    def test_save_load_recomputes(self, tmp_path, zeilberger_record):
        path = tmp_path / "record.cert"
        cr.save(zeilberger_record, str(path))
        loaded = cr.load(str(path))
        assert loaded.verdict == "verified"
        assert loaded.coefficients == zeilberger_record.coefficients

    def test_save_load_json(self, tmp_path, gosper_record):
        path = tmp_path / "record.json"
        cr.save(gosper_record, str(path), fmt="json")
        loaded = cr.load(str(path))
        assert loaded.verdict == "verified"

    def test_rebuild_recurrence_matches(self, zeilberger_record, paper_identity3_term):
        rebuilt = cr.rebuild_recurrence(zeilberger_record)
        F = sm.bivariate_hyperterm(paper_identity3_term, "m")
        assert sm.verify_zeilberger(F, rebuilt, param_samples={"l": [31]})
