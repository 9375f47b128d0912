import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from palinkit import __version__
from palinkit.service.app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    data = client.get("/health").json()
    assert data == {"status": "ok", "version": __version__}


class TestPL:
    def test_word(self, client):
        data = client.post("/pl", json={"word": "011001"}).json()
        assert data["pl"] == 3
        assert data["factorizations"] is None

    def test_empty_word(self, client):
        assert client.post("/pl", json={"word": ""}).json()["pl"] == 0

    def test_all_mpf(self, client):
        data = client.post("/pl", json={"word": "011001", "all_mpf": True}).json()
        assert data["factorizations"] == [["0110", "0", "1"], ["0", "1", "1001"]]

    def test_factorize_single(self, client):
        data = client.post("/pl", json={"word": "011001", "factorize": True}).json()
        assert data["factorizations"] == [["0110", "0", "1"]]

    def test_family_input(self, client):
        data = client.post("/pl", json={"family": "periodic:01", "length": 10}).json()
        assert data["pl"] == 2

    def test_rejects_both_forms(self, client):
        response = client.post(
            "/pl", json={"word": "01", "family": "periodic:01", "length": 4}
        )
        assert response.status_code == 422

    def test_rejects_family_without_length(self, client):
        assert client.post("/pl", json={"family": "periodic:01"}).status_code == 422

    def test_bad_family_is_usage_error(self, client):
        response = client.post("/pl", json={"family": "periodic:", "length": 4})
        assert response.status_code == 400
        assert response.json()["detail"]["kind"] == "usage"


class TestProfile:
    def test_alternating(self, client):
        data = client.post(
            "/profile", json={"family": "periodic:01", "length": 10}
        ).json()
        assert data["pl"][0] == 0 and len(data["pl"]) == 11
        assert max(data["running_max"]) <= 2
        assert data["running_max"] == [max(data["pl"][: i + 1]) for i in range(11)]


def test_generate(client):
    data = client.post(
        "/generate", json={"family": "morphic:0:01,1:10", "length": 8}
    ).json()
    assert data == {"word": "01101001", "length": 8}


class TestOmega:
    def test_scan_members_schema(self, client):
        data = client.post(
            "/omega/scan", json={"word": "a", "k": 1}
        ).json()
        assert data["member_count"] == 1
        assert data["members"][0] == {
            "start": 1,
            "end": 1,
            "length": 1,
            "count_with_eps": 2,
            "count_without_eps": 1,
            "threshold_num": 1,
            "threshold_den_power": 1,
        }

    def test_scan_reports_pl_cover_flag(self, client):
        low = client.post(
            "/omega/scan", json={"family": "periodic:012", "length": 60, "k": 3}
        ).json()
        assert low["k_covers_factor_pl"] is False
        fine = client.post(
            "/omega/scan", json={"family": "periodic:01", "length": 60, "k": 2}
        ).json()
        assert fine["k_covers_factor_pl"] is True
        big = client.post(
            "/omega/scan",
            json={"family": "periodic:01", "length": 300, "k": 2, "max_scan_length": 400},
        ).json()
        assert big["k_covers_factor_pl"] is None  # not computed beyond 200

    def test_scan_cap_is_resource_error(self, client):
        response = client.post(
            "/omega/scan",
            json={"family": "periodic:01", "length": 100, "k": 2, "max_scan_length": 10},
        )
        assert response.status_code == 413
        assert response.json()["detail"]["kind"] == "resource"

    def test_hunt_found(self, client):
        data = client.post(
            "/omega/hunt",
            json={"family": "periodic:01", "length": 200, "k": 2, "j": 20},
        ).json()
        assert data["found"] is True
        assert data["period"] == 2
        assert data["exponent"] >= 20
        assert {data["a"], data["b"]} == {"0", "1"}

    def test_hunt_not_found(self, client):
        data = client.post(
            "/omega/hunt",
            json={"family": "morphic:0:01,1:10", "length": 200, "k": 4, "j": 3},
        ).json()
        assert data == {
            "found": False,
            "a": None,
            "b": None,
            "exponent": None,
            "period": None,
            "host": None,
            "host_start": None,
            "host_end": None,
        }


class TestDelta:
    def test_check_valid(self, client):
        data = client.post(
            "/delta/check", json={"u": "a", "v": "b", "d": "a", "n": 3}
        ).json()
        assert data["ok"] is True and data["pl_u"] == 1

    def test_check_invalid_exponent(self, client):
        data = client.post(
            "/delta/check", json={"u": "a", "v": "b", "d": "a", "n": 2}
        ).json()
        assert data["ok"] is False
        assert data["conditions"]["n_at_least_3_pl_u"] is False

    def test_empty_v_defaults(self, client):
        data = client.post("/delta/check", json={"u": "a", "d": "a", "n": 3}).json()
        assert data["ok"] is True


class TestVerify:
    def test_passing_suite(self, client):
        data = client.post(
            "/verify", json={"suite": "concat-inequalities", "max_len": 6}
        ).json()
        assert data["passed"] is True and data["failures"] == []

    def test_failing_suite_reports_counterexample(self, client):
        data = client.post(
            "/verify",
            json={"suite": "lemma-central", "max_d": 4, "max_v": 3, "n_slack": 2},
        ).json()
        assert data["passed"] is False
        assert data["failures"][0]["central_witness_ok"] is False

    def test_unknown_suite(self, client):
        response = client.post("/verify", json={"suite": "nope"})
        assert response.status_code == 400

    def test_over_cap_is_resource(self, client):
        response = client.post(
            "/verify", json={"suite": "oracle-equivalence", "max_len": 19}
        )
        assert response.status_code == 413
