import json
import pathlib

import pytest

from hwpoly import cli
from hwpoly.verify import CertificationError

SCHEMA_PATH = pathlib.Path(__file__).resolve().parent.parent / "docs" / "cli_schema.json"


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def run_doc(capsys, *argv):
    rc, out, err = run(capsys, *argv)
    assert rc == 0, err
    return json.loads(out)


class TestMinpoly:
    def test_gl_fast_document(self, capsys):
        doc = run_doc(capsys, "minpoly", "gl", "3", "2,1,0")
        assert set(doc) == {"algebra", "weight", "l", "roots",
                            "polynomial", "mode", "certified"}
        assert doc["algebra"] == "gl_3"
        assert doc["l"] == ["4", "2", "0"]
        assert doc["roots"] == [["0", 1], ["2", 1], ["4", 1]]
        assert doc["mode"] == "fast"
        assert doc["certified"] is False

    def test_schema_validates(self, capsys):
        jsonschema = pytest.importorskip("jsonschema")
        schema = json.loads(SCHEMA_PATH.read_text())
        for argv in (("minpoly", "gl", "2", "3,-1/2"),
                     ("minpoly", "sp", "1", "1"),
                     ("minpoly", "o", "3", "1", "--mode", "certified")):
            jsonschema.validate(run_doc(capsys, *argv), schema)

    def test_certified_odd_orthogonal(self, capsys):
        doc = run_doc(capsys, "minpoly", "o", "3", "1", "--mode", "certified")
        assert doc["roots"] == [["-1", 1], ["1", 1], ["2", 1]]
        assert doc["certified"] is True

    def test_output_is_deterministic(self, capsys):
        rc1, out1, _ = run(capsys, "minpoly", "gl", "2", "4,1")
        rc2, out2, _ = run(capsys, "minpoly", "gl", "2", "4,1")
        assert rc1 == rc2 == 0
        assert out1 == out2

    def test_json_flag_writes_file(self, capsys, tmp_path):
        target = tmp_path / "doc.json"
        rc, out, _ = run(capsys, "minpoly", "gl", "2", "5,0",
                         "--json", str(target))
        assert rc == 0
        assert out == ""
        doc = json.loads(target.read_text())
        assert doc["l"] == ["6", "0"]


class TestShuffleCommand:
    def test_worked_example(self, capsys):
        doc = run_doc(capsys, "shuffle", "gl", "3,3,2,4,1,3,2,2,1")
        assert [p["terms"] for p in doc["parts"]] == [
            ["3", "2", "1"], ["3", "2"], ["4", "3", "2", "1"]]
        assert doc["parity"] is None

    def test_mirror_carries_parity(self, capsys):
        doc = run_doc(capsys, "shuffle", "o_odd", "1/2")
        assert doc["epsilon"] == "1/2"
        assert doc["parity"] == "odd"


class TestExitCodes:
    def test_bad_weight_is_usage_error(self, capsys):
        rc, _, err = run(capsys, "minpoly", "gl", "2", "1,banana")
        assert rc == 1
        assert "cannot parse weight" in err

    def test_unknown_command(self, capsys):
        rc, _, err = run(capsys, "frobnicate")
        assert rc == 1
        assert err != ""

    def test_wrong_weight_length(self, capsys):
        rc, _, err = run(capsys, "minpoly", "gl", "3", "1,0")
        assert rc == 1

    def test_ppdiag_rejects_gl(self, capsys):
        rc, _, err = run(capsys, "ppdiag", "gl", "2", "1,0")
        assert rc == 1

    def test_certification_failure_is_exit_two(self, capsys, monkeypatch):
        def boom(spec, lam, K=None):
            raise CertificationError("forced")
        monkeypatch.setattr(cli, "certified_minimal_polynomial", boom)
        rc, _, err = run(capsys, "certify", "gl", "2", "1,0")
        assert rc == 2
        assert "certification failure" in err


class TestOtherCommands:
    def test_certify_reports_witnesses(self, capsys):
        doc = run_doc(capsys, "certify", "sp", "1", "0")
        assert doc["certified"] is True
        assert len(doc["witnesses"]) == len(doc["roots"])
        assert all(w["residual"] != "0" for w in doc["witnesses"])

    def test_resolvent_respects_env_truncation(self, capsys, monkeypatch):
        monkeypatch.setenv("HWPOLY_K", "7")
        doc = run_doc(capsys, "resolvent", "gl", "2", "1,0")
        assert doc["K"] == 7
        assert len(doc["entries"]) == 2

    def test_relcheck_exact(self, capsys):
        doc = run_doc(capsys, "relcheck", "gl", "2", "2/3,-1", "--K", "5")
        assert all(r["exact"] for r in doc["reports"])

    def test_parity_even_example(self, capsys):
        doc = run_doc(capsys, "parity", "o", "4", "1,1")
        assert doc["parity"] == "even"

    def test_oracle_matches_minpoly(self, capsys):
        oracle_doc = run_doc(capsys, "oracle", "gl", "2", "2,1")
        fast_doc = run_doc(capsys, "minpoly", "gl", "2", "2,1")
        assert oracle_doc["polynomial"] == fast_doc["polynomial"]
        assert oracle_doc["dim"] == 2

    def test_howe_divisibility_family(self, capsys):
        doc = run_doc(capsys, "howe", "1", "2", "--rmax", "2", "--dmax", "2")
        assert doc["conv"]["passed"] and doc["transfer"]["passed"]
        assert [row["divisible"] for row in doc["divisibility"]] == [True] * 3

    def test_poset_orders_by_divisibility(self, capsys):
        doc = run_doc(capsys, "poset", "gl", "1", "2;2", "--K", "6")
        assert len(doc["entries"]) == 1
