import pytest

from Certifier.database import (
    get_certification, get_certification_history, graph_digest, init_db, record_certification,
)
from Certifier.GraphCore import heawood, petersen
from Certifier.StructureChecks import certify_heawood


@pytest.fixture(scope="module")
def petersen_report():
    return certify_heawood(petersen())


@pytest.fixture
def db_path(tmp_path):
    return tmp_path / "runs" / "certifier.db"


def test_init_db_is_idempotent(db_path):
    init_db(db_path)
    init_db(db_path)
    assert db_path.exists()
    assert get_certification_history(db_path=db_path) == []


def test_graph_digest_depends_on_edges_only():
    g = heawood()
    assert graph_digest(g) == graph_digest(heawood())
    assert graph_digest(g) != graph_digest(petersen())
    assert len(graph_digest(g)) == 64


def test_record_and_fetch(db_path, petersen_report):
    run_id = record_certification(petersen_report, "petersen", petersen(), db_path=db_path)
    run = get_certification(run_id, db_path=db_path)
    assert run["graph_name"] == "petersen"
    assert run["passed"] is False
    assert run["first_failure"] == "vertex count"
    assert run["graph_digest"] == graph_digest(petersen())
    assert run["report"] == petersen_report.to_dict()
    assert "elapsed_ms" not in run["report"]


def test_history_is_newest_first(db_path, petersen_report):
    ids = [record_certification(petersen_report, f"run{i}", petersen(), db_path=db_path) for i in range(3)]
    history = get_certification_history(limit=2, db_path=db_path)
    assert [run["id"] for run in history] == ids[:0:-1]
    assert "report" not in history[0]


def test_unknown_run_is_none(db_path):
    assert get_certification(12345, db_path=db_path) is None
