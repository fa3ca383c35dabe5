from sqlalchemy import create_engine

from ledger import LedgerManager


def test_record_and_read_back(tmp_path):
    manager = LedgerManager(f"sqlite:///{tmp_path / 'ledger.db'}")
    assert manager.record("chi", "pinched_torus", {"direct": 2, "stratumwise": 2}, perversity="zero")
    assert manager.record("ih", "susp_torus2", {"dims": [1, 0, 2, 1]}, perversity="top", exact=False)
    rows = manager.recent()
    assert [row["command"] for row in rows] == ["ih", "chi"]
    assert rows[0]["exact"] is False
    assert rows[1]["result"] == {"direct": 2, "stratumwise": 2}
    assert [row["space"] for row in manager.recent(command="chi")] == ["pinched_torus"]


def test_broken_database_url_is_not_fatal():
    manager = LedgerManager("notadialect://nowhere")
    assert manager.record("ih", "point", {"dims": [1]}) is False
    assert manager.recent() == []


def test_postgresql_urls_go_through_psycopg2():
    engine = create_engine("postgresql+psycopg2://ihx@127.0.0.1:1/ihx")
    assert engine.dialect.driver == "psycopg2"


def test_unreachable_postgresql_ledger_is_not_fatal():
    manager = LedgerManager("postgresql+psycopg2://ihx@127.0.0.1:1/ihx")
    assert manager.record("chi", "pinched_torus", {"direct": 2}) is False
