"""Test suite for the model module."""

import pytest
import sqlalchemy as sql

from ugrid.model import (
    GridRecord,
    ReportRecord,
    get_reports,
    grid_key,
    insert_grids,
    insert_report,
    open_store,
)
from ugrid.report import Report, grid_payload

# pylint: disable=W0621


@pytest.fixture
def sessions(tmp_path):
    """A session factory on a fresh database."""
    return open_store(f"sqlite:///{tmp_path / 'reports.db'}")


def test_grid_key(trefoil):
    """Should key grids by their permutations."""
    assert grid_key(trefoil) == "O:0,4,3,2,1|X:3,2,1,0,4"


def test_insert_grids(sessions, trefoil, hopf):
    """Should merge grids by key."""
    with sessions.begin() as session:
        insert_grids(session, [{"name": "trefoil", "grid": trefoil, "components": 1}])
        insert_grids(
            session,
            [
                {"name": "trefoil", "grid": trefoil, "components": 1},
                {"name": "hopf", "grid": hopf, "components": 2},
            ],
        )
    with sessions.begin() as session:
        assert session.scalar(sql.select(sql.func.count()).select_from(GridRecord)) == 2
        record = session.get(GridRecord, grid_key(hopf))
        assert record.o_rows == [2, 1, 0, 3]
        assert record.index == 4


def test_insert_report(sessions, trefoil, hopf):
    """Should append reports and read them back in order."""
    first = Report(subject="builtin:trefoil", grid=grid_payload(trefoil), components=1, upsilon=-1)
    second = Report(subject="builtin:hopf", grid=grid_payload(hopf), components=2)
    with sessions.begin() as session:
        insert_report(session, trefoil, first)
        insert_report(session, hopf, second)
        insert_report(session, trefoil, first)
    with sessions.begin() as session:
        assert session.scalar(sql.select(sql.func.count()).select_from(ReportRecord)) == 3
        assert get_reports(session) == [first, second, first]
        assert get_reports(session, "builtin:hopf") == [second]
        record = session.scalars(sql.select(ReportRecord)).first()
        assert record.passed
        assert record.data["upsilon"] == -1
        assert record.created_at is not None
