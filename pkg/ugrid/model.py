"""Definitions for the ugrid ORM-model.

Grids and the reports computed from them are appended to a database given
by a SQLAlchemy URL, e.g. ``sqlite:///reports.db`` or a ``postgresql``
URL, which uses the psycopg2 driver.
"""

import datetime
import json
from typing import Callable, Dict, List, Optional

import sqlalchemy as sql
from loguru import logger as log
from sqlalchemy import JSON, orm

from .grid import GridDiagram
from .report import Report

# pylint: disable=R0903, W0622


class Base(orm.DeclarativeBase):
    """Base class for all models."""

    type_annotation_map = {Dict: JSON}

    def __repr__(self):
        props = [
            f"{key}={value}"
            for key, value in self.__dict__.items()
            if not key.startswith("_")
        ]
        return f"<{self.__class__.__name__} {' '.join(props)} />"


class GridRecord(Base):
    """Table of grids that reports were computed for."""

    __tablename__ = "grid_records"

    id: orm.Mapped[str] = orm.mapped_column(primary_key=True, index=True)
    name: orm.Mapped[str] = orm.mapped_column(index=True)
    index: orm.Mapped[int] = orm.mapped_column()
    o_rows: orm.Mapped[List[int]] = orm.mapped_column(JSON)
    x_rows: orm.Mapped[List[int]] = orm.mapped_column(JSON)
    components: orm.Mapped[int] = orm.mapped_column()


class ReportRecord(Base):
    """Table of reports.

    Attributes:
        id: Primary key for the table.
        grid_id: Key of the grid in ``grid_records``.
        subject: Input descriptor of the report.
        created_at: Timestamp when the report was stored.
        data: The report in JSON format.
    """

    __tablename__ = "report_records"

    id: orm.Mapped[int] = orm.mapped_column(primary_key=True, autoincrement=True)
    grid_id: orm.Mapped[str] = orm.mapped_column(index=True)
    subject: orm.Mapped[str] = orm.mapped_column(index=True)
    passed: orm.Mapped[bool] = orm.mapped_column()
    created_at: orm.Mapped[datetime.datetime] = orm.mapped_column(
        index=True, insert_default=lambda: datetime.datetime.now(datetime.timezone.utc)
    )
    data: orm.Mapped[Dict] = orm.mapped_column(insert_default={})


def grid_key(grid: GridDiagram) -> str:
    """Stable key of a grid, ``O:<rows>|X:<rows>``."""
    return (
        "O:" + ",".join(str(_) for _ in grid.o_rows)
        + "|X:" + ",".join(str(_) for _ in grid.x_rows)
    )


def open_store(db_url: str) -> orm.sessionmaker:
    """Connect to ``db_url`` and create missing tables."""
    engine = sql.create_engine(db_url)
    Base.metadata.create_all(engine)
    log.debug(f"Opened report store at {engine.url.render_as_string(hide_password=True)}.")
    return orm.sessionmaker(engine, autobegin=False)


def _merge_list_of_dicts(
    session: orm.Session, data: List[Dict], factory: Callable[[Dict], Base]
) -> None:
    """Merge a list of dictionaries into the database."""
    for item in data:
        session.merge(factory(item))


def insert_grids(session: orm.Session, data: List[Dict]) -> None:
    """Insert grids, each given as ``{"name", "grid", "components"}``."""

    def _grid_factory_(item):
        grid: GridDiagram = item["grid"]
        return GridRecord(
            id=grid_key(grid),
            name=item["name"],
            index=grid.n,
            o_rows=list(grid.o_rows),
            x_rows=list(grid.x_rows),
            components=item["components"],
        )

    _merge_list_of_dicts(session, data, _grid_factory_)
    log.info(f"Inserted {len(data)} grids.")


def insert_report(session: orm.Session, grid: GridDiagram, report: Report) -> None:
    """Append a report and its grid."""
    insert_grids(
        session,
        [{"name": report.subject, "grid": grid, "components": report.components or 0}],
    )
    session.add(
        ReportRecord(
            grid_id=grid_key(grid),
            subject=report.subject,
            passed=report.passed,
            data=json.loads(report.to_json()),
        )
    )
    log.info(f"Stored report for {report.subject}.")


def get_reports(session: orm.Session, subject: Optional[str] = None) -> List[Report]:
    """Stored reports, oldest first, optionally for one subject."""
    query = sql.select(ReportRecord).order_by(ReportRecord.id)
    if subject is not None:
        query = query.where(ReportRecord.subject == subject)
    return [
        Report.from_json(json.dumps(record.data))
        for record in session.execute(query).scalars().all()
    ]
