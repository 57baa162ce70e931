"""
Heawood Certifier - Database Management Module

Run history of certifications in SQLite. Every recorded run stores the
graph it was made for (name and SHA-256 digest of its edge list), the
overall verdict, the first failing check and the deterministic report JSON
(timings are not stored).

Database Schema:
- certification_runs: one row per recorded certification

All queries are parameterized; each function opens its own connection and
commits or rolls back as a unit.
"""

import hashlib
import json
import sqlite3
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional, Union

from .config import DB_PATH
from .GraphCore import Graph
from .Logger import database_logger as logger

PathLike = Union[str, Path]

# ============================================================================
# DATABASE INITIALIZATION AND SCHEMA MANAGEMENT
# ============================================================================

def init_db(db_path: Optional[PathLike] = None):
    """
    Create the certification history table and its indexes.

    Idempotent; safe to call before every write.
    """
    path = Path(db_path or DB_PATH)
    logger.debug(f"Initializing certification database at {path}")
    path.parent.mkdir(parents=True, exist_ok=True)
    with sqlite3.connect(str(path), timeout=20.0) as conn:
        with conn:
            cursor = conn.cursor()
            cursor.execute('''CREATE TABLE IF NOT EXISTS certification_runs (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                graph_name TEXT NOT NULL,          -- builtin name or @path given on the command line
                graph_digest TEXT NOT NULL,        -- SHA-256 of the edge-list text
                passed INTEGER NOT NULL,           -- 1 when every check passed
                first_failure TEXT,                -- name of the first failed check, NULL on success
                report_json TEXT NOT NULL,         -- report without timings
                created_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP
            )''')
            cursor.execute("CREATE INDEX IF NOT EXISTS idx_certification_runs_graph_digest ON certification_runs(graph_digest)")
            cursor.execute("CREATE INDEX IF NOT EXISTS idx_certification_runs_created_at ON certification_runs(created_at)")
    logger.debug("Certification database ready")


def graph_digest(g: Graph) -> str:
    return hashlib.sha256(g.to_edge_list().encode("utf-8")).hexdigest()

# ============================================================================
# CERTIFICATION RUNS
# ============================================================================

def record_certification(report, graph_name: str, g: Graph, db_path: Optional[PathLike] = None) -> int:
    """Store a finished CertReport and return the new run id."""
    init_db(db_path)
    payload = json.dumps(report.to_dict(include_timings=False))
    with sqlite3.connect(str(Path(db_path or DB_PATH)), timeout=20.0) as conn:
        with conn:
            cursor = conn.cursor()
            cursor.execute(
                """INSERT INTO certification_runs
                   (graph_name, graph_digest, passed, first_failure, report_json, created_at)
                   VALUES (?, ?, ?, ?, ?, ?)""",
                (graph_name, graph_digest(g), int(report.passed), report.first_failure, payload,
                 datetime.now().isoformat(timespec="seconds")),
            )
            run_id = cursor.lastrowid
    logger.info(f"Recorded certification run {run_id} for {graph_name} (passed={report.passed})")
    return run_id


def _row_to_dict(row, with_report: bool) -> Dict:
    entry = {
        'id': row[0],
        'graph_name': row[1],
        'graph_digest': row[2],
        'passed': bool(row[3]),
        'first_failure': row[4],
        'created_at': row[5],
    }
    if with_report:
        entry['report'] = json.loads(row[6])
    return entry


def get_certification_history(limit: int = 20, db_path: Optional[PathLike] = None) -> List[Dict]:
    """Most recent runs first, without the stored reports."""
    init_db(db_path)
    with sqlite3.connect(str(Path(db_path or DB_PATH)), timeout=20.0) as conn:
        cursor = conn.cursor()
        cursor.execute(
            """SELECT id, graph_name, graph_digest, passed, first_failure, created_at
               FROM certification_runs ORDER BY id DESC LIMIT ?""",
            (limit,),
        )
        rows = cursor.fetchall()
    return [_row_to_dict(row, with_report=False) for row in rows]


def get_certification(run_id: int, db_path: Optional[PathLike] = None) -> Optional[Dict]:
    """One run with its decoded report, or None when the id is unknown."""
    init_db(db_path)
    with sqlite3.connect(str(Path(db_path or DB_PATH)), timeout=20.0) as conn:
        cursor = conn.cursor()
        cursor.execute(
            """SELECT id, graph_name, graph_digest, passed, first_failure, created_at, report_json
               FROM certification_runs WHERE id = ?""",
            (run_id,),
        )
        row = cursor.fetchone()
    if row is None:
        logger.debug(f"No certification run with id {run_id}")
        return None
    return _row_to_dict(row, with_report=True)
