import io

import pytest

from seqmine import TimeWindow, derive_sequence_db, load_transactions

# The running example: fault signals from four locations over May 2008.
TABLE1_CSV = """\
object_id,timestamp,item
1,2008-05-10,10
1,2008-05-12,20
1,2008-05-15,30
1,2008-05-16,50
1,2008-05-25,40
2,2008-05-15,20
2,2008-05-23,40
3,2008-05-12,10
3,2008-05-17,50
3,2008-05-20,60
3,2008-05-25,70
4,2008-05-15,10
4,2008-05-23,70
4,2008-05-25,60
"""

WIDE_WINDOW = ("2008-05-10", "2008-05-25")
NARROW_WINDOW = ("2008-05-15", "2008-05-25")

WIDE_SEQUENCES = {
    1: (10, 20, 30, 50, 40),
    2: (20, 40),
    3: (10, 50, 60, 70),
    4: (10, 70, 60),
}

NARROW_SEQUENCES = {
    1: (30, 50, 40),
    2: (20, 40),
    3: (50, 60, 70),
    4: (10, 70, 60),
}

# Full expected mining output on the wide window at absolute support 2,
# cross-checked against the brute-force oracle in oracle_utils.
WIDE_SUPPORT2_PATTERNS = {
    (10,): 3,
    (20,): 2,
    (40,): 2,
    (50,): 2,
    (60,): 2,
    (70,): 2,
    (10, 50): 2,
    (10, 60): 2,
    (10, 70): 2,
    (20, 40): 2,
}


@pytest.fixture
def table1_db():
    return load_transactions(io.StringIO(TABLE1_CSV))


@pytest.fixture
def wide_window():
    return TimeWindow.parse(*WIDE_WINDOW)


@pytest.fixture
def narrow_window():
    return TimeWindow.parse(*NARROW_WINDOW)


@pytest.fixture
def wide_seqdb(table1_db, wide_window):
    return derive_sequence_db(table1_db, wide_window)


@pytest.fixture
def narrow_seqdb(table1_db, narrow_window):
    return derive_sequence_db(table1_db, narrow_window)


@pytest.fixture
def table1_csv_path(tmp_path):
    path = tmp_path / "table1.csv"
    path.write_text(TABLE1_CSV, encoding="utf-8")
    return path
