import io

import pytest

from seqmine import (
    InvalidParams,
    SynthParams,
    TimeWindow,
    derive_sequence_db,
    generate,
    load_transactions,
    write_transaction_csv,
)

FULL_YEAR = TimeWindow.parse("2008-01-01", "2008-12-31")


def test_params_validation():
    with pytest.raises(InvalidParams):
        SynthParams(customers=-1, avg_transactions=5, item_count=10)
    with pytest.raises(InvalidParams):
        SynthParams(customers=10, avg_transactions=0, item_count=10)
    with pytest.raises(InvalidParams):
        SynthParams(customers=10, avg_transactions=5, item_count=0)
    with pytest.raises(InvalidParams):
        SynthParams(customers=10, avg_transactions=5, item_count=10, event_size=2)
    with pytest.raises(InvalidParams):
        SynthParams(customers=10, avg_transactions=5, item_count=10, corruption_prob=1.5)


def test_dataset_id():
    params = SynthParams(customers=400, avg_transactions=15, item_count=15)
    assert params.dataset_id == "C15-I1-N15-D400"


def test_generate_empty():
    db = generate(SynthParams(customers=0, avg_transactions=5, item_count=10))
    assert len(db) == 0


def test_generate_deterministic():
    params = SynthParams(customers=50, avg_transactions=6, item_count=12, seed=1234)
    assert generate(params) == generate(params)


def test_generate_distinct_seeds_differ():
    base = dict(customers=50, avg_transactions=6, item_count=12)
    a = generate(SynthParams(seed=1, **base))
    b = generate(SynthParams(seed=2, **base))
    assert a != b


def test_generate_benchmark_scale_shape():
    params = SynthParams(customers=400, avg_transactions=15, item_count=15, seed=42)
    db = generate(params)
    seqdb = derive_sequence_db(db, FULL_YEAR)
    assert seqdb.object_count == 400
    mean_len = sum(len(s) for s in seqdb.sequences()) / 400
    assert 15 * 0.9 <= mean_len <= 15 * 1.1
    assert all(0 <= item < 15 for item in db.item_universe)


def test_generate_all_customers_present():
    params = SynthParams(customers=120, avg_transactions=1, item_count=5, seed=9)
    db = generate(params)
    assert db.object_universe == set(range(1, 121))


def test_generate_consecutive_days_per_customer():
    params = SynthParams(customers=5, avg_transactions=8, item_count=6, seed=3)
    db = generate(params)
    by_customer = {}
    for rec in db.records:
        by_customer.setdefault(rec.object_id, []).append(rec.timestamp)
    for stamps in by_customer.values():
        days = sorted((t - stamps[0]).days for t in stamps)
        assert days == list(range(len(stamps)))


def test_generated_csv_roundtrip():
    params = SynthParams(customers=20, avg_transactions=4, item_count=8, seed=11)
    db = generate(params)
    buf = io.StringIO()
    write_transaction_csv(db, buf)
    buf.seek(0)
    again = load_transactions(buf)
    assert again == db
