"""Generation, seeding, degrees, parity, and recurrence consistency."""

import json
import threading
from fractions import Fraction

import pytest

from okladder.errors import IndexOutOfCone
from okladder.exact_ring import SQRT2, ExactPoly
from okladder.okamoto import OkamotoTable, okamoto, okamoto_degree
from okladder.reference_data import (
    OKAMOTO_COLUMN_0,
    OKAMOTO_COLUMN_MINUS_1,
    OKAMOTO_COLUMN_PLUS_1,
)


def test_seeds():
    one = ExactPoly.one()
    assert okamoto(0, 0) == one and okamoto(1, 0) == one and okamoto(0, 1) == one
    assert okamoto(1, 1) == ExactPoly((0, SQRT2))
    assert okamoto(0, -1) == ExactPoly((3, 0, 2))
    assert okamoto(1, -1) == ExactPoly((0, SQRT2))


@pytest.mark.parametrize("k,expected", sorted(OKAMOTO_COLUMN_0.items()))
def test_conventional_table(k, expected):
    assert okamoto(k, 0) == expected


@pytest.mark.parametrize("k,expected", sorted(OKAMOTO_COLUMN_PLUS_1.items()))
def test_plus_one_table(k, expected):
    assert okamoto(k, 1) == expected


@pytest.mark.parametrize("k,expected", sorted(OKAMOTO_COLUMN_MINUS_1.items()))
def test_minus_one_table(k, expected):
    assert okamoto(k, -1) == expected


def test_hand_expanded_recurrence_instance():
    # advancing the first index from Q_2 = 2x^2+3:
    # (9/2)(Q_2 * 4 - (4x)^2) + (2x^2 + 9) Q_2^2 = Q_3 * Q_1
    q2 = ExactPoly((3, 0, 2))
    rhs = (q2 * 4 - ExactPoly((0, 4)) ** 2) * Fraction(9, 2) + ExactPoly((9, 0, 2)) * q2 * q2
    assert rhs == ExactPoly((135, 0, 90, 0, 60, 0, 8))
    assert okamoto(3, 0) == rhs


@pytest.mark.parametrize(
    "m,n,expected", [(4, 0, 12), (0, 0, 0), (2, 1, 4), (3, -1, 5), (5, 5, 65)]
)
def test_degree_formula(m, n, expected):
    assert okamoto_degree(m, n) == expected


def test_degrees_and_parity_of_generated_entries():
    for m in range(6):
        for n in range(-1, 5):
            q = okamoto(m, n)
            d = okamoto_degree(m, n)
            assert q.degree == d
            assert q.parity() == d % 2


def test_both_recurrences_hold_on_stored_triples():
    table = OkamotoTable()
    for m in range(5):
        for n in range(-1, 4):
            table.get(m, n)

    def rhs1(m, n):
        q = table.get(m, n)
        dq = q.derivative()
        return (q * dq.derivative() - dq * dq) * Fraction(9, 2) + (
            ExactPoly((3 * (2 * m + n - 1), 0, 2))
        ) * q * q

    def rhs2(m, n):
        q = table.get(m, n)
        dq = q.derivative()
        return (q * dq.derivative() - dq * dq) * Fraction(9, 2) + (
            ExactPoly((3 * (1 - m - 2 * n), 0, 2))
        ) * q * q

    for m in range(1, 4):
        for n in range(-1, 4):
            assert table.get(m + 1, n) * table.get(m - 1, n) == rhs1(m, n), (m, n)
    for m in range(4):
        for n in range(0, 3):
            assert table.get(m, n + 1) * table.get(m, n - 1) == rhs2(m, n), (m, n)


def test_cone_errors():
    with pytest.raises(IndexOutOfCone):
        okamoto(-1, 0)
    with pytest.raises(IndexOutOfCone):
        okamoto(0, -2)


def test_concurrent_fills_converge(tmp_path):
    table = OkamotoTable()
    results = []

    def worker():
        results.append(table.get(4, 1))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)


def test_disk_roundtrip(tmp_path):
    table = OkamotoTable()
    table.get(3, 1)
    path = str(tmp_path / "table.json")
    table.dump(path)
    fresh = OkamotoTable()
    fresh.load(path)
    assert fresh.get(3, 1) == table.get(3, 1)
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    assert "3,1" in data
