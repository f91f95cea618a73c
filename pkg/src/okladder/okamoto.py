"""Generalized Okamoto polynomials Q_{m,n} on the cone m >= 0, n >= -1.

The table is filled from the two nonlinear recurrences that advance the
first and second index, seeded by Q_{0,0} = Q_{1,0} = Q_{0,1} = 1 and
Q_{1,1} = sqrt2*x.  Every division the recurrences require is exact; a
nonzero remainder signals a wrong recurrence instance and raises.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

from .errors import IndexOutOfCone
from .exact_ring import SQRT2, ExactPoly

# 2x^2 reused by both recurrence right-hand sides.
_TWO_X_SQ = ExactPoly((0, 0, 2))


def okamoto_degree(m: int, n: int) -> int:
    """Degree m^2 + n^2 + m*n - m - n of Q_{m,n}."""
    return m * m + n * n + m * n - m - n


def _rhs_first_index(m: int, n: int, q: ExactPoly) -> ExactPoly:
    """Right side of the first-index recurrence at (m, n):
    (9/2)(q q'' - q'^2) + (2x^2 + 3(2m + n - 1)) q^2."""
    dq = q.derivative()
    bilinear = q * dq.derivative() - dq * dq
    shift = _TWO_X_SQ + ExactPoly.constant(3 * (2 * m + n - 1))
    return bilinear * Fraction(9, 2) + shift * (q * q)


def _rhs_second_index(m: int, n: int, q: ExactPoly) -> ExactPoly:
    """Right side of the second-index recurrence at (m, n):
    (9/2)(q q'' - q'^2) + (2x^2 + 3(1 - m - 2n)) q^2."""
    dq = q.derivative()
    bilinear = q * dq.derivative() - dq * dq
    shift = _TWO_X_SQ + ExactPoly.constant(3 * (1 - m - 2 * n))
    return bilinear * Fraction(9, 2) + shift * (q * q)


class OkamotoTable:
    """Append-only memo of Q_{m,n}; fills columns n = 0 and n = 1 by the
    first-index recurrence, the n = -1 column by the second-index recurrence
    at n = 0, and columns n >= 2 by the second-index recurrence ascending n.

    Concurrent fills of one key recompute the identical polynomial, so the
    insert is idempotent and reads need no locking.
    """

    def __init__(self) -> None:
        one = ExactPoly.one()
        self._memo: dict[tuple[int, int], ExactPoly] = {
            (0, 0): one,
            (1, 0): one,
            (0, 1): one,
            (1, 1): ExactPoly((0, SQRT2)),
        }

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self._memo

    def known_indices(self) -> list[tuple[int, int]]:
        return sorted(self._memo)

    def get(self, m: int, n: int) -> ExactPoly:
        if m < 0 or n < -1:
            raise IndexOutOfCone(f"Q_({m},{n}) is outside the supported cone m >= 0, n >= -1")
        cached = self._memo.get((m, n))
        if cached is not None:
            return cached
        if n in (0, 1):
            value = self._fill_column(m, n)
        elif n == -1:
            value = _rhs_second_index(m, 0, self.get(m, 0)).exact_div(self.get(m, 1))
        else:
            value = _rhs_second_index(m, n - 1, self.get(m, n - 1)).exact_div(
                self.get(m, n - 2)
            )
        self._memo[(m, n)] = value
        return value

    def _fill_column(self, m: int, n: int) -> ExactPoly:
        # Ascend the first index from the two seeds of column n.
        top = max(mm for (mm, nn) in self._memo if nn == n and (mm - 1, n) in self._memo)
        for mm in range(top, m):
            nxt = _rhs_first_index(mm, n, self._memo[(mm, n)]).exact_div(
                self._memo[(mm - 1, n)]
            )
            self._memo[(mm + 1, n)] = nxt
        return self._memo[(m, n)]

    # -- optional on-disk persistence (used by the CLI cache) ----------------
    def dump(self, path: str) -> None:
        data = {
            f"{m},{n}": poly.to_json_dict() for (m, n), poly in self._memo.items()
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(data, fh, sort_keys=True)

    def load(self, path: str) -> None:
        if not os.path.exists(path):
            return
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        for key, entry in data.items():
            m, n = (int(part) for part in key.split(","))
            self._memo.setdefault((m, n), ExactPoly.from_json_dict(entry))


DEFAULT_TABLE = OkamotoTable()


def okamoto(m: int, n: int) -> ExactPoly:
    """Q_{m,n} from the shared table."""
    return DEFAULT_TABLE.get(m, n)
