#!/usr/bin/env python3
"""Regenerate the polynomial tables and write them as JSON under out/.

Emits the three Okamoto columns (k <= 5) and the mode sequences for
k in {1, 3}, j in {1, 2, 3}, n <= 4, in the coefficient-pair schema.
"""

from __future__ import annotations

import json
import os
import sys

sys.path.insert(0, "src")

from okladder.okamoto import okamoto, okamoto_degree
from okladder.spectral import energy
from okladder.ttrr import ttrr_sequence


def main(out_dir: str = "out") -> int:
    os.makedirs(out_dir, exist_ok=True)
    columns = {"column_0": 0, "column_plus1": 1, "column_minus1": -1}
    for label, n in columns.items():
        payload = {}
        for k in range(6):
            poly = okamoto(k, n)
            payload[str(k)] = {**poly.to_json_dict(), "degree": okamoto_degree(k, n)}
        path = os.path.join(out_dir, f"okamoto_{label}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, indent=1)
        print(path)
    for k in (1, 3):
        for j in (1, 2, 3):
            payload = {}
            for n, poly in enumerate(ttrr_sequence(k, j, 4)):
                e = energy(k, j, n)
                payload[str(n)] = {
                    **poly.lattice_primitive().to_json_dict(),
                    "energy": f"{e.numerator}/{e.denominator}",
                }
            path = os.path.join(out_dir, f"modes_k{k}_j{j}.json")
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, sort_keys=True, indent=1)
            print(path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main(*sys.argv[1:]))
