#!/usr/bin/env python3
"""Writes the offline OEIS b-file fixtures and their manifest.

The sandbox that produced the repository had no route to oeis.org, so each
b-file is generated from the sequence's textbook closed formula (never from
the recurrence under test) and laid out in OEIS row order and offsets.
Replace a file with the real b-file to re-check against OEIS itself.
"""

import json
import sys
from math import comb, factorial
from pathlib import Path

ROWS = 16


def stirling2(n, k):
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1)) // factorial(k)


def eulerian(n, k):
    # permutations of n with k descents
    return sum((-1) ** j * comb(n + 1, j) * (k + 1 - j) ** n for j in range(k + 2))


def eulerian2(n, m):
    # second-order Eulerian numbers
    return sum((-1) ** k * comb(2 * n + 1, k) * stirling2(n + m + 1 - k, m + 1 - k)
               for k in range(m + 2))


def stirling1(n, k):
    # unsigned, by expanding the rising factorial x(x+1)...(x+n-1)
    poly = [1]
    for j in range(n):
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i] += c * j
            nxt[i + 1] += c
        poly = nxt
    return poly[k] if k < len(poly) else 0


def lah(n, k):
    return comb(n - 1, k - 1) * factorial(n) // factorial(k)


TABLE = {
    # anum: (name, tuple, oeis offset, rows -> list of row lists, layout)
    "A008292": ("Eulerian numbers", ["0", "1", "1", "1", "-1", "0"], 1,
                lambda n: [eulerian(n, k) for k in range(n)] if n >= 1 else None,
                {"row_offset": 1, "k_offset": 0, "k_trim": 1}),
    "A173018": ("Eulerian numbers with a trailing zero column", ["0", "1", "1", "1", "-1", "0"], 0,
                lambda n: [1] if n == 0 else [eulerian(n, k) for k in range(n)] + [0],
                {"row_offset": 0, "k_offset": 0, "k_trim": 0}),
    "A008517": ("Second-order Eulerian numbers", ["0", "1", "1", "2", "-1", "-1"], 1,
                lambda n: [eulerian2(n, k) for k in range(n)] if n >= 1 else None,
                {"row_offset": 1, "k_offset": 0, "k_trim": 1}),
    "A019538": ("Surjections k! S(n,k)", ["0", "1", "0", "0", "1", "0"], 1,
                lambda n: [factorial(k) * stirling2(n, k) for k in range(1, n + 1)] if n >= 1 else None,
                {"row_offset": 1, "k_offset": 1, "k_trim": 0}),
    "A008277": ("Stirling subset numbers", ["0", "1", "0", "0", "0", "1"], 1,
                lambda n: [stirling2(n, k) for k in range(1, n + 1)] if n >= 1 else None,
                {"row_offset": 1, "k_offset": 1, "k_trim": 0}),
    "A008297": ("Signed Lah numbers", ["-1", "-1", "1", "0", "0", "-1"], 1,
                lambda n: [(-1) ** n * lah(n, k) for k in range(1, n + 1)] if n >= 1 else None,
                {"row_offset": 1, "k_offset": 1, "k_trim": 0}),
    "A105278": ("Unsigned Lah numbers", ["1", "1", "-1", "0", "0", "1"], 1,
                lambda n: [lah(n, k) for k in range(1, n + 1)] if n >= 1 else None,
                {"row_offset": 1, "k_offset": 1, "k_trim": 0}),
    "A094587": ("n!/k!", ["1", "-1", "0", "0", "0", "1"], 0,
                lambda n: [factorial(n) // factorial(k) for k in range(n + 1)],
                {"row_offset": 0, "k_offset": 0, "k_trim": 0}),
    "A008279": ("Falling factorials n!/(n-k)!", ["0", "0", "1", "0", "1", "0"], 0,
                lambda n: [factorial(n) // factorial(n - k) for k in range(n + 1)],
                {"row_offset": 0, "k_offset": 0, "k_trim": 0}),
    "A007318": ("Binomial coefficients", ["0", "0", "1", "0", "0", "1"], 0,
                lambda n: [comb(n, k) for k in range(n + 1)],
                {"row_offset": 0, "k_offset": 0, "k_trim": 0}),
    "A132393": ("Stirling cycle numbers", ["1", "0", "-1", "0", "0", "1"], 0,
                lambda n: [stirling1(n, k) for k in range(n + 1)],
                {"row_offset": 0, "k_offset": 0, "k_trim": 0}),
}

KNOWN_PREFIXES = {
    "A008292": [1, 1, 1, 1, 4, 1, 1, 11, 11, 1],
    "A008517": [1, 1, 2, 1, 8, 6, 1, 22, 58, 24, 1, 52, 328, 444, 120],
    "A008297": [-1, 2, 1, -6, -6, -1, 24, 36, 12, 1],
    "A132393": [1, 0, 1, 0, 1, 1, 0, 2, 3, 1],
}


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest = {}
    for anum, (name, params, offset, row, layout) in TABLE.items():
        values = []
        for n in range(ROWS + 1):
            r = row(n)
            if r is not None:
                values.extend(r)
        want = KNOWN_PREFIXES.get(anum)
        if want and values[: len(want)] != want:
            sys.exit(f"{anum}: formula disagrees with the published prefix")
        fname = f"b{anum[1:]}.txt"
        with open(out / fname, "w") as f:
            f.write(f"# {anum} {name}\n")
            f.write("# Offline fixture generated by tools/gen_oeis_fixtures.py from the closed formula.\n")
            for i, v in enumerate(values):
                f.write(f"{offset + i} {v}\n")
        manifest[anum] = {"name": name, "file": fname, "layout": layout, "params": params}
    with open(out / "manifest.json", "w") as f:
        json.dump(manifest, f, indent=2)
        f.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else str(Path(__file__).resolve().parent.parent / "data" / "oeis"))
