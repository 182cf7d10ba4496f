#!/usr/bin/env python3
"""Convert a SISAP ASCII vector file to the plain one-vector-per-line format.

SISAP vector files start with a header line ("<dim> <count> [<extra>...]")
followed by one whitespace-separated vector per line. The header is dropped
after checking that the row count and dimension agree with it.

    tools/sisap_to_plain.py colors.ascii colors.txt
"""

import sys


def convert(src: str, dst: str) -> int:
    with open(src) as f:
        header = f.readline().split()
        dim, count = int(header[0]), int(header[1])
        rows = 0
        with open(dst, "w") as out:
            for lineno, line in enumerate(f, start=2):
                tokens = line.split()
                if not tokens:
                    continue
                if len(tokens) != dim:
                    sys.exit(f"{src}:{lineno}: expected {dim} values, found {len(tokens)}")
                out.write(" ".join(tokens) + "\n")
                rows += 1
    if rows != count:
        sys.exit(f"{src}: header announces {count} rows, found {rows}")
    return rows


if __name__ == "__main__":
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    n = convert(sys.argv[1], sys.argv[2])
    print(f"wrote {n} vectors to {sys.argv[2]}")
