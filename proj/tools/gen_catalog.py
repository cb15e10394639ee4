#!/usr/bin/env python3
"""Regenerate catalog/*.json: simple reflections of the exceptional real
types, written in the simple-root basis.

Each matrix entry is a list of phi(conductor) rational strings, the
coefficients of 1, z, z^2, ... in Q(zeta_conductor). The H types live in
Q(zeta_5), where -2cos(pi/5) = z^2 + z^3.
"""
import json
import sys
from fractions import Fraction
from pathlib import Path

# Cartan entries a_ij = 2(a_i, a_j)/(a_i, a_i), as coefficient vectors.
MINUS_GOLDEN = ["0", "0", "1", "1"]  # z^2 + z^3 in Q(zeta_5)


def rational_entry(x, width):
    out = [str(Fraction(x))] + ["0"] * (width - 1)
    return out


def reflections_from_cartan(cartan, width):
    """s_i(a_j) = a_j - a_ij a_i, so s_i is the identity except row i."""
    n = len(cartan)
    gens = []
    for i in range(n):
        mat = []
        for r in range(n):
            row = []
            for c in range(n):
                if r != i:
                    row.append(rational_entry(1 if r == c else 0, width))
                elif c == i:
                    row.append(rational_entry(-1, width))
                else:
                    a = cartan[i][c]
                    if isinstance(a, list):
                        row.append([str(-Fraction(v)) for v in a])
                    else:
                        row.append(rational_entry(-a, width))
            mat.append(row)
        gens.append(mat)
    return gens


def cartan_from_gram(gram):
    n = len(gram)
    return [[Fraction(2) * gram[i][j] / gram[i][i] for j in range(n)] for i in range(n)]


def simply_laced(n, edges):
    gram = [[Fraction(2) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for a, b in edges:
        gram[a - 1][b - 1] = gram[b - 1][a - 1] = Fraction(-1)
    return gram


def h_cartan(n):
    # Linear Coxeter graph with a 5-labelled first edge, the rest 3-labelled.
    cartan = [[0] * n for _ in range(n)]
    for i in range(n):
        cartan[i][i] = 2
    cartan[0][1] = cartan[1][0] = MINUS_GOLDEN
    for i in range(1, n - 1):
        cartan[i][i + 1] = cartan[i + 1][i] = -1
    return cartan


def entry(name, rank, conductor, degrees, cartan):
    width = 4 if conductor == 5 else 1
    h = max(degrees)
    return {
        "name": name,
        "rank": rank,
        "conductor": conductor,
        "degrees": degrees,
        "codegrees": sorted((d - 2 for d in degrees), reverse=True),
        "coxeter_number": h,
        "generators": reflections_from_cartan(cartan, width),
    }


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    e_edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
    families = {
        "H": [
            entry("H3", 3, 5, [2, 6, 10], h_cartan(3)),
            entry("H4", 4, 5, [2, 12, 20, 30], h_cartan(4)),
        ],
        "F": [
            entry("F4", 4, 1, [2, 6, 8, 12],
                  cartan_from_gram([[2, -1, 0, 0], [-1, 2, -1, 0],
                                    [0, -1, 1, Fraction(-1, 2)], [0, 0, Fraction(-1, 2), 1]])),
        ],
        "E": [
            entry(f"E{n}", n, 1, degs,
                  cartan_from_gram(simply_laced(n, [e for e in e_edges if max(e) <= n])))
            for n, degs in [(6, [2, 5, 6, 8, 9, 12]), (7, [2, 6, 8, 10, 12, 14, 18]),
                            (8, [2, 8, 12, 14, 18, 20, 24, 30])]
        ],
    }
    for fam, entries in families.items():
        doc = {"family": fam, "entries": entries}
        (out / f"{fam}.json").write_text(json.dumps(doc, indent=1) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else str(Path(__file__).resolve().parent.parent / "catalog"))
