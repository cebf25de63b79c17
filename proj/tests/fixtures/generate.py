#!/usr/bin/env python3
"""Regenerates the JSON fixtures in this directory (exact rationals as strings)."""

import json
from fractions import Fraction as F
from pathlib import Path

HERE = Path(__file__).resolve().parent


def q(x):
    x = F(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def poly(n, rows):
    return {"n": n, "constraints": [{"a": [q(v) for v in r[:-1]], "b": q(r[-1])} for r in rows]}


def trajectory(n, samples, rows_of, limits=None, cost=None):
    per = [rows_of(s) for s in samples]
    out = {"n": n, "samples": [q(s) for s in samples], "constraints": []}
    for i in range(len(per[0])):
        c = {"rows": [[q(v) for v in p[i]] for p in per], "limit": None}
        if limits and limits[i] is not None:
            c["limit"] = limits[i]
        out["constraints"].append(c)
    if cost:
        out["cost"] = cost
    return out


def write(name, obj):
    (HERE / name).write_text(json.dumps(obj, indent=2) + "\n")


def main():
    a, b = 1, 2
    write("triangle.json", poly(2, [[-1, 0, 0], [0, -1, 0], [1, 1, 1]]))
    write("quadrant.json", poly(2, [[-1, 0, 0], [0, -1, 0]]))
    write("strip.json", poly(2, [[0, -1, 0], [0, 1, 1]]))
    write("infeasible.json", poly(1, [[1, -1], [-1, 0]]))
    y1 = poly(2, [[0, 1, a], [F(1, 2), 1, 0], [2, 1, 0]])
    y2 = poly(2, [[0, 1, -2 * b], [2, 1, 2]])
    write("y1.json", y1)
    write("y2.json", y2)
    write("production_union.json", {"pieces": [y1, y2]})
    write("cube3.json", poly(3, [[1, 0, 0, 1], [-1, 0, 0, 0], [0, 1, 0, 1], [0, -1, 0, 0], [0, 0, 1, 1], [0, 0, -1, 0]]))

    powers = [F(2) ** k for k in range(1, 11)]
    write("halfline_trajectory.json",
          trajectory(2, powers, lambda v: [[0, -1, 0], [-1 / v, 1, 0]]))
    write("x_axis.json", poly(2, [[0, -1, 0], [0, 1, 0]]))
    write("slanted_trajectory.json",
          trajectory(2, powers, lambda v: [[-1, 0, 0], [0, -1, 0], [-1, -v, -v]],
                     cost={"sense": "max", "samples": [["0", "-1"]] * len(powers), "limit": ["0", "-1"]}))
    write("escaping_trajectory.json",
          trajectory(2, powers, lambda v: [[1, 0, v], [-1, 0, 0], [0, 1, 1], [0, -1, 0]]))

    nus = [1 - F(1, 2 ** k) for k in range(1, 23)]
    write("ascending_trajectory.json",
          trajectory(2, nus, lambda v: [[0, 1, a], [v / 2, 1, 0], [2 / v, 1, 0]],
                     cost={"sense": "max", "samples": [["1", "4"]] * len(nus), "limit": ["1", "4"]}))
    write("descending_trajectory.json",
          trajectory(2, nus, lambda v: [[0, 1, a], [v, 1, -2 * a], [1 / v, 1, -(v + 1) ** 2 / v * a], [1, 0, 0]]))

    ks = list(range(1, 9))
    tri = [[-1, 0, 0], [0, -1, 0], [1, 1, 1]]
    write("triangle_trajectory.json",
          trajectory(2, [F(k) for k in ks], lambda k: tri,
                     cost={"sense": "min", "samples": [["1", q(1 + F(1, k))] for k in ks], "limit": ["1", "1"]}))

    # Cones over inscribed k-gons: the facet count grows with k, which the
    # fixed-cardinality contract rejects.
    write("ngon_cones_trajectory.json", {
        "n": 3, "samples": ["3", "4", "5"],
        "constraints": [{"rows": [["1", "0", "1", "1"]] * k, "limit": None} for k in (3, 4, 5)],
    })


if __name__ == "__main__":
    main()
