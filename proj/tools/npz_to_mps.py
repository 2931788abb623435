#!/usr/bin/env python3
"""Convert linprog-style .npz problem files into free-format MPS.

The input layout is the one used by SciPy's linprog benchmark suite
(c, A_ub, b_ub, A_eq, b_eq, bounds). Rows become L (A_ub) and E (A_eq)
rows; bounds become LO/UP/FX/FR/MI entries. Numbers are written with
17 significant digits so the MPS text reproduces the doubles exactly.
"""
import argparse
import math
import pathlib

import numpy as np


def fmt(v):
    return repr(float(v))


def bounds_of(data, n):
    raw = np.squeeze(data["bounds"])
    if raw.size == 0:
        return [(0.0, math.inf)] * n
    if raw.ndim == 1:
        raw = np.tile(raw, (n, 1))
    out = []
    for lo, hi in raw:
        lo = -math.inf if lo is None else float(lo)
        hi = math.inf if hi is None else float(hi)
        out.append((lo, hi))
    return out


def convert(src, dst, name):
    d = np.load(src, allow_pickle=True)
    c = np.asarray(d["c"], dtype=float)
    a_ub = np.atleast_2d(np.asarray(d["A_ub"], dtype=float))
    a_eq = np.atleast_2d(np.asarray(d["A_eq"], dtype=float))
    b_ub = np.asarray(d["b_ub"], dtype=float).ravel()
    b_eq = np.asarray(d["b_eq"], dtype=float).ravel()
    n = c.size
    if a_ub.size == 0:
        a_ub = np.zeros((0, n))
    if a_eq.size == 0:
        a_eq = np.zeros((0, n))
    rows = [("L", f"L{k + 1:04d}", a_ub[k], b_ub[k]) for k in range(a_ub.shape[0])]
    rows += [("E", f"E{k + 1:04d}", a_eq[k], b_eq[k]) for k in range(a_eq.shape[0])]
    cols = [f"X{j + 1:04d}" for j in range(n)]

    out = [f"NAME          {name}", "ROWS", " N  COST"]
    out += [f" {kind}  {rname}" for kind, rname, _, _ in rows]
    out.append("COLUMNS")
    for j, cname in enumerate(cols):
        if c[j] != 0.0:
            out.append(f"    {cname}  COST  {fmt(c[j])}")
        for _, rname, coef, _ in rows:
            if coef[j] != 0.0:
                out.append(f"    {cname}  {rname}  {fmt(coef[j])}")
    out.append("RHS")
    for _, rname, _, rhs in rows:
        if rhs != 0.0:
            out.append(f"    RHS  {rname}  {fmt(rhs)}")
    bnd = []
    for cname, (lo, hi) in zip(cols, bounds_of(d, n)):
        if lo == hi:
            bnd.append(f" FX BND  {cname}  {fmt(lo)}")
            continue
        if math.isinf(lo) and math.isinf(hi):
            bnd.append(f" FR BND  {cname}")
            continue
        if math.isinf(lo):
            bnd.append(f" MI BND  {cname}")
        elif lo != 0.0:
            bnd.append(f" LO BND  {cname}  {fmt(lo)}")
        if not math.isinf(hi):
            bnd.append(f" UP BND  {cname}  {fmt(hi)}")
    if bnd:
        out.append("BOUNDS")
        out += bnd
    out.append("ENDATA")
    pathlib.Path(dst).write_text("\n".join(out) + "\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("src", type=pathlib.Path)
    ap.add_argument("dst", type=pathlib.Path)
    ap.add_argument("--name")
    args = ap.parse_args()
    convert(args.src, args.dst, args.name or args.src.stem.upper())


if __name__ == "__main__":
    main()
