"""Decodable-channel regions at R1 = R2 = 0.8 over the low-noise cube.

Writes the sweep CSV and prints joint / successive counts.

    python scripts/figure2_region.py --out region.csv
"""

import argparse

from rmqmac.region import RatePair, iter_rows_csv, sweep_grid


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r1", type=float, default=0.8)
    ap.add_argument("--r2", type=float, default=0.8)
    ap.add_argument("--pmax", type=float, default=0.05)
    ap.add_argument("--step", type=float, default=0.0025)
    ap.add_argument("--out", default="region.csv")
    args = ap.parse_args()

    rows = sweep_grid(RatePair(args.r1, args.r2), args.pmax, args.step)
    with open(args.out, "w", newline="\n") as fh:
        fh.write("\n".join(iter_rows_csv(rows)) + "\n")

    joint = sum(r.joint for r in rows)
    succ = sum(r.successive for r in rows)
    both = sum(r.joint and r.successive for r in rows)
    print(f"grid points       {len(rows)}")
    print(f"joint decodable   {joint}")
    print(f"successive        {succ}  (all inside joint: {both == succ})")
    print(f"joint only        {joint - both}")


if __name__ == "__main__":
    main()
