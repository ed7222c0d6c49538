"""Joint ML block error rates of an RM(1,4) pair along the depolarizing ray.

Runs several seeds so the spread of the low-noise estimates is visible.

    python scripts/noise_monotonicity.py --trials 2000 --seeds 0 1 2 3
"""

import argparse
import math

from rmqmac.channel import make_channel
from rmqmac.decoders import monte_carlo
from rmqmac.rm import build_rm


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r", type=int, default=1)
    ap.add_argument("--m", type=int, default=4)
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    ap.add_argument("--decoder", default="joint")
    args = ap.parse_args()
    c = build_rm(args.r, args.m)

    for seed in args.seeds:
        reports = []
        for p_i in (0.97, 0.91, 0.82):
            q = (1 - p_i) / 3
            ch = make_channel(q, q, q, p_i=p_i)
            reports.append(monte_carlo(c, c, ch, args.decoder, args.trials, seed))
        zs = []
        for lo, hi in zip(reports, reports[1:]):
            se = math.sqrt(sum(r.error_rate * (1 - r.error_rate) / r.trials for r in (lo, hi)))
            zs.append((hi.error_rate - lo.error_rate) / se if se else float("inf"))
        rates = "  ".join(f"{r.error_rate:.5f}" for r in reports)
        print(f"seed {seed:3d}  rates {rates}  gaps/sigma {zs[0]:.2f} {zs[1]:.2f}")


if __name__ == "__main__":
    main()
