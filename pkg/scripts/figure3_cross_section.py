"""Cross-section p_x = p_y of the decodable regions, with the hashing contour.

Prints how many grid points near the contour (|margin| <= tol) each decoding
strategy reaches, for a few grid steps.  With --plot, draws the section
(needs matplotlib, which the package itself does not depend on).
"""

import argparse

from rmqmac.region import RatePair, cross_section


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r1", type=float, default=0.8)
    ap.add_argument("--r2", type=float, default=0.8)
    ap.add_argument("--pmax", type=float, default=0.05)
    ap.add_argument("--tol", type=float, default=1e-3)
    ap.add_argument("--plot", default=None, help="write a PNG to this path")
    args = ap.parse_args()
    rp = RatePair(args.r1, args.r2)

    print(f"{'step':>8} {'near':>6} {'joint':>6} {'succ':>6}")
    for step in (0.0025, 0.001, 0.0005, 0.00025):
        rows = cross_section(rp, args.pmax, step)
        near = [r for r in rows if abs(r.hashing_margin) <= args.tol]
        print(f"{step:8.5f} {len(near):6d} {sum(r.joint for r in near):6d} "
              f"{sum(r.successive for r in near):6d}")

    if args.plot:
        import matplotlib.pyplot as plt
        import numpy as np

        rows = cross_section(rp, args.pmax, 0.0005)
        t = np.array([r.p_x for r in rows])
        s = np.array([r.p_z for r in rows])
        fig, ax = plt.subplots(figsize=(5, 5))
        j = np.array([r.joint for r in rows])
        q = np.array([r.successive for r in rows])
        ax.scatter(t[j], s[j], s=2, c="tab:blue", label="joint")
        ax.scatter(t[q], s[q], s=2, c="tab:orange", label="successive")
        g = int(round(len(rows) ** 0.5))
        m = np.array([r.hashing_margin for r in rows]).reshape(g, g)
        ax.contour(t.reshape(g, g), s.reshape(g, g), m, levels=[0], colors="gray")
        ax.set_xlabel("p_x = p_y")
        ax.set_ylabel("p_z")
        ax.legend()
        fig.savefig(args.plot, dpi=150)


if __name__ == "__main__":
    main()
