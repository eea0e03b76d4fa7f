"""Line cuts of g2(0) versus delta, with the closed-form overlay.

Sweeps delta at a few fixed delta_f values, including the weak-drive
closed-form column, and compares the observed dip positions with the
two blockade-condition solvers.

Run from the repository root:

    python3 demos/line_cuts.py

Plot recipe:

    # import matplotlib.pyplot as plt
    # from magnonblockade import read_csv
    # r = read_csv("line_cuts.csv")
    # mask = r.column("delta_f") == 40.0
    # plt.semilogy(r.column("delta")[mask], r.column("g2")[mask], label="numeric")
    # plt.semilogy(r.column("delta")[mask], r.column("g2_analytic")[mask],
    #              "--", label="closed form")
    # plt.xlabel("delta / gamma"); plt.ylabel("g2(0)"); plt.legend(); plt.show()
"""

import numpy as np

from magnonblockade import (
    SystemParams,
    cmb_condition,
    scan_g2_line,
    umb_condition_single,
    write_csv,
)

DELTA_F_VALUES = [0.0, 40.0]


def main() -> None:
    base = SystemParams(g=20.0, kappa=0.5, delta=0.0, delta_f=0.0,
                        omega_m_drive=0.01)
    result = scan_g2_line(
        base, (-60.0, 60.0, 241), DELTA_F_VALUES,
        include_analytic=True, workers=2,
    )
    write_csv(result, "line_cuts.csv")
    print(f"wrote line_cuts.csv ({result.data.shape[0]} rows)")

    deltas = result.column("delta")
    g2 = result.column("g2")
    for delta_f in DELTA_F_VALUES:
        mask = result.column("delta_f") == delta_f
        row_deltas, row_g2 = deltas[mask], g2[mask]
        # local minima below 0.05 count as blockade dips
        dips = [
            row_deltas[i]
            for i in range(1, len(row_g2) - 1)
            if row_g2[i] < min(row_g2[i - 1], row_g2[i + 1]) and row_g2[i] < 0.05
        ]
        cmb = cmb_condition(base.g, delta_f)
        umb = umb_condition_single(base.g, delta_f, base.kappa)
        print(f"\ndelta_f = {delta_f}:")
        print(f"  dips found at delta = {np.round(dips, 2).tolist()}")
        print(f"  anharmonicity roots: {np.round(cmb.roots, 2).tolist()}")
        print(f"  interference roots:  {np.round(umb.roots, 2).tolist()} "
              f"({umb.regime})")


if __name__ == "__main__":
    main()
