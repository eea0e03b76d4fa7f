"""Map the equal-time correlation g2(0) over the detuning plane.

Sweeps the drive detuning delta and the half frequency detuning delta_f
for the magnon-only drive, writes the grid to CSV, and reports where the
deepest antibunching dips sit relative to the predicted dressed-level
locus delta = +-sqrt(g^2 + delta_f^2).

Run from the repository root:

    python3 demos/blockade_map.py

To plot the result (matplotlib not required for the demo itself):

    # import matplotlib.pyplot as plt
    # import numpy as np
    # from magnonblockade import read_csv
    # r = read_csv("blockade_map.csv")
    # z = r.column("log10_g2").reshape(61, 61)
    # plt.imshow(z, origin="lower", extent=[-60, 60, -60, 60], aspect="auto")
    # plt.xlabel("delta / gamma"); plt.ylabel("delta_f / gamma")
    # plt.colorbar(label="log10 g2(0)"); plt.show()
"""

import math

import numpy as np

from magnonblockade import ScanGrid, SystemParams, scan_g2_grid, write_csv


def main() -> None:
    base = SystemParams(g=20.0, kappa=0.5, delta=0.0, delta_f=0.0,
                        omega_m_drive=0.01)
    grid = ScanGrid(
        delta_axis=(-60.0, 60.0, 61),
        delta_f_axis=(-60.0, 60.0, 61),
        base=base,
    )
    print("scanning 61 x 61 detuning grid (magnon drive only, g = 20)...")
    result = scan_g2_grid(grid, workers=2)
    write_csv(result, "blockade_map.csv")
    print(f"wrote blockade_map.csv in {result.meta['wall_time_s']:.1f} s")

    deltas = grid.delta_values()
    g2 = result.column("g2").reshape(61, 61)
    print("\ndip check against delta = +-sqrt(g^2 + delta_f^2):")
    for delta_f in (0.0, 20.0, 40.0):
        i = int(np.argmin(np.abs(grid.delta_f_values() - delta_f)))
        root = math.hypot(base.g, delta_f)
        j = int(np.argmin(g2[i]))
        print(f"  delta_f = {delta_f:5.1f}: row minimum g2 = {g2[i, j]:.2e} "
              f"at delta = {deltas[j]:+.1f} (predicted +-{root:.1f})")


if __name__ == "__main__":
    main()
