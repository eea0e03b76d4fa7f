"""Delayed correlations g2(t) and thermal robustness of the blockade.

Computes g2(t) traces for the three reference operating points
(anharmonicity blockade, interference blockade, and the joint point)
and then sweeps the thermal magnon occupation n_th to show how fragile
each mechanism is against heating.

Run from the repository root:

    python3 demos/dynamics_and_thermal.py

Plot recipe for the traces:

    # import matplotlib.pyplot as plt
    # from magnonblockade import read_csv
    # for name in ("cmb", "umb", "joint"):
    #     r = read_csv(f"g2t_{name}.csv")
    #     plt.semilogy(r.column("t"), r.column("g2"), label=name)
    # plt.xlabel("t * gamma"); plt.ylabel("g2(t)"); plt.legend(); plt.show()
"""

import numpy as np

from magnonblockade import SystemParams, g2t_trace, thermal_scan, write_csv

BASE = SystemParams(g=20.0, kappa=0.5, delta=0.0, delta_f=0.0,
                    omega_m_drive=0.01, omega_nv_drive=0.04)
POINTS = {
    "cmb": BASE.at(delta=20.0),           # anharmonic dressed levels
    "umb": BASE.at(delta=24.8),           # pathway interference
    "joint": BASE.at(delta=22.8, delta_f=11.2),
}
N_TH_VALUES = [0.0, 1e-4, 1e-3, 1e-2, 0.1, 1.0]


def main() -> None:
    times = np.linspace(0.0, 40.0, 401)
    for name, params in POINTS.items():
        result = g2t_trace(params, times)
        write_csv(result, f"g2t_{name}.csv")
        g2 = result.column("g2")
        print(f"{name:>5}: g2(0) = {g2[0]:.3e}, max g2(t) = {g2.max():.3f}, "
              f"g2(t=40) = {g2[-1]:.3f}")

    print("\nthermal degradation (n_max = 10):")
    header = "  n_th      " + "".join(f"{name:>12}" for name in POINTS)
    print(header)
    curves = {
        name: thermal_scan(params, N_TH_VALUES, n_max=10).column("g2")
        for name, params in POINTS.items()
    }
    for i, n_th in enumerate(N_TH_VALUES):
        row = "".join(f"{curves[name][i]:12.3e}" for name in POINTS)
        print(f"  {n_th:<10g}{row}")
    print("\nthe interference dip washes out by n_th ~ 1e-3; the joint and")
    print("anharmonic dips survive roughly two decades further in n_th")


if __name__ == "__main__":
    main()
