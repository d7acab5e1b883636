"""Writes the synthetic fixtures in this directory. Deterministic; rerun after edits."""

import math
from pathlib import Path

HERE = Path(__file__).resolve().parent
HOURS = 168


def write_series(path, values, resolution_min=60):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="\n") as f:
        f.write(f"# resolution_min={resolution_min}\nstep,value\n")
        for i, v in enumerate(values):
            f.write(f"{i},{v!r}\n")


def clamp01(x):
    return min(1.0, max(0.0, x))


def wind_off(t):
    return round(clamp01(0.55 + 0.35 * math.sin(2 * math.pi * t / 61.0) + 0.1 * math.sin(t / 5.0)), 4)


def wind_on(t):
    return round(clamp01(0.35 + 0.3 * math.sin(2 * math.pi * t / 47.0 + 1.0) + 0.1 * math.cos(t / 3.0)), 4)


def pv(t):
    h = t % 24
    return round(clamp01(0.8 * math.sin(math.pi * (h - 6) / 12.0)) if 6 <= h <= 18 else 0.0, 4)


def rd(t, scale, phase):
    x = math.sin(2 * math.pi * t / 37.0 + phase) + 0.6 * math.sin(t / 4.0 + 2 * phase)
    return round(max(0.0, scale * x), 3)


def scenario_inputs():
    d = HERE / "synthetic"
    write_series(d / "cf_wind_off.csv", [wind_off(t) for t in range(HOURS)])
    write_series(d / "cf_wind_on.csv", [wind_on(t) for t in range(HOURS)])
    write_series(d / "cf_pv.csv", [pv(t) for t in range(HOURS)])
    write_series(d / "rd_T1.csv", [rd(t, 4000.0, 0.0) for t in range(HOURS)])
    write_series(d / "rd_H1.csv", [rd(t, 2500.0, 1.3) for t in range(HOURS)])
    write_series(d / "rd_constant.csv", [5000.0] * HOURS)


def reconstruction():
    d = HERE / "reconstruction"
    quarter = 4 * 48
    feed = {
        "ST01": [round(20000.0 + 15000.0 * math.sin(2 * math.pi * t / 96.0), 1) for t in range(48)],
        "ST02": [round(12000.0 + 8000.0 * math.cos(2 * math.pi * t / 24.0), 1) for t in range(48)],
        "ST03": [round(6000.0 + 3000.0 * math.sin(t / 3.0), 1) for t in range(48)],
        "ST99": [5000.0] * 48,
    }
    for name, values in feed.items():
        write_series(d / "feedin" / f"{name}.csv", values)
    # Targets are chosen well inside the energy above zero of each window.
    (d / "transmission.csv").write_text(
        "station_id,start_step,end_step,cap_power_kw,target_energy_kwh\n"
        "ST01,8,40,25000,30000\n"
        "ST01,100,140,30000,\n"
        "ST02,0,32,15000,12000\n"
        "ST99,20,28,4000,\n"
    )
    (d / "distribution.csv").write_text(
        "station_id,start_step,end_step,cap_fraction,nominal_power_kw,coverage\n"
        "ST03,10,14,0.5,9000,0.5;1;1;0.25\n"
        f"ST03,60,70,0.6,9000,\n"
    )
    (d / "mapping.csv").write_text("station_id,region_id\nST01,T1\nST02,T1\nST03,H1\n")
    (d / "expected.txt").write_text(
        "declared_transmission_kwh=42000\n" f"horizon_quarter_steps={quarter}\n"
    )


if __name__ == "__main__":
    scenario_inputs()
    reconstruction()
