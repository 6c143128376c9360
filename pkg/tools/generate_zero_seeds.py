"""Regenerate the bundled zeta-zero seed file (development only; needs mpmath).

The seeds are only starting points: zqlab refines every one through its own
zeta before use, so their accuracy only has to put Newton in the right basin.
"""
import sys
from pathlib import Path

import mpmath as mp

COUNT = 100
OUT = Path(__file__).resolve().parents[1] / "src" / "zqlab" / "data" / "zeta_zero_seeds.txt"


def main() -> None:
    mp.mp.dps = 20
    lines = ["# index gamma  (ordinates of the first non-trivial zeros of zeta, 10 decimals)"]
    for k in range(1, COUNT + 1):
        lines.append(f"{k} {float(mp.zetazero(k).imag):.10f}")
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {COUNT} seeds to {OUT}", file=sys.stderr)


if __name__ == "__main__":
    main()
