"""Compare the Riesz mean of mu(n) with its truncated explicit formula.

    python demos/riesz_trace.py [out.csv]
"""
import sys

import numpy as np

from zqlab import riesz
from zqlab.zeta import zero_table


def main(out=None):
    zeros = zero_table(100)
    y = np.geomspace(1e3, 1e5, 40)
    tr = riesz.trace("mu", y, 0.1, zeros)
    err = np.abs(tr.normalized_sum - tr.predicted)
    print(f"{'y':>12} {'sum/sqrt(y)':>14} {'predicted':>14}")
    for yy, s, p in tr.points[::4]:
        print(f"{yy:12.1f} {s:14.8f} {p:14.8f}")
    print(f"sign changes {riesz.sign_changes(tr)}, max error {err.max():.3e}, tail estimate {tr.tail_estimate:.2e}")

    # the absolute zero sums grow as delta shrinks
    for delta in (0.05, 0.1, 0.2):
        A, B, C = riesz.lemma4_partial(delta, zeros)
        print(f"delta={delta:<5} A={A:.4f} B={B:.4f} C={C:.4f}")

    if out:
        riesz.write_csv(tr, out)
        print("wrote", out)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else None)
