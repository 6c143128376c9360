"""Run a handful of the fast identity verifiers and print their residuals.

    python demos/identities_tour.py
"""
from zqlab.identities import default_config, run_identity

CASES = [
    ("cohen-lambda", {"x": 1.3}),
    ("rg-lambda", {"x": 2.0}),
    ("rg-sigma", {"a": 0.4, "b": 0.1, "x": 1.0}),
    ("rg-d2", {"x": 1.0}),
    ("baselines", None),
]


def main():
    for iid, params in CASES:
        for r in run_identity(iid, default_config(iid), params):
            p = " ".join(f"{k}={v:g}" for k, v in r.params.items())
            print(f"{r.identity_id:<22} {p:<22} lhs={r.lhs:+.12f}  residual={r.residual_abs:.2e}  "
                  f"{'ok' if r.passed else 'FAIL'}")
            # how the right-hand side splits up
            for name, v in r.rhs_components.items():
                print(f"    {name:<12} {v:+.12e}")


if __name__ == "__main__":
    main()
