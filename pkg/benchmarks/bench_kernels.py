"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--limit 20000]

Each backend runs in its own interpreter because the backend is fixed at
import time by REFLFIELDS_PURE_NUMPY.
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from reflfields import _kernels as K
from reflfields.numtheory import enumerate_fundamental_discriminants
from reflfields.pipeline import enumerate_admissible

limit = int(sys.argv[1])
ds = [fd.d for fd in enumerate_fundamental_discriminants(limit)]
# warm-up so numba compilation is not timed
K.form_counts(-23); K.l_series_sum(K.kronecker_table(-23), 100)

t = time.perf_counter()
for d in ds:
    K.form_counts(d)
forms = time.perf_counter() - t

t = time.perf_counter()
for d in ds[::10]:
    K.l_series_sum(K.kronecker_table(d), 1000 * (int((-d) ** 0.5) + 1))
series = time.perf_counter() - t

t = time.perf_counter()
rep = enumerate_admissible(limit)
pipeline = time.perf_counter() - t
print(json.dumps({"backend": K.BACKEND, "fields": len(ds), "form_counts_s": forms,
                  "l_series_s": series, "pipeline_s": pipeline,
                  "admissible": rep.admissible_count}))
"""


def run(limit, pure_numpy):
    env = dict(os.environ)
    env["REFLFIELDS_PURE_NUMPY"] = "1" if pure_numpy else ""
    out = subprocess.run([sys.executable, "-c", WORKER, str(limit)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--limit", type=int, default=20_000)
    args = ap.parse_args()
    rows = [run(args.limit, False), run(args.limit, True)]
    print(f"{'backend':8} {'fields':>7} {'forms[s]':>9} {'series[s]':>10} {'pipeline[s]':>12} {'adm':>5}")
    for r in rows:
        print(f"{r['backend']:8} {r['fields']:7d} {r['form_counts_s']:9.3f} "
              f"{r['l_series_s']:10.3f} {r['pipeline_s']:12.3f} {r['admissible']:5d}")
    if rows[0]["admissible"] != rows[1]["admissible"]:
        sys.exit("backends disagree on the admissible count")
    nb, np_ = rows
    print(f"speedup (pipeline): {np_['pipeline_s'] / nb['pipeline_s']:.1f}x")


if __name__ == "__main__":
    main()
