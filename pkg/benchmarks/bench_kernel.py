"""Time the compiled and pure-Python multicover kernels on the same instances.

    python3 benchmarks/bench_kernel.py [--repeat 3] [--json]
"""

from __future__ import annotations

import argparse
import json
import time

from lexidim.graph import complete, cycle, path
from lexidim.lexi import build_product
from lexidim.solver import (
    ADJACENCY,
    METRIC,
    available_backends,
    build_multicover_instance,
    enumerate_minimum_generators,
    exact_min_multicover,
)


def instances():
    yield "adim_1(C_24)", build_multicover_instance(cycle(24), 1, ADJACENCY), "solve"
    yield "adim_2(P_28)", build_multicover_instance(path(28), 2, ADJACENCY), "solve"
    lp = build_product(path(3), [path(4), path(5), cycle(5)])
    yield "dim_2(P_3 o {P_4,P_5,C_5})", build_multicover_instance(lp.flat, 2, METRIC), "solve"
    yield "dim_3(P_3 o {P_4,P_5,C_5})", build_multicover_instance(lp.flat, 3, METRIC), "solve"
    lp = build_product(complete(3), [cycle(6)] * 3)
    yield "dim_2(K_3 o C_6)", build_multicover_instance(lp.flat, 2, METRIC), "solve"
    yield "bases adim_1(C_14)", build_multicover_instance(cycle(14), 1, ADJACENCY), "enumerate"


def run(inst, task, backend):
    if task == "solve":
        return exact_min_multicover(inst, backend).value
    return len(enumerate_minimum_generators(inst, 100_000, backend).sets)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    backends = available_backends()
    rows = []
    for name, inst, task in instances():
        row = {"instance": name, "order": inst.order}
        answers = set()
        for b in backends:
            best = float("inf")
            for _ in range(args.repeat):
                t = time.perf_counter()
                answers.add(run(inst, task, b))
                best = min(best, time.perf_counter() - t)
            row[b] = best
        if len(answers) != 1:
            raise SystemExit(f"backends disagree on {name}: {sorted(answers)}")
        row["result"] = answers.pop()
        if "cython" in row:
            row["speedup"] = row["python"] / row["cython"]
        rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    head = f"{'instance':<30}{'n':>4}{'result':>8}" + "".join(f"{b + ' s':>12}" for b in backends)
    head += f"{'speedup':>10}" if "cython" in backends else ""
    print(head)
    for r in rows:
        line = f"{r['instance']:<30}{r['order']:>4}{r['result']:>8}"
        line += "".join(f"{r[b]:>12.4f}" for b in backends)
        if "speedup" in r:
            line += f"{r['speedup']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
