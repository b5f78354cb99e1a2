"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot kernels on realistic workloads: free-tree generation,
canonical coding, and index computation, plus a combined relocation-style
sweep (regenerate + recompute after each leaf move). Usage:

    python benchmarks/bench_kernels.py [--order 13] [--repeat 3]
"""

import argparse
import time

from treeirr._kernels import _pykernels

try:
    from treeirr._kernels import _ckernels
except ImportError:
    _ckernels = None


def levels_to_flat(levels):
    flat = []
    stack = []
    for i, lv in enumerate(levels):
        while stack and levels[stack[-1]] >= lv:
            stack.pop()
        if stack:
            flat.append(stack[-1])
            flat.append(i)
        stack.append(i)
    return flat


def bench(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best


def sweep(kernel, n, trees):
    # For every admissible leaf move, rebuild the edge list and recompute
    # the full index bundle; this is the claim verifier's inner loop.
    total = 0
    for flat in trees:
        deg = [0] * n
        adj = [[] for _ in range(n)]
        for k in range(0, len(flat), 2):
            u, v = flat[k], flat[k + 1]
            deg[u] += 1
            deg[v] += 1
            adj[u].append(v)
            adj[v].append(u)
        for y in range(n):
            if deg[y] < 3:
                continue
            donors = [w for w in adj[y] if deg[w] == 1]
            for donor in donors:
                for recipient in adj[y]:
                    if recipient == donor:
                        continue
                    moved = []
                    for k in range(0, len(flat), 2):
                        u, v = flat[k], flat[k + 1]
                        if {u, v} != {y, donor}:
                            moved.append(u)
                            moved.append(v)
                    moved.append(donor)
                    moved.append(recipient)
                    total += kernel.index_bundle(n, moved)[0]
    return total


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=13, help="tree order for the workloads")
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    args = parser.parse_args()
    n = args.order

    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled kernels not built; timing the pure backend only")

    levels = _pykernels.level_sequences(n)
    trees = [levels_to_flat(seq) for seq in levels]
    print(f"order {n}: {len(trees)} unlabeled trees")

    tasks = {
        "generate": lambda k: k.level_sequences(n),
        "canonize": lambda k: [k.canon_code(n, flat) for flat in trees],
        "indices": lambda k: [k.index_bundle(n, flat) for flat in trees],
        "sweep": lambda k: sweep(k, n, trees),
    }

    results = {}
    for task, fn in tasks.items():
        for name, kernel in backends:
            results[task, name] = bench(lambda: fn(kernel), args.repeat)

    width = max(len(t) for t in tasks)
    header = f"{'task'.ljust(width)}  python (s)"
    if _ckernels is not None:
        header += "  cython (s)  speedup"
    print(header)
    for task in tasks:
        line = f"{task.ljust(width)}  {results[task, 'python']:10.4f}"
        if _ckernels is not None:
            cy = results[task, "cython"]
            line += f"  {cy:10.4f}  {results[task, 'python'] / cy:7.2f}x"
        print(line)

    out_py = tasks["indices"](_pykernels)
    for name, kernel in backends[1:]:
        assert tasks["indices"](kernel) == out_py, "backend disagreement"


if __name__ == "__main__":
    main()
