"""Benchmarks comparing the compiled and pure-Python term kernels.

The kernels are the only layer that differs between backends, so the
micro cases time them directly on representative workloads: products of
the actual polynomials the verification grids multiply, plus synthetic
dense-ish term maps.  A macro case times one four-route verification on
whichever backend is active.
"""

import time
from random import Random

from .backend import BACKEND_NAME, available_kernels
from .combinatorics import skew
from .sequences import ParamSequence


def _random_terms(rng, n_vars, n_terms, max_exp, rational):
    """A random term dict built without any kernel involvement."""
    out = {}
    while len(out) < n_terms:
        mono = []
        for v in sorted(rng.sample(range(n_vars), rng.randint(1, min(4, n_vars)))):
            mono.append((5 << 34) | (v + (1 << 32)))
            mono.append(rng.randint(1, max_exp))
        num = rng.randint(-99, 99) or 1
        den = rng.randint(1, 9) if rational else 1
        from math import gcd

        g = gcd(num, den)
        out[tuple(mono)] = (num // g, den // g)
    return out


def _schur_terms():
    """Term maps of real mid-size polynomials from the grids."""
    from .supersym import SuperContext, super_schur_conv

    seq = ParamSequence.symbolic(-12, 14)
    ctx = SuperContext(2, 2, seq)
    a = super_schur_conv(skew((3, 2)), ctx)
    b = super_schur_conv(skew((2, 2, 1)), ctx)
    return dict(a._terms), dict(b._terms)


def _time_call(fn, args, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best


def run_benchmarks(repeat=5, seed=7):
    """Time each kernel on the micro cases; returns a list of row dicts."""
    rng = Random(seed)
    small = _random_terms(rng, 8, 60, 3, rational=False)
    other = _random_terms(rng, 8, 60, 3, rational=False)
    ration = _random_terms(rng, 8, 40, 3, rational=True)
    schur_a, schur_b = _schur_terms()
    cases = [
        ("mul integer 60x60", "terms_mul", (small, other)),
        ("mul rational 40x40", "terms_mul", (ration, ration)),
        (f"mul schur {len(schur_a)}x{len(schur_b)}", "terms_mul", (schur_a, schur_b)),
        ("add schur", "terms_add", (schur_a, schur_b)),
    ]
    kernels = available_kernels()
    rows = []
    for label, fn_name, args in cases:
        row = {"case": label}
        for name, module in kernels.items():
            row[name] = _time_call(getattr(module, fn_name), args, repeat)
        if "c" in row and "python" in row and row["c"]:
            row["speedup"] = row["python"] / row["c"]
        rows.append(row)
    return rows


def run_macro_benchmark():
    """One four-route verification pass on the active backend."""
    from .verify import run_identity

    t0 = time.perf_counter()
    report = run_identity("sergeev-pragacz", 2, 2, max_weight=5)
    elapsed = time.perf_counter() - t0
    return {
        "case": f"sergeev-pragacz grid, backend={BACKEND_NAME}",
        "cases": report.cases,
        "passed": report.passed,
        "seconds": elapsed,
    }


def format_rows(rows):
    lines = [f"{'case':<28} {'python':>12} {'c':>12} {'speedup':>8}"]
    for row in rows:
        py = row.get("python")
        cc = row.get("c")
        speedup = row.get("speedup")
        py_text = f"{py * 1e3:.3f}ms" if py is not None else "-"
        c_text = f"{cc * 1e3:.3f}ms" if cc is not None else "-"
        s_text = f"{speedup:.2f}x" if speedup is not None else "-"
        lines.append(f"{row['case']:<28} {py_text:>12} {c_text:>12} {s_text:>8}")
    return lines
