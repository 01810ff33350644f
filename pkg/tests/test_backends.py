"""The pure-Python and compiled kernels must agree exactly."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superschur import backend
from superschur.bench import format_rows, run_benchmarks

kernels = backend.available_kernels()
needs_both = pytest.mark.skipif(
    "c" not in kernels, reason="compiled kernel not built"
)

coeffs = st.tuples(
    st.integers(min_value=-40, max_value=40).filter(bool),
    st.integers(min_value=1, max_value=12),
)


@st.composite
def raw_terms(draw):
    py = kernels["python"]
    out = {}
    for _ in range(draw(st.integers(min_value=0, max_value=6))):
        n_vars = draw(st.integers(min_value=0, max_value=3))
        ids = sorted(draw(st.sets(st.integers(min_value=0, max_value=5),
                                  min_size=n_vars, max_size=n_vars)))
        mono = []
        for v in ids:
            mono.append((v << 34) | (1 << 32))
            mono.append(draw(st.integers(min_value=1, max_value=4)))
        num, den = draw(coeffs)
        num, den = py.frac_norm(num, den)
        out[tuple(mono)] = (num, den)
    return out


@needs_both
@settings(max_examples=120)
@given(raw_terms(), raw_terms())
def test_kernels_agree(a, b):
    py = kernels["python"]
    cc = kernels["c"]
    assert py.terms_add(a, b) == cc.terms_add(a, b)
    assert py.terms_sub(a, b) == cc.terms_sub(a, b)
    assert py.terms_mul(a, b) == cc.terms_mul(a, b)
    assert py.terms_neg(a) == cc.terms_neg(a)
    assert py.terms_scale(a, 3, 2) == cc.terms_scale(a, 3, 2)


@needs_both
@given(raw_terms())
@settings(max_examples=60)
def test_kernels_agree_mono_ops(a):
    py = kernels["python"]
    cc = kernels["c"]
    monos = list(a)
    for m1 in monos:
        for m2 in monos:
            assert py.mono_mul(m1, m2) == cc.mono_mul(m1, m2)
            assert py.mono_div(m1, m2) == cc.mono_div(m1, m2)
        assert py.mono_degree(m1) == cc.mono_degree(m1)


def test_frac_norm_conventions():
    for module in kernels.values():
        assert module.frac_norm(2, -4) == (-1, 2)
        assert module.frac_norm(0, 7) == (0, 1)
        assert module.frac_norm(-6, -3) == (2, 1)


def test_inputs_never_mutated():
    py = kernels["python"]
    a = {((1 << 34) | (1 << 32), 1): (1, 1)}
    b = {((1 << 34) | (1 << 32), 1): (-1, 1)}
    snapshot_a, snapshot_b = dict(a), dict(b)
    py.terms_add(a, b)
    py.terms_mul(a, b)
    py.terms_sub(a, b)
    assert a == snapshot_a and b == snapshot_b


def test_benchmark_smoke():
    rows = run_benchmarks(repeat=1)
    assert rows and all("python" in row for row in rows)
    lines = format_rows(rows)
    assert len(lines) == len(rows) + 1


def test_unknown_backend_rejected():
    import os
    import subprocess
    import sys

    env = dict(os.environ, SUPERSCHUR_BACKEND="bogus")
    result = subprocess.run(
        [sys.executable, "-c", "import superschur"],
        env=env,
        capture_output=True,
        text=True,
    )
    assert result.returncode != 0
    assert "SUPERSCHUR_BACKEND" in result.stderr


def test_forced_backends_importable():
    import os
    import subprocess
    import sys

    for name in kernels:
        env = dict(os.environ, SUPERSCHUR_BACKEND=name)
        result = subprocess.run(
            [sys.executable, "-c",
             "from superschur.backend import BACKEND_NAME; print(BACKEND_NAME)"],
            env=env,
            capture_output=True,
            text=True,
        )
        assert result.returncode == 0
        assert result.stdout.strip() == name
