"""Identity verification grids.

Each named identity enumerates every case of its desk-scale grid
deterministically (no sampling except where randomness is the point, and
then only from a seeded generator), checks exact equality, and collects
failures with both sides serialized.  Reports are deterministic given the
same inputs and seed; wall time is tracked separately so output bytes stay
reproducible.
"""

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random

from .algebra import Poly, poly_to_text, variable
from .combinatorics import (
    contains,
    hook_partitions_up_to,
    hook_product,
    partitions_between,
    skew,
)
from .factorial import genseries_check_classical
from .sequences import ParamSequence, falling_product, parse_sequence
from .shifted import ShiftedContext, shifted_conv, shifted_super_schur, vanishing_star
from .supersym import (
    SuperContext,
    cancellation_check,
    classical_super_schur,
    dual_cauchy_check,
    dual_jacobi_trudi,
    e_super,
    evaluation_product,
    expand_in_basis,
    factorization,
    genseries_check_super,
    h_super,
    highest_component,
    is_symmetric_in_family,
    jacobi_trudi,
    sergeev_pragacz,
    specialization_check,
    super_schur_conv,
    super_schur_tableau,
    vanishing_eval,
)

IDENTITIES = (
    "tableau-vs-conv",
    "jacobi-trudi",
    "dual-jt",
    "sergeev-pragacz",
    "cancellation",
    "symmetry",
    "vanishing",
    "vanishing-star",
    "dual-cauchy",
    "factorization",
    "genseries-e",
    "genseries-h",
    "specialization",
    "highest-term",
    "recurrences",
    "basis-roundtrip",
)

DEFAULT_WEIGHT = {
    "tableau-vs-conv": 6,
    "jacobi-trudi": 6,
    "dual-jt": 5,
    "sergeev-pragacz": 6,
    "cancellation": 6,
    "symmetry": 6,
    "vanishing": 4,
    "vanishing-star": 5,
    "dual-cauchy": 0,
    "factorization": 6,
    "genseries-e": 0,
    "genseries-h": 0,
    "specialization": 5,
    "highest-term": 6,
    "recurrences": 6,
    "basis-roundtrip": 3,
}


@dataclass(frozen=True)
class CaseFailure:
    case: str
    lhs: str
    rhs: str


@dataclass
class VerifyReport:
    identity: str
    grid: str
    cases: int
    failures: list = field(default_factory=list)
    rng_seed: int = None
    wall_time: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def to_json_obj(self):
        return {
            "identity": self.identity,
            "grid": self.grid,
            "cases": self.cases,
            "failures": [
                {"case": f.case, "lhs": f.lhs, "rhs": f.rhs} for f in self.failures
            ],
            "rng_seed": self.rng_seed,
            "notes": list(self.notes),
            "passed": self.passed,
        }

    def text_lines(self):
        lines = [
            f"identity: {self.identity}",
            f"grid: {self.grid}",
            f"cases: {self.cases}",
        ]
        if self.rng_seed is not None:
            lines.append(f"rng_seed: {self.rng_seed}")
        lines.extend(self.notes)
        for f in self.failures:
            lines.append(f"FAIL {f.case}")
            lines.append(f"  lhs: {f.lhs}")
            lines.append(f"  rhs: {f.rhs}")
        lines.append("PASS" if self.passed else f"FAIL ({len(self.failures)} cases)")
        return lines


def default_symbolic_window(m, n, max_weight, order):
    """A window wide enough for every route on the requested grid.

    Shifted sequences inside the determinant routes reach roughly twice the
    grid weight past the variable counts; the series checks reach the
    expansion order.  SUPERSCHUR_WINDOW=lo:hi overrides.
    """
    env = os.environ.get("SUPERSCHUR_WINDOW")
    if env:
        lo_text, _, hi_text = env.partition(":")
        return int(lo_text), int(hi_text)
    half = 2 * max_weight + order + m + n + 6
    return -half, half


def resolve_sequence(seq_text, m, n, max_weight, order):
    """Parse --seq, defaulting to a symbolic window sized for the grid."""
    if not seq_text or seq_text == "auto":
        lo, hi = default_symbolic_window(m, n, max_weight, order)
        return ParamSequence.symbolic(lo, hi)
    return parse_sequence(seq_text)


def _rand_fraction(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _shape_cases(max_weight, m, n):
    cases = []
    for lam in hook_partitions_up_to(max_weight, m, n):
        for mu in partitions_between((), lam):
            cases.append(("shape", lam, mu))
    return cases


def _pair_cases(max_weight, m, n):
    hooks = hook_partitions_up_to(max_weight, m, n)
    cases = []
    for lam in hooks:
        for zeta in hooks:
            if lam == zeta or not contains(zeta, lam):
                cases.append(("pair", lam, zeta))
    return cases


def build_cases(identity, m, n, max_weight, trials, rng_seed):
    """The deterministic case list for one identity at one (m, n)."""
    if identity in ("tableau-vs-conv", "jacobi-trudi", "cancellation", "symmetry",
                    "highest-term"):
        cases = _shape_cases(max_weight, m, n)
        if identity == "highest-term":
            cases = cases + [("zero-seq",) + c[1:] for c in cases]
        return cases
    if identity == "dual-jt":
        return _shape_cases(max_weight, m, n)
    if identity == "sergeev-pragacz":
        return [("lam", lam) for lam in hook_partitions_up_to(max_weight, m, n)]
    if identity == "vanishing":
        return _pair_cases(max_weight, m, n)
    if identity == "vanishing-star":
        pairs = _pair_cases(max_weight, m, n)
        routes = [("routes",) + c[1:] for c in _shape_cases(max_weight, m, n)]
        return pairs + routes
    if identity == "dual-cauchy":
        return [("all",)]
    if identity == "factorization":
        rect = tuple([n] * m)
        return [
            ("lam", lam)
            for lam in hook_partitions_up_to(max_weight, m, n)
            if contains(lam, rect)
        ]
    if identity in ("genseries-e", "genseries-h"):
        rng = Random(rng_seed)
        cases = []
        for trial in range(trials):
            xs = tuple(_rand_fraction(rng) for _ in range(m))
            ys = tuple(_rand_fraction(rng) for _ in range(n))
            cases.append(("draw", trial, xs, ys))
        return cases
    if identity == "specialization":
        if n < 1:
            raise ValueError("specialization needs n >= 1")
        return [("lam", lam) for lam in hook_partitions_up_to(max_weight, m, n)]
    if identity == "recurrences":
        ks = range(1, max(max_weight, 1) + 1)
        return [("rec-e", k) for k in ks] + [("rec-h", k) for k in ks] + [
            ("swap", k) for k in ks
        ]
    if identity == "basis-roundtrip":
        rng = Random(rng_seed)
        factors = [
            lam for lam in hook_partitions_up_to(max_weight, m, n) if lam
        ]
        cases = [
            ("product", rng.choice(factors), rng.choice(factors))
            for _ in range(trials)
        ]
        cases += [("triangular",) + c[1:] for c in _pair_cases(min(max_weight + 1, 4), m, n)]
        return cases
    raise ValueError(f"unknown identity {identity!r}")


def check_case(identity, m, n, seq, order, case):
    """Run one case; None on success, a CaseFailure otherwise."""
    kind = case[0]
    label = f"{identity} m={m} n={n} " + " ".join(str(c) for c in case)

    def fail(lhs, rhs):
        return CaseFailure(label, lhs, rhs)

    def poly_fail(lhs, rhs):
        return fail(poly_to_text(lhs), poly_to_text(rhs))

    ctx = SuperContext(m, n, seq)
    if identity == "tableau-vs-conv":
        _, lam, mu = case
        lhs = super_schur_tableau(skew(lam, mu), ctx)
        rhs = super_schur_conv(skew(lam, mu), ctx)
        return None if lhs == rhs else poly_fail(lhs, rhs)
    if identity == "jacobi-trudi":
        _, lam, mu = case
        lhs = jacobi_trudi(skew(lam, mu), ctx)
        rhs = super_schur_tableau(skew(lam, mu), ctx)
        return None if lhs == rhs else poly_fail(lhs, rhs)
    if identity == "dual-jt":
        _, lam, mu = case
        lhs = dual_jacobi_trudi(skew(lam, mu), ctx)
        rhs = super_schur_tableau(skew(lam, mu).conjugate(), ctx)
        return None if lhs == rhs else poly_fail(lhs, rhs)
    if identity == "sergeev-pragacz":
        _, lam = case
        lhs = sergeev_pragacz(lam, ctx)
        rhs = super_schur_conv(skew(lam), ctx)
        return None if lhs == rhs else poly_fail(lhs, rhs)
    if identity == "cancellation":
        _, lam, mu = case
        p = super_schur_tableau(skew(lam, mu), ctx)
        ok = cancellation_check(p, ctx)
        return None if ok else fail("z-dependent after x_m=z, y_n=-z", "z-free")
    if identity == "symmetry":
        _, lam, mu = case
        p = super_schur_tableau(skew(lam, mu), ctx)
        ok = is_symmetric_in_family(p, "x", m) and is_symmetric_in_family(p, "y", n)
        return None if ok else fail("asymmetric", "symmetric")
    if identity == "vanishing":
        _, lam, zeta = case
        value = vanishing_eval(lam, zeta, ctx)
        if lam == zeta:
            rhs = evaluation_product(lam, ctx)
            return None if value == rhs else poly_fail(value, rhs)
        return None if not value else poly_fail(value, Poly.zero())
    if identity == "vanishing-star":
        sctx = ShiftedContext(m, n)
        if kind == "routes":
            _, lam, mu = case
            lhs = shifted_super_schur(skew(lam, mu), sctx)
            rhs = shifted_conv(skew(lam, mu), sctx)
            return None if lhs == rhs else poly_fail(lhs, rhs)
        _, lam, zeta = case
        value = vanishing_star(lam, zeta, sctx)
        expected = Fraction(hook_product(lam)) if lam == zeta else Fraction(0)
        return None if value == expected else fail(str(value), str(expected))
    if identity == "dual-cauchy":
        ok = dual_cauchy_check(m, n, seq)
        return None if ok else fail("sum over rectangle partitions", "product")
    if identity == "factorization":
        _, lam = case
        lhs = factorization(lam, ctx)
        rhs = super_schur_conv(skew(lam), ctx)
        return None if lhs == rhs else poly_fail(lhs, rhs)
    if identity in ("genseries-e", "genseries-h"):
        _, trial, xs, ys = case
        kind_letter = identity[-1]
        ok = genseries_check_super(kind_letter, ctx, xs, ys, order)
        if ok and n:
            ok = genseries_check_classical(kind_letter, ys, seq, order)
        return None if ok else fail("series sides differ", f"order {order}")
    if identity == "specialization":
        _, lam = case
        ok = specialization_check(lam, ctx)
        return None if ok else fail("specialized polynomial", "(m, n-1) polynomial")
    if identity == "highest-term":
        if kind == "zero-seq":
            _, lam, mu = case
            zctx = SuperContext(m, n, ParamSequence.zero())
            lhs = super_schur_conv(skew(lam, mu), zctx)
            rhs = classical_super_schur(skew(lam, mu), m, n)
            return None if lhs == rhs else poly_fail(lhs, rhs)
        _, lam, mu = case
        lhs = highest_component(super_schur_tableau(skew(lam, mu), ctx))
        rhs = classical_super_schur(skew(lam, mu), m, n)
        return None if lhs == rhs else poly_fail(lhs, rhs)
    if identity == "recurrences":
        _, k = case
        if m < 1:
            raise ValueError("recurrences need m >= 1")
        small = SuperContext(m - 1, n, seq)
        if kind == "rec-e":
            lhs = e_super(k, ctx)
            rhs = e_super(k, small) + e_super(k - 1, small) * (
                variable("x", m) - seq.get(m - k + 1)
            )
            return None if lhs == rhs else poly_fail(lhs, rhs)
        if kind == "rec-h":
            lhs = h_super(k, ctx)
            rhs = Poly.zero()
            for s in range(k + 1):
                r = k - s
                rhs = rhs + h_super(r, small) * falling_product(
                    "x", m, seq, s, shift=m + k - s - 1
                )
            return None if lhs == rhs else poly_fail(lhs, rhs)
        lhs = h_super(k, ctx)
        swapped = SuperContext(n, m, seq.shift(k - 1).neg())
        image = e_super(k, swapped)
        bindings = {}
        for fam, idx in image.variables():
            if fam == "x":
                bindings[("x", idx)] = variable("y", idx)
            elif fam == "y":
                bindings[("y", idx)] = variable("x", idx)
        rhs = image.substitute(bindings)
        return None if lhs == rhs else poly_fail(lhs, rhs)
    if identity == "basis-roundtrip":
        if kind == "triangular":
            _, lam, zeta = case
            value = vanishing_eval(lam, zeta, ctx).constant_value()
            if lam == zeta:
                return None if value != 0 else fail("0", "nonzero diagonal")
            return None if value == 0 else fail(str(value), "0")
        _, lam1, lam2 = case
        p = super_schur_conv(skew(lam1), ctx) * super_schur_conv(skew(lam2), ctx)
        expansion = expand_in_basis(p, ctx, sum(lam1) + sum(lam2))
        if expansion.reconstruction_exact:
            return None
        return fail("reconstruction differs from input", "exact round-trip")
    raise ValueError(f"unknown identity {identity!r}")


def run_identity(
    identity,
    m,
    n,
    seq_text=None,
    max_weight=None,
    trials=5,
    rng_seed=0,
    order=12,
    jobs=1,
):
    """Run one identity's grid and return its report."""
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}")
    if max_weight is None:
        max_weight = DEFAULT_WEIGHT[identity]
    needs_rng = identity in ("genseries-e", "genseries-h", "basis-roundtrip")
    numeric_only = identity in ("genseries-e", "genseries-h", "basis-roundtrip")
    if numeric_only and (not seq_text or seq_text == "auto"):
        seq_text = "arith:0"
    seq = resolve_sequence(seq_text, m, n, max_weight, order)
    if numeric_only and not seq.is_numeric:
        raise ValueError(f"{identity} needs a numeric sequence, got {seq.describe()}")

    cases = build_cases(identity, m, n, max_weight, trials, rng_seed)
    grid = f"max_weight={max_weight} m={m} n={n} seq={seq.describe()}"
    started = time.monotonic()
    failures = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(
                _check_case_args,
                [(identity, m, n, seq, order, case) for case in cases],
            )
            failures = [r for r in results if r is not None]
    else:
        for case in cases:
            result = check_case(identity, m, n, seq, order, case)
            if result is not None:
                failures.append(result)
    notes = []
    if identity == "vanishing-star":
        diagonal = ",".join(
            str(hook_product(lam)) for lam in hook_partitions_up_to(max_weight, m, n)
        )
        notes.append(f"diagonal: {diagonal}")
    return VerifyReport(
        identity=identity,
        grid=grid,
        cases=len(cases),
        failures=failures,
        rng_seed=rng_seed if needs_rng else None,
        wall_time=time.monotonic() - started,
        notes=notes,
    )


def _check_case_args(args):
    return check_case(*args)
