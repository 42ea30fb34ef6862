"""Verification sweeps shared by ``hyperanimals verify`` and reports."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .context import new_context, TessContext
from .enumerate import SearchConfig, min_perimeter_exhaustive
from .perimeter import bounds_report, bound_constants, m_closed, m_oracle, pmin
from .spiral import boundary_degree_word, new_animal, perimeter_sequence
from .words import (
    continued_fraction_closed,
    continued_fraction_generic,
    degree_word_from_uw,
    sturmian_from_cf,
    sturmian_prefix,
    substitute_degree_word,
    uw_words,
    w_closed_prefix,
    w_limit_prefix,
    word_lengths,
    word_lengths_closed,
)

REPRESENTATIVES = [(3, 7), (3, 8), (4, 5), (4, 6), (5, 4), (5, 5), (6, 4), (7, 3), (8, 3), (9, 3)]
EXHAUSTIVE_SIGNATURES = [(3, 7), (4, 5), (5, 4), (7, 3)]
EUCLIDEAN = [(3, 6), (4, 4), (6, 3)]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark}  {self.name}  {self.detail}  ({self.seconds:.2f}s)"


def _timed(name, fn, *args):
    t0 = time.perf_counter()
    failures, detail = fn(*args)
    return CheckResult(name, not failures, detail, time.perf_counter() - t0, failures[:5])


def hyperbolic_signatures(limit: int = 12):
    return [
        (p, q)
        for p in range(3, limit + 1)
        for q in range(3, limit + 1)
        if (p - 2) * (q - 2) > 4
    ]


def default_cap(ctx: TessContext, cap: int = 20000) -> int:
    return min(ctx.n_k(5), cap)


def simulator_agreement(ctx, n_max):
    seq = perimeter_sequence(ctx, n_max)
    bad = [(n, seq[n - 1], pmin(ctx, n)) for n in range(1, n_max + 1) if seq[n - 1] != pmin(ctx, n)]
    return bad, f"{{{ctx.p},{ctx.q}}} n<={n_max}"


def triple_path(ctx, n_max):
    bad = []
    for n in range(ctx.p * (ctx.q - 2) + 1, n_max + 1):
        br = m_closed(ctx, n)
        mo = m_oracle(ctx, n)
        layered = (ctx.p - 2) * (n - ctx.n_k(br.k)) + ctx.P_k(br.k)
        if not (pmin(ctx, n) == layered - 2 * br.m == layered - 2 * mo):
            bad.append((n, br.m, mo))
    return bad, f"{{{ctx.p},{ctx.q}}} n<={n_max}"


def epsilon_bounds(ctx, n_max):
    rep = bounds_report(ctx, n_max)
    return rep.failures, (
        f"{{{ctx.p},{ctx.q}}} eps in [{rep.eps_min:.4f},{rep.eps_max:.4f}], "
        f"max|eps-centre|={rep.refined_max_dev or 0:.4f}"
    )


def constant_bounds(limit):
    bad = []
    sigs = hyperbolic_signatures(limit)
    for p, q in sigs:
        for name, (value, bound) in bound_constants(new_context(p, q)).items():
            if not value < bound:
                bad.append((p, q, name))
    return bad, f"{len(sigs)} signatures with p,q<={limit}"


def word_engines(ctx, N):
    bad = []
    W = w_limit_prefix(ctx, N)
    if W.symbols != w_closed_prefix(ctx, N).symbols:
        bad.append("W-limit != closed formula")
    B = sturmian_prefix(ctx, N)
    Wb = w_limit_prefix(ctx, N, binary=True)
    off = 4 if ctx.p == 3 else 3
    if any(Wb[i] != off - W[i] for i in range(N)):
        bad.append("binary twin != offset - W")
    if any(Wb[i] != B[i - 1] for i in range(1, N)):
        bad.append("binary W(i) != B(i-1)")
    if sturmian_from_cf(continued_fraction_closed(ctx), N).symbols != B.symbols:
        bad.append("continued-fraction word != floor word")
    return bad, f"{{{ctx.p},{ctx.q}}} N={N}"


def cf_families(limit, terms):
    bad = []
    for p, q in hyperbolic_signatures(limit):
        ctx = new_context(p, q)
        if continued_fraction_generic(ctx.beta, terms) != continued_fraction_closed(ctx).terms(terms):
            bad.append((p, q))
    return bad, f"p,q<={limit}, {terms} quotients"


LENGTH_CHECK_BUDGET = 10**8


def length_and_sums(ctx, k_len, k_sum):
    bad = []
    for k in range(1, k_len + 1):
        # U_10 reaches ~4e7 symbols for {5,5}
        u, w = uw_words(ctx, k, cap=LENGTH_CHECK_BUDGET)
        if not (len(u), len(w)) == word_lengths(ctx, k) == word_lengths_closed(ctx, k):
            bad.append(("length", k))
    g = ctx.gamma
    for k in range(2 if ctx.p == 3 else 1, k_sum + 1):
        d = degree_word_from_uw(ctx, k, cap=LENGTH_CHECK_BUDGET)
        if ctx.p == 3:
            got = sum(ctx.q - x for x in d.symbols[: g(k)])
            want = g(k + 1) + g(k)
        else:
            got = sum(ctx.q - x for x in d.symbols[: g(k) + g(k - 1)])
            want = ctx.l_k(k)
        if got != want:
            bad.append(("layer-sum", k, got, want))
    return bad, f"{{{ctx.p},{ctx.q}}} k<={k_len}/{k_sum}"


def layer_words(ctx, k_max):
    bad = []
    st = new_animal(ctx)
    for k in range(1, k_max + 1):
        while st.n < ctx.n_k(k):
            st.attach()
        if st.perimeter != ctx.P_k(k):
            bad.append(("P_k", k))
        w = boundary_degree_word(st)
        if not w.is_rotation_of(substitute_degree_word(ctx, k)):
            bad.append(("d_k", k))
    return bad, f"{{{ctx.p},{ctx.q}}} k<={k_max}"


def euclidean_reproduction(n_max):
    bad = []
    for p, q in EUCLIDEAN:
        ctx = new_context(p, q)
        seq = perimeter_sequence(ctx, n_max)
        bad += [(p, q, n) for n in range(1, n_max + 1) if seq[n - 1] != pmin(ctx, n)]
    return bad, f"{{3,6}},{{4,4}},{{6,3}} n<={n_max}"


def exhaustive(ctx, n_max):
    bad = []
    cfg = SearchConfig(n_max=n_max)
    for n in range(1, n_max + 1):
        r = min_perimeter_exhaustive(ctx, n, cfg)
        if r.min_perimeter != pmin(ctx, n):
            bad.append((n, r.min_perimeter, pmin(ctx, n)))
    return bad, f"{{{ctx.p},{ctx.q}}} n<={n_max}"


SPOT_VALUES = {((4, 5), 13): 20, ((4, 5), 14): 22, ((7, 3), 8): 28, ((3, 7), 16): 12}


def spot_values():
    bad = []
    for ((p, q), n), want in SPOT_VALUES.items():
        ctx = new_context(p, q)
        got = pmin(ctx, n)
        sim = perimeter_sequence(ctx, n)[-1]
        if not got == sim == want:
            bad.append((p, q, n, got, sim, want))
    return bad, ", ".join(f"P{{{p},{q}}}({n})={v}" for ((p, q), n), v in SPOT_VALUES.items())


def run_all(signatures=None, n_max=None, quick=False):
    """Run every check; returns a list of CheckResult in a fixed order."""
    sigs = signatures or REPRESENTATIVES
    word_n = 2000 if quick else 10_000
    results = []
    for p, q in sigs:
        ctx = new_context(p, q)
        cap = n_max if n_max is not None else default_cap(ctx, 2000 if quick else 20000)
        results.append(_timed(f"simulator {{{p},{q}}}", simulator_agreement, ctx, cap))
        if cap > p * (q - 2):
            results.append(_timed(f"triple-path {{{p},{q}}}", triple_path, ctx, cap))
            results.append(_timed(f"bounds {{{p},{q}}}", epsilon_bounds, ctx, cap))
        results.append(_timed(f"words {{{p},{q}}}", word_engines, ctx, word_n))
        results.append(_timed(f"lengths {{{p},{q}}}", length_and_sums, ctx, 6 if quick else 10, 5 if quick else 8))
        results.append(_timed(f"layer words {{{p},{q}}}", layer_words, ctx, 3 if quick else 4))
    results.append(_timed("constant bounds", constant_bounds, 12))
    results.append(_timed("continued fractions", cf_families, 12, 40))
    if signatures is None:
        results.append(_timed("euclidean", euclidean_reproduction, 200 if quick else 1000))
        for p, q in EXHAUSTIVE_SIGNATURES:
            results.append(_timed(f"exhaustive {{{p},{q}}}", exhaustive, new_context(p, q), 5 if quick else 7))
        results.append(_timed("spot values", spot_values))
    return results
