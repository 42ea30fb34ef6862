"""Degree words, their binary twins, Sturmian words and continued fractions.

Words are stored as ``bytes`` of small integers: degrees 2..4 for the
boundary words, digits 0/1 for the Sturmian side. ``bytes`` gives cheap
concatenation and repetition, which is all the substitution rules need.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from .context import TessContext
from .errors import BudgetExceededError, DomainError, InvalidContinuedFractionError, budget
from .quadfield import QuadExt

__all__ = [
    "DegreeWord",
    "ContinuedFraction",
    "word_case",
    "substitute_degree_word",
    "uw_words",
    "uw_binary_words",
    "degree_word_from_uw",
    "word_lengths",
    "word_lengths_closed",
    "w_limit_prefix",
    "sturmian_prefix",
    "sturmian_from_cf",
    "continued_fraction_closed",
    "continued_fraction_generic",
    "w_closed",
    "w_closed_prefix",
]


@dataclass(frozen=True)
class DegreeWord:
    symbols: bytes
    p: int | None = None
    q: int | None = None

    def __len__(self):
        return len(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __iter__(self):
        return iter(self.symbols)

    def __str__(self):
        return "".join(map(str, self.symbols))

    def startswith(self, other: DegreeWord) -> bool:
        return self.symbols.startswith(other.symbols)

    def is_rotation_of(self, other: DegreeWord) -> bool:
        return len(self) == len(other) and self.symbols in other.symbols + other.symbols

    def tolist(self) -> list[int]:
        return list(self.symbols)


@dataclass(frozen=True)
class ContinuedFraction:
    b0: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        if not self.period:
            raise InvalidContinuedFractionError("period must be non-empty")
        if self.b0 < 0 or any(b < 1 for b in self.preperiod + self.period):
            raise InvalidContinuedFractionError(f"bad partial quotients in {self}")

    def quotient(self, i: int) -> int:
        """b_i, with b_0 the integer part."""
        if i == 0:
            return self.b0
        i -= 1
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def terms(self, count: int) -> list[int]:
        return [self.quotient(i) for i in range(count)]

    def __str__(self):
        parts = [str(b) for b in self.preperiod]
        parts.append("(" + ",".join(map(str, self.period)) + ")")
        return f"[{self.b0};" + ",".join(parts) + "]"


def word_case(ctx: TessContext) -> str:
    """Which column of the word tables applies: 'p3', 'pq4' or 'q3'."""
    ctx.require_hyperbolic()
    if ctx.p == 3:
        return "p3"
    if ctx.q == 3:
        return "q3"
    return "pq4"


def _check_budget(length: int, cap: int | None) -> None:
    cap = budget() if cap is None else cap
    if length > cap:
        raise BudgetExceededError(f"word of length {length} exceeds symbol budget {cap}")


def _rep(sym: int, times: int) -> bytes:
    return bytes([sym]) * times


def _substitution_table(ctx: TessContext) -> dict:
    p, q = ctx.p, ctx.q
    case = word_case(ctx)
    if case == "p3":
        return {
            2: bytes([4]) + _rep(3, q - 4),
            3: bytes([4]) + _rep(3, q - 5),
            4: bytes([4]) + _rep(3, q - 6),
        }
    if case == "pq4":
        unit = bytes([3]) + _rep(2, p - 3)
        head = bytes([3]) + _rep(2, p - 4)
        return {2: head + unit * (q - 3), 3: head + unit * (q - 4)}
    return {2: bytes([3]) + _rep(2, p - 4), (3, 2): bytes([3]) + _rep(2, p - 5)}


def substitute_degree_word(ctx: TessContext, k: int, cap: int | None = None) -> DegreeWord:
    """d_k from d_1 = 2^p by k-1 rounds of substitution.

    For q = 3 the scan runs left to right and a 3 absorbs the 2 that follows
    it, so the digram "32" is rewritten as a unit.
    """
    case = word_case(ctx)
    if k < 1:
        raise DomainError("k must be >= 1")
    rules = _substitution_table(ctx)
    word = _rep(2, ctx.p)
    for _ in range(k - 1):
        if case != "q3":
            out = b"".join(rules[s] for s in word)
        else:
            chunks = []
            i = 0
            while i < len(word):
                s = word[i]
                if s == 3:
                    if i + 1 >= len(word) or word[i + 1] != 2:
                        raise ValueError("q=3 substitution: '3' not followed by '2'")
                    chunks.append(rules[(3, 2)])
                    i += 2
                else:
                    chunks.append(rules[2])
                    i += 1
            out = b"".join(chunks)
        _check_budget(len(out), cap)
        word = out
    return DegreeWord(word, ctx.p, ctx.q)


def _uw_recurrence(ctx: TessContext, k: int, u1: bytes, w1: bytes, cap):
    p, q = ctx.p, ctx.q
    case = word_case(ctx)
    if k < 1:
        raise DomainError("k must be >= 1")
    us, ws = [u1], [w1]
    for _ in range(k - 1):
        U, W = us[-1], ws[-1]
        if case == "p3":
            nu = W + U * (q - 5)
            nw = W + U * (q - 6)
        elif case == "pq4":
            unit = W + U * (p - 3)
            nu = W + U * (p - 4) + unit * (q - 3)
            nw = W + U * (p - 4) + unit * (q - 4)
        else:
            nu = W + U * (p - 5)
            nw = W + U * (p - 6)
        _check_budget(len(nu), cap)
        us.append(nu)
        ws.append(nw)
    return us, ws


def _uw_seeds(ctx: TessContext, binary: bool):
    case = word_case(ctx)
    if binary:
        return (b"\x01", b"\x00\x01") if case == "q3" else (b"\x01", b"\x00")
    if case == "p3":
        return b"\x03", b"\x04"
    if case == "pq4":
        return b"\x02", b"\x03"
    return b"\x02", b"\x03\x02"


def uw_words(ctx: TessContext, k: int, cap: int | None = None) -> tuple[DegreeWord, DegreeWord]:
    """(U_k, W_k) from the word recurrences."""
    us, ws = _uw_recurrence(ctx, k, *_uw_seeds(ctx, False), cap)
    return DegreeWord(us[-1], ctx.p, ctx.q), DegreeWord(ws[-1], ctx.p, ctx.q)


def uw_binary_words(ctx: TessContext, k: int, cap: int | None = None) -> tuple[DegreeWord, DegreeWord]:
    """The 0/1-seeded twins of (U_k, W_k): same recurrences, seeds 1 and 0."""
    us, ws = _uw_recurrence(ctx, k, *_uw_seeds(ctx, True), cap)
    return DegreeWord(us[-1], ctx.p, ctx.q), DegreeWord(ws[-1], ctx.p, ctx.q)


def degree_word_from_uw(ctx: TessContext, k: int, cap: int | None = None) -> DegreeWord:
    """d_k assembled from U-words: U_k^p for p > 3, (U_k U_{k-1})^3 for p = 3."""
    if k == 1:
        return DegreeWord(_rep(2, ctx.p), ctx.p, ctx.q)
    us, _ = _uw_recurrence(ctx, k, *_uw_seeds(ctx, False), cap)
    if ctx.p == 3:
        body = (us[-1] + us[-2]) * 3
    else:
        body = us[-1] * ctx.p
    _check_budget(len(body), cap)
    return DegreeWord(body, ctx.p, ctx.q)


def word_lengths(ctx: TessContext, k: int) -> tuple[int, int]:
    """(|U_k|, |W_k|) from the length recurrences, without building words."""
    p, q = ctx.p, ctx.q
    case = word_case(ctx)
    if k < 1:
        raise DomainError("k must be >= 1")
    u, w = (1, 2) if case == "q3" else (1, 1)
    for _ in range(k - 1):
        if case == "p3":
            u, w = (q - 5) * u + w, (q - 6) * u + w
        elif case == "pq4":
            u, w = (
                ((q - 3) * (p - 3) + (p - 4)) * u + (q - 2) * w,
                # W_k occurs q-3 times in W_{k+1}
                ((q - 4) * (p - 3) + (p - 4)) * u + (q - 3) * w,
            )
        else:
            u, w = (p - 5) * u + w, (p - 6) * u + w
    return u, w


def word_lengths_closed(ctx: TessContext, k: int) -> tuple[int, int]:
    """(u_k, w_k) written through gamma."""
    g = ctx.gamma
    case = word_case(ctx)
    if case == "p3":
        return g(k), g(k) - g(k - 1)
    if case == "pq4":
        return g(k) + g(k - 1), g(k) - (ctx.p - 3) * g(k - 1)
    # w_k = gamma_k - gamma_{k-2}; gamma_{-1} = -1 by running the recurrence backwards
    g_km2 = g(k - 2) if k >= 2 else -1
    return g(k) + g(k - 1), g(k) - g_km2


def w_limit_prefix(ctx: TessContext, N: int, binary: bool = False, cap: int | None = None) -> DegreeWord:
    """First N letters of lim W_k (or of its binary twin)."""
    if N < 1:
        raise DomainError("N must be >= 1")
    k = 1
    while word_lengths(ctx, k)[1] < N:
        k += 1
    _, ws = _uw_recurrence(ctx, k, *_uw_seeds(ctx, binary), cap)
    return DegreeWord(ws[-1][:N], ctx.p, ctx.q)


def sturmian_prefix(ctx: TessContext, N: int) -> DegreeWord:
    """B(1..N) with B(i) = floor((i+1)beta) - floor(i beta) - floor(beta)."""
    ctx.require_hyperbolic()
    if N < 1:
        raise DomainError("N must be >= 1")
    beta = ctx.beta
    fb = beta.floor()
    floors = [(i * beta).floor() for i in range(1, N + 2)]
    return DegreeWord(bytes(floors[i] - floors[i - 1] - fb for i in range(1, N + 1)), ctx.p, ctx.q)


def sturmian_from_cf(cf: ContinuedFraction, N: int) -> DegreeWord:
    """Prefix of the characteristic word built from continued-fraction quotients.

    B_0 = 0, B_1 = 0^(b1-1) 1, B_k = B_{k-1}^(b_k) B_{k-2}.
    """
    if N < 1:
        raise DomainError("N must be >= 1")
    b1 = cf.quotient(1)
    if b1 < 1:
        raise InvalidContinuedFractionError("b1 must be >= 1")
    prev, cur = b"\x00", b"\x00" * (b1 - 1) + b"\x01"
    k = 1
    while len(cur) < N:
        k += 1
        prev, cur = cur, cur * cf.quotient(k) + prev
    return DegreeWord(cur[:N])


def continued_fraction_closed(ctx: TessContext) -> ContinuedFraction:
    """Periodic expansion of beta, by signature family."""
    ctx.require_hyperbolic()
    p, q = ctx.p, ctx.q
    if p == 3:
        return ContinuedFraction(q - 4, (), (1, q - 6))
    if p == 4:
        return ContinuedFraction(q - 3, (), (2, q - 4))
    if q == 4:
        return ContinuedFraction(1, (1,), (p - 4, 2))
    if q == 3:
        return ContinuedFraction(0, (1, p - 5), (1, p - 6))
    return ContinuedFraction(q - 3, (), (1, p - 4, 1, q - 4))


def continued_fraction_generic(x: QuadExt, terms: int) -> list[int]:
    """Partial quotients by b = floor(x), x <- 1/(x - b), exactly."""
    if terms < 1:
        raise DomainError("terms must be >= 1")
    if x <= 0:
        raise DomainError("expected a positive number")
    out = []
    for _ in range(terms):
        b = x.floor()
        out.append(b)
        rest = x - b
        if not rest:
            if len(out) < terms:
                raise DomainError("rational input: expansion terminated")
            break
        x = 1 / rest
    return out


def w_closed(ctx: TessContext, i: int) -> int:
    """i-th letter of lim W_k: q - floor(i beta) + floor((i-1) beta)."""
    ctx.require_hyperbolic()
    if i < 1:
        raise DomainError("i must be >= 1")
    beta = ctx.beta
    return ctx.q - (i * beta).floor() + ((i - 1) * beta).floor()


def w_closed_prefix(ctx: TessContext, N: int) -> DegreeWord:
    ctx.require_hyperbolic()
    beta = ctx.beta
    floors = [(i * beta).floor() for i in range(N + 1)]
    return DegreeWord(bytes(ctx.q - floors[i] + floors[i - 1] for i in range(1, N + 1)), ctx.p, ctx.q)


def layer_prefix_sums(word: DegreeWord, q: int) -> list[int]:
    """Cumulative sums of (q - d(i)), starting with the empty sum 0."""
    return [0, *accumulate(q - d for d in word.symbols)]
