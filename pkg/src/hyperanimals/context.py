"""Per-signature constants and the integer layer sequences.

For a hyperbolic signature ``{p,q}`` the growth rate ``alpha`` and the slope
``beta`` live in Q(sqrt(D)) with ``D = s**2 - 4*s`` where ``s = (p-2)(q-2)``.
The layer sequences (gamma_k, n_k, l_k, P_k) are integers produced by a
three-term recurrence and memoized per context.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, InvalidSignatureError, UnsupportedClassError
from .quadfield import QuadExt

__all__ = [
    "TessClass",
    "TessContext",
    "LayerData",
    "new_context",
    "sequences",
    "layer_index",
    "layer_index_closed",
    "n_k_closed",
    "gamma_closed",
]


class TessClass(str, Enum):
    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class LayerData:
    gamma: int
    n: int
    l: int
    P: int

    def __iter__(self):
        return iter((self.gamma, self.n, self.l, self.P))


@dataclass(eq=False)
class TessContext:
    p: int
    q: int
    cls: TessClass
    t: int
    D: int | None
    alpha: QuadExt | None
    beta: QuadExt | None
    _gamma: list = field(default_factory=lambda: [0, 1], repr=False)
    _n: list = field(default_factory=lambda: [None, 1], repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def s(self) -> int:
        """(p-2)(q-2)."""
        return (self.p - 2) * (self.q - 2)

    @property
    def is_hyperbolic(self) -> bool:
        return self.cls is TessClass.HYPERBOLIC

    @property
    def is_euclidean(self) -> bool:
        return self.cls is TessClass.EUCLIDEAN

    def require_hyperbolic(self) -> None:
        if not self.is_hyperbolic:
            raise UnsupportedClassError(
                f"{{{self.p},{self.q}}} is {self.cls.value}; a hyperbolic signature is required"
            )

    def require_planar(self) -> None:
        if self.cls is TessClass.SPHERICAL:
            raise UnsupportedClassError(f"{{{self.p},{self.q}}} is spherical")

    # -- memoized sequences ------------------------------------------------

    def _extend(self, k: int) -> None:
        # append-only; guarded so concurrent readers never see a torn table
        with self._lock:
            g, nk = self._gamma, self._n
            while len(g) <= k + 1:
                g.append(self.t * g[-1] - g[-2])
            while len(nk) <= k + 1:
                j = len(nk) - 1
                nk.append(nk[-1] + self.p * (self.q - 2) * g[j])

    def gamma(self, k: int) -> int:
        if k < 0:
            raise DomainError("gamma_k needs k >= 0")
        if k + 1 >= len(self._gamma):
            self._extend(k)
        return self._gamma[k]

    def n_k(self, k: int) -> int:
        if k < 1:
            raise DomainError("n_k needs k >= 1")
        if k >= len(self._n):
            self._extend(k)
        return self._n[k]

    def l_k(self, k: int) -> int:
        if k < 1:
            raise DomainError("l_k needs k >= 1")
        return (self.q - 2) * self.gamma(k)

    def P_k(self, k: int) -> int:
        if k < 1:
            raise DomainError("P_k needs k >= 1")
        return self.p * (self.gamma(k) + self.gamma(k - 1))

    def alpha_pow(self, k: int) -> QuadExt:
        key = ("alpha_pow", k)
        hit = self._cache.get(key)
        if hit is None:
            hit = self.alpha**k
            self._cache[key] = hit
        return hit

    def quad(self, a, b=0) -> QuadExt:
        return QuadExt(a, b, self.D)

    def __repr__(self):
        return f"TessContext({{{self.p},{self.q}}}, {self.cls.value})"


@lru_cache(maxsize=None)
def new_context(p: int, q: int) -> TessContext:
    """Build (and cache) the context for signature ``{p,q}``."""
    if not isinstance(p, int) or not isinstance(q, int):
        raise InvalidSignatureError("p and q must be integers")
    if p < 3 or q < 3:
        raise InvalidSignatureError(f"{{{p},{q}}}: need p >= 3 and q >= 3")
    s = (p - 2) * (q - 2)
    t = s - 2
    if s < 4:
        cls = TessClass.SPHERICAL
    elif s == 4:
        cls = TessClass.EUCLIDEAN
    else:
        cls = TessClass.HYPERBOLIC
    if cls is not TessClass.HYPERBOLIC:
        return TessContext(p, q, cls, t, None, None, None)
    D = s * s - 4 * s
    half = Fraction(1, 2)
    alpha = QuadExt(Fraction(t, 2), half, D)
    beta = QuadExt(Fraction(s, 2 * (p - 2)), Fraction(1, 2 * (p - 2)), D)
    return TessContext(p, q, cls, t, D, alpha, beta)


def sequences(ctx: TessContext, k: int) -> LayerData:
    """(gamma_k, n_k, l_k, P_k) for k >= 1."""
    ctx.require_hyperbolic()
    if k < 1:
        raise DomainError(f"layer index must be >= 1, got {k}")
    return LayerData(ctx.gamma(k), ctx.n_k(k), ctx.l_k(k), ctx.P_k(k))


def layer_index(ctx: TessContext, n: int) -> int:
    """The unique k >= 1 with n_k < n <= n_{k+1}, found by walking the table."""
    ctx.require_hyperbolic()
    if n < 2:
        raise DomainError(f"layer index is defined for n >= 2, got {n}")
    k = 1
    while ctx.n_k(k + 1) < n:
        k += 1
    return k


# -- closed forms (used as independent checks) ------------------------------------


def gamma_closed(ctx: TessContext, k: int) -> QuadExt:
    a = ctx.alpha
    return (a**k - a**-k) / (a - a**-1)


def n_k_closed(ctx: TessContext, k: int) -> QuadExt:
    a = ctx.alpha
    ainv = a**-1
    bracket = (a**k - 1) / (a - 1) - (a**-k - 1) / (ainv - 1)
    return 1 + ctx.p * (ctx.q - 2) / (a - ainv) * bracket


def layer_index_closed(ctx: TessContext, n: int) -> int:
    """Layer index from the logarithmic closed form, evaluated exactly.

    ``k = floor(log_alpha(X))`` with ``X = (Delta + sqrt(Delta^2 - 4 alpha)) / 2``.
    ``alpha**j <= X`` is decided inside Q(sqrt(D)): it holds when
    ``2 alpha**j <= Delta`` or else when ``alpha**(2j) - alpha**j Delta + alpha <= 0``.
    """
    ctx.require_hyperbolic()
    a = ctx.alpha
    delta = a + 1 + Fraction(n - 2) * (a - 1) * (a - a**-1) / (ctx.p * (ctx.q - 2))
    if delta * delta - 4 * a < 0:
        raise DomainError(f"closed layer formula undefined at n={n}")

    def below(j: int) -> bool:
        aj = ctx.alpha_pow(j)
        if 2 * aj <= delta:
            return True
        return aj * aj - aj * delta + a <= 0

    if not below(0):
        raise DomainError(f"closed layer formula gives a negative index at n={n}")
    j = 0
    while below(j + 1):
        j += 1
    return j
