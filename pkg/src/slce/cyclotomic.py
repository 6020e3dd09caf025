"""Exact arithmetic in Z[zeta_k] and the Jacobi-sum divisibility test.

Elements are integer coordinate vectors in the power basis 1, zeta, ...,
zeta^(phi(k)-1) modulo the k-th cyclotomic polynomial (an integral basis,
so "divisible by 2" means "all coordinates even").  The module computes
the Jacobi sums J(chi, chi) and J(chi, rho) for the canonical character
chi(alpha) = zeta_k, the normalized sum K = chi(4) J(chi, chi), reduction
modulo the prime ideals above 2, and the divisibility test: the minimal
polynomial attached to an ideal factor divides the sequence polynomial
exactly when (K + 1)/2 reduces to zero modulo that ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .fields import FieldCtx, multiplicative_order
from .gf2poly import Gf2Poly, factor_squarefree

_MAX_REDUCTION_COEFF = 1 << 40  # overflow guard for int64 matrix reductions


def _poly_mul_z(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod_z(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    # exact integer division when it applies (monic or divisible leading terms)
    a = list(a)
    q = [0] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        c, r = divmod(a[-1], b[-1])
        if r != 0:
            raise ArithmeticError("non-exact polynomial division")
        shift = len(a) - len(b)
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] -= c * bi
    while a and a[-1] == 0:
        a.pop()
    return q, a


@lru_cache(maxsize=None)
def cyclotomic_poly(k: int) -> tuple[int, ...]:
    """Coefficients (constant first) of the k-th cyclotomic polynomial."""
    if k == 1:
        return (-1, 1)
    num = [0] * (k + 1)
    num[0], num[k] = -1, 1  # x^k - 1
    den = [1]
    for d in range(1, k):
        if k % d == 0:
            den = _poly_mul_z(den, list(cyclotomic_poly(d)))
    q, r = _poly_divmod_z(num, den)
    if r:
        raise ArithmeticError("cyclotomic division left a remainder")
    return tuple(q)


class _KContext:
    """Cached reduction machinery for one k: power-basis tables mod Phi_k."""

    def __init__(self, k: int):
        if k < 3 or k % 2 == 0:
            raise ValueError(f"k = {k} must be an odd integer >= 3")
        self.k = k
        phi_coeffs = cyclotomic_poly(k)
        self.phi_deg = len(phi_coeffs) - 1
        # rows[j] = coordinates of x^j mod Phi_k, enough rows for exponent
        # vectors of length k and for products of two reduced elements
        n_rows = max(k, 2 * self.phi_deg - 1)
        rows = []
        cur = [1] + [0] * (self.phi_deg - 1)
        for _ in range(n_rows):
            rows.append(list(cur))
            nxt = [0] + cur[:-1]
            lead = cur[-1]
            if lead:
                for i in range(self.phi_deg):
                    nxt[i] -= lead * phi_coeffs[i]
            cur = nxt
        self.reduction = np.array(rows, dtype=np.int64)
        self.max_reduction_coeff = int(np.abs(self.reduction).max())
        if self.max_reduction_coeff > _MAX_REDUCTION_COEFF:
            raise OverflowError(f"reduction table coefficients too large for k = {k}")
        # B with (1 - x) * B(x) == Phi_k(1) mod Phi_k, for exact division tests
        phi_at_1 = sum(phi_coeffs)
        shifted = list(phi_coeffs)
        shifted[0] -= phi_at_1
        b, rem = _poly_divmod_z(shifted, [-1, 1])  # (Phi(x) - Phi(1)) / (x - 1)
        if rem:
            raise ArithmeticError("exact division setup failed")
        self.phi_at_1 = phi_at_1
        self.inv_one_minus_zeta_num = b  # (1 - zeta)^(-1) = B(zeta) / Phi_k(1)


@lru_cache(maxsize=None)
def _kctx(k: int) -> _KContext:
    return _KContext(k)


@dataclass(frozen=True)
class CycInt:
    """An element of Z[zeta_k] in the power basis modulo Phi_k."""

    k: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        expected = _kctx(self.k).phi_deg
        if len(self.coeffs) != expected:
            raise ValueError(f"need {expected} coordinates for k = {self.k}")

    @classmethod
    def from_integer(cls, k: int, n: int) -> "CycInt":
        phi = _kctx(k).phi_deg
        return cls(k, (n,) + (0,) * (phi - 1))

    @classmethod
    def zeta_power(cls, k: int, j: int) -> "CycInt":
        vec = [0] * k
        vec[j % k] = 1
        return cls.from_exponent_counts(k, vec)

    @classmethod
    def from_exponent_counts(cls, k: int, counts) -> "CycInt":
        """sum counts[j] * zeta^j reduced into the power basis."""
        ctx = _kctx(k)
        counts = np.asarray(counts, dtype=np.int64)
        if counts.shape != (k,):
            raise ValueError(f"need {k} exponent classes")
        bound = int(np.abs(counts).max(initial=0)) * ctx.max_reduction_coeff * k
        if bound < 2**62:
            coords = counts @ ctx.reduction[:k]
        else:  # exact object-integer fallback; never hit at desk scale
            coords = counts.astype(object) @ ctx.reduction[:k].astype(object)
        return cls(k, tuple(int(c) for c in coords))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        return CycInt(self.k, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        return CycInt(self.k, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycInt":
        return CycInt(self.k, tuple(-a for a in self.coeffs))

    def _check(self, other: "CycInt") -> None:
        if self.k != other.k:
            raise ValueError(f"mismatched cyclotomic orders {self.k} and {other.k}")

    def as_integer(self) -> int | None:
        """The rational integer this element equals, or None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def embed(self) -> complex:
        """Numeric embedding at zeta_k = exp(2 pi i / k)."""
        angles = 2j * np.pi * np.arange(len(self.coeffs)) / self.k
        return complex(np.sum(np.array(self.coeffs) * np.exp(angles)))

    def to_json(self) -> dict:
        return {"k": self.k, "basis": "power", "coeffs": list(self.coeffs)}


def cyc_mul(a: CycInt, b: CycInt) -> CycInt:
    """Exact product reduced modulo Phi_k."""
    a._check(b)
    ctx = _kctx(a.k)
    phi = ctx.phi_deg
    amax = max((abs(c) for c in a.coeffs), default=0)
    bmax = max((abs(c) for c in b.coeffs), default=0)
    bound = amax * bmax * phi * ctx.max_reduction_coeff * (2 * phi)
    if 0 < bound < 2**62:
        conv = np.convolve(np.array(a.coeffs, dtype=np.int64), np.array(b.coeffs, dtype=np.int64))
        coords = conv @ ctx.reduction[: len(conv)]
    else:  # exact object-integer fallback for very large coordinates
        conv = np.convolve(np.array(a.coeffs, dtype=object), np.array(b.coeffs, dtype=object))
        coords = conv @ ctx.reduction[: len(conv)].astype(object)
    return CycInt(a.k, tuple(int(c) for c in coords))


def cyc_conj(a: CycInt) -> CycInt:
    """Complex conjugation: zeta maps to zeta^(-1)."""
    counts = [0] * a.k
    for i, c in enumerate(a.coeffs):
        counts[(-i) % a.k] += c
    ctx = _kctx(a.k)
    coords = np.array(counts, dtype=object) @ ctx.reduction[: a.k]
    return CycInt(a.k, tuple(int(c) for c in coords))


# ---------------------------------------------------------------------------
# Jacobi sums for the canonical character chi with chi(alpha) = zeta_k.
# ---------------------------------------------------------------------------


def _require_valid_k(ctx: FieldCtx, k: int) -> None:
    if k < 3:
        raise ValueError(f"k = {k} must be >= 3")
    if k % 2 == 0:
        raise ValueError(f"k = {k} must be odd")
    if (ctx.q - 1) % k != 0:
        raise ValueError(f"k = {k} does not divide q - 1 = {ctx.q - 1}")


@dataclass(frozen=True)
class CharacterSpec:
    """The canonical order-k character: alpha^t maps to zeta_k^(t mod k)."""

    ctx: FieldCtx
    k: int

    def __post_init__(self):
        _require_valid_k(self.ctx, self.k)

    def value_exponent(self, t: int) -> int:
        return t % self.k


def jacobi_K(ctx: FieldCtx, k: int) -> CycInt:
    """K = chi(4) * sum over i of chi(alpha^i) chi(1 - alpha^i), exactly.

    Accumulates one integer count per exponent class mod k, then performs a
    single reduction into the power basis.  Cached per (ctx, k): the
    divisibility test evaluates K once per ideal factor.
    """
    _require_valid_k(ctx, k)
    cached = ctx.scratch_cache.get(("jacobi_K", k))
    if cached is not None:
        return cached
    q = ctx.q
    i = np.arange(1, q - 1, dtype=np.int64)
    dlog4 = int(ctx.dlog_table[ctx.encode(ctx.from_int(4))])
    classes = (i + ctx.zech_table[i] + dlog4) % k
    counts = np.bincount(classes, minlength=k)
    out = CycInt.from_exponent_counts(k, counts)
    ctx.scratch_cache[("jacobi_K", k)] = out
    return out


def jacobi_with_rho(ctx: FieldCtx, k: int) -> CycInt:
    """J(chi, rho) with rho the quadratic character: rho(alpha^t) = (-1)^t."""
    _require_valid_k(ctx, k)
    q = ctx.q
    i = np.arange(1, q - 1, dtype=np.int64)
    classes = (i % k).astype(np.int64)
    signs_neg = (ctx.zech_table[i] & 1).astype(bool)
    plus = np.bincount(classes[~signs_neg], minlength=k)
    minus = np.bincount(classes[signs_neg], minlength=k)
    return CycInt.from_exponent_counts(k, plus - minus)


def check_eq3(kval: CycInt, q: int) -> bool:
    """Exact test that kval + q is divisible by 2 (1 - zeta_k) in Z[zeta_k]."""
    ctx = _kctx(kval.k)
    w = list(kval.coeffs)
    w[0] += q
    num = _poly_mul_z(w, ctx.inv_one_minus_zeta_num)
    coords = np.array(num, dtype=object) @ ctx.reduction[: len(num)]
    denom = 2 * ctx.phi_at_1
    return all(int(c) % denom == 0 for c in coords)


# ---------------------------------------------------------------------------
# Prime ideals above 2 and the divisibility criterion.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdealFactor:
    """A prime ideal above 2 in Z[zeta_k]: (2, g(zeta_k)) for g | Phi_k mod 2.

    The residue field is GF(2)[x]/(g) of order 2^f, f = ord_k(2); the class
    of zeta_k maps to x, an element of order k whose minimal polynomial is g.
    """

    k: int
    g: Gf2Poly
    f: int

    def coset(self) -> tuple[int, ...]:
        """Exponent coset attached to this factor (metadata; computed on demand).

        Exponents j such that, fixing beta = x mod g0 for the first factor
        g0, the minimal polynomial of beta^j is this factor's g.
        """
        from .gf2poly import _mod_int, _mul_int, _powmod_int

        factors = ideal_factors(self.k)
        g0 = factors[0].g.bits
        for orbit in _coprime_cosets(self.k):
            beta_j = _powmod_int(2, orbit[0] % self.k, g0)
            # evaluate g at beta^j inside GF(2)[x]/(g0) by Horner
            acc = 0
            for bit_i in range(self.g.degree, -1, -1):
                acc = _mod_int(_mul_int(acc, beta_j), g0)
                if (self.g.bits >> bit_i) & 1:
                    acc ^= 1
            if acc == 0:
                return tuple(orbit)
        raise RuntimeError("no exponent coset matched this ideal factor")


def _coprime_cosets(k: int) -> list[list[int]]:
    from math import gcd as intgcd

    from .gf2poly import cyclotomic_cosets

    return [orbit for orbit in cyclotomic_cosets(k) if intgcd(orbit[0], k) == 1]


@lru_cache(maxsize=None)
def ideal_factors(k: int) -> tuple[IdealFactor, ...]:
    """The prime ideals above 2, one per irreducible factor of Phi_k mod 2."""
    if k < 3 or k % 2 == 0:
        raise ValueError(f"k = {k} must be an odd integer >= 3")
    f = multiplicative_order(2, k)
    phi_mod2 = Gf2Poly.from_coeffs(cyclotomic_poly(k))
    n_factors = phi_mod2.degree // f
    if n_factors == 1:
        gs = [phi_mod2]
    else:
        gs = factor_squarefree(phi_mod2)
    if len(gs) != n_factors or any(g.degree != f for g in gs):
        raise RuntimeError(f"unexpected factor profile of the cyclotomic polynomial mod 2 for k = {k}")
    return tuple(IdealFactor(k=k, g=g, f=f) for g in gs)


def reduce_mod_ideal(a: CycInt, ideal: IdealFactor) -> Gf2Poly:
    """Residue of a in GF(2)[x]/(g): coordinates mod 2, then zeta -> x mod g."""
    if a.k != ideal.k:
        raise ValueError(f"mismatched cyclotomic orders {a.k} and {ideal.k}")
    bits = 0
    for i, c in enumerate(a.coeffs):
        if c & 1:
            bits |= 1 << i
    return Gf2Poly(bits) % ideal.g


def half_K_plus_one(ctx: FieldCtx, k: int) -> CycInt:
    """(K + 1)/2, exact; every power-basis coordinate of K + 1 must be even."""
    kval = jacobi_K(ctx, k)
    w = list(kval.coeffs)
    w[0] += 1
    if any(c & 1 for c in w):
        raise ArithmeticError("K + 1 is not divisible by 2; upstream computation is inconsistent")
    return CycInt(k, tuple(c >> 1 for c in w))


def criterion(ctx: FieldCtx, k: int, ideal: IdealFactor) -> bool:
    """True iff (K + 1)/2 lies in the given prime ideal above 2.

    Equivalent to: the minimal polynomial g attached to the ideal divides
    the sequence polynomial of the SLCE sequence for ctx.  Since k is odd,
    chi(-1) = 1 and no sign adjustment is needed.
    """
    u = half_K_plus_one(ctx, k)
    return reduce_mod_ideal(u, ideal).is_zero()
