"""Polynomial arithmetic over GF(2): gcd, factorization, linear complexity.

Polynomials are bit-packed: bit i of an integer is the coefficient of x^i.
Addition is xor, squaring is a bit spread, remainders come from an
aligned-xor loop (with a chunked Horner fast path when the divisor is
small), so gcds stay sub-second into degree ~10^5 and divisibility tests
stay cheap at any period this package generates.

Degree of the zero polynomial is the sentinel -1; nonzero polynomials over
GF(2) are automatically monic.
"""

from __future__ import annotations

import warnings

from .fields import multiplicative_order, prime_factors

# byte -> bits interleaved with zeros (for squaring), and its inverse
_SPREAD = [sum(((b >> i) & 1) << (2 * i) for i in range(8)) for b in range(256)]
_COMPRESS = [sum(((b >> (2 * i)) & 1) << i for i in range(4)) for b in range(256)]


def _mul_int(a: int, b: int) -> int:
    if a.bit_count() > b.bit_count():
        a, b = b, a
    r = 0
    while a:
        low = a & -a
        r ^= b << (low.bit_length() - 1)
        a ^= low
    return r


def _sqr_int(a: int) -> int:
    r = 0
    shift = 0
    while a:
        r |= _SPREAD[a & 0xFF] << shift
        a >>= 8
        shift += 16
    return r


def _sqrt_int(a: int) -> int:
    r = 0
    shift = 0
    while a:
        chunk = a & 0xFFFF
        if chunk & 0xAAAA:
            raise ValueError("not a square over GF(2)")
        r |= (_COMPRESS[chunk & 0xFF] | (_COMPRESS[chunk >> 8] << 4)) << shift
        a >>= 16
        shift += 8
    return r


def _divmod_int(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length() - 1
    q = 0
    da = a.bit_length() - 1
    while da >= db:
        q |= 1 << (da - db)
        a ^= b << (da - db)
        da = a.bit_length() - 1
    return q, a


_CHUNK = 64


def _mod_small_divisor(a: int, b: int) -> int:
    # Horner over 64-bit chunks of a; b has degree <= 64, so every step is
    # small-integer work regardless of how large a is.
    db = b.bit_length() - 1
    mask = (1 << _CHUNK) - 1
    xc = 1 << _CHUNK
    d = _CHUNK
    while d >= db:
        xc ^= b << (d - db)
        d = xc.bit_length() - 1
    n_chunks = (a.bit_length() + _CHUNK - 1) // _CHUNK
    rem = 0
    for i in range(n_chunks - 1, -1, -1):
        rem = _mul_int(rem, xc) ^ ((a >> (i * _CHUNK)) & mask) if rem else (a >> (i * _CHUNK)) & mask
        d = rem.bit_length() - 1
        while d >= db:
            rem ^= b << (d - db)
            d = rem.bit_length() - 1
    return rem


def _mod_int(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length() - 1
    da = a.bit_length() - 1
    if 0 < db <= _CHUNK and da - db > 4 * _CHUNK:
        return _mod_small_divisor(a, b)
    while da >= db:
        a ^= b << (da - db)
        da = a.bit_length() - 1
    return a


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, _mod_int(a, b)
    return a


def _powmod_int(base: int, e: int, mod: int) -> int:
    result = 1 if mod.bit_length() > 1 else 0
    base = _mod_int(base, mod)
    while e:
        if e & 1:
            result = _mod_int(_mul_int(result, base), mod)
        base = _mod_int(_sqr_int(base), mod)
        e >>= 1
    return result


class Gf2Poly:
    """A dense polynomial over GF(2), stored as a bit-packed integer."""

    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise ValueError("negative bit pattern")
        self.bits = bits

    @classmethod
    def from_coeffs(cls, coeffs) -> "Gf2Poly":
        bits = 0
        for i, c in enumerate(coeffs):
            if int(c) & 1:
                bits |= 1 << i
        return cls(bits)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return self.bits.bit_length() - 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def coeff(self, i: int) -> int:
        return (self.bits >> i) & 1

    def __eq__(self, other) -> bool:
        if isinstance(other, Gf2Poly):
            return self.bits == other.bits
        if isinstance(other, int):
            return self.bits == other
        return NotImplemented

    def __hash__(self):
        return hash(("Gf2Poly", self.bits))

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(_mul_int(self.bits, other.bits))

    def __divmod__(self, other: "Gf2Poly") -> tuple["Gf2Poly", "Gf2Poly"]:
        q, r = _divmod_int(self.bits, other.bits)
        return Gf2Poly(q), Gf2Poly(r)

    def __floordiv__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(_divmod_int(self.bits, other.bits)[0])

    def __mod__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(_mod_int(self.bits, other.bits))

    def square(self) -> "Gf2Poly":
        return Gf2Poly(_sqr_int(self.bits))

    def pow_mod(self, e: int, mod: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(_powmod_int(self.bits, e, mod.bits))

    def divides(self, other: "Gf2Poly") -> bool:
        return _mod_int(other.bits, self.bits) == 0

    def derivative(self) -> "Gf2Poly":
        n = (self.bits.bit_length() + 1) & ~1  # even length so the mask below is exact
        mask = ((1 << n) - 1) // 3  # bits at even positions: 0b...010101
        return Gf2Poly((self.bits >> 1) & mask)

    def is_irreducible(self) -> bool:
        """Ben-Or test: no factor of degree <= degree/2."""
        d = self.degree
        if d < 1:
            return False
        if d == 1:
            return True
        t = _mod_int(2, self.bits)  # the polynomial x
        for _ in range(d // 2):
            t = _mod_int(_sqr_int(t), self.bits)
            if _gcd_int(t ^ 2, self.bits).bit_length() - 1 != 0:
                return False
        return True

    def __str__(self) -> str:
        if self.bits == 0:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            if (self.bits >> i) & 1:
                terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"Gf2Poly({self})"


X = Gf2Poly(2)
ONE = Gf2Poly(1)


def gcd(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    """Monic gcd; gcd(f, 0) = f.  Both arguments zero is an error."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return Gf2Poly(_gcd_int(a.bits, b.bits))


def all_ones_poly(k: int) -> Gf2Poly:
    """1 + x + ... + x^(k-1)."""
    return Gf2Poly((1 << k) - 1)


def x_pow_plus_one(v: int) -> Gf2Poly:
    """x^v + 1."""
    return Gf2Poly((1 << v) | 1)


def poly_from_seq(seq) -> Gf2Poly:
    """Sequence polynomial: coefficient t equals bits[t] of one period."""
    return Gf2Poly(seq.as_int())


# ---------------------------------------------------------------------------
# Factorization: squarefree split, then distinct-degree, then a deterministic
# equal-degree split via trace maps with enumerated arguments (no randomness).
# ---------------------------------------------------------------------------


def _squarefree_parts(f: int) -> dict[int, int]:
    out: dict[int, int] = {}
    df = Gf2Poly(f).derivative().bits
    if df == 0:
        for g, e in _squarefree_parts(_sqrt_int(f)).items():
            out[g] = out.get(g, 0) + 2 * e
        return out
    c = _gcd_int(f, df)
    w = _divmod_int(f, c)[0]
    i = 1
    while w != 1:
        y = _gcd_int(w, c)
        z = _divmod_int(w, y)[0]
        if z != 1:
            out[z] = out.get(z, 0) + i
        w = y
        c = _divmod_int(c, y)[0]
        i += 1
    if c != 1:
        for g, e in _squarefree_parts(_sqrt_int(c)).items():
            out[g] = out.get(g, 0) + 2 * e
    return out


def _left_nullspace_gf2(rows: list[int]) -> list[int]:
    """Combos v (bit i = row i) with xor of the selected rows = 0."""
    pivots: dict[int, tuple[int, int]] = {}
    null = []
    for i, row in enumerate(rows):
        combo = 1 << i
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = (row, combo)
                break
            prow, pcombo = pivots[top]
            row ^= prow
            combo ^= pcombo
        if row == 0:
            null.append(combo)
    return null


def _berlekamp_factors(f: int) -> list[int]:
    """Irreducible factors of a squarefree f (deterministic Q-matrix method)."""
    n = f.bit_length() - 1
    if n <= 1:
        return [f]
    x2 = _mod_int(4, f)  # x^2
    rows = []
    r = 1
    for i in range(n):
        rows.append(r ^ (1 << i))  # row i of Q - I, where Q row i = x^(2i) mod f
        r = _mod_int(_mul_int(r, x2), f)
    basis = _left_nullspace_gf2(rows)
    pieces = [f]
    for v in basis:
        if v == 1:  # constant splitting polynomial carries no information
            continue
        refined = []
        for piece in pieces:
            vm = _mod_int(v, piece) if piece.bit_length() - 1 > 1 else 0
            g = _gcd_int(vm, piece) if vm else piece
            if 0 < g.bit_length() - 1 < piece.bit_length() - 1:
                refined.append(g)
                refined.append(_divmod_int(piece, g)[0])
            else:
                refined.append(piece)
        pieces = refined
    if len(pieces) != len(basis):
        raise RuntimeError("splitting basis did not separate all factors")
    return pieces


def factor_squarefree(f: Gf2Poly) -> list[Gf2Poly]:
    """Irreducible factors of a squarefree polynomial, sorted by bit pattern."""
    return sorted((Gf2Poly(g) for g in _berlekamp_factors(f.bits)), key=lambda g: g.bits)


def factor(f: Gf2Poly) -> list[tuple[Gf2Poly, int]]:
    """Complete factorization into (irreducible, multiplicity) pairs.

    Pairs are sorted by (degree, bit pattern); the product recombines to f.
    """
    if f.is_zero() or f.degree < 1:
        raise ValueError("factor requires a nonzero polynomial of degree >= 1")
    found: dict[int, int] = {}
    for part, mult in _squarefree_parts(f.bits).items():
        for g in _berlekamp_factors(part):
            found[g] = found.get(g, 0) + mult
    return sorted(
        ((Gf2Poly(g), e) for g, e in found.items()),
        key=lambda item: (item[0].degree, item[0].bits),
    )


def factored_str(factors: list[tuple[Gf2Poly, int]]) -> str:
    """Canonical rendering: '(x+1)^4 (x^2+x+1)^10'; '1' for an empty product."""
    if not factors:
        return "1"
    parts = []
    for g, e in factors:
        parts.append(f"({g})" + (f"^{e}" if e != 1 else ""))
    return " ".join(parts)


def recombine(factors: list[tuple[Gf2Poly, int]]) -> Gf2Poly:
    out = ONE
    for g, e in factors:
        for _ in range(e):
            out = out * g
    return out


# ---------------------------------------------------------------------------
# Cyclotomic cosets and minimal polynomials of roots of unity over GF(2).
# ---------------------------------------------------------------------------


def cyclotomic_cosets(k: int) -> list[list[int]]:
    """Orbits of Z/kZ under multiplication by 2, each in cycle order."""
    if k % 2 == 0:
        raise ValueError("k must be odd")
    seen = [False] * k
    orbits = []
    for j in range(k):
        if seen[j]:
            continue
        orbit = []
        c = j
        while not seen[c]:
            seen[c] = True
            orbit.append(c)
            c = (2 * c) % k
        orbits.append(orbit)
    return orbits


def smallest_irreducible(degree: int) -> Gf2Poly:
    """The degree-d irreducible over GF(2) with the smallest bit pattern."""
    if degree == 1:
        return X
    for cand in range((1 << degree) + 1, 1 << (degree + 1), 2):
        if Gf2Poly(cand).is_irreducible():
            return Gf2Poly(cand)
    raise RuntimeError(f"no irreducible of degree {degree}")  # unreachable


def _gf2e_pow(a: int, e: int, modulus: int) -> int:
    return _powmod_int(a, e, modulus)


def _element_of_order(k: int, modulus: int, f: int) -> int:
    n = (1 << f) - 1
    if n % k != 0:
        raise ValueError(f"no element of order {k} in GF(2^{f})")
    cofactor = n // k
    kprimes = prime_factors(k)
    g = 2
    while True:
        gamma = _gf2e_pow(g, cofactor, modulus)
        if gamma != 1 and all(_gf2e_pow(gamma, k // r, modulus) != 1 for r in kprimes):
            return gamma
        g += 1


def _orbit_min_poly(beta: int, orbit: list[int], modulus: int) -> Gf2Poly:
    # product of (x - beta^c) over the orbit; coefficients must land in GF(2)
    poly = [1]
    for c in orbit:
        root = _gf2e_pow(beta, c, modulus)
        nxt = [0] * (len(poly) + 1)
        for i, coef in enumerate(poly):
            nxt[i + 1] ^= coef
            nxt[i] ^= _mod_int(_mul_int(coef, root), modulus)
        poly = nxt
    bits = 0
    for i, coef in enumerate(poly):
        if coef == 1:
            bits |= 1 << i
        elif coef != 0:
            raise RuntimeError("orbit product has a coefficient outside GF(2)")
    return Gf2Poly(bits)


def coset_minimal_polys(k: int) -> list[tuple[tuple[int, ...], Gf2Poly]]:
    """(coset, minimal polynomial) for every nonzero 2-cyclotomic coset mod k.

    Built inside an explicit GF(2^f), f = ord_k(2), independently of any
    cyclotomic-polynomial factorization.
    """
    if k % 2 == 0:
        raise ValueError("k must be odd")
    f = multiplicative_order(2, k)
    modulus = smallest_irreducible(f).bits
    beta = _element_of_order(k, modulus, f)
    out = []
    for orbit in cyclotomic_cosets(k):
        if orbit == [0]:
            continue
        out.append((tuple(orbit), _orbit_min_poly(beta, orbit, modulus)))
    return out


def minimal_polys_of_order(k: int) -> list[Gf2Poly]:
    """Distinct minimal polynomials of the elements of order exactly k."""
    from math import gcd as intgcd

    polys = [g for orbit, g in coset_minimal_polys(k) if intgcd(orbit[0], k) == 1]
    return sorted(set(polys), key=lambda g: g.bits)


# ---------------------------------------------------------------------------
# Linear complexity, two ways.
# ---------------------------------------------------------------------------


def linear_complexity(seq) -> int:
    """v - deg gcd(x^v + 1, sequence polynomial); 0 for the zero sequence."""
    s2 = poly_from_seq(seq)
    if s2.is_zero():
        warnings.warn("all-zero sequence: linear complexity 0 by convention")
        return 0
    return seq.v - gcd(x_pow_plus_one(seq.v), s2).degree


def berlekamp_massey(seq, n_terms: int | None = None) -> tuple[int, Gf2Poly]:
    """Shortest-register synthesis from two periods of the sequence.

    Returns (L, connection polynomial c with c_0 = 1, ascending bits).  The
    connection polynomial satisfies sum_i c_i s_(n-i) = 0 for n >= L.
    """
    v = seq.v
    if n_terms is None:
        n_terms = 2 * v
    if n_terms < 2 * v:
        raise ValueError(f"need at least 2v = {2 * v} terms, got {n_terms}")
    reps = -(-n_terms // v)
    bits = [int(b) for b in seq.bits] * reps
    bits = bits[:n_terms]
    n_total = len(bits)
    s_rev = 0
    for b in bits:  # bit j of s_rev = bits[n_total - 1 - j]
        s_rev = (s_rev << 1) | b
    c, b_poly = 1, 1
    big_l, last = 0, -1
    for n in range(n_total):
        d = (c & (s_rev >> (n_total - 1 - n))).bit_count() & 1
        if d:
            t = c
            c ^= b_poly << (n - last)
            if 2 * big_l <= n:
                big_l = n + 1 - big_l
                b_poly = t
                last = n
    return big_l, Gf2Poly(c)


def lfsr_regenerate(connection: Gf2Poly, big_l: int, seed: list[int], count: int) -> list[int]:
    """Run the register s_n = sum_(i=1..L) c_i s_(n-i) from the seed bits."""
    out = list(seed[:big_l])
    for n in range(len(out), count):
        acc = 0
        for i in range(1, big_l + 1):
            acc ^= connection.coeff(i) & out[n - i]
        out.append(acc)
    return out[:count]
