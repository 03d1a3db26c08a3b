"""Indefinite binary quadratic forms: continued fractions, Pell units, and
complete decision procedures for representation, mu, and root norms.

The representation decision follows classical reduction theory.  For a
non-square discriminant D and a target m with 4m^2 < D, m is primitively
represented iff it occurs as a leading coefficient in the cycle of reduced
forms; for larger |m| the decision enumerates square roots of D modulo
4|m| and tests proper equivalence of the resulting forms against the
cycle.  Square discriminants are handled by factoring the product of the
two linear forms.  Imprimitive representations reduce to n/t^2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from . import lattice as lattice_mod
from .arith import divisors
from .errors import (InternalCheckError, InvalidInputError,
                     IsotropicFormError)

_REDUCE_CAP = 100_000
_CYCLE_CAP = 10_000_000


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


@dataclass(frozen=True)
class BinaryForm:
    """f(x, y) = a x^2 + b xy + c y^2 with positive discriminant."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.disc <= 0:
            raise InvalidInputError(
                f"form ({self.a},{self.b},{self.c}) has discriminant "
                f"{self.disc}; an indefinite form is required")

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def value(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    @staticmethod
    def from_d(d: int) -> "BinaryForm":
        """The diagonal form x^2 - d y^2."""
        return BinaryForm(1, 0, -d)

    @staticmethod
    def from_gram(lat: lattice_mod.Lattice) -> "BinaryForm":
        if lat.rank != 2:
            raise InvalidInputError("binary form needs a rank-2 lattice")
        g = lat.gram
        return BinaryForm(g[0][0], 2 * g[0][1], g[1][1])

    def gram_lattice(self) -> lattice_mod.Lattice:
        """The corresponding integral lattice; requires an even middle coefficient."""
        if self.b % 2 != 0:
            raise InvalidInputError(
                f"middle coefficient {self.b} is odd; the form is not the "
                "quadratic form of an integral lattice")
        h = self.b // 2
        return lattice_mod.Lattice(((self.a, h), (h, self.c)))


def is_anisotropic(f: BinaryForm) -> bool:
    """True iff f does not represent zero nontrivially (disc not a square)."""
    return not is_square(f.disc)


# -- continued fractions and Pell ------------------------------------------

@dataclass(frozen=True)
class CFExpansion:
    """Periodic continued fraction of sqrt(d): [a0; period repeated].

    q_sequence[i] is the denominator Q_{i+1} of the standard
    (P, Q)-recurrence over one period; Q at the end of the period is 1.
    """

    d: int
    a0: int
    period: tuple[int, ...]
    q_sequence: tuple[int, ...]


def cf_sqrt(d: int) -> CFExpansion:
    """Canonical periodic continued fraction expansion of sqrt(d)."""
    if d <= 0 or is_square(d):
        raise InvalidInputError(f"d must be a positive non-square, got {d}")
    a0 = isqrt(d)
    m, q, a = 0, 1, a0
    period, qs = [], []
    while True:
        m = a * q - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        period.append(a)
        qs.append(q)
        if a == 2 * a0 and q == 1:
            break
    return CFExpansion(d=d, a0=a0, period=tuple(period), q_sequence=tuple(qs))


@dataclass(frozen=True)
class PellSolution:
    """Fundamental solution of x^2 - d y^2 = 1 (minimal positive y)."""

    x: int
    y: int
    d: int

    def __post_init__(self):
        if self.x * self.x - self.d * self.y * self.y != 1:
            raise InternalCheckError(
                f"({self.x},{self.y}) does not solve the unit equation for d={self.d}")


def pell_fundamental(d: int) -> PellSolution:
    """Fundamental unit solution from the convergents of sqrt(d)."""
    cf = cf_sqrt(d)
    p_prev, p = 1, cf.a0
    q_prev, q = 0, 1
    terms = itertools.cycle(cf.period)
    for _ in range(4 * len(cf.period) + 8):
        if p * p - d * q * q == 1:
            return PellSolution(x=p, y=q, d=d)
        a = next(terms)
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    raise InternalCheckError(f"unit not found among convergents for d={d}")


def infinite_order_isometry(d: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """An integer matrix preserving diag(1, -d) with trace > 2.

    Built from the fundamental unit: M = [[x, d*y], [y, x]].  Trace 2x > 2
    makes the multiplicative order infinite.
    """
    s = pell_fundamental(d)
    return ((s.x, d * s.y), (s.y, s.x))


# -- reduction of indefinite forms (non-square discriminant) ----------------

def _is_reduced(a: int, b: int, c: int, sq: int) -> bool:
    # |sqrt(D) - 2|a|| < b < sqrt(D), in integer-exact terms
    return 0 < b <= sq and sq + 1 - b <= 2 * abs(a) <= sq + b


def _rho(a, b, c, disc, sq):
    """One reduction/cycle step; returns the neighbor form and its SL2 matrix."""
    ac = abs(c)
    if ac > sq:
        r = (-b) % (2 * ac)
        if r > ac:
            r -= 2 * ac
    else:
        r = sq - ((sq + b) % (2 * ac))
    c2 = (r * r - disc) // (4 * c)
    t = (b + r) // (2 * c)
    return (c, r, c2), ((0, -1), (1, t))


def _mat2_mul(m1, m2):
    return ((m1[0][0] * m2[0][0] + m1[0][1] * m2[1][0],
             m1[0][0] * m2[0][1] + m1[0][1] * m2[1][1]),
            (m1[1][0] * m2[0][0] + m1[1][1] * m2[1][0],
             m1[1][0] * m2[0][1] + m1[1][1] * m2[1][1]))


_ID2 = ((1, 0), (0, 1))


def _reduce_form(form, disc, sq):
    """Reduce to a reduced form, returning (reduced, M) with form∘M = reduced."""
    m = _ID2
    a, b, c = form
    for _ in range(_REDUCE_CAP):
        if _is_reduced(a, b, c, sq):
            return (a, b, c), m
        (a, b, c), step = _rho(a, b, c, disc, sq)
        m = _mat2_mul(m, step)
    raise InternalCheckError(f"reduction of {form} did not terminate")


@lru_cache(maxsize=512)
def _cycle(start):
    """The rho-cycle through a reduced form; tuple of forms, start first."""
    disc = start[1] ** 2 - 4 * start[0] * start[2]
    sq = isqrt(disc)
    out = [start]
    cur, _ = _rho(*start, disc, sq)
    while cur != start:
        out.append(cur)
        cur, _ = _rho(*cur, disc, sq)
        if len(out) > _CYCLE_CAP:
            raise InternalCheckError(f"cycle through {start} did not close")
    return tuple(out)


def _cycle_of(f: BinaryForm):
    disc = f.disc
    sq = isqrt(disc)
    reduced, _ = _reduce_form((f.a, f.b, f.c), disc, sq)
    return _cycle(reduced)


def _sqrt_classes_mod(disc, m):
    """All b in [0, 2|m|) with b^2 = disc (mod 4|m|)."""
    mod = 4 * abs(m)
    return [b for b in range(2 * abs(m)) if (b * b - disc) % mod == 0]


# -- representation decision -------------------------------------------------

def represents(f: BinaryForm, n: int) -> bool:
    """Complete decision: does f(x, y) = n have a nonzero integer solution?"""
    disc = f.disc
    if n == 0:
        return is_square(disc)
    if is_square(disc):
        return _represents_square_disc(f, n)
    t = 1
    while t * t <= abs(n):
        if n % (t * t) == 0 and _represents_primitively(f, n // (t * t)):
            return True
        t += 1
    return False


def _represents_primitively(f: BinaryForm, m: int) -> bool:
    """Primitive representation decision for non-square discriminant, m != 0."""
    disc = f.disc
    cyc = _cycle_of(f)
    if 4 * m * m < disc:
        return any(g[0] == m for g in cyc)
    sq = isqrt(disc)
    cycset = set(cyc)
    for b in _sqrt_classes_mod(disc, m):
        c = (b * b - disc) // (4 * m)
        reduced, _ = _reduce_form((m, b, c), disc, sq)
        if reduced in cycset:
            return True
    return False


def _divisors_signed(n: int):
    n = abs(n)
    d = 1
    while d * d <= n:
        if n % d == 0:
            yield d
            yield -d
            if d * d != n:
                yield n // d
                yield -(n // d)
        d += 1


def _square_disc_solutions(f: BinaryForm, n: int):
    """All integer solutions of f = n for square disc and n != 0 (finite)."""
    a, b, c = f.a, f.b, f.c
    k = isqrt(f.disc)
    out = set()
    if a == 0:
        # f = y (b x + c y)
        for y in _divisors_signed(n):
            rem = n // y - c * y
            if rem % b == 0:
                out.add((rem // b, y))
        return out
    # 4 a n = (2ax + (b-k) y)(2ax + (b+k) y)
    target = 4 * a * n
    for u in _divisors_signed(target):
        v = target // u
        if (v - u) % (2 * k) != 0:
            continue
        y = (v - u) // (2 * k)
        num = u - (b - k) * y
        if num % (2 * a) != 0:
            continue
        out.add((num // (2 * a), y))
    return out


def _represents_square_disc(f: BinaryForm, n: int) -> bool:
    return bool(_square_disc_solutions(f, n))


def representation_witness(f: BinaryForm, n: int):
    """A vector (x, y) with f(x, y) = n, or None.

    Slower than `represents` (it always runs the class-transform route,
    never the cycle shortcut) but returns checkable evidence; the two
    routes agreeing is itself a useful invariant.
    """
    disc = f.disc
    if n == 0:
        if not is_square(disc):
            return None
        if f.a == 0:
            return (1, 0)
        k = isqrt(disc)
        # 2a x + (b - k) y = 0 has the nonzero solution below
        g = gcd(2 * f.a, abs(f.b - k))
        v = ((k - f.b) // g, 2 * f.a // g)
        if f.value(*v) != 0:
            raise InternalCheckError(f"isotropic witness {v} failed")
        return v
    if is_square(disc):
        sols = _square_disc_solutions(f, n)
        return min(sols) if sols else None
    t = 1
    while t * t <= abs(n):
        if n % (t * t) == 0:
            for v in _primitive_representation_witnesses(f, n // (t * t)):
                return (t * v[0], t * v[1])
        t += 1
    return None


def mu(f: BinaryForm) -> int:
    """Largest negative integer represented by f.

    Defined for anisotropic indefinite forms only; for isotropic binary
    forms the maximum need not exist, so those are rejected.  The cycle of
    reduced forms supplies a represented negative value, which bounds the
    downward search.
    """
    if not is_anisotropic(f):
        raise IsotropicFormError(
            "mu is undefined for isotropic forms in this toolkit")
    cyc = _cycle_of(f)
    floor_val = max(g[0] for g in cyc if g[0] < 0)
    m = -1
    while True:
        if represents(f, m):
            return m
        m -= 1
        if m < floor_val:
            raise InternalCheckError(
                f"mu search passed the attained cycle value {floor_val}")


# -- automorphs and root norms ----------------------------------------------

def fundamental_automorph(f: BinaryForm):
    """A proper automorph of f with trace > 2 (anisotropic forms only).

    Acts on column vectors: M^T G M = G for the Gram matrix G of f.
    """
    if not is_anisotropic(f):
        raise IsotropicFormError("isotropic forms have no hyperbolic automorph")
    a, b, c = f.a, f.b, f.c
    if b % 2 == 0:
        d0 = (b // 2) ** 2 - a * c
        s = pell_fundamental(d0)
        x, y = s.x, s.y
        return ((x - (b // 2) * y, -c * y), (a * y, x + (b // 2) * y))
    s = pell_fundamental(f.disc)
    x, y = s.x, s.y
    return ((x - b * y, -2 * c * y), (2 * a * y, x + b * y))


def _mat2_inv_unimodular(m):
    d = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if abs(d) != 1:
        raise InternalCheckError("matrix is not unimodular")
    return ((d * m[1][1], -d * m[0][1]), (-d * m[1][0], d * m[0][0]))


def _apply(m, v):
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def _canonical_witness(f: BinaryForm, v):
    """Deterministic representative of the automorph orbit of v (up to sign).

    Walks the orbit to minimal coordinate size, then takes the
    lexicographically largest among the minimal vectors and their
    negatives.
    """
    if is_square(f.disc):
        return max(v, (-v[0], -v[1]))
    m = fundamental_automorph(f)
    minv = _mat2_inv_unimodular(m)

    def key(w):
        return (abs(w[0]) + abs(w[1]), abs(w[0]), abs(w[1]))

    cur = v
    for step in (m, minv):
        while True:
            nxt = _apply(step, cur)
            if key(nxt) < key(cur):
                cur = nxt
            else:
                break
    cands = {cur}
    for step in (m, minv):
        w = cur
        for _ in range(2):
            w = _apply(step, w)
            if key(w) == key(cur):
                cands.add(w)
    cands |= {(-x, -y) for x, y in cands}
    best = max(w for w in cands if key(w) == key(cur))
    return best


def _primitive_representation_witnesses(f: BinaryForm, m: int):
    """One primitive solution of f = m per proper-automorphism class.

    For square discriminants the solution set itself is finite and is
    returned whole.
    """
    disc = f.disc
    out = []
    if is_square(disc):
        for v in sorted(_square_disc_solutions(f, m)):
            if gcd(v[0], v[1]) == 1:
                out.append(v)
        return out
    sq = isqrt(disc)
    f_red, p = _reduce_form((f.a, f.b, f.c), disc, sq)
    for b in _sqrt_classes_mod(disc, m):
        c = (b * b - disc) // (4 * m)
        g_red, q = _reduce_form((m, b, c), disc, sq)
        r = _ID2
        cur = f_red
        while True:
            if cur == g_red:
                tot = _mat2_mul(_mat2_mul(p, r), _mat2_inv_unimodular(q))
                v = (tot[0][0], tot[1][0])
                if f.value(*v) != m or gcd(v[0], v[1]) != 1:
                    raise InternalCheckError(
                        f"transform produced a bad witness {v} for {m}")
                out.append(v)
                break
            cur, step = _rho(*cur, disc, sq)
            r = _mat2_mul(r, step)
            if cur == f_red:
                break  # not equivalent: this class does not meet f
    return out


def binary_roots(f: BinaryForm):
    """Complete list of achievable negative root norms with one witness each.

    Root norms divide twice the exponent of the discriminant group, which
    makes the candidate set finite; within a norm, the divisibility
    condition is invariant under the orthogonal group, so one test per
    representation class decides it.
    """
    lat = f.gram_lattice()
    exponent = lat.discriminant().exponent
    out = []
    for d in divisors(2 * exponent):
        m = -d
        for v in _primitive_representation_witnesses(f, m):
            if _is_binary_root(f, m, v):
                out.append((m, _canonical_witness(f, v)))
                break
    return tuple(out)


def _is_binary_root(f: BinaryForm, m: int, v) -> bool:
    x, y = v
    return ((2 * f.a * x + f.b * y) % m == 0
            and (f.b * x + 2 * f.c * y) % m == 0)
