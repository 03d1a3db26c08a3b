"""Explicit constructions of binary anisotropic lattices avoiding prescribed
negative values, with machine-checkable certificates.

Three builders live here:

* avoid_roots(n, b): a product of primes p_1..p_n, each chosen so that -k
  is a quadratic nonresidue mod p_k, making x^2 - ab y^2 miss 0, -1, .., -n.
* pell_family(a): the discriminant a^2 - 1 family, whose largest negative
  represented value is exactly 2 - 2a.
* mj_family(...): binary sublattices of an ambient lattice that contain a
  given positive vector h, are anisotropic, meet the h-complement in a
  primitive vector of strictly decreasing norm, and represent nothing in
  [-d*N, -1].

Each certificate re-validates from scratch; `verify` in the CLI runs the
same checks on saved JSON.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import binary, intlinalg
from .arith import DEFAULT_EFFORT_LIMIT, nonresidue_prime
from .errors import (ConstructionError, InternalCheckError,
                     InvalidInputError)
from .lattice import Lattice, Sublattice

DEFAULT_SEARCH_BOX = 10
DEFAULT_CANDIDATE_CAP = 10_000

STRATEGY_PELL = "pell"
STRATEGY_PRIMES = "primes"


# -- avoid-roots construction -------------------------------------------------

@dataclass(frozen=True)
class AvoidRootsCertificate:
    """Primes p_k with (-k/p_k) = -1, their product a, and the form x^2 - ab y^2."""

    n: int
    b: int
    primes: tuple[tuple[int, int], ...]  # (k, p_k)
    a: int
    form: binary.BinaryForm

    @property
    def product_ab(self) -> int:
        return self.a * self.b


def avoid_roots(n: int, b: int, exclude=frozenset(),
                effort_limit: int = DEFAULT_EFFORT_LIMIT) -> AvoidRootsCertificate:
    """Smallest-prime certificate that x^2 - ab y^2 represents none of 0..-n.

    Primes are distinct, greater than b, and chosen greedily for k = 1..n;
    extra exclusions support generating strictly growing sequences of a.
    """
    if n < 1 or b < 1:
        raise InvalidInputError("avoid_roots needs n >= 1 and b >= 1")
    used = set(exclude)
    primes = []
    for k in range(1, n + 1):
        p = nonresidue_prime(k, exclude=frozenset(used), minimum=b + 1,
                             effort_limit=effort_limit)
        used.add(p)
        primes.append((k, p))
    a = 1
    for _, p in primes:
        a *= p
    cert = AvoidRootsCertificate(
        n=n, b=b, primes=tuple(primes), a=a,
        form=binary.BinaryForm.from_d(a * b))
    failures = validate_avoid_roots(cert)
    if failures:
        raise InternalCheckError(
            "freshly built certificate failed validation: " + "; ".join(failures))
    return cert


def validate_avoid_roots(cert: AvoidRootsCertificate) -> list[str]:
    """Re-run every invariant from scratch; returns a list of failures."""
    from .arith import is_prime, jacobi

    out = []
    if cert.n < 1 or cert.b < 1:
        out.append("n and b must be positive")
    ks = [k for k, _ in cert.primes]
    ps = [p for _, p in cert.primes]
    if ks != list(range(1, cert.n + 1)):
        out.append(f"prime list must cover k = 1..{cert.n}")
    if len(set(ps)) != len(ps):
        out.append("primes are not distinct")
    prod = 1
    for k, p in cert.primes:
        prod *= p
        if not is_prime(p):
            out.append(f"{p} is not prime")
        if p <= cert.b:
            out.append(f"prime {p} is not greater than b = {cert.b}")
        if p % 2 == 1 and jacobi(-k, p) != -1:
            out.append(f"-{k} is a quadratic residue mod {p}")
        # the direct contract, independent of the symbol machinery
        if any((x * x + k) % p == 0 for x in range(p // 2 + 1)):
            out.append(f"direct check found x with x^2 = -{k} mod {p}")
    if prod != cert.a:
        out.append(f"a = {cert.a} is not the product of the primes")
    ab = cert.a * cert.b
    if binary.is_square(ab):
        out.append(f"ab = {ab} is a square; the form is isotropic")
    if (cert.form.a, cert.form.b, cert.form.c) != (1, 0, -ab):
        out.append("certificate form does not match (1, 0, -ab)")
    for k in range(0, cert.n + 1):
        if binary.represents(cert.form, -k):
            out.append(f"form represents -{k}")
    # independent brute-force oracle
    hits = _brute_force_values(1, 0, -ab, 50)
    for k in range(0, cert.n + 1):
        if -k in hits:
            out.append(f"brute force found a representation of -{k}")
    return out


def _brute_force_values(a, b, c, box):
    vals = set()
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            if x or y:
                vals.add(a * x * x + b * x * y + c * y * y)
    return vals


# -- Pell (a^2 - 1) family ----------------------------------------------------

@dataclass(frozen=True)
class PellFamilyCertificate:
    a: int
    d: int                       # a^2 - 1
    mu: int                      # 2 - 2a
    witness: tuple[int, int]     # (a - 1, 1)


def pell_family(a: int) -> PellFamilyCertificate:
    """The discriminant a^2 - 1 and its extreme value 2 - 2a with witness.

    The value is recomputed by the complete decision; a mismatch would be a
    genuine falsification and is raised loudly rather than returned.
    """
    if a < 2:
        raise InvalidInputError(f"pell_family needs a >= 2, got {a}")
    d = a * a - 1
    expected = 2 - 2 * a
    witness = (a - 1, 1)
    form = binary.BinaryForm.from_d(d)
    if form.value(*witness) != expected:
        raise InternalCheckError("witness norm disagrees with 2 - 2a")
    computed = binary.mu(form)
    if computed != expected:
        raise InternalCheckError(
            f"mu(x^2 - {d} y^2) = {computed}, expected {expected}; "
            "this contradicts the continued-fraction analysis")
    return PellFamilyCertificate(a=a, d=d, mu=expected, witness=witness)


def validate_pell_family(cert: PellFamilyCertificate) -> list[str]:
    out = []
    if cert.a < 2:
        out.append("a must be >= 2")
        return out
    if cert.d != cert.a ** 2 - 1:
        out.append(f"d = {cert.d} is not a^2 - 1")
    if cert.mu != 2 - 2 * cert.a:
        out.append(f"mu = {cert.mu} is not 2 - 2a")
    form = binary.BinaryForm.from_d(cert.d)
    if form.value(*cert.witness) != cert.mu:
        out.append("witness does not attain mu")
    if gcd(cert.witness[0], cert.witness[1]) != 1:
        out.append("witness is imprimitive")
    if binary.mu(form) != cert.mu:
        out.append("complete decision disagrees with the stored mu")
    return out


def select_pell_a(n: int) -> int:
    """Smallest a >= 2 with a > 1 + n/2, so that 2 - 2a < -n."""
    if n < 1:
        raise InvalidInputError(f"select_pell_a needs n >= 1, got {n}")
    return max(2, n // 2 + 2)


# -- the ambient M_j construction ---------------------------------------------

@dataclass(frozen=True)
class MjEntry:
    a: int
    u: tuple[Fraction, ...]          # ambient rational coordinates
    m_factor: int                    # minimal multiple with m_factor*u integral
    v: tuple[int, ...]               # m_factor * u, primitive in h-complement
    basis: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[int, ...], ...]
    mu: int
    index: int                       # [M_j : Zv + Zh], divides T


@dataclass(frozen=True)
class MjCertificate:
    ambient: Lattice
    h: tuple[int, ...]
    d: int
    big_n: int
    strategy: str
    threshold: int                   # N * T^2
    e: tuple[int, ...]               # primitive isotropic vector of the h-complement
    m: int                           # divisibility of e inside the h-complement
    f_tilde: tuple[Fraction, ...]
    t_index: int
    entries: tuple[MjEntry, ...]


def _h_complement(ambient: Lattice, h):
    h = ambient._check_vector(h)
    g = 0
    for x in h:
        g = gcd(g, x)
    if g != 1:
        raise InvalidInputError(f"h = {h} must be primitive (content {g})")
    d = ambient.norm(h)
    if d <= 0:
        raise InvalidInputError(f"h must have positive norm, got q(h) = {d}")
    comp = Sublattice(ambient, (h,)).orthogonal_complement()
    return h, d, comp


def _frac_vec(v):
    return tuple(Fraction(x) for x in v)


def _pair_frac(gram, u, v):
    total = Fraction(0)
    for i, row in enumerate(gram):
        if u[i]:
            total += u[i] * sum(row[j] * v[j] for j in range(len(v)))
    return total


def _find_isotropic(comp: Sublattice, search_box: int):
    """Smallest-box primitive isotropic vector of the restriction.

    Growing the box by one means the first nonempty search holds exactly
    the vectors of minimal coordinate size; ties break lexicographically.
    Returns (ambient coordinates, coefficients over the sublattice basis).
    """
    restricted = comp.as_lattice()
    for box in range(1, search_box + 1):
        vs = restricted.enumerate_norm_vectors(0, box)
        if vs:
            coeffs = vs[0]
            ambient_v = intlinalg.mat_vec(intlinalg.transpose(comp.basis), coeffs)
            return tuple(ambient_v), coeffs
    raise ConstructionError(
        f"no isotropic vector found with coefficients up to {search_box}; "
        "raise the search box")


def _integral_lattice_basis(comp: Sublattice, e_ambient, m: int):
    """Basis (rational ambient rows) of the span of the complement and e/m."""
    scaled = [tuple(m * x for x in row) for row in comp.basis]
    scaled.append(tuple(e_ambient))
    span = intlinalg.row_span_basis(tuple(scaled))
    return tuple(tuple(Fraction(x, m) for x in row) for row in span)


def _solve_unit_pairing(gram, e_tilde, basis):
    """x in the spanned lattice with (e_tilde, x) = 1, via extended gcd."""
    from .arith import gcd_ext

    pairings = []
    for row in basis:
        p = _pair_frac(gram, e_tilde, row)
        if p.denominator != 1:
            raise InternalCheckError("pairing with e~ is not integral")
        pairings.append(int(p))
    g, coeffs = 0, [0] * len(pairings)
    for i, p in enumerate(pairings):
        gg, x, y = gcd_ext(g, p)
        coeffs = [c * x for c in coeffs]
        coeffs[i] = y
        g = gg
    if g != 1:
        raise InternalCheckError(
            f"pairing ideal of e~ is {g}Z, expected Z")
    x = [Fraction(0)] * len(basis[0])
    for c, row in zip(coeffs, basis):
        for i in range(len(x)):
            x[i] += c * row[i]
    return tuple(x)


def _make_isotropic_partner(gram, e_tilde, basis, search_box: int):
    """Isotropic f~ in the spanned lattice with (e~, f~) = 1.

    Start from any solution of the pairing equation; subtracting
    (q(x)/2) e~ kills the norm when q(x) is even, otherwise the solution
    is shifted by small kernel vectors of odd norm until the parity works.
    """
    x = _solve_unit_pairing(gram, e_tilde, basis)
    qx = _pair_frac(gram, x, x)
    if qx.denominator != 1:
        raise InternalCheckError("q(x) is not integral on the spanned lattice")
    if int(qx) % 2 != 0:
        shift = _odd_norm_kernel_vector(gram, e_tilde, basis, search_box)
        if shift is None:
            raise ConstructionError(
                "no isotropic partner: every candidate norm has odd parity "
                f"within coefficient box {search_box}")
        x = tuple(a + b for a, b in zip(x, shift))
        qx = _pair_frac(gram, x, x)
    half = int(qx) // 2
    f_tilde = tuple(a - half * b for a, b in zip(x, _frac_vec(e_tilde)))
    if _pair_frac(gram, f_tilde, f_tilde) != 0:
        raise InternalCheckError("partner vector is not isotropic")
    if _pair_frac(gram, _frac_vec(e_tilde), f_tilde) != 1:
        raise InternalCheckError("partner vector does not pair to 1 with e~")
    return f_tilde


def _odd_norm_kernel_vector(gram, e_tilde, basis, search_box: int):
    """A vector w with (e~, w) = 0 and q(w) odd, as a Fraction ambient vector."""
    pairings = []
    for row in basis:
        pairings.append(int(_pair_frac(gram, _frac_vec(e_tilde), row)))
    kern = intlinalg.kernel((tuple(pairings),))
    rank = len(kern)
    if rank == 0:
        return None
    coords = [0] * rank

    def assemble():
        w = [Fraction(0)] * len(basis[0])
        for c, krow in zip(coords, kern):
            if c:
                for brow, k in zip(basis, krow):
                    if k:
                        for i in range(len(w)):
                            w[i] += c * k * brow[i]
        return tuple(w)

    for box in range(1, search_box + 1):
        def rec(depth):
            if depth == rank:
                w = assemble()
                qw = _pair_frac(gram, w, w)
                if qw.denominator == 1 and int(qw) % 2 == 1:
                    return w
                return None
            for c in range(-box, box + 1):
                coords[depth] = c
                got = rec(depth + 1)
                if got is not None:
                    return got
            return None

        got = rec(0)
        if got is not None:
            return got
    return None


def mj_family(ambient: Lattice, h, big_n: int, count: int,
              strategy: str = STRATEGY_PELL, search_box: int = DEFAULT_SEARCH_BOX,
              candidate_cap: int = DEFAULT_CANDIDATE_CAP,
              effort_limit: int = DEFAULT_EFFORT_LIMIT) -> MjCertificate:
    """Binary anisotropic sublattices through h missing all of [-d*N, -1].

    The construction: take a primitive isotropic e in the h-complement with
    pairing ideal mZ, extend by e/m to an integral overlattice, find an
    isotropic partner f~ with (e/m, f~) = 1, and set u_a = e/m - d*a*f~ of
    norm -2da.  A strategy supplies a strictly increasing sequence of a;
    each candidate entry is accepted only after every final check passes
    directly on the saturated sublattice spanned by v (the primitive
    generator below u_a) and h.
    """
    if big_n < 1 or count < 1:
        raise InvalidInputError("mj_family needs N >= 1 and count >= 1")
    if strategy not in (STRATEGY_PELL, STRATEGY_PRIMES):
        raise InvalidInputError(f"unknown strategy {strategy!r}")
    pos, neg = ambient.signature()
    if pos != 3 or ambient.rank < 6:
        raise InvalidInputError(
            f"wrong signature: need (3, r-3) with r >= 6, got ({pos},{neg})")
    h, d, comp = _h_complement(ambient, h)

    full = Sublattice(ambient, comp.basis + (h,))
    ident = Sublattice(ambient, intlinalg.identity(ambient.rank))
    t_index = full.index_in(ident)
    threshold = big_n * t_index * t_index

    e_ambient, e_coeffs = _find_isotropic(comp, search_box)
    m = comp.as_lattice().divisibility(e_coeffs)
    e_tilde = tuple(Fraction(x, m) for x in e_ambient)
    overbasis = _integral_lattice_basis(comp, e_ambient, m)
    f_tilde = _make_isotropic_partner(ambient.gram, e_tilde, overbasis, search_box)

    entries = []
    a = None
    prev_norm = 0
    exclude_primes: set[int] = set()
    tried = 0
    while len(entries) < count:
        tried += 1
        if tried > candidate_cap:
            raise ConstructionError(
                f"no acceptable candidate within {candidate_cap} attempts")
        if strategy == STRATEGY_PELL:
            a = (select_pell_a(threshold) if a is None else a + 1)
        else:
            cert = avoid_roots(threshold, 2, exclude=frozenset(exclude_primes),
                               effort_limit=effort_limit)
            exclude_primes.update(p for _, p in cert.primes)
            a = cert.a
        result = _build_entry(ambient, h, d, e_tilde, f_tilde, a,
                              big_n, t_index)
        if result is None:
            continue
        entry, norm_v = result
        if norm_v >= prev_norm:
            continue
        prev_norm = norm_v
        entries.append(entry)

    cert = MjCertificate(
        ambient=ambient, h=h, d=d, big_n=big_n, strategy=strategy,
        threshold=threshold, e=tuple(e_ambient), m=m, f_tilde=f_tilde,
        t_index=t_index, entries=tuple(entries))
    failures = validate_mj(cert)
    if failures:
        raise InternalCheckError(
            "freshly built certificate failed validation: " + "; ".join(failures))
    return cert


def _build_entry(ambient, h, d, e_tilde, f_tilde, a, big_n, t_index):
    """Assemble one candidate entry, or None if a direct check rejects it."""
    u = tuple(et - d * a * ft for et, ft in zip(e_tilde, f_tilde))
    qu = _pair_frac(ambient.gram, u, u)
    if qu != -2 * d * a:
        raise InternalCheckError(f"q(u_a) = {qu}, expected {-2 * d * a}")
    m_factor = 1
    for x in u:
        m_factor = lcm(m_factor, x.denominator)
    v = tuple(int(x * m_factor) for x in u)
    g = 0
    for x in v:
        g = gcd(g, x)
    if g != 1:
        raise InternalCheckError(f"v = {v} is imprimitive")
    if ambient.evaluate(v, h) != 0:
        raise InternalCheckError("v does not pair to zero with h")
    span = Sublattice(ambient, (v, h))
    mj = span.saturate()
    gram = mj.gram_matrix()
    form = binary.BinaryForm.from_gram(Lattice(gram))
    if not binary.is_anisotropic(form):
        return None
    mu_val = binary.mu(form)
    if mu_val >= -d * big_n:
        return None
    index = span.index_in(mj)
    if t_index % index != 0:
        raise InternalCheckError(
            f"index {index} of the span inside its saturation does not divide "
            f"T = {t_index}")
    entry = MjEntry(a=a, u=u, m_factor=m_factor, v=v, basis=mj.basis,
                    gram=gram, mu=mu_val, index=index)
    return entry, ambient.norm(v)


def validate_mj(cert: MjCertificate) -> list[str]:
    """Re-run all certificate invariants from scratch."""
    out = []
    try:
        h, d, comp = _h_complement(cert.ambient, cert.h)
    except InvalidInputError as exc:
        return [str(exc)]
    if d != cert.d:
        out.append(f"stored d = {cert.d}, recomputed {d}")
    pos, neg = cert.ambient.signature()
    if pos != 3 or cert.ambient.rank < 6:
        out.append(f"ambient signature ({pos},{neg}) out of contract")
    if cert.ambient.norm(cert.e) != 0:
        out.append("e is not isotropic")
    ecoords = comp.coordinates_of(cert.e)
    if ecoords is None or any(c.denominator != 1 for c in ecoords):
        out.append("e does not lie in the h-complement")
    else:
        g = 0
        for c in ecoords:
            g = gcd(g, int(c))
        if g != 1:
            out.append("e is imprimitive in the h-complement")
        m = comp.as_lattice().divisibility(tuple(int(c) for c in ecoords))
        if m != cert.m:
            out.append(f"stored m = {cert.m}, recomputed {m}")
    e_tilde = tuple(Fraction(x, cert.m) for x in cert.e)
    if _pair_frac(cert.ambient.gram, e_tilde, cert.f_tilde) != 1:
        out.append("(e~, f~) != 1")
    if _pair_frac(cert.ambient.gram, cert.f_tilde, cert.f_tilde) != 0:
        out.append("f~ is not isotropic")
    full = Sublattice(cert.ambient, comp.basis + (h,))
    ident = Sublattice(cert.ambient, intlinalg.identity(cert.ambient.rank))
    t = full.index_in(ident)
    if t != cert.t_index:
        out.append(f"stored T = {cert.t_index}, recomputed {t}")
    if cert.threshold != cert.big_n * t * t:
        out.append("threshold is not N*T^2")

    prev = 0
    for idx, entry in enumerate(cert.entries):
        tag = f"entry {idx}"
        expect_u = tuple(et - cert.d * entry.a * ft
                         for et, ft in zip(e_tilde, cert.f_tilde))
        if tuple(entry.u) != expect_u:
            out.append(f"{tag}: u does not equal e~ - d*a*f~")
        v = entry.v
        if tuple(Fraction(x) for x in v) != tuple(entry.m_factor * x for x in entry.u):
            out.append(f"{tag}: v != m_factor * u")
        if cert.m % entry.m_factor != 0:
            out.append(f"{tag}: m_factor does not divide m")
        g = 0
        for x in v:
            g = gcd(g, x)
        if g != 1:
            out.append(f"{tag}: v is imprimitive")
        if cert.ambient.evaluate(v, cert.h) != 0:
            out.append(f"{tag}: (v, h) != 0")
        try:
            span = Sublattice(cert.ambient, (v, cert.h))
            mj = Sublattice(cert.ambient, entry.basis)
        except Exception as exc:  # malformed basis data
            out.append(f"{tag}: bad basis ({exc})")
            continue
        sat = mj.saturate()
        try:
            if mj.index_in(sat) != 1:
                out.append(f"{tag}: stored basis is not primitive")
        except Exception:
            out.append(f"{tag}: stored basis span mismatch")
        if not mj.contains(cert.h):
            out.append(f"{tag}: h is not in the sublattice")
        if not mj.contains(v):
            out.append(f"{tag}: v is not in the sublattice")
        if mj.gram_matrix() != entry.gram:
            out.append(f"{tag}: stored gram disagrees with the basis")
        form = binary.BinaryForm.from_gram(Lattice(entry.gram))
        if not binary.is_anisotropic(form):
            out.append(f"{tag}: gram is isotropic")
            continue
        if intlinalg.det(entry.gram) >= 0:
            out.append(f"{tag}: gram determinant is not negative")
        mu_val = binary.mu(form)
        if mu_val != entry.mu:
            out.append(f"{tag}: stored mu = {entry.mu}, recomputed {mu_val}")
        if mu_val >= -cert.d * cert.big_n:
            out.append(f"{tag}: mu = {mu_val} is not below {-cert.d * cert.big_n}")
        for k in range(1, cert.d * cert.big_n + 1):
            if binary.represents(form, -k):
                out.append(f"{tag}: form represents -{k}")
        brute = _brute_force_values(form.a, form.b, form.c, 50)
        for k in range(0, cert.d * cert.big_n + 1):
            if -k in brute:
                out.append(f"{tag}: brute force found -{k}")
        idx_val = span.index_in(mj)
        if idx_val != entry.index:
            out.append(f"{tag}: stored index {entry.index}, recomputed {idx_val}")
        if t % idx_val != 0:
            out.append(f"{tag}: index {idx_val} does not divide T = {t}")
        qv = cert.ambient.norm(v)
        if qv >= prev:
            out.append(f"{tag}: q(v) = {qv} is not strictly decreasing")
        prev = qv
    return out


# -- complements of norm-d vectors and rescaling -------------------------------

@dataclass(frozen=True)
class NvComplementEntry:
    h: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[int, ...], ...]
    fingerprint: tuple
    fingerprint_class: int


def nv_complements(lat: Lattice, d: int, box: int) -> tuple[NvComplementEntry, ...]:
    """Orthogonal complements of all primitive norm-d vectors in the box.

    The fingerprint (rank, determinant, invariant factors, signature) is a
    cheap isometry invariant; entries sharing one are flagged with the same
    class index as possibly isometric.  Completeness beyond the box is not
    claimed, and no attempt is made to classify vectors up to the ambient
    orthogonal group.
    """
    if d <= 0:
        raise InvalidInputError(f"d must be positive, got {d}")
    entries = []
    fingerprints = []
    for h in lat.enumerate_norm_vectors(d, box):
        comp = Sublattice(lat, (h,)).orthogonal_complement()
        gram = comp.gram_matrix()
        comp_lat = Lattice(gram)
        disc = comp_lat.discriminant()
        fp = (comp.rank, intlinalg.det(gram), disc.invariant_factors,
              comp_lat.signature())
        if fp in fingerprints:
            cls = fingerprints.index(fp)
        else:
            cls = len(fingerprints)
            fingerprints.append(fp)
        entries.append(NvComplementEntry(
            h=h, basis=comp.basis, gram=gram, fingerprint=fp,
            fingerprint_class=cls))
    return tuple(entries)


def validate_nv(lat: Lattice, d: int, box: int,
                entries: tuple[NvComplementEntry, ...]) -> list[str]:
    out = []
    fresh = nv_complements(lat, d, box)
    if len(fresh) != len(entries):
        out.append(f"expected {len(fresh)} entries, certificate has {len(entries)}")
        return out
    for got, want in zip(entries, fresh):
        if got != want:
            out.append(f"entry for h = {got.h} does not re-derive")
            continue
        for row in got.basis:
            if lat.evaluate(row, got.h) != 0:
                out.append(f"complement row {row} does not pair to zero with {got.h}")
    return out


def rescaling_family(lat: Lattice, n: int) -> tuple[Lattice, ...]:
    """[L(1), ..., L(n)]."""
    if n < 1:
        raise InvalidInputError(f"family size must be >= 1, got {n}")
    return tuple(lat.rescale(k) for k in range(1, n + 1))
