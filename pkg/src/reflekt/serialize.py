"""Stable JSON formats for lattices, vectors, and certificates.

All numbers are integers or exact rationals rendered as strings like
"3/2"; nothing is ever a float.  Serialization is deterministic (sorted
keys, fixed indentation) so identical objects produce identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import binary, construct
from .errors import CertificateError
from .lattice import Lattice

FORMAT_TAG = "reflekt/1"


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def frac_to_str(x: Fraction) -> str:
    return str(Fraction(x))


def frac_from_str(s) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise CertificateError(f"bad rational value {s!r}: {exc}") from None


def frac_vec_to_obj(v):
    return [frac_to_str(x) for x in v]


def frac_vec_from_obj(obj):
    return tuple(frac_from_str(x) for x in obj)


def lattice_to_obj(lat: Lattice) -> dict:
    return {"gram": [list(row) for row in lat.gram]}


def lattice_from_obj(obj) -> Lattice:
    if not isinstance(obj, dict) or "gram" not in obj:
        raise CertificateError('lattice object must be {"gram": [[...]]}')
    gram = obj["gram"]
    if (not isinstance(gram, list) or not gram
            or any(not isinstance(row, list) for row in gram)
            or any(not isinstance(x, int) or isinstance(x, bool)
                   for row in gram for x in row)):
        raise CertificateError("gram must be a nonempty matrix of integers")
    return Lattice(tuple(tuple(row) for row in gram))


def load_lattice(path: str) -> Lattice:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CertificateError(f"{path} is not valid JSON: {exc}") from None
    return lattice_from_obj(obj)


# -- certificates -------------------------------------------------------------

def avoid_roots_to_obj(cert: construct.AvoidRootsCertificate) -> dict:
    return {
        "format": FORMAT_TAG,
        "kind": "avoid_roots",
        "n": cert.n,
        "b": cert.b,
        "primes": [[k, p] for k, p in cert.primes],
        "a": cert.a,
        "form": [cert.form.a, cert.form.b, cert.form.c],
    }


def avoid_roots_from_obj(obj) -> construct.AvoidRootsCertificate:
    try:
        return construct.AvoidRootsCertificate(
            n=obj["n"], b=obj["b"],
            primes=tuple((int(k), int(p)) for k, p in obj["primes"]),
            a=obj["a"],
            form=binary.BinaryForm(*obj["form"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"malformed avoid_roots certificate: {exc}") from None


def pell_family_to_obj(cert: construct.PellFamilyCertificate) -> dict:
    return {
        "format": FORMAT_TAG,
        "kind": "pell_family",
        "a": cert.a,
        "d": cert.d,
        "mu": cert.mu,
        "witness": list(cert.witness),
    }


def pell_family_from_obj(obj) -> construct.PellFamilyCertificate:
    try:
        return construct.PellFamilyCertificate(
            a=obj["a"], d=obj["d"], mu=obj["mu"],
            witness=tuple(int(x) for x in obj["witness"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"malformed pell_family certificate: {exc}") from None


def mj_to_obj(cert: construct.MjCertificate) -> dict:
    return {
        "format": FORMAT_TAG,
        "kind": "mj_family",
        "ambient": lattice_to_obj(cert.ambient),
        "h": list(cert.h),
        "d": cert.d,
        "N": cert.big_n,
        "strategy": cert.strategy,
        "threshold": cert.threshold,
        "e": list(cert.e),
        "m": cert.m,
        "f_tilde": frac_vec_to_obj(cert.f_tilde),
        "T": cert.t_index,
        "entries": [{
            "a": en.a,
            "u": frac_vec_to_obj(en.u),
            "m_factor": en.m_factor,
            "v": list(en.v),
            "basis": [list(row) for row in en.basis],
            "gram": [list(row) for row in en.gram],
            "mu": en.mu,
            "index": en.index,
        } for en in cert.entries],
    }


def mj_from_obj(obj) -> construct.MjCertificate:
    try:
        entries = tuple(construct.MjEntry(
            a=en["a"],
            u=frac_vec_from_obj(en["u"]),
            m_factor=en["m_factor"],
            v=tuple(int(x) for x in en["v"]),
            basis=tuple(tuple(int(x) for x in row) for row in en["basis"]),
            gram=tuple(tuple(int(x) for x in row) for row in en["gram"]),
            mu=en["mu"],
            index=en["index"],
        ) for en in obj["entries"])
        return construct.MjCertificate(
            ambient=lattice_from_obj(obj["ambient"]),
            h=tuple(int(x) for x in obj["h"]),
            d=obj["d"],
            big_n=obj["N"],
            strategy=obj["strategy"],
            threshold=obj["threshold"],
            e=tuple(int(x) for x in obj["e"]),
            m=obj["m"],
            f_tilde=frac_vec_from_obj(obj["f_tilde"]),
            t_index=obj["T"],
            entries=entries)
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"malformed mj_family certificate: {exc}") from None


def nv_to_obj(lat: Lattice, d: int, box: int,
              entries: tuple[construct.NvComplementEntry, ...]) -> dict:
    return {
        "format": FORMAT_TAG,
        "kind": "nv_complements",
        "lattice": lattice_to_obj(lat),
        "d": d,
        "box": box,
        "entries": [{
            "h": list(en.h),
            "basis": [list(row) for row in en.basis],
            "gram": [list(row) for row in en.gram],
            "fingerprint": {
                "rank": en.fingerprint[0],
                "det": en.fingerprint[1],
                "invariant_factors": list(en.fingerprint[2]),
                "signature": list(en.fingerprint[3]),
            },
            "fingerprint_class": en.fingerprint_class,
        } for en in entries],
    }


def nv_from_obj(obj):
    try:
        lat = lattice_from_obj(obj["lattice"])
        entries = tuple(construct.NvComplementEntry(
            h=tuple(int(x) for x in en["h"]),
            basis=tuple(tuple(int(x) for x in row) for row in en["basis"]),
            gram=tuple(tuple(int(x) for x in row) for row in en["gram"]),
            fingerprint=(en["fingerprint"]["rank"],
                         en["fingerprint"]["det"],
                         tuple(en["fingerprint"]["invariant_factors"]),
                         tuple(en["fingerprint"]["signature"])),
            fingerprint_class=en["fingerprint_class"],
        ) for en in obj["entries"])
        return lat, obj["d"], obj["box"], entries
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"malformed nv_complements certificate: {exc}") from None


def verify_certificate_obj(obj) -> list[str]:
    """Re-run all invariant checks for a parsed certificate object."""
    if not isinstance(obj, dict):
        raise CertificateError("certificate must be a JSON object")
    if obj.get("format") != FORMAT_TAG:
        raise CertificateError(
            f"unsupported format tag {obj.get('format')!r}; expected {FORMAT_TAG!r}")
    kind = obj.get("kind")
    if kind == "avoid_roots":
        return construct.validate_avoid_roots(avoid_roots_from_obj(obj))
    if kind == "pell_family":
        return construct.validate_pell_family(pell_family_from_obj(obj))
    if kind == "mj_family":
        return construct.validate_mj(mj_from_obj(obj))
    if kind == "nv_complements":
        return construct.validate_nv(*nv_from_obj(obj))
    raise CertificateError(f"unknown certificate kind {kind!r}")
