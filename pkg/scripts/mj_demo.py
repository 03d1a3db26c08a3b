#!/usr/bin/env python3
"""Build ambient binary-sublattice certificates and write them to disk.

Runs the construction on two ambient lattices of signature (3, r-3): the
triple hyperbolic plane and its extension by two (-2)-vectors, for both
the pell and the primes strategy, then re-verifies every saved file.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from reflekt import construct, serialize
from reflekt.lattice import Lattice


@dataclass(frozen=True)
class DemoCase:
    name: str
    ambient: Lattice
    h: tuple
    bound: int
    count: int
    strategy: str


def demo_cases():
    u = Lattice.hyperbolic_plane()
    u3 = u.direct_sum(u).direct_sum(u)
    big = u3.direct_sum(Lattice.diagonal(-2, -2))
    return (
        DemoCase("u3_pell", u3, (1, 1, 0, 0, 0, 0), 2, 3, "pell"),
        DemoCase("u3_primes", u3, (1, 1, 0, 0, 0, 0), 1, 1, "primes"),
        DemoCase("u3_deg4", u3, (1, 2, 0, 0, 0, 0), 2, 2, "pell"),
        DemoCase("rank8_pell", big, (1, 1, 0, 0, 0, 0, 0, 0), 2, 2, "pell"),
    )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="mj_certificates",
                    help="output directory for certificate JSON")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    for case in demo_cases():
        cert = construct.mj_family(case.ambient, case.h, case.bound,
                                   case.count, strategy=case.strategy)
        path = out / f"{case.name}.json"
        path.write_text(serialize.dumps(serialize.mj_to_obj(cert)) + "\n")
        norms = [case.ambient.norm(e.v) for e in cert.entries]
        print(f"{case.name}: T={cert.t_index} threshold={cert.threshold} "
              f"a={[e.a for e in cert.entries]} q(v)={norms} "
              f"mu={[e.mu for e in cert.entries]} -> {path}")

    print("re-verifying saved certificates...")
    for path in sorted(out.glob("*.json")):
        failures = serialize.verify_certificate_obj(json.loads(path.read_text()))
        status = "OK" if not failures else f"FAIL ({failures})"
        print(f"  {path}: {status}")
        if failures:
            sys.exit(1)


if __name__ == "__main__":
    main()
