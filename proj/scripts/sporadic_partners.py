#!/usr/bin/env python3
"""Recompute the partner j-invariants of the sporadic-degree table.

For each j with a rational isogeny of sporadic degree l, solve j(tau) = j
numerically in the upper half plane, evaluate j at the l + 1 lattices of
index l, and keep the values that are rational with a power-of-two
denominator.  Prints data/sporadic_j.json to stdout.

    python3 scripts/sporadic_partners.py > data/sporadic_j.json
"""
import json
from fractions import Fraction

import mpmath as mp

mp.mp.dps = 120

SOURCE = {
    11: [-11 * 131**3, -2**15, -11**2],
    17: [Fraction(-17**2 * 101**3, 2), Fraction(-17 * 373**3, 2**17)],
    19: [-2**15 * 3**3],
    37: [-7 * 11**3, -7 * 137**3 * 2083**3],
    43: [-2**18 * 3**3 * 5**3],
    67: [-2**15 * 3**3 * 5**3 * 11**3],
    163: [-2**18 * 3**3 * 5**3 * 23**3 * 29**3],
}


def reduce_tau(tau):
    for _ in range(1000):
        tau = tau - mp.nint(tau.real)
        if abs(tau) < 1 - mp.mpf(10) ** (-mp.mp.dps // 2):
            tau = -1 / tau
        else:
            return tau
    return tau


def jfun(tau):
    return 1728 * mp.kleinj(reduce_tau(tau))


def solve_tau(j):
    # all j here are real; search along Re(tau) = 0 or 1/2
    target = mp.mpf(j.numerator) / j.denominator
    for re in (mp.mpf(0), mp.mpf(1) / 2):
        for t0 in (1.0, 1.5, 2.5, 4.0, 6.0):
            try:
                t = mp.findroot(lambda t: mp.re(jfun(mp.mpc(re, t))) - target, mp.mpf(t0))
            except (ValueError, ZeroDivisionError):
                continue
            tau = mp.mpc(re, t)
            if t > 0 and abs(jfun(tau) - target) < abs(target) * mp.mpf(10) ** (-60) + mp.mpf(10) ** (-60):
                return tau
    raise RuntimeError(f"no tau found for j = {j}")


def as_rational(z):
    if abs(z.imag) > mp.mpf(10) ** (-40) * max(1, abs(z)):
        return None
    x = z.real
    # values beyond the working precision cannot be certified
    if abs(x) > mp.mpf(10) ** (mp.mp.dps // 5):
        return None
    for k in range(0, 25):
        den = 2**k
        n = mp.nint(x * den)
        if abs(x * den - n) < mp.mpf(10) ** (-40) * max(1, abs(x * den)):
            return Fraction(int(n), den)
    return None


def main():
    records = []
    for ell, js in SOURCE.items():
        for j in js:
            j = Fraction(j)
            tau = solve_tau(j)
            neighbours = [ell * tau] + [(tau + k) / ell for k in range(ell)]
            partners = {as_rational(jfun(t)) for t in neighbours} - {None}
            for p in sorted(partners):
                records.append({"ell": ell, "j": str(j), "partner_j": str(p)})
    doc = {
        "version": 1,
        "provenance": "scripts/sporadic_partners.py: numerical j(tau) inversion and evaluation on the "
        "index-ell sublattices, rational values identified with power-of-two denominators",
        "records": records,
    }
    print(json.dumps(doc, indent=2))


if __name__ == "__main__":
    main()
