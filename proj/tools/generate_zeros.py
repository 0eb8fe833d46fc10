#!/usr/bin/env python3
# Copyright 2026 The explicitavg Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the bundled table of zeta-zero ordinates.

Sign changes of Hardy's Z function are located on a grid with a
double-precision Riemann-Siegel sum, and each bracketed root is then refined
with mpmath.siegelz. The table is accepted only if it holds exactly COUNT
zeros below the ordinate of zero number COUNT as returned by
mpmath.zetazero, which rules out missed close pairs.

Usage: generate_zeros.py COUNT OUTPUT [STEP]
"""
import math
import sys

import mpmath
import numpy as np
from scipy.optimize import brentq


def theta(t):
    return (t / 2 * np.log(t / (2 * math.pi)) - t / 2 - math.pi / 8
            + 1 / (48 * t) + 7 / (5760 * t ** 3))


def z_fast(t):
    """Riemann-Siegel Z with the first remainder term, vectorised."""
    t = np.asarray(t, dtype=float)
    a = np.sqrt(t / (2 * math.pi))
    n_max = np.floor(a).astype(int)
    th = theta(t)
    out = np.zeros_like(t)
    for n in range(1, int(n_max.max()) + 1):
        mask = n <= n_max
        out += np.where(mask, np.cos(th - t * math.log(n)) / math.sqrt(n), 0.0)
    out *= 2
    p = a - n_max
    c0 = np.cos(2 * math.pi * (p * p - p - 1 / 16)) / np.cos(2 * math.pi * p)
    sign = np.where(n_max % 2 == 1, 1.0, -1.0)
    return out + sign * a ** -0.5 * c0


def brackets(lo, hi, step):
    grid = np.arange(lo, hi + step, step)
    values = np.concatenate([z_fast(chunk) for chunk in np.array_split(grid, max(1, len(grid) // 20000))])
    flips = np.nonzero(np.sign(values[:-1]) != np.sign(values[1:]))[0]
    return [(grid[i], grid[i + 1]) for i in flips]


def refine(a, b, step):
    """Root of Z in [a, b]: Brent on the double-precision Z, then one Newton
    step on the extended-precision value. Widens by one step when the ends
    do not bracket (the fast sum can misplace a flip sitting on a node)."""
    f = mpmath.fp.siegelz
    if math.copysign(1, f(a)) == math.copysign(1, f(b)):
        for lo, hi in ((a - step, a), (b, b + step)):
            if math.copysign(1, f(lo)) != math.copysign(1, f(hi)):
                a, b = lo, hi
                break
        else:
            return None
    g = brentq(f, a, b, xtol=1e-14, maxiter=200)
    t = mpmath.mpf(g)
    t -= mpmath.siegelz(t) / f(g, derivative=1)
    return t if a <= t <= b else None


def main() -> int:
    if len(sys.argv) not in (3, 4):
        print(__doc__, file=sys.stderr)
        return 2
    count = int(sys.argv[1])
    step = float(sys.argv[3]) if len(sys.argv) == 4 else 0.05
    mpmath.mp.dps = 25
    last = mpmath.zetazero(count).imag
    top = float(last) + 1e-6
    found = []
    for a, b in brackets(10.0, top, step):
        g = refine(a, b, step)
        if g is None:
            print("no root confirmed near %.6f" % a, file=sys.stderr)
            return 1
        if found and abs(g - found[-1]) < 1e-12:
            continue
        found.append(g)
    found = [g for g in found if g <= top]
    if len(found) != count:
        print("found %d zeros below %.6f, expected %d; retry with a smaller "
              "step" % (len(found), top, count), file=sys.stderr)
        return 1
    if abs(found[-1] - last) > mpmath.mpf(10) ** -15 * last:
        print("last ordinate disagrees with zetazero", file=sys.stderr)
        return 1
    with open(sys.argv[2], "w", encoding="utf-8") as out:
        out.write("# Ordinates of the first %d nontrivial zeros of zeta(s)\n" % count)
        out.write("# located by sign changes of Hardy's Z, refined with mpmath\n")
        for g in found:
            out.write(mpmath.nstr(g, 17, min_fixed=0, max_fixed=30) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
