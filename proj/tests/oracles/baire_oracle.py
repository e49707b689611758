#!/usr/bin/env python3
"""Reference run of the greedy sumset construction, using fractions.Fraction.

Prints the n translated-back elements for each interval set as C++ string
literals. The output is pasted into tests/oracles/baire_frozen.hpp.
"""
from fractions import Fraction as Q
import sys


def inside(x, parts, excluded):
    if x in excluded:
        return False
    for lo, hi, lc, hc in parts:
        if (x >= lo if lc else x > lo) and (x <= hi if hc else x < hi):
            return True
    return False


def canonical_between(lo, hi):
    q = 1
    while True:
        p = (lo * q).numerator // (lo * q).denominator + 1
        if Q(p, q) < hi:
            return Q(p, q)
        q += 1


def construct(parts, excluded, n):
    lo, hi, _, _ = next(p for p in parts if p[0] < p[1])
    centre = canonical_between(lo, hi)
    c = -centre
    shifted = [(a + c, b + c, lc, hc) for a, b, lc, hc in parts]
    shifted_ex = {x + c for x in excluded}
    reach = hi - centre
    delta = Q(1)
    while 2 * delta > reach:
        delta /= 2
    xs = []
    q = 1
    while len(xs) < n:
        for p in range(1, q * 100):
            x = Q(p, q)
            if x >= delta or len(xs) == n:
                break
            if x.denominator != q or x in xs:
                continue
            if not inside(2 * x, shifted, shifted_ex):
                continue
            if all(inside(x + xj, shifted, shifted_ex) for xj in xs):
                xs.append(x)
        q += 1
    ys = [x - c / 2 for x in xs]
    for a in ys:
        for b in ys:
            assert inside(a + b, parts, excluded)
    return c, delta, ys


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 50
    cases = {
        "open_unit": ([(Q(0), Q(1), False, False)], set()),
        "open_unit_minus_half": ([(Q(0), Q(1), False, False)], {Q(1, 2)}),
    }
    for name, (parts, ex) in cases.items():
        c, delta, ys = construct(parts, ex, n)
        print(f"// {name}: c = {c}, delta = {delta}")
        print(f"inline const std::vector<std::string> k_{name} = {{")
        for i in range(0, len(ys), 8):
            print("    " + ", ".join(f'"{y}"' for y in ys[i:i + 8]) + ",")
        print("};")


if __name__ == "__main__":
    main()
