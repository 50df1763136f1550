#!/usr/bin/env python3
"""Independent evaluation of kappa and max1(kappa) below w^w.

Ordinals are tuples of (exponent, coefficient) pairs with exponents
descending.  kappa is computed from successor steps and limits read off
the fundamental sequence; max1 uses the recurrence at limit multiples of
rho.  The additive decomposition used by the C++ engine is not used here.
"""
import sys
from functools import lru_cache


def norm(terms):
    out = []
    for e, c in terms:
        if c == 0:
            continue
        while out and out[-1][0] < e:
            out.pop()
        if out and out[-1][0] == e:
            out[-1] = (e, out[-1][1] + c)
        else:
            out.append((e, c))
    return tuple(out)


def add(a, b):
    return norm(list(a) + list(b))


def nat(n):
    return ((0, n),) if n else ()


def cmp(a, b):
    for (ea, ca), (eb, cb) in zip(a, b):
        if ea != eb:
            return -1 if ea < eb else 1
        if ca != cb:
            return -1 if ca < cb else 1
    return (len(a) > len(b)) - (len(a) < len(b))


def fmt(a):
    if not a:
        return "0"
    parts = []
    for e, c in a:
        if e == 0:
            parts.append(str(c))
            continue
        base = "w" if e == 1 else "w^%d" % e
        parts.append(base if c == 1 else "%s*%d" % (base, c))
    return "+".join(parts)


def is_limit(a):
    return bool(a) and a[-1][0] > 0


def pred(a):
    *rest, (e, c) = a
    return norm(rest + [(e, c - 1)])


def fundamental(a, n):
    *rest, (e, c) = a
    return norm(rest + [(e, c - 1), (e - 1, n)])


def sup(seq):
    x, y = seq[-2], seq[-1]
    i = 0
    while i < len(x) and i < len(y) and x[i] == y[i]:
        i += 1
    assert i < len(x) and i < len(y) and x[i][0] == y[i][0], (x, y)
    return norm(list(y[:i]) + [(y[i][0] + 1, 1)])


def make(c):
    rho_omega = c + 1

    def limit_multiple(a):
        return is_limit(a) and a[-1][0] > c

    @lru_cache(maxsize=None)
    def kappa(a):
        if not a:
            return ()
        if not is_limit(a):
            return add(max1(pred(a)), nat(1))
        if a[-1][0] <= rho_omega - 1 + 0 and not limit_multiple(a):
            # a = p + w^e with e <= c: inside rho*w of p
            *rest, (e, k) = a
            p = norm(rest + [(e, k - 1)])
            return add(max1(p), ((e, 1),))
        seq = [kappa(fundamental(a, n)) for n in (2, 3, 4, 5)]
        s1, s2 = sup(seq[:3]), sup(seq[1:])
        assert s1 == s2
        return s2

    @lru_cache(maxsize=None)
    def max1(a):
        k = kappa(a)
        if not limit_multiple(a):
            return k
        beta = a[-1][0] - c
        return add(k, max1(nat(beta)))

    return kappa, max1


CASES = [
    "0", "1", "5", "w", "w+1", "w+2", "w*2", "w*2+3", "w*3", "w^2", "w^2+1", "w^2+w", "w^2+w*2+1",
    "w^2*2", "w^2*3+w", "w^3", "w^3+w^2", "w^3+w+4", "w^4", "w^4*2+w^2*3+5", "w^5", "w^5+w^3*2+w+1",
    "w^6+w^6", "w^7+7",
]


def parse(s):
    terms = []
    for part in s.split("+"):
        if part == "0":
            continue
        coef = 1
        if "*" in part:
            part, k = part.split("*")
            coef = int(k)
        if part == "w":
            terms.append((1, coef))
        elif part.startswith("w^"):
            terms.append((int(part[2:]), coef))
        else:
            terms.append((0, int(part) * coef))
    return norm(terms)


def main():
    for c in (0, 1):
        kappa, max1 = make(c)
        rho = "1" if c == 0 else "w"
        for s in CASES:
            a = parse(s)
            print("{%s, %s, %s, %s}," % ('"%s"' % rho, '"%s"' % fmt(a), '"%s"' % fmt(kappa(a)), '"%s"' % fmt(max1(a))))


if __name__ == "__main__":
    sys.exit(main())
