#!/usr/bin/env python3
"""Construct the permutation generators shipped in data/catalog.json.

Every group is built from a natural action (alternating/symmetric groups on
points, SL2(p) on nonzero vectors, PSL2(q) on the projective line, U3(3) on
the isotropic points of its Hermitian form, 2.M12 as monomial automorphisms
of the extended ternary Golay code). Orders are cross-checked with sympy.

Output: JSON on stdout, {name: {"degree": n, "gens": [cycle strings]}}.
Generator tuples are refined into short 2-generator tuples by the C++
catalog maintenance tool; this script only supplies the raw actions.
"""
import itertools
import json
import sys

from sympy.combinatorics import Permutation, PermutationGroup


def cycles(img):
    """1-based cycle notation of a 0-based image list."""
    seen = [False] * len(img)
    out = []
    for s in range(len(img)):
        if seen[s] or img[s] == s:
            seen[s] = True
            continue
        cyc = []
        x = s
        while not seen[x]:
            seen[x] = True
            cyc.append(x + 1)
            x = img[x]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def from_cycles(n, cyc_list):
    img = list(range(n))
    for cyc in cyc_list:
        for i, p in enumerate(cyc):
            img[p - 1] = cyc[(i + 1) % len(cyc)] - 1
    return img


def check_order(name, gens, expected):
    g = PermutationGroup([Permutation(x) for x in gens])
    order = g.order()
    if order != expected:
        sys.exit(f"{name}: order {order} != {expected}")
    return order


# ---------------------------------------------------------------- prime fields
def sl2_on_vectors(p, mats):
    pts = [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(pts)}
    gens = []
    for m in mats:
        gens.append([idx[((m[0][0] * a + m[0][1] * b) % p,
                          (m[1][0] * a + m[1][1] * b) % p)] for a, b in pts])
    return gens


def psl2_on_line(p, mats):
    def norm(a, b):
        if b % p != 0:
            inv = pow(b, p - 2, p)
            return ((a * inv) % p, 1)
        return (1, 0)
    # point order: 0..p-1 then infinity
    pts = [(x, 1) for x in range(p)] + [(1, 0)]
    idx = {v: i for i, v in enumerate(pts)}
    gens = []
    for m in mats:
        gens.append([idx[norm(m[0][0] * a + m[0][1] * b,
                              m[1][0] * a + m[1][1] * b)] for a, b in pts])
    return gens


def matmul(a, b, p):
    return [[sum(a[i][k] * b[k][j] for k in range(2)) % p for j in range(2)]
            for i in range(2)]


# ------------------------------------------------------------------------ F8
def f8_mul(a, b):
    r = 0
    for i in range(3):
        if (b >> i) & 1:
            r ^= a << i
    for i in (4, 3):
        if (r >> i) & 1:
            r ^= 0b1011 << (i - 3)
    return r


def f8_inv(a):
    for b in range(1, 8):
        if f8_mul(a, b) == 1:
            return b
    raise ValueError


def l2_8_on_line():
    # points 0..7 field elements, 8 = infinity
    inf = 8

    def mobius(a, b, c, d):
        img = []
        for x in range(9):
            if x == inf:
                num, den = a, c
            else:
                num = f8_mul(a, x) ^ b
                den = f8_mul(c, x) ^ d
            if den == 0:
                img.append(inf)
            else:
                img.append(f8_mul(num, f8_inv(den)))
        return img
    t = 0b010
    return [mobius(1, 1, 0, 1), mobius(t, 0, 0, 1), mobius(0, 1, 1, 0)]


# ------------------------------------------------------------------------ F9
# a + b*i with i^2 = -1, stored as a + 3b
def f9(a, b):
    return (a % 3) + 3 * (b % 3)


def f9_parts(x):
    return x % 3, x // 3


def f9_add(x, y):
    a, b = f9_parts(x)
    c, d = f9_parts(y)
    return f9(a + c, b + d)


def f9_mul(x, y):
    a, b = f9_parts(x)
    c, d = f9_parts(y)
    return f9(a * c - b * d, a * d + b * c)


def f9_conj(x):
    a, b = f9_parts(x)
    return f9(a, -b)


def f9_inv(x):
    for y in range(1, 9):
        if f9_mul(x, y) == 1:
            return y
    raise ValueError


def sl2_9_on_vectors():
    """SL2(9) = 2.A6 on the 80 nonzero vectors of F9^2."""
    pts = [(a, b) for a in range(9) for b in range(9) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(pts)}
    minus_one = f9(-1, 0)
    mats = [[[1, 0], [1, 1]], [[1, 0], [f9(0, 1), 1]], [[0, minus_one], [1, 0]]]
    gens = []
    for m in mats:
        gens.append([idx[(f9_add(f9_mul(m[0][0], a), f9_mul(m[0][1], b)),
                          f9_add(f9_mul(m[1][0], a), f9_mul(m[1][1], b)))]
                     for a, b in pts])
    return gens


def herm(x, y):
    # h(x, y) = x1 conj(y3) + x2 conj(y2) + x3 conj(y1)
    s = 0
    for i, j in ((0, 2), (1, 1), (2, 0)):
        s = f9_add(s, f9_mul(x[i], f9_conj(y[j])))
    return s


def u33_on_isotropic_points():
    vecs = [v for v in itertools.product(range(9), repeat=3) if any(v)]

    def normalize(v):
        for c in v:
            if c:
                inv = f9_inv(c)
                return tuple(f9_mul(inv, x) for x in v)
        raise ValueError

    pts = sorted({normalize(v) for v in vecs if herm(v, v) == 0})
    assert len(pts) == 28
    idx = {v: i for i, v in enumerate(pts)}
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

    def apply(m, v):
        return tuple(
            f9_add(f9_add(f9_mul(m[r][0], v[0]), f9_mul(m[r][1], v[1])),
                   f9_mul(m[r][2], v[2])) for r in range(3))

    def unitary(m):
        cols = [apply(m, e) for e in basis]
        for i in range(3):
            for j in range(3):
                if herm(cols[i], cols[j]) != herm(basis[i], basis[j]):
                    return False
        return True

    mats = []
    for a, b, c in itertools.product(range(9), repeat=3):
        m = [[1, a, b], [0, 1, c], [0, 0, 1]]
        if unitary(m) and (a, b, c) != (0, 0, 0):
            mats.append(m)
    for a, b, c in itertools.product(range(1, 9), repeat=3):
        m = [[a, 0, 0], [0, b, 0], [0, 0, c]]
        if unitary(m):
            mats.append(m)
    mats.append([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    gens = []
    for m in mats:
        img = [idx[normalize(apply(m, v))] for v in pts]
        if img != list(range(28)) and img not in gens:
            gens.append(img)
    frob = [idx[tuple(f9_conj(x) for x in v)] for v in pts]
    return gens, frob


# ---------------------------------------------------------- Mathieu groups
M11_GENS = [[list(range(1, 12))], [[3, 7, 11, 8], [4, 10, 5, 6]]]
M12_EXTRA = [[1, 12], [2, 11], [3, 6], [4, 8], [5, 9], [7, 10]]


def ternary_golay():
    """Extended cyclic [11,6,5] code over F3, generator 2 + x^2 + 2x^3 + x^4 + x^5.

    Coordinates 0..10 are the cyclic positions, coordinate 11 the parity
    check (minus the coordinate sum).
    """
    poly = [2, 0, 1, 2, 1, 1]
    rows = []
    for s in range(6):
        row = [0] * 11
        for i, c in enumerate(poly):
            row[(i + s) % 11] = c
        rows.append(row + [(-sum(row)) % 3])
    return rows


def code_contains(basis, v):
    v = v[:]
    for b in basis:
        piv = next(i for i, x in enumerate(b) if x)
        if v[piv]:
            f = (v[piv] * b[piv]) % 3
            v = [(x - f * y) % 3 for x, y in zip(v, b)]
    return not any(v)


def reduce_basis(basis):
    # echelon with distinct pivots
    out = []
    for row in basis:
        v = row[:]
        for b in out:
            piv = next(i for i, x in enumerate(b) if x)
            if v[piv]:
                f = (v[piv] * b[piv]) % 3
                v = [(x - f * y) % 3 for x, y in zip(v, b)]
        if any(v):
            out.append(v)
    return out


def monomial_lift(basis, perm):
    """Signs eps with v -> (eps_i * v_{perm^-1(i)}) preserving the code."""
    n = 12
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    for signs in itertools.product((1, 2), repeat=n):
        ok = True
        for b in basis:
            w = [(signs[i] * b[inv[i]]) % 3 for i in range(n)]
            if not code_contains(basis, w):
                ok = False
                break
        if ok:
            return signs
    return None


def golay_cover():
    basis = reduce_basis(ternary_golay())
    assert len(basis) == 6
    # M12 labels 1..11 = field points 0..10, label 12 = infinity
    m12 = [from_cycles(12, M11_GENS[0]), from_cycles(12, M11_GENS[1]),
           from_cycles(12, M12_EXTRA)]
    lifts = []
    for g in m12:
        signs = monomial_lift(basis, g)
        if signs is None:
            return None
        # point (i, s): index i + 12*(s==2); monomial sends e_i -> eps e_{g(i)}
        img = [0] * 24
        for i in range(12):
            for s in (0, 1):
                target = g[i]
                eps = signs[target]
                sign = s if eps == 1 else 1 - s
                img[i + 12 * s] = target + 12 * sign
        lifts.append(img)
    return lifts, m12


def main():
    out = {}

    def put(name, gens, order):
        check_order(name, gens, order)
        out[name] = {"degree": len(gens[0]), "gens": [cycles(g) for g in gens]}

    for n, order in ((5, 60), (6, 360), (7, 2520), (8, 20160)):
        put(f"A{n}", [from_cycles(n, [[1, 2, 3]]),
                      from_cycles(n, [list(range(1 if n % 2 else 2, n + 1))]
                                  + ([] if n % 2 else [[1]]))], order)
        put(f"S{n}", [from_cycles(n, [[1, 2]]),
                      from_cycles(n, [list(range(1, n + 1))])],
            {5: 120, 6: 720, 7: 5040, 8: 40320}[n])

    # PSL2(7) on the projective line of F7 (8 points) and PGL2(7)
    put("L3(2)", psl2_on_line(7, [[[1, 1], [0, 1]], [[0, 6], [1, 0]]]), 168)
    put("PGL2(7)", psl2_on_line(7, [[[1, 1], [0, 1]], [[0, 6], [1, 0]],
                                    [[3, 0], [0, 1]]]), 336)
    put("L2(8)", l2_8_on_line(), 504)
    put("L2(11)", psl2_on_line(11, [[[1, 1], [0, 1]], [[0, 10], [1, 0]]]), 660)
    put("PGL2(11)", psl2_on_line(11, [[[1, 1], [0, 1]], [[0, 10], [1, 0]],
                                      [[2, 0], [0, 1]]]), 1320)
    for p, order in ((5, 120), (7, 336), (11, 1320)):
        put(f"SL2({p})", sl2_on_vectors(p, [[[1, 1], [0, 1]],
                                            [[0, p - 1], [1, 0]]]), order)

    put("2.A6", sl2_9_on_vectors(), 720)

    u_gens, frob = u33_on_isotropic_points()
    put("U3(3)", u_gens, 6048)
    put("G2(2)", u_gens + [frob], 12096)

    put("M11", [from_cycles(11, c) for c in M11_GENS], 7920)
    put("M12", [from_cycles(12, c) for c in M11_GENS + [M12_EXTRA]], 95040)
    cover = golay_cover()
    if cover is None:
        sys.exit("2.M12: standard M12 generators do not lift to the code")
    put("2.M12", cover[0], 190080)

    json.dump(out, sys.stdout, indent=1)
    print()


if __name__ == "__main__":
    main()
