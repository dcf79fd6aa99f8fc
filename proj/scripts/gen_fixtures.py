#!/usr/bin/env python3
"""Regenerate the OEIS b-file fixtures under fixtures/oeis/.

Every sequence is computed here from scratch (closed-form products,
generating-function algebra over exact fractions, or continued
fractions), independently of the C++ library, and is asserted against
known reference prefixes before anything is written.  Run from the
repository root:

    python3 scripts/gen_fixtures.py
"""

from fractions import Fraction
from math import comb, factorial
import os

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "fixtures", "oeis")

N = 64  # working truncation order for series algebra


# ---------------------------------------------------------------------------
# exact truncated power series over Fraction, coefficient index = power of x

def ser(coeffs):
    c = [Fraction(v) for v in coeffs]
    return c + [Fraction(0)] * (N + 1 - len(c))


def smul(a, b):
    r = [Fraction(0)] * (N + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(N + 1 - i):
            if b[j]:
                r[i + j] += ai * b[j]
    return r


def sdiv(a, b):
    assert b[0] != 0
    q = [Fraction(0)] * (N + 1)
    for n in range(N + 1):
        acc = a[n]
        for i in range(n):
            acc -= q[i] * b[n - i]
        q[n] = acc / b[0]
    return q


def ssqrt1(a):
    assert a[0] == 1
    s = [Fraction(0)] * (N + 1)
    s[0] = Fraction(1)
    for n in range(1, N + 1):
        acc = a[n]
        for i in range(1, n):
            acc -= s[i] * s[n - i]
        s[n] = acc / 2
    return s


def scompose(a, b):
    assert b[0] == 0
    r = [Fraction(0)] * (N + 1)
    r[0] = a[N]
    for i in range(N - 1, -1, -1):
        r = smul(r, b)
        r[0] += a[i]
    return r


def srevert(f):
    assert f[0] == 0 and f[1] != 0
    g = [Fraction(0)] * (N + 1)
    g[1] = 1 / f[1]
    for n in range(2, N + 1):
        # [x^n] f(g) with g_n = 0, then correct through the linear term
        h = scompose(f, g)
        g[n] = -h[n] / f[1]
    h = scompose(f, g)
    assert h[1] == 1 and all(h[i] == 0 for i in range(2, N + 1) if i != 1)
    return g


def shift_down(a, k):
    assert all(a[i] == 0 for i in range(k))
    return a[k:] + [Fraction(0)] * k


X = ser([0, 1])
ONE = ser([1])

# Catalan and ternary generating functions
CAT = shift_down([x - y for x, y in zip(ONE, ssqrt1(ser([1, -4])))], 1)
CAT = [c / 2 for c in CAT]
assert [CAT[i] for i in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]

TERN = srevert(sdiv(X, scompose(ser([1, 3, 3, 1]), X)))
TERN[0] += 1  # t = 1 + Rev(x/(1+x)^3)
assert [TERN[i] for i in range(7)] == [1, 1, 3, 12, 55, 273, 1428]


def riordan_triangle(g, f, rows):
    tri = []
    col = g[:]
    cols = [col]
    for _ in range(rows - 1):
        col = smul(col, f)
        cols.append(col)
    for n in range(rows):
        tri.append([cols[k][n] for k in range(n + 1)])
    return tri


def hankel(seq, nmax):
    """Naive exact Hankel determinants h_0..h_nmax (cofactor expansion)."""

    def det(m):
        n = len(m)
        if n == 1:
            return m[0][0]
        acc = Fraction(0)
        sign = 1
        for j in range(n):
            if m[0][j]:
                minor = [row[:j] + row[j + 1:] for row in m[1:]]
                acc += sign * m[0][j] * det(minor)
            sign = -sign
        return acc

    out = []
    for n in range(nmax + 1):
        out.append(det([[seq[i + j] for j in range(n + 1)] for i in range(n + 1)]))
    return out


def as_ints(seq):
    out = []
    for v in seq:
        assert v.denominator == 1, v
        out.append(v.numerator)
    return out


def write_bfile(anum, pairs, desc):
    os.makedirs(OUT_DIR, exist_ok=True)
    path = os.path.join(OUT_DIR, "b%s.txt" % anum[1:])
    with open(path, "w") as fh:
        fh.write("# %s: %s\n" % (anum, desc))
        for n, v in pairs:
            fh.write("%d %d\n" % (n, v))
    print("wrote", path)


def seq_bfile(anum, values, desc, offset=0):
    write_bfile(anum, list(enumerate(values, start=offset)), desc)


def tri_bfile(anum, tri, desc):
    flat = [v for row in tri for v in row]
    write_bfile(anum, list(enumerate(as_ints_f(flat))), desc)


def as_ints_f(seq):
    out = []
    for v in seq:
        f = Fraction(v)
        assert f.denominator == 1, v
        out.append(f.numerator)
    return out


# ---------------------------------------------------------------------------
# A000045 Fibonacci
fib = [0, 1]
while len(fib) < 32:
    fib.append(fib[-1] + fib[-2])
seq_bfile("A000045", fib, "Fibonacci numbers")

# A000108 Catalan, by binomial formula, cross-checked against the gf
cat = [comb(2 * n, n) // (n + 1) for n in range(28)]
assert all(Fraction(cat[n]) == CAT[n] for n in range(28))
seq_bfile("A000108", cat, "Catalan numbers")

# A001764 ternary numbers, by binomial formula, cross-checked against the gf
tern = [comb(3 * n, n) // (2 * n + 1) for n in range(24)]
assert all(Fraction(tern[n]) == TERN[n] for n in range(24))
seq_bfile("A001764", tern, "binomial(3n,n)/(2n+1)")

# A005156 vertically symmetric alternating sign matrices, product formula
a005156 = []
for n in range(21):
    p = Fraction(1, 2 ** n)
    for k in range(1, n + 1):
        p *= Fraction(factorial(6 * k - 2) * factorial(2 * k - 1),
                      factorial(4 * k - 2) * factorial(4 * k - 1))
    a005156.append(p)
a005156 = as_ints(a005156)
assert a005156[:9] == [1, 1, 3, 26, 646, 45885, 9304650, 5382618660,
                       8878734657276]
seq_bfile("A005156", a005156, "vertically symmetric ASMs of order 2n+1")

# A051255 cyclically symmetric transpose complement plane partitions
a051255 = []
for n in range(21):
    p = Fraction(1)
    for k in range(n):
        p *= Fraction((3 * k + 1) * factorial(6 * k) * factorial(2 * k),
                      factorial(4 * k) * factorial(4 * k + 1))
    a051255.append(p)
a051255 = as_ints(a051255)
assert a051255[:9] == [1, 1, 2, 11, 170, 7429, 920460, 323801820,
                       323674802088]
# same thing as the Hankel transform of the ternary numbers
assert hankel(TERN, 6) == [Fraction(v) for v in a051255[1:8]]
seq_bfile("A051255", a051255, "cyclically symmetric transpose complement PPs")

# A081696: diagonal sums of the triangle (c(x), x c(x)^3); dual route:
# series realization vs the closed-form entry (3k+1)/(n+2k+1)*C(2n+k, n-k)
xc3 = smul(X, smul(CAT, smul(CAT, CAT)))
tri_c = riordan_triangle(CAT, xc3, 40)
for n in range(20):
    for k in range(n + 1):
        closed = Fraction((3 * k + 1) * comb(2 * n + k, n - k), n + 2 * k + 1)
        assert tri_c[n][k] == closed, (n, k)
a081696 = [sum(tri_c[n - k][k] for k in range(n // 2 + 1)) for n in range(26)]
a081696 = as_ints(a081696)
assert a081696[:10] == [1, 1, 3, 9, 29, 97, 333, 1165, 4135, 14845]
assert hankel([Fraction(v) for v in a081696], 6) == [2 ** n for n in range(7)]
assert hankel([Fraction(v) for v in a081696[1:]], 6) == \
    [2 ** n * (1 - n) for n in range(7)]
seq_bfile("A081696", a081696, "diagonal sums of (c(x), x*c(x)^3)")

# A107842: the triangle (c(x)^2, x c(x)^3), closed form
# (3k+2)/(n+2k+2)*C(2n+k+1, n-k), dual-checked against the series route
c2 = smul(CAT, CAT)
tri_c2 = riordan_triangle(c2, xc3, 40)
for n in range(20):
    for k in range(n + 1):
        closed = Fraction((3 * k + 2) * comb(2 * n + k + 1, n - k),
                          n + 2 * k + 2)
        assert tri_c2[n][k] == closed, (n, k)
tri_bfile("A107842", [r[:] for r in tri_c2[:10]],
          "triangle (c(x)^2, x*c(x)^3) read by rows")

# A106566: the triangle (1, x c(x))
tri_1xc = riordan_triangle(ONE, smul(X, CAT), 10)
assert as_ints_f(tri_1xc[4]) == [0, 5, 5, 3, 1]
tri_bfile("A106566", tri_1xc, "triangle (1, x*c(x)) read by rows")

# A128899: the triangle (1, c(x)-1)
cm1 = CAT[:]
cm1[0] -= 1
tri_cm1 = riordan_triangle(ONE, cm1, 10)
assert cm1[:N] == smul(X, c2)[:N]  # c(x)-1 == x c(x)^2
tri_bfile("A128899", tri_cm1, "triangle (1, c(x)-1) read by rows")

# A109262: diagonal sums of (c(x)^2, x c(x)^3)
a109262 = [sum(tri_c2[n - k][k] for k in range(n // 2 + 1)) for n in range(26)]
a109262 = as_ints(a109262)
assert a109262[:12] == [1, 2, 6, 19, 63, 215, 749, 2650, 9490, 34318,
                        125104, 459152]
fib_odd = [fib[2 * n + 1] for n in range(7)]
assert hankel([Fraction(v) for v in a109262], 6) == fib_odd
seq_bfile("A109262", a109262, "diagonal sums of (c(x)^2, x*c(x)^3)")

# A109267: inverse of the Riordan array (1-x-x^2, x(1-x)); its first two
# columns are the two diagonal-sum sequences above
g_ = ser([1, -1, -1])
f_ = ser([0, 1, -1])
fbar = srevert(f_)
ginv = sdiv(ONE, scompose(g_, fbar))
tri_inv = riordan_triangle(ginv, fbar, 12)
assert as_ints_f([tri_inv[n][0] for n in range(12)]) == a081696[:12]
assert as_ints_f([tri_inv[n][1] for n in range(1, 12)]) == a109262[:11]
tri_bfile("A109267", tri_inv[:10], "inverse of (1-x-x^2, x(1-x)) by rows")

# A225887: moments of the a=3,b=2 involution.  Route 1: continued fraction
# 1/(1-4x-2x^2/(1-3x-2x^2/(1-3x-...))).  Route 2: closed form
# (sqrt(1-6x+x^2)+5x-1)/(2x(1-6x)).
tail = sdiv(ONE, ser([1, -3]))
for _ in range(N // 2 + 2):
    tail = sdiv(ONE, [a - b for a, b in zip(ser([1, -3]), smul(ser([0, 0, 2]), tail))])
cf = sdiv(ONE, [a - b for a, b in zip(ser([1, -4]), smul(ser([0, 0, 2]), tail))])
s_ = ssqrt1(ser([1, -6, 1]))
num = [a + b for a, b in zip(s_, ser([-1, 5]))]
closed = sdiv(shift_down(num, 1), smul(ser([2]), ser([1, -6])))
assert cf[:24] == closed[:24]
a225887 = as_ints(cf[:22])
assert a225887[:11] == [1, 4, 18, 86, 426, 2162, 11166, 58438, 309042,
                        1648154, 8851206]
seq_bfile("A225887", a225887, "Schroeder paths with 3-colored level steps")

# A006319: unsigned coefficients 1, 4, 16, 68, ... of
# x/(1+4x+x^2) * c(x^2/(1+4x+x^2)^2), offset 1
den = ser([1, 4, 1])
arg = sdiv(smul(X, X), smul(den, den))
f_cor = smul(sdiv(X, den), scompose(CAT, arg))
a006319 = [abs(v) for v in as_ints(f_cor[1:22])]
assert a006319[:7] == [1, 4, 16, 68, 304, 1412, 6752]
write_bfile("A006319", list(enumerate(a006319, start=1)),
            "peaks at level 1 in Schroeder paths")

# Appendix pair: Somos sequence and A035929.
# g1 = (sqrt(1-4x)-2x+3)/(2(x^2-2x+2)), A182486 = 1 prepended to it;
# g2 = (sqrt(1-4x)(x-1)+x+1)/(2(x^2-2x+2)) = x/(1-(1-x)x c(x)) = A035929.
sq = ssqrt1(ser([1, -4]))
den2 = smul(ser([2]), ser([2, -2, 1]))
g1 = sdiv([a + b for a, b in zip(sq, ser([3, -2]))], den2)
assert as_ints(g1[:9]) == [1, 0, -1, -2, -4, -10, -29, -90, -290]
g2 = sdiv([a + b for a, b in zip(smul(sq, ser([-1, 1])), ser([1, 1]))], den2)
g2_alt = sdiv(X, [a - b for a, b in zip(ONE, smul(smul(ser([0, 1, -1]), ONE), CAT))])
assert g2[:30] == g2_alt[:30]
a182486 = [1] + as_ints(g1[:21])
assert hankel([Fraction(v) for v in a182486], 7) == [(-1) ** n for n in range(8)]
assert hankel(g1, 7) == [(-1) ** n for n in range(8)]
seq_bfile("A182486", a182486, "1 prepended to expansion of (sqrt(1-4x)-2x+3)/(2(x^2-2x+2))")
seq_bfile("A035929", as_ints(g2[1:22]), "expansion of x/(1-(1-x)x c(x))", offset=1)

# A098746 via the ternary moment values at y=1: the INVERT(1) transform of
# A098746 equals the first column of ((1+x(1+x)^2)/(1+x)^3, x/(1+x)^3)^{-1}.
gy = sdiv(ser([1, 1, 2, 1]), ser([1, 3, 3, 1]))      # (1+x(1+x)^2)/(1+x)^3
fy = sdiv(X, ser([1, 3, 3, 1]))
fybar = srevert(fy)
mom1 = sdiv(ONE, scompose(gy, fybar))
b_vals = as_ints(mom1[:24])
assert b_vals[:11] == [1, 2, 5, 15, 53, 215, 971, 4745, 24540, 132235, 734572]
# invert: b = a/(1-x a)  =>  a = b/(1+x b)
bser = ser(b_vals)
aser = sdiv(bser, [x + y for x, y in zip(ONE, smul(X, bser))])
a098746 = as_ints(aser[:22])
binv = sdiv(ser(a098746), [x - y for x, y in zip(ONE, smul(X, ser(a098746)))])
assert as_ints(binv[:20]) == b_vals[:20]
seq_bfile("A098746", a098746, "permutations avoiding 4231 and 42513")

print("all fixture prefixes verified")
