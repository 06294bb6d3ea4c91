"""Dev oracle: Chern numbers of G(2,5) via its cohomology presentation.

H*(G(2,5), Z) = Z[e1, e2] / (h4, h5) where e_i = c_i(S^dual), h_m the
complete homogeneous polys (h_m = e1*h_{m-1} - e2*h_{m-2}).  The hyperplane
class of the Pluecker embedding is H = e1.  Tangent bundle T = S^dual (x) Q.

Classes are dicts {(a, b): coeff} meaning sum c * e1^a e2^b, weighted degree
a + 2b.  Integration of degree-6 classes uses the functional solved from the
relations with the normalization  int e2^3 = 1  (a point class).
"""

from itertools import product


def cmul(x, y):
    out = {}
    for (a1, b1), c1 in x.items():
        for (a2, b2), c2 in y.items():
            k = (a1 + a2, b1 + b2)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def cadd(x, y):
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, 0) + v
        if not out[k]:
            del out[k]
    return out


def cscale(x, s):
    return {k: v * s for k, v in x.items() if v * s}


E1 = {(1, 0): 1}
E2 = {(0, 1): 1}
ONE = {(0, 0): 1}

# h_m = c_m(Q) by the recursion h_m = e1 h_{m-1} - e2 h_{m-2}
H = [ONE, E1]
for m in range(2, 7):
    H.append(cadd(cmul(E1, H[m - 1]), cscale(cmul(E2, H[m - 2]), -1)))
q4, q5 = H[4], H[5]
print("h4 =", q4)
print("h5 =", q5)

# Solve the degree-6 integration functional: monomials e1^a e2^b, a+2b=6.
mon6 = [(6, 0), (4, 1), (2, 2), (0, 3)]
rows = []
for m, d in ((q4, 2), (q5, 1)):
    for extra in [(a, b) for a in range(7) for b in range(4) if a + 2 * b == d]:
        rel = cmul(m, {extra: 1})
        rows.append([rel.get(k, 0) for k in mon6])
# phi . row = 0 for all rows, phi[(0,3)] = 1 -> solve by hand-rolled elimination
from fractions import Fraction

A = [[Fraction(v) for v in r] + [Fraction(0)] for r in rows]
A.append([Fraction(0), Fraction(0), Fraction(0), Fraction(1), Fraction(1)])
# Gaussian elimination for phi (4 unknowns)
import itertools

ncols = 4
piv = 0
for col in range(ncols):
    sel = None
    for r in range(piv, len(A)):
        if A[r][col]:
            sel = r
            break
    if sel is None:
        continue
    A[piv], A[sel] = A[sel], A[piv]
    pr = A[piv]
    pr[:] = [v / pr[col] for v in pr]
    for r in range(len(A)):
        if r != piv and A[r][col]:
            f = A[r][col]
            A[r] = [v - f * w for v, w in zip(A[r], pr)]
    piv += 1
phi = {}
for r in A:
    nz = [i for i in range(ncols) if r[i]]
    if len(nz) == 1:
        phi[mon6[nz[0]]] = r[-1]
    elif not nz and r[-1]:
        raise SystemExit("inconsistent")
print("integration functional:", phi)
assert phi[(6, 0)] == 5, "deg G(2,5) must be 5"


def integrate(x):
    tot = Fraction(0)
    for (a, b), c in x.items():
        if a + 2 * b != 6:
            if c:
                raise ValueError(f"class not of top degree: {(a,b)}={c}")
            continue
        tot += c * phi[(a, b)]
    assert tot.denominator == 1
    return int(tot)


# c(T) = prod_j [ (1+y_j)^2 + e1 (1+y_j) + e2 ]  with y_j the Chern roots of Q.
# Write f(y) = y^2 + B y + C, B = 2 + e1, C = 1 + e1 + e2; expand the product
# over three roots in monomial symmetric functions and substitute
# m_lambda(y) -> polynomials in q_i = c_i(Q).
q1, q2, q3 = H[1], H[2], H[3]
B = cadd({(0, 0): 2}, E1)
C = cadd(cadd(ONE, E1), E2)
m = {
    (2, 2, 2): cmul(q3, q3),
    (2, 2, 1): cmul(q2, q3),
    (2, 2, 0): cadd(cmul(q2, q2), cscale(cmul(q1, q3), -2)),
    (2, 1, 1): cmul(q1, q3),
    (2, 1, 0): cadd(cmul(q1, q2), cscale(q3, -3)),
    (2, 0, 0): cadd(cmul(q1, q1), cscale(q2, -2)),
    (1, 1, 1): q3,
    (1, 1, 0): q2,
    (1, 0, 0): q1,
    (0, 0, 0): ONE,
}
P = {}
for lam, msym in m.items():
    a = sum(1 for v in lam if v == 2)
    b = sum(1 for v in lam if v == 1)
    c = 3 - a - b
    term = msym
    for _ in range(b):
        term = cmul(term, B)
    for _ in range(c):
        term = cmul(term, C)
    P = cadd(P, term)

# split c(T) into graded pieces
cT = [dict() for _ in range(7)]
for (a, b), c in P.items():
    d = a + 2 * b
    if d <= 6:
        cT[d][(a, b)] = c
print("c1(T) =", cT[1], "(expect 5*e1)")
chi_top = integrate(cT[6])
print("chi_top(G(2,5)) =", chi_top, "(expect 10)")

# reduce a class times H^k to degree 6 and integrate -> but cT pieces are
# already polynomials in e1,e2 of the right weighted degree; multiply by e1^k.
def hpow(k):
    return {(k, 0): 1}

print("c1.H^5 =", integrate(cmul(cT[1], hpow(5))), "(expect 25)")

# Full degree-6 table over monomials in c_1..c_6(T) and H.
def all_chern_numbers():
    table = {}
    for exps in product(range(7), repeat=6):
        d = sum((i + 1) * e for i, e in enumerate(exps))
        if d > 6:
            continue
        h = 6 - d
        cls = hpow(h)
        for i, e in enumerate(exps):
            for _ in range(e):
                cls = cmul(cls, cT[i + 1])
        table[exps + (h,)] = integrate(cls)
    return table


tab = all_chern_numbers()
for k in sorted(tab):
    print(" ".join(map(str, k)), ":", tab[k])

# cross-checks: chi of complete intersections in G(2,5)
def ci_chi(degrees):
    k = len(degrees)
    assert k == 3  # threefold
    e = [1, 0, 0, 0]
    # elementary symmetric of degrees
    q = [1, 0, 0, 0]
    for d in degrees:
        for i in range(3, 0, -1):
            q[i] += q[i - 1] * d
    i1, i2, i3 = -q[1], q[1] ** 2 - q[2], -q[1] ** 3 + 2 * q[1] * q[2] - q[3]
    tot = integrate(cmul(cT[3], hpow(3)))
    tot += i1 * integrate(cmul(cT[2], hpow(4)))
    tot += i2 * integrate(cmul(cT[1], hpow(5)))
    tot += i3 * integrate(hpow(6))
    prod_d = 1
    for d in degrees:
        prod_d *= d
    return prod_d * tot


print("chi(Y_{3,1,1}) =", ci_chi((3, 1, 1)), "(expect -150)")

# the threefold linear section (Fano of index 2, H^3=5): degrees (1,1) -> k=2
def ci_chi_k(degrees):
    k = len(degrees)
    q = [1, 0, 0, 0]
    for d in degrees:
        for i in range(3, 0, -1):
            q[i] += q[i - 1] * d
    i1, i2, i3 = -q[1], q[1] ** 2 - q[2], -q[1] ** 3 + 2 * q[1] * q[2] - q[3]
    tot = integrate(cmul(cT[3], hpow(k)))
    tot += i1 * integrate(cmul(cT[2], hpow(k + 1)))
    tot += i2 * integrate(cmul(cT[1], hpow(k + 2)))
    tot += i3 * integrate(hpow(k + 3))
    prod_d = 1
    for d in degrees:
        prod_d *= d
    return prod_d * tot


print("chi(F5 = G(2,5) cap H cap H) =", ci_chi_k((1, 1)), "(expect 4)")
