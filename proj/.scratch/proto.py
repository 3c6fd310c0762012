import gmpy2
from gmpy2 import mpz, mpq, mpfr, log, sqrt, floor
from fractions import Fraction

gmpy2.get_context().precision = 1200

gamma = 1 + sqrt(mpfr(2))
tau = log(gamma) / log(2)

# continued fraction of tau via exact rational endpoints of a tight interval
def cf_expand(x_lo, x_hi, count):
    """x as exact Fraction interval; return quotients and convergents while certified."""
    qs = []
    conv = []
    p0, q0, p1, q1 = 1, 0, 0, 1  # p_{-1}, q_{-1}, p_0-ish seeds (standard)
    pm1, qm1 = 1, 0
    pm2, qm2 = 0, 1
    lo, hi = x_lo, x_hi
    while len(qs) < count:
        a_lo = int(lo.numerator) // int(lo.denominator)
        a_hi = int(hi.numerator) // int(hi.denominator)
        if a_lo != a_hi:
            break
        a = a_lo
        qs.append(a)
        p = a * pm1 + pm2
        q = a * qm1 + qm2
        conv.append((p, q))
        pm2, qm2, pm1, qm1 = pm1, qm1, p, q
        fl = lo - a
        fh = hi - a
        if fl == 0:
            break
        lo, hi = 1 / fh, 1 / fl
    return qs, conv

# exact dyadic interval for tau at current precision
t = tau
# crude +- 2^-1100 interval (gmpy2 mpfr correctly rounded; 1 ulp guard)
eps = Fraction(1, 2**1100)
tf = Fraction(int(t.as_integer_ratio()[0]), int(t.as_integer_ratio()[1]))
qs, conv = cf_expand(tf - eps, tf + eps, 80)
print("num quotients certified:", len(qs))
print("a[0..10] =", qs[:11])
for i in (53, 54, 63, 64, 65, 66):
    if i < len(conv):
        print(f"q_{i} = {conv[i][1]}")
paper_q65 = 2427228558134035529638808203392547
idx = [i for i, (p, q) in enumerate(conv) if q == paper_q65]
print("paper q65 found at index:", idx)
print("a at that index:", qs[idx[0]] if idx else None)
print("q64 < 2.5e30?", conv[64][1] < 25 * 10**29, conv[64][1])
print("6M_pell =", 24 * 10**29, " q64 >6M?", conv[64][1] > 24 * 10**29)
print("6M_pl   =", 36 * 10**28, " first q > 6M_pl:", next((i, q) for i, (p, q) in enumerate(conv) if q > 36 * 10**28))
print("first q > 6*4e29:", next((i, q) for i, (p, q) in enumerate(conv) if q > 24 * 10**29))

def nearest_dist(x):
    # x an mpfr; return ||x||
    n = gmpy2.rint(x)  # round to nearest
    return abs(x - n)

def eps_value(mu, M, q):
    return nearest_dist(mu * q) - M * nearest_dist(tau * q)

q65 = mpz(paper_q65)
log2 = log(2)
mu1 = log(3 / (2 * sqrt(mpfr(2)))) / log2
print("\n--- Pell first reduction, M=4e29, A=12 ---")
e1 = eps_value(mu1, mpz(4) * 10**29, q65)
print("eps1 =", e1, " >0.1:", e1 > mpfr("0.1"))
print("||tau q65|| =", nearest_dist(tau * q65))
om = log(12 * mpfr(q65) / e1) / log2
print("omega ub =", om, "ceil:", int(gmpy2.ceil(om)))

print("\n--- Pell family s=0..117, M=4e29, A=15 ---")
vals = []
for s in range(0, 118):
    mu = log(3 / (2 * sqrt(mpfr(2)) * (1 + mpfr(2) ** (-s)))) / log2
    e = eps_value(mu, mpz(4) * 10**29, q65)
    vals.append((e, s))
emin = min(vals)
print("min eps =", emin[0], "at s =", emin[1], " >0.01:", emin[0] > mpfr("0.01"))
oms = [log(15 * mpfr(q65) / e) / log2 for e, s in vals if e > 0]
print("all eps >0?", all(e > 0 for e, s in vals))
print("max omega ub =", max(oms), "ceil:", int(gmpy2.ceil(max(oms))))

print("\n--- Pell-Lucas first reduction, M=6e28, A=12 ---")
mu3 = log(mpfr(3)) / log2
e3 = eps_value(mu3, mpz(6) * 10**28, q65)
print("eps3 =", e3, " >0.3:", e3 > mpfr("0.3"))
om3 = log(12 * mpfr(q65) / e3) / log2
print("omega ub =", om3, "ceil:", int(gmpy2.ceil(om3)))
# with corrected M=4e29
e3c = eps_value(mu3, mpz(4) * 10**29, q65)
print("eps3 with M=4e29 =", e3c, "ceil omega:", int(gmpy2.ceil(log(12 * mpfr(q65) / e3c) / log2)))

print("\n--- Pell-Lucas family s in 0..117 minus {1}, M=6e28, A=15 ---")
vals4 = []
for s in list(range(0, 118)):
    mu = log(3 / (1 + mpfr(2) ** (-s))) / log2
    e = eps_value(mu, mpz(6) * 10**28, q65)
    vals4.append((e, s))
print("s=1 eps:", [v for v, s in vals4 if s == 1])
ex1 = [(v, s) for v, s in vals4 if s != 1]
print("min eps (s!=1) =", min(ex1), " >0.01:", min(ex1)[0] > mpfr("0.01"))
oms4 = [log(15 * mpfr(q65) / e) / log2 for e, s in ex1]
print("max omega ub =", max(oms4), "ceil:", int(gmpy2.ceil(max(oms4))))
valsc = []
for s in list(range(0, 118)):
    if s == 1: continue
    mu = log(3 / (1 + mpfr(2) ** (-s))) / log2
    e = eps_value(mu, mpz(4) * 10**29, q65)
    valsc.append((e, s))
print("corrected M=4e29: min eps =", min(valsc), "max omega ceil:",
      int(gmpy2.ceil(max(log(15 * mpfr(q65) / e) / log2 for e, s in valsc))))

print("\n--- Legendre: q_n > M >= q_{n-1}, b = max a_i i<=n ---")
for M in (mpz(6) * 10**28, mpz(4) * 10**29):
    n_idx = next(i for i, (p, q) in enumerate(conv) if q > M)
    b = max(qs[: n_idx + 1])
    print(f"M={M}: q_{{{n_idx}}} > M >= q_{{{n_idx-1}}}; b = {b}")
    print("   q_{n-1} =", conv[n_idx - 1][1], " q_n =", conv[n_idx][1])
    mb = 2 + float(log(b + 2) / log2) + float(log(mpfr(4) * mpfr(M)) / log2)
    print("   2^m < 4(b+2)M -> m <", mb)

print("\n--- Matveev products ---")
K = mpfr("1.4") * 30**6 * mpfr(3) ** mpfr("4.5") * 4 * (1 + log(2))
A2, A3 = log(gamma), 2 * log(2)
C1 = K * (2 * log(3) + 3 * log(2)) * A2 * A3
C3 = K * (2 * log(3)) * A2 * A3
print("C1 (Lambda1) =", C1, " <= 6e12:", C1 <= mpfr(6e12))
print("C3 (Lambda3) =", C3, " <= 3e12:", C3 <= mpfr(3e12))

print("\n--- absolute bound chains ---")
Cp = K * A2 * A3  # times A1 factor
lg2, lg3, lg4, lg5 = log(2), log(3), log(4), log(5)

def crossover(c0, c1, c2):
    import math
    def f(n):
        T = 1 + log(2 * mpfr(n))
        return mpfr(n) * lg2 - (c0 + c1 * T + c2 * T * T)
    lo, hi = mpz(10), mpz(10) ** 40
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if f(mid) > 0:
            hi = mid
        else:
            lo = mid
    return hi

# Pell: s <= (C1*T + log4)/log2 ; A1(Lambda2) = 2log3+5log2+2*s*log2
sc1 = C1 / lg2
sc0 = lg4 / lg2
c2_p = Cp * 2 * lg2 * sc1
c1_p = Cp * (2 * lg3 + 5 * lg2) + Cp * 2 * lg2 * sc0 + C1
c0_p = lg5 + lg4
xp = crossover(c0_p, c1_p, c2_p)
print("Pell crossover n* =", xp, "=%.3e" % float(xp))
# Pell-Lucas: s <= (C3*T + log4)/log2 ; A1(Lambda4) = 2log3+2log2+2*s*log2
sc3 = C3 / lg2
c2_l = Cp * 2 * lg2 * sc3
c1_l = Cp * (2 * lg3 + 2 * lg2) + Cp * 2 * lg2 * sc0 + C3
c0_l = lg5 + lg4
xl = crossover(c0_l, c1_l, c2_l)
print("PL   crossover n* =", xl, "=%.3e" % float(xl))
print("paper chain Pell (6e13,24e27):", "%.3e" % float(crossover(mpfr(3), mpfr(6e13), mpfr(24e27))))
print("paper chain PL   (11e12,12e24):", "%.3e" % float(crossover(mpfr(3), mpfr(11e12), mpfr(12e24))))

print("\n--- exhaustive searches ---")
def seq(kind, count):
    if kind == "P": a, b = 0, 1
    elif kind == "Q": a, b = 2, 2
    else: a, b = 0, 1
    out = [a, b]
    for i in range(count - 2):
        if kind == "J":
            out.append(out[-1] + 2 * out[-2])
        else:
            out.append(2 * out[-1] + out[-2])
    return out

P = seq("P", 481)
Q = seq("Q", 479)
J = seq("J", 241)

def search(vals, kmax, nmax, mmax):
    sols = []
    for k in range(kmax):
        for n in range(nmax):
            for m in range(min(n, mmax - 1) + 1):
                if vals[k] == J[n] + J[m]:
                    sols.append((k, n, m))
    return sols

sp = search(P, 480, 240, 122)
sq = search(Q, 478, 239, 122)
print("Pell solutions:", sp)
print("PL solutions:", sq)
print("\npower_of_two_case(100):", [(k, v.bit_length() - 1) for k, v in enumerate(Q[:150]) if v.bit_count() == 1 and v.bit_length() - 1 <= 100 and v <= 2**100])
