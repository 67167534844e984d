"""Independent mpmath values frozen into the unit tests."""
import mpmath as mp
import numpy as np

mp.mp.dps = 60


def phi(t):
    s = mp.mpf(0)
    n = 1
    while True:
        term = (2 * mp.pi**2 * n**4 * mp.e**(9 * t) - 3 * mp.pi * n**2 * mp.e**(5 * t)) * mp.e**(-mp.pi * n**2 * mp.e**(4 * t))
        s += term
        if abs(term) < mp.mpf(10) ** -80 * abs(s):
            return s
        n += 1


def xi(s):
    return s * (s - 1) / 2 * mp.pi ** (-s / 2) * mp.gamma(s / 2) * mp.zeta(s)


def moment(n):
    return mp.quad(lambda t: t ** (2 * n) * phi(t), [0, 0.5, 1, 2, 4])


print("phi")
for t in ["0", "0.25", "1"]:
    print(t, mp.nstr(phi(mp.mpf(t)), 50))
print("moments")
for n in [0, 1, 7, 20]:
    print(n, mp.nstr(moment(n), 45))
print("xi taylor a_2n")
mp.mp.dps = 50
coeffs = mp.taylor(xi, mp.mpf(1) / 2, 8)
for k in range(0, 9, 2):
    print(k, mp.nstr(coeffs[k], 35))
print("xi(0.3)", mp.nstr(xi(mp.mpf("0.3")), 30))
print("zeta(1/2)", mp.nstr(mp.zeta(0.5), 30))
print("xi(2+3i)", mp.nstr(xi(mp.mpc(2, 3)), 30))
print("zeta(2+3i)", mp.nstr(mp.zeta(mp.mpc(2, 3)), 30))
print("zeta(-1.5)", mp.nstr(mp.zeta(-1.5), 30))

c = ["0.994241556376", "-2.29719443152e-2", "4.93808072283e-4", "-9.98826577664e-6",
     "1.91626874465e-7", "-3.50784618243e-9", "6.15533766557e-11", "-1.03921031437e-12",
     "1.69325437329e-14", "-2.66944768148e-16", "4.08084512257e-18"]
mp.mp.dps = 50
cm = [mp.mpf(x) for x in c]
print("turan c-form margins")
for n in (1, 2, 5):
    print(n, mp.nstr(cm[n] ** 2 - cm[n - 1] * cm[n + 1], 30))
print("jensen roots (numpy)")
for d in (3, 6):
    coeffs = [float(cm[h] * mp.binomial(d, h)) for h in range(d + 1)]
    r = np.roots(coeffs[::-1])
    print(d, sorted(r.real), max(abs(r.imag)))
