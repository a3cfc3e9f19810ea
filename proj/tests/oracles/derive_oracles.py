"""Independent reference values for the frozen numbers in the C++ tests.

Coherent states come from closed-form amplitudes (binomial for su2,
Poisson for the oscillator) instead of matrix exponentials; quadrature
nodes come from numpy. Run with python3; prints the values the tests pin.
"""
import numpy as np
from scipy.special import gammaln

EPS = np.sqrt(2.0)


def su2_amps(j, rho, phi):
    n = int(round(2 * j))
    k = np.arange(n + 1)
    logc = 0.5 * (gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1))
    c, s = np.cos(rho), np.sin(rho)
    with np.errstate(divide="ignore"):
        mag = np.exp(logc + (n - k) * np.log(abs(c)) + k * np.log(abs(s))) if s != 0 else (k == 0).astype(float)
    mag = mag * np.sign(c) ** (n - k)
    return mag * np.exp(-1j * k * phi)


def osc_amps(dim, rho, phi):
    # lambda = rho e^{+i phi} for the oscillator clock
    n = np.arange(dim)
    with np.errstate(divide="ignore"):
        logm = n * np.log(rho) - 0.5 * rho**2 - 0.5 * gammaln(n + 1) if rho > 0 else np.where(n == 0, 0.0, -np.inf)
    return np.exp(logm) * np.exp(1j * n * phi)


def gaussian_coeffs(j, rho0, width):
    k = np.arange(int(round(2 * j)) + 1)
    e = -EPS * k
    target = -EPS * 2 * j * np.sin(rho0) ** 2
    c = np.exp(-((e - target) ** 2) / (4 * (width * EPS) ** 2))
    return c / np.linalg.norm(c)


def shift_ops(n):
    u = np.zeros((n, n))
    for k in range(1, n):
        u[k - 1, k] = 1
    u[n - 1, 0] = 1
    return u


def stationary(j, rho, phi, width=2.0):
    c = gaussian_coeffs(j, rho, width)
    cond = np.conj(su2_amps(j, rho, phi)) * c
    cond /= np.linalg.norm(cond)
    e = -EPS * np.arange(len(c))
    eg = -EPS * 2 * j * np.sin(rho) ** 2
    absolute = np.linalg.norm((e - eg) * cond)
    return absolute / max(abs(eg), EPS), absolute


def schrodinger(j, rho, phi, h, width=2.0):
    c = gaussian_coeffs(j, rho, width)
    e = -EPS * np.arange(len(c))

    def state(p):
        v = np.conj(su2_amps(j, rho, p)) * c
        return v / np.linalg.norm(v)

    d = (state(phi + h) - state(phi - h)) / (2 * h)
    return np.linalg.norm(1j * EPS * d - e * state(phi))


def phase_errors_su2(j, rho, phi):
    n = int(round(2 * j)) + 1
    u = shift_ops(n)
    s = (u.T - u) / 2j
    c = (u + u.T) / 2
    a = su2_amps(j, rho, phi)
    return abs(np.vdot(a, s @ a).real - np.sin(phi)), abs(np.vdot(a, c @ a).real - np.cos(phi))


def phase_errors_osc(ncut, fill, phi):
    dim = ncut + 1
    rho = np.sqrt(fill * ncut)
    e = np.zeros((dim, dim))  # exp(-i phi): |n> -> |n+1>, top -> |0>
    for k in range(dim - 1):
        e[k + 1, k] = 1
    e[0, dim - 1] = 1
    s = (e.T - e) / 2j
    c = (e + e.T) / 2
    a = osc_amps(dim, rho, phi)
    return abs(np.vdot(a, s @ a).real - np.sin(phi)), abs(np.vdot(a, c @ a).real - np.cos(phi))


def classical_mismatch(j, rho0=0.6, width=2.0, thr=1e-6):
    n = int(round(2 * j)) + 2
    x, _ = np.polynomial.legendre.leggauss(n)
    rhos = 0.5 * np.arccos(x)
    phis = 2 * np.pi * np.arange(n) / n
    pts = [(r, p) for r in rhos for p in phis]
    amps = np.array([su2_amps(j, r, p) for r, p in pts])  # nodes x dim
    c = gaussian_coeffs(j, rho0, width)
    beta = (np.conj(amps) * c) @ np.conj(amps).T
    w2 = np.abs(beta) ** 2
    mask = w2 >= thr * w2.max()
    s2 = np.array([np.sin(r) ** 2 for r, _ in pts])
    mism = np.abs(s2[:, None] - s2[None, :])
    return mism[mask].max(), int(mask.sum())


def uncertainty(j, rhos, phis):
    n = int(round(2 * j)) + 1
    u = shift_ops(n)
    s = (u.T - u) / 2j
    c = (u + u.T) / 2
    hc = np.diag(-EPS * np.arange(n))
    out = []
    for r in rhos:
        for p in phis:
            a = su2_amps(j, r, p)
            ex = lambda m: np.vdot(a, m @ a).real
            dh = np.linalg.norm(hc @ a - ex(hc) * a)
            ds = np.linalg.norm(s @ a - ex(s) * a)
            out.append((dh * ds, dh * ds - EPS / 2 * abs(ex(c))))
    return out


if __name__ == "__main__":
    np.set_printoptions(precision=17)
    print("stationary su2 (relative, absolute):")
    for j in [5, 10, 20, 40]:
        print(" ", j, "%.15e %.15e" % stationary(j, 0.6, 0.3))
    print("schrodinger j=10 h=1e-3: %.15e" % schrodinger(10, 0.6, 0.3, 1e-3))
    print("phase su2 (sin, cos):")
    for j in [5, 10, 20, 40]:
        print(" ", j, "%.15e %.15e" % phase_errors_su2(j, 0.4, 0.9))
    print("phase h4 (sin, cos):")
    for n in [64, 128, 256, 512]:
        print(" ", n, "%.15e %.15e" % phase_errors_osc(n, 1 / 16, 0.9))
    print("classical mismatch (max, support):")
    for j in [5, 10, 20]:
        print(" ", j, "%.15e %d" % classical_mismatch(j))
    grid = uncertainty(15, np.linspace(0, 1.2, 15), 2 * np.pi * np.arange(15) / 15)
    print("min slack j=15: %.3e" % min(g[1] for g in grid))
    small = uncertainty(15, [0.3, 0.5, 0.7, 1.0], [-0.1, -0.05, 0.0, 0.05, 0.1])
    print("min small-angle ratio: %.15e" % (min(g[0] for g in small) / (EPS / 2)))
