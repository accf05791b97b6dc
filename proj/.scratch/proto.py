#!/usr/bin/env python3
"""Prototype of the anti-tridiagonal Hankel secular solver, used only to
validate formula reading and to freeze independent oracle values for tests."""
import numpy as np

def unit_roots(m):
    w = np.zeros(m, dtype=complex)
    w[0] = 1.0
    for j in range(1, m // 2 + 1):
        ang = 2.0 * np.pi * j / m
        w[j] = complex(np.cos(ang), np.sin(ang))
    if m % 2 == 0:
        w[m // 2] = complex(-1.0, 0.0)
    for j in range(m // 2 + 1, m):
        w[j] = np.conj(w[m - j])
    return w

def spectrum(n, a, b, c):
    m = n + 2
    w = unit_roots(m)
    lam = np.array([b + a * w[(2 * k) % m] + c * w[k % m] for k in range(m)])
    scale = 1 + abs(a) + abs(b) + abs(c)
    theta = np.array([0.0 if abs(z) <= 1e-14 * scale else np.angle(z) for z in lam])
    return lam, theta

def build_H(n, a, b, c):
    m = n + 2
    H = np.zeros((m, m))
    for i in range(m):
        for j in range(m):
            s = i + j
            if s == m - 2: H[i, j] = a
            elif s == m - 1: H[i, j] = c
            elif s == m: H[i, j] = b
    return H

def build_A(n, a, b, c):
    m = n + 2
    r = np.zeros(m); r[0] = b; r[m - 2] = a; r[m - 1] = c
    return np.array([[r[(i + j) % m] for j in range(m)] for i in range(m)])

def mbound(n):
    return (n + 1) // 2 if n % 2 == 1 else n // 2

def F(n, a, b, c, t, al, be, lam=None, theta=None):
    if lam is None:
        lam, theta = spectrum(n, a, b, c)
    mb = mbound(n)
    s = 1.0 / (t - lam[0].real)
    for k in range(1, mb + 1):
        h = theta[k] / 2
        s += 2 * (np.cos(h - al * k) * np.cos(h - be * k) / (t - abs(lam[k]))
                  + np.sin(h - al * k) * np.sin(h - be * k) / (t + abs(lam[k])))
    return s

def G(n, a, b, c, t, al, be, lam=None, theta=None):
    if lam is None:
        lam, theta = spectrum(n, a, b, c)
    return F(n, a, b, c, t, al, be, lam, theta) + 1.0 / (t - lam[n // 2 + 1].real)

def secular(n, a, b, c, t):
    m = n + 2
    phi = 2 * np.pi / m
    lam, theta = spectrum(n, a, b, c)
    if n % 2 == 1:
        Fpp = F(n, a, b, c, t, phi, phi, lam, theta)
        F00 = F(n, a, b, c, t, 0, 0, lam, theta)
        F0p = F(n, a, b, c, t, 0, phi, lam, theta)
        return 1 + a / m * Fpp + b / m * F00 + a * b / m**2 * (Fpp * F00 - F0p**2)
    else:
        Gpp = G(n, a, b, c, t, phi, phi, lam, theta)
        G00 = G(n, a, b, c, t, 0, 0, lam, theta)
        G0p = G(n, a, b, c, t, 0, phi, lam, theta)
        lamh = lam[n // 2 + 1].real
        W = G0p - 2.0 / (t - lamh)
        return 1 + a / m * Gpp + b / m * G00 + a * b / m**2 * (Gpp * G00 - W * W)

def pole_values(n, a, b, c):
    lam, theta = spectrum(n, a, b, c)
    mb = mbound(n)
    d = [lam[0].real]
    d += [abs(lam[k]) for k in range(1, mb + 1)]
    if n % 2 == 0:
        d.append(lam[n // 2 + 1].real)
    d += [-abs(lam[k]) for k in range(mb, 0, -1)]
    return np.array(d)  # spectral order

def modal(n, a, b, c):
    m = n + 2
    lam, theta = spectrum(n, a, b, c)
    M = np.zeros((m, m))
    for k1 in range(1, m + 1):
        for L in range(1, m + 1):
            if L == 1:
                M[k1-1, L-1] = 1 / np.sqrt(m)
            elif n % 2 == 1:
                if L <= (n + 3) // 2:
                    s = L - 1
                    tau = ((k1 - 1) * s) % m
                    M[k1-1, L-1] = np.sqrt(2/m) * np.cos(theta[s]/2 + 2*tau*np.pi/m)
                else:
                    s = n + 3 - L
                    tau = ((k1 - 1) * s) % m
                    M[k1-1, L-1] = np.sqrt(2/m) * np.sin(theta[s]/2 + 2*tau*np.pi/m)
            else:
                if L <= n // 2 + 1:
                    s = L - 1
                    tau = ((k1 - 1) * s) % m
                    M[k1-1, L-1] = np.sqrt(2/m) * np.cos(theta[s]/2 + 2*tau*np.pi/m)
                elif L == n // 2 + 2:
                    M[k1-1, L-1] = (-1)**(k1-1) / np.sqrt(m)
                else:
                    s = n + 3 - L
                    tau = ((k1 - 1) * s) % m
                    M[k1-1, L-1] = np.sqrt(2/m) * np.sin(theta[s]/2 + 2*tau*np.pi/m)
    return M

def eigvec(n, a, b, c, mu):
    m = n + 2
    phi = 2 * np.pi / m
    lam, theta = spectrum(n, a, b, c)
    v = np.zeros(m)
    if n % 2 == 1:
        if a == 0.0:
            for k in range(1, m + 1):
                v[k-1] = F(n, a, b, c, mu, 2*(1-k)*np.pi/m, 0, lam, theta)
        else:
            den = b * F(n, a, b, c, mu, 0, 0, lam, theta) + m
            coef = b * F(n, a, b, c, mu, 0, phi, lam, theta) / den
            for k in range(1, m + 1):
                ak = 2 * (1 - k) * np.pi / m
                v[k-1] = F(n, a, b, c, mu, ak, phi, lam, theta) - coef * F(n, a, b, c, mu, ak, 0, lam, theta)
    else:
        lamh = lam[n // 2 + 1].real
        if a == 0.0:
            for k in range(1, m + 1):
                ak = 2 * (1 - k) * np.pi / m
                v[k-1] = G(n, a, b, c, mu, ak, 0, lam, theta) - (1 + (-1)**k) / (mu - lamh)
        else:
            G00 = G(n, a, b, c, mu, 0, 0, lam, theta)
            W = G(n, a, b, c, mu, 0, phi, lam, theta) - 2 / (mu - lamh)
            den = b * G00 + m
            coef = b * W / den
            for k in range(1, m + 1):
                ak = 2 * (1 - k) * np.pi / m
                v[k-1] = (G(n, a, b, c, mu, ak, phi, lam, theta) - (1 - (-1)**k) / (mu - lamh)
                          - coef * (G(n, a, b, c, mu, ak, 0, lam, theta) - (1 + (-1)**k) / (mu - lamh)))
    return v / np.linalg.norm(v)

def xy_vectors(n, a, b, c):
    M = modal(n, a, b, c)
    return M[0, :].copy(), M[-1, :].copy()

def check_instance(n, a, b, c, verbose=False):
    m = n + 2
    scale = 1 + abs(a) + abs(b) + abs(c)
    H = build_H(n, a, b, c)
    A = build_A(n, a, b, c)
    M = modal(n, a, b, c)
    D = pole_values(n, a, b, c)
    x, y = xy_vectors(n, a, b, c)
    errs = {}
    errs['orth'] = np.max(np.abs(M.T @ M - np.eye(m)))
    errs['A'] = np.max(np.abs(A - M @ np.diag(D) @ M.T))
    errs['H'] = np.max(np.abs(H - M @ (np.diag(D) - b*np.outer(x,x) - a*np.outer(y,y)) @ M.T))
    errs['xnorm'] = abs(np.linalg.norm(x) - 1)
    errs['ynorm'] = abs(np.linalg.norm(y) - 1)
    errs['xy'] = abs(x @ y)
    # secular zero check
    mu = np.linalg.eigvalsh(H)
    ds = np.sort(D)
    worst = 0.0
    for u in mu:
        if np.min(np.abs(u - ds)) > 1e-6 * scale:
            worst = max(worst, abs(secular(n, a, b, c, u)))
    errs['sec_at_eig'] = worst
    # weyl brackets
    lo = ds + min(0, -a, -b); hi = ds + max(0, -a, -b)
    errs['weyl'] = max(max(lo - mu), max(mu - hi))
    # eigenvectors
    worstres = 0.0
    for u in mu:
        if np.min(np.abs(u - ds)) > 1e-6 * scale:
            v = eigvec(n, a, b, c, u)
            worstres = max(worstres, np.linalg.norm(H @ v - u * v))
    errs['vecres'] = worstres
    # miller
    P = -b*np.outer(x,x) - a*np.outer(y,y)
    pspec = np.sort(np.linalg.eigvalsh(P))
    expect = np.sort(np.concatenate([np.zeros(n), [-a, -b]]))
    errs['miller'] = np.max(np.abs(pspec - expect))
    if verbose:
        for k, v in errs.items():
            print(f"  {k}: {v:.3e}")
    return errs

if __name__ == '__main__':
    rng = np.random.default_rng(7)
    bad = 0
    for trial in range(300):
        n = int(rng.integers(1, 17))
        a, b, c = rng.uniform(-3, 3, 3)
        errs = check_instance(n, a, b, c)
        lim = {'orth': 1e-12, 'A': 1e-11, 'H': 1e-11, 'xnorm': 1e-13, 'ynorm': 1e-13,
               'xy': 1e-13, 'sec_at_eig': 1e-7, 'weyl': 1e-10, 'vecres': 1e-8, 'miller': 1e-10}
        for k, v in errs.items():
            if v > lim[k]:
                bad += 1
                print(f"VIOLATION n={n} a={a:.4f} b={b:.4f} c={c:.4f}: {k} = {v:.3e}")
    # a = 0 remark path
    for trial in range(100):
        n = int(rng.integers(1, 17))
        b, c = rng.uniform(-3, 3, 2)
        if abs(b) < 0.1: b = 0.5
        errs = check_instance(n, 0.0, b, c)
        if errs['vecres'] > 1e-8 or errs['sec_at_eig'] > 1e-7:
            bad += 1
            print(f"A0 VIOLATION n={n} b={b:.4f} c={c:.4f}: {errs['vecres']:.3e} {errs['sec_at_eig']:.3e}")
    print("violations:", bad)
