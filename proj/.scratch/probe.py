import numpy as np
from proto import *

n, a, b, c = 14, -0.1735, 2.8508, 0.2342
m = n + 2
scale = 1 + abs(a) + abs(b) + abs(c)
H = build_H(n, a, b, c)
ds = np.sort(pole_values(n, a, b, c))
mu = np.linalg.eigvalsh(H)
lam, theta = spectrum(n, a, b, c)
print("Hmax:", np.max(np.abs(H)))
den00 = lambda t: b * (G(n,a,b,c,t,0,0,lam,theta) if n%2==0 else F(n,a,b,c,t,0,0,lam,theta)) + m
for u in mu:
    dist = np.min(np.abs(u - ds))
    if dist > 1e-6 * scale:
        v = eigvec(n, a, b, c, u)
        res = np.linalg.norm(H @ v - u * v)
        # Newton-polish u on the secular function first
        t = u
        for _ in range(3):
            h = 1e-7
            fp = (secular(n,a,b,c,t+h) - secular(n,a,b,c,t-h)) / (2*h)
            if fp != 0:
                t = t - secular(n,a,b,c,t)/fp
        v2 = eigvec(n, a, b, c, t)
        res2 = np.linalg.norm(H @ v2 - t * v2)
        print(f"mu={u:+.12f} dist={dist:.2e} den={den00(u):+.3e} f(mu)={secular(n,a,b,c,u):+.2e} res={res:.2e} | polished f={secular(n,a,b,c,t):+.2e} res={res2:.2e}")
