import numpy as np
from proto import *

def solve_proto(n, a, b, c, tol=1e-10):
    m = n + 2
    scale = 1 + abs(a) + abs(b) + abs(c)
    eps_pole = 1e-12 * scale
    eps_group = 1e-10 * scale
    ds = np.sort(pole_values(n, a, b, c))
    lo_hull = ds[0] + min(0, -a, -b) - 1e-9 * scale
    hi_hull = ds[-1] + max(0, -a, -b) + 1e-9 * scale
    # distinct poles
    dps = []
    for d in ds:
        if not dps or d - dps[-1][0] > eps_group:
            dps.append([d, 1])
        else:
            dps[-1][1] += 1
    # segments
    bounds = [lo_hull] + [p for p, _ in dps for _ in (0, 1)] + [hi_hull]
    segs = []
    pts = [lo_hull]
    for p, _ in dps:
        pts += [p - eps_pole, p + eps_pole]
    pts.append(hi_hull)
    for i in range(0, len(pts), 2):
        if pts[i + 1] > pts[i]:
            segs.append((pts[i], pts[i + 1]))

    def fsec(t):
        return secular(n, a, b, c, t)

    H = build_H(n, a, b, c)
    Hmax = np.max(np.abs(H))

    def nullity(d):
        A = H - d * np.eye(m)
        thr = 1e-10 * scale * max(Hmax, 1e-300)
        r = 0
        nul = 0
        A = A.copy()
        for col in range(m):
            piv = r + np.argmax(np.abs(A[r:, col])) if r < m else r
            if r >= m or abs(A[piv, col]) <= thr:
                nul += 1
                continue
            A[[r, piv]] = A[[piv, r]]
            for i in range(r + 1, m):
                A[i, col:] -= A[i, col] / A[r, col] * A[r, col:]
            r += 1
        return nul

    for samples in [64, 256, 1024, 4096]:
        roots = []
        for (lo, hi) in segs:
            ts = np.linspace(lo, hi, samples + 1)
            fs = np.array([fsec(t) for t in ts])
            for i in range(samples):
                if fs[i] == 0.0:
                    roots.append(ts[i]); continue
                if fs[i] * fs[i + 1] < 0:
                    x0, x1, f0 = ts[i], ts[i + 1], fs[i]
                    while x1 - x0 > tol:
                        xm = 0.5 * (x0 + x1)
                        fm = fsec(xm)
                        if fm == 0.0:
                            x0 = x1 = xm; break
                        if f0 * fm < 0: x1 = xm
                        else: x0, f0 = xm, fm
                    roots.append(0.5 * (x0 + x1))
            if fs[-1] == 0.0: roots.append(ts[-1])
        roots = sorted(roots)
        merged = []
        for r0 in roots:
            if not merged or r0 - merged[-1] > eps_group: merged.append(r0)
        roots = merged
        mults = [(p, nullity(p)) for p, _ in dps]
        total = len(roots) + sum(q for _, q in mults)
        if total == m:
            vals = sorted(roots + [p for p, q in mults for _ in range(q)])
            return np.array(vals), samples
    return None, 4096

rng = np.random.default_rng(2024)
worst = 0.0
fails = 0
for n in range(1, 33):
    for trial in range(20):
        a, b, c = rng.uniform(-3, 3, 3)
        scale = 1 + abs(a) + abs(b) + abs(c)
        vals, samples = solve_proto(n, a, b, c)
        if vals is None:
            fails += 1
            print(f"INCOMPLETE n={n} a={a} b={b} c={c}")
            continue
        ev = np.linalg.eigvalsh(build_H(n, a, b, c))
        d = np.max(np.abs(vals - ev)) / scale
        worst = max(worst, d)
        if d > 1e-8:
            fails += 1
            print(f"MISMATCH n={n} a={a} b={b} c={c}: {d:.2e} (samples={samples})")
# exchange cases
for n in range(1, 21):
    vals, _ = solve_proto(n, 0.0, 0.0, 1.0)
    m = n + 2
    expect = np.array([-1.0] * (m // 2) + [1.0] * ((m + 1) // 2))
    if vals is None or np.max(np.abs(vals - expect)) > 1e-12:
        fails += 1
        print(f"EXCHANGE FAIL n={n}: {vals}")
print(f"done. worst rel diff = {worst:.3e}, fails = {fails}")
