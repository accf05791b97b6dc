import numpy as np
from proto import *

np.set_printoptions(precision=17)

# --- 1. n=1, a=1, b=2, c=3 ---
H = np.array([[0.,1,3],[1,3,2],[3,2,0]])
ev = np.linalg.eigvalsh(H)
print("eig H(1,1,2,3):", ", ".join(f"{v:.17g}" for v in ev))
print("det H:", np.linalg.det(H))

# F spot values (expect -1/6, 5/6, -7/6, f(0)=5/6)
n,a,b,c = 1,1.,2.,3.
phi = 2*np.pi/3
print("F(0;0,0) =", F(n,a,b,c,0.0,0,0), " vs -1/6 =", -1/6)
print("F(0;p,p) =", F(n,a,b,c,0.0,phi,phi), " vs 5/6")
print("F(0;0,p) =", F(n,a,b,c,0.0,0,phi), " vs -7/6")
print("f(0)     =", secular(n,a,b,c,0.0), " vs 5/6")

# det identity: f(t) * prod(t - d) = det(tI - H) at a few t
ds = pole_values(n,a,b,c)
for t in [0.37, -2.2, 8.5]:
    lhs = secular(n,a,b,c,t) * np.prod(t - ds)
    rhs = np.linalg.det(t*np.eye(3) - H)
    print(f"det identity t={t}: {lhs:.12g} vs {rhs:.12g}  diff={abs(lhs-rhs):.2e}")

# --- 2. even-n instance n=2, a=0.8, b=-1.1, c=0.6 ---
n,a,b,c = 2, 0.8, -1.1, 0.6
H2 = build_H(n,a,b,c)
ev2 = np.linalg.eigvalsh(H2)
print("\neig H(2,0.8,-1.1,0.6):", ", ".join(f"{v:.17g}" for v in ev2))
ds2 = np.sort(pole_values(n,a,b,c))
print("poles:", ", ".join(f"{v:.17g}" for v in ds2))
for t in [0.2, -3.0]:
    lhs = secular(n,a,b,c,t) * np.prod(t - ds2)
    rhs = np.linalg.det(t*np.eye(4) - H2)
    print(f"even det identity t={t}: {lhs:.12g} vs {rhs:.12g} diff={abs(lhs-rhs):.2e}")
print("g(0.2) =", f"{secular(n,a,b,c,0.2):.17g}")

# --- 3. a=0 remark case n=1, a=0, b=1, c=1 ---
n,a,b,c = 1, 0., 1., 1.
H3 = build_H(n,a,b,c)
ev3 = np.linalg.eigvalsh(H3)
print("\neig H(1,0,1,1):", ", ".join(f"{v:.17g}" for v in ev3))
ds3 = np.sort(pole_values(n,a,b,c))
print("poles:", ", ".join(f"{v:.17g}" for v in ds3))
for u in ev3:
    if np.min(np.abs(u-ds3)) > 1e-6*3:
        v = eigvec(n,a,b,c,u)
        print(f"  mu={u:.17g} res={np.linalg.norm(H3@v-u*v):.2e}")

# --- 4. fixed symmetric 5x5 for the jacobi test ---
rng = np.random.default_rng(42)
S = rng.uniform(-2, 2, (5,5)); S = (S + S.T)/2
print("\n5x5 matrix rows:")
for row in S:
    print("  {" + ", ".join(f"{v:.17g}" for v in row) + "},")
ev5 = np.linalg.eigvalsh(S)
print("eig 5x5:", ", ".join(f"{v:.17g}" for v in ev5))

# --- 5. n=1 a=1 b=2 c=3: weyl brackets values ---
s3 = np.sqrt(3.0)
print("\nsqrt3:", f"{s3:.17g}")
print("6 pole:", 1.+2.+3.)

# --- 6. (n=5, a=0, b=0, c=1): exchange J7 -> eigs ---
n = 5
H7 = build_H(n, 0,0,1.)
print("J7 eigs:", np.linalg.eigvalsh(H7))

# --- 7. n=4, a=1, b=2, c=-1: lambda_{n/2+1} = 4 check ---
lam,_ = spectrum(4, 1., 2., -1.)
print("n=4 lambda_3:", lam[3])

# --- 8. n=1 a=1 b=0 c=0 solve example ---
H0 = build_H(1, 1., 0., 0.)
print("H(1,1,0,0):", H0.tolist(), "eigs:", np.linalg.eigvalsh(H0))
print("poles:", np.sort(pole_values(1,1.,0.,0.)))
sec_roots_expected = [u for u in np.linalg.eigvalsh(H0)]
for u in sec_roots_expected:
    ds0 = np.sort(pole_values(1,1.,0.,0.))
    print(f"  mu={u:.4f} mindist={np.min(np.abs(u-ds0)):.3e}")
