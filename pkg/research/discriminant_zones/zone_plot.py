import cpdyn as cp
import matplotlib.pyplot as plt
import numpy as np

s = [1.0] * 5
cs = np.linspace(0.05, 3.0, 120)
Ks = np.linspace(-12.0, 12.0, 120)

# PREDICTED ZONES ======================================================================================================
rows = cp.zone_grid(s, cs, Ks)
exists = np.array([e for _, _, e in rows], dtype=float).reshape(len(cs), len(Ks))

# BAND EDGES ===========================================================================================================
lower, upper, band_cs = [], [], []
for c in cs:
    _, roots = cp.pentagon_discriminant(s, float(c))
    if roots:
        band_cs.append(c)
        lower.append(roots[0])
        upper.append(roots[1])

# SPOT CHECKS AGAINST THE SOLVER =======================================================================================
rng = cp.make_rng(0)
disagreements = 0
checked = 0
for _ in range(200):
    chart = cp.PentagonChart(float(rng.uniform(-3, 3)), float(rng.uniform(-3, 3)), s)
    c = float(rng.uniform(0.2, 3.0))
    try:
        K = float(cp.pentagon_K(chart))
        found = cp.solver_partner_exists(chart, c)
    except cp.CpdynError:
        continue
    checked += 1
    disagreements += found != cp.pentagon_partner_exists(s, c, K)
print(f'{disagreements} disagreements over {checked} sampled pentagons')

cp.write_zone_grid('pentagon_zones.csv', s, 120)

# PLOTTING =============================================================================================================
fig = plt.figure(figsize=(10, 7))
ax = plt.axes()
ax.pcolormesh(cs, Ks, exists.T, cmap='Greys_r', shading='auto')
ax.plot(band_cs, lower, color='tab:red', label='$K_-$')
ax.plot(band_cs, upper, color='tab:blue', label='$K_+$')
ax.set_xlabel('$c$')
ax.set_ylabel('$K$')
ax.set_title('Pentagons with unit sides: c-related partners exist in the light region')
ax.legend()
plt.savefig('pentagon_zones.png', dpi=200)
plt.close(fig)
