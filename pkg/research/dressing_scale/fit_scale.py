import cpdyn as cp
import matplotlib.pyplot as plt
import numpy as np

rng = cp.make_rng(1)

# FITTED TIME SCALE ====================================================================================================
for n in (3, 5, 7, 9):
    samples = [cp.random_sv(n, rng, 'float') for _ in range(20)]
    k, worst = cp.fit_dressing_scale(samples)
    print(f'n = {n}: fitted scale {k:.12f} (expected {cp.DRESSING_TIME_SCALE}), worst residual {worst:.3g}')

# CONSERVATION UNDER C-DYNAMICS ========================================================================================
orbit = None
while orbit is None:
    p = cp.random_closed_polygon(7, rng, 'float')
    try:
        orbit = cp.iterate_c_dynamics(p, 0.4, 40)
    except cp.CpdynError as err:
        print(f'skipped a heptagon: {err.code}')
values = np.array([[float(f) for f in cp.integrals_F(cp.sv_coords(q)).F] for q in orbit])
drift = np.abs(values - values[0]).max(axis=0) / np.maximum(1.0, np.abs(values[0]))
print(f'relative drift of F over {len(orbit) - 1} steps: {drift}')

# PLOTTING =============================================================================================================
fig = plt.figure(figsize=(10, 6))
ax = plt.axes()
for k in range(values.shape[1]):
    ax.plot(values[:, k] - values[0, k], label=f'$F_{k}$')
ax.set_xlabel('step')
ax.set_ylabel('change of the integral')
ax.legend()
plt.savefig('integral_drift.png', dpi=200)
plt.close(fig)
