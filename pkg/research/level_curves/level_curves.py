import cpdyn as cp
import matplotlib.pyplot as plt
import numpy as np

s = [1.0] * 5
xs = np.linspace(-6.0, 6.0, 1200)
levels = (-10, -9, -8.2, 3.0901699, 4, 6)

# CONTOURS OF K ========================================================================================================
grid = cp.chart_grid(s, 6.0, 300)
print(f'{len(grid)} nonsingular chart points, K in [{grid[:, 2].min():.3g}, {grid[:, 2].max():.3g}]')

fig = plt.figure(figsize=(9, 9))
ax = plt.axes()
for K in levels:
    points = cp.level_curve_points(s, K, xs)
    ax.scatter([float(p.x) for p in points], [float(p.y) for p in points], s=1, label=f'K = {K}')

# FLOW ARROWS ==========================================================================================================
for x in np.linspace(-5, 5, 15):
    for y in np.linspace(-5, 5, 15):
        try:
            dx, dy = cp.pentagon_flow(cp.PentagonChart(float(x), float(y), s))
        except (cp.CpdynError, ZeroDivisionError):
            continue
        norm = np.hypot(dx, dy)
        if norm > 0:
            ax.arrow(x, y, 0.25 * dx / norm, 0.25 * dy / norm, width=0.01, color='grey')

ax.set_xlim(-6, 6)
ax.set_ylim(-6, 6)
ax.set_xlabel('$x = v_1$')
ax.set_ylabel('$y = v_4$')
ax.legend(markerscale=8)
plt.savefig('level_curves.png', dpi=200)
plt.close(fig)

# TRAJECTORY ON ONE LEVEL ==============================================================================================
sv = cp.pentagon_chart(0.7, 0.6, s)
rows, final = cp.flow_trace(sv, 5.0, 0.001, every=50)
print(f'drift of the integrals over T = 5: {cp.flow_drift(rows):.3g}')
print(f'final chart point: {cp.chart_from_sv(final)}')
