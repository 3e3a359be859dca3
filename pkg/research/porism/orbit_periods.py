import cpdyn as cp
import matplotlib.pyplot as plt
import numpy as np

s = [1.0] * 5
chart = cp.PentagonChart(0.7, 0.6, s)
cs = np.linspace(0.2, 3.0, 60)

# PERIODS ==============================================================================================================
periods = []
for c in cs:
    try:
        period = cp.orbit_period(chart, float(c), max_period=20, tol=1e-6)
    except cp.CpdynError as err:
        print(f'c = {c:.3f}: {err.code}')
        period = None
    periods.append(np.nan if period is None else period)
    if period is not None:
        print(f'c = {c:.3f}: period {period}')

# PERIODICITY PERSISTS UNDER THE FLOW ==================================================================================
# If one point of a level curve is periodic, flowing along the curve keeps the period.
c = float(cs[int(np.nanargmin(periods))]) if not np.all(np.isnan(periods)) else 0.5
start = cp.pentagon_chart(chart.x, chart.y, s)
for T in (0.5, 1.0, 2.0):
    moved = cp.chart_from_sv(cp.flow(start, T, 0.001))
    try:
        print(f'c = {c:.3f}, flowed for T = {T}: period {cp.orbit_period(moved, c, max_period=20, tol=1e-5)}')
    except cp.CpdynError as err:
        print(f'c = {c:.3f}, flowed for T = {T}: {err.code}')

# PLOTTING =============================================================================================================
fig = plt.figure(figsize=(10, 6))
ax = plt.axes()
ax.plot(cs, periods, 'o')
ax.set_xlabel('$c$')
ax.set_ylabel('period of the c-dynamics')
plt.savefig('orbit_periods.png', dpi=200)
plt.close(fig)
