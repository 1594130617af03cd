"""Tactile geometry walkthrough: slopes -> normals -> height -> friction.

Builds an analytic bump surface, runs every geometric representation the
package supports, and writes the renderings next to this script.
"""

from pathlib import Path

import numpy as np

from vts.geometry import (
    GradientField,
    export_friction_png,
    friction_map,
    gradient_to_normal,
    integrate_height,
    normal_to_gradient,
    shade_normal_map,
)
from vts.imgio import write_gray8, write_rgb8

out = Path(__file__).parent / "out" / "geometry"
out.mkdir(parents=True, exist_ok=True)

# A Gaussian bump has closed-form slopes, so every later step can be checked
# against something exact.
h, w = 156, 208
Y, X = np.mgrid[0:h, 0:w].astype(np.float64)
sigma, cx, cy = 24.0, 104.0, 78.0
height_true = 12.0 * np.exp(-((X - cx) ** 2 + (Y - cy) ** 2) / (2 * sigma**2))
gx = -(X - cx) / sigma**2 * height_true
gy = -(Y - cy) / sigma**2 * height_true
field = GradientField(gx=gx, gy=gy)
print(f"slope magnitude: max {field.magnitude().max():.3f}")

# Slopes and unit normals are interchangeable; the round trip is exact.
normals = gradient_to_normal(field)
back = normal_to_gradient(normals)
print(f"normal round-trip error: {np.abs(back.gx - gx).max():.2e}")

# Integrating the slopes recovers the surface up to a constant.  The bump's
# field is only approximately integrable on the grid, hence the small RMSE.
recovered = integrate_height(field)
centered = height_true - height_true.mean()
print(f"height RMSE after integration: {np.sqrt(((recovered - centered) ** 2).mean()):.2e}")

# Shaded normals are the visualization the evaluation protocol scores.
write_rgb8(out / "shaded_normals.png", shade_normal_map(field))

# The friction map is what a variable-friction haptic display consumes:
# squared slope, log-compressed, resampled to the device resolution.
gmax = float(field.magnitude().max())
normalized = GradientField(gx=gx / gmax, gy=gy / gmax)
fmap = friction_map(normalized, object_mask=None, device_size=(640, 400))
export_friction_png(out / "friction.png", fmap)
write_gray8(out / "height.png", (recovered - recovered.min()) / np.ptp(recovered))

print(f"wrote {sorted(p.name for p in out.iterdir())} to {out}")
