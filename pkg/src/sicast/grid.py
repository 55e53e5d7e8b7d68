"""Regional grid geometry.

Spherical Lambert azimuthal equal-area projection, construction of the named
regional grids, land masks and per-cell areas. Row 0 is the northern edge of
the raster, column 0 the western edge; knot (i, j) sits at projected
coordinates x = (j - (cols-1)/2) * step, y = ((rows-1)/2 - i) * step.
"""

import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, ProjectionDomainError

# Authalic sphere radius (m): equal-area arithmetic stays exact on a sphere.
SPHERE_RADIUS_M = 6_371_007.181

DEFAULT_ROWS = 360
DEFAULT_COLS = 500
DEFAULT_STEP_M = 5000.0

REGION_CENTERS = {
    "barents": (73.0, 57.3),
    "labrador": (61.0, -56.0),
    "laptev": (76.0, 125.0),
}


def laea_forward(lat, lon, center_lat, center_lon, sphere_radius=SPHERE_RADIUS_M):
    """Project geographic coordinates (degrees) to planar meters.

    The projection center maps to (0, 0). Points antipodal to the center are
    outside the projection domain and raise ProjectionDomainError.
    Accepts scalars or numpy arrays.
    """
    lat = np.asarray(lat, dtype=np.float64)
    lon = np.asarray(lon, dtype=np.float64)
    if np.any(np.abs(lat) > 90.0):
        raise ProjectionDomainError("latitude outside [-90, 90]")
    phi = np.radians(lat)
    lam = np.radians(lon)
    phi1 = math.radians(center_lat)
    lam0 = math.radians(center_lon)

    denom = 1.0 + math.sin(phi1) * np.sin(phi) + math.cos(phi1) * np.cos(phi) * np.cos(lam - lam0)
    if np.any(denom < 1e-12):
        raise ProjectionDomainError("point is antipodal to the projection center")
    k = np.sqrt(2.0 / denom)
    x = sphere_radius * k * np.cos(phi) * np.sin(lam - lam0)
    y = sphere_radius * k * (
        math.cos(phi1) * np.sin(phi) - math.sin(phi1) * np.cos(phi) * np.cos(lam - lam0)
    )
    if x.ndim == 0:
        return float(x), float(y)
    return x, y


def laea_inverse(x, y, center_lat, center_lon, sphere_radius=SPHERE_RADIUS_M):
    """Invert laea_forward; (0, 0) maps back to the projection center.

    Points at or beyond the projection rim (x^2 + y^2 >= (2R)^2) raise
    ProjectionDomainError. Accepts scalars or numpy arrays.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    phi1 = math.radians(center_lat)
    lam0 = math.radians(center_lon)

    rho = np.hypot(x, y)
    if np.any(rho >= 2.0 * sphere_radius):
        raise ProjectionDomainError("point outside the projection image")
    c = 2.0 * np.arcsin(rho / (2.0 * sphere_radius))
    sin_c = np.sin(c)
    cos_c = np.cos(c)
    # Guard the rho=0 singularity; the limit is the center itself.
    safe_rho = np.where(rho == 0.0, 1.0, rho)
    phi = np.arcsin(cos_c * math.sin(phi1) + y * sin_c * math.cos(phi1) / safe_rho)
    lam = lam0 + np.arctan2(
        x * sin_c, safe_rho * math.cos(phi1) * cos_c - y * math.sin(phi1) * sin_c
    )
    lat = np.degrees(phi)
    lon = np.degrees(lam)
    lat = np.where(rho == 0.0, center_lat, lat)
    lon = np.where(rho == 0.0, center_lon, lon)
    # Wrap longitude to (-180, 180].
    lon = np.where(lon > 180.0, lon - 360.0, lon)
    lon = np.where(lon <= -180.0, lon + 360.0, lon)
    if lat.ndim == 0:
        return float(lat), float(lon)
    return lat, lon


@dataclass
class RegionGrid:
    """Equal-area raster geometry with a land mask and per-cell areas."""

    name: str
    rows: int
    cols: int
    step_m: float
    center_lat: float
    center_lon: float
    land_mask: np.ndarray
    cell_area_m2: np.ndarray

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise ConfigError(f"grid extent must be positive, got {self.rows}x{self.cols}")
        if self.step_m <= 0:
            raise ConfigError(f"grid step must be positive, got {self.step_m}")
        self.land_mask = np.asarray(self.land_mask, dtype=bool)
        self.cell_area_m2 = np.asarray(self.cell_area_m2, dtype=np.float64)
        if self.land_mask.shape != (self.rows, self.cols):
            raise ConfigError("land_mask extent does not match grid extent")
        if self.cell_area_m2.shape != (self.rows, self.cols):
            raise ConfigError("cell_area_m2 extent does not match grid extent")
        if not np.all(self.cell_area_m2 > 0):
            raise ConfigError("cell areas must be positive")

    @property
    def sea_mask(self):
        return ~self.land_mask

    def knot_xy(self):
        """Projected planar coordinates (meters) of every knot."""
        j = np.arange(self.cols, dtype=np.float64)
        i = np.arange(self.rows, dtype=np.float64)
        x = (j - (self.cols - 1) / 2.0) * self.step_m
        y = ((self.rows - 1) / 2.0 - i) * self.step_m
        return np.meshgrid(x, y)

    def knot_latlon(self):
        """Geographic coordinates (degrees) of every knot."""
        xx, yy = self.knot_xy()
        return laea_inverse(xx, yy, self.center_lat, self.center_lon)


def build_region(name, *, rows=None, cols=None, step_m=None, center=None, land_mask=None):
    """Construct a RegionGrid for a named region or a custom one.

    Named regions (barents, labrador, laptev) use the documented projection
    centers with the default 360x500 extent at a 5 km step. ``custom``
    requires explicit center, rows, cols and step. The land mask defaults to
    all-sea. Cell areas are constant step^2 under the equal-area projection.
    """
    key = name.lower()
    if key in REGION_CENTERS:
        c_lat, c_lon = REGION_CENTERS[key]
        if center is not None:
            c_lat, c_lon = center
        rows = DEFAULT_ROWS if rows is None else int(rows)
        cols = DEFAULT_COLS if cols is None else int(cols)
        step_m = DEFAULT_STEP_M if step_m is None else float(step_m)
    elif key == "custom" or center is not None:
        if center is None or rows is None or cols is None or step_m is None:
            raise ConfigError("custom region requires explicit center, rows, cols and step_m")
        c_lat, c_lon = center
        rows, cols, step_m = int(rows), int(cols), float(step_m)
    else:
        raise ConfigError(f"unknown region {name!r} and no overrides given")

    if land_mask is None:
        land_mask = np.zeros((rows, cols), dtype=bool)
    areas = np.full((rows, cols), float(step_m) ** 2, dtype=np.float64)
    return RegionGrid(
        name=key if key != "custom" else name,
        rows=rows,
        cols=cols,
        step_m=float(step_m),
        center_lat=float(c_lat),
        center_lon=float(c_lon),
        land_mask=land_mask,
        cell_area_m2=areas,
    )


def load_region_config(path):
    """Load a RegionGrid from a plain-text key/value file.

    Recognized keys: name, center_lat, center_lon, rows, cols, step_m and an
    optional land_mask_path pointing to a single-channel raster file whose
    cells > 0.5 mark land (relative paths resolve against the config file).
    """
    fields = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{line_no}: expected key=value, got {line!r}")
            k, v = line.split("=", 1)
            fields[k.strip()] = v.strip()

    missing = {"name", "center_lat", "center_lon", "rows", "cols", "step_m"} - fields.keys()
    if missing:
        raise ConfigError(f"{path}: missing keys: {', '.join(sorted(missing))}")

    land_mask = None
    if "land_mask_path" in fields:
        from .store import read_stack  # deferred: store depends on nothing here

        mask_path = fields["land_mask_path"]
        if not os.path.isabs(mask_path):
            mask_path = os.path.join(os.path.dirname(os.path.abspath(path)), mask_path)
        stack = read_stack(mask_path)
        land_mask = stack.data[0] > 0.5

    return build_region(
        fields["name"],
        rows=int(fields["rows"]),
        cols=int(fields["cols"]),
        step_m=float(fields["step_m"]),
        center=(float(fields["center_lat"]), float(fields["center_lon"])),
        land_mask=land_mask,
    )


def write_region_config(grid, path, land_mask_path=None):
    """Write the key/value region file next to a dataset."""
    lines = [
        f"name={grid.name}",
        f"center_lat={grid.center_lat!r}",
        f"center_lon={grid.center_lon!r}",
        f"rows={grid.rows}",
        f"cols={grid.cols}",
        f"step_m={grid.step_m!r}",
    ]
    if land_mask_path is not None:
        lines.append(f"land_mask_path={land_mask_path}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
