#include "cardiac4d/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cardiac4d {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_grid(const LabelVolume& a, const LabelVolume& b) {
  if (!(a.shape == b.shape)) throw DataError("label volumes differ in shape");
  if (!(a.spacing == b.spacing)) throw DataError("label volumes differ in spacing");
}

// One 1D pass of the squared-distance transform along a sampled line with
// sample pitch `step` (mm). f holds incoming squared distances (kInf for "no
// source in this line yet"); d receives the lower envelope of the parabolas
// (i*step - j*step)^2 + f[j]. Parabolas with infinite height are skipped, so
// all-empty lines stay infinite.
void dt1d(const std::vector<double>& f, std::vector<double>& d, std::vector<int>& v,
          std::vector<double>& z, double step, int n) {
  int k = -1;
  for (int q = 0; q < n; ++q) {
    if (f[q] == kInf) continue;
    const double fq = f[q] + (q * step) * (q * step);
    for (;;) {
      if (k < 0) {
        k = 0;
        v[0] = q;
        z[0] = -kInf;
        z[1] = kInf;
        break;
      }
      const int p = v[k];
      const double s =
          (fq - (f[p] + (p * step) * (p * step))) / (2.0 * step * (q - p));
      if (s <= z[k]) {
        --k;
        continue;
      }
      ++k;
      v[k] = q;
      z[k] = s;
      z[k + 1] = kInf;
      break;
    }
  }
  if (k < 0) {
    std::fill(d.begin(), d.begin() + n, kInf);
    return;
  }
  int j = 0;
  for (int i = 0; i < n; ++i) {
    const double x = i * step;
    while (z[j + 1] < x) ++j;
    const double dx = x - v[j] * step;
    d[i] = dx * dx + f[v[j]];
  }
}

struct NeighborOffsets26 {
  std::array<std::array<int, 3>, 26> d;
  NeighborOffsets26() {
    std::size_t i = 0;
    for (int dz = -1; dz <= 1; ++dz)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0 && dz == 0) continue;
          d[i++] = {dx, dy, dz};
        }
  }
};

const NeighborOffsets26 kNeighbors26;

}  // namespace

OverlapCounts overlap_counts(const LabelVolume& a, const LabelVolume& b, Structure s) {
  require_same_grid(a, b);
  const std::uint8_t code = static_cast<std::uint8_t>(s);
  OverlapCounts c;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    const bool in_a = a.labels[i] == code;
    const bool in_b = b.labels[i] == code;
    c.size_a += in_a;
    c.size_b += in_b;
    c.intersection += in_a && in_b;
  }
  return c;
}

std::optional<double> dice(const LabelVolume& a, const LabelVolume& b, Structure s) {
  const OverlapCounts c = overlap_counts(a, b, s);
  if (c.size_a == 0 && c.size_b == 0) return std::nullopt;
  return 2.0 * static_cast<double>(c.intersection) /
         static_cast<double>(c.size_a + c.size_b);
}

std::vector<std::array<int, 3>> extract_surface(const Mask& mask, const GridShape& shape) {
  std::vector<std::array<int, 3>> surface;
  const int nx = shape.nx, ny = shape.ny, nz = shape.nz;
  const std::size_t plane = static_cast<std::size_t>(nx) * ny;
  std::size_t i = 0;
  for (int z = 0; z < nz; ++z) {
    for (int y = 0; y < ny; ++y) {
      for (int x = 0; x < nx; ++x, ++i) {
        if (!mask[i]) continue;
        const bool boundary =
            x == 0 || !mask[i - 1] || x == nx - 1 || !mask[i + 1] ||
            y == 0 || !mask[i - nx] || y == ny - 1 || !mask[i + nx] ||
            z == 0 || !mask[i - plane] || z == nz - 1 || !mask[i + plane];
        if (boundary) surface.push_back({x, y, z});
      }
    }
  }
  return surface;
}

std::vector<double> euclidean_distance_transform(const Mask& mask, const GridShape& shape,
                                                 const Spacing& spacing) {
  shape.validate();
  spacing.validate();
  const std::size_t n = shape.voxel_count();
  std::vector<double> dist(n);
  for (std::size_t i = 0; i < n; ++i) dist[i] = mask[i] ? 0.0 : kInf;

  const int nx = shape.nx, ny = shape.ny, nz = shape.nz;
  const std::size_t plane = static_cast<std::size_t>(nx) * ny;
  const int maxn = std::max({nx, ny, nz});
  std::vector<double> f(maxn), d(maxn), z(maxn + 1);
  std::vector<int> v(maxn);

  // x pass
  for (int zz = 0; zz < nz; ++zz) {
    for (int yy = 0; yy < ny; ++yy) {
      const std::size_t base = zz * plane + static_cast<std::size_t>(yy) * nx;
      for (int x = 0; x < nx; ++x) f[x] = dist[base + x];
      dt1d(f, d, v, z, spacing.dx, nx);
      for (int x = 0; x < nx; ++x) dist[base + x] = d[x];
    }
  }
  // y pass
  for (int zz = 0; zz < nz; ++zz) {
    for (int xx = 0; xx < nx; ++xx) {
      const std::size_t base = zz * plane + static_cast<std::size_t>(xx);
      for (int y = 0; y < ny; ++y) f[y] = dist[base + static_cast<std::size_t>(y) * nx];
      dt1d(f, d, v, z, spacing.dy, ny);
      for (int y = 0; y < ny; ++y) dist[base + static_cast<std::size_t>(y) * nx] = d[y];
    }
  }
  // z pass
  for (int yy = 0; yy < ny; ++yy) {
    for (int xx = 0; xx < nx; ++xx) {
      const std::size_t base = static_cast<std::size_t>(yy) * nx + xx;
      for (int zc = 0; zc < nz; ++zc) f[zc] = dist[base + zc * plane];
      dt1d(f, d, v, z, spacing.dz, nz);
      for (int zc = 0; zc < nz; ++zc) dist[base + zc * plane] = d[zc];
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i] != kInf) dist[i] = std::sqrt(dist[i]);
  }
  return dist;
}

std::optional<SurfaceDistanceSet> surface_distances(const LabelVolume& a, const LabelVolume& b,
                                                    Structure s) {
  require_same_grid(a, b);
  const Mask mask_a = foreground_mask(a, s);
  const Mask mask_b = foreground_mask(b, s);
  const auto surf_a = extract_surface(mask_a, a.shape);
  const auto surf_b = extract_surface(mask_b, b.shape);
  if (surf_a.empty() || surf_b.empty()) return std::nullopt;

  auto directed = [&](const std::vector<std::array<int, 3>>& from,
                      const std::vector<std::array<int, 3>>& to) {
    Mask to_mask(a.shape.voxel_count(), 0);
    for (const auto& p : to) to_mask[linear_index(a.shape, p[0], p[1], p[2])] = 1;
    const auto edt = euclidean_distance_transform(to_mask, a.shape, a.spacing);
    std::vector<double> out;
    out.reserve(from.size());
    for (const auto& p : from) out.push_back(edt[linear_index(a.shape, p[0], p[1], p[2])]);
    return out;
  };

  SurfaceDistanceSet sd;
  sd.a_to_b = directed(surf_a, surf_b);
  sd.b_to_a = directed(surf_b, surf_a);
  return sd;
}

double hd95(const SurfaceDistanceSet& sd) {
  if (sd.a_to_b.empty() || sd.b_to_a.empty()) {
    throw DataError("hd95 requires both directed distance lists to be non-empty");
  }
  std::vector<double> pooled;
  pooled.reserve(sd.a_to_b.size() + sd.b_to_a.size());
  pooled.insert(pooled.end(), sd.a_to_b.begin(), sd.a_to_b.end());
  pooled.insert(pooled.end(), sd.b_to_a.begin(), sd.b_to_a.end());
  std::sort(pooled.begin(), pooled.end());
  // Nearest-rank: ceil(0.95 n)-th smallest, 1-indexed. Integer arithmetic
  // (ceil(19n/20)) avoids the 0.95*n rounding trap.
  const std::size_t n = pooled.size();
  const std::size_t rank = (19 * n + 19) / 20;
  return pooled[rank - 1];
}

double assd(const SurfaceDistanceSet& sd) {
  if (sd.a_to_b.empty() || sd.b_to_a.empty()) {
    throw DataError("assd requires both directed distance lists to be non-empty");
  }
  double sum = 0.0;
  for (double d : sd.a_to_b) sum += d;
  for (double d : sd.b_to_a) sum += d;
  return sum / static_cast<double>(sd.a_to_b.size() + sd.b_to_a.size());
}

double structure_volume_mm3(const LabelVolume& vol, Structure s) {
  const std::uint8_t code = static_cast<std::uint8_t>(s);
  std::size_t count = 0;
  for (std::uint8_t v : vol.labels) count += v == code;
  return static_cast<double>(count) * vol.spacing.voxel_volume_mm3();
}

double structure_surface_area_mm2(const LabelVolume& vol, Structure s) {
  const std::uint8_t code = static_cast<std::uint8_t>(s);
  const int nx = vol.shape.nx, ny = vol.shape.ny, nz = vol.shape.nz;
  const std::size_t plane = static_cast<std::size_t>(nx) * ny;
  const double area_x = vol.spacing.dy * vol.spacing.dz;
  const double area_y = vol.spacing.dx * vol.spacing.dz;
  const double area_z = vol.spacing.dx * vol.spacing.dy;
  double area = 0.0;
  std::size_t i = 0;
  for (int z = 0; z < nz; ++z) {
    for (int y = 0; y < ny; ++y) {
      for (int x = 0; x < nx; ++x, ++i) {
        if (vol.labels[i] != code) continue;
        if (x == 0 || vol.labels[i - 1] != code) area += area_x;
        if (x == nx - 1 || vol.labels[i + 1] != code) area += area_x;
        if (y == 0 || vol.labels[i - nx] != code) area += area_y;
        if (y == ny - 1 || vol.labels[i + nx] != code) area += area_y;
        if (z == 0 || vol.labels[i - plane] != code) area += area_z;
        if (z == nz - 1 || vol.labels[i + plane] != code) area += area_z;
      }
    }
  }
  return area;
}

namespace detail {

ComponentLabels label_components_26(const Mask& mask, const GridShape& shape) {
  ComponentLabels out;
  out.ids.assign(mask.size(), -1);
  const int nx = shape.nx, ny = shape.ny, nz = shape.nz;
  const std::size_t plane = static_cast<std::size_t>(nx) * ny;

  std::vector<std::size_t> stack;
  for (std::size_t seed = 0; seed < mask.size(); ++seed) {
    if (!mask[seed] || out.ids[seed] >= 0) continue;
    const std::int32_t id = static_cast<std::int32_t>(out.sizes.size());
    std::size_t size = 0;
    stack.push_back(seed);
    out.ids[seed] = id;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      ++size;
      const int z = static_cast<int>(cur / plane);
      const std::size_t rem = cur % plane;
      const int y = static_cast<int>(rem / nx);
      const int x = static_cast<int>(rem % nx);
      for (const auto& d : kNeighbors26.d) {
        const int xx = x + d[0], yy = y + d[1], zz = z + d[2];
        if (xx < 0 || xx >= nx || yy < 0 || yy >= ny || zz < 0 || zz >= nz) continue;
        const std::size_t j = (static_cast<std::size_t>(zz) * ny + yy) * nx + xx;
        if (mask[j] && out.ids[j] < 0) {
          out.ids[j] = id;
          stack.push_back(j);
        }
      }
    }
    out.sizes.push_back(size);
  }
  return out;
}

}  // namespace detail

ComponentReport connected_components(const LabelVolume& vol, Structure s) {
  const Mask mask = foreground_mask(vol, s);
  const auto labels = detail::label_components_26(mask, vol.shape);
  ComponentReport report;
  report.component_count = labels.sizes.size();
  report.component_sizes = labels.sizes;
  std::sort(report.component_sizes.begin(), report.component_sizes.end(),
            std::greater<std::size_t>());
  return report;
}

LabelVolume keep_largest_component(const LabelVolume& vol, Structure s) {
  const Mask mask = foreground_mask(vol, s);
  const auto labels = detail::label_components_26(mask, vol.shape);
  if (labels.sizes.size() <= 1) return vol;

  // Discovery order follows raster order of each component's first voxel, so
  // a strict > keeps the earliest component on ties.
  std::size_t best = 0;
  for (std::size_t c = 1; c < labels.sizes.size(); ++c) {
    if (labels.sizes[c] > labels.sizes[best]) best = c;
  }

  LabelVolume out = vol;
  for (std::size_t i = 0; i < out.labels.size(); ++i) {
    if (labels.ids[i] >= 0 && labels.ids[i] != static_cast<std::int32_t>(best)) {
      out.labels[i] = static_cast<std::uint8_t>(Structure::background);
    }
  }
  return out;
}

}  // namespace cardiac4d
