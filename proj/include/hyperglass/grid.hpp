#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace hyperglass {

/// Uniform Cartesian grid of samples, row-major with node (i,j) placed at
/// (x0 + i*hx, y0 + j*hy). Operators that need a full stencil mask the
/// boundary ring with NaN instead of extrapolating.
template <class T>
struct Grid2D {
  double x0 = 0.0;
  double y0 = 0.0;
  double hx = 0.0;
  double hy = 0.0;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<T> values;

  Grid2D() = default;
  Grid2D(double x0_, double y0_, double hx_, double hy_, std::size_t nx_, std::size_t ny_)
      : x0(x0_), y0(y0_), hx(hx_), hy(hy_), nx(nx_), ny(ny_), values(nx_ * ny_) {}

  T& at(std::size_t i, std::size_t j) { return values[j * nx + i]; }
  const T& at(std::size_t i, std::size_t j) const { return values[j * nx + i]; }

  double x(std::size_t i) const { return x0 + static_cast<double>(i) * hx; }
  double y(std::size_t j) const { return y0 + static_cast<double>(j) * hy; }

  bool interior(std::size_t i, std::size_t j) const {
    return i >= 1 && j >= 1 && i + 1 < nx && j + 1 < ny;
  }
};

inline double grid_mask() { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace hyperglass
