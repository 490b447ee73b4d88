#include "hyperglass/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperglass/parallel.hpp"

namespace hyperglass {

WaveParams WaveParams::spectral(double lambda, Complex amplitude) {
  return {Complex{0.5, -lambda}, amplitude};
}

WaveParams WaveParams::general(Complex nu, Complex amplitude) {
  return {nu, amplitude};
}

bool WaveParams::spectral_form(double eps) const {
  return std::abs(nu.real() - 0.5) <= eps;
}

double WaveParams::lambda() const {
  if (!spectral_form()) throw std::logic_error("WaveParams: not in spectral form (Re nu != 1/2)");
  return -nu.imag();
}

double poisson_kernel(DiskPoint zeta, BoundaryPoint b, double clamp) {
  if (b.model() != BoundaryPoint::Model::disk)
    throw std::invalid_argument("poisson_kernel: disk boundary point required");
  const double n = zeta.abs();
  if (n > 1.0 - clamp)
    throw std::domain_error("poisson_kernel: |zeta| too close to the boundary (divergent)");
  const Complex d = b.unit_complex() - zeta.as_complex();
  return (1.0 - n) * (1.0 + n) / std::norm(d);
}

Complex horocyclic_wave(DiskPoint zeta, BoundaryPoint b, const WaveParams& params, double clamp) {
  const double logp = std::log(poisson_kernel(zeta, b, clamp));
  return std::exp(params.nu * logp);
}

FieldSample field_sample(DiskPoint zeta, BoundaryPoint b, const WaveParams& params, double clamp) {
  const double logp = std::log(poisson_kernel(zeta, b, clamp));
  FieldSample s;
  s.amplitude = std::abs(params.amplitude) * std::exp(params.nu.real() * logp);
  s.phase = std::arg(params.amplitude) + params.nu.imag() * logp;
  s.value = s.amplitude * std::exp(Complex{0.0, s.phase});
  return s;
}

namespace {

// Compensated (Kahan) accumulation; the node counts get large enough that a
// naive sum would eat into the 1e-12 identity contracts.
struct KahanComplex {
  Complex sum{};
  Complex carry{};
  void add(Complex v) {
    const Complex y = v - carry;
    const Complex t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Trapezoid average over [0,2pi) of fn(phi) with n uniform nodes.
template <class F>
Complex periodic_average(int n, F&& fn) {
  KahanComplex acc;
  const double h = 2.0 * kPi / static_cast<double>(n);
  for (int k = 0; k < n; ++k) acc.add(fn(h * static_cast<double>(k)));
  return acc.sum / static_cast<double>(n);
}

template <class F>
QuadratureResult converge_periodic(F&& fn, const QuadratureOptions& opts) {
  QuadratureResult res;
  int n = opts.start_nodes;
  Complex prev = periodic_average(n, fn);
  while (n * 2 <= opts.max_nodes) {
    n *= 2;
    const Complex cur = periodic_average(n, fn);
    const double diff = std::abs(cur - prev);
    if (diff <= opts.abs_tol || diff <= opts.rel_tol * std::abs(cur)) {
      res.value = cur;
      res.converged = true;
      res.nodes = n;
      return res;
    }
    prev = cur;
  }
  res.value = prev;
  res.converged = false;
  res.nodes = n;
  return res;
}

}  // namespace

QuadratureResult conical_function(Complex nu, double r, const QuadratureOptions& opts) {
  if (r < 0.0) throw std::domain_error("conical_function: r must be nonnegative");
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  return converge_periodic(
      [&](double phi) {
        // cosh r + sinh r cos phi >= e^{-r} > 0: the real log is safe.
        const double base = ch + sh * std::cos(phi);
        return std::exp(-nu * std::log(base));
      },
      opts);
}

double conical_symmetry_check(double lambda, double r, const QuadratureOptions& opts) {
  const QuadratureResult plus = conical_function(Complex{0.5, -lambda}, r, opts);
  const QuadratureResult minus = conical_function(Complex{0.5, lambda}, r, opts);
  return std::abs(plus.value - minus.value);
}

QuadratureResult spherical_function(const SU11Element& g, Complex nu,
                                    const QuadratureOptions& opts) {
  // g.0 = c / conj(a); P(g.0, .) is the boundary-measure derivative of g^{-1}.
  const DiskPoint orbit = su11_act(g, DiskPoint{0.0, 0.0});
  return converge_periodic(
      [&](double phi) {
        const double p = poisson_kernel(orbit, BoundaryPoint::disk_angle(phi));
        return std::exp(nu * std::log(p));
      },
      opts);
}

namespace {

template <class Coef>
Grid2D<Complex> laplacian_5pt(const Grid2D<Complex>& field, Coef&& coefficient) {
  if (field.nx < 3 || field.ny < 3)
    throw std::invalid_argument("laplace operator: grid must be at least 3x3");
  Grid2D<Complex> out(field.x0, field.y0, field.hx, field.hy, field.nx, field.ny);
  const double ihx2 = 1.0 / (field.hx * field.hx);
  const double ihy2 = 1.0 / (field.hy * field.hy);
  parallel_rows(field.ny, [&](std::size_t j) {
    for (std::size_t i = 0; i < field.nx; ++i) {
      if (!field.interior(i, j)) {
        out.at(i, j) = Complex{grid_mask(), grid_mask()};
        continue;
      }
      const Complex fxx =
          (field.at(i + 1, j) - 2.0 * field.at(i, j) + field.at(i - 1, j)) * ihx2;
      const Complex fyy =
          (field.at(i, j + 1) - 2.0 * field.at(i, j) + field.at(i, j - 1)) * ihy2;
      out.at(i, j) = coefficient(field.x(i), field.y(j)) * (fxx + fyy);
    }
  });
  return out;
}

}  // namespace

Grid2D<Complex> laplace_beltrami_disk(const Grid2D<Complex>& field, double clamp) {
  for (std::size_t j = 0; j < field.ny; ++j)
    for (std::size_t i = 0; i < field.nx; ++i)
      if (std::hypot(field.x(i), field.y(j)) > 1.0 - clamp)
        throw std::domain_error("laplace_beltrami_disk: grid node outside the clamped disk");
  return laplacian_5pt(field, [](double xi, double eta) {
    const double w = 1.0 - xi * xi - eta * eta;
    return 0.25 * w * w;
  });
}

Grid2D<Complex> laplace_beltrami_halfplane(const Grid2D<Complex>& field) {
  for (std::size_t j = 0; j < field.ny; ++j)
    if (!(field.y(j) > 0.0))
      throw std::domain_error("laplace_beltrami_halfplane: grid node with y <= 0");
  return laplacian_5pt(field, [](double, double y) { return y * y; });
}

}  // namespace hyperglass
