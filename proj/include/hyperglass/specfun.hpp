#pragma once

#include "hyperglass/geometry.hpp"
#include "hyperglass/grid.hpp"

namespace hyperglass {

/// Spectral/amplitude data of a horocyclic wave psi = A e^{nu <zeta,b>}.
/// The spectral form has nu = 1/2 - i lambda; the amplitude constant is not
/// fixed by the theory and defaults to 1.
struct WaveParams {
  Complex nu{0.5, 0.0};
  Complex amplitude{1.0, 0.0};

  static WaveParams spectral(double lambda, Complex amplitude = {1.0, 0.0});
  static WaveParams general(Complex nu, Complex amplitude = {1.0, 0.0});

  bool spectral_form(double eps = kEpsAlg) const;
  double lambda() const;  // spectral form only
};

/// One sampled value of the geometric wave, split into amplitude and phase
/// (value = amplitude * e^{i phase}).
struct FieldSample {
  Complex value{};
  double amplitude = 0.0;
  double phase = 0.0;
};

/// P(zeta,b) = (1-|zeta|^2) / (1+|zeta|^2-2|zeta|cos(theta-phi)) > 0.
/// Constant on each horocycle of normal b. Throws past the boundary clamp.
double poisson_kernel(DiskPoint zeta, BoundaryPoint b, double clamp = kBoundaryClamp);

/// e^{nu <zeta,b>} = P(zeta,b)^nu with the real logarithm of the positive
/// kernel; no branch ambiguity arises.
Complex horocyclic_wave(DiskPoint zeta, BoundaryPoint b, const WaveParams& params,
                        double clamp = kBoundaryClamp);

/// psi = A e^{nu <zeta,b>} with the amplitude/phase split.
FieldSample field_sample(DiskPoint zeta, BoundaryPoint b, const WaveParams& params,
                         double clamp = kBoundaryClamp);

struct QuadratureOptions {
  int start_nodes = 64;
  int max_nodes = 1 << 16;
  double abs_tol = 1e-13;
  double rel_tol = 1e-13;
};

struct QuadratureResult {
  Complex value{};
  bool converged = false;
  int nodes = 0;
};

/// Legendre/conical function by its boundary-average representation:
/// P_{-nu}(cosh r) = (1/2pi) Int_0^{2pi} (cosh r + sinh r cos phi)^{-nu} dphi,
/// computed by node-doubling trapezoid quadrature (spectrally accurate on the
/// periodic integrand). The convergence flag reports whether successive
/// doublings agreed within tolerance.
QuadratureResult conical_function(Complex nu, double r, const QuadratureOptions& opts = {});

/// |P_{-1/2+i lambda}(cosh r) - P_{-1/2-i lambda}(cosh r)|.
double conical_symmetry_check(double lambda, double r, const QuadratureOptions& opts = {});

/// Spherical function on SU(1,1)/SO(2) by boundary quadrature of
/// P(g.0, b)^nu; equals conical_function(nu, r) with r from the Cartan
/// decomposition of g.
QuadratureResult spherical_function(const SU11Element& g, Complex nu,
                                    const QuadratureOptions& opts = {});

/// Laplace-Beltrami operator of the disk model,
/// (1/4)(1 - xi^2 - eta^2)^2 (d^2/dxi^2 + d^2/deta^2), by 5-point central
/// differences. The input grid must lie strictly inside the clamped disk;
/// the output ring whose stencil leaves the grid is masked with NaN.
Grid2D<Complex> laplace_beltrami_disk(const Grid2D<Complex>& field,
                                      double clamp = kBoundaryClamp);

/// Half-plane counterpart, y^2 (d^2/dx^2 + d^2/dy^2); grid strictly in y > 0.
Grid2D<Complex> laplace_beltrami_halfplane(const Grid2D<Complex>& field);

}  // namespace hyperglass
