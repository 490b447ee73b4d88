#pragma once

#include <vector>

#include "hyperglass/geometry.hpp"
#include "hyperglass/grid.hpp"

namespace hyperglass {

/// Canonical state of the geodesic flow for H = y^2 (px^2 + py^2) / 2.
/// Unit-speed trajectories have H = 1/2, which makes the flow parameter the
/// hyperbolic arclength; px is conserved (x-translation symmetry).
struct RayState {
  double x = 0.0;
  double y = 1.0;
  double px = 0.0;
  double py = 0.0;

  double hamiltonian() const { return 0.5 * y * y * (px * px + py * py); }
  /// Momenta rescaled so that H = 1/2.
  RayState unit_speed() const;
};

struct RaySample {
  double s = 0.0;
  double x = 0.0;
  double y = 0.0;
  double px = 0.0;
  double py = 0.0;
};

struct TraceResult {
  std::vector<RaySample> samples;
  bool truncated = false;   // boundary-approach truncation (y hit the floor)
  double h_drift = 0.0;     // max |H - 1/2| along the trace
  double px_drift = 0.0;    // max |px(s) - px(0)|
};

struct TraceOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_sample_ds = 0.1;  // step cap, which is also the sampling density
  double y_floor = 1e-12;      // stop (truncated) when y drops below this
};

/// Integrates the canonical equations
///   x' = y^2 px,  y' = y^2 py,  px' = 0,  py' = -y (px^2 + py^2)
/// with an adaptive Dormand-Prince 5(4) pair from s = 0 to s_max.
TraceResult trace_geodesic(RayState start, double s_max, const TraceOptions& opts = {});

/// Euler-Lagrange residual y y'' + y'^2 + 1; zero on extremals.
double el_residual(double y, double yp, double ypp);

/// Weierstrass excess F_{y'y'} = 1 / (y (1 + y'^2)^{3/2}), positive for y > 0.
double weierstrass_check(double y, double yp);

enum class NonPhysicalReason : int { none = 0, radius_exceeds_bound, vertical };

struct PhysicalRayCheck {
  bool physical = false;
  NonPhysicalReason reason = NonPhysicalReason::none;
};

/// A ray is physical when it is a half-circle of radius R <= 1: the index
/// n = 1/y >= 1 confines rays to the strip 0 < y <= 1. Vertical lines leave
/// the strip except by truncation and are flagged with their own reason.
PhysicalRayCheck is_physical_ray(const Geodesic& g);

/// Polygonal path in the half-plane with fixed endpoints.
struct PolyPath {
  std::vector<HalfPlanePoint> vertices;
};

/// Discrete Jacobi functional: sum over segments of the hyperbolic length
/// Int sqrt(dx^2+dy^2)/y, each segment integrated by 8-node Gauss-Legendre
/// along the straight Euclidean chord.
double jacobi_length(const PolyPath& path);

struct MinimizeOptions {
  double grad_tol = 1e-10;
  int max_iterations = 4000;
};

struct MinimizeResult {
  PolyPath path;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
  std::vector<double> history;  // functional value per accepted iteration
};

/// Minimizes the discrete Jacobi functional over the interior vertices,
/// starting from the straight Euclidean chord (L-BFGS with backtracking).
/// Non-convergence is reported through the flag, never masked.
MinimizeResult minimize_jacobi(HalfPlanePoint p0, HalfPlanePoint p1, int n_interior,
                               const MinimizeOptions& opts = {});

enum class EikonalModel : int { disk, halfplane, beltrami_uv };

/// g^{ij} dPhi_i dPhi_j - 1 by central differences; the ring whose stencil
/// leaves the grid is masked with NaN.
Grid2D<double> eikonal_residual(const Grid2D<double>& phase, EikonalModel model);

/// Leading-order geometric wave in Beltrami coordinates:
/// psi_pm = C e^{u/2} e^{-+ i lambda u} (sign = +1 picks e^{-i lambda u}).
/// The transported flux |psi|^2 sqrt(g) = |C|^2 with sqrt(g) = e^{-u}.
Complex transport_amplitude(double u, int sign, double lambda, Complex c);

/// Unit tangent vector of the half-plane (hyperbolic norm 1, i.e. Euclidean
/// norm equal to y).
struct UnitTangent {
  HalfPlanePoint base;
  double dx = 0.0;
  double dy = 0.0;
};

/// Inward normal of the horocycle of normal b through z (the initial
/// direction of the geodesic from z into the horoball, toward b).
UnitTangent horocycle_inward_normal(HalfPlanePoint z, BoundaryPoint b);

/// Horocycle flow: slides the inward normal along its horocycle by
/// hyperbolic arclength j. For b at infinity this is the parabolic
/// translation; a general b is handled by conjugating with a Moebius map
/// taking the horocycle to a horizontal line. Rejects tangents that are not
/// the inward normal of the stated horocycle.
UnitTangent horocycle_flow(const UnitTangent& v, BoundaryPoint b, double j,
                           double eps = kEpsGeo);

struct RayBundleReport {
  std::size_t ray_count = 0;
  double entry_flux = 0.0;
  double exit_flux = 0.0;
  Horocycle horocycle;
};

struct BundleOptions {
  double depth = 1.0;    // hyperbolic offset of the inner comparison front
  double eps = 1e-9;     // verification tolerance for crossings
};

/// Counts verified transversal, orthogonal crossings of a ray bundle through
/// the horocycle h (entry) and through the horocycle one `depth` deeper
/// toward the normal point (exit). Every complete geodesic normal to h
/// crosses each front exactly once, so entry = exit = ray count. Rays that
/// are not perpendicular to h (no ideal endpoint at h's normal) are rejected.
RayBundleReport bundle_flux_report(const Horocycle& h, const std::vector<Geodesic>& rays,
                                   const BundleOptions& opts = {});

}  // namespace hyperglass
