#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <string>

namespace hyperglass {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

// Algebraic identities (group constraints, round trips) are held to eps_alg;
// geometric classifications (vertical vs. circular) use the looser eps_geo.
inline constexpr double kEpsAlg = 1e-12;
inline constexpr double kEpsGeo = 1e-9;

// Points with |zeta| > 1 - kBoundaryClamp count as divergent for the kernel
// evaluations; the physics lives strictly inside the disk.
inline constexpr double kBoundaryClamp = 1e-6;

// Reduce an angle into [0, period).
double wrap_angle(double a, double period);

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Point z = x + iy of the upper half-plane model U (y > 0).
struct HalfPlanePoint {
  double x = 0.0;
  double y = 0.0;
  Complex as_complex() const { return {x, y}; }
};

/// Point zeta = xi + i eta of the unit-disk model D (|zeta| < 1).
struct DiskPoint {
  double xi = 0.0;
  double eta = 0.0;
  Complex as_complex() const { return {xi, eta}; }
  double abs() const { return std::abs(as_complex()); }
};

HalfPlanePoint make_halfplane(Complex z);
DiskPoint make_disk(Complex zeta);

/// Ideal boundary point of either model. The half-plane boundary has a
/// genuine point at infinity, kept as a flag rather than a float sentinel.
class BoundaryPoint {
 public:
  enum class Model : std::uint8_t { disk, halfplane };

  BoundaryPoint() = default;  // halfplane b = 0

  static BoundaryPoint disk_angle(double phi);
  static BoundaryPoint halfplane(double b);
  static BoundaryPoint halfplane_infinity();

  Model model() const { return model_; }
  bool at_infinity() const { return infinite_; }
  double angle() const;       // disk model, in [0, 2pi)
  double coordinate() const;  // half-plane model, finite case
  Complex unit_complex() const;  // disk model: e^{i phi}

 private:
  Model model_ = Model::halfplane;
  double value_ = 0.0;
  bool infinite_ = false;
};

enum class MapDirection : std::uint8_t { halfplane_to_disk, disk_to_halfplane };

/// zeta = i (z - i) / (z + i). Rejects y <= 0.
DiskPoint to_disk(HalfPlanePoint z);

/// z = -i (zeta + i) / (zeta - i). Rejects |zeta| >= 1.
HalfPlanePoint to_halfplane(DiskPoint zeta);

/// Continuous extension of the conformal maps to the ideal boundary.
/// Disk angle pi/2 (the point i) corresponds to the half-plane infinity.
BoundaryPoint boundary_map(BoundaryPoint b, MapDirection direction);

/// Isometry of the disk: zeta -> (a zeta + c) / (conj(c) zeta + conj(a))
/// with |a|^2 - |c|^2 = 1.
struct SU11Element {
  Complex a{1.0, 0.0};
  Complex c{0.0, 0.0};

  double constraint_defect() const;  // | |a|^2 - |c|^2 - 1 |
  SU11Element inverse() const;
};

SU11Element operator*(const SU11Element& g, const SU11Element& h);

SU11Element su11_rotation(double theta);  // k_theta
SU11Element su11_boost(double r);         // a_r
/// Element sending p to the disk origin.
SU11Element su11_translate_to_origin(DiskPoint p);

DiskPoint su11_act(const SU11Element& g, DiskPoint zeta, double eps = kEpsAlg);
/// Boundary action of g (disk boundary to itself).
BoundaryPoint su11_act(const SU11Element& g, const BoundaryPoint& b,
                       double eps = kEpsAlg);

/// g = k_theta a_r k_phi with r >= 0, theta in [0,4pi), phi in [0,2pi).
/// For g in K (r = 0) the decomposition is not unique; the convention here
/// returns (theta_total, 0, 0).
struct CartanFactors {
  double theta = 0.0;
  double r = 0.0;
  double phi = 0.0;
};

CartanFactors cartan_decompose(const SU11Element& g);
SU11Element su11_from_cartan(const CartanFactors& f);

/// Hyperbolic distance. The general case reduces to Eq.-style
/// d(0, zeta) = ln[(1+|zeta|)/(1-|zeta|)] by moving p to the origin with an
/// explicit SU(1,1) element.
double dist(DiskPoint p, DiskPoint q);
double dist(HalfPlanePoint p, HalfPlanePoint q);

/// Extremal curve of the hyperbolic metric. In the half-plane these are
/// Euclidean half-circles centered on the x axis or vertical lines; the disk
/// representation stores only the ideal endpoints (no special case there).
struct Geodesic {
  enum class Kind : std::uint8_t { halfplane_circle, halfplane_vertical, disk_arc };
  Kind kind = Kind::halfplane_vertical;
  double x0 = 0.0;      // circle center abscissa, or the vertical abscissa
  double radius = 0.0;  // halfplane_circle only, > 0
  BoundaryPoint b0, b1;  // ideal endpoints (b1 = infinity for verticals)
};

Geodesic geodesic_through(HalfPlanePoint p, HalfPlanePoint q, double eps = kEpsGeo);
Geodesic geodesic_through(DiskPoint p, DiskPoint q, double eps = kEpsGeo);

/// Euclidean distance from a point to the locus of a half-plane geodesic.
double geodesic_locus_distance(const Geodesic& g, HalfPlanePoint p);

/// Constant-phase front: Euclidean circle internally tangent to the unit
/// circle at its normal point (disk model) or tangent to the x axis
/// (half-plane model); the half-plane horocycle of normal infinity is a
/// horizontal line y = line_y.
struct Horocycle {
  BoundaryPoint normal;
  bool is_line = false;
  double line_y = 0.0;
  Vec2 center{};
  double radius = 0.0;
};

/// Disk-model horocycle through zeta with normal b; equals the level set
/// {P(.,b) = P(zeta,b)}.
Horocycle horocycle_through(DiskPoint zeta, BoundaryPoint b);
/// Disk-model horocycle at horocyclic distance `level` from the origin,
/// i.e. the level set {<.,b> = level}.
Horocycle horocycle_levelset(BoundaryPoint b, double level);
/// Half-plane horocycle through z with normal b.
Horocycle horocycle_through_halfplane(HalfPlanePoint z, BoundaryPoint b);

/// Point on a circle-type horocycle at parameter angle t.
Vec2 horocycle_point(const Horocycle& h, double t);

/// Signed horocyclic distance <zeta,b> = ln P(zeta,b): positive when the
/// origin lies outside the horocycle through zeta, negative when inside.
double horodistance(DiskPoint zeta, BoundaryPoint b);

/// Real Moebius transform of the upper half-plane (2x2 real matrix acting as
/// z -> (az+b)/(cz+d), det > 0).
struct Mobius {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  Complex apply(Complex z) const;
  Complex derivative(Complex z) const;
  Mobius inverse() const;
  Mobius normalized() const;  // scaled to det = 1
};

Mobius operator*(const Mobius& m, const Mobius& n);

}  // namespace hyperglass
