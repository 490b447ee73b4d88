#include "hyperglass/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperglass {

double wrap_angle(double a, double period) {
  double w = std::fmod(a, period);
  if (w < 0.0) w += period;
  if (w >= period) w = 0.0;  // fmod rounding at the seam
  return w;
}

HalfPlanePoint make_halfplane(Complex z) { return {z.real(), z.imag()}; }
DiskPoint make_disk(Complex zeta) { return {zeta.real(), zeta.imag()}; }

BoundaryPoint BoundaryPoint::disk_angle(double phi) {
  BoundaryPoint b;
  b.model_ = Model::disk;
  b.value_ = wrap_angle(phi, 2.0 * kPi);
  return b;
}

BoundaryPoint BoundaryPoint::halfplane(double x) {
  BoundaryPoint b;
  b.model_ = Model::halfplane;
  b.value_ = x;
  return b;
}

BoundaryPoint BoundaryPoint::halfplane_infinity() {
  BoundaryPoint b;
  b.model_ = Model::halfplane;
  b.infinite_ = true;
  return b;
}

double BoundaryPoint::angle() const {
  if (model_ != Model::disk) throw std::logic_error("boundary point is not in the disk model");
  return value_;
}

double BoundaryPoint::coordinate() const {
  if (model_ != Model::halfplane) throw std::logic_error("boundary point is not in the half-plane model");
  if (infinite_) throw std::logic_error("boundary point at infinity has no coordinate");
  return value_;
}

Complex BoundaryPoint::unit_complex() const {
  return std::polar(1.0, angle());
}

DiskPoint to_disk(HalfPlanePoint z) {
  if (!(z.y > 0.0)) throw std::domain_error("to_disk: point not in the upper half-plane (y <= 0)");
  const Complex i{0.0, 1.0};
  const Complex zc = z.as_complex();
  return make_disk(i * (zc - i) / (zc + i));
}

HalfPlanePoint to_halfplane(DiskPoint zeta) {
  if (!(zeta.abs() < 1.0)) throw std::domain_error("to_halfplane: point not in the open disk (|zeta| >= 1)");
  const Complex i{0.0, 1.0};
  const Complex zc = zeta.as_complex();
  return make_halfplane(-i * (zc + i) / (zc - i));
}

BoundaryPoint boundary_map(BoundaryPoint b, MapDirection direction) {
  const Complex i{0.0, 1.0};
  if (direction == MapDirection::disk_to_halfplane) {
    if (b.model() != BoundaryPoint::Model::disk)
      throw std::invalid_argument("boundary_map: expected a disk boundary point");
    const double phi = b.angle();
    // e^{i phi} = i maps to infinity.
    if (std::abs(wrap_angle(phi - kPi / 2.0, 2.0 * kPi)) < kEpsAlg ||
        std::abs(wrap_angle(phi - kPi / 2.0, 2.0 * kPi) - 2.0 * kPi) < kEpsAlg)
      return BoundaryPoint::halfplane_infinity();
    const Complex zb = std::polar(1.0, phi);
    const Complex z = -i * (zb + i) / (zb - i);
    return BoundaryPoint::halfplane(z.real());
  }
  if (b.model() != BoundaryPoint::Model::halfplane)
    throw std::invalid_argument("boundary_map: expected a half-plane boundary point");
  if (b.at_infinity()) return BoundaryPoint::disk_angle(kPi / 2.0);
  const Complex zb{b.coordinate(), 0.0};
  const Complex zeta = i * (zb - i) / (zb + i);
  return BoundaryPoint::disk_angle(std::arg(zeta));
}

double SU11Element::constraint_defect() const {
  return std::abs(std::norm(a) - std::norm(c) - 1.0);
}

SU11Element SU11Element::inverse() const {
  // [[a, c], [conj c, conj a]]^{-1} = [[conj a, -c], [-conj c, a]]
  return {std::conj(a), -c};
}

SU11Element operator*(const SU11Element& g, const SU11Element& h) {
  return {g.a * h.a + g.c * std::conj(h.c), g.a * h.c + g.c * std::conj(h.a)};
}

SU11Element su11_rotation(double theta) {
  return {std::polar(1.0, theta / 2.0), Complex{0.0, 0.0}};
}

SU11Element su11_boost(double r) {
  return {Complex{std::cosh(r / 2.0), 0.0}, Complex{std::sinh(r / 2.0), 0.0}};
}

SU11Element su11_translate_to_origin(DiskPoint p) {
  const double n = p.abs();
  if (!(n < 1.0)) throw std::domain_error("su11_translate_to_origin: point not in the open disk");
  const double s = std::sqrt(1.0 - n * n);
  return {Complex{1.0 / s, 0.0}, -p.as_complex() / s};
}

static void require_su11(const SU11Element& g, double eps) {
  if (g.constraint_defect() > eps)
    throw std::invalid_argument("SU(1,1) constraint violated: | |a|^2 - |c|^2 - 1 | = " +
                                std::to_string(g.constraint_defect()));
}

DiskPoint su11_act(const SU11Element& g, DiskPoint zeta, double eps) {
  require_su11(g, eps);
  const Complex z = zeta.as_complex();
  return make_disk((g.a * z + g.c) / (std::conj(g.c) * z + std::conj(g.a)));
}

BoundaryPoint su11_act(const SU11Element& g, const BoundaryPoint& b, double eps) {
  require_su11(g, eps);
  if (b.model() != BoundaryPoint::Model::disk)
    throw std::invalid_argument("su11_act: boundary point must be in the disk model");
  const Complex z = b.unit_complex();
  const Complex w = (g.a * z + g.c) / (std::conj(g.c) * z + std::conj(g.a));
  return BoundaryPoint::disk_angle(std::arg(w));
}

CartanFactors cartan_decompose(const SU11Element& g) {
  require_su11(g, kEpsAlg);
  const double na = std::abs(g.a);
  const double nc = std::abs(g.c);
  // |a| - |c| = 1/(|a| + |c|) exactly on the group, so this form is stable.
  const double r = 2.0 * std::log(na + nc);
  if (nc == 0.0 || r < kEpsAlg) {
    // g in K: return the total rotation angle, r = 0, phi = 0.
    return {wrap_angle(2.0 * std::arg(g.a), 4.0 * kPi), 0.0, 0.0};
  }
  // a = cosh(r/2) e^{i(theta+phi)/2}, c = sinh(r/2) e^{i(theta-phi)/2}
  const double half_sum = std::arg(g.a);
  const double half_diff = std::arg(g.c);
  double theta = half_sum + half_diff;
  double phi = half_sum - half_diff;
  // Shift phi into [0, 2pi); each 2pi shift of phi flips the sign of k_phi,
  // compensated by a 2pi shift of theta.
  while (phi < 0.0) {
    phi += 2.0 * kPi;
    theta += 2.0 * kPi;
  }
  while (phi >= 2.0 * kPi) {
    phi -= 2.0 * kPi;
    theta -= 2.0 * kPi;
  }
  theta = wrap_angle(theta, 4.0 * kPi);
  return {theta, r, phi};
}

SU11Element su11_from_cartan(const CartanFactors& f) {
  return su11_rotation(f.theta) * su11_boost(f.r) * su11_rotation(f.phi);
}

double dist(DiskPoint p, DiskPoint q) {
  if (!(p.abs() < 1.0) || !(q.abs() < 1.0))
    throw std::domain_error("dist: points must lie in the open disk");
  const SU11Element g = su11_translate_to_origin(p);
  const double t = su11_act(g, q).abs();
  return std::log((1.0 + t) / (1.0 - t));
}

double dist(HalfPlanePoint p, HalfPlanePoint q) {
  return dist(to_disk(p), to_disk(q));
}

Geodesic geodesic_through(HalfPlanePoint p, HalfPlanePoint q, double eps) {
  if (!(p.y > 0.0) || !(q.y > 0.0))
    throw std::domain_error("geodesic_through: points must have y > 0");
  if (std::abs(p.x - q.x) <= eps && std::abs(p.y - q.y) <= eps)
    throw std::invalid_argument("geodesic_through: coincident points");
  Geodesic g;
  if (std::abs(p.x - q.x) <= eps) {
    g.kind = Geodesic::Kind::halfplane_vertical;
    g.x0 = p.x;
    g.b0 = BoundaryPoint::halfplane(p.x);
    g.b1 = BoundaryPoint::halfplane_infinity();
    return g;
  }
  const double np = p.x * p.x + p.y * p.y;
  const double nq = q.x * q.x + q.y * q.y;
  g.kind = Geodesic::Kind::halfplane_circle;
  g.x0 = (nq - np) / (2.0 * (q.x - p.x));
  g.radius = std::hypot(p.x - g.x0, p.y);
  g.b0 = BoundaryPoint::halfplane(g.x0 - g.radius);
  g.b1 = BoundaryPoint::halfplane(g.x0 + g.radius);
  return g;
}

Geodesic geodesic_through(DiskPoint p, DiskPoint q, double eps) {
  const Geodesic gu = geodesic_through(to_halfplane(p), to_halfplane(q), eps);
  Geodesic g;
  g.kind = Geodesic::Kind::disk_arc;
  g.b0 = boundary_map(gu.b0, MapDirection::halfplane_to_disk);
  g.b1 = boundary_map(gu.b1, MapDirection::halfplane_to_disk);
  return g;
}

double geodesic_locus_distance(const Geodesic& g, HalfPlanePoint p) {
  switch (g.kind) {
    case Geodesic::Kind::halfplane_vertical:
      return std::abs(p.x - g.x0);
    case Geodesic::Kind::halfplane_circle:
      return std::abs(std::hypot(p.x - g.x0, p.y) - g.radius);
    default:
      throw std::invalid_argument("geodesic_locus_distance: half-plane geodesic required");
  }
}

Horocycle horocycle_through(DiskPoint zeta, BoundaryPoint b) {
  return horocycle_levelset(b, horodistance(zeta, b));
}

Horocycle horocycle_levelset(BoundaryPoint b, double level) {
  if (b.model() != BoundaryPoint::Model::disk)
    throw std::invalid_argument("horocycle_levelset: disk boundary point required");
  const double p = std::exp(level);
  Horocycle h;
  h.normal = b;
  h.radius = 1.0 / (1.0 + p);
  const Complex c = (1.0 - h.radius) * b.unit_complex();
  h.center = {c.real(), c.imag()};
  return h;
}

Horocycle horocycle_through_halfplane(HalfPlanePoint z, BoundaryPoint b) {
  if (b.model() != BoundaryPoint::Model::halfplane)
    throw std::invalid_argument("horocycle_through_halfplane: half-plane boundary point required");
  if (!(z.y > 0.0)) throw std::domain_error("horocycle_through_halfplane: y <= 0");
  Horocycle h;
  h.normal = b;
  if (b.at_infinity()) {
    h.is_line = true;
    h.line_y = z.y;
    return h;
  }
  const double t = b.coordinate();
  h.radius = ((z.x - t) * (z.x - t) + z.y * z.y) / (2.0 * z.y);
  h.center = {t, h.radius};
  return h;
}

Vec2 horocycle_point(const Horocycle& h, double t) {
  if (h.is_line) throw std::invalid_argument("horocycle_point: line horocycle has no angle parameter");
  return {h.center.x + h.radius * std::cos(t), h.center.y + h.radius * std::sin(t)};
}

double horodistance(DiskPoint zeta, BoundaryPoint b) {
  if (b.model() != BoundaryPoint::Model::disk)
    throw std::invalid_argument("horodistance: disk boundary point required");
  const double n = zeta.abs();
  if (n > 1.0 - kBoundaryClamp)
    throw std::domain_error("horodistance: |zeta| too close to the boundary (divergent)");
  const Complex d = b.unit_complex() - zeta.as_complex();
  return std::log((1.0 - n) * (1.0 + n)) - std::log(std::norm(d));
}

Complex Mobius::apply(Complex z) const { return (a * z + b) / (c * z + d); }

Complex Mobius::derivative(Complex z) const {
  const Complex den = c * z + d;
  return (a * d - b * c) / (den * den);
}

Mobius Mobius::inverse() const {
  const double det = a * d - b * c;
  return {d / det, -b / det, -c / det, a / det};
}

Mobius Mobius::normalized() const {
  const double det = a * d - b * c;
  if (!(det > 0.0)) throw std::domain_error("Mobius::normalized: determinant must be positive");
  const double s = std::sqrt(det);
  return {a / s, b / s, c / s, d / s};
}

Mobius operator*(const Mobius& m, const Mobius& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

}  // namespace hyperglass
