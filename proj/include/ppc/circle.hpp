#pragma once

#include <cmath>
#include <stdexcept>

#include "ppc/rational.hpp"

namespace ppc {

// Fractional part mapped to [0,1).
inline double frac_unit(double v) {
  double f = v - std::floor(v);
  return f >= 1.0 ? 0.0 : f;
}

// Distance of t to the nearest integer, in [0, 1/2].
inline double torus_norm(double t) { return std::fabs(t - std::nearbyint(t)); }

inline Rational torus_norm(const Rational& t) {
  Rational u = t.mod1();
  Rational c = Rational(1) - u;
  return u <= c ? u : c;
}

// A point of the unit torus with either an exact rational or a float-only
// representation. The float image is always available; the rational form is
// only present when the point was constructed exactly.
class CirclePoint {
 public:
  CirclePoint() = default;

  static CirclePoint exact(const Rational& r) {
    CirclePoint p;
    p.rat_ = r.mod1();
    p.value_ = p.rat_.to_double();
    p.exact_ = true;
    return p;
  }
  static CirclePoint approx(double v) {
    CirclePoint p;
    p.value_ = frac_unit(v);
    return p;
  }

  bool is_exact() const { return exact_; }
  double value() const { return value_; }
  const Rational& rational() const {
    if (!exact_) throw std::logic_error("CirclePoint: no exact representation");
    return rat_;
  }

 private:
  Rational rat_;
  double value_ = 0.0;
  bool exact_ = false;
};

inline double circle_distance(double x, double y) { return torus_norm(x - y); }

inline Rational circle_distance(const Rational& x, const Rational& y) { return torus_norm(x - y); }

// Exact when both points carry rational form, float otherwise.
inline double circle_distance(const CirclePoint& x, const CirclePoint& y) {
  if (x.is_exact() && y.is_exact())
    return circle_distance(x.rational(), y.rational()).to_double();
  return circle_distance(x.value(), y.value());
}

// ||x - y - gamma||
inline double shifted_distance(double x, double y, double gamma) {
  return torus_norm(x - y - gamma);
}

inline Rational shifted_distance(const Rational& x, const Rational& y, const Rational& gamma) {
  return torus_norm(x - y - gamma);
}

inline double shifted_distance(const CirclePoint& x, const CirclePoint& y, double gamma) {
  if (x.is_exact() && y.is_exact())
    return shifted_distance(x.rational(), y.rational(), Rational::from_double(gamma)).to_double();
  return shifted_distance(x.value(), y.value(), gamma);
}

}  // namespace ppc
