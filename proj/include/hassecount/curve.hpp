#pragma once

// Elliptic curves in long Weierstrass form
//   y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
// over any F_q, with the chord-tangent group law, point sampling,
// exhaustive counting and the quadratic twist.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hassecount/field.hpp"

namespace hassecount {

struct Point {
  Element x{}, y{};
  bool infinity = true;

  static Point at_infinity() { return {}; }
  static Point affine(Element x, Element y) { return {x, y, false}; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

using Coefficients = std::array<Element, 5>;  // a1, a2, a3, a4, a6

class Curve {
 public:
  // Largest q accepted by the enumeration routines.
  static constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 20;

  // Throws SingularCurve when the discriminant vanishes.
  static Curve make(FieldPtr field, const Coefficients& a);
  // Checked: throws InvalidEncoding for encodings outside [0, q).
  static Curve from_encodings(FieldPtr field, const std::array<std::uint64_t, 5>& encodings);
  // nullopt for singular coefficient vectors.
  static std::optional<Curve> try_make(FieldPtr field, const Coefficients& a);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Coefficients& coefficients() const { return a_; }
  Element a1() const { return a_[0]; }
  Element a2() const { return a_[1]; }
  Element a3() const { return a_[2]; }
  Element a4() const { return a_[3]; }
  Element a6() const { return a_[4]; }
  Element discriminant() const { return disc_; }
  std::array<Element, 4> b_invariants() const { return b_; }

  bool contains(const Point& p) const;

  // Group law. Arguments are assumed to lie on the curve; the free
  // functions below check membership first.
  Point negate(const Point& p) const;
  Point add(const Point& p, const Point& q) const;
  Point dbl(const Point& p) const { return add(p, p); }
  // Double-and-add; n < 0 negates. If ops is given it is incremented by the
  // number of group additions/doublings performed.
  Point multiply(std::int64_t n, const Point& p, std::uint64_t* ops = nullptr) const;

  // Number of y with (x, y) on the curve: 0, 1 or 2.
  unsigned points_over(Element x) const;
  // The affine points with the given x, smaller y encoding first.
  std::vector<Point> points_at(Element x) const;

  // Uniform x, then one of the roots at random. Returns infinity only when
  // the curve has no affine points.
  Point random_point(Rng& rng) const;

  // All points, infinity first then by x. Requires q <= kEnumerationLimit.
  std::vector<Point> enumerate_points() const;
  // #E(F_q) via per-x root counting. Requires q <= kEnumerationLimit.
  std::uint64_t count_exhaustive() const;

  // A curve whose group order is 2(q+1) - #E.
  Curve quadratic_twist() const;

  friend bool operator==(const Curve& a, const Curve& b) {
    return a.field_ == b.field_ && a.a_ == b.a_;
  }

 private:
  struct Invariants {
    std::array<Element, 4> b;
    Element disc;
  };
  static Invariants invariants(const Field& f, const Coefficients& a);
  Curve(FieldPtr field, const Coefficients& a, const Invariants& inv);

  FieldPtr field_;
  Coefficients a_;
  std::array<Element, 4> b_;
  Element disc_;
  Element two_inv_{};  // odd characteristic only
  Element four_{};
};

// Checked group-law entry points: throw PointNotOnCurve.
Point add_points(const Curve& e, const Point& p, const Point& q);
Point negate(const Curve& e, const Point& p);
Point scalar_mul(const Curve& e, std::int64_t n, const Point& p);

}  // namespace hassecount
