#include "hassecount/curve.hpp"

#include <algorithm>
#include <string>

namespace hassecount {

Curve Curve::make(FieldPtr field, const Coefficients& a) {
  for (auto c : a) {
    if (c.enc >= field->order()) fail(ErrorCode::invalid_encoding, "coefficient outside the field");
  }
  const Invariants inv = invariants(*field, a);
  if (inv.disc.enc == 0) fail(ErrorCode::singular_curve, "discriminant is zero");
  return Curve(std::move(field), a, inv);
}

Curve Curve::from_encodings(FieldPtr field, const std::array<std::uint64_t, 5>& encodings) {
  Coefficients a;
  for (std::size_t i = 0; i < 5; ++i) a[i] = field->element(encodings[i]);
  return make(std::move(field), a);
}

std::optional<Curve> Curve::try_make(FieldPtr field, const Coefficients& a) {
  const Invariants inv = invariants(*field, a);
  if (inv.disc.enc == 0) return std::nullopt;
  return Curve(std::move(field), a, inv);
}

Curve::Invariants Curve::invariants(const Field& f, const Coefficients& a) {
  auto [a1, a2, a3, a4, a6] = a;
  const Element two = f.from_int(2), four = f.from_int(4);
  const Element b2 = f.add(f.sqr(a1), f.mul(four, a2));
  const Element b4 = f.add(f.mul(two, a4), f.mul(a1, a3));
  const Element b6 = f.add(f.sqr(a3), f.mul(four, a6));
  Element b8 = f.add(f.mul(f.sqr(a1), a6), f.mul(four, f.mul(a2, a6)));
  b8 = f.sub(b8, f.mul(a1, f.mul(a3, a4)));
  b8 = f.add(b8, f.mul(a2, f.sqr(a3)));
  b8 = f.sub(b8, f.sqr(a4));

  // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
  Element d = f.neg(f.mul(f.sqr(b2), b8));
  d = f.sub(d, f.mul(f.from_int(8), f.mul(b4, f.sqr(b4))));
  d = f.sub(d, f.mul(f.from_int(27), f.sqr(b6)));
  d = f.add(d, f.mul(f.from_int(9), f.mul(b2, f.mul(b4, b6))));
  return {{b2, b4, b6, b8}, d};
}

Curve::Curve(FieldPtr field, const Coefficients& a, const Invariants& inv)
    : field_(std::move(field)), a_(a), b_(inv.b), disc_(inv.disc) {
  const Field& f = *field_;
  if (f.characteristic() != 2) {
    two_inv_ = f.inv(f.from_int(2));
    four_ = f.from_int(4);
  }
}

bool Curve::contains(const Point& p) const {
  if (p.infinity) return true;
  const Field& f = *field_;
  if (p.x.enc >= f.order() || p.y.enc >= f.order()) return false;
  auto [a1, a2, a3, a4, a6] = a_;
  Element lhs = f.mul(p.y, f.add(p.y, f.add(f.mul(a1, p.x), a3)));
  Element rhs = f.add(f.mul(f.add(f.mul(f.add(p.x, a2), p.x), a4), p.x), a6);
  return lhs == rhs;
}

Point Curve::negate(const Point& p) const {
  if (p.infinity) return p;
  const Field& f = *field_;
  return Point::affine(p.x, f.sub(f.neg(p.y), f.add(f.mul(a1(), p.x), a3())));
}

Point Curve::add(const Point& p, const Point& q) const {
  if (p.infinity) return q;
  if (q.infinity) return p;
  const Field& f = *field_;
  auto [a1, a2, a3, a4, a6] = a_;
  Element slope;
  if (p.x == q.x) {
    if (q.y == negate(p).y) return Point::at_infinity();
    // Tangent: (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3)
    Element num = f.add(f.mul(f.from_int(3), f.sqr(p.x)), f.mul(f.from_int(2), f.mul(a2, p.x)));
    num = f.sub(f.add(num, a4), f.mul(a1, p.y));
    Element den = f.add(f.add(f.add(p.y, p.y), f.mul(a1, p.x)), a3);
    slope = f.div(num, den);
  } else {
    slope = f.div(f.sub(q.y, p.y), f.sub(q.x, p.x));
  }
  Element x3 = f.sub(f.sub(f.sub(f.add(f.sqr(slope), f.mul(a1, slope)), a2), p.x), q.x);
  Element y3 = f.neg(f.add(f.mul(slope, f.sub(x3, p.x)), p.y));
  y3 = f.sub(y3, f.add(f.mul(a1, x3), a3));
  return Point::affine(x3, y3);
}

Point Curve::multiply(std::int64_t n, const Point& p, std::uint64_t* ops) const {
  if (n == 0 || p.infinity) return Point::at_infinity();
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  const Point base = n < 0 ? negate(p) : p;
  Point r = Point::at_infinity();
  std::uint64_t count = 0;
  for (int bit = 63; bit >= 0; --bit) {
    if (!r.infinity) {
      r = dbl(r);
      ++count;
    }
    if ((m >> bit) & 1u) {
      if (!r.infinity) ++count;
      r = add(r, base);
    }
  }
  if (ops) *ops += count;
  return r;
}

unsigned Curve::points_over(Element x) const {
  const Field& f = *field_;
  auto [a1, a2, a3, a4, a6] = a_;
  const Element h = f.add(f.mul(a1, x), a3);
  const Element rhs = f.add(f.mul(f.add(f.mul(f.add(x, a2), x), a4), x), a6);
  if (f.characteristic() == 2) {
    if (h.enc == 0) return 1;
    const Element c = f.div(rhs, f.sqr(h));
    return f.absolute_trace(c).enc == 0 ? 2 : 0;
  }
  const Element disc = f.add(f.sqr(h), f.mul(four_, rhs));
  if (disc.enc == 0) return 1;
  return f.is_square(disc) ? 2 : 0;
}

std::vector<Point> Curve::points_at(Element x) const {
  const Field& f = *field_;
  auto [a1, a2, a3, a4, a6] = a_;
  const Element h = f.add(f.mul(a1, x), a3);
  const Element rhs = f.add(f.mul(f.add(f.mul(f.add(x, a2), x), a4), x), a6);
  std::vector<Point> out;
  if (f.characteristic() == 2) {
    if (h.enc == 0) {
      out.push_back(Point::affine(x, f.sqrt(rhs)));
      return out;
    }
    auto z = f.artin_schreier_root(f.div(rhs, f.sqr(h)));
    if (!z) return out;
    Element y1 = f.mul(h, *z);
    Element y2 = f.add(y1, h);
    out.push_back(Point::affine(x, std::min(y1, y2)));
    out.push_back(Point::affine(x, std::max(y1, y2)));
    return out;
  }
  const Element disc = f.add(f.sqr(h), f.mul(four_, rhs));
  if (!f.is_square(disc)) return out;
  const Element s = f.sqrt(disc);
  const Element y1 = f.mul(f.sub(s, h), two_inv_);
  if (s.enc == 0) {
    out.push_back(Point::affine(x, y1));
    return out;
  }
  const Element y2 = f.mul(f.sub(f.neg(s), h), two_inv_);
  out.push_back(Point::affine(x, std::min(y1, y2)));
  out.push_back(Point::affine(x, std::max(y1, y2)));
  return out;
}

Point Curve::random_point(Rng& rng) const {
  const Field& f = *field_;
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto pts = points_at(f.random_element(rng));
    if (pts.empty()) continue;
    return pts.size() == 1 ? pts[0] : pts[rng() & 1u];
  }
  // Only tiny curves get here; scan from a random offset.
  const std::uint64_t q = f.order();
  const std::uint64_t start = rng() % q;
  for (std::uint64_t i = 0; i < q; ++i) {
    auto pts = points_at(Element{static_cast<std::uint32_t>((start + i) % q)});
    if (!pts.empty()) return pts.front();
  }
  return Point::at_infinity();
}

std::vector<Point> Curve::enumerate_points() const {
  const std::uint64_t q = field_->order();
  if (q > kEnumerationLimit) {
    fail(ErrorCode::field_too_large, "enumeration requires q <= 2^20");
  }
  std::vector<Point> out{Point::at_infinity()};
  for (std::uint64_t x = 0; x < q; ++x) {
    auto pts = points_at(Element{static_cast<std::uint32_t>(x)});
    out.insert(out.end(), pts.begin(), pts.end());
  }
  return out;
}

std::uint64_t Curve::count_exhaustive() const {
  const std::uint64_t q = field_->order();
  if (q > kEnumerationLimit) {
    fail(ErrorCode::field_too_large, "enumeration requires q <= 2^20");
  }
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < q; ++x) n += points_over(Element{static_cast<std::uint32_t>(x)});
  return n;
}

Curve Curve::quadratic_twist() const {
  const Field& f = *field_;
  const Element d = f.twisting_constant();
  auto [a1, a2, a3, a4, a6] = a_;
  if (f.characteristic() == 2) {
    // y -> y + delta (a1 x + a3) with delta^2 + delta = d over F_{q^2}.
    return make(field_, {a1, f.add(a2, f.mul(d, f.sqr(a1))), a3, a4,
                         f.add(a6, f.mul(d, f.sqr(a3)))});
  }
  // Complete the square: y^2 = x^3 + (b2/4) x^2 + (b4/2) x + b6/4, then
  // scale by the non-square d.
  const Element quarter = f.sqr(two_inv_);
  const Element A = f.mul(b_[0], quarter);
  const Element B = f.mul(b_[1], two_inv_);
  const Element C = f.mul(b_[2], quarter);
  const Element d2 = f.sqr(d);
  return make(field_, {f.zero(), f.mul(d, A), f.zero(), f.mul(d2, B), f.mul(f.mul(d2, d), C)});
}

namespace {

void require_on_curve(const Curve& e, const Point& p) {
  if (!e.contains(p)) fail(ErrorCode::point_not_on_curve, "point is not on the curve");
}

}  // namespace

Point add_points(const Curve& e, const Point& p, const Point& q) {
  require_on_curve(e, p);
  require_on_curve(e, q);
  return e.add(p, q);
}

Point negate(const Curve& e, const Point& p) {
  require_on_curve(e, p);
  return e.negate(p);
}

Point scalar_mul(const Curve& e, std::int64_t n, const Point& p) {
  require_on_curve(e, p);
  return e.multiply(n, p);
}

}  // namespace hassecount
