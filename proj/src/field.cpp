#include "hassecount/field.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <string>

#include "hassecount/arith.hpp"

namespace hassecount {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Dense polynomials over F_p, lowest degree first, used only while choosing
// and validating the modulus.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
  auto eg = extended_gcd(static_cast<std::int64_t>(a), static_cast<std::int64_t>(p));
  return static_cast<std::uint64_t>(mod_floor(eg.x, static_cast<std::int64_t>(p)));
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod_p(f.back(), p);
  while (a.size() > df) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const std::vector<std::uint32_t>& modulus, std::uint64_t p) {
  const unsigned k = static_cast<unsigned>(modulus.size() - 1);
  if (k == 1) return true;
  Poly f(modulus.begin(), modulus.end());
  Poly h{0, 1};
  for (unsigned i = 1; i <= k / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly d = h;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    Poly g = poly_gcd(f, d, p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint64_t p, unsigned k) {
  if (k == 1) return {0, 1};
  const std::uint64_t q = ipow(p, k);
  std::vector<std::uint32_t> f(k + 1, 0);
  f[k] = 1;
  for (std::uint64_t low = 0; low < q; ++low) {
    std::uint64_t v = low;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (f[0] != 0 && is_irreducible(f, p)) return f;
  }
  fail(ErrorCode::internal, "no irreducible polynomial found");
}

}  // namespace

FieldPtr Field::make(std::uint64_t p, unsigned k,
                     std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) fail(ErrorCode::not_prime, std::to_string(p) + " is not prime");
  if (k == 0) fail(ErrorCode::invalid_encoding, "extension degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q >= (std::uint64_t{1} << 32)) {
      fail(ErrorCode::field_too_large, "field order must be below 2^32");
    }
  }
  std::vector<std::uint32_t> f;
  if (modulus) {
    f = *modulus;
    if (f.size() != k + 1 || f.back() != 1) {
      fail(ErrorCode::invalid_encoding, "modulus must be monic of degree k");
    }
    for (auto c : f) {
      if (c >= p) fail(ErrorCode::invalid_encoding, "modulus coefficient out of range");
    }
    if (k > 1 && !is_irreducible(f, p)) {
      fail(ErrorCode::reducible_polynomial, "modulus is reducible over F_p");
    }
  } else {
    f = default_modulus(p, k);
  }
  return FieldPtr(new Field(static_cast<std::uint32_t>(p), k, std::move(f)));
}

FieldPtr Field::from_order(std::uint64_t q, std::optional<std::uint64_t> modulus_encoding) {
  auto pk = as_prime_power(q);
  if (!pk) fail(ErrorCode::not_prime_power, std::to_string(q) + " is not a prime power");
  if (!modulus_encoding) return make(pk->p, pk->k);
  std::vector<std::uint32_t> f;
  std::uint64_t v = *modulus_encoding;
  for (unsigned i = 0; i <= pk->k; ++i) {
    f.push_back(static_cast<std::uint32_t>(v % pk->p));
    v /= pk->p;
  }
  if (v != 0) fail(ErrorCode::invalid_encoding, "modulus encoding exceeds degree k");
  return make(pk->p, pk->k, std::move(f));
}

Field::Field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(ipow(p, k)), modulus_(std::move(modulus)) {
  if (q_ > 2) q1_primes_ = prime_divisors(q_ - 1);

  // Trace of each basis vector x^i; the absolute trace is F_p-linear.
  basis_trace_.resize(k_);
  std::uint64_t basis = 1;
  for (unsigned i = 0; i < k_; ++i, basis *= p_) {
    Element b{static_cast<std::uint32_t>(basis)};
    Element acc{0}, conj = b;
    for (unsigned j = 0; j < k_; ++j) {
      acc = add_generic(acc, conj);
      conj = pow_generic(conj, p_);
    }
    if (acc.enc >= p_) fail(ErrorCode::internal, "trace left the prime field");
    basis_trace_[i] = acc.enc;
  }

  if (p_ == 2) {
    // Echelon form of z -> z^2 + z, indexed by leading bit.
    as_echelon_.assign(k_, {0, 0});
    for (unsigned i = 0; i < k_; ++i) {
      Element e{std::uint32_t{1} << i};
      std::uint32_t img = mul_generic(e, e).enc ^ e.enc;
      std::uint32_t pre = e.enc;
      for (int bit = static_cast<int>(k_) - 1; bit >= 0 && img != 0; --bit) {
        if (!((img >> bit) & 1u)) continue;
        if (as_echelon_[bit].first == 0) {
          as_echelon_[bit] = {img, pre};
          img = 0;
        } else {
          img ^= as_echelon_[bit].first;
          pre ^= as_echelon_[bit].second;
        }
      }
    }
  }

  if (q_ > 2) {
    for (std::uint64_t a = 1; a < q_; ++a) {
      Element cand{static_cast<std::uint32_t>(a)};
      bool ok = true;
      for (auto l : q1_primes_) {
        if (pow_generic(cand, (q_ - 1) / l) == one()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        primitive_ = cand;
        break;
      }
    }
  }

  if (q_ <= kTableLimit) build_tables();

  if (p_ == 2) {
    for (std::uint64_t a = 0; a < q_; ++a) {
      Element e{static_cast<std::uint32_t>(a)};
      if (absolute_trace(e) == one()) {
        twisting_ = e;
        break;
      }
    }
  } else {
    for (std::uint64_t a = 1; a < q_; ++a) {
      Element e{static_cast<std::uint32_t>(a)};
      if (!is_square(e)) {
        twisting_ = e;
        break;
      }
    }
    if (q_ % 4 == 1) {
      ts_odd_ = q_ - 1;
      while (ts_odd_ % 2 == 0) {
        ts_odd_ /= 2;
        ++ts_s_;
      }
      ts_root_ = pow_generic(twisting_, ts_odd_);
    }
  }
}

void Field::build_tables() {
  const std::uint64_t n = q_ - 1;
  exp_.assign(2 * n, 0);
  log_.assign(q_, kNone);
  Element g = primitive_;
  Element cur{1};
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = cur.enc;
    exp_[i + n] = cur.enc;
    log_[cur.enc] = static_cast<std::uint32_t>(i);
    cur = mul_generic(cur, g);
  }
  if (p_ != 2) {
    square_.assign(q_, 0);
    square_[0] = 1;
    for (std::uint64_t i = 0; i < n; i += 2) square_[exp_[i]] = 1;
    if (k_ > 1) {
      zech_.assign(n, kNone);
      for (std::uint64_t i = 0; i < n; ++i) {
        Element s = add_generic(one(), Element{exp_[i]});
        zech_[i] = s.enc == 0 ? kNone : log_[s.enc];
      }
    }
  }
}

std::uint64_t Field::modulus_encoding() const {
  std::uint64_t enc = 0, pw = 1;
  for (auto c : modulus_) {
    enc += c * pw;
    pw *= p_;
  }
  return enc;
}

Element Field::element(std::uint64_t enc) const {
  if (enc >= q_) {
    fail(ErrorCode::invalid_encoding,
         "encoding " + std::to_string(enc) + " outside [0, " + std::to_string(q_) + ")");
  }
  return {static_cast<std::uint32_t>(enc)};
}

Element Field::from_int(std::int64_t n) const {
  return {static_cast<std::uint32_t>(mod_floor(n, p_))};
}

std::vector<std::uint32_t> Field::coefficients(Element a) const {
  std::vector<std::uint32_t> c(k_);
  std::uint64_t v = a.enc;
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
  return c;
}

Element Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > k_) fail(ErrorCode::invalid_encoding, "too many coefficients");
  std::uint64_t enc = 0, pw = 1;
  for (auto c : coeffs) {
    if (c >= p_) fail(ErrorCode::invalid_encoding, "coefficient out of range");
    enc += c * pw;
    pw *= p_;
  }
  return {static_cast<std::uint32_t>(enc)};
}

Element Field::add_generic(Element a, Element b) const {
  if (p_ == 2) return {a.enc ^ b.enc};
  if (k_ == 1) {
    std::uint64_t s = std::uint64_t{a.enc} + b.enc;
    return {static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  std::uint64_t x = a.enc, y = b.enc, enc = 0, pw = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    enc += d * pw;
    pw *= p_;
    x /= p_;
    y /= p_;
  }
  return {static_cast<std::uint32_t>(enc)};
}

Element Field::neg_generic(Element a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return {a.enc == 0 ? 0 : p_ - a.enc};
  std::uint64_t x = a.enc, enc = 0, pw = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t d = x % p_;
    enc += (d == 0 ? 0 : p_ - d) * pw;
    pw *= p_;
    x /= p_;
  }
  return {static_cast<std::uint32_t>(enc)};
}

Element Field::mul_generic(Element a, Element b) const {
  if (k_ == 1) {
    return {static_cast<std::uint32_t>(std::uint64_t{a.enc} * b.enc % p_)};
  }
  std::array<std::uint64_t, 32> da{}, db{};
  std::array<std::uint64_t, 64> r{};
  std::uint64_t x = a.enc, y = b.enc;
  for (unsigned i = 0; i < k_; ++i) {
    da[i] = x % p_;
    db[i] = y % p_;
    x /= p_;
    y /= p_;
  }
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) r[i + j] = (r[i + j] + da[i] * db[j]) % p_;
  }
  // x^k = -(m_0 + ... + m_{k-1} x^{k-1})
  for (unsigned deg = 2 * k_ - 2; deg >= k_; --deg) {
    const std::uint64_t c = r[deg];
    if (c == 0) continue;
    r[deg] = 0;
    for (unsigned j = 0; j < k_; ++j) {
      r[deg - k_ + j] = (r[deg - k_ + j] + c * (p_ - modulus_[j])) % p_;
    }
  }
  std::uint64_t enc = 0, pw = 1;
  for (unsigned i = 0; i < k_; ++i) {
    enc += r[i] * pw;
    pw *= p_;
  }
  return {static_cast<std::uint32_t>(enc)};
}

Element Field::pow_generic(Element a, std::uint64_t e) const {
  Element r = one();
  while (e > 0) {
    if (e & 1) r = mul_generic(r, a);
    a = mul_generic(a, a);
    e >>= 1;
  }
  return r;
}

Element Field::add(Element a, Element b) const {
  if (p_ == 2) return {a.enc ^ b.enc};
  if (!zech_.empty()) {
    if (a.enc == 0) return b;
    if (b.enc == 0) return a;
    const std::uint32_t n1 = static_cast<std::uint32_t>(q_ - 1);
    const std::uint32_t la = log_[a.enc], lb = log_[b.enc];
    const std::uint32_t d = lb >= la ? lb - la : lb + n1 - la;
    const std::uint32_t z = zech_[d];
    if (z == kNone) return zero();
    return {exp_[la + z]};
  }
  return add_generic(a, b);
}

Element Field::neg(Element a) const {
  if (p_ == 2 || a.enc == 0) return a;
  if (k_ == 1) return {p_ - a.enc};
  if (has_tables()) return {exp_[log_[a.enc] + (q_ - 1) / 2]};
  return neg_generic(a);
}

Element Field::sub(Element a, Element b) const {
  if (k_ == 1 && p_ != 2) {
    return {a.enc >= b.enc ? a.enc - b.enc : a.enc + p_ - b.enc};
  }
  return add(a, neg(b));
}

Element Field::mul(Element a, Element b) const {
  if (has_tables()) {
    if (a.enc == 0 || b.enc == 0) return zero();
    return {exp_[log_[a.enc] + log_[b.enc]]};
  }
  return mul_generic(a, b);
}

Element Field::inv(Element a) const {
  if (a.enc == 0) fail(ErrorCode::division_by_zero, "inverse of zero");
  if (has_tables()) return {exp_[(q_ - 1) - log_[a.enc]]};
  if (k_ == 1) {
    auto eg = extended_gcd(a.enc, p_);
    return {static_cast<std::uint32_t>(mod_floor(eg.x, p_))};
  }
  return pow_generic(a, q_ - 2);
}

Element Field::pow(Element a, std::uint64_t e) const {
  if (has_tables()) {
    if (e == 0) return one();
    if (a.enc == 0) return zero();
    const std::uint64_t n = q_ - 1;
    return {exp_[(std::uint64_t{log_[a.enc]} * (e % n)) % n]};
  }
  return pow_generic(a, e);
}

bool Field::is_square(Element a) const {
  if (p_ == 2 || a.enc == 0) return true;
  if (!square_.empty()) return square_[a.enc] != 0;
  return pow_generic(a, (q_ - 1) / 2) == one();
}

Element Field::sqrt_odd(Element a) const {
  if (q_ % 4 == 3) return pow_generic(a, (q_ + 1) / 4);
  // Tonelli-Shanks with q - 1 = 2^s * odd.
  unsigned m = ts_s_;
  Element c = ts_root_;
  Element t = pow_generic(a, ts_odd_);
  Element r = pow_generic(a, (ts_odd_ + 1) / 2);
  while (t != one()) {
    unsigned i = 0;
    Element t2 = t;
    while (t2 != one()) {
      t2 = mul_generic(t2, t2);
      ++i;
    }
    Element b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mul_generic(b, b);
    m = i;
    c = mul_generic(b, b);
    t = mul_generic(t, c);
    r = mul_generic(r, b);
  }
  return r;
}

Element Field::sqrt(Element a) const {
  if (!is_square(a)) fail(ErrorCode::not_a_square, "element is not a square");
  if (a.enc == 0) return a;
  if (p_ == 2) {
    if (has_tables()) {
      std::uint64_t l = log_[a.enc];
      if (l % 2 == 1) l += q_ - 1;
      return {exp_[l / 2]};
    }
    return pow_generic(a, q_ / 2);
  }
  Element s = has_tables() ? Element{exp_[log_[a.enc] / 2]} : sqrt_odd(a);
  Element t = neg(s);
  return t < s ? t : s;
}

Element Field::absolute_trace(Element a) const {
  if (k_ == 1) return a;
  if (p_ == 2) {
    std::uint32_t mask = 0;
    for (unsigned i = 0; i < k_; ++i) mask |= basis_trace_[i] << i;
    return {static_cast<std::uint32_t>(std::popcount(a.enc & mask) & 1)};
  }
  std::uint64_t v = a.enc, acc = 0;
  for (unsigned i = 0; i < k_; ++i) {
    acc += (v % p_) * basis_trace_[i];
    v /= p_;
  }
  return {static_cast<std::uint32_t>(acc % p_)};
}

std::optional<Element> Field::artin_schreier_root(Element c) const {
  if (p_ != 2) fail(ErrorCode::internal, "artin_schreier_root requires characteristic 2");
  std::uint32_t v = c.enc, z = 0;
  for (int bit = static_cast<int>(k_) - 1; bit >= 0; --bit) {
    if (!((v >> bit) & 1u)) continue;
    if (as_echelon_[bit].first == 0) return std::nullopt;
    v ^= as_echelon_[bit].first;
    z ^= as_echelon_[bit].second;
  }
  if (v != 0) return std::nullopt;
  return Element{std::min(z, z ^ 1u)};
}

Element Field::random_element(Rng& rng) const {
  if (k_ == 1) return {static_cast<std::uint32_t>(rng() % p_)};
  std::uint64_t enc = 0, pw = 1;
  for (unsigned i = 0; i < k_; ++i) {
    enc += (rng() % p_) * pw;
    pw *= p_;
  }
  return {static_cast<std::uint32_t>(enc)};
}

std::uint64_t Field::multiplicative_order(Element a) const {
  if (a.enc == 0) fail(ErrorCode::division_by_zero, "zero has no multiplicative order");
  std::uint64_t n = q_ - 1;
  for (auto l : q1_primes_) {
    while (n % l == 0 && pow(a, n / l) == one()) n /= l;
  }
  return n;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ == o.field_) return;
  if (field_->characteristic() == o.field_->characteristic() &&
      field_->modulus() == o.field_->modulus()) {
    return;
  }
  fail(ErrorCode::spec_mismatch, "operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(value_, o.value_)};
}

}  // namespace hassecount
