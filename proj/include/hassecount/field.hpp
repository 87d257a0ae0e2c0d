#pragma once

// Exact arithmetic in F_q, q = p^k < 2^32, in a polynomial basis over F_p.
//
// Elements are carried as their canonical encoding sum(c_i * p^i), which is
// a bijection onto [0, q). Fields with q <= 2^16 build log/antilog (and Zech)
// tables at construction, so the hot paths used by the sweeps are lookups.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "hassecount/error.hpp"

namespace hassecount {

struct Element {
  std::uint32_t enc = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Generator for random_element and point sampling. Fixed here so that
// transcripts are reproducible across platforms.
using Rng = std::mt19937_64;
inline constexpr const char* kRngName = "std::mt19937_64";

class Field {
 public:
  // Largest q for which lookup tables are built.
  static constexpr std::uint64_t kTableLimit = 1u << 16;

  // p prime, k >= 1; modulus (k+1 coefficients, lowest degree first, monic)
  // defaults to the irreducible with the smallest canonical encoding.
  static FieldPtr make(std::uint64_t p, unsigned k,
                       std::optional<std::vector<std::uint32_t>> modulus = {});

  // From q = p^k and an optional modulus encoding sum(c_i p^i), i = 0..k.
  static FieldPtr from_order(std::uint64_t q,
                             std::optional<std::uint64_t> modulus_encoding = {});

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::uint64_t modulus_encoding() const;
  bool has_tables() const { return !exp_.empty(); }

  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  // Checked conversion from a canonical encoding.
  Element element(std::uint64_t enc) const;
  // Image of an integer in the prime subfield.
  Element from_int(std::int64_t n) const;

  std::vector<std::uint32_t> coefficients(Element a) const;
  Element from_coefficients(std::span<const std::uint32_t> coeffs) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element sqr(Element a) const { return mul(a, a); }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  bool is_square(Element a) const;
  // Root with the smaller encoding of {s, -s}; throws NotASquare.
  Element sqrt(Element a) const;
  // a + a^p + ... + a^(p^(k-1)), as an element of the prime field.
  Element absolute_trace(Element a) const;

  // Characteristic 2 only: smallest z with z^2 + z = c, if any.
  std::optional<Element> artin_schreier_root(Element c) const;

  // Generator of F_q^* with the smallest encoding (q >= 3; F_2 gives 1).
  Element primitive_element() const { return primitive_; }
  // Smallest-encoding non-square (odd p) / element of trace 1 (p = 2).
  Element twisting_constant() const { return twisting_; }

  Element random_element(Rng& rng) const;

  // Multiplicative order of a != 0, from the factorization of q - 1.
  std::uint64_t multiplicative_order(Element a) const;

 private:
  Field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);

  Element add_generic(Element a, Element b) const;
  Element neg_generic(Element a) const;
  Element mul_generic(Element a, Element b) const;
  Element pow_generic(Element a, std::uint64_t e) const;
  Element sqrt_odd(Element a) const;
  void build_tables();

  std::uint32_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> q1_primes_;  // prime divisors of q - 1

  // Tables (q <= kTableLimit). exp_ has length 2(q-1) so that log sums need
  // no reduction.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;  // odd p, k > 1: log(1 + g^n)
  std::vector<std::uint8_t> square_;  // odd p

  // Linear-functional form of the absolute trace: trace of each basis vector.
  std::vector<std::uint32_t> basis_trace_;
  // p = 2: rows of z -> z^2 + z in echelon form, for Artin-Schreier solves.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> as_echelon_;

  Element primitive_{1};
  Element twisting_{0};
  // Tonelli-Shanks data for odd q with q = 1 mod 4.
  unsigned ts_s_ = 0;
  std::uint64_t ts_odd_ = 0;
  Element ts_root_{1};
};

// Value wrapper carrying its field, for call sites that want operators and
// field-mismatch checking. The sweep kernels use Field + Element directly.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Element value) : field_(std::move(field)), value_(value) {}
  FieldElement(FieldPtr field, std::uint64_t enc)
      : field_(std::move(field)), value_(field_->element(enc)) {}

  const FieldPtr& field() const { return field_; }
  Element value() const { return value_; }
  std::uint32_t encoding() const { return value_.enc; }
  std::vector<std::uint32_t> coeffs() const { return field_->coefficients(value_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  FieldElement inv() const { return {field_, field_->inv(value_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
  FieldElement sqrt() const { return {field_, field_->sqrt(value_)}; }
  bool is_square() const { return field_->is_square(value_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  Element value_;
};

}  // namespace hassecount
