#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nullkit/error.hpp"

namespace nullkit {

/// Raw element encoding: sum of rep[i] * p^i over the little-endian
/// coefficient vector in the generator t. Prime-subfield elements therefore
/// encode as the integers 0..p-1.
using Coeff = std::uint32_t;

/// The finite field GF(p^e). Immutable once constructed; shared through
/// FieldPtr. Arithmetic works on raw Coeff encodings so that polynomial code
/// can store coefficients compactly.
class FieldSpec {
 public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Little-endian monic modulus of degree e; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  bool is_prime_field() const noexcept { return e_ == 1; }

  Coeff zero() const noexcept { return 0; }
  Coeff one() const noexcept { return 1; }
  Coeff from_int(std::int64_t v) const noexcept;

  Coeff add(Coeff a, Coeff b) const noexcept;
  Coeff sub(Coeff a, Coeff b) const noexcept;
  Coeff neg(Coeff a) const noexcept;
  Coeff mul(Coeff a, Coeff b) const noexcept;
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const;
  Coeff pow(Coeff a, std::uint64_t k) const noexcept;

  std::vector<std::uint32_t> digits(Coeff a) const;
  Coeff from_digits(const std::vector<std::uint32_t>& rep) const;

  /// Canonical text form: integers for prime-subfield values, otherwise a
  /// polynomial in t such as `t^2+2*t+1`.
  std::string format(Coeff a) const;
  /// `GF(p)`, `GF(p^e)` for default moduli, `GF(p^e; m=...)` otherwise.
  std::string name() const;

  bool operator==(const FieldSpec& other) const noexcept {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

 private:
  friend std::shared_ptr<const FieldSpec> make_field(std::uint32_t, std::uint32_t,
                                                     std::optional<std::vector<std::uint32_t>>);
  FieldSpec() = default;
  void build_tables();
  Coeff mul_slow(Coeff a, Coeff b) const;

  std::uint32_t p_ = 2;
  std::uint32_t e_ = 1;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  bool default_modulus_ = true;
  // log/antilog tables for extension fields
  std::vector<std::uint32_t> log_;
  std::vector<Coeff> exp_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Builds GF(p^e). Default moduli exist for GF(4), GF(8), GF(9) and GF(16).
FieldPtr make_field(std::uint32_t p, std::uint32_t e = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

/// Parses `GF(p)`, `GF(p^e)` or `GF(p^e; m=<poly in t>)`.
FieldPtr parse_field(std::string_view text);

/// Parses an element literal (an integer or a polynomial in `t`).
Coeff parse_field_literal(const FieldSpec& field, std::string_view text);

/// An element together with its field; arithmetic checks that both operands
/// come from the same field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Coeff value);

  const FieldPtr& field() const noexcept { return field_; }
  Coeff value() const noexcept { return value_; }
  std::vector<std::uint32_t> rep() const { return field_->digits(value_); }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t k) const;

  bool operator==(const FieldElement& o) const noexcept {
    return value_ == o.value_ && same_field(field_, o.field_);
  }

  std::string to_string() const { return field_->format(value_); }

 private:
  void check(const FieldElement& o) const;
  FieldPtr field_;
  Coeff value_;
};

/// All q elements, starting with 0, in increasing encoding order.
std::vector<FieldElement> enumerate_field(const FieldPtr& field);

/// Field homomorphism small -> large. For an extension `small`, t is sent to
/// the smallest root (by encoding) of small's modulus inside `large`.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr small, FieldPtr large);

  const FieldPtr& source() const noexcept { return small_; }
  const FieldPtr& target() const noexcept { return large_; }
  Coeff operator()(Coeff a) const { return image_[a]; }
  /// Inverse image, if `b` lies in the image of the embedding.
  std::optional<Coeff> preimage(Coeff b) const;

 private:
  FieldPtr small_;
  FieldPtr large_;
  std::vector<Coeff> image_;
};

/// True when `small` embeds into `large` (same characteristic, degree divides).
bool embeds_into(const FieldSpec& small, const FieldSpec& large) noexcept;

}  // namespace nullkit
