#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace nullkit {

/// Upper bound on ring variables, auxiliary elimination variables included.
inline constexpr std::size_t kMaxVars = 16;
/// Per-variable exponent ceiling imposed by the compact storage.
inline constexpr unsigned kMaxExponent = 255;

/// Exponent vector of a fixed ring. Stored inline; total degree is cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exps);
  static Monomial from_exponents(std::span<const unsigned> exps);

  std::size_t size() const noexcept { return n_; }
  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
  void set(std::size_t i, unsigned v);
  unsigned degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  /// Throws DegreeOverflow when an exponent leaves the storable range.
  Monomial operator*(const Monomial& other) const;
  /// Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const noexcept;
  static Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
  static bool coprime(const Monomial& a, const Monomial& b) noexcept;

  Monomial with_inserted(std::size_t pos, unsigned exp = 0) const;
  Monomial with_removed(std::size_t pos) const;

  bool operator==(const Monomial& o) const noexcept { return n_ == o.n_ && e_ == o.e_; }
  std::size_t hash() const noexcept;

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  std::uint16_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// lex, degrevlex, or block(k): degrevlex on the first k variables decides,
/// ties broken by degrevlex on the rest. block(k) eliminates the first k.
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
  static MonomialOrder block(std::size_t k) { return MonomialOrder(Kind::Block, k); }

  Kind kind() const noexcept { return kind_; }
  std::size_t block_size() const noexcept { return block_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  std::string name() const;
  bool operator==(const MonomialOrder& o) const noexcept {
    return kind_ == o.kind_ && block_ == o.block_;
  }
  bool operator<(const MonomialOrder& o) const noexcept {
    return kind_ != o.kind_ ? kind_ < o.kind_ : block_ < o.block_;
  }

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}
  Kind kind_;
  std::size_t block_;
};

/// Parses `lex`, `degrevlex` or `block(k)`.
MonomialOrder parse_order(const std::string& text);

}  // namespace nullkit
