#include "nullkit/monomial.hpp"

#include <algorithm>

#include "nullkit/error.hpp"

namespace nullkit {

namespace {

void check_vars(std::size_t n) {
  if (n > kMaxVars)
    throw Error(ErrorKind::InvalidArgument,
                "at most " + std::to_string(kMaxVars) + " variables are supported");
}

// degrevlex restricted to variables [lo, hi)
int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  check_vars(nvars);
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
  std::size_t i = 0;
  for (unsigned v : exps) set(i++, v);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
  return m;
}

void Monomial::set(std::size_t i, unsigned v) {
  if (v > kMaxExponent) throw Error(ErrorKind::DegreeOverflow, "exponent above 255");
  deg_ = static_cast<std::uint16_t>(deg_ - e_[i] + v);
  e_[i] = static_cast<std::uint8_t>(v);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    const unsigned s = unsigned{e_[i]} + other.e_[i];
    if (s > kMaxExponent) throw Error(ErrorKind::DegreeOverflow, "exponent above 255");
    out.e_[i] = static_cast<std::uint8_t>(s);
  }
  out.deg_ = static_cast<std::uint16_t>(deg_ + other.deg_);
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const noexcept {
  Monomial out = *this;
  for (std::size_t i = 0; i < n_; ++i) out.e_[i] = static_cast<std::uint8_t>(e_[i] - other.e_[i]);
  out.deg_ = static_cast<std::uint16_t>(deg_ - other.deg_);
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial out = a;
  unsigned deg = 0;
  for (std::size_t i = 0; i < a.n_; ++i) {
    out.e_[i] = std::max(a.e_[i], b.e_[i]);
    deg += out.e_[i];
  }
  out.deg_ = static_cast<std::uint16_t>(deg);
  return out;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.n_; ++i)
    if (a.e_[i] != 0 && b.e_[i] != 0) return false;
  return true;
}

Monomial Monomial::with_inserted(std::size_t pos, unsigned exp) const {
  Monomial out(n_ + 1u);
  for (std::size_t i = 0, j = 0; i < out.size(); ++i) out.set(i, i == pos ? exp : e_[j++]);
  return out;
}

Monomial Monomial::with_removed(std::size_t pos) const {
  Monomial out(n_ - 1u);
  for (std::size_t i = 0, j = 0; i < n_; ++i)
    if (i != pos) out.set(j++, e_[i]);
  return out;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < n_; ++i) {
    h ^= e_[i];
    h *= 1099511628211ull;
  }
  return h;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    case Kind::Block: {
      const std::size_t k = std::min(block_, a.size());
      if (int c = degrevlex_range(a, b, 0, k); c != 0) return c;
      return degrevlex_range(a, b, k, a.size());
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Block: return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

MonomialOrder parse_order(const std::string& text) {
  if (text == "lex") return MonomialOrder::lex();
  if (text == "degrevlex") return MonomialOrder::degrevlex();
  if (text.size() > 7 && text.compare(0, 6, "block(") == 0 && text.back() == ')') {
    try {
      return MonomialOrder::block(std::stoul(text.substr(6, text.size() - 7)));
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown monomial order '" + text + "'");
}

}  // namespace nullkit
