#include "nullkit/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nullkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::NoDefaultModulus: return "NoDefaultModulus";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::ZeroDivisorIdeal: return "ZeroDivisorIdeal";
    case ErrorKind::SizeOverflow: return "SizeOverflow";
    case ErrorKind::NonHomogeneousProjective: return "NonHomogeneousProjective";
    case ErrorKind::NonHomogeneousGenerator: return "NonHomogeneousGenerator";
    case ErrorKind::EmptyVariety: return "EmptyVariety";
    case ErrorKind::ZeroGeneratorCount: return "ZeroGeneratorCount";
    case ErrorKind::NotInVanishingIdeal: return "NotInVanishingIdeal";
    case ErrorKind::ClassificationFailure: return "ClassificationFailure";
    case ErrorKind::MixedCoefficients: return "MixedCoefficients";
    case ErrorKind::InconsistentTower: return "InconsistentTower";
    case ErrorKind::SuiteFailure: return "SuiteFailure";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

constexpr std::uint32_t kMaxCharacteristic = 1u << 16;
constexpr std::uint32_t kMaxExtensionOrder = 1u << 16;
constexpr std::uint32_t kMaxModulusDegree = 8;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using UPoly = std::vector<std::uint32_t>;  // little-endian over GF(p)

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g over GF(p).
UPoly upoly_rem(UPoly f, const UPoly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = (lead * g[i]) % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

// Exhaustive search for a monic factor of degree 1..deg/2.
bool upoly_irreducible(const UPoly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      UPoly g(d + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (upoly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::optional<UPoly> default_modulus(std::uint32_t p, std::uint32_t e) {
  if (p == 2 && e == 2) return UPoly{1, 1, 1};
  if (p == 2 && e == 3) return UPoly{1, 1, 0, 1};
  if (p == 3 && e == 2) return UPoly{1, 0, 1};
  if (p == 2 && e == 4) return UPoly{1, 1, 0, 0, 1};
  return std::nullopt;
}

std::string format_upoly(const UPoly& f, std::uint32_t p, bool with_zero = true) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    const std::uint32_t c = f[i] % p;
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  if (first && with_zero) os << '0';
  return os.str();
}

// Minimal recursive-descent reader for integer polynomials in `t`.
class UPolyReader {
 public:
  UPolyReader(std::string_view text, std::uint32_t p) : s_(text), p_(p) {}

  UPoly read() {
    UPoly out;
    skip();
    if (pos_ == s_.size()) fail("empty literal");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      skip();
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip();
      std::int64_t coef = 1;
      bool have_coef = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = number();
        have_coef = true;
        skip();
        if (peek() == '*') {
          get();
          skip();
        } else {
          add(out, 0, sign * coef);
          skip();
          continue;
        }
      }
      if (peek() != 't') fail(have_coef ? "expected 't' after '*'" : "expected term");
      get();
      std::size_t exp = 1;
      skip();
      if (peek() == '^') {
        get();
        skip();
        exp = static_cast<std::size_t>(number());
      }
      add(out, exp, sign * coef);
      skip();
    }
    trim(out);
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::int64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer too large");
    }
    return v;
  }
  void add(UPoly& f, std::size_t exp, std::int64_t c) {
    if (f.size() <= exp) f.resize(exp + 1, 0);
    const std::int64_t p = p_;
    f[exp] = static_cast<std::uint32_t>((((f[exp] + c) % p) + p) % p);
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError,
                msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::uint32_t p_;
  std::size_t pos_ = 0;
};

}  // namespace

Coeff FieldSpec::from_int(std::int64_t v) const noexcept {
  const std::int64_t p = p_;
  return static_cast<Coeff>(((v % p) + p) % p);
}

Coeff FieldSpec::add(Coeff a, Coeff b) const noexcept {
  if (e_ == 1) {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  Coeff out = 0;
  Coeff scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const std::uint32_t d = (a % p_ + b % p_) % p_;
    out += d * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Coeff FieldSpec::neg(Coeff a) const noexcept {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Coeff out = 0;
  Coeff scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const std::uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Coeff FieldSpec::sub(Coeff a, Coeff b) const noexcept { return add(a, neg(b)); }

Coeff FieldSpec::mul(Coeff a, Coeff b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (e_ == 1) return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
  const std::uint32_t s = log_[a] + log_[b];
  return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
}

Coeff FieldSpec::inv(Coeff a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + name());
  if (e_ == 1) return pow(a, p_ - 2);
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

Coeff FieldSpec::div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

Coeff FieldSpec::pow(Coeff a, std::uint64_t k) const noexcept {
  Coeff result = 1;
  Coeff base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<std::uint32_t> FieldSpec::digits(Coeff a) const {
  std::vector<std::uint32_t> rep(e_, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    rep[i] = a % p_;
    a /= p_;
  }
  return rep;
}

Coeff FieldSpec::from_digits(const std::vector<std::uint32_t>& rep) const {
  Coeff out = 0;
  Coeff scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += (i < rep.size() ? rep[i] % p_ : 0) * scale;
    scale *= p_;
  }
  return out;
}

std::string FieldSpec::format(Coeff a) const {
  if (a < p_) return std::to_string(a);
  return format_upoly(digits(a), p_);
}

std::string FieldSpec::name() const {
  if (e_ == 1) return "GF(" + std::to_string(p_) + ")";
  std::string base = "GF(" + std::to_string(p_) + "^" + std::to_string(e_);
  if (default_modulus_) return base + ")";
  return base + "; m=" + format_upoly(modulus_, p_) + ")";
}

Coeff FieldSpec::mul_slow(Coeff a, Coeff b) const {
  const UPoly da = digits(a);
  const UPoly db = digits(b);
  UPoly prod(2 * e_, 0);
  for (std::uint32_t i = 0; i < e_; ++i)
    for (std::uint32_t j = 0; j < e_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
  return from_digits(upoly_rem(prod, modulus_, p_));
}

void FieldSpec::build_tables() {
  if (e_ == 1) return;
  // Find a primitive element by brute force; the multiplicative group is
  // cyclic, so one always exists.
  for (Coeff g = 2; g < q_; ++g) {
    std::vector<Coeff> powers;
    powers.reserve(q_ - 1);
    Coeff x = 1;
    bool primitive = true;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      if (k > 0 && x == 1) {
        primitive = false;
        break;
      }
      powers.push_back(x);
      x = mul_slow(x, g);
    }
    if (!primitive || x != 1) continue;
    exp_ = std::move(powers);
    log_.assign(q_, 0);
    for (std::uint32_t k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;
    return;
  }
  throw Error(ErrorKind::ReducibleModulus, "no primitive element found for " + name());
}

FieldPtr make_field(std::uint32_t p, std::uint32_t e,
                    std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p > kMaxCharacteristic)
    throw Error(ErrorKind::UnsupportedField, "characteristic above 2^16");
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  auto field = std::shared_ptr<FieldSpec>(new FieldSpec());
  field->p_ = p;
  field->e_ = e;
  if (e == 1) {
    field->q_ = p;
    return field;
  }
  if (e > kMaxModulusDegree)
    throw Error(ErrorKind::UnsupportedField, "extension degree above 8");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  if (q > kMaxExtensionOrder) throw Error(ErrorKind::UnsupportedField, "field order above 2^16");
  field->q_ = static_cast<std::uint32_t>(q);

  UPoly m;
  if (modulus) {
    m = *modulus;
    for (auto& c : m) c %= p;
    trim(m);
    if (m.size() != e + 1)
      throw Error(ErrorKind::InvalidArgument, "modulus must have degree " + std::to_string(e));
    if (m.back() != 1) throw Error(ErrorKind::InvalidArgument, "modulus must be monic");
    auto def = default_modulus(p, e);
    field->default_modulus_ = def && *def == m;
  } else {
    auto def = default_modulus(p, e);
    if (!def)
      throw Error(ErrorKind::NoDefaultModulus,
                  "no default modulus for GF(" + std::to_string(p) + "^" + std::to_string(e) + ")");
    m = *def;
  }
  if (!upoly_irreducible(m, p))
    throw Error(ErrorKind::ReducibleModulus, format_upoly(m, p) + " is reducible over GF(" +
                                                 std::to_string(p) + ")");
  field->modulus_ = std::move(m);
  field->build_tables();
  return field;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

FieldPtr parse_field(std::string_view text) {
  auto fail = [&](const std::string& msg) -> FieldPtr {
    throw Error(ErrorKind::SyntaxError, msg + " in field literal '" + std::string(text) + "'");
  };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 5 || s.compare(0, 3, "GF(") != 0 || s.back() != ')')
    return fail("expected GF(...)");
  std::string body = s.substr(3, s.size() - 4);
  std::string mod_text;
  if (auto semi = body.find(';'); semi != std::string::npos) {
    mod_text = body.substr(semi + 1);
    body = body.substr(0, semi);
    if (mod_text.compare(0, 2, "m=") != 0) return fail("expected 'm=' after ';'");
    mod_text = mod_text.substr(2);
  }
  std::uint32_t p = 0, e = 1;
  try {
    std::size_t used = 0;
    p = static_cast<std::uint32_t>(std::stoul(body, &used));
    if (used < body.size()) {
      if (body[used] != '^') return fail("expected '^'");
      std::string rest = body.substr(used + 1);
      std::size_t used2 = 0;
      e = static_cast<std::uint32_t>(std::stoul(rest, &used2));
      if (used2 != rest.size()) return fail("trailing characters");
    }
  } catch (const std::logic_error&) {
    return fail("malformed number");
  }
  // GF(q) with q a prime power is shorthand for GF(p^e).
  if (e == 1 && p > 3 && !is_prime(p)) {
    std::uint32_t r = 2;
    while (p % r != 0) ++r;
    std::uint32_t k = 0, rest = p;
    while (rest % r == 0) {
      rest /= r;
      ++k;
    }
    if (rest == 1) {
      p = r;
      e = k;
    }
  }
  if (mod_text.empty()) return make_field(p, e);
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  return make_field(p, e, UPolyReader(mod_text, p).read());
}

Coeff parse_field_literal(const FieldSpec& field, std::string_view text) {
  UPoly f = UPolyReader(text, field.p()).read();
  if (field.e() == 1) {
    if (f.size() > 1)
      throw Error(ErrorKind::SyntaxError, "'t' is not defined in prime field " + field.name());
    return f.empty() ? 0 : f[0];
  }
  // reduce modulo the field modulus, then read off digits
  f = upoly_rem(f, field.modulus(), field.p());
  return field.from_digits(f);
}

FieldElement::FieldElement(FieldPtr field, Coeff value) : field_(std::move(field)), value_(value) {
  if (value_ >= field_->q())
    throw Error(ErrorKind::InvalidArgument, "element encoding out of range");
}

void FieldElement::check(const FieldElement& o) const {
  if (!same_field(field_, o.field_))
    throw Error(ErrorKind::FieldMismatch, field_->name() + " vs " + o.field_->name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check(o);
  return {field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t k) const { return {field_, field_->pow(value_, k)}; }

std::vector<FieldElement> enumerate_field(const FieldPtr& field) {
  std::vector<FieldElement> out;
  out.reserve(field->q());
  for (Coeff v = 0; v < field->q(); ++v) out.emplace_back(field, v);
  return out;
}

bool embeds_into(const FieldSpec& small, const FieldSpec& large) noexcept {
  return small.p() == large.p() && large.e() % small.e() == 0;
}

FieldEmbedding::FieldEmbedding(FieldPtr small, FieldPtr large)
    : small_(std::move(small)), large_(std::move(large)) {
  if (!embeds_into(*small_, *large_))
    throw Error(ErrorKind::InconsistentTower,
                small_->name() + " does not embed into " + large_->name());
  image_.resize(small_->q());
  if (same_field(small_, large_) || small_->is_prime_field()) {
    for (Coeff a = 0; a < small_->q(); ++a) image_[a] = a;
    return;
  }
  // t maps to the smallest root of small's modulus in large
  const auto& m = small_->modulus();
  std::optional<Coeff> root;
  for (Coeff r = 0; r < large_->q() && !root; ++r) {
    Coeff acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = large_->add(large_->mul(acc, r), m[i]);
    if (acc == 0) root = r;
  }
  if (!root)
    throw Error(ErrorKind::InconsistentTower, "modulus of " + small_->name() + " has no root in " +
                                                  large_->name());
  for (Coeff a = 0; a < small_->q(); ++a) {
    const auto rep = small_->digits(a);
    Coeff acc = 0;
    for (std::size_t i = rep.size(); i-- > 0;) acc = large_->add(large_->mul(acc, *root), rep[i]);
    image_[a] = acc;
  }
}

std::optional<Coeff> FieldEmbedding::preimage(Coeff b) const {
  auto it = std::find(image_.begin(), image_.end(), b);
  if (it == image_.end()) return std::nullopt;
  return static_cast<Coeff>(it - image_.begin());
}

}  // namespace nullkit
