#include "nullkit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace nullkit {

namespace {

const MonomialOrder kStorageOrder = MonomialOrder::degrevlex();

bool term_before(const Term& a, const Term& b) {
  return kStorageOrder.compare(a.mono, b.mono) > 0;
}

// Sorts descending and merges like terms.
std::vector<Term> normalize(const FieldSpec& field, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

std::string format_monomial(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.vars[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string format_coeff(const FieldSpec& field, Coeff c) {
  if (c < field.p()) return std::to_string(c);
  return "(" + field.format(c) + ")";
}

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial result(ring_);
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negate = false;
      if (peek() == '+' || peek() == '-') {
        negate = get() == '-';
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip();
      Polynomial t = term();
      result = negate ? result - t : result + t;
      skip();
    }
    return result;
  }

 private:
  Polynomial term() {
    const FieldSpec& field = *ring_->field;
    Coeff coeff = 1;
    Monomial mono(ring_->nvars());
    for (;;) {
      skip();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = field.mul(coeff, field.from_int(number()));
      } else if (c == '(') {
        const std::size_t start = ++pos_;
        while (!at_end() && peek() != ')') ++pos_;
        if (at_end()) fail("unterminated '('");
        const std::string_view lit = s_.substr(start, pos_ - start);
        ++pos_;
        try {
          coeff = field.mul(coeff, parse_field_literal(field, lit));
        } catch (const Error& e) {
          fail("bad coefficient literal: " + e.message(), start);
        }
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
          ++pos_;
        const std::string name(s_.substr(start, pos_ - start));
        auto it = std::find(ring_->vars.begin(), ring_->vars.end(), name);
        if (it == ring_->vars.end())
          throw Error(ErrorKind::UnknownVariable,
                      "'" + name + "' at column " + std::to_string(start + 1));
        unsigned exp = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          exp = static_cast<unsigned>(number());
        }
        const auto idx = static_cast<std::size_t>(it - ring_->vars.begin());
        if (mono[idx] + exp > kMaxExponent) fail("exponent too large");
        mono.set(idx, mono[idx] + exp);
      } else {
        fail("expected coefficient or variable");
      }
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return Polynomial::monomial(ring_, mono, coeff);
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

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg, std::optional<std::size_t> at = {}) const {
    throw Error(ErrorKind::SyntaxError,
                msg + " at column " + std::to_string(at.value_or(pos_) + 1));
  }

  std::string_view s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

std::size_t Ring::index_of(std::string_view name) const {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw Error(ErrorKind::UnknownVariable, "'" + std::string(name) + "'");
  return static_cast<std::size_t>(it - vars.begin());
}

RingPtr make_ring(FieldPtr field, std::vector<std::string> vars) {
  if (vars.size() > kMaxVars)
    throw Error(ErrorKind::InvalidArgument,
                "at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (vars[i] == vars[j])
        throw Error(ErrorKind::InvalidArgument, "duplicate variable '" + vars[i] + "'");
  return std::make_shared<const Ring>(Ring{std::move(field), std::move(vars)});
}

RingPtr make_ring(FieldPtr field, std::size_t nvars, const std::string& prefix) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < nvars; ++i) vars.push_back(prefix + std::to_string(i));
  return make_ring(std::move(field), std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
  return a == b || (a && b && same_field(a->field, b->field) && a->vars == b->vars);
}

RingPtr ring_with_inserted_var(const RingPtr& ring, std::size_t pos, std::string name) {
  auto vars = ring->vars;
  vars.insert(vars.begin() + static_cast<std::ptrdiff_t>(pos), std::move(name));
  return make_ring(ring->field, std::move(vars));
}

RingPtr ring_with_removed_var(const RingPtr& ring, std::size_t pos) {
  auto vars = ring->vars;
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(pos));
  return make_ring(ring->field, std::move(vars));
}

RingPtr ring_over(const RingPtr& ring, FieldPtr field) { return make_ring(std::move(field), ring->vars); }

std::string fresh_var_name(const Ring& ring, const std::string& base) {
  std::string name = base;
  for (int k = 0; std::find(ring.vars.begin(), ring.vars.end(), name) != ring.vars.end(); ++k)
    name = base + "_" + std::to_string(k);
  return name;
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, Coeff c) {
  const std::size_t n = ring->nvars();
  return monomial(std::move(ring), Monomial(n), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->nvars());
  m.set(index, 1);
  return monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  Polynomial p(std::move(ring));
  if (m.size() != p.ring_->nvars())
    throw Error(ErrorKind::DimensionMismatch, "monomial length differs from variable count");
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  for (const auto& t : terms)
    if (t.mono.size() != p.ring_->nvars())
      throw Error(ErrorKind::DimensionMismatch, "monomial length differs from variable count");
  p.terms_ = normalize(p.field(), std::move(terms));
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int Polynomial::degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

bool Polynomial::is_homogeneous() const noexcept {
  return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

Coeff Polynomial::coeff(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

void Polynomial::check(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw Error(ErrorKind::RingMismatch, "operands from different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check(o);
  const FieldSpec& f = field();
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = kStorageOrder.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      const Coeff s = f.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s != 0) out.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  out.terms_.insert(out.terms_.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  out.terms_.insert(out.terms_.end(), o.terms_.begin() + static_cast<std::ptrdiff_t>(j),
                    o.terms_.end());
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = field().neg(t.coeff);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  const FieldSpec& f = field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, f.mul(a.coeff, b.coeff)});
  Polynomial out(ring_);
  out.terms_ = normalize(f, std::move(prod));
  return out;
}

Polynomial Polynomial::scale(Coeff c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = field().mul(t.coeff, c);
  return out;
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial out = *this;
  // multiplication by a monomial preserves degrevlex order
  for (auto& t : out.terms_) {
    t.mono = t.mono * m;
    t.coeff = field().mul(t.coeff, c);
  }
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const noexcept {
  if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

bool Polynomial::canonical_less(const Polynomial& o) const noexcept {
  const std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = kStorageOrder.compare(terms_[i].mono, o.terms_[i].mono); c != 0) return c < 0;
    if (terms_[i].coeff != o.terms_[i].coeff) return terms_[i].coeff < o.terms_[i].coeff;
  }
  return terms_.size() < o.terms_.size();
}

std::string Polynomial::to_string(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<Term> sorted = terms_;
  if (!(order == kStorageOrder))
    std::sort(sorted.begin(), sorted.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  std::string out;
  for (const auto& t : sorted) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += format_coeff(field(), t.coeff);
      continue;
    }
    if (t.coeff != 1) out += format_coeff(field(), t.coeff) + "*";
    out += format_monomial(t.mono, *ring_);
  }
  return out;
}

Coeff evaluate_raw(const Polynomial& f, std::span<const Coeff> point) {
  if (point.size() != f.ring()->nvars())
    throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(point.size()) +
                                                  " coordinates, ring has " +
                                                  std::to_string(f.ring()->nvars()) + " variables");
  const FieldSpec& field = f.field();
  Coeff acc = 0;
  for (const auto& t : f.terms()) {
    Coeff v = t.coeff;
    for (std::size_t i = 0; i < point.size() && v != 0; ++i)
      if (t.mono[i] != 0) v = field.mul(v, field.pow(point[i], t.mono[i]));
    acc = field.add(acc, v);
  }
  return acc;
}

FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point) {
  if (point.size() != f.ring()->nvars())
    throw Error(ErrorKind::DimensionMismatch, "point length differs from variable count");
  const FieldPtr& ffield = f.ring()->field;
  FieldPtr pfield = point.empty() ? ffield : point[0].field();
  for (const auto& x : point)
    if (!same_field(x.field(), pfield))
      throw Error(ErrorKind::FieldMismatch, "point coordinates from different fields");
  std::vector<Coeff> raw;
  raw.reserve(point.size());
  if (same_field(ffield, pfield)) {
    for (const auto& x : point) raw.push_back(x.value());
    return {ffield, evaluate_raw(f, raw)};
  }
  if (embeds_into(*ffield, *pfield)) {
    FieldEmbedding emb(ffield, pfield);
    const Polynomial g = map_field(f, ring_over(f.ring(), pfield), emb);
    for (const auto& x : point) raw.push_back(x.value());
    return {pfield, evaluate_raw(g, raw)};
  }
  if (embeds_into(*pfield, *ffield)) {
    FieldEmbedding emb(pfield, ffield);
    for (const auto& x : point) raw.push_back(emb(x.value()));
    return {ffield, evaluate_raw(f, raw)};
  }
  throw Error(ErrorKind::FieldMismatch, ffield->name() + " and " + pfield->name() + " are unrelated");
}

Polynomial compose(const Polynomial& p, std::span<const Polynomial> args) {
  if (args.size() != p.ring()->nvars())
    throw Error(ErrorKind::ArityMismatch, "form has " + std::to_string(p.ring()->nvars()) +
                                              " variables but " + std::to_string(args.size()) +
                                              " arguments were given");
  if (args.empty()) {
    // constant form
    return p;
  }
  const RingPtr& target = args[0].ring();
  for (const auto& a : args)
    if (!same_ring(a.ring(), target)) throw Error(ErrorKind::RingMismatch, "arguments from different rings");
  if (!same_field(p.ring()->field, target->field))
    throw Error(ErrorKind::FieldMismatch, "form and arguments over different fields");

  std::vector<std::vector<Polynomial>> powers(args.size());
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * args[i]);
    return cache[k];
  };
  std::vector<Term> acc;
  for (const auto& t : p.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < args.size() && !prod.is_zero(); ++i)
      if (t.mono[i] != 0) prod = prod * power(i, t.mono[i]);
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  return Polynomial::from_terms(target, std::move(acc));
}

Homogeneity homogeneity(const Polynomial& f) {
  std::map<unsigned, std::vector<Term>> by_degree;
  for (const auto& t : f.terms()) by_degree[t.mono.degree()].push_back(t);
  Homogeneity out{by_degree.size() <= 1, {}};
  for (auto& [deg, terms] : by_degree)
    out.components.push_back({deg, Polynomial::from_terms(f.ring(), std::move(terms))});
  return out;
}

Polynomial homogenize(const Polynomial& f, std::size_t pos, const std::string& name) {
  RingPtr target = ring_with_inserted_var(f.ring(), pos, name);
  const int deg = f.degree();
  std::vector<Term> terms;
  for (const auto& t : f.terms())
    terms.push_back({t.mono.with_inserted(pos, static_cast<unsigned>(deg) - t.mono.degree()), t.coeff});
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial dehomogenize(const Polynomial& f, std::size_t pos, Coeff value) {
  RingPtr target = ring_with_removed_var(f.ring(), pos);
  const FieldSpec& field = f.field();
  std::vector<Term> terms;
  for (const auto& t : f.terms())
    terms.push_back({t.mono.with_removed(pos), field.mul(t.coeff, field.pow(value, t.mono[pos]))});
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial insert_var(const Polynomial& f, const RingPtr& target, std::size_t pos) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.mono.with_inserted(pos), t.coeff});
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial remove_var(const Polynomial& f, const RingPtr& target, std::size_t pos) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (t.mono[pos] != 0)
      throw Error(ErrorKind::InvalidArgument, "variable to remove occurs in polynomial");
    terms.push_back({t.mono.with_removed(pos), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial map_field(const Polynomial& f, const RingPtr& target, const FieldEmbedding& emb) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.mono, emb(t.coeff)});
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial restrict_field(const Polynomial& f, const RingPtr& target, const FieldEmbedding& emb) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    auto c = emb.preimage(t.coeff);
    if (!c)
      throw Error(ErrorKind::MixedCoefficients, "coefficient " + f.field().format(t.coeff) +
                                                    " lies outside " + emb.source()->name());
    terms.push_back({t.mono, *c});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return PolyParser(text, ring).parse();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  int depth = 0;
  bool blank = true;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      const std::string_view piece = text.substr(start, i - start);
      const bool empty_piece =
          std::all_of(piece.begin(), piece.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
      if (empty_piece) {
        if (!(i == text.size() && blank))
          throw Error(ErrorKind::SyntaxError, "empty generator at column " + std::to_string(start + 1));
      } else {
        try {
          out.push_back(parse_polynomial(piece, ring));
        } catch (const Error& e) {
          throw Error(e.kind(), e.message() + " (generator starting at column " +
                                    std::to_string(start + 1) + ")");
        }
      }
      blank = false;
      start = i + 1;
    }
  }
  return out;
}

}  // namespace nullkit
