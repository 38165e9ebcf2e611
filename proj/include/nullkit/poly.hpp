#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nullkit/field.hpp"
#include "nullkit/monomial.hpp"

namespace nullkit {

/// Coefficient field plus an ordered list of variable names.
struct Ring {
  FieldPtr field;
  std::vector<std::string> vars;

  std::size_t nvars() const noexcept { return vars.size(); }
  std::size_t index_of(std::string_view name) const;  // throws UnknownVariable
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(FieldPtr field, std::vector<std::string> vars);
/// `prefix0 .. prefix{n-1}`, e.g. X0 X1 X2.
RingPtr make_ring(FieldPtr field, std::size_t nvars, const std::string& prefix = "X");
bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

RingPtr ring_with_inserted_var(const RingPtr& ring, std::size_t pos, std::string name);
RingPtr ring_with_removed_var(const RingPtr& ring, std::size_t pos);
RingPtr ring_over(const RingPtr& ring, FieldPtr field);
/// A variable name not yet used in the ring, derived from `base`.
std::string fresh_var_name(const Ring& ring, const std::string& base);

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Multivariate polynomial in canonical form: nonzero coefficients only,
/// terms held in descending degrevlex order. Equality is term equality.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
  /// Combines like terms and drops zeros; input order is irrelevant.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const FieldSpec& field() const noexcept { return *ring_->field; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  /// Coefficient of `m` (zero if absent).
  Coeff coeff(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scale(Coeff c) const;
  Polynomial mul_term(const Monomial& m, Coeff c) const;
  Polynomial pow(unsigned k) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial& o) const noexcept;
  /// Canonical-order comparison used for deterministic sorting of lists.
  bool canonical_less(const Polynomial& o) const noexcept;

  /// Canonical text form, terms descending in `order`.
  std::string to_string(const MonomialOrder& order = MonomialOrder::degrevlex()) const;

 private:
  void check(const Polynomial& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Evaluates at a point whose coordinates live in the ring's field or in a
/// field related to it by embedding; the result lives in the larger field.
FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point);
/// Fast path: coordinates are raw elements of f's own field.
Coeff evaluate_raw(const Polynomial& f, std::span<const Coeff> point);

/// p(args[0], ..., args[m]); p may live in a different ring than args but
/// over the same field.
Polynomial compose(const Polynomial& p, std::span<const Polynomial> args);

struct HomogeneousComponent {
  unsigned degree;
  Polynomial poly;
};

struct Homogeneity {
  bool is_homogeneous;
  std::vector<HomogeneousComponent> components;  // ascending degree
};

Homogeneity homogeneity(const Polynomial& f);

/// Inserts a new variable at `pos` and homogenizes with it.
Polynomial homogenize(const Polynomial& f, std::size_t pos, const std::string& name = "X0");
/// Substitutes `value` for the variable at `pos` and removes it from the ring.
Polynomial dehomogenize(const Polynomial& f, std::size_t pos, Coeff value = 1);

/// Same polynomial viewed in `target`, which must have the ring's field and
/// the ring's variables plus one extra variable at `pos`.
Polynomial insert_var(const Polynomial& f, const RingPtr& target, std::size_t pos);
/// Drops a variable that does not occur in f.
Polynomial remove_var(const Polynomial& f, const RingPtr& target, std::size_t pos);
/// Coefficient-wise image under a field embedding.
Polynomial map_field(const Polynomial& f, const RingPtr& target, const FieldEmbedding& emb);
/// Inverse of map_field; throws MixedCoefficients if a coefficient is
/// outside the image of the embedding.
Polynomial restrict_field(const Polynomial& f, const RingPtr& target, const FieldEmbedding& emb);

/// Parses the ASCII polynomial grammar; see README for the syntax.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);
/// Comma-separated list of polynomials (empty text gives an empty list).
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring);

}  // namespace nullkit
