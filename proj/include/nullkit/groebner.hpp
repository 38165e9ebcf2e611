#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nullkit/poly.hpp"

namespace nullkit {

/// How Buchberger picks the next critical pair. `Normal` is the production
/// strategy; the other two exist so tests can show the reduced basis does not
/// depend on the schedule.
enum class PairSelection { Normal, Fifo, Random };

struct GroebnerOptions {
  PairSelection selection = PairSelection::Normal;
  std::uint64_t seed = 0;  // used by PairSelection::Random
  unsigned max_degree = 64;
  std::size_t max_basis_size = 4096;
};

/// Reduced, monic Gröbner basis, elements sorted ascending by leading
/// monomial. Unique for a given ideal and order.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(order) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].is_constant(); }
  bool is_zero_ideal() const noexcept { return gens_.empty(); }

  /// Remainder of full reduction; deterministic (basis order, highest
  /// reducible term first).
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  bool operator==(const GroebnerBasis& o) const noexcept;

  /// Leading monomial of each element under order().
  std::vector<Monomial> leading_monomials() const;

 private:
  friend GroebnerBasis buchberger(std::span<const Polynomial>, const MonomialOrder&,
                                  const GroebnerOptions&);
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  std::vector<std::vector<Term>> ordered_;  // gens_ with terms sorted by order_
};

/// Buchberger's algorithm with the coprime-leading-monomial criterion.
/// Throws DegreeOverflow past the configured degree or basis size.
GroebnerBasis buchberger(std::span<const Polynomial> gens,
                         const MonomialOrder& order = MonomialOrder::degrevlex(),
                         const GroebnerOptions& options = {});

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_membership(const Polynomial& f, std::span<const Polynomial> gens);

bool ideal_equal(std::span<const Polynomial> a, std::span<const Polynomial> b,
                 const MonomialOrder& order = MonomialOrder::degrevlex());

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum(quotients[i] * divisors[i]) + remainder.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& order = MonomialOrder::degrevlex());

/// Leading monomial of a nonzero polynomial under `order`.
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);

}  // namespace nullkit
