#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "nullkit/groebner.hpp"

namespace nullkit {

/// Generator list over a fixed ring plus a lazily filled Gröbner basis cache
/// (one slot per monomial order, written once). Copies share the cache.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  explicit Ideal(RingPtr ring) : Ideal(std::move(ring), {}) {}

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }

  const GroebnerBasis& groebner(const MonomialOrder& order = MonomialOrder::degrevlex()) const;

  bool contains(const Polynomial& f) const { return groebner().contains(f); }
  /// other ⊆ this
  bool contains(const Ideal& other) const;
  bool is_unit() const { return groebner().is_unit(); }
  bool is_zero() const { return groebner().is_zero_ideal(); }

  /// The reduced degrevlex basis as a fresh generator list.
  Ideal reduced() const { return Ideal(ring_, groebner().gens()); }

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::shared_ptr<const GroebnerBasis>> bases;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Equality of ideals by comparison of reduced bases.
bool ideal_equal(const Ideal& a, const Ideal& b,
                 const MonomialOrder& order = MonomialOrder::degrevlex());

/// Generator concatenation.
Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// Eliminates t from t*I + (1-t)*J with t prepended under block(1).
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

/// I : J, intersecting (I ∩ <g>)/g over the nonzero generators g of J.
/// Throws ZeroDivisorIdeal when J is the zero ideal.
Ideal ideal_quotient(const Ideal& a, const Ideal& b);

struct Saturation {
  Ideal ideal;
  unsigned iterations;  // quotient rounds executed, >= 2
};

/// Iterates S_{k+1} = S_k : J from S_0 = I until two consecutive quotients
/// S_k, S_{k+1} (k >= 1) coincide.
Saturation ideal_saturate(const Ideal& a, const Ideal& b);

/// I ∩ k[X_k, ...]: basis elements free of the first k variables, kept in
/// the original ring.
Ideal eliminate(const Ideal& ideal, std::size_t first_k_vars);

bool is_homogeneous_ideal(const Ideal& ideal);

/// f ∈ √I, decided by checking 1 ∈ I + <1 - T f> with a fresh variable T.
bool radical_membership(const Polynomial& f, const Ideal& ideal);

/// <X_0, ..., X_{n-1}> of the ring.
Ideal maximal_homogeneous_ideal(const RingPtr& ring);

/// <X_0^d, ..., X_{n-1}^d> of the ring.
Ideal power_ideal(const RingPtr& ring, unsigned d);

}  // namespace nullkit
