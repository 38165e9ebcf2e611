#include "nullkit/ideal.hpp"

#include <algorithm>

#include "nullkit/parallel.hpp"

namespace nullkit {

namespace {

std::vector<Polynomial> nonzero(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens)
    if (!g.is_zero()) out.push_back(g);
  return out;
}

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw Error(ErrorKind::RingMismatch, "ideals from different rings");
}

// Ring with a fresh variable prepended, and the ideal's generators moved there.
struct Extended {
  RingPtr ring;
  std::vector<Polynomial> lift(const std::vector<Polynomial>& gens) const {
    std::vector<Polynomial> out;
    for (const auto& g : gens) out.push_back(insert_var(g, ring, 0));
    return out;
  }
};

Extended extend_front(const RingPtr& ring, const std::string& base) {
  return {ring_with_inserted_var(ring, 0, fresh_var_name(*ring, base))};
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_)
    if (!same_ring(g.ring(), ring_)) throw Error(ErrorKind::RingMismatch, "generator outside the ideal's ring");
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->bases.find(order); it != cache_->bases.end()) return *it->second;
  }
  // Computed outside the lock; a concurrent fill of the same slot yields an
  // identical basis, and the first writer wins.
  auto gens = nonzero(gens_);
  auto gb = gens.empty() ? std::make_shared<const GroebnerBasis>(ring_, order)
                         : std::make_shared<const GroebnerBasis>(buchberger(gens, order));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(order, std::move(gb));
  return *it->second;
}

bool Ideal::contains(const Ideal& other) const {
  check_same_ring(*this, other);
  const auto& gb = groebner();
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Polynomial& g) { return gb.contains(g); });
}

std::string Ideal::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ">";
}

bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order) {
  check_same_ring(a, b);
  return a.groebner(order).gens() == b.groebner(order).gens();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  auto gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (a.is_unit()) return b.reduced();
  if (b.is_unit()) return a.reduced();
  const Extended ext = extend_front(ring, "T");
  const Polynomial t = Polynomial::variable(ext.ring, 0);
  const Polynomial one_minus_t = Polynomial::constant(ext.ring, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : ext.lift(a.groebner().gens())) gens.push_back(t * g);
  for (const auto& g : ext.lift(b.groebner().gens())) gens.push_back(one_minus_t * g);
  const GroebnerBasis gb = buchberger(gens, MonomialOrder::block(1));
  std::vector<Polynomial> kept;
  for (const auto& g : gb.gens()) {
    const bool free_of_t = std::all_of(g.terms().begin(), g.terms().end(),
                                       [](const Term& term) { return term.mono[0] == 0; });
    if (free_of_t) kept.push_back(remove_var(g, ring, 0));
  }
  return Ideal(ring, std::move(kept));
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const RingPtr& ring = a.ring();
  const auto divisors = nonzero(b.gens());
  if (divisors.empty()) throw Error(ErrorKind::ZeroDivisorIdeal, "quotient by the zero ideal");
  if (a.is_unit()) return Ideal::unit(ring);

  auto pieces = parallel_map(divisors.size(), [&](std::size_t k) {
    const Polynomial& g = divisors[k];
    if (g.is_constant()) return a.reduced();
    const Ideal meet = ideal_intersect(a, Ideal(ring, {g}));
    std::vector<Polynomial> gens;
    const std::vector<Polynomial> div{g};
    for (const auto& h : meet.gens()) {
      DivisionResult d = divide(h, div);
      if (!d.remainder.is_zero())
        throw Error(ErrorKind::VerificationFailure, "inexact division in ideal quotient");
      gens.push_back(std::move(d.quotients[0]));
    }
    return Ideal(ring, std::move(gens));
  });
  Ideal acc = pieces[0];
  for (std::size_t k = 1; k < pieces.size(); ++k) acc = ideal_intersect(acc, pieces[k]);
  return acc.reduced();
}

Saturation ideal_saturate(const Ideal& a, const Ideal& b) {
  // Rounds stop once two consecutive quotients agree, so an ideal that is
  // already saturated still costs one growth round and one confirming round.
  Ideal current = ideal_quotient(a, b);
  unsigned rounds = 1;
  for (;;) {
    Ideal next = ideal_quotient(current, b);
    ++rounds;
    if (ideal_equal(next, current)) return {next, rounds};
    current = std::move(next);
  }
}

Ideal eliminate(const Ideal& ideal, std::size_t first_k_vars) {
  const RingPtr& ring = ideal.ring();
  if (first_k_vars > ring->nvars())
    throw Error(ErrorKind::InvalidArgument, "cannot eliminate more variables than the ring has");
  const GroebnerBasis& gb = ideal.groebner(MonomialOrder::block(first_k_vars));
  std::vector<Polynomial> kept;
  for (const auto& g : gb.gens()) {
    const bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (std::size_t i = 0; i < first_k_vars; ++i)
        if (t.mono[i] != 0) return false;
      return true;
    });
    if (free) kept.push_back(g);
  }
  return Ideal(ring, std::move(kept));
}

bool is_homogeneous_ideal(const Ideal& ideal) {
  const auto gens = nonzero(ideal.gens());
  if (std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_homogeneous(); }))
    return true;
  const GroebnerBasis& gb = ideal.groebner();
  for (const auto& g : gb.gens())
    for (const auto& comp : homogeneity(g).components)
      if (!gb.contains(comp.poly)) return false;
  return true;
}

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) throw Error(ErrorKind::RingMismatch, "polynomial outside the ring");
  if (f.is_zero()) return true;
  const Extended ext = extend_front(ideal.ring(), "T");
  auto gens = ext.lift(nonzero(ideal.gens()));
  const Polynomial t = Polynomial::variable(ext.ring, 0);
  gens.push_back(Polynomial::constant(ext.ring, 1) - t * insert_var(f, ext.ring, 0));
  return buchberger(gens).is_unit();
}

Ideal maximal_homogeneous_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

Ideal power_ideal(const RingPtr& ring, unsigned d) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i).pow(d));
  return Ideal(ring, std::move(gens));
}

}  // namespace nullkit
