#include "nullkit/groebner.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace nullkit {

namespace {

using Terms = std::vector<Term>;

Terms ordered_terms(const Polynomial& f, const MonomialOrder& order) {
  Terms t(f.terms().begin(), f.terms().end());
  if (!(order == MonomialOrder::degrevlex()))
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return t;
}

unsigned max_degree(const Terms& t) {
  unsigned d = 0;
  for (const auto& x : t) d = std::max(d, x.mono.degree());
  return d;
}

// a[from..] - c * m * g, both sides sorted descending in `order`.
Terms sub_mul(const Terms& a, std::size_t from, Coeff c, const Monomial& m, const Terms& g,
              const FieldSpec& field, const MonomialOrder& order) {
  Terms out;
  out.reserve(a.size() - from + g.size());
  std::size_t i = from, j = 0;
  const Coeff nc = field.neg(c);
  while (i < a.size() && j < g.size()) {
    const Monomial gm = g[j].mono * m;
    const int cmp = order.compare(a[i].mono, gm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, field.mul(nc, g[j].coeff)});
      ++j;
    } else {
      const Coeff s = field.add(a[i].coeff, field.mul(nc, g[j].coeff));
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].mono * m, field.mul(nc, g[j].coeff)});
  return out;
}

void make_monic(Terms& t, const FieldSpec& field) {
  if (t.empty() || t.front().coeff == 1) return;
  const Coeff inv = field.inv(t.front().coeff);
  for (auto& x : t) x.coeff = field.mul(x.coeff, inv);
}

// Full reduction of p by the (monic) basis in sequence order.
Terms reduce_full(Terms p, const std::vector<Terms>& basis, const FieldSpec& field,
                  const MonomialOrder& order, std::size_t skip = SIZE_MAX) {
  Terms rem;
  std::size_t start = 0;
  while (start < p.size()) {
    const Term& lt = p[start];
    const Terms* reducer = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (basis[k].front().mono.divides(lt.mono)) {
        reducer = &basis[k];
        break;
      }
    }
    if (!reducer) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    const Coeff c = field.div(lt.coeff, reducer->front().coeff);
    const Monomial m = lt.mono / reducer->front().mono;
    p = sub_mul(p, start, c, m, *reducer, field, order);
    start = 0;
  }
  return rem;
}

Polynomial to_poly(const RingPtr& ring, Terms t) { return Polynomial::from_terms(ring, std::move(t)); }

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t serial;
};

}  // namespace

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading monomial");
  const Monomial* best = &f.terms()[0].mono;
  for (const auto& t : f.terms())
    if (order.compare(t.mono, *best) > 0) best = &t.mono;
  return *best;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw Error(ErrorKind::RingMismatch, "normal form across rings");
  if (f.is_zero()) return f;
  return to_poly(ring_, reduce_full(ordered_terms(f, order_), ordered_, *ring_->field, order_));
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const noexcept {
  return order_ == o.order_ && same_ring(ring_, o.ring_) && gens_ == o.gens_;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& t : ordered_) out.push_back(t.front().mono);
  return out;
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  if (gens.empty())
    throw Error(ErrorKind::InvalidArgument, "buchberger needs the ring of at least one generator; "
                                            "use an explicit zero polynomial for the zero ideal");
  const RingPtr ring = gens[0].ring();
  const FieldSpec& field = *ring->field;
  for (const auto& g : gens)
    if (!same_ring(g.ring(), ring)) throw Error(ErrorKind::RingMismatch, "generators from different rings");

  GroebnerBasis result(ring, order);
  auto overflow = [&](const std::string& what) {
    throw Error(ErrorKind::DegreeOverflow, what);
  };

  std::vector<Terms> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) {
      result.gens_ = {Polynomial::constant(ring, 1)};
      result.ordered_ = {ordered_terms(result.gens_[0], order)};
      return result;
    }
    Terms t = ordered_terms(g, order);
    if (max_degree(t) > options.max_degree) overflow("generator degree above limit");
    make_monic(t, field);
    basis.push_back(std::move(t));
  }

  std::uint64_t serial = 0;
  std::mt19937_64 rng(options.seed);
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (options.selection == PairSelection::Normal) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      if (int c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
    }
    return a.serial < b.serial;
  };
  std::set<Pair, decltype(pair_less)> pairs(pair_less);
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].empty()) continue;
      const Monomial& a = basis[i].front().mono;
      const Monomial& b = basis[j].front().mono;
      if (Monomial::coprime(a, b)) continue;  // first criterion
      pairs.insert(Pair{i, j, Monomial::lcm(a, b), serial++});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    auto it = pairs.begin();
    if (options.selection == PairSelection::Random) {
      std::advance(it, static_cast<std::ptrdiff_t>(rng() % pairs.size()));
    }
    const Pair pr = *it;
    pairs.erase(it);
    const Terms& f = basis[pr.i];
    const Terms& g = basis[pr.j];
    // S(f, g) = (lcm/lm f) f - (lcm/lm g) g with both monic
    Terms s = f;
    const Monomial fshift = pr.lcm / f.front().mono;
    for (auto& t : s) t.mono = t.mono * fshift;
    s = sub_mul(s, 0, 1, pr.lcm / g.front().mono, g, field, order);
    if (s.empty()) continue;
    if (max_degree(s) > options.max_degree) overflow("S-polynomial degree above limit");
    Terms r = reduce_full(std::move(s), basis, field, order);
    if (r.empty()) continue;
    if (max_degree(r) > options.max_degree) overflow("basis element degree above limit");
    make_monic(r, field);
    if (r.front().mono.is_one()) {
      result.gens_ = {Polynomial::constant(ring, 1)};
      result.ordered_ = {ordered_terms(result.gens_[0], order)};
      return result;
    }
    basis.push_back(std::move(r));
    if (basis.size() > options.max_basis_size) overflow("basis size above limit");
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Terms> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < basis.size() && !redundant; ++l) {
      if (l == k) continue;
      const Monomial& a = basis[l].front().mono;
      const Monomial& b = basis[k].front().mono;
      if (a.divides(b) && (!(a == b) || l < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[k]);
  }
  // Interreduce tails.
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    Terms head{minimal[k].front()};
    Terms tail(minimal[k].begin() + 1, minimal[k].end());
    Terms red = reduce_full(std::move(tail), minimal, field, order, k);
    head.insert(head.end(), red.begin(), red.end());
    minimal[k] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Terms& a, const Terms& b) {
    return order.compare(a.front().mono, b.front().mono) < 0;
  });
  for (auto& t : minimal) result.gens_.push_back(to_poly(ring, t));
  result.ordered_ = std::move(minimal);
  return result;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

bool ideal_membership(const Polynomial& f, std::span<const Polynomial> gens) {
  if (f.is_zero()) return true;
  if (gens.empty()) return false;
  return buchberger(gens).contains(f);
}

bool ideal_equal(std::span<const Polynomial> a, std::span<const Polynomial> b,
                 const MonomialOrder& order) {
  if (a.empty() || b.empty()) {
    auto all_zero = [](std::span<const Polynomial> s) {
      return std::all_of(s.begin(), s.end(), [](const Polynomial& p) { return p.is_zero(); });
    };
    return all_zero(a) && all_zero(b);
  }
  return buchberger(a, order).gens() == buchberger(b, order).gens();
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& order) {
  const RingPtr& ring = f.ring();
  const FieldSpec& field = *ring->field;
  std::vector<Terms> divs;
  for (const auto& d : divisors) {
    if (!same_ring(d.ring(), ring)) throw Error(ErrorKind::RingMismatch, "divisor from another ring");
    divs.push_back(ordered_terms(d, order));
  }
  std::vector<Terms> quot(divs.size());
  Terms rem;
  Terms p = ordered_terms(f, order);
  std::size_t start = 0;
  while (start < p.size()) {
    const Term lt = p[start];
    bool reduced = false;
    for (std::size_t k = 0; k < divs.size(); ++k) {
      if (divs[k].empty() || !divs[k].front().mono.divides(lt.mono)) continue;
      const Coeff c = field.div(lt.coeff, divs[k].front().coeff);
      const Monomial m = lt.mono / divs[k].front().mono;
      quot[k].push_back({m, c});
      p = sub_mul(p, start, c, m, divs[k], field, order);
      start = 0;
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      ++start;
    }
  }
  DivisionResult out{{}, to_poly(ring, std::move(rem))};
  for (auto& q : quot) out.quotients.push_back(to_poly(ring, std::move(q)));
  return out;
}

}  // namespace nullkit
