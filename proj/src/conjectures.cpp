#include "nullkit/conjectures.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

#include "nullkit/parallel.hpp"

namespace nullkit {

namespace {

constexpr std::uint64_t kMaxForms = 1u << 22;
constexpr std::uint64_t kMaxPool = 1u << 20;
constexpr std::uint64_t kMaxCandidates = std::uint64_t{1} << 36;
constexpr std::uint64_t kMaxTable = 1u << 16;

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

// Monomials of exact degree d in n variables, descending in degrevlex.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(n);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      m.set(i, left);
      out.push_back(m);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      m.set(i, k);
      self(self, i + 1, left - k);
    }
    m.set(i, 0);
  };
  rec(rec, 0, d);
  const auto order = MonomialOrder::degrevlex();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
  return out;
}

// Calls fn(coeffs) for every nonzero vector over GF(q) of length len whose
// first nonzero entry is 1, in lexicographic order.
template <class Fn>
void for_each_monic_vector(std::size_t len, Coeff q, Fn&& fn) {
  std::vector<Coeff> v(len, 0);
  for (std::size_t lead = len; lead-- > 0;) {
    std::fill(v.begin(), v.end(), 0);
    v[len - 1 - lead] = 1;
    const std::size_t tail = len - 1 - lead + 1;
    for (;;) {
      fn(v);
      std::size_t i = len;
      while (i > tail && ++v[i - 1] == q) v[--i] = 0;
      if (i == tail) break;
    }
  }
}

std::vector<Polynomial> monic_forms(const RingPtr& ring, unsigned degree) {
  const auto monos = monomials_of_degree(ring->nvars(), degree);
  const Coeff q = ring->field->q();
  const auto count = (saturating_pow(q, monos.size()) - 1) / (q - 1);
  if (count > kMaxForms) throw Error(ErrorKind::SizeOverflow, "too many forms to enumerate");
  std::vector<Polynomial> out;
  out.reserve(count);
  for_each_monic_vector(monos.size(), q, [&](const std::vector<Coeff>& c) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (c[i]) terms.push_back({monos[i], c[i]});
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  });
  return out;
}

// Embedding of the coefficient field into K, or identity.
std::vector<Coeff> coefficient_map(const FieldPtr& k, const FieldPtr& points_field) {
  std::vector<Coeff> map(k->q());
  if (same_field(k, points_field)) {
    for (Coeff c = 0; c < k->q(); ++c) map[c] = c;
    return map;
  }
  if (!embeds_into(*k, *points_field))
    throw Error(ErrorKind::InconsistentTower, k->name() + " does not embed into " + points_field->name());
  FieldEmbedding emb(k, points_field);
  for (Coeff c = 0; c < k->q(); ++c) map[c] = emb(c);
  return map;
}

// Value of a polynomial over k at a point with coordinates in K.
Coeff eval_in(const Polynomial& f, const std::vector<Coeff>& cmap, const FieldSpec& K, std::span<const Coeff> pt) {
  Coeff acc = 0;
  for (const auto& t : f.terms()) {
    Coeff v = cmap[t.coeff];
    for (std::size_t i = 0; i < pt.size() && v != 0; ++i)
      if (t.mono[i]) v = K.mul(v, K.pow(pt[i], t.mono[i]));
    acc = K.add(acc, v);
  }
  return acc;
}

RingPtr y_ring(const FieldPtr& k, std::size_t nvars) { return make_ring(k, nvars, "y"); }

// The stage chain of one candidate structure.
struct Structure {
  std::vector<const Polynomial*> stages;
  std::vector<unsigned> arities;
  std::size_t m = 0;
  unsigned degree_sum = 0;
};

class FormLibrary {
 public:
  FormLibrary(FieldPtr k, FieldPtr points_field) : k_(std::move(k)), K_(std::move(points_field)) {}

  const std::vector<Polynomial>& get(std::size_t arity, unsigned degree) {
    auto key = std::pair{arity, degree};
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, p0_forms(y_ring(k_, arity + 1), degree, K_)).first;
    return it->second;
  }

  const Polynomial& power(unsigned n) {
    auto it = powers_.find(n);
    if (it == powers_.end()) {
      auto ring = y_ring(k_, 1);
      it = powers_.emplace(n, Polynomial::variable(ring, 0).pow(n)).first;
    }
    return it->second;
  }

 private:
  FieldPtr k_, K_;
  std::map<std::pair<std::size_t, unsigned>, std::vector<Polynomial>> cache_;
  std::map<unsigned, Polynomial> powers_;
};

// Generates all structures of a family, then orders them canonically.
std::vector<Structure> build_structures(Family family, const SearchBounds& b, FormLibrary& lib) {
  std::vector<Structure> out;
  auto push = [&](std::vector<const Polynomial*> stages, std::vector<unsigned> arities, unsigned degsum) {
    Structure s;
    s.stages = std::move(stages);
    s.arities = std::move(arities);
    for (unsigned a : s.arities) s.m += a;
    s.degree_sum = degsum;
    out.push_back(std::move(s));
  };
  switch (family) {
    case Family::R1:
      for (unsigned m = 0; m <= b.max_m; ++m)
        for (unsigned n = 1; n <= b.max_inner_exp; ++n)
          for (unsigned d = 1; d <= b.max_deg_p; ++d)
            for (const auto& p : lib.get(m, d)) push({&lib.power(n), &p}, {0, m}, n + d);
      break;
    case Family::R2:
      for (unsigned n = 0; n <= b.max_m; ++n)
        for (unsigned m = 0; n + m <= b.max_m; ++m)
          for (unsigned dq = 1; dq <= b.max_deg_p; ++dq)
            for (unsigned dp = 1; dp <= b.max_deg_p; ++dp)
              for (const auto& q : lib.get(n, dq))
                for (const auto& p : lib.get(m, dp)) push({&q, &p}, {n, m}, dq + dp);
      break;
    case Family::R3: {
      std::vector<const Polynomial*> stages;
      std::vector<unsigned> arities;
      auto rec = [&](auto&& self, unsigned used, unsigned degsum) -> void {
        if (!stages.empty()) push(stages, arities, degsum);
        if (stages.size() == b.max_chain) return;
        for (unsigned a = 0; used + a <= b.max_m; ++a)
          for (unsigned d = 1; d <= b.max_deg_p; ++d)
            for (const auto& p : lib.get(a, d)) {
              stages.push_back(&p);
              arities.push_back(a);
              self(self, used + a, degsum + d);
              stages.pop_back();
              arities.pop_back();
            }
      };
      rec(rec, 0, 0);
      break;
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Structure& a, const Structure& b) {
    if (a.m != b.m) return a.m < b.m;
    if (a.degree_sum != b.degree_sum) return a.degree_sum < b.degree_sum;
    return a.stages.size() < b.stages.size();
  });
  return out;
}

// All polynomials of degree <= d over the ring's field, by degree and then
// canonical order.
std::vector<Polynomial> argument_pool(const RingPtr& ring, unsigned max_degree) {
  std::vector<Monomial> monos;
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto part = monomials_of_degree(ring->nvars(), d);
    monos.insert(monos.end(), part.begin(), part.end());
  }
  const Coeff q = ring->field->q();
  const auto count = saturating_pow(q, monos.size());
  if (count > kMaxPool) throw Error(ErrorKind::SizeOverflow, "argument pool too large");
  std::vector<Polynomial> pool;
  pool.reserve(count);
  std::vector<Coeff> c(monos.size(), 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < monos.size(); ++k)
      if (c[k]) terms.push_back({monos[k], c[k]});
    pool.push_back(Polynomial::from_terms(ring, std::move(terms)));
    for (std::size_t k = 0; k < c.size() && ++c[k] == q; ++k) c[k] = 0;
  }
  std::stable_sort(pool.begin(), pool.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.canonical_less(b);
  });
  return pool;
}

Polynomial compose_chain(const std::vector<const Polynomial*>& stages, const std::vector<unsigned>& arities,
                         const Polynomial& first, std::span<const Polynomial> args, const GroebnerBasis* gb) {
  Polynomial h = first;
  std::size_t next = 0;
  for (std::size_t s = 0; s < stages.size(); ++s) {
    std::vector<Polynomial> in{h};
    for (unsigned a = 0; a < arities[s]; ++a) in.push_back(args[next++]);
    h = compose(*stages[s], in);
    if (gb) h = gb->normal_form(h);
  }
  return h;
}

Coeff eval_chain(const Structure& s, const std::vector<Coeff>& cmap, const FieldSpec& K,
                 std::span<const Coeff> values) {
  Coeff h = values[0];
  std::size_t next = 1;
  std::vector<Coeff> in;
  for (std::size_t i = 0; i < s.stages.size(); ++i) {
    in.assign(1, h);
    for (unsigned a = 0; a < s.arities[i]; ++a) in.push_back(values[next++]);
    h = eval_in(*s.stages[i], cmap, K, in);
  }
  return h;
}

std::string join_polys(const std::vector<Polynomial>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + ps[i].to_string();
  return out;
}

}  // namespace

bool check_form_class(const Polynomial& p, FormKind kind, const FieldPtr& points_field) {
  if (!p.is_homogeneous()) return false;
  const auto cmap = coefficient_map(p.ring()->field, points_field);
  const std::size_t n = p.ring()->nvars();
  const Variety space = enumerate_space(points_field, n, SpaceKind::Affine);
  for (const auto& pt : space.points) {
    if (eval_in(p, cmap, *points_field, pt) != 0) continue;
    const bool origin = std::all_of(pt.begin(), pt.end(), [](Coeff c) { return c == 0; });
    if (kind == FormKind::P_K0 && !origin) return false;
    if (kind == FormKind::P_K && (n == 0 || pt[0] != 0)) return false;
  }
  return true;
}

bool verify_kradical_witness(const Polynomial& f, const Ideal& ideal, const Polynomial& p,
                             const std::vector<Polynomial>& args, const FieldPtr& points_field) {
  if (p.ring()->nvars() != args.size() + 1)
    throw Error(ErrorKind::ArityMismatch, "form has " + std::to_string(p.ring()->nvars()) + " variables but " +
                                              std::to_string(args.size() + 1) + " arguments were given");
  if (!check_form_class(p, FormKind::P_K, points_field)) return false;
  std::vector<Polynomial> all{f};
  all.insert(all.end(), args.begin(), args.end());
  return ideal.contains(compose(p, all));
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::R1: return "R1";
    case Family::R2: return "R2";
    case Family::R3: return "R3";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "r1" || text == "R1") return Family::R1;
  if (text == "r2" || text == "R2") return Family::R2;
  if (text == "r3" || text == "R3") return Family::R3;
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + std::string(text) + "' (expected r1, r2 or r3)");
}

std::string SearchBounds::to_string() const {
  return "m=" + std::to_string(max_m) + ",degp=" + std::to_string(max_deg_p) +
         ",degargs=" + std::to_string(max_deg_args) + ",chain=" + std::to_string(max_chain) +
         ",inner=" + std::to_string(max_inner_exp);
}

SearchBounds parse_bounds(std::string_view text) {
  SearchBounds b;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string item(text.substr(pos, end - pos));
    pos = end + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::SyntaxError, "bound '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    unsigned value = 0;
    try {
      std::size_t used = 0;
      if (item.size() == eq + 1 || !std::isdigit(static_cast<unsigned char>(item[eq + 1])))
        throw std::invalid_argument(item);
      value = static_cast<unsigned>(std::stoul(item.substr(eq + 1), &used));
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::SyntaxError, "bound '" + item + "' needs a non-negative integer");
    }
    if (key == "m") b.max_m = value;
    else if (key == "degp") b.max_deg_p = value;
    else if (key == "degargs") b.max_deg_args = value;
    else if (key == "chain") b.max_chain = value;
    else if (key == "inner") b.max_inner_exp = value;
    else throw Error(ErrorKind::SyntaxError, "unknown bound '" + key + "'");
  }
  return b;
}

std::size_t RWitness::arity() const {
  std::size_t m = 0;
  for (const auto& s : stages) m += s.ring()->nvars() - 1;
  return m;
}

Polynomial RWitness::composite() const {
  const auto yr = y_ring(target.ring()->field, arity() + 1);
  std::vector<Polynomial> ys;
  for (std::size_t i = 1; i < yr->nvars(); ++i) ys.push_back(Polynomial::variable(yr, i));
  std::vector<const Polynomial*> ptrs;
  std::vector<unsigned> arities;
  for (const auto& s : stages) {
    ptrs.push_back(&s);
    arities.push_back(static_cast<unsigned>(s.ring()->nvars() - 1));
  }
  return compose_chain(ptrs, arities, Polynomial::variable(yr, 0), ys, nullptr);
}

std::string RWitness::describe() const {
  std::ostringstream out;
  out << to_string(family) << " witness for " << target.to_string() << ": stages [";
  for (std::size_t i = 0; i < stages.size(); ++i) out << (i ? " | " : "") << stages[i].to_string();
  out << "], args [" << join_polys(args) << "], composite " << composite().to_string();
  return out.str();
}

bool verify_witness(const RWitness& w, const FieldPtr& points_field) {
  if (w.stages.empty()) return false;
  if (w.family != Family::R3 && w.stages.size() != 2) return false;
  if (w.family == Family::R1) {
    const auto& inner = w.stages[0];
    if (inner.ring()->nvars() != 1 || inner.size() != 1 || inner.terms()[0].coeff != 1) return false;
  }
  for (const auto& s : w.stages)
    if (s.is_zero() || s.degree() < 1 || !check_form_class(s, FormKind::P_K0, points_field)) return false;
  if (w.args.size() != w.arity()) return false;
  std::vector<Polynomial> all{w.target};
  all.insert(all.end(), w.args.begin(), w.args.end());
  return w.ideal.contains(compose(w.composite(), all));
}

RWitness to_r2(const RWitness& w) {
  if (w.family != Family::R1) throw Error(ErrorKind::InvalidArgument, "to_r2 expects an R1 witness");
  RWitness out = w;
  out.family = Family::R2;
  return out;
}

RWitness to_r3(const RWitness& w) {
  if (w.family != Family::R2) throw Error(ErrorKind::InvalidArgument, "to_r3 expects an R2 witness");
  RWitness out = w;
  out.family = Family::R3;
  return out;
}

std::vector<Polynomial> p0_forms(const RingPtr& yring, unsigned degree, const FieldPtr& points_field) {
  if (degree == 0) return {};
  const std::size_t n = yring->nvars();
  const auto monos = monomials_of_degree(n, degree);
  const Coeff qk = yring->field->q();
  const auto count = (saturating_pow(qk, monos.size()) - 1) / (qk - 1);
  if (count > kMaxForms) throw Error(ErrorKind::SizeOverflow, "too many forms to enumerate");
  const auto cmap = coefficient_map(yring->field, points_field);
  const FieldSpec& K = *points_field;

  // A form has only the trivial zero iff it is nonzero on every point of
  // P^{n-1}(K); monomial values are tabulated once per point.
  const Variety proj = enumerate_space(points_field, n - 1, SpaceKind::Projective);
  std::vector<std::vector<Coeff>> mono_vals(proj.size(), std::vector<Coeff>(monos.size()));
  for (std::size_t p = 0; p < proj.size(); ++p)
    for (std::size_t i = 0; i < monos.size(); ++i) {
      Coeff v = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (monos[i][j]) v = K.mul(v, K.pow(proj.points[p][j], monos[i][j]));
      mono_vals[p][i] = v;
    }

  std::vector<Polynomial> out;
  for_each_monic_vector(monos.size(), qk, [&](const std::vector<Coeff>& c) {
    for (std::size_t p = 0; p < proj.size(); ++p) {
      Coeff acc = 0;
      for (std::size_t i = 0; i < monos.size(); ++i)
        if (c[i]) acc = K.add(acc, K.mul(cmap[c[i]], mono_vals[p][i]));
      if (acc == 0) return;
    }
    std::vector<Term> terms;
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (c[i]) terms.push_back({monos[i], c[i]});
    out.push_back(Polynomial::from_terms(yring, std::move(terms)));
  });
  return out;
}

SearchResult search_witness(const Polynomial& f, const Ideal& ideal, Family family, const SearchBounds& bounds,
                            const FieldPtr& points_field) {
  const RingPtr& ring = ideal.ring();
  if (!same_ring(f.ring(), ring)) throw Error(ErrorKind::RingMismatch, "target outside the ideal's ring");
  const FieldSpec& K = *points_field;
  const auto cmap = coefficient_map(ring->field, points_field);

  FormLibrary lib(ring->field, points_field);
  const auto structures = build_structures(family, bounds, lib);
  const auto pool = argument_pool(ring, bounds.max_deg_args);

  SearchResult result{family, bounds, std::nullopt, 0, structures.size(), pool.size()};
  std::vector<std::uint64_t> offsets(structures.size() + 1, 0);
  for (std::size_t s = 0; s < structures.size(); ++s) {
    const auto size = saturating_pow(pool.size(), structures[s].m);
    offsets[s + 1] = offsets[s] + size;
    if (size > kMaxCandidates || offsets[s + 1] > kMaxCandidates)
      throw Error(ErrorKind::SizeOverflow, "search space exceeds " + std::to_string(kMaxCandidates) + " candidates");
  }
  if (structures.empty()) return result;

  // Necessary condition: the composite vanishes on Z_K(I).
  const Variety zeros = zero_set(ideal, points_field, SpaceKind::Affine);
  std::vector<std::vector<Coeff>> pool_vals(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (const auto& pt : zeros.points) pool_vals[i].push_back(eval_in(pool[i], cmap, K, pt));
  std::vector<Coeff> target_vals;
  for (const auto& pt : zeros.points) target_vals.push_back(eval_in(f, cmap, K, pt));

  const GroebnerBasis& gb = ideal.groebner();
  const Polynomial target_nf = gb.normal_form(f);
  std::vector<Polynomial> class_rep;
  std::vector<std::uint32_t> class_of(pool.size());
  {
    std::map<std::string, std::uint32_t> seen;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      auto nf = gb.normal_form(pool[i]);
      auto [it, fresh] = seen.emplace(nf.to_string(), static_cast<std::uint32_t>(class_rep.size()));
      if (fresh) class_rep.push_back(std::move(nf));
      class_of[i] = it->second;
    }
  }
  const std::uint64_t q = K.q();

  std::atomic<std::size_t> best{structures.size()};
  auto hits = parallel_map(structures.size(), [&](std::size_t si) -> std::optional<std::uint64_t> {
    if (si > best.load()) return std::nullopt;
    const Structure& s = structures[si];
    const std::size_t m = s.m;

    // Truth table of the composite over K^{m+1} when small enough.
    std::vector<Coeff> table;
    const auto table_size = saturating_pow(q, m + 1);
    std::vector<Coeff> vals(m + 1);
    if (table_size <= kMaxTable) {
      table.resize(table_size);
      for (std::uint64_t idx = 0; idx < table_size; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t i = m + 1; i-- > 0;) {
          vals[i] = static_cast<Coeff>(rest % q);
          rest /= q;
        }
        table[idx] = eval_chain(s, cmap, K, vals);
      }
    }
    auto passes = [&](const std::vector<std::uint32_t>& tuple) {
      for (std::size_t z = 0; z < zeros.size(); ++z) {
        vals[0] = target_vals[z];
        for (std::size_t i = 0; i < m; ++i) vals[i + 1] = pool_vals[tuple[i]][z];
        Coeff v;
        if (!table.empty()) {
          std::uint64_t idx = 0;
          for (Coeff c : vals) idx = idx * q + c;
          v = table[idx];
        } else {
          v = eval_chain(s, cmap, K, vals);
        }
        if (v != 0) return false;
      }
      return true;
    };

    std::map<std::vector<std::uint32_t>, bool> memo;
    std::vector<std::uint32_t> tuple(m, 0), classes(m);
    const std::uint64_t total = offsets[si + 1] - offsets[si];
    for (std::uint64_t t = 0; t < total; ++t) {
      if ((t & 0xfff) == 0 && si > best.load()) return std::nullopt;
      if (passes(tuple)) {
        for (std::size_t i = 0; i < m; ++i) classes[i] = class_of[tuple[i]];
        auto [it, fresh] = memo.emplace(classes, false);
        if (fresh) {
          std::vector<Polynomial> args;
          for (auto c : classes) args.push_back(class_rep[c]);
          it->second = compose_chain(s.stages, s.arities, target_nf, args, &gb).is_zero();
        }
        if (it->second) {
          std::size_t cur = best.load();
          while (si < cur && !best.compare_exchange_weak(cur, si)) {
          }
          return t;
        }
      }
      for (std::size_t i = m; i-- > 0;) {
        if (++tuple[i] < pool.size()) break;
        tuple[i] = 0;
      }
    }
    return std::nullopt;
  });

  for (std::size_t si = 0; si < structures.size(); ++si) {
    if (!hits[si]) continue;
    const Structure& s = structures[si];
    std::vector<std::uint32_t> tuple(s.m);
    std::uint64_t rest = *hits[si];
    for (std::size_t i = s.m; i-- > 0;) {
      tuple[i] = static_cast<std::uint32_t>(rest % pool.size());
      rest /= pool.size();
    }
    RWitness w{family, {}, {}, f, ideal};
    for (const auto* st : s.stages) w.stages.push_back(*st);
    for (auto idx : tuple) w.args.push_back(pool[idx]);
    if (!verify_witness(w, points_field))
      throw Error(ErrorKind::VerificationFailure, "search produced an invalid witness: " + w.describe());
    result.witness = std::move(w);
    result.candidates_tested = offsets[si] + *hits[si] + 1;
    return result;
  }
  result.candidates_tested = offsets.back();
  return result;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; });
}

SuiteReport counterexample_suite(const SuiteOptions& options) {
  SuiteReport report;
  const FieldPtr f2 = make_field(2);
  const RingPtr ring = make_ring(f2, {"X1", "X2"});
  const Ideal ideal(ring, parse_polynomial_list(options.ideal_override.value_or("X1"), ring));
  const NullConfig cfg{f2, VanishingMethod::Oracle};
  const Ideal expected(ring, parse_polynomial_list("X1, X2^2 - X2", ring));
  auto add = [&](std::string group, std::string name, bool ok, std::string detail, bool vacuous = false) {
    report.checks.push_back({std::move(group), std::move(name), ok, std::move(detail), vacuous});
  };

  // (a)
  const Ideal formula = affine_vanishing(ideal, cfg);
  add("a", "I + Γ_2 = <X1, X2^2 - X2>", ideal_equal(formula, expected), "I + Γ_2 = " + formula.to_string());
  try {
    const Ideal oracle = affine_oracle(ideal, cfg);
    add("a", "I + Γ_2 = oracle I(Z(I))", ideal_equal(formula, oracle), "oracle = " + oracle.to_string());
  } catch (const Error& e) {
    add("a", "I + Γ_2 = oracle I(Z(I))", false, e.what());
  }

  // (b)
  const bool homogeneous = is_homogeneous_ideal(formula);
  add("b", "I(Z(I)) is not homogeneous", !homogeneous, homogeneous ? "homogeneous" : "not homogeneous");

  // (c) and (d)
  const Polynomial target = parse_polynomial("X2^2 - X2", ring);
  const Polynomial control = parse_polynomial("X1", ring);
  for (Family fam : {Family::R1, Family::R2, Family::R3}) {
    auto r = search_witness(target, ideal, fam, options.bounds, f2);
    const bool vacuous = r.exhausted() && r.candidates_tested == 0;
    add("c", std::string(to_string(fam)) + " search for X2^2 - X2 is exhausted", r.exhausted(),
        r.exhausted() ? "exhausted after " + std::to_string(r.candidates_tested) + " candidates" +
                            (vacuous ? " (vacuous)" : "")
                      : r.witness->describe(),
        vacuous);
    report.searches.push_back(std::move(r));
  }
  for (Family fam : {Family::R1, Family::R2, Family::R3}) {
    auto r = search_witness(control, ideal, fam, options.bounds, f2);
    add("d", std::string(to_string(fam)) + " control X1 is found", !r.exhausted(),
        r.exhausted() ? "no witness in " + std::to_string(r.candidates_tested) + " candidates"
                      : "found at candidate " + std::to_string(r.candidates_tested));
    report.searches.push_back(std::move(r));
  }
  return report;
}

void require_pass(const SuiteReport& report) {
  for (const auto& c : report.checks)
    if (!c.passed)
      throw Error(ErrorKind::SuiteFailure, "(" + c.group + ") " + c.name + ": " + c.detail);
}

std::optional<NonradicalInstance> find_nonradical_instance(std::uint32_t q, std::size_t n,
                                                           unsigned max_gen_degree) {
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  for (std::uint32_t r = q; r > 1; r /= p) {
    if (r % p != 0) throw Error(ErrorKind::UnsupportedField, std::to_string(q) + " is not a prime power");
    ++e;
  }
  const FieldPtr field = make_field(p, e);
  const RingPtr ring = make_ring(field, n + 1);
  const NullConfig cfg{field, VanishingMethod::Colon};
  const Ideal star = gamma_q_star(ring, q);

  std::vector<Polynomial> forms;
  for (unsigned d = 1; d <= max_gen_degree; ++d) {
    auto part = monic_forms(ring, d);
    forms.insert(forms.end(), part.begin(), part.end());
  }

  std::uint64_t examined = 0;
  auto examine = [&](std::vector<Polynomial> gens) -> std::optional<NonradicalInstance> {
    ++examined;
    Ideal ideal(ring, std::move(gens));
    if (zero_set(ideal, field, SpaceKind::Projective).empty()) return std::nullopt;
    Ideal augmented = ideal_sum(ideal, star).reduced();
    Ideal colon = projective_vanishing(ideal, cfg).ideal;
    if (augmented.groebner().gens() == colon.groebner().gens()) return std::nullopt;
    for (const auto& g : colon.groebner().gens()) {
      if (augmented.contains(g)) continue;
      if (!radical_membership(g, augmented))
        throw Error(ErrorKind::VerificationFailure, "colon element outside the radical: " + g.to_string());
      return NonradicalInstance{ideal, augmented, colon, g, examined};
    }
    throw Error(ErrorKind::VerificationFailure, "bases differ but the colon adds nothing");
  };
  for (const auto& g : forms)
    if (auto hit = examine({g})) return hit;
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j)
      if (auto hit = examine({forms[i], forms[j]})) return hit;
  return std::nullopt;
}

}  // namespace nullkit
