#include "nullkit/nullstellensatz.hpp"

#include <algorithm>
#include <chrono>

namespace nullkit {

namespace {

std::vector<Polynomial> nonzero_gens(const Ideal& ideal) {
  std::vector<Polynomial> out;
  for (const auto& g : ideal.gens())
    if (!g.is_zero()) out.push_back(g);
  return out;
}

void require_homogeneous_gens(const Ideal& ideal) {
  for (const auto& g : ideal.gens())
    if (!g.is_homogeneous())
      throw Error(ErrorKind::NonHomogeneousGenerator, "generator " + g.to_string() + " is not homogeneous");
}

Ideal map_ideal(const Ideal& ideal, const RingPtr& target, const FieldEmbedding& emb) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(map_field(g, target, emb));
  return Ideal(target, std::move(gens));
}

Ideal restrict_ideal(const Ideal& ideal, const RingPtr& target, const FieldEmbedding& emb) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(restrict_field(g, target, emb));
  return Ideal(target, std::move(gens));
}

// Oracle over the point field, carried back to the coefficient field. When
// the coefficients are a subfield of K the reduced basis over K is fixed by
// Gal(K/k) and therefore restricts.
Ideal oracle_in_ring(const Ideal& ideal, const NullConfig& cfg, SpaceKind kind) {
  const RingPtr& ring = ideal.ring();
  const Variety v = zero_set(ideal, cfg.point_field, kind);
  if (v.empty()) throw Error(ErrorKind::EmptyVariety, "the zero set over " + cfg.point_field->name() + " is empty");
  if (same_field(ring->field, cfg.point_field)) return oracle_vanishing_ideal(v, ring);
  const RingPtr k_ring = ring_over(ring, cfg.point_field);
  const Ideal over_k = oracle_vanishing_ideal(v, k_ring);
  if (embeds_into(*ring->field, *cfg.point_field))
    return restrict_ideal(over_k, ring, FieldEmbedding(ring->field, cfg.point_field)).reduced();
  return map_ideal(over_k, ring, FieldEmbedding(cfg.point_field, ring->field)).reduced();
}

bool vanishes_at(const Polynomial& f, const Point& pt, const FieldPtr& points_field) {
  if (same_field(f.ring()->field, points_field)) return evaluate_raw(f, pt) == 0;
  std::vector<FieldElement> coords;
  for (Coeff c : pt) coords.emplace_back(points_field, c);
  return evaluate(f, coords).is_zero();
}

void verify(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::VerificationFailure, what);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string_view to_string(VanishingMethod m) {
  switch (m) {
    case VanishingMethod::Colon: return "colon";
    case VanishingMethod::Saturation: return "saturation";
    case VanishingMethod::Oracle: return "oracle";
  }
  return "?";
}

VanishingMethod parse_method(std::string_view text) {
  if (text == "colon") return VanishingMethod::Colon;
  if (text == "saturation") return VanishingMethod::Saturation;
  if (text == "oracle") return VanishingMethod::Oracle;
  throw Error(ErrorKind::InvalidArgument, "unknown method '" + std::string(text) + "'");
}

std::string_view to_string(EmptyClass c) {
  switch (c) {
    case EmptyClass::Nonempty: return "nonempty";
    case EmptyClass::EmptyUnit: return "empty_unit";
    case EmptyClass::EmptyIrrelevant: return "empty_irrelevant";
  }
  return "?";
}

void check_tower(const Ideal& ideal, const NullConfig& cfg) {
  const FieldPtr& coeffs = ideal.ring()->field;
  if (embeds_into(*coeffs, *cfg.point_field)) return;
  if (!embeds_into(*cfg.point_field, *coeffs))
    throw Error(ErrorKind::InconsistentTower,
                coeffs->name() + " and " + cfg.point_field->name() + " do not lie in one tower");
  const FieldEmbedding emb(cfg.point_field, coeffs);
  for (const auto& g : ideal.gens())
    for (const auto& t : g.terms())
      if (!emb.preimage(t.coeff))
        throw Error(ErrorKind::MixedCoefficients, "generator " + g.to_string() + " has coefficients outside " +
                                                      cfg.point_field->name());
}

Ideal gamma_q(const RingPtr& ring, std::uint32_t q) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    const auto x = Polynomial::variable(ring, i);
    gens.push_back(x.pow(q) - x);
  }
  return Ideal(ring, std::move(gens));
}

Ideal gamma_q_star(const RingPtr& ring, std::uint32_t q) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    for (std::size_t j = i + 1; j < ring->nvars(); ++j) {
      const auto xi = Polynomial::variable(ring, i);
      const auto xj = Polynomial::variable(ring, j);
      gens.push_back(xi.pow(q) * xj - xj.pow(q) * xi);
    }
  return Ideal(ring, std::move(gens));
}

Ideal affine_vanishing(const Ideal& ideal, const NullConfig& cfg) {
  check_tower(ideal, cfg);
  return ideal_sum(ideal, gamma_q(ideal.ring(), cfg.q())).reduced();
}

Ideal affine_oracle(const Ideal& ideal, const NullConfig& cfg) {
  check_tower(ideal, cfg);
  return oracle_in_ring(ideal, cfg, SpaceKind::Affine);
}

unsigned degree_bound(const Ideal& ideal, std::uint32_t q) {
  require_homogeneous_gens(ideal);
  unsigned total = 0;
  for (const auto& g : nonzero_gens(ideal)) total += static_cast<unsigned>(g.degree());
  return total * (q - 1) + 1;
}

VanishingResult projective_vanishing(const Ideal& ideal, const NullConfig& cfg) {
  check_tower(ideal, cfg);
  require_homogeneous_gens(ideal);
  if (zero_set(ideal, cfg.point_field, SpaceKind::Projective).empty())
    throw Error(ErrorKind::EmptyVariety, "projective zero set is empty; use classify_empty");

  const RingPtr& ring = ideal.ring();
  const auto start = std::chrono::steady_clock::now();
  MethodReport report;
  report.method = cfg.method;
  std::optional<Ideal> result;
  switch (cfg.method) {
    case VanishingMethod::Colon: {
      const unsigned d = degree_bound(ideal, cfg.q());
      result = ideal_quotient(ideal_sum(ideal, gamma_q_star(ring, cfg.q())), power_ideal(ring, d));
      report.quotient_rounds = 1;
      report.d = d;
      break;
    }
    case VanishingMethod::Saturation: {
      auto sat = ideal_saturate(ideal_sum(ideal, gamma_q_star(ring, cfg.q())), maximal_homogeneous_ideal(ring));
      result = std::move(sat.ideal);
      report.quotient_rounds = sat.iterations;
      break;
    }
    case VanishingMethod::Oracle:
      result = oracle_in_ring(ideal, cfg, SpaceKind::Projective);
      break;
  }
  Ideal out = result->reduced();
  report.gb_size = out.gens().size();
  report.seconds = seconds_since(start);
  return {std::move(out), report};
}

EmptyClass classify_empty(const Ideal& ideal, const NullConfig& cfg) {
  check_tower(ideal, cfg);
  require_homogeneous_gens(ideal);
  if (!zero_set(ideal, cfg.point_field, SpaceKind::Projective).empty()) return EmptyClass::Nonempty;
  if (ideal.is_unit()) return EmptyClass::EmptyUnit;
  const Ideal affine = ideal_sum(ideal, gamma_q(ideal.ring(), cfg.q()));
  if (!affine.is_unit() && ideal_equal(affine, maximal_homogeneous_ideal(ideal.ring())))
    return EmptyClass::EmptyIrrelevant;
  throw Error(ErrorKind::ClassificationFailure,
              "V(I) is empty but neither 1 ∈ I nor I + Γ_q = m holds for " + ideal.to_string());
}

Certificate make_certificate(const Ideal& ideal, std::size_t j, const NullConfig& cfg) {
  check_tower(ideal, cfg);
  const RingPtr& ring = ideal.ring();
  const auto hs = nonzero_gens(ideal);
  if (hs.empty()) throw Error(ErrorKind::ZeroGeneratorCount, "certificate needs at least one nonzero generator");
  if (j >= ring->nvars()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  const unsigned d = degree_bound(ideal, cfg.q());
  const Variety v = zero_set(ideal, cfg.point_field, SpaceKind::Projective);
  if (v.empty()) throw Error(ErrorKind::EmptyVariety, "projective zero set is empty");

  const std::uint32_t q = cfg.q();
  const Polynomial xj = Polynomial::variable(ring, j);
  Polynomial prod = xj;
  for (const auto& h : hs)
    prod *= xj.pow(static_cast<unsigned>(h.degree()) * (q - 1)) - h.pow(q - 1);
  const Polynomial xjd = xj.pow(d);
  Certificate cert{j, d, xjd - prod, prod};

  verify(cert.g + cert.l == xjd, "g_j + l_j != X_j^d");
  verify(cert.g.is_zero() || (cert.g.is_homogeneous() && cert.g.degree() == static_cast<int>(d)),
         "g_j is not homogeneous of degree d");
  verify(ideal.contains(cert.g), "g_j is not in I");
  const Variety space = enumerate_space(cfg.point_field, ring->nvars() - 1, SpaceKind::Projective);
  for (const auto& pt : space.points) {
    const bool in_v = std::binary_search(v.points.begin(), v.points.end(), pt);
    const Polynomial& must_vanish = in_v ? cert.g : cert.l;
    verify(vanishes_at(must_vanish, pt, cfg.point_field),
           (in_v ? "g_j" : "l_j") + std::string(" does not vanish at ") +
               format_point(*cfg.point_field, pt, SpaceKind::Projective));
  }
  return cert;
}

std::vector<MembershipCertificate> certify_membership(const Polynomial& f, const Ideal& ideal,
                                                      const NullConfig& cfg) {
  if (!same_ring(f.ring(), ideal.ring())) throw Error(ErrorKind::RingMismatch, "polynomial outside the ring");
  if (!f.is_homogeneous())
    throw Error(ErrorKind::NotInVanishingIdeal, f.to_string() + " is not homogeneous");
  NullConfig colon = cfg;
  colon.method = VanishingMethod::Colon;
  const VanishingResult vanishing = projective_vanishing(ideal, colon);
  if (!vanishing.ideal.contains(f))
    throw Error(ErrorKind::NotInVanishingIdeal, f.to_string() + " does not vanish on V(I)");

  const RingPtr& ring = ideal.ring();
  const Ideal gstar = gamma_q_star(ring, cfg.q());
  const bool degenerate = nonzero_gens(ideal).empty();
  std::vector<MembershipCertificate> out;
  for (std::size_t j = 0; j < ring->nvars(); ++j) {
    Certificate cert = degenerate
                           ? Certificate{j, 1, Polynomial(ring), Polynomial::variable(ring, j)}
                           : make_certificate(ideal, j, cfg);
    MembershipCertificate mc{cert, cert.g * f, cert.l * f};
    verify(mc.g_times_f + mc.l_times_f == Polynomial::variable(ring, j).pow(cert.d) * f,
           "X_j^d f != g_j f + l_j f");
    verify(ideal.contains(mc.g_times_f), "g_j f is not in I");
    verify(gstar.contains(mc.l_times_f), "l_j f is not in Γ_q*");
    out.push_back(std::move(mc));
  }
  return out;
}

}  // namespace nullkit
