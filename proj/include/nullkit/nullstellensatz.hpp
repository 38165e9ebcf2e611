#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nullkit/varieties.hpp"

namespace nullkit {

enum class VanishingMethod { Colon, Saturation, Oracle };

std::string_view to_string(VanishingMethod m);
VanishingMethod parse_method(std::string_view text);

/// Coefficient field (the ring's field) and point field K = GF(q). Either
/// the coefficient field embeds into K, or K is a proper subfield of it; in
/// the second case generators must have coefficients in K.
struct NullConfig {
  FieldPtr point_field;
  VanishingMethod method = VanishingMethod::Colon;

  std::uint32_t q() const noexcept { return point_field->q(); }
};

/// Checks the tower between the ring's field and cfg.point_field.
/// Throws InconsistentTower or MixedCoefficients.
void check_tower(const Ideal& ideal, const NullConfig& cfg);

/// <X_i^q - X_i> over every variable of the ring.
Ideal gamma_q(const RingPtr& ring, std::uint32_t q);

/// <X_i^q X_j - X_j^q X_i : i < j>; the zero ideal in one variable.
Ideal gamma_q_star(const RingPtr& ring, std::uint32_t q);

/// I + Γ_q as a reduced generator list. Equals I(Z_K(I)); the unit ideal
/// when the zero set is empty.
Ideal affine_vanishing(const Ideal& ideal, const NullConfig& cfg);

/// I(Z_K(I)) computed from the points. Throws EmptyVariety.
Ideal affine_oracle(const Ideal& ideal, const NullConfig& cfg);

/// (d_1 + ... + d_r)(q - 1) + 1 over the stored nonzero generators, which
/// must each be homogeneous (NonHomogeneousGenerator otherwise). Depends on
/// the presentation, not only on the ideal.
unsigned degree_bound(const Ideal& ideal, std::uint32_t q);

struct MethodReport {
  VanishingMethod method;
  unsigned quotient_rounds = 0;  // 1 for colon, iterations for saturation, 0 for oracle
  std::size_t gb_size = 0;
  std::optional<unsigned> d;     // colon only
  double seconds = 0;
};

struct VanishingResult {
  Ideal ideal;
  MethodReport report;
};

/// I(V_K(I)) for a homogeneous ideal by the method in cfg:
///   colon       (I + Γ_q*) : <X_0^d, ..., X_n^d>
///   saturation  (I + Γ_q*) : m^∞
///   oracle      intersection of the point ideals of V_K(I)
/// Throws EmptyVariety when V_K(I) is empty (see classify_empty).
VanishingResult projective_vanishing(const Ideal& ideal, const NullConfig& cfg);

enum class EmptyClass { Nonempty, EmptyUnit, EmptyIrrelevant };

std::string_view to_string(EmptyClass c);

/// Decides emptiness of V_K(I) by enumeration, then verifies the matching
/// side of the dichotomy: 1 ∈ I, or I + Γ_q = <X_0, ..., X_n>. Throws
/// ClassificationFailure if neither holds.
EmptyClass classify_empty(const Ideal& ideal, const NullConfig& cfg);

struct Certificate {
  std::size_t j;
  unsigned d;
  Polynomial g;  // in I, homogeneous of degree d
  Polynomial l;  // X_j^d - g, vanishes off V_K(I)
};

/// g_j = X_j^d - X_j prod_i (X_j^{d_i(q-1)} - h_i^{q-1}) and l_j = X_j^d - g_j,
/// with every stated property verified (VerificationFailure otherwise).
/// Throws ZeroGeneratorCount without nonzero generators and EmptyVariety
/// when V_K(I) is empty.
Certificate make_certificate(const Ideal& ideal, std::size_t j, const NullConfig& cfg);

struct MembershipCertificate {
  Certificate cert;
  Polynomial g_times_f;  // in I
  Polynomial l_times_f;  // in Γ_q*
};

/// For each j: X_j^d f = g_j f + l_j f with g_j f ∈ I and l_j f ∈ Γ_q*, both
/// checked. f must be homogeneous and lie in the colon result
/// (NotInVanishingIdeal otherwise). With no nonzero generators the
/// certificates degenerate to d = 1, g_j = 0, l_j = X_j.
std::vector<MembershipCertificate> certify_membership(const Polynomial& f, const Ideal& ideal,
                                                      const NullConfig& cfg);

}  // namespace nullkit
