#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nullkit/nullstellensatz.hpp"

namespace nullkit {

enum class FormKind { P_K, P_K0 };

/// Exhaustive check over A^{m+1}(K) of a form p(y_0, ..., y_m). P_K0: only
/// the origin is a zero. P_K: every zero has y_0 = 0. Both also require p to
/// be homogeneous; anything else yields false.
bool check_form_class(const Polynomial& p, FormKind kind, const FieldPtr& points_field);

/// p ∈ P_K and p(f, args...) ∈ I. A true result proves f lies in the
/// K-radical of I. Throws ArityMismatch if p has the wrong variable count.
bool verify_kradical_witness(const Polynomial& f, const Ideal& ideal, const Polynomial& p,
                             const std::vector<Polynomial>& args, const FieldPtr& points_field);

enum class Family { R1, R2, R3 };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

struct SearchBounds {
  unsigned max_m = 2;          // extra arguments f_1..f_m
  unsigned max_deg_p = 4;      // degree of every form
  unsigned max_deg_args = 2;   // degree of every argument f_i
  unsigned max_chain = 2;      // R3 chain length
  unsigned max_inner_exp = 3;  // R1 exponent n in y_0^n

  static SearchBounds zero() { return {0, 0, 0, 0, 0}; }
  std::string to_string() const;
};

/// `m=2,degp=4,degargs=2,chain=2,inner=3`; omitted keys keep their defaults.
SearchBounds parse_bounds(std::string_view text);

/// A composed form p_i(...p_2(p_1(y_0, ...), ...)...) given stage by stage.
/// Stage j is a form in 1 + arity_j variables whose first variable receives
/// the previous stage (or y_0). R1 is the chain [y_0^n, p] and R2 the chain
/// [q, p]; the stage list alone therefore describes all three families.
struct RWitness {
  Family family;
  std::vector<Polynomial> stages;
  std::vector<Polynomial> args;  // f_1, ..., f_m in the ideal's ring
  Polynomial target;
  Ideal ideal;

  /// Total number of extra arguments m.
  std::size_t arity() const;
  /// The single form in y_0..y_m obtained by substituting the stages.
  Polynomial composite() const;
  std::string describe() const;
};

/// Re-checks a witness: stage shapes for its family, P_K^0 membership of
/// every stage, and composite(target, args) ∈ I.
bool verify_witness(const RWitness& w, const FieldPtr& points_field);

/// R1 -> R2 (the inner y_0^n is a P_K^0(0) form) and R2 -> R3.
RWitness to_r2(const RWitness& w);
RWitness to_r3(const RWitness& w);

struct SearchResult {
  Family family;
  SearchBounds bounds;
  std::optional<RWitness> witness;
  /// Position of the witness in canonical order (1-based), or the size of the
  /// whole space when exhausted.
  std::uint64_t candidates_tested = 0;
  std::uint64_t structures = 0;  // composed forms in the space
  std::uint64_t arg_pool = 0;    // polynomials of degree <= max_deg_args

  bool exhausted() const noexcept { return !witness.has_value(); }
};

/// Bounded exhaustive search for p in the family and f_1..f_m with
/// p(f, f_1, ..., f_m) ∈ I. Forms are monic, of degree 1..max_deg_p, with
/// coefficients in the ring's field. Candidates run in canonical order:
/// m, then total form degree, then structure, then argument tuple
/// (lexicographic over the pool sorted by degree and canonical order).
SearchResult search_witness(const Polynomial& f, const Ideal& ideal, Family family, const SearchBounds& bounds,
                            const FieldPtr& points_field);

/// All monic forms of the given degree in `vars` variables with only the
/// trivial zero over K, in coefficient-vector order. Throws SizeOverflow if
/// the enumeration would exceed 2^22 forms.
std::vector<Polynomial> p0_forms(const RingPtr& yring, unsigned degree, const FieldPtr& points_field);

struct SuiteCheck {
  std::string group;  // a, b, c, d
  std::string name;
  bool passed;
  std::string detail;
  bool vacuous = false;
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  std::vector<SearchResult> searches;  // R1..R3 for the target, then the controls

  bool passed() const;
};

struct SuiteOptions {
  SearchBounds bounds{};
  /// Generators replacing <X1> in F_2[X1, X2], for negative controls.
  std::optional<std::string> ideal_override;
};

/// I = <X1> in F_2[X1, X2], K = F_2: (a) I(Z(I)) = I + Γ_2 = <X1, X2^2 - X2>,
/// also by the oracle; (b) that ideal is not homogeneous; (c) no R1/R2/R3
/// witness for X2^2 - X2 within the bounds; (d) witnesses for X1 in all three
/// families. Never throws for failed checks.
SuiteReport counterexample_suite(const SuiteOptions& options = {});

/// Throws SuiteFailure naming the first failed check.
void require_pass(const SuiteReport& report);

struct NonradicalInstance {
  Ideal ideal;       // I
  Ideal augmented;   // I + Γ_q*
  Ideal colon;       // (I + Γ_q*) : <X_i^d>
  Polynomial witness;
  std::uint64_t ideals_examined;
};

/// Homogeneous ideals with one or two monic generators of degree
/// 1..max_gen_degree over GF(q) in n+1 variables, by generator count, then
/// degrees, then form order. Returns the first with nonempty V where
/// I + Γ_q* differs from the colon result, with a witness f in
/// √(I + Γ_q*) \ (I + Γ_q*).
std::optional<NonradicalInstance> find_nonradical_instance(std::uint32_t q, std::size_t n,
                                                           unsigned max_gen_degree);

}  // namespace nullkit
