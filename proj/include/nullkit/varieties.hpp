#pragma once

#include <string>
#include <vector>

#include "nullkit/ideal.hpp"

namespace nullkit {

enum class SpaceKind { Affine, Projective };

/// Raw coordinates over the variety's field. Projective points are stored as
/// the representative whose first nonzero coordinate is 1.
using Point = std::vector<Coeff>;

struct Variety {
  SpaceKind kind;
  FieldPtr field;
  std::size_t ncoords;        // n for A^n, n+1 for P^n
  std::vector<Point> points;  // distinct, ascending lexicographic

  bool empty() const noexcept { return points.empty(); }
  std::size_t size() const noexcept { return points.size(); }
};

constexpr std::size_t kMaxPoints = 1'000'000;

/// All of A^n or P^n over `field`; `dim` is n. Throws SizeOverflow past
/// kMaxPoints.
Variety enumerate_space(const FieldPtr& field, std::size_t dim, SpaceKind kind);

/// Points of the space over `points_field` (one coordinate per ring variable)
/// where every generator vanishes. The ring's field must embed into
/// `points_field` or contain it. Projective zero sets require a homogeneous
/// ideal (NonHomogeneousProjective otherwise).
Variety zero_set(const Ideal& ideal, const FieldPtr& points_field, SpaceKind kind);

/// `(a1,a2)` or `[a0:a1]`.
std::string format_point(const FieldSpec& field, const Point& pt, SpaceKind kind);

/// Maximal ideal of an affine point, or <a_j X_i - a_i X_j : i < j> for a
/// projective one. The ring's field must be the point's field.
Ideal point_ideal(const RingPtr& ring, const Point& pt, SpaceKind kind);

/// Left fold of ideal_intersect over the point ideals in V's order.
/// Throws EmptyVariety for an empty V.
Ideal oracle_vanishing_ideal(const Variety& v, const RingPtr& ring);

}  // namespace nullkit
