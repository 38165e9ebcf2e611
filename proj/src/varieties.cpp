#include "nullkit/varieties.hpp"

#include <algorithm>

#include "nullkit/parallel.hpp"

namespace nullkit {

namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > kMaxPoints / base + 1) return kMaxPoints + 1;
    out *= base;
  }
  return out;
}

// Advances `digits` as a base-q counter; false once it wraps around.
bool next_tuple(std::vector<Coeff>& digits, std::size_t from, Coeff q) {
  for (std::size_t i = digits.size(); i-- > from;) {
    if (++digits[i] < q) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

Variety enumerate_space(const FieldPtr& field, std::size_t dim, SpaceKind kind) {
  const std::size_t q = field->q();
  const std::size_t ncoords = kind == SpaceKind::Affine ? dim : dim + 1;
  const std::size_t total = kind == SpaceKind::Affine
                                ? checked_pow(q, dim)
                                : (checked_pow(q, dim + 1) - 1) / (q - 1);
  if (total > kMaxPoints)
    throw Error(ErrorKind::SizeOverflow, "space has more than " + std::to_string(kMaxPoints) + " points");

  Variety v{kind, field, ncoords, {}};
  v.points.reserve(total);
  if (kind == SpaceKind::Affine) {
    Point pt(ncoords, 0);
    do v.points.push_back(pt);
    while (next_tuple(pt, 0, field->q()));
  } else {
    // Leading 1 at position `lead`, zeros before it, anything after it.
    for (std::size_t lead = ncoords; lead-- > 0;) {
      Point pt(ncoords, 0);
      pt[lead] = 1;
      do v.points.push_back(pt);
      while (next_tuple(pt, lead + 1, field->q()));
    }
  }
  std::sort(v.points.begin(), v.points.end());
  return v;
}

Variety zero_set(const Ideal& ideal, const FieldPtr& points_field, SpaceKind kind) {
  const RingPtr& ring = ideal.ring();
  const FieldPtr& coeffs = ring->field;
  if (!embeds_into(*coeffs, *points_field) && !embeds_into(*points_field, *coeffs))
    throw Error(ErrorKind::InconsistentTower, coeffs->name() + " and " + points_field->name() +
                                                  " do not lie in one tower");

  std::vector<Polynomial> tests;
  for (const auto& g : ideal.gens()) {
    if (g.is_zero()) continue;
    if (kind == SpaceKind::Projective && !g.is_homogeneous()) {
      // Generators of a homogeneous ideal may be inhomogeneous; their
      // components then all lie in the ideal and are tested separately.
      if (!is_homogeneous_ideal(ideal))
        throw Error(ErrorKind::NonHomogeneousProjective, "projective zero set of an inhomogeneous ideal");
      for (auto& c : homogeneity(g).components) tests.push_back(std::move(c.poly));
    } else {
      tests.push_back(g);
    }
  }

  const std::size_t ncoords = ring->nvars();
  const std::size_t dim = kind == SpaceKind::Affine ? ncoords : ncoords - (ncoords > 0 ? 1 : 0);
  if (kind == SpaceKind::Projective && ncoords == 0)
    throw Error(ErrorKind::DimensionMismatch, "projective space needs at least one coordinate");
  Variety space = enumerate_space(points_field, dim, kind);

  const bool direct = same_field(coeffs, points_field);
  auto vanishes = [&](const Point& pt) {
    if (direct) {
      for (const auto& f : tests)
        if (evaluate_raw(f, pt) != 0) return false;
      return true;
    }
    std::vector<FieldElement> coords;
    coords.reserve(pt.size());
    for (Coeff c : pt) coords.emplace_back(points_field, c);
    for (const auto& f : tests)
      if (!evaluate(f, coords).is_zero()) return false;
    return true;
  };

  // Chunked so each task does a reasonable amount of work.
  constexpr std::size_t kChunk = 256;
  const std::size_t chunks = (space.points.size() + kChunk - 1) / kChunk;
  auto kept = parallel_map(chunks, [&](std::size_t c) {
    std::vector<Point> out;
    const std::size_t end = std::min(space.points.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i)
      if (vanishes(space.points[i])) out.push_back(space.points[i]);
    return out;
  });
  Variety v{kind, points_field, ncoords, {}};
  for (auto& part : kept)
    for (auto& pt : part) v.points.push_back(std::move(pt));
  return v;
}

std::string format_point(const FieldSpec& field, const Point& pt, SpaceKind kind) {
  const bool affine = kind == SpaceKind::Affine;
  std::string out = affine ? "(" : "[";
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (i) out += affine ? "," : ":";
    out += field.format(pt[i]);
  }
  return out + (affine ? ")" : "]");
}

Ideal point_ideal(const RingPtr& ring, const Point& pt, SpaceKind kind) {
  if (pt.size() != ring->nvars())
    throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(pt.size()) +
                                                  " coordinates, ring has " +
                                                  std::to_string(ring->nvars()) + " variables");
  std::vector<Polynomial> gens;
  if (kind == SpaceKind::Affine) {
    for (std::size_t i = 0; i < pt.size(); ++i)
      gens.push_back(Polynomial::variable(ring, i) - Polynomial::constant(ring, pt[i]));
  } else {
    for (std::size_t i = 0; i < pt.size(); ++i)
      for (std::size_t j = i + 1; j < pt.size(); ++j) {
        auto minor = Polynomial::variable(ring, i).scale(pt[j]) -
                     Polynomial::variable(ring, j).scale(pt[i]);
        if (!minor.is_zero()) gens.push_back(std::move(minor));
      }
  }
  return Ideal(ring, std::move(gens));
}

Ideal oracle_vanishing_ideal(const Variety& v, const RingPtr& ring) {
  if (v.empty()) throw Error(ErrorKind::EmptyVariety, "vanishing ideal of an empty variety");
  if (!same_field(ring->field, v.field))
    throw Error(ErrorKind::FieldMismatch, "oracle ring must be over the point field");
  Ideal acc = point_ideal(ring, v.points.front(), v.kind).reduced();
  for (std::size_t i = 1; i < v.points.size(); ++i)
    acc = ideal_intersect(acc, point_ideal(ring, v.points[i], v.kind));
  return acc.reduced();
}

}  // namespace nullkit
