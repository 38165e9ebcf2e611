#include <gtest/gtest.h>

#include <algorithm>

#include "nullkit/varieties.hpp"

using namespace nullkit;

namespace {

Ideal I(const RingPtr& ring, std::string_view text) { return Ideal(ring, parse_polynomial_list(text, ring)); }

std::vector<std::string> points_text(const Variety& v) {
  std::vector<std::string> out;
  for (const auto& pt : v.points) out.push_back(format_point(*v.field, pt, v.kind));
  return out;
}

std::vector<std::string> gb_text(const Ideal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.groebner().gens()) out.push_back(g.to_string());
  return out;
}

// Every nonzero polynomial of degree <= 2 in the ring, built from its
// coefficient vector over GF(2).
std::vector<Polynomial> all_polys_deg2(const RingPtr& ring, bool homogeneous_only) {
  std::vector<Monomial> monos;
  const std::size_t n = ring->nvars();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Monomial m(n);
      m.set(i, 1);
      m.set(j, m[j] + 1);
      monos.push_back(m);
    }
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m(n);
    m.set(i, 1);
    monos.push_back(m);
  }
  if (!homogeneous_only) monos.push_back(Monomial(n));
  std::vector<Polynomial> out;
  for (std::uint32_t mask = 1; mask < (1u << monos.size()); ++mask) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < monos.size(); ++k)
      if (mask >> k & 1) terms.push_back({monos[k], 1});
    auto f = Polynomial::from_terms(ring, terms);
    if (!homogeneous_only || f.is_homogeneous()) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST(Varieties, EnumerateSpecExamples) {
  auto f2 = make_field(2), f3 = make_field(3);
  auto p1 = enumerate_space(f2, 1, SpaceKind::Projective);
  EXPECT_EQ(points_text(p1), (std::vector<std::string>{"[0:1]", "[1:0]", "[1:1]"}));
  EXPECT_EQ(enumerate_space(f2, 2, SpaceKind::Projective).size(), 7u);
  EXPECT_EQ(enumerate_space(f3, 2, SpaceKind::Affine).size(), 9u);
}

TEST(Varieties, EnumerateCardinalities) {
  for (auto [p, e] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{5, 1}}) {
    auto field = make_field(p, e);
    const std::size_t q = field->q();
    std::size_t qn = 1;
    for (std::size_t n = 0; n <= 3; ++n, qn *= q) {
      auto a = enumerate_space(field, n, SpaceKind::Affine);
      auto pr = enumerate_space(field, n, SpaceKind::Projective);
      EXPECT_EQ(a.size(), qn);
      EXPECT_EQ(pr.size(), (qn * q - 1) / (q - 1));
      EXPECT_TRUE(std::is_sorted(pr.points.begin(), pr.points.end()));
      EXPECT_EQ(std::adjacent_find(pr.points.begin(), pr.points.end()), pr.points.end());
      for (const auto& pt : pr.points) {
        auto lead = std::find_if(pt.begin(), pt.end(), [](Coeff c) { return c != 0; });
        ASSERT_NE(lead, pt.end());
        EXPECT_EQ(*lead, 1u);
      }
    }
  }
  try {
    enumerate_space(make_field(2, 4), 5, SpaceKind::Affine);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeOverflow);
  }
}

TEST(Varieties, ZeroSetSpecExamples) {
  auto f2 = make_field(2);
  auto r = make_ring(f2, 2);
  EXPECT_EQ(points_text(zero_set(I(r, "X0"), f2, SpaceKind::Projective)), (std::vector<std::string>{"[0:1]"}));
  EXPECT_EQ(zero_set(Ideal::zero(r), f2, SpaceKind::Projective).size(), 3u);
  EXPECT_TRUE(zero_set(Ideal::unit(r), f2, SpaceKind::Projective).empty());
  EXPECT_EQ(zero_set(Ideal::zero(r), f2, SpaceKind::Affine).size(), 4u);
  try {
    zero_set(I(r, "X0 + 1"), f2, SpaceKind::Projective);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonHomogeneousProjective);
  }
}

TEST(Varieties, ZeroSetOverExtension) {
  auto f2 = make_field(2), f4 = make_field(2, 2);
  auto r = make_ring(f2, 1);
  auto v = zero_set(I(r, "X0^2 + X0 + 1"), f4, SpaceKind::Affine);
  EXPECT_EQ(points_text(v), (std::vector<std::string>{"(t)", "(t+1)"}));
  EXPECT_TRUE(zero_set(I(r, "X0^2 + X0 + 1"), f2, SpaceKind::Affine).empty());
}

TEST(Varieties, PointIdealSpecExamples) {
  auto f2 = make_field(2);
  auto r = make_ring(f2, {"X1", "X2"});
  EXPECT_EQ(gb_text(point_ideal(r, {0, 1}, SpaceKind::Affine)), (std::vector<std::string>{"X2 + 1", "X1"}));
  auto p = make_ring(f2, 2);
  EXPECT_EQ(gb_text(point_ideal(p, {0, 1}, SpaceKind::Projective)), (std::vector<std::string>{"X0"}));
  EXPECT_EQ(gb_text(point_ideal(p, {1, 1}, SpaceKind::Projective)), (std::vector<std::string>{"X0 + X1"}));
}

TEST(Varieties, OracleSpecExamples) {
  auto f2 = make_field(2);
  auto r1 = make_ring(f2, {"X1"});
  EXPECT_EQ(gb_text(oracle_vanishing_ideal(enumerate_space(f2, 1, SpaceKind::Affine), r1)),
            (std::vector<std::string>{"X1^2 + X1"}));
  auto r = make_ring(f2, 2);
  EXPECT_EQ(gb_text(oracle_vanishing_ideal(enumerate_space(f2, 1, SpaceKind::Projective), r)),
            (std::vector<std::string>{"X0^2*X1 + X0*X1^2"}));
  Variety single{SpaceKind::Projective, f2, 2, {{0, 1}}};
  EXPECT_EQ(gb_text(oracle_vanishing_ideal(single, r)), (std::vector<std::string>{"X0"}));
  Variety none{SpaceKind::Projective, f2, 2, {}};
  try {
    oracle_vanishing_ideal(none, r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyVariety);
  }
}

// zero_set(oracle(V)) == V for V = Z(f), all f of degree <= 2 over GF(2),
// n <= 2, both kinds; the oracle is also independent of the fold order and
// every member vanishes under all scalings of the representatives.
TEST(Varieties, OracleRoundTrip) {
  auto f2 = make_field(2);
  for (std::size_t nvars = 1; nvars <= 3; ++nvars) {
    auto r = make_ring(f2, nvars);
    for (SpaceKind kind : {SpaceKind::Affine, SpaceKind::Projective}) {
      if (kind == SpaceKind::Affine && nvars > 2) continue;
      for (const auto& f : all_polys_deg2(r, kind == SpaceKind::Projective)) {
        Ideal ideal(r, {f});
        auto v = zero_set(ideal, f2, kind);
        if (v.empty()) continue;
        auto oracle = oracle_vanishing_ideal(v, r);
        EXPECT_EQ(zero_set(oracle, f2, kind).points, v.points) << f.to_string();
        Variety reversed = v;
        std::reverse(reversed.points.begin(), reversed.points.end());
        EXPECT_EQ(oracle_vanishing_ideal(reversed, r).groebner().gens(), oracle.groebner().gens());
        EXPECT_TRUE(oracle.contains(f));
        if (kind == SpaceKind::Projective) EXPECT_TRUE(is_homogeneous_ideal(oracle));
      }
    }
  }
}

TEST(Varieties, ProjectiveScalingWellDefined) {
  auto f3 = make_field(3);
  auto r = make_ring(f3, 3);
  auto ideal = I(r, "X0^2 - X1*X2");
  auto v = zero_set(ideal, f3, SpaceKind::Projective);
  ASSERT_EQ(v.size(), 4u);
  auto oracle = oracle_vanishing_ideal(v, r);
  auto all = enumerate_space(f3, 2, SpaceKind::Projective);
  for (const auto& g : oracle.groebner().gens())
    for (const auto& pt : all.points) {
      const bool zero = evaluate_raw(g, pt) == 0;
      for (Coeff lambda = 1; lambda < 3; ++lambda) {
        Point scaled;
        for (Coeff c : pt) scaled.push_back(f3->mul(lambda, c));
        EXPECT_EQ(evaluate_raw(g, scaled) == 0, zero);
      }
    }
}
