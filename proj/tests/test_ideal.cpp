#include <gtest/gtest.h>

#include <functional>

#include "nullkit/ideal.hpp"
#include "nullkit/parallel.hpp"

using namespace nullkit;

namespace {

Ideal I(const RingPtr& ring, std::string_view text) { return Ideal(ring, parse_polynomial_list(text, ring)); }

std::vector<std::string> gb_text(const Ideal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.groebner().gens()) out.push_back(g.to_string());
  return out;
}

// All monomials of total degree <= d in n variables.
std::vector<Monomial> monomials_upto(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  Monomial m(n);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == n) {
      out.push_back(m);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      m.set(i, k);
      rec(i + 1, left - k);
    }
    m.set(i, 0);
  };
  rec(0, d);
  return out;
}

}  // namespace

TEST(Ideal, SumSpecExamples) {
  auto r = make_ring(make_field(2), {"X1", "X2"});
  auto s = ideal_sum(I(r, "X1"), I(r, "X1^2 - X1, X2^2 - X2"));
  EXPECT_EQ(gb_text(s), (std::vector<std::string>{"X1", "X2^2 + X2"}));
  EXPECT_TRUE(ideal_equal(ideal_sum(I(r, "X1"), Ideal::zero(r)), I(r, "X1")));
  EXPECT_TRUE(ideal_sum(I(r, "X1"), Ideal::unit(r)).is_unit());
}

TEST(Ideal, IntersectSpecExamples) {
  auto r = make_ring(make_field(2), 2);
  EXPECT_EQ(gb_text(ideal_intersect(I(r, "X0"), I(r, "X1"))), (std::vector<std::string>{"X0*X1"}));
  auto r1 = make_ring(make_field(2), {"X1"});
  EXPECT_EQ(gb_text(ideal_intersect(I(r1, "X1"), I(r1, "X1 + 1"))), (std::vector<std::string>{"X1^2 + X1"}));
  auto a = I(r, "X0^2 + X1, X0*X1");
  EXPECT_TRUE(ideal_equal(ideal_intersect(a, a), a));
  EXPECT_TRUE(ideal_intersect(a, Ideal::zero(r)).is_zero());
}

// I ∩ J is contained in both, and contains the product.
TEST(Ideal, IntersectBounds) {
  auto r = make_ring(make_field(3), 3);
  auto a = I(r, "X0^2 - X1, X2"), b = I(r, "X0*X1 - 1, X1 + X2");
  auto meet = ideal_intersect(a, b);
  EXPECT_TRUE(a.contains(meet));
  EXPECT_TRUE(b.contains(meet));
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) EXPECT_TRUE(meet.contains(f * g));
}

TEST(Ideal, QuotientSpecExamples) {
  auto r = make_ring(make_field(2), 2);
  EXPECT_EQ(gb_text(ideal_quotient(I(r, "X0"), I(r, "X0^2, X1^2"))), (std::vector<std::string>{"X0"}));
  EXPECT_EQ(gb_text(ideal_quotient(I(r, "X0^2"), I(r, "X0"))), (std::vector<std::string>{"X0"}));
  auto a = I(r, "X0^2 + X1^3, X0*X1");
  EXPECT_TRUE(ideal_equal(ideal_quotient(a, Ideal::unit(r)), a));
  try {
    ideal_quotient(a, I(r, "0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDivisorIdeal);
  }
}

// Brute force over monomials of degree <= 4 in <= 3 variables over GF(2):
// m ∈ I:J  iff  m * gens(J) ⊆ I.
TEST(Ideal, QuotientMaximalityOnMonomials) {
  auto f2 = make_field(2);
  struct Case {
    std::size_t n;
    const char* i;
    const char* j;
  } cases[] = {
      {2, "X0^2*X1, X0*X1^3", "X0, X1"},
      {2, "X0^3, X1^2", "X0*X1"},
      {3, "X0*X1, X1*X2, X0^2*X2", "X0, X2"},
      {3, "X0^2 + X1*X2, X2^3", "X2, X0 + X1"},
      {3, "X0*X1*X2, X0^3 + X1^3", "X0^2, X1^2, X2^2"},
  };
  for (const auto& c : cases) {
    auto r = make_ring(f2, c.n);
    auto a = I(r, c.i), b = I(r, c.j);
    auto quot = ideal_quotient(a, b);
    for (const auto& f : quot.gens())
      for (const auto& g : b.gens()) EXPECT_TRUE(a.contains(f * g));
    for (const auto& m : monomials_upto(c.n, 4)) {
      auto mono = Polynomial::monomial(r, m);
      bool by_definition = true;
      for (const auto& g : b.gens()) by_definition = by_definition && a.contains(mono * g);
      EXPECT_EQ(quot.contains(mono), by_definition) << c.i << " : " << c.j << " at " << mono.to_string();
    }
    EXPECT_TRUE(quot.contains(a));
  }
}

TEST(Ideal, SaturateSpecExamples) {
  auto r = make_ring(make_field(2), 2);
  auto m = maximal_homogeneous_ideal(r);
  auto sat = ideal_saturate(I(r, "X0*X1, X0^2"), m);
  EXPECT_EQ(gb_text(sat.ideal), (std::vector<std::string>{"X0"}));
  EXPECT_EQ(sat.iterations, 2u);
  EXPECT_EQ(gb_text(ideal_saturate(I(r, "X0"), m).ideal), (std::vector<std::string>{"X0"}));
  EXPECT_TRUE(ideal_saturate(Ideal::unit(r), I(r, "X0")).ideal.is_unit());
}

TEST(Ideal, SaturationIsFixedPoint) {
  auto r = make_ring(make_field(3), 3);
  auto a = I(r, "X0^3*X1, X0^2*X2^2, X1^4");
  auto j = I(r, "X0, X1");
  auto sat = ideal_saturate(a, j);
  EXPECT_TRUE(ideal_equal(ideal_quotient(sat.ideal, j), sat.ideal));
  auto once = ideal_quotient(a, j);
  EXPECT_TRUE(once.contains(a));
  EXPECT_TRUE(sat.ideal.contains(once));
  EXPECT_GE(sat.iterations, 2u);
}

TEST(Ideal, EliminateSpecExamples) {
  auto r = make_ring(make_field(3), 2);
  EXPECT_EQ(gb_text(eliminate(I(r, "X0 - X1^2, X1 - 1"), 1)), (std::vector<std::string>{"X1 + 2"}));
  auto a = I(r, "X0^2 + X1, X0*X1");
  EXPECT_TRUE(ideal_equal(eliminate(a, 0), a));
  auto twisted = make_ring(make_field(5), {"t", "x", "y"});
  auto e = eliminate(I(twisted, "x - t^2, y - t^3"), 1);
  EXPECT_EQ(gb_text(e), (std::vector<std::string>{"x^3 + 4*y^2"}));
}

TEST(Ideal, HomogeneitySpecExamples) {
  auto r = make_ring(make_field(2), {"X1", "X2"});
  EXPECT_FALSE(is_homogeneous_ideal(I(r, "X1, X2^2 - X2")));
  auto r2 = make_ring(make_field(2), 2);
  EXPECT_TRUE(is_homogeneous_ideal(I(r2, "X0^2*X1 - X0*X1^2")));
  EXPECT_TRUE(is_homogeneous_ideal(Ideal::zero(r2)));
  // inhomogeneous generators of a homogeneous ideal
  EXPECT_TRUE(is_homogeneous_ideal(I(r2, "X0 + X1^2, X1^2")));
}

TEST(Ideal, RadicalMembershipSpecExamples) {
  auto r = make_ring(make_field(2), 2);
  EXPECT_TRUE(radical_membership(parse_polynomial("X0*X1", r), I(r, "X0^2*X1^2")));
  EXPECT_FALSE(radical_membership(parse_polynomial("X0", r), I(r, "X1")));
  EXPECT_TRUE(radical_membership(parse_polynomial("X0 + X1", r), I(r, "X0^2 + X1^2")));
  EXPECT_TRUE(radical_membership(Polynomial(r), I(r, "X1")));
}

// Agreement with a direct search for f^k ∈ I, k <= 8.
TEST(Ideal, RadicalMembershipMatchesPowerSearch) {
  auto r = make_ring(make_field(2), 2);
  const char* ideals[] = {"X0^2, X1^3", "X0^2*X1", "X0^3 + X0*X1^2", "X0^2 + X1, X1^2"};
  const char* candidates[] = {"X0", "X1", "X0*X1", "X0 + X1", "X0^2 + X1", "X1 + 1", "X0*X1 + X1"};
  for (const char* it : ideals) {
    auto a = I(r, it);
    for (const auto& g : a.gens()) EXPECT_TRUE(radical_membership(g, a));
    for (const char* ct : candidates) {
      auto f = parse_polynomial(ct, r);
      bool power = false;
      Polynomial acc = f;
      for (int k = 1; k <= 8 && !power; ++k, acc *= f) power = a.contains(acc);
      EXPECT_EQ(radical_membership(f, a), power) << ct << " in rad " << it;
    }
  }
}

TEST(Ideal, CacheIsSharedAndStable) {
  auto r = make_ring(make_field(3), 3);
  auto a = I(r, "X0^2 - X1, X1^2 - X2, X0*X2 - 1");
  const auto& first = a.groebner();
  Ideal copy = a;
  EXPECT_EQ(&copy.groebner(), &first);
  EXPECT_EQ(a.groebner(MonomialOrder::lex()).order(), MonomialOrder::lex());
  auto bases = parallel_map(8, [&](std::size_t) { return a.groebner(MonomialOrder::block(1)).gens(); });
  for (const auto& b : bases) EXPECT_EQ(b, bases[0]);
}

TEST(Ideal, QuotientIsThreadCountIndependent) {
  auto r = make_ring(make_field(2), 3);
  auto a = I(r, "X0*X1*X2, X0^2*X1 + X1^3, X2^4");
  auto j = I(r, "X0^2, X1^2, X2^2");
  set_thread_count(1);
  auto serial = ideal_quotient(a, j).groebner().gens();
  set_thread_count(4);
  auto threaded = ideal_quotient(a, j).groebner().gens();
  EXPECT_EQ(serial, threaded);
}
