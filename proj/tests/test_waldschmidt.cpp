#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sfborel/waldschmidt.hpp"

namespace sfborel {
namespace {

SquareFreeMonomial M(std::vector<Index> v) { return SquareFreeMonomial(std::move(v)); }
const SquareFreeMonomial kWorked = SquareFreeMonomial({2, 3, 5, 6, 8, 10});
const SquareFreeMonomial kPi = parse_monomial("33215..104348");
const SquareFreeMonomial kRecursive = parse_monomial("3..5,8..10,48..50,98..100");

TEST(WaldschmidtLP, Examples) {
  auto r = waldschmidt_lp(kWorked);
  EXPECT_EQ(r.value, make_rational(19, 6));
  EXPECT_EQ(r.method, Method::lp_exact);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(waldschmidt_lp(M({2, 3})).value, make_rational(3, 2));
  EXPECT_EQ(waldschmidt_lp(M({1, 2, 3, 4})).value, 4);
}

TEST(WaldschmidtLP, RefusesHugeInput) {
  try {
    waldschmidt_lp(kPi);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("C(104348,33215)"), std::string::npos);
  }
}

TEST(UpperBound, Examples) {
  EXPECT_EQ(upper_bound(kWorked), make_rational(19, 6));
  EXPECT_EQ(upper_bound(kRecursive), make_rational(155, 42));
  EXPECT_EQ(upper_bound(kPi), make_rational(104348, 33215));
}

TEST(CoarseUpperBound, Examples) {
  EXPECT_EQ(coarse_upper_bound(kWorked), 4);
  EXPECT_EQ(coarse_upper_bound(kPi), make_rational(104348, 33215));
  EXPECT_EQ(coarse_upper_bound(M({1})), 1);
}

TEST(UpperBoundCertificate, WorkedExampleSegments) {
  auto c = upper_bound_certificate(kWorked);
  EXPECT_EQ(c.a, 3);
  EXPECT_EQ(c.bound, make_rational(19, 6));
  // 1..3 at 1/2, 4..6 at 1/3, then (t_j - t_{j+1}) / ((i_{t_j} - i_{t_{j+1}}) a):
  // 7..8 at 1/6, 9..10 at 1/6.
  std::vector<Rational> expected{make_rational(1, 2), make_rational(1, 2), make_rational(1, 2),
                                 make_rational(1, 3), make_rational(1, 3), make_rational(1, 3),
                                 make_rational(1, 6), make_rational(1, 6), make_rational(1, 6),
                                 make_rational(1, 6)};
  EXPECT_EQ(c.y, expected);
  ASSERT_EQ(c.segments.size(), 4u);
  EXPECT_EQ(c.segments[0].first, 1);
  EXPECT_EQ(c.segments[0].last, 3);
}

TEST(UpperBoundCertificate, DegenerateCases) {
  auto one = upper_bound_certificate(M({1}));
  EXPECT_EQ(one.y, std::vector<Rational>{1});
  EXPECT_EQ(one.bound, 1);

  auto pi = upper_bound_certificate(kPi);
  EXPECT_EQ(pi.y.size(), 104348u);
  EXPECT_EQ(pi.y.front(), make_rational(1, 33215));
  EXPECT_EQ(pi.y.back(), make_rational(1, 33215));
  EXPECT_EQ(pi.bound, make_rational(104348, 33215));
}

// The certificate covers every row of the full prime matrix, not just the
// diagonal blocks it was checked against.
TEST(UpperBoundCertificate, CoversFullMatrixOnSmallMonomials) {
  for (const auto& m : oracle::all_monomials(9)) {
    auto c = upper_bound_certificate(m);
    auto a = prime_matrix(associated_primes(m));
    for (const auto& row : a.rows) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j]) lhs += c.y[j];
      ASSERT_GE(lhs, 1) << m.to_string();
    }
  }
}

TEST(UpperBoundCertificate, RandomSweep) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    auto m = oracle::random_monomial(rng, 200);
    ASSERT_NO_THROW(upper_bound_certificate(m)) << m.to_string();
  }
}

TEST(ExactFormula, Examples) {
  auto pi = exact_formula(kPi);
  ASSERT_TRUE(pi);
  EXPECT_EQ(pi->value, make_rational(104348, 33215));
  EXPECT_EQ(pi->method, Method::closed_form);
  EXPECT_EQ(exact_formula(M({2, 3}))->value, make_rational(3, 2));
  EXPECT_FALSE(exact_formula(kWorked));
}

TEST(ConstructForRational, Examples) {
  EXPECT_EQ(construct_for_rational(104348, 33215), kPi);
  EXPECT_EQ(construct_for_rational(1, 1), M({1}));
  EXPECT_EQ(construct_for_rational(5, 5), M({1}));
  EXPECT_EQ(construct_for_rational(7, 4), M({4, 5, 6, 7}));
  EXPECT_EQ(construct_for_rational(14, 8), M({4, 5, 6, 7}));
  EXPECT_EQ(waldschmidt_lp(construct_for_rational(7, 4)).value, make_rational(7, 4));
  EXPECT_EQ(construct_for_rational(parse_rational("104348/33215")), kPi);
}

TEST(ConstructForRational, Errors) {
  EXPECT_THROW(construct_for_rational(3, 4), std::invalid_argument);
  EXPECT_THROW(construct_for_rational(0, 1), std::invalid_argument);
  EXPECT_THROW(construct_for_rational(3, -1), std::invalid_argument);
  EXPECT_THROW(construct_for_rational(make_rational(1, 2)), std::invalid_argument);
}

TEST(LowerBound, Examples) {
  EXPECT_EQ(lower_bound(kRecursive), make_rational(982, 267));
  EXPECT_EQ(lower_bound(parse_monomial("3..5,8..10")), make_rational(8, 3));
  EXPECT_EQ(lower_bound(kPi), make_rational(104348, 33215));
}

TEST(ShiftLast, Examples) {
  EXPECT_EQ(shift_last(kWorked, 1), M({2, 3, 5, 6, 8, 11}));
  EXPECT_EQ(shift_last(M({2, 3}), 0), M({2, 3}));
  EXPECT_EQ(shift_last(M({2, 3}), 2), M({2, 5}));
  EXPECT_EQ(waldschmidt_lp(M({2, 5})).value, make_rational(3, 2));
  EXPECT_THROW(shift_last(M({2, 3}), -1), std::invalid_argument);
}

TEST(WaldschmidtAuto, Dispatch) {
  auto pi = waldschmidt_auto(kPi);
  ASSERT_TRUE(std::holds_alternative<ExactResult>(pi));
  EXPECT_EQ(std::get<ExactResult>(pi).method, Method::closed_form);
  EXPECT_EQ(std::get<ExactResult>(pi).value, make_rational(104348, 33215));

  auto worked = waldschmidt_auto(kWorked);
  ASSERT_TRUE(std::holds_alternative<ExactResult>(worked));
  EXPECT_EQ(std::get<ExactResult>(worked).method, Method::lp_exact);
  EXPECT_EQ(std::get<ExactResult>(worked).value, make_rational(19, 6));

  auto rec = waldschmidt_auto(kRecursive);
  ASSERT_TRUE(std::holds_alternative<BoundInterval>(rec));
  EXPECT_EQ(std::get<BoundInterval>(rec).lower, make_rational(982, 267));
  EXPECT_EQ(std::get<BoundInterval>(rec).upper, make_rational(155, 42));
}

TEST(WaldschmidtAuto, FallsBackWhenSolverCapIsTight) {
  SolverLimits tight;
  tight.max_rows = 3;
  auto r = waldschmidt_auto(kWorked, kDefaultEnumerationCap, tight);
  ASSERT_TRUE(std::holds_alternative<BoundInterval>(r));
  EXPECT_LE(std::get<BoundInterval>(r).lower, make_rational(19, 6));
}

TEST(Waldschmidt, SandwichAndClosedFormOnSmallMonomials) {
  for (const auto& m : oracle::all_monomials(10)) {
    Rational lp = waldschmidt_lp(m).value;
    ASSERT_LE(lower_bound(m), lp) << m.to_string();
    ASSERT_LE(lp, upper_bound(m)) << m.to_string();
    ASSERT_LE(upper_bound(m), coarse_upper_bound(m)) << m.to_string();
    if (auto f = exact_formula(m)) {
      ASSERT_EQ(f->value, lp) << m.to_string();
      ASSERT_EQ(f->value, upper_bound(m)) << m.to_string();
    }
  }
}

TEST(Waldschmidt, TrailingVariablesDoNotMatter) {
  // The LP is posed in i_s variables; padding with zero columns changes nothing.
  for (const auto& m : oracle::all_monomials(6)) {
    auto sys = associated_primes(m);
    auto a = prime_matrix(sys);
    for (auto& row : a.rows) row.resize(row.size() + 3, 0);
    a.n_cols += 3;
    ASSERT_EQ(solve_covering_lp(CoveringLP(a)).value, waldschmidt_lp(m).value) << m.to_string();
  }
}

TEST(Waldschmidt, RangeMonomials) {
  for (Index n = 1; n <= 10; ++n)
    for (Index i = 1; i <= n; ++i)
      ASSERT_EQ(waldschmidt_lp(SquareFreeMonomial::range(i, n)).value, make_rational(n, i));
}

TEST(MethodTag, Names) {
  EXPECT_EQ(method_tag(Method::lp_exact), "lp-exact");
  EXPECT_EQ(method_tag(Method::recursive_lower), "recursive-lower");
}

}  // namespace
}  // namespace sfborel
