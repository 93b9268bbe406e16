#include <gtest/gtest.h>

#include <random>

#include "../support.hpp"
#include "lawvere/error.hpp"

using namespace lawvere;
using namespace testing_support;

TEST(Rewrite, GroupNormalForms) {
  Trs R = group();
  Trs probe = parse_presentation(R"(
sorts G
op mul : G G -> G
op e : -> G
op inv : G -> G
var x y : G
rule a : mul(inv(mul(x, y)), mul(x, y)) -> e
rule b : inv(mul(inv(x), inv(y))) -> mul(y, x)
)");
  for (const Rule& r : probe.rules) EXPECT_EQ(normal_form(r.lhs, R), r.rhs) << r.name;
}

TEST(Rewrite, BudgetIsEnforced) {
  Trs R = parse_presentation(R"(
sorts X
op f : X -> X
op c : -> X
rule loop : f(c) -> f(c)
)");
  try {
    normal_form(R.rules[0].lhs, R, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
  CompletenessReport rep = check_complete(R);
  EXPECT_TRUE(rep.budget_failure.has_value() || !rep.termination_ok);
  EXPECT_FALSE(rep.certified());
}

TEST(Rewrite, FixturesAreCertified) {
  EXPECT_TRUE(check_complete(abelian()).certified());
  CompletenessReport g = check_complete(group());
  EXPECT_TRUE(g.certified());
  EXPECT_GT(g.critical_pairs, 0u);
}

TEST(Rewrite, UnjoinablePairIsReported) {
  Trs R = parse_presentation(R"(
sorts X
op f : X -> X
op g : X -> X
op a : -> X
op b : -> X
var x : X
rule r1 : f(g(x)) -> a
rule r2 : g(a) -> b
)");
  CompletenessReport rep = check_complete(R);
  EXPECT_FALSE(rep.locally_confluent);
  EXPECT_FALSE(rep.unjoinable.empty());
  try {
    require_certified(R);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CompletenessNotCertified);
  }
}

TEST(Rewrite, AbelianCriticalPairs) {
  auto cps = critical_pairs(abelian());
  // plus(zero, zero) is the only peak, reached from both orders.
  ASSERT_EQ(cps.size(), 2u);
  for (const auto& cp : cps) EXPECT_EQ(cp.left, cp.right);
}

TEST(Rewrite, AssumeTerminatingSkipsProbe) {
  CheckOptions opt;
  opt.assume_terminating = true;
  CompletenessReport rep = check_complete(group(), opt);
  EXPECT_TRUE(rep.termination_assumed);
  EXPECT_EQ(rep.probed_terms, 0u);
}

TEST(Rewrite, Degree) {
  EXPECT_EQ(degree(abelian()), 0u);
  EXPECT_EQ(degree(group()), 2u);
  Trs cube = parse_presentation(R"(
sorts X
op f : X -> X
op g : X X X -> X
var x : X
rule r : f(x) -> g(x, x, x)
)");
  EXPECT_EQ(degree(cube), 2u);
}

// Degree oracle: gcd of |#x(l) - #x(r)| over rules and lhs variables, computed by walking terms.
TEST(Rewrite, DegreeAgreesWithOccurrenceCounts) {
  for (const Trs& R : {abelian(), group()}) {
    std::uint64_t g = 0;
    for (const Rule& r : R.rules)
      for (std::size_t i = 0; i < r.context.size(); ++i) {
        auto l = static_cast<std::int64_t>(count_occurrences(r.lhs, static_cast<int>(i)));
        auto rr = static_cast<std::int64_t>(count_occurrences(r.rhs, static_cast<int>(i)));
        g = std::gcd(g, static_cast<std::uint64_t>(std::abs(l - rr)));
      }
    EXPECT_EQ(degree(R), g);
  }
}

TEST(Rewrite, ReduceDropsRedundantRulesAndNormalizesRhs) {
  Trs R = parse_presentation(R"(
sorts X
op plus : X X -> X
op zero : -> X
var x : X
rule r1 : plus(x, zero) -> x
rule r2 : plus(zero, x) -> x
rule r3 : plus(zero, zero) -> plus(zero, zero)
rule r4 : plus(plus(x, zero), zero) -> plus(x, zero)
)");
  Trs out = reduce_trs(R);
  ASSERT_EQ(out.rules.size(), 2u);
  EXPECT_EQ(out.rules[0].name, "r1");
  EXPECT_EQ(out.rules[1].name, "r2");
  EXPECT_TRUE(check_complete(out).certified());

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Term t = random_term(R.sig, 0, 4, {0, 0}, rng);
    EXPECT_EQ(normal_form(t, out), normal_form(t, abelian()));
  }
}

TEST(Rewrite, ReduceIsIdempotentOnReducedSystems) {
  EXPECT_EQ(reduce_trs(group()).rules, group().rules);
}
