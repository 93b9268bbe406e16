#include <gtest/gtest.h>

#include <random>

#include "../support.hpp"
#include "lawvere/error.hpp"

using namespace lawvere;
using namespace testing_support;

namespace {

Signature arith() {
  Signature sig;
  sig.add_sort("X");
  sig.add_op("f", {0, 0}, 0);
  sig.add_op("g", {0}, 0);
  sig.add_op("c", {}, 0);
  return sig;
}

Term x(int i) { return Term::var(i, 0); }

}  // namespace

TEST(Term, ApplicationChecksArityAndSorts) {
  Signature sig;
  SortId X = sig.add_sort("X"), Y = sig.add_sort("Y");
  OpId h = sig.add_op("h", {X}, Y);
  EXPECT_NO_THROW(Term::app(sig, h, {Term::var(0, X)}));
  EXPECT_THROW(Term::app(sig, h, {Term::var(0, Y)}), Error);
  EXPECT_THROW(Term::app(sig, h, {}), Error);
}

TEST(Term, PrintsPrefixSyntax) {
  Signature sig = arith();
  Term t = Term::app(0, 0, {x(0), Term::app(1, 0, {Term::app(2, 0, {})})});
  EXPECT_EQ(to_string(sig, t), "f(x1,g(c))");
}

TEST(Term, PositionsMatchSize) {
  Signature sig = arith();
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    Term t = random_term(sig, 0, 4, {0, 0}, rng);
    auto ps = positions(t);
    EXPECT_EQ(ps.size(), t.size());
    for (const Position& p : ps) EXPECT_EQ(replace_at(t, p, subterm_at(t, p)), t);
  }
}

TEST(Term, InvalidPositionThrows) {
  Term t = Term::app(0, 0, {x(0), x(1)});
  try {
    subterm_at(t, {3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidPosition);
  }
  EXPECT_THROW(subterm_at(t, {1, 1}), Error);
}

TEST(Term, RootPositionPrintsEpsilon) {
  EXPECT_EQ(position_string({}), "ε");
  EXPECT_EQ(position_string({1, 2}), "1.2");
}

// (t·σ)·τ == t·(σ;τ), with σ;τ computed pointwise.
TEST(Term, SubstitutionComposes) {
  Signature sig = arith();
  std::mt19937_64 rng(2);
  const std::vector<SortId> ctx{0, 0, 0};
  for (int k = 0; k < 100; ++k) {
    Term t = random_term(sig, 0, 3, ctx, rng);
    std::vector<Term> s, u;
    for (int i = 0; i < 3; ++i) s.push_back(random_term(sig, 0, 2, ctx, rng));
    for (int i = 0; i < 3; ++i) u.push_back(random_term(sig, 0, 2, ctx, rng));
    std::vector<Term> su;
    for (const Term& a : s) su.push_back(substitute(a, std::span<const Term>(u)));
    EXPECT_EQ(substitute(substitute(t, std::span<const Term>(s)), std::span<const Term>(u)),
              substitute(t, std::span<const Term>(su)));
  }
}

TEST(Term, VarCountAgreesWithWalk) {
  Signature sig = arith();
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    Term t = random_term(sig, 0, 4, {0, 0}, rng);
    for (int i = 0; i < 2; ++i) EXPECT_EQ(var_count(t, i), count_occurrences(t, i));
  }
}

TEST(Morphism, CanonicalizeRoundTrip) {
  Signature sig = arith();
  std::mt19937_64 rng(4);
  const std::vector<SortId> ctx{0, 0, 0, 0};
  for (int k = 0; k < 200; ++k) {
    std::vector<Term> ts;
    for (int i = 0; i < 2; ++i) ts.push_back(random_term(sig, 0, 3, ctx, rng));
    auto [ess, pi] = canonicalize(ctx, ts);
    EXPECT_TRUE(is_essential(ess));
    EXPECT_EQ(compose_raw(ess, pi.as_morphism()), (Morphism{ctx, ts}));
    EXPECT_EQ(canonicalize(ess.context, ess.terms).first, ess);
  }
}

TEST(Morphism, Classification) {
  Morphism swap{{0, 0}, {x(1), x(0)}};
  Morphism dup{{0}, {x(0), x(0)}};
  Morphism drop{{0, 0}, {x(1)}};
  EXPECT_TRUE(is_partial_permutation(swap));
  EXPECT_TRUE(is_partial_permutation(drop));
  EXPECT_FALSE(is_partial_permutation(dup));
  EXPECT_TRUE(is_identity(identity({0, 0})));
  EXPECT_FALSE(is_essential(swap));
  EXPECT_FALSE(is_essential(drop));
  EXPECT_TRUE(is_essential(dup));
}

TEST(Morphism, ComposeChecksArity) {
  Morphism f{{0, 0}, {Term::app(0, 0, {x(0), x(1)})}};
  Morphism g{{0}, {x(0)}};
  EXPECT_THROW(compose_raw(f, g), Error);
  Morphism h{{0}, {x(0), x(0)}};
  EXPECT_EQ(compose_raw(f, h).terms[0], Term::app(0, 0, {x(0), x(0)}));
}
