#include <gtest/gtest.h>

#include "../support.hpp"

using namespace lawvere;
using namespace testing_support;

namespace {

Signature fa() {
  Signature sig;
  sig.add_sort("X");
  sig.add_op("f", {0, 0}, 0);
  sig.add_op("a", {}, 0);
  return sig;
}

Term x(int i) { return Term::var(i, 0); }
Term f(Term l, Term r) { return Term::app(0, 0, {std::move(l), std::move(r)}); }
Term a() { return Term::app(1, 0, {}); }

}  // namespace

TEST(Unify, OccursCheckWithinOneSide) {
  // f(x, x) against f(y, f(y, a)) forces y = f(y, a).
  EXPECT_FALSE(mgu(f(x(0), x(0)), {0}, f(x(0), f(x(0), a())), {0}).has_value());
}

TEST(Unify, SidesAreRenamedApart) {
  // x against f(x, a): the two x's are different variables.
  auto u = mgu(x(0), {0}, f(x(0), a()), {0});
  ASSERT_TRUE(u.has_value());
  EXPECT_EQ(compose_term(x(0), u->left), compose_term(f(x(0), a()), u->right));
}

TEST(Unify, ClashFails) { EXPECT_FALSE(mgu(a(), {}, f(x(0), x(1)), {0, 0}).has_value()); }

TEST(Unify, JointTupleIsEssential) {
  auto u = mgu(f(x(0), a()), {0, 0}, f(a(), x(0)), {0});
  ASSERT_TRUE(u.has_value());
  std::vector<Term> joint = u->left.terms;
  joint.insert(joint.end(), u->right.terms.begin(), u->right.terms.end());
  EXPECT_TRUE(is_essential(Morphism{u->left.context, joint}));
  // x2 of the left context is unconstrained and must stay a distinct variable.
  EXPECT_TRUE(u->left.terms[1].is_var());
}

TEST(Unify, BruteForceDepthOne) {
  Signature sig = fa();
  auto terms = all_terms(sig, 2, 1);
  auto range = all_terms(sig, 2, 1);
  for (const Term& t : terms)
    for (const Term& s : terms) EXPECT_EQ(check_mgu_brute_force(sig, t, 2, s, 2, range), "");
}

TEST(Unify, FactorThrough) {
  Morphism u{{0}, {f(x(0), a())}};
  Morphism m{{0, 0}, {f(f(x(0), x(1)), a())}};
  auto w = factor_through(u, m);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(compose_raw(u, *w), m);
  EXPECT_FALSE(factor_through(u, Morphism{{0}, {f(a(), x(0))}}).has_value());
}

TEST(Unify, SubtermOccurrences) {
  Term t = f(f(a(), a()), f(x(0), a()));
  auto occ = generalized_subterm_occurrences(f(x(0), a()), t);
  ASSERT_EQ(occ.size(), 2u);
  EXPECT_EQ(occ[0].first, (Position{1}));
  EXPECT_EQ(occ[1].first, (Position{2}));
}
