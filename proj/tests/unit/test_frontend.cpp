#include <gtest/gtest.h>

#include "../support.hpp"
#include "lawvere/error.hpp"

using namespace lawvere;
using namespace testing_support;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InputError;
}

const char* kHeader = "sorts X\nop f : X -> X\nop g : X -> X\nop c : -> X\nvar x y : X\n";

}  // namespace

TEST(Frontend, AbelianFixture) {
  Trs R = abelian();
  EXPECT_EQ(R.sig.num_sorts(), 1u);
  EXPECT_EQ(R.sig.num_ops(), 2u);
  ASSERT_EQ(R.rules.size(), 2u);
  EXPECT_EQ(R.rules[0].name, "r1");
  EXPECT_EQ(R.rules[0].context, std::vector<SortId>{0});
}

TEST(Frontend, ErrorKinds) {
  std::string h = kHeader;
  EXPECT_EQ(kind_of(h + "rule bad : x -> x\n"), ErrorKind::VariableOnLhsRoot);
  EXPECT_EQ(kind_of(h + "rule bad : f(x) -> g(y)\n"), ErrorKind::RhsVariableNotInLhs);
  EXPECT_EQ(kind_of(h + "rule bad : h(x) -> x\n"), ErrorKind::UndeclaredName);
  EXPECT_EQ(kind_of(h + "rule bad : f(x, x) -> x\n"), ErrorKind::SortError);
  EXPECT_EQ(kind_of(h + "rule bad : f(x -> x\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of(h + "frobnicate\n"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of(h + "op k : Y -> X\n"), ErrorKind::UndeclaredName);
  EXPECT_EQ(kind_of(h + "rule a : f(x) -> x\norder a b\n"), ErrorKind::UndeclaredName);
  EXPECT_EQ(kind_of("sorts X Y\nop p : X -> Y\nop q : X -> X\nvar x : X\nrule bad : q(x) -> p(x)\n"),
            ErrorKind::SortError);
}

TEST(Frontend, ErrorsCarryLineAndColumn) {
  try {
    parse_presentation(std::string(kHeader) + "rule bad : f(x) -> g(y)\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 6, column 22"), std::string::npos) << e.what();
  }
}

TEST(Frontend, OrderDirectiveRanksRules) {
  Trs R = abelian_reversed();
  ASSERT_EQ(R.rules.size(), 2u);
  EXPECT_EQ(R.rules[0].name, "r2");
  EXPECT_EQ(R.rules[1].name, "r1");
}

TEST(Frontend, BudgetsAndComments) {
  Trs R = parse_presentation(std::string(kHeader) + "budget term 77  # steps\nbudget cp 5\n# comment line\n");
  EXPECT_EQ(R.budgets.term_steps, 77u);
  EXPECT_EQ(R.budgets.cp_steps, 5u);
}

TEST(Frontend, PrintParseRoundTrip) {
  for (const Trs& R : {abelian(), abelian_reversed(), group()}) EXPECT_EQ(parse_presentation(print_presentation(R)), R);
  Trs multi = parse_presentation(R"(
sorts S T
op pair : S T -> S
op tag : T -> T
op x1_S : -> S
var s : S
var t u : T
budget term 123
rule r : pair(pair(s, t), u) -> pair(s, tag(u))
rule q : tag(tag(t)) -> t
)");
  EXPECT_EQ(parse_presentation(print_presentation(multi)), multi);
}

TEST(Frontend, SrsRoundTrip) {
  monoid::Srs R = parse_srs("letters a b\nrule s1 : b a -> a b\nrule s2 : a a a ->\norder s2 s1\n");
  ASSERT_EQ(R.rules.size(), 2u);
  EXPECT_EQ(R.rules[0].name, "s2");
  EXPECT_TRUE(R.rules[0].rhs.empty());
  monoid::Srs back = parse_srs(print_srs(R));
  ASSERT_EQ(back.rules.size(), R.rules.size());
  for (std::size_t i = 0; i < R.rules.size(); ++i) {
    EXPECT_EQ(back.rules[i].lhs, R.rules[i].lhs);
    EXPECT_EQ(back.rules[i].rhs, R.rules[i].rhs);
  }
  EXPECT_THROW(parse_srs("letters a\nrule s : b -> a\n"), Error);
}

TEST(Frontend, ChainJson) {
  Trs R = abelian();
  auto chains = enumerate_chains(R, 2);
  Json j = to_json(R.sig, chains[2][0]);
  EXPECT_EQ(j["entries"][0]["terms"], Json::array({"plus(x1,x2)"}));
  EXPECT_EQ(j["entries"][1]["terms"], Json::array({"x1", "zero"}));
  EXPECT_EQ(j["entries"][1]["context"], Json::array({"X"}));
  Json all = chains_json(R.sig, {});
  EXPECT_EQ(all["chains"], Json::array());
  EXPECT_EQ(all["version"], kJsonVersion);
  EXPECT_EQ(chains_json(R.sig, chains).dump(), chains_json(R.sig, enumerate_chains(R, 2)).dump());
}

TEST(Frontend, HomologyJson) {
  auto H = homology_of(abelian(), 2, 0);
  Json j = to_json(H[2]);
  EXPECT_EQ(j.dump(), R"({"dim":2,"chains":2,"H":{"rank":0,"torsion":[]}})");
}

TEST(Frontend, CoefficientResolution) {
  EXPECT_EQ(resolve_coefficients(group(), "auto"), 2u);
  EXPECT_EQ(resolve_coefficients(group(), "2"), 2u);
  EXPECT_EQ(resolve_coefficients(abelian(), "auto"), 0u);
  EXPECT_EQ(resolve_coefficients(abelian(), "3"), 3u);
  auto kind = [](const Trs& R, const char* c) {
    try {
      resolve_coefficients(R, c);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InputError;
  };
  EXPECT_EQ(kind(group(), "0"), ErrorKind::UnsupportedDegree);
  EXPECT_EQ(kind(group(), "3"), ErrorKind::UnsupportedDegree);
  EXPECT_EQ(kind(abelian(), "4"), ErrorKind::UnsupportedDegree);
  EXPECT_EQ(exit_code(ErrorKind::UnsupportedDegree), 4);
  EXPECT_EQ(exit_code(ErrorKind::BudgetExceeded), 3);
  EXPECT_EQ(exit_code(ErrorKind::CompletenessNotCertified), 2);
  EXPECT_EQ(exit_code(ErrorKind::SyntaxError), 1);
}
