#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "lawvere/morphism.hpp"
#include "lawvere/term.hpp"

namespace lawvere {

struct Rule {
  std::string name;
  std::vector<SortId> context;  // sorts of the lhs variables, first-occurrence order
  Term lhs;
  Term rhs;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Budgets {
  std::size_t term_steps = 10000;  // rewrite steps per normalization / termination probe
  std::size_t cp_steps = 1000;     // rewrite steps per side when joining a critical pair

  friend bool operator==(const Budgets&, const Budgets&) = default;
};

/// Signature plus rules.  The position of a rule in `rules` is its rank in the
/// total order on left-hand sides.
struct Trs {
  Signature sig;
  std::vector<Rule> rules;
  Budgets budgets;

  friend bool operator==(const Trs&, const Trs&) = default;
};

/// Checks the structural requirements on every rule (sorts, variable lhs, rhs variables).
void validate(const Trs& R);

struct RewriteStep {
  std::size_t rule;
  Position position;
  Term result;
};

std::vector<RewriteStep> rewrite_steps(const Term& t, const Trs& R);
bool is_irreducible(const Term& t, const Trs& R);
bool is_irreducible(const Morphism& m, const Trs& R);

/// Leftmost-innermost normalization with a memo table.  Not thread-safe; use one
/// instance per thread.
class Normalizer {
 public:
  Normalizer(const Trs& R, std::size_t step_budget);
  explicit Normalizer(const Trs& R) : Normalizer(R, R.budgets.term_steps) {}

  Term normalize(const Term& t);
  Morphism normalize(const Morphism& m);
  const Trs& trs() const { return *R_; }

 private:
  Term nf(const Term& t);

  const Trs* R_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  std::unordered_map<Term, Term, TermHash> cache_;
};

Term normal_form(const Term& t, const Trs& R);
Term normal_form(const Term& t, const Trs& R, std::size_t step_budget);

struct CriticalPair {
  std::size_t outer;  // rule whose lhs contains the overlap
  std::size_t inner;  // rule applied at `position`
  Position position;
  std::vector<SortId> context;
  Term peak;
  Term left;   // outer rule applied at the root
  Term right;  // inner rule applied at `position`
};

std::vector<CriticalPair> critical_pairs(const Trs& R);

struct CheckOptions {
  std::size_t cp_budget = 1000;
  std::size_t term_budget = 10000;
  bool assume_terminating = false;
  std::size_t probe_samples = 200;
  int probe_depth = 4;
  std::uint64_t seed = 20240611;
};

struct CompletenessReport {
  bool reduced = true;
  std::vector<std::string> reducedness_issues;
  std::size_t critical_pairs = 0;
  bool locally_confluent = true;
  std::vector<std::string> unjoinable;
  bool termination_assumed = false;
  bool termination_ok = true;
  std::size_t probed_terms = 0;
  std::optional<std::string> budget_failure;

  bool complete() const { return locally_confluent && termination_ok && !budget_failure; }
  bool certified() const { return reduced && complete(); }
};

CompletenessReport check_complete(const Trs& R, const CheckOptions& opt = {});

/// Throws completeness-not-certified (or budget-exceeded) unless R is reduced and complete.
void require_certified(const Trs& R, const CheckOptions& opt = {});

Trs reduce_trs(const Trs& R);

std::uint64_t degree(const Trs& R);

/// Random well-sorted term; variables are drawn from `context`.
Term random_term(const Signature& sig, SortId sort, int depth, const std::vector<SortId>& context,
                 std::mt19937_64& rng);

std::string to_string(const Signature& sig, const Rule& r);

}  // namespace lawvere
