#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <iostream>

#include "lawvere/error.hpp"
#include "lawvere/frontend.hpp"
#include "lawvere/homology.hpp"
#include "lawvere/monoid.hpp"
#include "lawvere/morse.hpp"

using namespace lawvere;

namespace {

struct Args {
  std::string file;
  std::size_t max_dim = 3;
  std::size_t dim = 2;
  std::optional<std::size_t> cp_budget;
  std::optional<std::size_t> term_budget;
  bool assume_terminating = false;
  bool json = false;
  std::string mode = "symbolic";
  std::string coeff = "auto";
};

int run_check(const Args& a) {
  Trs R = load_presentation(a.file);
  CheckOptions opt;
  opt.cp_budget = a.cp_budget.value_or(R.budgets.cp_steps);
  opt.term_budget = a.term_budget.value_or(R.budgets.term_steps);
  opt.assume_terminating = a.assume_terminating;
  CompletenessReport rep = check_complete(R, opt);
  std::cout << "sorts " << R.sig.num_sorts() << ", operations " << R.sig.num_ops() << ", rules " << R.rules.size()
            << "\n";
  std::cout << "reduced: " << (rep.reduced ? "yes" : "no") << "\n";
  for (const auto& s : rep.reducedness_issues) std::cout << "  " << s << "\n";
  std::cout << "critical pairs: " << rep.critical_pairs << " ("
            << (rep.locally_confluent ? "all joinable" : "some not joinable") << ")\n";
  for (const auto& s : rep.unjoinable) std::cout << "  " << s << "\n";
  if (rep.termination_assumed) std::cout << "termination: assumed\n";
  else
    std::cout << "termination probe: " << rep.probed_terms << " terms, " << (rep.termination_ok ? "ok" : "failed")
              << "\n";
  std::cout << "degree: " << degree(R) << "\n";
  if (rep.budget_failure) {
    std::cerr << "budget exceeded: " << *rep.budget_failure << "\n";
    return 3;
  }
  if (!rep.certified()) {
    std::cout << "not certified";
    if (!rep.reduced && rep.complete()) std::cout << " (try `lawvere reduce " << a.file << "`)";
    std::cout << "\n";
    return 2;
  }
  std::cout << "certified: reduced and complete\n";
  return 0;
}

int run_reduce(const Args& a) {
  Trs R = load_presentation(a.file);
  std::cout << print_presentation(reduce_trs(R));
  return 0;
}

int run_chains(const Args& a) {
  Trs R = load_presentation(a.file);
  auto chains = enumerate_chains(R, a.max_dim);
  if (a.json) {
    std::cout << chains_json(R.sig, chains).dump(2) << "\n";
    return 0;
  }
  for (std::size_t n = 0; n < chains.size(); ++n) {
    std::cout << "dim " << n << ": " << chains[n].size() << " chain" << (chains[n].size() == 1 ? "" : "s") << "\n";
    for (const Cell& c : chains[n]) std::cout << "  " << to_string(R.sig, c) << "\n";
  }
  return 0;
}

template <class Ring>
void print_resolution(const Trs& R, std::size_t max_dim) {
  auto chains = enumerate_chains(R, max_dim);
  MorseComplex<Ring> mc(R);
  for (std::size_t n = 1; n < chains.size(); ++n)
    for (const Cell& c : chains[n]) {
      std::cout << "d" << n << " " << to_string(R.sig, c) << " =";
      auto diff = mc.differential(c);
      if (diff.empty()) std::cout << " 0";
      bool first = true;
      for (const auto& [cell, coef] : diff) {
        std::cout << (first ? " " : "\n    + ") << "[" << mc.ring().show(R.sig, coef) << "] "
                  << to_string(R.sig, cell);
        first = false;
      }
      std::cout << "\n";
    }
}

int run_resolution(const Args& a) {
  Trs R = load_presentation(a.file);
  if (a.mode == "symbolic") print_resolution<SymbolicRing>(R, a.max_dim);
  else print_resolution<CountRing>(R, a.max_dim);
  return 0;
}

struct HomologyRun {
  std::uint64_t degree = 0;
  TensoredComplex tc;
  std::vector<HomologyGroup> groups;
};

HomologyRun compute_homology(const Trs& R, std::size_t top, const std::string& coeff) {
  HomologyRun run;
  run.degree = degree(R);
  std::uint64_t d = resolve_coefficients(R, coeff);
  auto chains = enumerate_chains(R, top + 1);
  MorseComplex<CountRing> mc(R);
  run.tc = tensor_zd(mc, chains, d);
  for (std::size_t n = 0; n <= top; ++n) run.groups.push_back(homology_group(run.tc, n));
  return run;
}

std::string coefficient_name(std::uint64_t d) { return d == 0 ? "Z" : "F" + std::to_string(d); }

void print_inequality(const InequalityReport& r) {
  std::cout << "weak n=" << r.dim << ": #Cr = " << r.critical[r.dim] << " >= s(H) = " << r.s_n << "  "
            << (r.weak_holds ? "holds" : "VIOLATED") << "\n";
  std::cout << "strong n=" << r.dim << ": ";
  for (std::size_t i = 0; i <= r.dim; ++i) {
    bool neg = (r.dim - i) % 2;
    if (i == 0) std::cout << (neg ? "-" : "") << r.critical[i];
    else std::cout << (neg ? " - " : " + ") << r.critical[i];
  }
  std::cout << " = " << r.strong_lhs << " >= " << r.strong_rhs << " = s(H" << r.dim << ")";
  for (std::size_t i = r.dim; i-- > 0;) std::cout << ((r.dim - i) % 2 ? " - " : " + ") << "rank H" << i;
  std::cout << "  " << (r.strong_holds ? "holds" : "VIOLATED") << "\n";
}

int run_homology(const Args& a) {
  Trs R = load_presentation(a.file);
  HomologyRun run = compute_homology(R, a.max_dim, a.coeff);
  if (a.json) {
    std::cout << homology_json(run.tc, run.groups, run.degree).dump(2) << "\n";
    return 0;
  }
  std::cout << "degree " << run.degree << ", coefficients " << coefficient_name(run.tc.modulus) << "\n";
  std::cout << std::left << std::setw(4) << "n" << std::setw(10) << "chains" << "H_n\n";
  for (const HomologyGroup& h : run.groups)
    std::cout << std::setw(4) << h.dim << std::setw(10) << h.chains << to_string(h) << "\n";
  print_inequality(morse_inequalities(run.groups, run.tc.chain_counts, a.max_dim));
  return 0;
}

int run_inequality(const Args& a) {
  Trs R = load_presentation(a.file);
  HomologyRun run = compute_homology(R, a.dim, a.coeff);
  std::cout << "coefficients " << coefficient_name(run.tc.modulus) << "\n";
  for (std::size_t n = 0; n <= a.dim; ++n) print_inequality(morse_inequalities(run.groups, run.tc.chain_counts, n));
  InequalityReport top = morse_inequalities(run.groups, run.tc.chain_counts, a.dim);
  if (a.dim == 2) {
    // Any presentation of the same theory needs at least this many equations.
    std::int64_t bound = static_cast<std::int64_t>(top.s_n) - static_cast<std::int64_t>(top.ranks[1]) +
                         static_cast<std::int64_t>(top.ranks[0]);
    std::cout << "bound: #equations - #operations + #sorts >= " << bound << "\n";
  }
  return (top.weak_holds && top.strong_holds) ? 0 : 1;
}

int run_monoid(const std::string& what, const Args& a) {
  monoid::Srs R = load_srs(a.file);
  if (what == "chains") {
    auto chains = monoid::enumerate_chains(R, a.max_dim);
    for (std::size_t n = 0; n < chains.size(); ++n) {
      std::cout << "dim " << n << ": " << chains[n].size() << " chain" << (chains[n].size() == 1 ? "" : "s") << "\n";
      for (const auto& c : chains[n]) std::cout << "  " << monoid::to_string(R, c) << "\n";
    }
    return 0;
  }
  auto chains = monoid::enumerate_chains(R, a.max_dim + 1);
  monoid::MonoidComplex mc(R);
  TensoredComplex tc = monoid::tensor_trivial(mc, chains);
  std::cout << std::left << std::setw(4) << "n" << std::setw(10) << "chains" << "H_n\n";
  for (std::size_t n = 0; n <= a.max_dim; ++n) {
    HomologyGroup h = homology_group(tc, n);
    std::cout << std::setw(4) << n << std::setw(10) << h.chains << to_string(h) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free resolutions and homology of algebraic theories from complete rewriting systems"};
  app.require_subcommand(1);
  Args a;

  auto* check = app.add_subcommand("check", "Certify that the rules are reduced and complete");
  check->add_option("file", a.file, "presentation (.lwv)")->required();
  check->add_option("--cp-budget", a.cp_budget, "rewrite steps per critical-pair side");
  check->add_option("--term-budget", a.term_budget, "rewrite steps per normalization");
  check->add_flag("--assume-terminating", a.assume_terminating, "skip the termination probe");

  auto* reduce = app.add_subcommand("reduce", "Print an equivalent reduced presentation");
  reduce->add_option("file", a.file)->required();

  auto* chains = app.add_subcommand("chains", "List n-chains");
  chains->add_option("file", a.file)->required();
  chains->add_option("--max-dim", a.max_dim)->required();
  chains->add_flag("--json", a.json);

  auto* resolution = app.add_subcommand("resolution", "Print the Morse differentials of the chains");
  resolution->add_option("file", a.file)->required();
  resolution->add_option("--max-dim", a.max_dim)->required();
  resolution->add_option("--mode", a.mode)->check(CLI::IsMember({"symbolic", "count"}));

  auto* homology = app.add_subcommand("homology", "Homology with Z_d coefficients, H_0..H_N");
  homology->add_option("file", a.file)->required();
  homology->add_option("--max-dim", a.max_dim)->required();
  homology->add_option("--coeff", a.coeff, "auto (the degree) or an integer");
  homology->add_flag("--json", a.json);

  auto* inequality = app.add_subcommand("inequality", "Weak and strong Morse inequalities up to dimension N");
  inequality->add_option("file", a.file)->required();
  inequality->add_option("--dim", a.dim)->required();
  inequality->add_option("--coeff", a.coeff, "auto (the degree) or an integer");

  auto* monoid_cmd = app.add_subcommand("monoid", "Anick chains and homology of a monoid (.srs)");
  std::string monoid_what;
  monoid_cmd->add_option("what", monoid_what)->required()->check(CLI::IsMember({"chains", "homology"}));
  monoid_cmd->add_option("file", a.file)->required();
  monoid_cmd->add_option("--max-dim", a.max_dim)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*check) return run_check(a);
    if (*reduce) return run_reduce(a);
    if (*chains) return run_chains(a);
    if (*resolution) return run_resolution(a);
    if (*homology) return run_homology(a);
    if (*inequality) return run_inequality(a);
    if (*monoid_cmd) return run_monoid(monoid_what, a);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
