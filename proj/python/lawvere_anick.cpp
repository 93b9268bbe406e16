#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lawvere/error.hpp"
#include "lawvere/frontend.hpp"
#include "lawvere/homology.hpp"
#include "lawvere/monoid.hpp"
#include "lawvere/morse.hpp"

namespace py = pybind11;
using namespace lawvere;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict check(const std::string& text, bool assume_terminating) {
  Trs R = parse_presentation(text);
  CheckOptions opt;
  opt.assume_terminating = assume_terminating;
  opt.cp_budget = R.budgets.cp_steps;
  opt.term_budget = R.budgets.term_steps;
  CompletenessReport rep = check_complete(R, opt);
  py::dict d;
  d["certified"] = rep.certified();
  d["reduced"] = rep.reduced;
  d["locally_confluent"] = rep.locally_confluent;
  d["critical_pairs"] = rep.critical_pairs;
  d["degree"] = degree(R);
  d["budget_failure"] = rep.budget_failure ? py::cast(*rep.budget_failure) : py::none();
  return d;
}

py::object chains(const std::string& text, std::size_t max_dim) {
  Trs R = parse_presentation(text);
  return to_python(chains_json(R.sig, enumerate_chains(R, max_dim)));
}

std::vector<std::size_t> chain_counts(const std::string& text, std::size_t max_dim) {
  Trs R = parse_presentation(text);
  std::vector<std::size_t> out;
  for (const auto& level : enumerate_chains(R, max_dim)) out.push_back(level.size());
  return out;
}

py::object homology(const std::string& text, std::size_t max_dim, const std::string& coeff) {
  Trs R = parse_presentation(text);
  std::uint64_t d = resolve_coefficients(R, coeff);
  auto cells = enumerate_chains(R, max_dim + 1);
  MorseComplex<CountRing> mc(R);
  TensoredComplex tc = tensor_zd(mc, cells, d);
  std::vector<HomologyGroup> groups;
  for (std::size_t n = 0; n <= max_dim; ++n) groups.push_back(homology_group(tc, n));
  return to_python(homology_json(tc, groups, degree(R)));
}

std::vector<std::string> monoid_homology(const std::string& text, std::size_t max_dim) {
  monoid::Srs R = parse_srs(text);
  auto cells = monoid::enumerate_chains(R, max_dim + 1);
  monoid::MonoidComplex mc(R);
  TensoredComplex tc = monoid::tensor_trivial(mc, cells);
  std::vector<std::string> out;
  for (std::size_t n = 0; n <= max_dim; ++n) out.push_back(to_string(homology_group(tc, n)));
  return out;
}

}  // namespace

PYBIND11_MODULE(lawvere_anick, m) {
  m.doc() = "Chains, Morse differentials and homology of algebraic theories";
  static py::exception<Error> error(m, "LawvereError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });
  m.def("check", &check, py::arg("text"), py::arg("assume_terminating") = false);
  m.def("reduce", [](const std::string& text) { return print_presentation(reduce_trs(parse_presentation(text))); });
  m.def("chains", &chains, py::arg("text"), py::arg("max_dim"));
  m.def("chain_counts", &chain_counts, py::arg("text"), py::arg("max_dim"));
  m.def("homology", &homology, py::arg("text"), py::arg("max_dim"), py::arg("coeff") = "auto");
  m.def("monoid_homology", &monoid_homology, py::arg("text"), py::arg("max_dim"));
  m.def("round_trip", [](const std::string& text) { return print_presentation(parse_presentation(text)); });
}
