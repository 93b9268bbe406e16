#include "lawvere/term.hpp"

#include <algorithm>

#include "lawvere/error.hpp"

namespace lawvere {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPosition: return "invalid-position";
    case ErrorKind::SortMismatch: return "sort-mismatch";
    case ErrorKind::UnboundVariable: return "unbound-variable";
    case ErrorKind::ArityMismatch: return "arity-mismatch";
    case ErrorKind::ObjectMismatch: return "object-mismatch";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::CompletenessNotCertified: return "completeness-not-certified";
    case ErrorKind::TrichotomyViolation: return "trichotomy-violation";
    case ErrorKind::UnsupportedDegree: return "unsupported-degree";
    case ErrorKind::InsufficientDimension: return "insufficient-dimension";
    case ErrorKind::SyntaxError: return "syntax-error";
    case ErrorKind::SortError: return "sort-error";
    case ErrorKind::UndeclaredName: return "undeclared-name";
    case ErrorKind::VariableOnLhsRoot: return "variable-on-lhs-root";
    case ErrorKind::RhsVariableNotInLhs: return "rhs-variable-not-in-lhs";
    case ErrorKind::InputError: return "input-error";
  }
  return "error";
}

SortId Signature::add_sort(const std::string& name) {
  if (find_sort(name)) throw Error(ErrorKind::SortError, "duplicate sort '" + name + "'");
  sorts_.push_back(name);
  return static_cast<SortId>(sorts_.size() - 1);
}

OpId Signature::add_op(const std::string& name, std::vector<SortId> args, SortId result) {
  if (find_op(name)) throw Error(ErrorKind::SortError, "duplicate operation '" + name + "'");
  auto check = [&](SortId s) {
    if (s < 0 || static_cast<std::size_t>(s) >= sorts_.size())
      throw Error(ErrorKind::SortError, "operation '" + name + "' uses an undeclared sort");
  };
  for (SortId s : args) check(s);
  check(result);
  ops_.push_back(OpDecl{name, std::move(args), result});
  return static_cast<OpId>(ops_.size() - 1);
}

std::optional<SortId> Signature::find_sort(const std::string& name) const {
  auto it = std::find(sorts_.begin(), sorts_.end(), name);
  if (it == sorts_.end()) return std::nullopt;
  return static_cast<SortId>(it - sorts_.begin());
}

std::optional<OpId> Signature::find_op(const std::string& name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].name == name) return static_cast<OpId>(i);
  return std::nullopt;
}

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Term Term::var(int index, SortId sort) {
  auto n = std::make_shared<Node>();
  n->var = index;
  n->sort = sort;
  n->hash = mix(mix(0x51ed27ULL, static_cast<std::size_t>(index)), static_cast<std::size_t>(sort));
  Term t;
  t.node_ = std::move(n);
  return t;
}

Term Term::app(OpId op, SortId sort, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->sort = sort;
  std::size_t h = mix(0xa11ceULL, static_cast<std::size_t>(op));
  for (const Term& a : args) {
    h = mix(h, a.hash());
    n->size += a.size();
    n->ops += a.num_ops();
  }
  n->ops += 1;
  n->hash = h;
  n->args = std::move(args);
  Term t;
  t.node_ = std::move(n);
  return t;
}

Term Term::app(const Signature& sig, OpId op, std::vector<Term> args) {
  const OpDecl& decl = sig.op(op);
  if (decl.args.size() != args.size())
    throw Error(ErrorKind::ArityMismatch, "operation '" + decl.name + "' expects " +
                                              std::to_string(decl.args.size()) + " arguments, got " +
                                              std::to_string(args.size()));
  for (std::size_t i = 0; i < args.size(); ++i)
    if (args[i].sort() != decl.args[i])
      throw Error(ErrorKind::SortMismatch, "argument " + std::to_string(i + 1) + " of '" + decl.name +
                                               "' has sort " + sig.sort_name(args[i].sort()) + ", expected " +
                                               sig.sort_name(decl.args[i]));
  return app(op, decl.result, std::move(args));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.hash() != b.hash() || a.node_->op != b.node_->op || a.node_->var != b.node_->var ||
      a.node_->sort != b.node_->sort || a.size() != b.size())
    return false;
  return a.node_->args == b.node_->args;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.node_ || !b.node_) return (a.node_ != nullptr) <=> (b.node_ != nullptr);
  // Variables sort before applications.
  if (auto c = (a.node_->op >= 0) <=> (b.node_->op >= 0); c != 0) return c;
  if (auto c = a.node_->op <=> b.node_->op; c != 0) return c;
  if (auto c = a.node_->var <=> b.node_->var; c != 0) return c;
  if (auto c = a.node_->sort <=> b.node_->sort; c != 0) return c;
  const auto& x = a.node_->args;
  const auto& y = b.node_->args;
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

std::string position_string(const Position& p) {
  if (p.empty()) return "ε";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(p[i]);
  }
  return s;
}

namespace {

void collect_positions(const Term& t, Position& cur, std::vector<Position>& out) {
  out.push_back(cur);
  if (t.is_var()) return;
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    cur.push_back(static_cast<int>(i + 1));
    collect_positions(t.args()[i], cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Position> positions(const Term& t) {
  std::vector<Position> out;
  Position cur;
  collect_positions(t, cur, out);
  return out;
}

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (int k : p) {
    if (cur->is_var() || k < 1 || static_cast<std::size_t>(k) > cur->args().size())
      throw Error(ErrorKind::InvalidPosition, "position " + position_string(p) + " does not address a subterm");
    cur = &cur->args()[static_cast<std::size_t>(k - 1)];
  }
  return *cur;
}

namespace {

Term replace_rec(const Term& t, const Position& p, std::size_t depth, const Term& s) {
  if (depth == p.size()) return s;
  int k = p[depth];
  if (t.is_var() || k < 1 || static_cast<std::size_t>(k) > t.args().size())
    throw Error(ErrorKind::InvalidPosition, "position " + position_string(p) + " does not address a subterm");
  std::vector<Term> args = t.args();
  args[static_cast<std::size_t>(k - 1)] = replace_rec(args[static_cast<std::size_t>(k - 1)], p, depth + 1, s);
  return Term::app(t.op(), t.sort(), std::move(args));
}

}  // namespace

Term replace_at(const Term& t, const Position& p, const Term& s) {
  if (subterm_at(t, p).sort() != s.sort())
    throw Error(ErrorKind::SortMismatch, "replacement at " + position_string(p) + " changes the sort");
  return replace_rec(t, p, 0, s);
}

Term substitute(const Term& t, const Substitution& sigma) {
  if (t.is_var()) {
    auto it = sigma.find(t.var_index());
    if (it == sigma.end())
      throw Error(ErrorKind::UnboundVariable, "variable x" + std::to_string(t.var_index() + 1) + " is unbound");
    if (it->second.sort() != t.sort())
      throw Error(ErrorKind::SortMismatch, "substitution for x" + std::to_string(t.var_index() + 1) +
                                               " has the wrong sort");
    return it->second;
  }
  if (t.num_ops() == t.size()) return t;  // ground
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(substitute(a, sigma));
  return Term::app(t.op(), t.sort(), std::move(args));
}

Term substitute(const Term& t, std::span<const Term> image) {
  if (t.is_var()) {
    auto i = static_cast<std::size_t>(t.var_index());
    if (i >= image.size() || !image[i].valid())
      throw Error(ErrorKind::UnboundVariable, "variable x" + std::to_string(i + 1) + " is unbound");
    if (image[i].sort() != t.sort())
      throw Error(ErrorKind::SortMismatch, "substitution for x" + std::to_string(i + 1) + " has the wrong sort");
    return image[i];
  }
  if (t.num_ops() == t.size()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(substitute(a, image));
  return Term::app(t.op(), t.sort(), std::move(args));
}

Term shift_vars(const Term& t, int offset) {
  if (t.is_var()) return Term::var(t.var_index() + offset, t.sort());
  if (t.num_ops() == t.size()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(shift_vars(a, offset));
  return Term::app(t.op(), t.sort(), std::move(args));
}

std::size_t var_count(const Term& t, int var) {
  if (t.is_var()) return t.var_index() == var ? 1 : 0;
  std::size_t n = 0;
  for (const Term& a : t.args()) n += var_count(a, var);
  return n;
}

int max_var(const Term& t) {
  if (t.is_var()) return t.var_index();
  int m = -1;
  for (const Term& a : t.args()) m = std::max(m, max_var(a));
  return m;
}

void collect_vars(const Term& t, std::vector<int>& order, std::vector<char>& seen) {
  if (t.is_var()) {
    auto i = static_cast<std::size_t>(t.var_index());
    if (i >= seen.size()) seen.resize(i + 1, 0);
    if (!seen[i]) {
      seen[i] = 1;
      order.push_back(t.var_index());
    }
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, order, seen);
}

namespace {

void print(const Signature& sig, const Term& t, const std::vector<std::string>* names, std::string& out) {
  if (t.is_var()) {
    auto i = static_cast<std::size_t>(t.var_index());
    if (names && i < names->size())
      out += (*names)[i];
    else
      out += "x" + std::to_string(i + 1);
    return;
  }
  out += sig.op(t.op()).name;
  if (t.args().empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ',';
    print(sig, t.args()[i], names, out);
  }
  out += ')';
}

}  // namespace

std::string to_string(const Signature& sig, const Term& t) {
  std::string out;
  print(sig, t, nullptr, out);
  return out;
}

std::string to_string(const Signature& sig, const Term& t, const std::vector<std::string>& var_names) {
  std::string out;
  print(sig, t, &var_names, out);
  return out;
}

}  // namespace lawvere
