#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace lawvere {

using SortId = int;
using OpId = int;

struct OpDecl {
  std::string name;
  std::vector<SortId> args;
  SortId result = 0;

  friend bool operator==(const OpDecl&, const OpDecl&) = default;
};

/// Finite multi-sorted signature.  Sorts and operations are addressed by dense ids.
class Signature {
 public:
  SortId add_sort(const std::string& name);
  OpId add_op(const std::string& name, std::vector<SortId> args, SortId result);

  std::optional<SortId> find_sort(const std::string& name) const;
  std::optional<OpId> find_op(const std::string& name) const;

  const std::string& sort_name(SortId s) const { return sorts_.at(static_cast<std::size_t>(s)); }
  const OpDecl& op(OpId f) const { return ops_.at(static_cast<std::size_t>(f)); }
  std::size_t num_sorts() const { return sorts_.size(); }
  std::size_t num_ops() const { return ops_.size(); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::string> sorts_;
  std::vector<OpDecl> ops_;
};

/// Immutable first-order term with shared structure.  A variable is an index into
/// whatever context the term is interpreted in; its sort is carried alongside.
class Term {
 public:
  Term() = default;

  static Term var(int index, SortId sort);
  /// Unchecked application; `sort` is the result sort of `op`.
  static Term app(OpId op, SortId sort, std::vector<Term> args);
  /// Application checked against the signature (arity and argument sorts).
  static Term app(const Signature& sig, OpId op, std::vector<Term> args);

  bool valid() const { return node_ != nullptr; }
  bool is_var() const { return node_->op < 0; }
  int var_index() const { return node_->var; }
  OpId op() const { return node_->op; }
  SortId sort() const { return node_->sort; }
  const std::vector<Term>& args() const { return node_->args; }
  std::size_t hash() const { return node_->hash; }
  std::size_t size() const { return node_->size; }
  /// Number of operation symbols.
  std::size_t num_ops() const { return node_->ops; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    OpId op = -1;
    int var = -1;
    SortId sort = 0;
    std::vector<Term> args;
    std::size_t hash = 0;
    std::size_t size = 1;
    std::size_t ops = 0;
  };
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

/// Sequence of 1-based argument indices; empty is the root.
using Position = std::vector<int>;

std::string position_string(const Position& p);

std::vector<Position> positions(const Term& t);
const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, const Term& s);

using Substitution = std::map<int, Term>;

/// Simultaneous substitution.  Every variable of `t` must be bound.
Term substitute(const Term& t, const Substitution& sigma);
/// Variable i is replaced by `image[i]`.
Term substitute(const Term& t, std::span<const Term> image);
/// Adds `offset` to every variable index.
Term shift_vars(const Term& t, int offset);

std::size_t var_count(const Term& t, int var);
int max_var(const Term& t);
/// Variables in first-occurrence (left-to-right, depth-first) order.
void collect_vars(const Term& t, std::vector<int>& order, std::vector<char>& seen);

std::string to_string(const Signature& sig, const Term& t);
std::string to_string(const Signature& sig, const Term& t, const std::vector<std::string>& var_names);

}  // namespace lawvere

template <>
struct std::hash<lawvere::Term> {
  std::size_t operator()(const lawvere::Term& t) const noexcept { return t.hash(); }
};
