#include "lawvere/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "lawvere/error.hpp"

namespace lawvere {

namespace {

enum class Tok { Ident, Number, LParen, RParen, Comma, Colon, Arrow, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int column = 0;
};

class LineLexer {
 public:
  LineLexer(std::string_view line, int lineno) : line_(line), lineno_(lineno) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

  Token expect(Tok kind, const char* what) {
    if (cur_.kind != kind) fail(ErrorKind::SyntaxError, cur_.column, std::string("expected ") + what);
    return take();
  }

  void expect_end() {
    if (cur_.kind != Tok::End) fail(ErrorKind::SyntaxError, cur_.column, "unexpected '" + cur_.text + "'");
  }

  [[noreturn]] void fail(ErrorKind k, int column, const std::string& msg) const {
    throw Error(k, "line " + std::to_string(lineno_) + ", column " + std::to_string(column) + ": " + msg);
  }

  int line() const { return lineno_; }

 private:
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  void advance() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    cur_ = Token{};
    cur_.column = static_cast<int>(pos_) + 1;
    if (pos_ >= line_.size() || line_[pos_] == '#') {
      cur_.kind = Tok::End;
      return;
    }
    char c = line_[pos_];
    auto single = [&](Tok k) {
      cur_.kind = k;
      cur_.text = std::string(1, c);
      ++pos_;
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      case ':': return single(Tok::Colon);
      default: break;
    }
    if (c == '-' && pos_ + 1 < line_.size() && line_[pos_ + 1] == '>') {
      cur_.kind = Tok::Arrow;
      cur_.text = "->";
      pos_ += 2;
      return;
    }
    std::size_t start = pos_;
    if (ident_start(c)) {
      while (pos_ < line_.size() && ident_char(line_[pos_])) ++pos_;
      cur_.kind = Tok::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
      cur_.kind = Tok::Number;
    } else {
      fail(ErrorKind::SyntaxError, cur_.column, std::string("unexpected character '") + c + "'");
    }
    cur_.text = std::string(line_.substr(start, pos_ - start));
  }

  std::string_view line_;
  int lineno_;
  std::size_t pos_ = 0;
  Token cur_;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    lines.push_back(l);
    start = end + 1;
  }
  return lines;
}

std::size_t parse_count(LineLexer& lx) {
  Token t = lx.expect(Tok::Number, "a number");
  try {
    return static_cast<std::size_t>(std::stoull(t.text));
  } catch (const std::exception&) {
    lx.fail(ErrorKind::SyntaxError, t.column, "number out of range");
  }
}

struct RawRule {
  std::string name;
  int line = 0;
  int column = 0;
};

class PresentationParser {
 public:
  Trs parse(std::string_view text) {
    int lineno = 0;
    std::vector<Rule> rules;
    std::vector<RawRule> meta;
    std::optional<std::pair<std::vector<Token>, int>> order;
    for (std::string_view raw : split_lines(text)) {
      LineLexer lx(raw, ++lineno);
      if (lx.peek().kind == Tok::End) continue;
      Token kw = lx.expect(Tok::Ident, "a directive");
      if (kw.text == "sorts") {
        if (lx.peek().kind == Tok::End) lx.fail(ErrorKind::SyntaxError, lx.peek().column, "expected a sort name");
        while (lx.peek().kind != Tok::End) {
          Token s = lx.expect(Tok::Ident, "a sort name");
          if (R_.sig.find_sort(s.text)) lx.fail(ErrorKind::SortError, s.column, "duplicate sort '" + s.text + "'");
          R_.sig.add_sort(s.text);
        }
      } else if (kw.text == "op") {
        Token name = lx.expect(Tok::Ident, "an operation name");
        if (R_.sig.find_op(name.text) || vars_.count(name.text))
          lx.fail(ErrorKind::SortError, name.column, "name '" + name.text + "' is already declared");
        lx.expect(Tok::Colon, "':'");
        std::vector<SortId> args;
        while (lx.peek().kind == Tok::Ident) args.push_back(sort_ref(lx, lx.take()));
        lx.expect(Tok::Arrow, "'->'");
        SortId result = sort_ref(lx, lx.expect(Tok::Ident, "a result sort"));
        lx.expect_end();
        R_.sig.add_op(name.text, std::move(args), result);
      } else if (kw.text == "var") {
        std::vector<Token> names;
        while (lx.peek().kind == Tok::Ident) names.push_back(lx.take());
        if (names.empty()) lx.fail(ErrorKind::SyntaxError, lx.peek().column, "expected a variable name");
        lx.expect(Tok::Colon, "':'");
        SortId s = sort_ref(lx, lx.expect(Tok::Ident, "a sort"));
        lx.expect_end();
        for (const Token& n : names) {
          if (R_.sig.find_op(n.text)) lx.fail(ErrorKind::SortError, n.column, "'" + n.text + "' is an operation");
          auto [it, fresh] = vars_.emplace(n.text, s);
          if (!fresh && it->second != s)
            lx.fail(ErrorKind::SortError, n.column, "variable '" + n.text + "' redeclared with another sort");
        }
      } else if (kw.text == "rule") {
        Token name = lx.expect(Tok::Ident, "a rule name");
        for (const Rule& r : rules)
          if (r.name == name.text) lx.fail(ErrorKind::SyntaxError, name.column, "duplicate rule '" + name.text + "'");
        lx.expect(Tok::Colon, "':'");
        std::map<std::string, int> index;
        Rule r;
        r.name = name.text;
        int lhs_col = lx.peek().column;
        r.lhs = term(lx, index, r.context, true);
        if (r.lhs.is_var()) lx.fail(ErrorKind::VariableOnLhsRoot, lhs_col, "lhs of '" + r.name + "' is a variable");
        lx.expect(Tok::Arrow, "'->'");
        int rhs_col = lx.peek().column;
        r.rhs = term(lx, index, r.context, false);
        lx.expect_end();
        if (r.lhs.sort() != r.rhs.sort())
          lx.fail(ErrorKind::SortError, rhs_col, "rule '" + r.name + "' relates terms of different sorts");
        rules.push_back(std::move(r));
        meta.push_back(RawRule{name.text, lineno, name.column});
      } else if (kw.text == "order") {
        if (order) lx.fail(ErrorKind::SyntaxError, kw.column, "duplicate order directive");
        std::vector<Token> names;
        while (lx.peek().kind == Tok::Ident) names.push_back(lx.take());
        lx.expect_end();
        order.emplace(std::move(names), lineno);
      } else if (kw.text == "budget") {
        Token which = lx.expect(Tok::Ident, "'term' or 'cp'");
        std::size_t n = parse_count(lx);
        lx.expect_end();
        if (which.text == "term") R_.budgets.term_steps = n;
        else if (which.text == "cp") R_.budgets.cp_steps = n;
        else lx.fail(ErrorKind::SyntaxError, which.column, "unknown budget '" + which.text + "'");
      } else {
        lx.fail(ErrorKind::SyntaxError, kw.column, "unknown directive '" + kw.text + "'");
      }
    }

    if (order) {
      const auto& [names, line] = *order;
      std::vector<Rule> ranked;
      std::set<std::string> used;
      for (const Token& n : names) {
        auto it = std::find_if(rules.begin(), rules.end(), [&](const Rule& r) { return r.name == n.text; });
        if (it == rules.end())
          throw Error(ErrorKind::UndeclaredName, "line " + std::to_string(line) + ", column " +
                                                     std::to_string(n.column) + ": unknown rule '" + n.text + "'");
        if (!used.insert(n.text).second)
          throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " +
                                                  std::to_string(n.column) + ": rule '" + n.text + "' listed twice");
        ranked.push_back(*it);
      }
      for (const Rule& r : rules)
        if (!used.count(r.name)) ranked.push_back(r);
      rules = std::move(ranked);
    }
    R_.rules = std::move(rules);
    validate(R_);
    return std::move(R_);
  }

 private:
  SortId sort_ref(LineLexer& lx, const Token& t) {
    auto s = R_.sig.find_sort(t.text);
    if (!s) lx.fail(ErrorKind::UndeclaredName, t.column, "undeclared sort '" + t.text + "'");
    return *s;
  }

  Term term(LineLexer& lx, std::map<std::string, int>& index, std::vector<SortId>& context, bool lhs) {
    Token name = lx.expect(Tok::Ident, "a term");
    auto op = R_.sig.find_op(name.text);
    if (!op) {
      auto v = vars_.find(name.text);
      if (v == vars_.end()) lx.fail(ErrorKind::UndeclaredName, name.column, "undeclared name '" + name.text + "'");
      if (lx.peek().kind == Tok::LParen)
        lx.fail(ErrorKind::SyntaxError, lx.peek().column, "variable '" + name.text + "' applied to arguments");
      auto it = index.find(name.text);
      if (it == index.end()) {
        if (!lhs)
          lx.fail(ErrorKind::RhsVariableNotInLhs, name.column,
                  "variable '" + name.text + "' does not occur in the lhs");
        it = index.emplace(name.text, static_cast<int>(context.size())).first;
        context.push_back(v->second);
      }
      return Term::var(it->second, v->second);
    }
    const OpDecl& d = R_.sig.op(*op);
    std::vector<Term> args;
    if (lx.peek().kind == Tok::LParen) {
      lx.take();
      if (lx.peek().kind != Tok::RParen) {
        while (true) {
          int col = lx.peek().column;
          Term a = term(lx, index, context, lhs);
          if (args.size() < d.args.size() && a.sort() != d.args[args.size()])
            lx.fail(ErrorKind::SortError, col,
                    "argument " + std::to_string(args.size() + 1) + " of '" + d.name + "' has sort " +
                        R_.sig.sort_name(a.sort()) + ", expected " + R_.sig.sort_name(d.args[args.size()]));
          args.push_back(std::move(a));
          if (lx.peek().kind == Tok::Comma) {
            lx.take();
            continue;
          }
          break;
        }
      }
      lx.expect(Tok::RParen, "')'");
    }
    if (args.size() != d.args.size())
      lx.fail(ErrorKind::SortError, name.column,
              "'" + d.name + "' expects " + std::to_string(d.args.size()) + " arguments, got " +
                  std::to_string(args.size()));
    return Term::app(*op, d.result, std::move(args));
  }

  Trs R_;
  std::map<std::string, SortId> vars_;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InputError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Trs parse_presentation(std::string_view text) { return PresentationParser().parse(text); }

Trs load_presentation(const std::filesystem::path& path) { return parse_presentation(read_file(path)); }

std::string print_presentation(const Trs& R) {
  const Signature& sig = R.sig;
  std::set<std::string> taken;
  for (std::size_t f = 0; f < sig.num_ops(); ++f) taken.insert(sig.op(static_cast<OpId>(f)).name);
  // One variable name per (sort, index) pair, chosen to avoid operation names.
  std::map<std::pair<SortId, int>, std::string> names;
  std::vector<std::pair<std::string, SortId>> decls;
  auto name_for = [&](SortId s, int i) {
    auto key = std::make_pair(s, i);
    if (auto it = names.find(key); it != names.end()) return it->second;
    std::string base = "x" + std::to_string(i + 1);
    if (sig.num_sorts() > 1) base += "_" + sig.sort_name(s);
    while (taken.count(base)) base = "_" + base;
    taken.insert(base);
    names.emplace(key, base);
    decls.emplace_back(base, s);
    return base;
  };
  std::vector<std::string> rule_lines;
  for (const Rule& r : R.rules) {
    std::vector<std::string> vn;
    for (std::size_t i = 0; i < r.context.size(); ++i) vn.push_back(name_for(r.context[i], static_cast<int>(i)));
    rule_lines.push_back("rule " + r.name + " : " + to_string(sig, r.lhs, vn) + " -> " + to_string(sig, r.rhs, vn));
  }

  std::string out = "sorts";
  for (std::size_t s = 0; s < sig.num_sorts(); ++s) out += " " + sig.sort_name(static_cast<SortId>(s));
  out += "\n";
  for (std::size_t f = 0; f < sig.num_ops(); ++f) {
    const OpDecl& d = sig.op(static_cast<OpId>(f));
    out += "op " + d.name + " :";
    for (SortId a : d.args) out += " " + sig.sort_name(a);
    out += " -> " + sig.sort_name(d.result) + "\n";
  }
  for (const auto& [n, s] : decls) out += "var " + n + " : " + sig.sort_name(s) + "\n";
  const Budgets defaults;
  if (R.budgets.term_steps != defaults.term_steps) out += "budget term " + std::to_string(R.budgets.term_steps) + "\n";
  if (R.budgets.cp_steps != defaults.cp_steps) out += "budget cp " + std::to_string(R.budgets.cp_steps) + "\n";
  for (const std::string& l : rule_lines) out += l + "\n";
  return out;
}

monoid::Srs parse_srs(std::string_view text) {
  monoid::Srs R;
  std::vector<monoid::StringRule> rules;
  std::optional<std::pair<std::vector<Token>, int>> order;
  int lineno = 0;
  auto letter = [&](LineLexer& lx, const Token& t) {
    auto it = std::find(R.letters.begin(), R.letters.end(), t.text);
    if (it == R.letters.end()) lx.fail(ErrorKind::UndeclaredName, t.column, "undeclared letter '" + t.text + "'");
    return static_cast<int>(it - R.letters.begin());
  };
  for (std::string_view raw : split_lines(text)) {
    LineLexer lx(raw, ++lineno);
    if (lx.peek().kind == Tok::End) continue;
    Token kw = lx.expect(Tok::Ident, "a directive");
    if (kw.text == "letters") {
      while (lx.peek().kind != Tok::End) {
        Token t = lx.expect(Tok::Ident, "a letter");
        if (std::find(R.letters.begin(), R.letters.end(), t.text) != R.letters.end())
          lx.fail(ErrorKind::SyntaxError, t.column, "duplicate letter '" + t.text + "'");
        R.letters.push_back(t.text);
      }
    } else if (kw.text == "rule") {
      Token name = lx.expect(Tok::Ident, "a rule name");
      for (const auto& r : rules)
        if (r.name == name.text) lx.fail(ErrorKind::SyntaxError, name.column, "duplicate rule '" + name.text + "'");
      lx.expect(Tok::Colon, "':'");
      monoid::StringRule r;
      r.name = name.text;
      int lhs_col = lx.peek().column;
      while (lx.peek().kind == Tok::Ident) r.lhs.push_back(letter(lx, lx.take()));
      if (r.lhs.empty()) lx.fail(ErrorKind::VariableOnLhsRoot, lhs_col, "rule '" + r.name + "' has an empty lhs");
      lx.expect(Tok::Arrow, "'->'");
      while (lx.peek().kind == Tok::Ident) r.rhs.push_back(letter(lx, lx.take()));
      lx.expect_end();
      rules.push_back(std::move(r));
    } else if (kw.text == "order") {
      if (order) lx.fail(ErrorKind::SyntaxError, kw.column, "duplicate order directive");
      std::vector<Token> names;
      while (lx.peek().kind == Tok::Ident) names.push_back(lx.take());
      lx.expect_end();
      order.emplace(std::move(names), lineno);
    } else if (kw.text == "budget") {
      Token which = lx.expect(Tok::Ident, "'steps'");
      if (which.text != "steps") lx.fail(ErrorKind::SyntaxError, which.column, "unknown budget '" + which.text + "'");
      R.step_budget = parse_count(lx);
      lx.expect_end();
    } else {
      lx.fail(ErrorKind::SyntaxError, kw.column, "unknown directive '" + kw.text + "'");
    }
  }
  if (order) {
    const auto& [names, line] = *order;
    std::vector<monoid::StringRule> ranked;
    std::set<std::string> used;
    for (const Token& n : names) {
      auto it = std::find_if(rules.begin(), rules.end(), [&](const auto& r) { return r.name == n.text; });
      if (it == rules.end())
        throw Error(ErrorKind::UndeclaredName, "line " + std::to_string(line) + ", column " +
                                                   std::to_string(n.column) + ": unknown rule '" + n.text + "'");
      if (!used.insert(n.text).second)
        throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " +
                                                std::to_string(n.column) + ": rule '" + n.text + "' listed twice");
      ranked.push_back(*it);
    }
    for (const auto& r : rules)
      if (!used.count(r.name)) ranked.push_back(r);
    rules = std::move(ranked);
  }
  R.rules = std::move(rules);
  monoid::validate(R);
  return R;
}

monoid::Srs load_srs(const std::filesystem::path& path) { return parse_srs(read_file(path)); }

std::string print_srs(const monoid::Srs& R) {
  std::string out = "letters";
  for (const auto& l : R.letters) out += " " + l;
  out += "\n";
  if (R.step_budget != monoid::Srs{}.step_budget) out += "budget steps " + std::to_string(R.step_budget) + "\n";
  for (const auto& r : R.rules) {
    out += "rule " + r.name + " :";
    for (int a : r.lhs) out += " " + R.letters[static_cast<std::size_t>(a)];
    out += " ->";
    for (int a : r.rhs) out += " " + R.letters[static_cast<std::size_t>(a)];
    out += "\n";
  }
  return out;
}

std::uint64_t resolve_coefficients(const Trs& R, std::string_view coeff) {
  const std::uint64_t d = degree(R);
  if (coeff == "auto") {
    require_supported_modulus(d);
    return d;
  }
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(std::string(coeff), &used);
    if (used != coeff.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Error(ErrorKind::InputError, "--coeff expects 'auto' or a non-negative integer");
  }
  if (p == 0) {
    if (d != 0)
      throw Error(ErrorKind::UnsupportedDegree,
                  "integer coefficients need degree 0, but the degree is " + std::to_string(d));
    return 0;
  }
  require_supported_modulus(p);
  if (d != 0 && d % p != 0)
    throw Error(ErrorKind::UnsupportedDegree,
                "Z/" + std::to_string(p) + " is not a module over the degree " + std::to_string(d) + " coefficients");
  return p;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::CompletenessNotCertified: return 2;
    case ErrorKind::BudgetExceeded: return 3;
    case ErrorKind::UnsupportedDegree: return 4;
    default: return 1;
  }
}

Json to_json(const Signature& sig, const Morphism& m) {
  Json j;
  j["context"] = Json::array();
  for (SortId s : m.context) j["context"].push_back(sig.sort_name(s));
  j["terms"] = Json::array();
  for (const Term& t : m.terms) j["terms"].push_back(to_string(sig, t));
  return j;
}

Json to_json(const Signature& sig, const Cell& c) {
  Json j;
  if (c.dim() == 0) j["sort"] = sig.sort_name(c.sort);
  j["entries"] = Json::array();
  for (const Morphism& m : c.entries) j["entries"].push_back(to_json(sig, m));
  return j;
}

Json chains_json(const Signature& sig, const std::vector<std::vector<Cell>>& chains) {
  Json j;
  j["version"] = kJsonVersion;
  j["chains"] = Json::array();
  for (std::size_t n = 0; n < chains.size(); ++n) {
    Json level;
    level["dim"] = n;
    level["cells"] = Json::array();
    for (const Cell& c : chains[n]) level["cells"].push_back(to_json(sig, c));
    j["chains"].push_back(std::move(level));
  }
  return j;
}

namespace {

Json big(const BigInt& x) {
  if (x <= BigInt(INT64_MAX)) return static_cast<std::int64_t>(x);
  return x.str();
}

}  // namespace

Json to_json(const HomologyGroup& h) {
  Json j;
  j["dim"] = h.dim;
  j["chains"] = h.chains;
  Json H;
  H["rank"] = h.rank;
  H["torsion"] = Json::array();
  for (const BigInt& t : h.torsion) H["torsion"].push_back(big(t));
  j["H"] = std::move(H);
  return j;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols; ++k) row.push_back(m.at(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json homology_json(const TensoredComplex& tc, const std::vector<HomologyGroup>& groups, std::uint64_t degree) {
  Json j;
  j["version"] = kJsonVersion;
  j["degree"] = degree;
  j["modulus"] = tc.modulus;
  j["chain_counts"] = tc.chain_counts;
  j["matrices"] = Json::array();
  for (std::size_t n = 1; n < tc.matrices.size(); ++n) j["matrices"].push_back(to_json(tc.matrices[n]));
  j["homology"] = Json::array();
  for (const HomologyGroup& h : groups) j["homology"].push_back(to_json(h));
  return j;
}

}  // namespace lawvere
