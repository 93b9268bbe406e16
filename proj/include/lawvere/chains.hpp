#pragma once

#include <compare>
#include <string>
#include <vector>

#include "lawvere/morphism.hpp"
#include "lawvere/rewrite.hpp"

namespace lawvere {

/// Generator of the normalized bar complex: (t1, t2, ..., tn) with t1 a single
/// term.  Dimension 0 cells carry only a sort.
struct Cell {
  SortId sort = -1;
  std::vector<Morphism> entries;

  std::size_t dim() const { return entries.size(); }

  static Cell zero(SortId s) { return Cell{s, {}}; }

  friend bool operator==(const Cell&, const Cell&) = default;
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b);
};

/// (p, rank) or -infinity.
struct RedexIndex {
  bool minus_infinity = true;
  Position position;
  std::size_t rank = 0;

  static RedexIndex at(Position p, std::size_t rank) { return RedexIndex{false, std::move(p), rank}; }

  friend bool operator==(const RedexIndex&, const RedexIndex&) = default;
  friend std::strong_ordering operator<=>(const RedexIndex& a, const RedexIndex& b);
};

std::string to_string(const Trs& R, const RedexIndex& r);

std::vector<RedexIndex> redex_set(const Term& t, const Trs& R);
RedexIndex pmax(const Term& t, const Trs& R);

/// True iff t is f(x1, ..., xk) for an operation f.
bool is_generator(const Morphism& t);

/// Single-term composite t1 t2 ... t_upto (no rewriting), over the context of t_upto.
Term raw_composite(const Cell& c, std::size_t upto);

/// Entries u such that (chain, u) is again a chain.
std::vector<Morphism> chain_extensions(const Cell& chain, const Trs& R);

bool is_chain(const Cell& c, const Trs& R);

/// Largest L in 1..n with (t1, ..., t_{L-1}) a chain; n+1 when c itself is a chain.
std::size_t chain_prefix_length(const Cell& c, const Trs& R);

/// Cells with essential, non-identity, irreducible, composable entries.
bool is_normalized_cell(const Cell& c, const Trs& R);

/// Chains of dimensions 0..max_dim, each list in canonical order.  Requires a
/// certified rewriting system unless `certify` is false.
std::vector<std::vector<Cell>> enumerate_chains(const Trs& R, std::size_t max_dim, bool certify = true);

/// Object of the cell: 1_X for dimension 0, else the normal form of t1 t2 ... tn.
Morphism cell_object(const Cell& c, Normalizer& nf);

std::string to_string(const Signature& sig, const Cell& c);

}  // namespace lawvere
