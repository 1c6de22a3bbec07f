#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qalex/error.hpp"

namespace qalex {

using Element = int;

/// A raw binary operation on {0..n-1}; entry (i, j) is i * j. Not yet known
/// to satisfy anything.
struct OpTable {
  int n = 0;
  std::vector<Element> entries;  // row-major, size n*n

  OpTable() = default;
  OpTable(int n, std::vector<Element> entries);
  static OpTable from_rows(const std::vector<std::vector<Element>>& rows);
  Element at(Element i, Element j) const { return entries[static_cast<std::size_t>(i * n + j)]; }
};

/// Lists every failed instance of idempotence (Q1), right-invertibility (Q2)
/// and right self-distributivity (Q3). Empty iff the table is a quandle.
Report verify_quandle_axioms(const OpTable& table);

/// A finite quandle together with its dual operation. Only constructible from
/// tables that pass verify_quandle_axioms.
class FiniteQuandle {
 public:
  /// Throws DomainError listing the first violations when the table is not a quandle.
  explicit FiniteQuandle(OpTable table);

  int order() const noexcept { return table_.n; }
  Element op(Element x, Element y) const { return table_.at(x, y); }
  Element inv_op(Element x, Element y) const { return inv_[static_cast<std::size_t>(x * table_.n + y)]; }
  /// x *^e y for e = +1 / -1.
  Element op(Element x, Element y, int e) const { return e > 0 ? op(x, y) : inv_op(x, y); }
  const OpTable& table() const noexcept { return table_; }

  friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b) { return a.table_.entries == b.table_.entries; }

 private:
  OpTable table_;
  std::vector<Element> inv_;
};

Report verify_quandle_axioms(const FiniteQuandle& q);

/// Multiplication table of a finite group on {0..n-1}; (a*b) at entry (a, b).
struct FiniteGroup {
  OpTable table;
  Element identity = 0;
  std::vector<Element> inverses;

  /// Validates identity, inverses and associativity; throws DomainError.
  explicit FiniteGroup(OpTable mult);
  int order() const noexcept { return table.n; }
  Element mul(Element a, Element b) const { return table.at(a, b); }
  Element inv(Element a) const { return inverses[static_cast<std::size_t>(a)]; }
};

/// Permutations of {0..k-1} in lexicographic order.
std::vector<std::vector<int>> permutations_lex(int k);

/// Symmetric group S_k on lexicographically ordered permutations, with
/// (p*q)(i) = q(p(i)): apply p first. Also returns the permutation list.
struct SymmetricGroup {
  FiniteGroup group;
  std::vector<std::vector<int>> perms;
};
SymmetricGroup symmetric_group(int k);

/// Conj(G): x * y = y^-1 x y.
FiniteQuandle conj_quandle(const FiniteGroup& g);
/// The conjugacy class of `rep` under conjugation, elements in increasing
/// group-index order. `members` (optional) receives the group indices.
FiniteQuandle conjugacy_class_quandle(const FiniteGroup& g, Element rep, std::vector<Element>* members = nullptr);
/// The 6-element quandle of 4-cycles in S_4.
FiniteQuandle s4_four_cycle_quandle();
/// Rotations of the tetrahedron's vertices (order 4).
FiniteQuandle tetrahedron_quandle();
/// Dihedral quandle R_n: i * j = 2j - i mod n.
FiniteQuandle dihedral_quandle(int n);
FiniteQuandle trivial_quandle(int n);

struct InnerData {
  /// perms[x] is the right translation i -> i * x.
  std::vector<std::vector<Element>> perms;
  bool faithful = false;
};
InnerData inner_group_and_faithfulness(const FiniteQuandle& q);

/// A map between finite quandles given by its table.
struct QuandleHom {
  std::vector<Element> images;
};
/// Lists pairs (x, y) where f(x*y) != f(x)*f(y), plus out-of-range images.
Report verify_homomorphism(const FiniteQuandle& source, const FiniteQuandle& target, const QuandleHom& f);

/// Brute-force isomorphism search (for small orders only).
bool isomorphic(const FiniteQuandle& a, const FiniteQuandle& b);

}  // namespace qalex
