#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qalex/diagram.hpp"
#include "qalex/group_ring.hpp"
#include "qalex/quandle.hpp"

namespace qalex {

/// theta : X x X -> A, stored row-major.
struct Cocycle {
  FiniteQuandle quandle;
  AbelianGroup group;
  std::vector<GroupElement> phi;

  const GroupElement& at(Element x, Element y) const {
    return phi[static_cast<std::size_t>(x * quandle.order() + y)];
  }

  /// theta = e everywhere.
  static Cocycle trivial(const FiniteQuandle& q, const AbelianGroup& a);
  /// theta(x, y) = u^{exps[x*n+y]} in a rank-one group.
  static Cocycle from_exponents(const FiniteQuandle& q, const AbelianGroup& a, const std::vector<std::int64_t>& exps);
  /// Exponent table of a rank-one cocycle.
  std::vector<std::int64_t> exponents() const;
};

/// Lists failures of theta(x,x) = e and of the cocycle identity.
Report verify_cocycle(const Cocycle& c);

/// Solutions over Z_n of phi(x,x) = 0 and
/// phi(x*y,z) + phi(x,y) - phi(x*z,y*z) - phi(x,z) = 0. The solution module is
/// the direct sum of the cyclic subgroups generated by `generators`.
struct CocycleSpace {
  std::int64_t modulus = 0;
  std::vector<std::vector<std::int64_t>> generators;  // exponent tables, row-major
  std::vector<std::int64_t> orders;

  /// Sum of coeffs[i] * generators[i], reduced mod n.
  std::vector<std::int64_t> combine(const std::vector<std::int64_t>& coeffs) const;
};
CocycleSpace search_cocycles(const FiniteQuandle& q, std::int64_t n);

/// Arc colors indexed by arc.
using Coloring = std::vector<Element>;

/// Crossing condition at every crossing.
bool is_coloring(const LinkDiagram& d, const FiniteQuandle& q, const Coloring& c);

/// All colorings in lexicographic order. Work is split by the color of the
/// first arc when `workers` > 1; the result does not depend on it.
std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const FiniteQuandle& q, unsigned workers = 1);

/// Positive crossing: theta(c(under_in), c(over)). Negative crossing:
/// theta(c(under_out), c(over))^-1.
GroupElement weight(const LinkDiagram& d, std::size_t crossing, const Coloring& c, const Cocycle& theta);

/// Per component, the product of the weights of crossings whose under arcs
/// lie on that component.
std::vector<GroupElement> component_invariant(const LinkDiagram& d, const Coloring& c, const Cocycle& theta);

/// Multiset of component tuples.
struct InvariantMultiset {
  AbelianGroup group;
  std::map<std::vector<GroupElement>, std::size_t> entries;

  void add(const std::vector<GroupElement>& tuple, std::size_t mult = 1) { entries[tuple] += mult; }
  std::size_t total() const;
  /// "(u,1)" style rendering of a tuple.
  std::string format_tuple(const std::vector<GroupElement>& tuple) const;
  /// One `(...) x m` line per entry, sorted by text.
  std::vector<std::string> lines() const;

  friend bool operator==(const InvariantMultiset&, const InvariantMultiset&) = default;
};

InvariantMultiset cocycle_invariant(const LinkDiagram& d, const std::vector<Coloring>& colorings, const Cocycle& theta);
InvariantMultiset cocycle_invariant(const LinkDiagram& d, const FiniteQuandle& q, const Cocycle& theta);

/// Parses entries like "(1) x 6; (u) x 24" (separators `;` or newlines).
InvariantMultiset parse_invariant_multiset(const AbelianGroup& a, std::string_view text);

/// First element of the solution space, scanning coefficient vectors in
/// lexicographic order, whose invariant on `colorings` of `d` equals `filter`.
/// Without a filter the zero cocycle is returned. `examined` counts the
/// candidates tested; the scan stops after `budget` candidates.
struct CocycleSearchResult {
  std::optional<std::vector<std::int64_t>> exponents;
  std::vector<std::int64_t> coefficients;
  std::size_t examined = 0;
};
CocycleSearchResult find_cocycle(const FiniteQuandle& q, const CocycleSpace& space, const AbelianGroup& a,
                                 const LinkDiagram* d, const InvariantMultiset* filter, std::size_t budget);

}  // namespace qalex
