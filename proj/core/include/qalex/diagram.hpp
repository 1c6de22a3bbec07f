#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qalex/quandle.hpp"
#include "qalex/term.hpp"

namespace qalex {

/// A crossing in arc form: the over arc, the under arc entering the crossing,
/// the under arc leaving it, and the sign.
struct Crossing {
  int over = 0;
  int under_in = 0;
  int under_out = 0;
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented link diagram given by Wirtinger arcs. Arcs are indexed
/// 0..n_a-1 in increasing order of their labels in the source text.
class LinkDiagram {
 public:
  /// Validates and indexes crossings whose arcs are arbitrary integer labels.
  /// `crossing_lines` (optional) gives the source line of each crossing for errors.
  static LinkDiagram from_labelled(const std::vector<Crossing>& labelled,
                                   const std::vector<std::size_t>& crossing_lines = {});

  std::size_t arc_count() const noexcept { return labels_.size(); }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  std::size_t component_count() const noexcept { return components_.size(); }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const Crossing& crossing(std::size_t i) const { return crossings_[i]; }
  int successor(int arc) const { return successor_[static_cast<std::size_t>(arc)]; }
  int component_of(int arc) const { return component_of_[static_cast<std::size_t>(arc)]; }
  /// Crossing at which `arc` ends (passes under as under_in).
  int end_crossing(int arc) const { return end_crossing_[static_cast<std::size_t>(arc)]; }
  /// Arcs of component c along the orientation, starting at its lowest index.
  const std::vector<int>& component_arcs(std::size_t c) const { return components_[c]; }
  long label(int arc) const { return labels_[static_cast<std::size_t>(arc)]; }

  /// Arcs in traversal order: components in order, each along the orientation.
  std::vector<int> traversal_order() const;

  /// Same diagram with arcs renamed by `perm` (new index = perm[old]).
  LinkDiagram relabelled(const std::vector<int>& perm) const;

 private:
  std::vector<Crossing> crossings_;
  std::vector<long> labels_;
  std::vector<int> successor_, component_of_, end_crossing_;
  std::vector<std::vector<int>> components_;
};

/// Parses lines of `X[o,ui,uo,s]` with s one of + - +1 -1; `#` comments.
LinkDiagram parse_pd(std::string_view text);
std::string format_pd(const LinkDiagram& d);

/// Converts a classical planar-diagram code (edge labels, X[i,j,k,l] with i the
/// incoming under edge, listed counterclockwise) to arc form. Edges of each
/// component must be numbered consecutively along the orientation.
LinkDiagram diagram_from_edge_pd(const std::vector<std::array<int, 4>>& code);

/// One generator per arc, one relator (under_in *^sign over, under_out) per
/// crossing, in file order.
Presentation wirtinger_presentation(const LinkDiagram& d);

/// Wirtinger presentation with generators ordered component by component
/// along the orientation and the i-th relator of each block coming from the
/// crossing where the i-th arc ends.
struct OrderedWirtinger {
  Presentation presentation;
  std::vector<int> generator_arcs;   // generator k is arc generator_arcs[k]
  std::vector<int> relator_crossings;  // relator k is crossing relator_crossings[k]
  std::vector<std::size_t> block_sizes;  // arcs per component
};
OrderedWirtinger component_ordered_wirtinger(const LinkDiagram& d);

/// True iff the arc assignment defines a homomorphism from the Wirtinger-
/// presented link quandle, i.e. every relator holds.
bool check_coloring_correspondence(const LinkDiagram& d, const FiniteQuandle& q, const std::vector<Element>& gen_images);

/// Arcs minus crossings: the deficiency of the Wirtinger presentation.
long wirtinger_deficiency(const LinkDiagram& d);

/// Generators minus relators.
long deficiency_bound(const Presentation& p);

}  // namespace qalex
