#pragma once

#include <string>
#include <vector>

#include "qalex/alexander_pair.hpp"
#include "qalex/cocycle.hpp"
#include "qalex/diagram.hpp"
#include "qalex/ring_matrix.hpp"
#include "qalex/term.hpp"

namespace qalex {

/// A presentation, a homomorphism to a finite quandle given by generator
/// images, and an Alexander pair on that quandle.
class DerivativeContext {
 public:
  /// Throws DomainError if the images do not respect every relator (naming
  /// the first failing one) or, when `verify_pair` is set, if the pair fails
  /// verification.
  DerivativeContext(Presentation p, FiniteQuandle q, std::vector<Element> images, AlexanderPairTable pair,
                    bool verify_pair = true);

  const Presentation& presentation() const noexcept { return p_; }
  const FiniteQuandle& quandle() const noexcept { return q_; }
  const std::vector<Element>& images() const noexcept { return images_; }
  const AlexanderPairTable& pair() const noexcept { return pair_; }
  const AbelianGroup& group() const noexcept { return pair_.group; }

 private:
  Presentation p_;
  FiniteQuandle q_;
  std::vector<Element> images_;
  AlexanderPairTable pair_;
};

/// Derivatives of t with respect to every generator.
std::vector<GroupRingElem> derive_all(const Term& t, const DerivativeContext& ctx);
GroupRingElem derive(const Term& t, int j, const DerivativeContext& ctx);
GroupRingElem relator_derivative(const Relator& r, int j, const DerivativeContext& ctx);

/// Rows are relators, columns generators. A presentation without relators
/// gives a 0 x n matrix.
RingMatrix twisted_matrix(const DerivativeContext& ctx);
IdealGens twisted_ideals(const DerivativeContext& ctx, long d, std::size_t max_dim = kDefaultMaxDim);

/// The pair (theta, 0) over Z[A].
AlexanderPairTable cocycle_pair(const Cocycle& theta);

// Matrix moves preserving every elementary ideal.
/// Column i += column j * r.
RingMatrix move_column_add(const RingMatrix& m, std::size_t i, std::size_t j, const GroupRingElem& r);
/// Row i += r * row j.
RingMatrix move_row_add(const RingMatrix& m, std::size_t i, std::size_t j, const GroupRingElem& r);
/// Appends a zero row.
RingMatrix move_adjoin_zero_row(const RingMatrix& m);
/// Block diagonal (m, 1).
RingMatrix move_stabilize(const RingMatrix& m);

struct BlockCheck {
  std::size_t component = 0;
  std::size_t size = 0;
  GroupElement phi;           // product of the block's crossing weights
  GroupRingElem determinant;  // det of the diagonal block
  GroupRingElem expected;     // phi - 1
  bool structure_ok = false;
  bool determinant_ok = false;
};

struct TheoremCheck {
  GroupRingElem lhs_det;           // det over the component-ordered presentation
  IdealGens lhs_generators;        // E_0 of the diagram-order matrix
  GroupRingElem rhs_generator;     // product of (phi_i - 1)
  bool det_equal = false;
  bool ideal_equal = false;
  bool structure_ok = false;       // off-block entries vanish
  std::vector<BlockCheck> per_block;

  bool ok() const;
  std::string to_text() const;
};

/// Checks det(A) = prod(phi_i - 1) and E_0(A) = (prod(phi_i - 1)) for the
/// pair (theta, 0) and the homomorphism given by coloring `c`.
TheoremCheck verify_theorem(const LinkDiagram& d, const Cocycle& theta, const Coloring& c,
                                std::size_t max_dim = kDefaultMaxDim);

}  // namespace qalex
