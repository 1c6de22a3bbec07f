#pragma once

#include <cstdint>
#include <vector>

#include "qalex/group_ring.hpp"
#include "qalex/quandle.hpp"

namespace qalex {

/// Tables f1, f2 : X x X -> Z[A] with a caller-certified inverse for every f1 value.
struct AlexanderPairTable {
  AbelianGroup group;
  int n = 0;
  std::vector<GroupRingElem> f1, f2, f1_inv;  // row-major n*n

  const GroupRingElem& F1(Element x, Element y) const { return f1[idx(x, y)]; }
  const GroupRingElem& F2(Element x, Element y) const { return f2[idx(x, y)]; }
  /// Throws DomainError naming (x, y) when the inverse entry is missing.
  const GroupRingElem& F1inv(Element x, Element y) const;

  std::size_t idx(Element x, Element y) const { return static_cast<std::size_t>(x * n + y); }
};

/// f1 = t, f2 = 1 - t over Z[t^+-1] on a quandle of order n.
AlexanderPairTable alexander_pair(int n);

/// Fills f1_inv by inverting each f1 entry that is a signed monomial; other
/// entries are left empty (zero ring element).
void fill_monomial_inverses(AlexanderPairTable& p);

/// Checks: f1(x,x) + f2(x,x) = 1, f1*f1_inv = 1, and the three
/// triple identities, over all pairs and triples of q.
/// Throws DomainError naming (i, j) when an inverse entry is missing.
Report verify_alexander_pair(const FiniteQuandle& q, const AlexanderPairTable& p);

/// Pulls the pair back along a homomorphism rho : Q -> X given by its table.
AlexanderPairTable compose_pair_with_hom(const AlexanderPairTable& p, const QuandleHom& rho);

/// An Alexander pair with values in Z_n (acting on the module Z_n).
struct ScalarPair {
  std::int64_t modulus = 0;
  int n = 0;
  std::vector<std::int64_t> f1, f2;  // row-major n*n, residues mod modulus

  std::int64_t F1(Element x, Element y) const { return f1[static_cast<std::size_t>(x * n + y)]; }
  std::int64_t F2(Element x, Element y) const { return f2[static_cast<std::size_t>(x * n + y)]; }
  static ScalarPair constant(int n, std::int64_t modulus, std::int64_t f1, std::int64_t f2);
};

Report verify_scalar_pair(const FiniteQuandle& q, const ScalarPair& p);

/// X x Z_n with (x,a) <| (y,b) = (x*y, f1(x,y) a + f2(x,y) b). Element (x, a)
/// is encoded as x * modulus + a. Throws DomainError if the pair fails to verify.
FiniteQuandle build_module_quandle(const FiniteQuandle& q, const ScalarPair& p);

}  // namespace qalex
