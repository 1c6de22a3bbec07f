#pragma once

#include <optional>

#include "qalex/integer_matrix.hpp"
#include "qalex/ring_matrix.hpp"

namespace qalex {

// Ideals of Z[A] for finite A are compared as Z-lattices in Z^|A|: the ideal
// generated by g_1..g_k is spanned over Z by every g_i * a, a in A.

/// Hermite basis (nonzero rows only) of the lattice of an ideal over a finite group.
IntMatrix ideal_lattice(const IdealGens& ideal);

/// Exact ideal equality over Z[A], A finite. Throws DomainError for infinite A.
bool ideal_equal_finite(const IdealGens& a, const IdealGens& b);

/// True iff a is contained in b (A finite).
bool ideal_contains_finite(const IdealGens& b, const IdealGens& a);

/// a == +-t^k b in Z[t^{+-1}].
bool principal_equal_laurent(const GroupRingElem& a, const GroupRingElem& b);

/// Exact quotient a / b in Z[t^{+-1}] if b divides a, nullopt otherwise.
std::optional<GroupRingElem> laurent_divide(const GroupRingElem& a, const GroupRingElem& b);

enum class IdealRelation { Equal, NotEqual, Inconclusive };
std::string to_string(IdealRelation r);

/// Ideal comparison in Z[t^{+-1}]. Principal ideals are decided exactly; for
/// larger generator sets only containment by single generators is checked and
/// the answer may be Inconclusive.
IdealRelation compare_laurent_ideals(const IdealGens& a, const IdealGens& b);

}  // namespace qalex
