#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qalex {

/// A finitely generated abelian group Z^r x Z_{n_1} x ... x Z_{n_k}.
///
/// Elements are stored componentwise: the first `free_rank` coordinates are
/// arbitrary integers, the remaining ones are residues in [0, n_i).
struct AbelianGroup {
  int free_rank = 0;
  std::vector<std::int64_t> torsion_orders;

  AbelianGroup() = default;
  AbelianGroup(int free_rank, std::vector<std::int64_t> torsion);

  static AbelianGroup integers() { return AbelianGroup(1, {}); }
  static AbelianGroup cyclic(std::int64_t n) { return AbelianGroup(0, {n}); }
  static AbelianGroup trivial() { return AbelianGroup(0, {}); }

  /// Parses "Z", "Z4", "Z x Z4", "1" (trivial group).
  static AbelianGroup parse(std::string_view spec);

  std::size_t rank() const noexcept { return static_cast<std::size_t>(free_rank) + torsion_orders.size(); }
  bool is_finite() const noexcept { return free_rank == 0; }
  /// Group order; only meaningful when is_finite().
  std::int64_t order() const;

  /// Printable generator names: t / u for a single generator, t1.. / u1.. otherwise.
  std::string generator_name(std::size_t i) const;
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// An element of an AbelianGroup in additive coordinates.
struct GroupElement {
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity(const AbelianGroup& g);
GroupElement normalize(const AbelianGroup& g, GroupElement x);
GroupElement compose(const AbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const AbelianGroup& g, const GroupElement& a);
GroupElement power(const AbelianGroup& g, const GroupElement& a, std::int64_t k);
bool is_identity(const GroupElement& a);
/// Single-generator element u^k (or t^k) of a rank-1 group.
GroupElement cyclic_element(const AbelianGroup& g, std::int64_t k);
/// All elements of a finite group, in lexicographic coordinate order.
std::vector<GroupElement> enumerate_elements(const AbelianGroup& g);
/// Position of `a` in enumerate_elements(g).
std::size_t element_index(const AbelianGroup& g, const GroupElement& a);

/// Multiplicative rendering: "1", "u", "u^2", "t^-1*u".
std::string format_element(const AbelianGroup& g, const GroupElement& a);

/// Sparse element of the integral group ring Z[A]; no zero coefficients are stored.
class GroupRingElem {
 public:
  using Terms = std::map<GroupElement, std::int64_t>;

  GroupRingElem() = default;
  explicit GroupRingElem(AbelianGroup group) : group_(std::move(group)) {}

  static GroupRingElem zero(const AbelianGroup& g) { return GroupRingElem(g); }
  static GroupRingElem one(const AbelianGroup& g) { return constant(g, 1); }
  static GroupRingElem constant(const AbelianGroup& g, std::int64_t c);
  static GroupRingElem monomial(const AbelianGroup& g, GroupElement x, std::int64_t c = 1);

  /// Parses the text form, e.g. "t^2 - t + 1" over Z or "u^2 - 2*u + 1" over Z4.
  static GroupRingElem parse(const AbelianGroup& g, std::string_view text);

  const AbelianGroup& group() const noexcept { return group_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  std::int64_t coefficient(const GroupElement& x) const;
  /// True for c*x with c = +-1, the units this library recognises without help.
  bool is_signed_monomial() const;
  /// Inverse of a signed monomial; throws DomainError otherwise.
  GroupRingElem monomial_inverse() const;

  /// Sum of coefficients (the augmentation map Z[A] -> Z).
  std::int64_t augmentation() const;

  GroupRingElem& operator+=(const GroupRingElem& other);
  GroupRingElem& operator-=(const GroupRingElem& other);
  GroupRingElem operator-() const;
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  GroupRingElem scaled(std::int64_t c) const;
  /// Multiplies by the group element x.
  GroupRingElem shifted(const GroupElement& x) const;

  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    return a.group_ == b.group_ && a.terms_ == b.terms_;
  }

  /// Highest-first rendering, e.g. "-t^2 - t + 1". Zero prints as "0".
  std::string to_string() const;

  /// Total order on terms (used for deterministic sorting, not algebraic).
  friend bool operator<(const GroupRingElem& a, const GroupRingElem& b) { return a.terms_ < b.terms_; }

 private:
  void add_term(const GroupElement& x, std::int64_t c);

  AbelianGroup group_;
  Terms terms_;
};

GroupRingElem ring_add(const GroupRingElem& a, const GroupRingElem& b);
GroupRingElem ring_mul(const GroupRingElem& a, const GroupRingElem& b);
GroupRingElem ring_neg(const GroupRingElem& a);

/// Representative of the class of `a` under multiplication by +-x (x in A),
/// chosen so that its leading term (highest exponent vector) is as small as
/// possible and has a positive coefficient.
GroupRingElem normalize_associate(const GroupRingElem& a);

/// True iff a = +-x*b for some group element x.
bool trivially_associated(const GroupRingElem& a, const GroupRingElem& b);

}  // namespace qalex
