#include "qalex/ideal.hpp"

#include <algorithm>

#include "qalex/checked.hpp"
#include "qalex/error.hpp"

namespace qalex {

IntMatrix ideal_lattice(const IdealGens& ideal) {
  const auto& g = ideal.ring_group;
  if (!g.is_finite()) throw DomainError("lattice comparison needs a finite group; use principal comparison for Z[t^+-1]");
  const auto elems = enumerate_elements(g);
  const std::size_t m = elems.size();
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& gen : ideal.generators) {
    if (!(gen.group() == g)) throw DomainError("ideal generator from a different group ring");
    if (gen.is_zero()) continue;
    for (const auto& a : elems) {
      std::vector<std::int64_t> row(m, 0);
      for (const auto& [x, c] : gen.terms()) row[element_index(g, compose(g, x, a))] = c;
      rows.push_back(std::move(row));
    }
  }
  return hnf(IntMatrix::from_rows(rows, m)).nonzero_rows();
}

bool ideal_equal_finite(const IdealGens& a, const IdealGens& b) {
  if (!(a.ring_group == b.ring_group)) throw DomainError("comparing ideals of different group rings");
  return ideal_lattice(a) == ideal_lattice(b);
}

bool ideal_contains_finite(const IdealGens& b, const IdealGens& a) {
  if (!(a.ring_group == b.ring_group)) throw DomainError("comparing ideals of different group rings");
  IntMatrix lb = ideal_lattice(b);
  IntMatrix both = hnf(lb.stacked(ideal_lattice(a))).nonzero_rows();
  return both == lb;
}

namespace {

void require_laurent(const GroupRingElem& a) {
  const auto& g = a.group();
  if (g.free_rank != 1 || !g.torsion_orders.empty())
    throw DomainError("Laurent comparison needs Z[t^+-1], got Z[" + g.to_string() + "]");
}

// Coefficients of t^-low * a, lowest degree first.
std::vector<std::int64_t> dense(const GroupRingElem& a, std::int64_t& low) {
  low = a.terms().begin()->first.coords[0];
  std::int64_t high = a.terms().rbegin()->first.coords[0];
  std::vector<std::int64_t> v(static_cast<std::size_t>(high - low + 1), 0);
  for (const auto& [x, c] : a.terms()) v[static_cast<std::size_t>(x.coords[0] - low)] = c;
  return v;
}

}  // namespace

bool principal_equal_laurent(const GroupRingElem& a, const GroupRingElem& b) {
  require_laurent(a);
  require_laurent(b);
  return normalize_associate(a) == normalize_associate(b);
}

std::optional<GroupRingElem> laurent_divide(const GroupRingElem& a, const GroupRingElem& b) {
  require_laurent(a);
  require_laurent(b);
  if (b.is_zero()) throw DomainError("division by zero");
  const auto& g = a.group();
  if (a.is_zero()) return GroupRingElem::zero(g);
  std::int64_t la = 0, lb = 0;
  auto num = dense(a, la);
  auto den = dense(b, lb);
  if (num.size() < den.size()) return std::nullopt;
  std::vector<std::int64_t> quo(num.size() - den.size() + 1, 0);
  const std::int64_t lead = den.back();
  for (std::size_t i = quo.size(); i-- > 0;) {
    std::int64_t top = num[i + den.size() - 1];
    if (top % lead != 0) return std::nullopt;
    std::int64_t q = top / lead;
    quo[i] = q;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] = checked::sub(num[i + j], checked::mul(q, den[j]));
  }
  if (std::any_of(num.begin(), num.end(), [](auto c) { return c != 0; })) return std::nullopt;
  GroupRingElem out(g);
  for (std::size_t i = 0; i < quo.size(); ++i)
    out += GroupRingElem::monomial(g, GroupElement{{la - lb + static_cast<std::int64_t>(i)}}, quo[i]);
  return out;
}

std::string to_string(IdealRelation r) {
  switch (r) {
    case IdealRelation::Equal: return "equal";
    case IdealRelation::NotEqual: return "not-equal";
    case IdealRelation::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

bool all_divisible_by(const std::vector<GroupRingElem>& gens, const GroupRingElem& d) {
  return std::all_of(gens.begin(), gens.end(), [&](const auto& x) { return laurent_divide(x, d).has_value(); });
}

bool has_associate(const std::vector<GroupRingElem>& gens, const GroupRingElem& x) {
  return std::any_of(gens.begin(), gens.end(), [&](const auto& y) { return principal_equal_laurent(x, y); });
}

// One side principal (d); the other with generators `gens`.
IdealRelation compare_with_principal(const GroupRingElem& d, const std::vector<GroupRingElem>& gens) {
  if (!all_divisible_by(gens, d)) return IdealRelation::NotEqual;
  if (has_associate(gens, d)) return IdealRelation::Equal;
  return IdealRelation::Inconclusive;
}

}  // namespace

IdealRelation compare_laurent_ideals(const IdealGens& a, const IdealGens& b) {
  const auto sa = a.simplified(), sb = b.simplified();
  const auto& ga = sa.generators;
  const auto& gb = sb.generators;
  if (ga.empty() || gb.empty()) return ga.empty() == gb.empty() ? IdealRelation::Equal : IdealRelation::NotEqual;
  for (const auto& x : ga) require_laurent(x);
  for (const auto& x : gb) require_laurent(x);
  if (ga.size() == 1 && gb.size() == 1)
    return principal_equal_laurent(ga[0], gb[0]) ? IdealRelation::Equal : IdealRelation::NotEqual;
  if (ga.size() == 1) return compare_with_principal(ga[0], gb);
  if (gb.size() == 1) return compare_with_principal(gb[0], ga);
  bool same = ga.size() == gb.size() &&
              std::all_of(ga.begin(), ga.end(), [&](const auto& x) { return has_associate(gb, x); });
  return same ? IdealRelation::Equal : IdealRelation::Inconclusive;
}

}  // namespace qalex
