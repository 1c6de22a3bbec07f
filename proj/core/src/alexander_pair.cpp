#include "qalex/alexander_pair.hpp"

#include <numeric>

#include "qalex/checked.hpp"

namespace qalex {

const GroupRingElem& AlexanderPairTable::F1inv(Element x, Element y) const {
  const auto i = idx(x, y);
  if (i >= f1_inv.size() || f1_inv[i].is_zero())
    throw DomainError("missing inverse for f1(" + std::to_string(x) + "," + std::to_string(y) + ")");
  return f1_inv[i];
}

AlexanderPairTable alexander_pair(int n) {
  const auto g = AbelianGroup::integers();
  const auto t = GroupRingElem::monomial(g, GroupElement{{1}});
  const auto one = GroupRingElem::one(g);
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  AlexanderPairTable p{g, n, std::vector<GroupRingElem>(cells, t), std::vector<GroupRingElem>(cells, one - t),
                       std::vector<GroupRingElem>(cells, t.monomial_inverse())};
  return p;
}

void fill_monomial_inverses(AlexanderPairTable& p) {
  p.f1_inv.assign(p.f1.size(), GroupRingElem(p.group));
  for (std::size_t i = 0; i < p.f1.size(); ++i)
    if (p.f1[i].is_signed_monomial()) p.f1_inv[i] = p.f1[i].monomial_inverse();
}

Report verify_alexander_pair(const FiniteQuandle& q, const AlexanderPairTable& p) {
  Report out;
  const int n = q.order();
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (p.n != n || p.f1.size() != cells || p.f2.size() != cells)
    throw DomainError("pair tables do not match the quandle order " + std::to_string(n));
  const auto one = GroupRingElem::one(p.group);
  for (int x = 0; x < n; ++x)
    if (!(p.F1(x, x) + p.F2(x, x) == one))
      out.push_back({"f1(x,x)+f2(x,x)=1", {x}, (p.F1(x, x) + p.F2(x, x)).to_string()});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!(p.F1(x, y) * p.F1inv(x, y) == one)) out.push_back({"f1 unit", {x, y}, "f1 * f1_inv != 1"});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Element xy = q.op(x, y), xz = q.op(x, z), yz = q.op(y, z);
        if (!(p.F1(xy, z) * p.F1(x, y) == p.F1(xz, yz) * p.F1(x, z))) out.push_back({"pair identity 1", {x, y, z}, ""});
        if (!(p.F1(xy, z) * p.F2(x, y) == p.F2(xz, yz) * p.F1(y, z))) out.push_back({"pair identity 2", {x, y, z}, ""});
        if (!(p.F2(xy, z) == p.F1(xz, yz) * p.F2(x, z) + p.F2(xz, yz) * p.F2(y, z)))
          out.push_back({"pair identity 3", {x, y, z}, ""});
      }
  return out;
}

AlexanderPairTable compose_pair_with_hom(const AlexanderPairTable& p, const QuandleHom& rho) {
  const int m = static_cast<int>(rho.images.size());
  AlexanderPairTable out{p.group, m, {}, {}, {}};
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b) {
      const Element x = rho.images[static_cast<std::size_t>(a)], y = rho.images[static_cast<std::size_t>(b)];
      if (x < 0 || x >= p.n || y < 0 || y >= p.n) throw DomainError("homomorphism image out of range");
      out.f1.push_back(p.F1(x, y));
      out.f2.push_back(p.F2(x, y));
      out.f1_inv.push_back(p.idx(x, y) < p.f1_inv.size() ? p.f1_inv[p.idx(x, y)] : GroupRingElem(p.group));
    }
  return out;
}

// ---------------------------------------------------------------- scalar pairs

ScalarPair ScalarPair::constant(int n, std::int64_t modulus, std::int64_t f1, std::int64_t f2) {
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  return {modulus, n, std::vector<std::int64_t>(cells, checked::mod(f1, modulus)),
          std::vector<std::int64_t>(cells, checked::mod(f2, modulus))};
}

Report verify_scalar_pair(const FiniteQuandle& q, const ScalarPair& p) {
  Report out;
  const int n = q.order();
  const auto m = p.modulus;
  if (m < 2) throw DomainError("scalar pair modulus must be >= 2");
  if (p.n != n) throw DomainError("scalar pair does not match the quandle order");
  auto md = [m](std::int64_t v) { return checked::mod(v, m); };
  for (int x = 0; x < n; ++x)
    if (md(p.F1(x, x) + p.F2(x, x)) != 1 % m) out.push_back({"f1(x,x)+f2(x,x)=1", {x}, ""});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (std::gcd(p.F1(x, y), m) != 1) out.push_back({"f1 unit", {x, y}, ""});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Element xy = q.op(x, y), xz = q.op(x, z), yz = q.op(y, z);
        if (md(p.F1(xy, z) * p.F1(x, y) - p.F1(xz, yz) * p.F1(x, z)) != 0)
          out.push_back({"pair identity 1", {x, y, z}, ""});
        if (md(p.F1(xy, z) * p.F2(x, y) - p.F2(xz, yz) * p.F1(y, z)) != 0)
          out.push_back({"pair identity 2", {x, y, z}, ""});
        if (md(p.F2(xy, z) - p.F1(xz, yz) * p.F2(x, z) - p.F2(xz, yz) * p.F2(y, z)) != 0)
          out.push_back({"pair identity 3", {x, y, z}, ""});
      }
  return out;
}

FiniteQuandle build_module_quandle(const FiniteQuandle& q, const ScalarPair& p) {
  auto report = verify_scalar_pair(q, p);
  if (!report.empty()) throw DomainError("pair is not an Alexander pair: " + to_string(report.front()));
  const int n = q.order();
  const auto m = static_cast<int>(p.modulus);
  const int size = n * m;
  std::vector<Element> e(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < m; ++a)
      for (int y = 0; y < n; ++y)
        for (int b = 0; b < m; ++b) {
          const auto c = checked::mod(p.F1(x, y) * a + p.F2(x, y) * b, p.modulus);
          e[static_cast<std::size_t>((x * m + a) * size + (y * m + b))] = q.op(x, y) * m + static_cast<int>(c);
        }
  return FiniteQuandle(OpTable(size, std::move(e)));
}

}  // namespace qalex
