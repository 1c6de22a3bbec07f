#include "qalex/quandle.hpp"

#include <algorithm>
#include <numeric>

namespace qalex {

OpTable::OpTable(int n, std::vector<Element> e) : n(n), entries(std::move(e)) {
  if (n < 0 || entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw DomainError("operation table must have n*n entries");
  for (auto v : entries)
    if (v < 0 || v >= n) throw DomainError("table entry " + std::to_string(v) + " out of range");
}

OpTable OpTable::from_rows(const std::vector<std::vector<Element>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Element> e;
  e.reserve(rows.size() * rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size())
      throw DomainError("row " + std::to_string(r + 1) + ": expected " + std::to_string(n) + " entries");
    e.insert(e.end(), rows[r].begin(), rows[r].end());
  }
  return OpTable(n, std::move(e));
}

Report verify_quandle_axioms(const OpTable& t) {
  Report out;
  const int n = t.n;
  for (int x = 0; x < n; ++x)
    if (t.at(x, x) != x) out.push_back({"Q1", {x}, "x*x = " + std::to_string(t.at(x, x))});
  for (int y = 0; y < n; ++y) {
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) ++hits[static_cast<std::size_t>(t.at(x, y))];
    for (int z = 0; z < n; ++z)
      if (hits[static_cast<std::size_t>(z)] != 1)
        out.push_back({"Q2", {y, z}, "column " + std::to_string(y) + " hits " + std::to_string(z) + " " +
                                         std::to_string(hits[static_cast<std::size_t>(z)]) + " times"});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t.at(t.at(x, y), z) != t.at(t.at(x, z), t.at(y, z))) out.push_back({"Q3", {x, y, z}, ""});
  return out;
}

FiniteQuandle::FiniteQuandle(OpTable table) : table_(std::move(table)) {
  auto report = verify_quandle_axioms(table_);
  if (!report.empty()) {
    std::string msg = "not a quandle: " + to_string(report.front());
    if (report.size() > 1) msg += " (+" + std::to_string(report.size() - 1) + " more)";
    throw DomainError(msg);
  }
  const auto n = static_cast<std::size_t>(table_.n);
  inv_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      inv_[static_cast<std::size_t>(table_.entries[x * n + y]) * n + y] = static_cast<Element>(x);
}

Report verify_quandle_axioms(const FiniteQuandle& q) {
  Report out = verify_quandle_axioms(q.table());
  for (int x = 0; x < q.order(); ++x)
    for (int y = 0; y < q.order(); ++y)
      if (q.inv_op(q.op(x, y), y) != x || q.op(q.inv_op(x, y), y) != x) out.push_back({"dual", {x, y}, ""});
  return out;
}

// ---------------------------------------------------------------- groups

FiniteGroup::FiniteGroup(OpTable mult) : table(std::move(mult)) {
  const int n = table.n;
  if (n == 0) throw DomainError("empty group");
  identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table.at(e, a) == a && table.at(a, e) == a;
    if (ok) identity = e;
  }
  if (identity < 0) throw DomainError("group table has no identity");
  inverses.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table.at(a, b) == identity && table.at(b, a) == identity) inverses[static_cast<std::size_t>(a)] = b;
  for (int a = 0; a < n; ++a)
    if (inverses[static_cast<std::size_t>(a)] < 0) throw DomainError("element " + std::to_string(a) + " has no inverse");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table.at(table.at(a, b), c) != table.at(a, table.at(b, c)))
          throw DomainError("group table not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ")");
}

std::vector<std::vector<int>> permutations_lex(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

SymmetricGroup symmetric_group(int k) {
  auto perms = permutations_lex(k);
  const int n = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& p) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<Element> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<int> r(static_cast<std::size_t>(k));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& p = perms[static_cast<std::size_t>(a)];
      const auto& q = perms[static_cast<std::size_t>(b)];
      for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
      e[static_cast<std::size_t>(a * n + b)] = index_of(r);
    }
  return {FiniteGroup(OpTable(n, std::move(e))), std::move(perms)};
}

FiniteQuandle conj_quandle(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<Element> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) e[static_cast<std::size_t>(x * n + y)] = g.mul(g.mul(g.inv(y), x), y);
  return FiniteQuandle(OpTable(n, std::move(e)));
}

FiniteQuandle conjugacy_class_quandle(const FiniteGroup& g, Element rep, std::vector<Element>* members) {
  if (rep < 0 || rep >= g.order()) throw DomainError("class representative out of range");
  std::vector<Element> cls;
  for (int h = 0; h < g.order(); ++h) cls.push_back(g.mul(g.mul(g.inv(h), rep), h));
  std::sort(cls.begin(), cls.end());
  cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
  const int n = static_cast<int>(cls.size());
  auto pos = [&](Element a) { return static_cast<Element>(std::lower_bound(cls.begin(), cls.end(), a) - cls.begin()); };
  std::vector<Element> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element x = cls[static_cast<std::size_t>(i)], y = cls[static_cast<std::size_t>(j)];
      e[static_cast<std::size_t>(i * n + j)] = pos(g.mul(g.mul(g.inv(y), x), y));
    }
  if (members) *members = cls;
  return FiniteQuandle(OpTable(n, std::move(e)));
}

FiniteQuandle s4_four_cycle_quandle() {
  auto s4 = symmetric_group(4);
  // (0 1 2 3): 0->1->2->3->0
  std::vector<int> cycle{1, 2, 3, 0};
  auto rep = static_cast<Element>(std::lower_bound(s4.perms.begin(), s4.perms.end(), cycle) - s4.perms.begin());
  return conjugacy_class_quandle(s4.group, rep);
}

FiniteQuandle tetrahedron_quandle() {
  return FiniteQuandle(OpTable::from_rows({
      {0, 3, 1, 2},
      {2, 1, 3, 0},
      {3, 0, 2, 1},
      {1, 2, 0, 3},
  }));
}

FiniteQuandle dihedral_quandle(int n) {
  if (n < 1) throw DomainError("dihedral quandle needs n >= 1");
  std::vector<Element> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(i * n + j)] = ((2 * j - i) % n + n) % n;
  return FiniteQuandle(OpTable(n, std::move(e)));
}

FiniteQuandle trivial_quandle(int n) {
  if (n < 1) throw DomainError("trivial quandle needs n >= 1");
  std::vector<Element> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(i * n + j)] = i;
  return FiniteQuandle(OpTable(n, std::move(e)));
}

InnerData inner_group_and_faithfulness(const FiniteQuandle& q) {
  InnerData d;
  for (int x = 0; x < q.order(); ++x) {
    std::vector<Element> p(static_cast<std::size_t>(q.order()));
    for (int i = 0; i < q.order(); ++i) p[static_cast<std::size_t>(i)] = q.op(i, x);
    d.perms.push_back(std::move(p));
  }
  auto sorted = d.perms;
  std::sort(sorted.begin(), sorted.end());
  d.faithful = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  return d;
}

Report verify_homomorphism(const FiniteQuandle& source, const FiniteQuandle& target, const QuandleHom& f) {
  Report out;
  if (f.images.size() != static_cast<std::size_t>(source.order())) {
    out.push_back({"hom-size", {static_cast<long long>(f.images.size())}, "expected one image per source element"});
    return out;
  }
  for (std::size_t x = 0; x < f.images.size(); ++x)
    if (f.images[x] < 0 || f.images[x] >= target.order())
      out.push_back({"hom-range", {static_cast<long long>(x)}, "image out of range"});
  if (!out.empty()) return out;
  auto img = [&](Element x) { return f.images[static_cast<std::size_t>(x)]; };
  for (int x = 0; x < source.order(); ++x)
    for (int y = 0; y < source.order(); ++y)
      if (img(source.op(x, y)) != target.op(img(x), img(y))) out.push_back({"hom", {x, y}, ""});
  return out;
}

bool isomorphic(const FiniteQuandle& a, const FiniteQuandle& b) {
  if (a.order() != b.order()) return false;
  std::vector<int> p(static_cast<std::size_t>(a.order()));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (verify_homomorphism(a, b, QuandleHom{p}).empty()) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace qalex
