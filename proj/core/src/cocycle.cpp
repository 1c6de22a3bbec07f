#include "qalex/cocycle.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "qalex/checked.hpp"
#include "qalex/integer_matrix.hpp"

namespace qalex {

Cocycle Cocycle::trivial(const FiniteQuandle& q, const AbelianGroup& a) {
  const auto cells = static_cast<std::size_t>(q.order()) * static_cast<std::size_t>(q.order());
  return {q, a, std::vector<GroupElement>(cells, identity(a))};
}

Cocycle Cocycle::from_exponents(const FiniteQuandle& q, const AbelianGroup& a, const std::vector<std::int64_t>& exps) {
  const auto cells = static_cast<std::size_t>(q.order()) * static_cast<std::size_t>(q.order());
  if (exps.size() != cells) throw DomainError("cocycle table needs " + std::to_string(cells) + " entries");
  Cocycle c{q, a, {}};
  c.phi.reserve(cells);
  for (auto e : exps) c.phi.push_back(cyclic_element(a, e));
  return c;
}

std::vector<std::int64_t> Cocycle::exponents() const {
  if (group.rank() != 1) throw DomainError("exponent table needs a rank-1 group");
  std::vector<std::int64_t> out;
  for (const auto& g : phi) out.push_back(g.coords[0]);
  return out;
}

Report verify_cocycle(const Cocycle& c) {
  Report out;
  const int n = c.quandle.order();
  if (c.phi.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw DomainError("cocycle table does not match the quandle order");
  const auto& A = c.group;
  for (int x = 0; x < n; ++x)
    if (!is_identity(c.at(x, x))) out.push_back({"theta(x,x)=e", {x}, format_element(A, c.at(x, x))});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const auto& q = c.quandle;
        const auto lhs = compose(A, c.at(q.op(x, y), z), c.at(x, y));
        const auto rhs = compose(A, c.at(q.op(x, z), q.op(y, z)), c.at(x, z));
        if (lhs != rhs)
          out.push_back({"cocycle identity", {x, y, z}, format_element(A, lhs) + " != " + format_element(A, rhs)});
      }
  return out;
}

std::vector<std::int64_t> CocycleSpace::combine(const std::vector<std::int64_t>& coeffs) const {
  if (coeffs.size() != generators.size()) throw DomainError("coefficient count does not match the basis");
  std::vector<std::int64_t> out(generators.empty() ? 0 : generators.front().size(), 0);
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] = checked::mod(out[k] + checked::mod(coeffs[i], modulus) * generators[i][k], modulus);
  return out;
}

CocycleSpace search_cocycles(const FiniteQuandle& q, std::int64_t n) {
  if (n < 2) throw DomainError("cocycle search needs modulus >= 2");
  const auto N = static_cast<std::size_t>(q.order());
  auto var = [N](std::size_t x, std::size_t y) { return x * N + y; };
  std::vector<std::vector<std::int64_t>> eqs;
  for (std::size_t x = 0; x < N; ++x) {
    std::vector<std::int64_t> row(N * N, 0);
    row[var(x, x)] = 1;
    eqs.push_back(std::move(row));
  }
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t z = 0; z < N; ++z) {
        const auto xi = static_cast<Element>(x), yi = static_cast<Element>(y), zi = static_cast<Element>(z);
        std::vector<std::int64_t> row(N * N, 0);
        row[var(static_cast<std::size_t>(q.op(xi, yi)), z)] += 1;
        row[var(x, y)] += 1;
        row[var(static_cast<std::size_t>(q.op(xi, zi)), static_cast<std::size_t>(q.op(yi, zi)))] -= 1;
        row[var(x, z)] -= 1;
        if (std::any_of(row.begin(), row.end(), [](std::int64_t v) { return v != 0; })) eqs.push_back(std::move(row));
      }
  std::sort(eqs.begin(), eqs.end());
  eqs.erase(std::unique(eqs.begin(), eqs.end()), eqs.end());
  const auto kernel = kernel_mod(IntMatrix::from_rows(eqs, N * N), n);
  return {n, kernel.generators, kernel.orders};
}

// ---------------------------------------------------------------- colorings

bool is_coloring(const LinkDiagram& d, const FiniteQuandle& q, const Coloring& c) {
  if (c.size() != d.arc_count()) return false;
  for (auto v : c)
    if (v < 0 || v >= q.order()) return false;
  for (const auto& x : d.crossings())
    if (q.op(c[static_cast<std::size_t>(x.under_in)], c[static_cast<std::size_t>(x.over)], x.sign) !=
        c[static_cast<std::size_t>(x.under_out)])
      return false;
  return true;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const LinkDiagram& d, const FiniteQuandle& q) : d_(d), q_(q), order_(d.traversal_order()) {}

  std::vector<Coloring> run_from(Element first) {
    std::vector<Coloring> out;
    Coloring c(d_.arc_count(), -1);
    c[static_cast<std::size_t>(order_.front())] = first;
    if (propagate(c)) descend(c, out);
    return out;
  }

 private:
  // Fills forced colors; false on a contradiction.
  bool propagate(Coloring& c) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& x : d_.crossings()) {
        auto& ui = c[static_cast<std::size_t>(x.under_in)];
        auto& uo = c[static_cast<std::size_t>(x.under_out)];
        const auto o = c[static_cast<std::size_t>(x.over)];
        if (o < 0) continue;
        if (ui >= 0) {
          const Element v = q_.op(ui, o, x.sign);
          if (uo < 0) {
            uo = v;
            changed = true;
          } else if (uo != v) {
            return false;
          }
        } else if (uo >= 0) {
          ui = q_.op(uo, o, -x.sign);
          changed = true;
        }
      }
    }
    return true;
  }

  void descend(const Coloring& c, std::vector<Coloring>& out) const {
    auto it = std::find_if(order_.begin(), order_.end(), [&](int a) { return c[static_cast<std::size_t>(a)] < 0; });
    if (it == order_.end()) {
      if (is_coloring(d_, q_, c)) out.push_back(c);
      return;
    }
    for (Element v = 0; v < q_.order(); ++v) {
      Coloring next = c;
      next[static_cast<std::size_t>(*it)] = v;
      if (propagate(next)) descend(next, out);
    }
  }

  const LinkDiagram& d_;
  const FiniteQuandle& q_;
  std::vector<int> order_;
};

}  // namespace

std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const FiniteQuandle& q, unsigned workers) {
  ColoringSearch search(d, q);
  std::vector<std::vector<Coloring>> parts(static_cast<std::size_t>(q.order()));
  if (workers <= 1) {
    for (Element v = 0; v < q.order(); ++v) parts[static_cast<std::size_t>(v)] = search.run_from(v);
  } else {
    for (Element start = 0; start < q.order(); start += static_cast<Element>(workers)) {
      std::vector<std::future<std::vector<Coloring>>> jobs;
      for (Element v = start; v < std::min(q.order(), start + static_cast<Element>(workers)); ++v)
        jobs.push_back(std::async(std::launch::async, [&search, v] { return search.run_from(v); }));
      for (std::size_t i = 0; i < jobs.size(); ++i) parts[static_cast<std::size_t>(start) + i] = jobs[i].get();
    }
  }
  std::vector<Coloring> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  return all;
}

GroupElement weight(const LinkDiagram& d, std::size_t crossing, const Coloring& c, const Cocycle& theta) {
  const auto& x = d.crossing(crossing);
  const auto o = c[static_cast<std::size_t>(x.over)];
  if (x.sign > 0) return theta.at(c[static_cast<std::size_t>(x.under_in)], o);
  return inverse(theta.group, theta.at(c[static_cast<std::size_t>(x.under_out)], o));
}

std::vector<GroupElement> component_invariant(const LinkDiagram& d, const Coloring& c, const Cocycle& theta) {
  std::vector<GroupElement> out(d.component_count(), identity(theta.group));
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    auto& slot = out[static_cast<std::size_t>(d.component_of(d.crossing(i).under_in))];
    slot = compose(theta.group, slot, weight(d, i, c, theta));
  }
  return out;
}

// ---------------------------------------------------------------- multisets

std::size_t InvariantMultiset::total() const {
  std::size_t t = 0;
  for (const auto& [k, m] : entries) t += m;
  return t;
}

std::string InvariantMultiset::format_tuple(const std::vector<GroupElement>& tuple) const {
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) s += (i ? "," : "") + format_element(group, tuple[i]);
  return s + ")";
}

std::vector<std::string> InvariantMultiset::lines() const {
  std::vector<std::string> out;
  for (const auto& [k, m] : entries) out.push_back(format_tuple(k) + " x " + std::to_string(m));
  std::sort(out.begin(), out.end());
  return out;
}

InvariantMultiset cocycle_invariant(const LinkDiagram& d, const std::vector<Coloring>& colorings, const Cocycle& theta) {
  InvariantMultiset m{theta.group, {}};
  for (const auto& c : colorings) m.add(component_invariant(d, c, theta));
  return m;
}

InvariantMultiset cocycle_invariant(const LinkDiagram& d, const FiniteQuandle& q, const Cocycle& theta) {
  return cocycle_invariant(d, enumerate_colorings(d, q), theta);
}

InvariantMultiset parse_invariant_multiset(const AbelianGroup& a, std::string_view text) {
  InvariantMultiset m{a, {}};
  std::string s(text);
  std::replace(s.begin(), s.end(), '\n', ';');
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ';')) {
    const auto first = item.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto open = item.find('('), close = item.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw ParseError(0, "invariant entry '" + item + "' needs a parenthesised tuple");
    std::vector<GroupElement> tuple;
    std::istringstream parts(item.substr(open + 1, close - open - 1));
    std::string part;
    while (std::getline(parts, part, ',')) {
      const auto r = GroupRingElem::parse(a, part);
      if (r.terms().size() != 1 || r.terms().begin()->second != 1)
        throw ParseError(0, "'" + part + "' is not a group element");
      tuple.push_back(r.terms().begin()->first);
    }
    std::size_t mult = 1;
    std::string rest = item.substr(close + 1);
    const auto x = rest.find('x');
    if (x != std::string::npos) {
      try {
        mult = std::stoul(rest.substr(x + 1));
      } catch (const std::exception&) {
        throw ParseError(0, "bad multiplicity in '" + item + "'");
      }
    } else if (rest.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError(0, "unexpected text after tuple in '" + item + "'");
    }
    m.add(tuple, mult);
  }
  return m;
}

CocycleSearchResult find_cocycle(const FiniteQuandle& q, const CocycleSpace& space, const AbelianGroup& a,
                                 const LinkDiagram* d, const InvariantMultiset* filter, std::size_t budget) {
  CocycleSearchResult res;
  const auto k = space.generators.size();
  std::vector<std::int64_t> coeffs(k, 0);
  std::vector<Coloring> colorings;
  if (d && filter) colorings = enumerate_colorings(*d, q);
  while (res.examined < budget) {
    ++res.examined;
    auto exps = space.combine(coeffs);
    if (exps.empty()) exps.assign(static_cast<std::size_t>(q.order() * q.order()), 0);
    bool ok = true;
    if (d && filter) ok = cocycle_invariant(*d, colorings, Cocycle::from_exponents(q, a, exps)) == *filter;
    if (ok) {
      res.exponents = std::move(exps);
      res.coefficients = coeffs;
      return res;
    }
    // Next coefficient vector, last position fastest.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++coeffs[i] < space.orders[i]) break;
      coeffs[i] = 0;
      if (i == 0) return res;
    }
    if (k == 0) return res;
  }
  return res;
}

}  // namespace qalex
