#include "qalex/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace qalex {

namespace {

[[noreturn]] void fail_at(const std::vector<std::size_t>& lines, std::size_t i, const std::string& msg) {
  if (i < lines.size()) throw ParseError(lines[i], msg);
  throw DomainError("crossing " + std::to_string(i + 1) + ": " + msg);
}

}  // namespace

LinkDiagram LinkDiagram::from_labelled(const std::vector<Crossing>& labelled,
                                       const std::vector<std::size_t>& lines) {
  if (labelled.empty()) throw DomainError("diagram has no crossings");
  std::set<long> label_set;
  for (const auto& c : labelled) {
    if (c.sign != 1 && c.sign != -1) throw DomainError("crossing sign must be +1 or -1");
    label_set.insert(c.over);
    label_set.insert(c.under_in);
    label_set.insert(c.under_out);
  }
  LinkDiagram d;
  d.labels_.assign(label_set.begin(), label_set.end());
  std::map<long, int> index;
  for (std::size_t i = 0; i < d.labels_.size(); ++i) index[d.labels_[i]] = static_cast<int>(i);
  const auto n = d.labels_.size();

  d.end_crossing_.assign(n, -1);
  std::vector<int> start_crossing(n, -1);
  for (std::size_t i = 0; i < labelled.size(); ++i) {
    const auto& c = labelled[i];
    Crossing k{index[c.over], index[c.under_in], index[c.under_out], c.sign};
    auto& e = d.end_crossing_[static_cast<std::size_t>(k.under_in)];
    if (e >= 0)
      fail_at(lines, i, "arc " + std::to_string(c.under_in) + " ends at two crossings (also crossing " +
                            std::to_string(e + 1) + ")");
    e = static_cast<int>(i);
    auto& s = start_crossing[static_cast<std::size_t>(k.under_out)];
    if (s >= 0)
      fail_at(lines, i, "arc " + std::to_string(c.under_out) + " starts at two crossings (also crossing " +
                            std::to_string(s + 1) + ")");
    s = static_cast<int>(i);
    d.crossings_.push_back(k);
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (d.end_crossing_[a] < 0) throw DomainError("dangling arc " + std::to_string(d.labels_[a]) + ": it never ends");
    if (start_crossing[a] < 0) throw DomainError("dangling arc " + std::to_string(d.labels_[a]) + ": it never starts");
  }

  d.successor_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    d.successor_[a] = d.crossings_[static_cast<std::size_t>(d.end_crossing_[a])].under_out;

  d.component_of_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    if (d.component_of_[a] >= 0) continue;
    const int comp = static_cast<int>(d.components_.size());
    std::vector<int> arcs;
    int cur = static_cast<int>(a);
    while (d.component_of_[static_cast<std::size_t>(cur)] < 0) {
      d.component_of_[static_cast<std::size_t>(cur)] = comp;
      arcs.push_back(cur);
      cur = d.successor_[static_cast<std::size_t>(cur)];
    }
    if (cur != static_cast<int>(a)) throw DomainError("inconsistent orientation at arc " + std::to_string(d.labels_[a]));
    d.components_.push_back(std::move(arcs));
  }
  return d;
}

std::vector<int> LinkDiagram::traversal_order() const {
  std::vector<int> out;
  for (const auto& c : components_) out.insert(out.end(), c.begin(), c.end());
  return out;
}

LinkDiagram LinkDiagram::relabelled(const std::vector<int>& perm) const {
  if (perm.size() != arc_count()) throw DomainError("relabelling has the wrong size");
  std::vector<Crossing> cs;
  for (const auto& c : crossings_)
    cs.push_back({perm[static_cast<std::size_t>(c.over)], perm[static_cast<std::size_t>(c.under_in)],
                  perm[static_cast<std::size_t>(c.under_out)], c.sign});
  return from_labelled(cs);
}

// ---------------------------------------------------------------- text form

LinkDiagram parse_pd(std::string_view text) {
  std::vector<Crossing> cs;
  std::vector<std::size_t> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto h = raw.find('#');
    if (h != std::string::npos) raw.resize(h);
    std::string s;
    for (char ch : raw)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) continue;
    if (s.size() < 4 || s[0] != 'X' || s[1] != '[' || s.back() != ']')
      throw ParseError(line_no, "expected X[over,under_in,under_out,sign]");
    std::vector<std::string> fields;
    std::string cur;
    for (std::size_t i = 2; i + 1 < s.size(); ++i) {
      if (s[i] == ',') {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur += s[i];
      }
    }
    fields.push_back(cur);
    if (fields.size() != 4) throw ParseError(line_no, "expected 4 fields, got " + std::to_string(fields.size()));
    Crossing c;
    int* slots[3] = {&c.over, &c.under_in, &c.under_out};
    for (int k = 0; k < 3; ++k) {
      const auto& f = fields[static_cast<std::size_t>(k)];
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(f, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (f.empty() || used != f.size()) throw ParseError(line_no, "arc label '" + f + "' is not an integer");
      *slots[k] = static_cast<int>(v);
    }
    const auto& sg = fields[3];
    if (sg == "+" || sg == "+1" || sg == "1")
      c.sign = 1;
    else if (sg == "-" || sg == "-1")
      c.sign = -1;
    else
      throw ParseError(line_no, "sign must be + or -, got '" + sg + "'");
    cs.push_back(c);
    lines.push_back(line_no);
  }
  if (cs.empty()) throw ParseError(line_no, "no crossings");
  return LinkDiagram::from_labelled(cs, lines);
}

std::string format_pd(const LinkDiagram& d) {
  std::string out;
  for (const auto& c : d.crossings())
    out += "X[" + std::to_string(c.over) + "," + std::to_string(c.under_in) + "," + std::to_string(c.under_out) + "," +
           (c.sign > 0 ? "+" : "-") + "]\n";
  return out;
}

LinkDiagram diagram_from_edge_pd(const std::vector<std::array<int, 4>>& code) {
  if (code.empty()) throw DomainError("empty planar diagram");
  // Edge components from the strand pairs, then consecutive numbering.
  std::map<int, int> parent;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    for (int e : {a, b})
      if (!parent.count(e)) parent[e] = e;
    parent[find(a)] = find(b);
  };
  for (const auto& x : code) {
    unite(x[0], x[2]);
    unite(x[1], x[3]);
  }
  std::map<int, std::pair<int, int>> range;  // root -> (min, max)
  for (const auto& [e, p] : parent) {
    const int r = find(e);
    auto it = range.find(r);
    if (it == range.end())
      range[r] = {e, e};
    else
      it->second = {std::min(it->second.first, e), std::max(it->second.second, e)};
  }
  std::map<int, int> members;
  for (const auto& [e, p] : parent) ++members[find(e)];
  for (const auto& [r, mm] : range)
    if (mm.second - mm.first + 1 != members[r]) throw DomainError("edges of a component are not numbered consecutively");
  auto succ = [&](int e) {
    const auto& mm = range[find(e)];
    return e == mm.second ? mm.first : e + 1;
  };

  // Arc label of an edge: the edge where its arc starts (after an undercrossing).
  std::set<int> arc_starts;
  for (const auto& x : code) arc_starts.insert(x[2]);
  std::map<int, int> arc_of;
  for (const auto& [e, p] : parent) {
    int cur = e;
    std::size_t guard = 0;
    while (!arc_starts.count(cur)) {
      // step backwards
      const auto& mm = range[find(cur)];
      cur = cur == mm.first ? mm.second : cur - 1;
      if (++guard > parent.size()) throw DomainError("component without undercrossings");
    }
    arc_of[e] = cur;
  }

  std::vector<Crossing> cs;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto& x = code[i];
    if (succ(x[0]) != x[2]) throw DomainError("crossing " + std::to_string(i + 1) + ": under strand is not consecutive");
    const bool lj = succ(x[3]) == x[1], jl = succ(x[1]) == x[3];
    if (lj == jl) throw DomainError("crossing " + std::to_string(i + 1) + ": over strand orientation is ambiguous");
    cs.push_back({arc_of[x[1]], arc_of[x[0]], arc_of[x[2]], lj ? 1 : -1});
  }
  return LinkDiagram::from_labelled(cs);
}

// ---------------------------------------------------------------- presentations

Presentation wirtinger_presentation(const LinkDiagram& d) {
  Presentation p;
  p.n_gens = static_cast<int>(d.arc_count());
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto& c = d.crossing(i);
    p.relators.emplace_back(Term::op(Term::gen(c.under_in), Term::gen(c.over), c.sign), Term::gen(c.under_out));
    p.origins.push_back({static_cast<int>(i), d.component_of(c.under_in), c.sign});
  }
  return p;
}

OrderedWirtinger component_ordered_wirtinger(const LinkDiagram& d) {
  OrderedWirtinger w;
  w.generator_arcs = d.traversal_order();
  std::vector<int> gen_of(d.arc_count());
  for (std::size_t k = 0; k < w.generator_arcs.size(); ++k)
    gen_of[static_cast<std::size_t>(w.generator_arcs[k])] = static_cast<int>(k);
  for (std::size_t c = 0; c < d.component_count(); ++c) w.block_sizes.push_back(d.component_arcs(c).size());

  w.presentation.n_gens = static_cast<int>(d.arc_count());
  for (int arc : w.generator_arcs) {
    const int ci = d.end_crossing(arc);
    const auto& c = d.crossing(static_cast<std::size_t>(ci));
    auto g = [&](int a) { return Term::gen(gen_of[static_cast<std::size_t>(a)]); };
    w.presentation.relators.emplace_back(Term::op(g(c.under_in), g(c.over), c.sign), g(c.under_out));
    w.presentation.origins.push_back({ci, d.component_of(arc), c.sign});
    w.relator_crossings.push_back(ci);
  }
  return w;
}

bool check_coloring_correspondence(const LinkDiagram& d, const FiniteQuandle& q, const std::vector<Element>& gen_images) {
  if (gen_images.size() != d.arc_count()) throw DomainError("expected one color per arc");
  return failing_relators(wirtinger_presentation(d), gen_images, q).empty();
}

long wirtinger_deficiency(const LinkDiagram& d) {
  return static_cast<long>(d.arc_count()) - static_cast<long>(d.crossing_count());
}

long deficiency_bound(const Presentation& p) {
  return static_cast<long>(p.n_gens) - static_cast<long>(p.relators.size());
}

}  // namespace qalex
