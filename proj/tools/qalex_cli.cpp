#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qalex/cocycle.hpp"
#include "qalex/diagram.hpp"
#include "qalex/ideal.hpp"
#include "qalex/io.hpp"
#include "qalex/twisted.hpp"

using json = nlohmann::ordered_json;
using namespace qalex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitExhausted = 3;

struct Global {
  std::string format = "text";
  std::size_t max_dim = kDefaultMaxDim;
  std::size_t budget = 1000000;
  unsigned jobs = 1;
  bool json() const { return format == "json"; }
};

/// Semantic failure carrying its own exit code.
struct CommandFailure : Error {
  int code;
  CommandFailure(int c, const std::string& what) : Error(what), code(c) {}
};

// ---------------------------------------------------------------- inputs

FiniteQuandle builtin_quandle(const std::string& name) {
  auto param = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      return std::stoi(name.substr(prefix.size()));
    } catch (const std::exception&) {
      throw ParseError(0, "bad builtin quandle '" + name + "'");
    }
  };
  if (name == "tetrahedron") return tetrahedron_quandle();
  if (name == "r3") return dihedral_quandle(3);
  if (name == "s4-4cycles") return s4_four_cycle_quandle();
  if (auto n = param("dihedral:")) return dihedral_quandle(*n);
  if (auto n = param("trivial:")) return trivial_quandle(*n);
  throw ParseError(0, "unknown builtin quandle '" + name + "' (tetrahedron, r3, s4-4cycles, dihedral:N, trivial:N)");
}

FiniteQuandle quandle_from_table(const OpTable& t, const std::string& where) {
  const auto report = verify_quandle_axioms(t);
  if (!report.empty())
    throw CommandFailure(kExitFailure, where + " is not a quandle: " + to_string(report.front()) + " (" +
                                           std::to_string(report.size()) + " violations)");
  return FiniteQuandle(t);
}

std::string with_path(const std::string& path, const std::string& text) { return path + ": " + text; }

template <class F>
auto parse_file(const std::string& path, F&& parse) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw CommandFailure(kExitParse, e.what());
  }
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(0, with_path(path, e.what()));
  }
}

FiniteQuandle load_quandle(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return builtin_quandle(spec.substr(8));
  return quandle_from_table(parse_file(spec, parse_quandle), spec);
}

LinkDiagram load_diagram(const std::string& path) { return parse_file(path, parse_pd); }
Presentation load_presentation(const std::string& path) { return parse_file(path, parse_presentation); }

Cocycle load_cocycle(const std::string& path, const std::optional<FiniteQuandle>& q) {
  const auto f = parse_file(path, parse_cocycle_file);
  std::optional<FiniteQuandle> base = q;
  if (f.quandle) {
    auto embedded = quandle_from_table(*f.quandle, path);
    if (base && !(*base == embedded))
      throw CommandFailure(kExitFailure, path + ": embedded quandle differs from --quandle");
    base = embedded;
  }
  if (!base) throw CommandFailure(kExitFailure, path + ": no quandle given (use --quandle or embed one)");
  if (base->order() != f.n)
    throw CommandFailure(kExitFailure, path + ": cocycle order " + std::to_string(f.n) + " differs from quandle order " +
                                           std::to_string(base->order()));
  return Cocycle::from_exponents(*base, f.group, f.exponents);
}

std::vector<Element> parse_images(const std::string& text) {
  std::vector<Element> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError(0, "bad image list '" + text + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------- output

void emit(const Global& g, const std::string& text, const json& j) {
  if (g.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json report_json(const Report& r) {
  json a = json::array();
  for (const auto& v : r) a.push_back({{"rule", v.rule}, {"witness", v.witness}, {"detail", v.detail}});
  return a;
}

std::string report_text(const std::string& what, const Report& r) {
  if (r.empty()) return "PASS " + what + "\n";
  std::string s = "FAIL " + what + ": " + std::to_string(r.size()) + " violations\n";
  const std::size_t shown = std::min<std::size_t>(r.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) s += "  " + to_string(r[i]) + "\n";
  if (shown < r.size()) s += "  ... and " + std::to_string(r.size() - shown) + " more\n";
  return s;
}

std::string ideal_label(const GroupRingElem& generator) {
  return generator.is_zero() ? "(0)" : "(" + normalize_associate(generator).to_string() + ")";
}

std::vector<std::string> counted_lines(const std::map<std::string, std::size_t>& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k + " x " + std::to_string(v));
  return out;
}

// ---------------------------------------------------------------- matrix inputs

struct MatrixInputs {
  std::string presentation, diagram, quandle, images, pair, cocycle;
  bool alexander = false;
};

void add_matrix_options(CLI::App* c, MatrixInputs& in) {
  auto* src = c->add_option_group("source");
  src->add_option("--presentation", in.presentation, "Presentation file");
  src->add_option("--diagram", in.diagram, "PD file (Wirtinger presentation)");
  src->require_option(1);
  c->add_option("--quandle", in.quandle, "Target quandle file or builtin:<name>")->required();
  c->add_option("--images", in.images, "Generator images, e.g. 0,1 (a coloring for diagrams)");
  auto* pair = c->add_option_group("pair");
  pair->add_flag("--alexander", in.alexander, "Pair (t, 1-t) over Z[t^+-1]");
  pair->add_option("--pair", in.pair, "Pair file");
  pair->add_option("--cocycle", in.cocycle, "Cocycle file; uses the pair (theta, 0)");
  pair->require_option(1);
}

DerivativeContext build_context(const MatrixInputs& in) {
  const auto q = load_quandle(in.quandle);
  Presentation p = in.diagram.empty() ? load_presentation(in.presentation) : wirtinger_presentation(load_diagram(in.diagram));
  std::vector<Element> images;
  if (!in.images.empty())
    images = parse_images(in.images);
  else if (q.order() == 1)
    images.assign(static_cast<std::size_t>(p.n_gens), 0);
  else
    throw CommandFailure(kExitParse, "--images is required unless the quandle has one element");
  AlexanderPairTable pair;
  if (in.alexander) {
    pair = alexander_pair(q.order());
  } else if (!in.pair.empty()) {
    pair = parse_file(in.pair, parse_pair);
  } else {
    pair = cocycle_pair(load_cocycle(in.cocycle, q));
  }
  return DerivativeContext(std::move(p), q, std::move(images), std::move(pair));
}

// ---------------------------------------------------------------- commands

int cmd_check(const Global& g, const std::string& quandle, const std::string& pair, const std::string& cocycle,
              const std::string& presentation, const std::string& diagram) {
  std::string text;
  json j = json::object();
  bool ok = true;
  std::optional<FiniteQuandle> q;
  auto record = [&](const std::string& kind, const std::string& path, const Report& r) {
    text += report_text(kind + " " + path, r);
    j[kind] = {{"path", path}, {"pass", r.empty()}, {"violations", report_json(r)}};
    ok = ok && r.empty();
  };
  if (!quandle.empty()) {
    if (quandle.rfind("builtin:", 0) == 0) {
      q = load_quandle(quandle);
      record("quandle", quandle, verify_quandle_axioms(*q));
    } else {
      const auto t = parse_file(quandle, parse_quandle);
      const auto r = verify_quandle_axioms(t);
      record("quandle", quandle, r);
      if (r.empty()) q = FiniteQuandle(t);
    }
  }
  if (!cocycle.empty()) {
    const auto f = parse_file(cocycle, parse_cocycle_file);
    const auto embedded = f.quandle ? verify_quandle_axioms(*f.quandle) : Report{};
    if (!embedded.empty())
      record("cocycle_quandle", cocycle, embedded);
    else
      record("cocycle", cocycle, verify_cocycle(load_cocycle(cocycle, q)));
  }
  if (!pair.empty()) {
    if (!q) throw CommandFailure(kExitFailure, "--pair needs a valid --quandle");
    record("pair", pair, verify_alexander_pair(*q, parse_file(pair, parse_pair)));
  }
  if (!presentation.empty()) {
    const auto p = load_presentation(presentation);
    text += "PASS presentation " + presentation + " (" + std::to_string(p.n_gens) + " generators, " +
            std::to_string(p.relators.size()) + " relators)\n";
    j["presentation"] = {{"path", presentation}, {"pass", true}};
  }
  if (!diagram.empty()) {
    const auto d = load_diagram(diagram);
    text += "PASS diagram " + diagram + " (" + std::to_string(d.arc_count()) + " arcs, " +
            std::to_string(d.crossing_count()) + " crossings, " + std::to_string(d.component_count()) + " components)\n";
    j["diagram"] = {{"path", diagram}, {"pass", true}};
  }
  j["pass"] = ok;
  emit(g, text, j);
  return ok ? kExitOk : kExitFailure;
}

int cmd_colorings(const Global& g, const std::string& diagram, const std::string& quandle, bool list) {
  const auto d = load_diagram(diagram);
  const auto q = load_quandle(quandle);
  const auto cs = enumerate_colorings(d, q, g.jobs);
  std::string text = "colorings: " + std::to_string(cs.size()) + "\n";
  json j{{"count", cs.size()}};
  if (list) {
    j["colorings"] = cs;
    for (const auto& c : cs) {
      for (std::size_t i = 0; i < c.size(); ++i) text += (i ? " " : "") + std::to_string(c[i]);
      text += "\n";
    }
  }
  emit(g, text, j);
  return kExitOk;
}

struct InvariantData {
  InvariantMultiset phi;
  std::map<std::string, std::size_t> ideals;
  std::vector<IntMatrix> lattices;  // per coloring, finite groups only
  std::optional<std::size_t> first_mismatch;
  std::size_t colorings = 0;
};

InvariantData compute_invariants(const Global& g, const LinkDiagram& d, const Cocycle& theta) {
  InvariantData out;
  const auto cs = enumerate_colorings(d, theta.quandle, g.jobs);
  out.colorings = cs.size();
  out.phi = cocycle_invariant(d, cs, theta);
  const auto pair = cocycle_pair(theta);
  const auto a = theta.group;
  const auto pres = wirtinger_presentation(d);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const DerivativeContext ctx(pres, theta.quandle, cs[i], pair, false);
    const auto e0 = elementary_ideal(twisted_matrix(ctx), 0, g.max_dim);
    const auto gen = e0.generators.empty() ? GroupRingElem(a) : e0.generators.front();
    ++out.ideals[ideal_label(gen)];
    auto rhs = GroupRingElem::one(a);
    for (const auto& x : component_invariant(d, cs[i], theta)) rhs = rhs * (GroupRingElem::monomial(a, x) - GroupRingElem::one(a));
    const IdealGens r{a, {rhs}};
    bool same = false;
    if (a.is_finite()) {
      out.lattices.push_back(ideal_lattice(e0));
      same = ideal_equal_finite(e0, r);
    } else {
      same = trivially_associated(gen, rhs) || (gen.is_zero() && rhs.is_zero());
    }
    if (!same && !out.first_mismatch) out.first_mismatch = i;
  }
  return out;
}

std::string coloring_text(const Coloring& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return "[" + s + "]";
}

int cmd_invariant(const Global& g, const std::string& diagram, const std::string& quandle, const std::string& cocycle) {
  const auto d = load_diagram(diagram);
  std::optional<FiniteQuandle> q;
  if (!quandle.empty()) q = load_quandle(quandle);
  const auto theta = load_cocycle(cocycle, q);
  const auto inv = compute_invariants(g, d, theta);
  std::string text = "cocycle invariant:\n";
  for (const auto& l : inv.phi.lines()) text += "  " + l + "\n";
  text += "E_0 ideals:\n";
  for (const auto& l : counted_lines(inv.ideals)) text += "  " + l + "\n";
  json j{{"colorings", inv.colorings}, {"cocycle_invariant", inv.phi.lines()}, {"e0_ideals", counted_lines(inv.ideals)}};
  if (inv.first_mismatch) {
    const auto cs = enumerate_colorings(d, theta.quandle, g.jobs);
    const auto& c = cs[*inv.first_mismatch];
    text += "correspondence: MISMATCH at coloring " + coloring_text(c) + "\n";
    j["correspondence"] = false;
    j["first_mismatch"] = c;
    emit(g, text, j);
    return kExitFailure;
  }
  text += "correspondence: OK (" + std::to_string(inv.colorings) + " colorings)\n";
  j["correspondence"] = true;
  emit(g, text, j);
  return kExitOk;
}

std::string matrix_text(const RingMatrix& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? ", " : "") + m(r, c).to_string();
    s += "]\n";
  }
  if (m.rows() == 0) s += "(" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix)\n";
  return s;
}

json matrix_json(const RingMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json ideal_json(const IdealGens& i) {
  json a = json::array();
  for (const auto& x : i.generators) a.push_back(x.to_string());
  return a;
}

int cmd_matrix(const Global& g, const MatrixInputs& in, const std::vector<long>& ds, bool print_matrix, bool raw) {
  const auto ctx = build_context(in);
  const auto m = twisted_matrix(ctx);
  std::string text;
  json j;
  if (print_matrix) {
    text += matrix_text(m);
    j["matrix"] = matrix_json(m);
  }
  json ideals = json::object();
  for (long d : ds) {
    auto e = elementary_ideal(m, d, g.max_dim);
    if (!raw) e = e.simplified();
    text += (print_matrix || ds.size() > 1 ? "E_" + std::to_string(d) + ": " : "") + e.to_string() + "\n";
    ideals[std::to_string(d)] = ideal_json(e);
  }
  if (!ds.empty()) j["ideals"] = ideals;
  emit(g, text, j);
  return kExitOk;
}

int cmd_search(const Global& g, const std::string& quandle, std::int64_t modulus, const std::string& diagram,
               const std::string& filter, const std::string& output, bool embed) {
  const auto q = load_quandle(quandle);
  const auto a = AbelianGroup::cyclic(modulus);
  const auto space = search_cocycles(q, modulus);
  std::optional<LinkDiagram> d;
  std::optional<InvariantMultiset> f;
  if (!filter.empty() || !diagram.empty()) {
    if (filter.empty() || diagram.empty()) throw CommandFailure(kExitParse, "--filter and --diagram go together");
    d = load_diagram(diagram);
    f = parse_invariant_multiset(a, filter);
  }
  const auto res = find_cocycle(q, space, a, d ? &*d : nullptr, f ? &*f : nullptr, g.budget);
  json j{{"modulus", modulus}, {"basis_orders", space.orders}, {"examined", res.examined}, {"found", res.exponents.has_value()}};
  if (!res.exponents) {
    j["message"] = "no matching cocycle within budget";
    emit(g, "no matching cocycle after " + std::to_string(res.examined) + " candidates\n", j);
    return kExitExhausted;
  }
  CocycleFile file{q.order(), a, *res.exponents, std::nullopt};
  if (embed) file.quandle = q.table();
  const auto body = format_cocycle_file(file);
  j["coefficients"] = res.coefficients;
  j["cocycle"] = body;
  std::string text;
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw Error("cannot write '" + output + "'");
    out << body;
    text = "wrote " + output + " (candidate " + std::to_string(res.examined) + ", basis of " +
           std::to_string(space.generators.size()) + " generators)\n";
  } else {
    text = body;
  }
  emit(g, text, j);
  return kExitOk;
}

json theorem_json(const TheoremCheck& t, const AbelianGroup& a) {
  json blocks = json::array();
  for (const auto& b : t.per_block)
    blocks.push_back({{"component", b.component + 1},
                      {"size", b.size},
                      {"phi", format_element(a, b.phi)},
                      {"det", b.determinant.to_string()},
                      {"structure_ok", b.structure_ok},
                      {"det_matches", b.determinant_ok}});
  return {{"lhs_generators", ideal_json(t.lhs_generators)},
          {"rhs_generator", t.rhs_generator.to_string()},
          {"equal", t.ok()},
          {"det_equal", t.det_equal},
          {"ideal_equal", t.ideal_equal},
          {"structure_ok", t.structure_ok},
          {"per_block", blocks}};
}

int cmd_verify(const Global& g, const std::string& diagram, const std::string& quandle, const std::string& cocycle,
               const std::string& coloring) {
  const auto d = load_diagram(diagram);
  std::optional<FiniteQuandle> q;
  if (!quandle.empty()) q = load_quandle(quandle);
  const auto theta = load_cocycle(cocycle, q);
  const auto report = verify_cocycle(theta);
  if (!report.empty()) throw CommandFailure(kExitFailure, "cocycle fails verification: " + to_string(report.front()));
  std::vector<Coloring> cs;
  if (!coloring.empty()) {
    cs.push_back(parse_images(coloring));
    if (!is_coloring(d, theta.quandle, cs.back()))
      throw CommandFailure(kExitFailure, "not a coloring: " + coloring_text(cs.back()));
  } else {
    cs = enumerate_colorings(d, theta.quandle, g.jobs);
  }
  std::string text;
  json results = json::array();
  std::size_t failures = 0;
  for (const auto& c : cs) {
    const auto t = verify_theorem(d, theta, c, g.max_dim);
    if (!t.ok()) ++failures;
    if (cs.size() == 1 || (!t.ok() && failures == 1)) text += "coloring " + coloring_text(c) + "\n" + t.to_text();
    auto jt = theorem_json(t, theta.group);
    jt["coloring"] = c;
    results.push_back(jt);
  }
  text += "checked " + std::to_string(cs.size()) + " colorings, " + std::to_string(failures) + " failures\n";
  emit(g, text, json{{"colorings", cs.size()}, {"failures", failures}, {"results", results}});
  return failures == 0 ? kExitOk : kExitFailure;
}

int cmd_distinguish(const Global& g, const std::vector<std::string>& diagrams, const std::string& quandle,
                    const std::string& cocycle) {
  std::optional<FiniteQuandle> q;
  if (!quandle.empty()) q = load_quandle(quandle);
  const auto theta = load_cocycle(cocycle, q);
  if (!theta.group.is_finite()) throw CommandFailure(kExitFailure, "distinguish needs a finite coefficient group");
  std::vector<InvariantData> inv;
  std::vector<std::map<std::vector<std::int64_t>, std::size_t>> keyed;
  for (const auto& path : diagrams) {
    inv.push_back(compute_invariants(g, load_diagram(path), theta));
    std::map<std::vector<std::int64_t>, std::size_t> m;
    for (const auto& lat : inv.back().lattices) {
      std::vector<std::int64_t> key{static_cast<std::int64_t>(lat.rows())};
      for (std::size_t r = 0; r < lat.rows(); ++r) {
        const auto row = lat.row(r);
        key.insert(key.end(), row.begin(), row.end());
      }
      ++m[key];
    }
    keyed.push_back(std::move(m));
  }
  const bool distinct = keyed[0] != keyed[1];
  std::string text;
  json j{{"distinguished", distinct}};
  json each = json::array();
  for (std::size_t i = 0; i < 2; ++i) {
    text += diagrams[i] + ":\n";
    for (const auto& l : counted_lines(inv[i].ideals)) text += "  " + l + "\n";
    each.push_back({{"path", diagrams[i]}, {"colorings", inv[i].colorings}, {"e0_ideals", counted_lines(inv[i].ideals)},
                    {"cocycle_invariant", inv[i].phi.lines()}});
  }
  j["diagrams"] = each;
  text += distinct ? "DISTINGUISHED\n" : "NOT-DISTINGUISHED\n";
  emit(g, text, j);
  return kExitOk;
}

int cmd_deficiency(const Global& g, const std::string& presentation, const std::string& diagram) {
  const auto p = diagram.empty() ? load_presentation(presentation) : wirtinger_presentation(load_diagram(diagram));
  const auto def = deficiency_bound(p);
  emit(g,
       "generators: " + std::to_string(p.n_gens) + "\nrelators: " + std::to_string(p.relators.size()) +
           "\ndeficiency_bound: " + std::to_string(def) + "\n",
       json{{"generators", p.n_gens}, {"relators", p.relators.size()}, {"deficiency_bound", def}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qalex: quandle colorings, cocycle invariants and twisted Alexander ideals"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-dim", g.max_dim, "Largest matrix dimension for minor enumeration");
  app.add_option("--budget", g.budget, "Candidate limit for cocycle search");
  app.add_option("--jobs", g.jobs, "Worker threads for coloring enumeration")->check(CLI::Range(1u, 64u));

  std::string quandle, pair, cocycle, presentation, diagram, images, output, filter, coloring, builtin;
  std::vector<std::string> diagrams;
  std::vector<long> ds;
  bool list = false, raw = false, embed = false;
  std::int64_t modulus = 0;
  MatrixInputs mi;

  auto* check = app.add_subcommand("check", "Verify quandle, pair and cocycle tables; parse presentations and diagrams");
  check->add_option("--quandle", quandle, "Quandle file or builtin:<name>");
  check->add_option("--pair", pair, "Alexander pair file (needs --quandle)");
  check->add_option("--cocycle", cocycle, "Cocycle file");
  check->add_option("--presentation", presentation, "Presentation file");
  check->add_option("--diagram", diagram, "PD file");

  auto* colorings = app.add_subcommand("colorings", "Count (or list) the colorings of a diagram");
  colorings->add_option("--diagram", diagram)->required();
  colorings->add_option("--quandle", quandle)->required();
  colorings->add_flag("--list", list, "Print every coloring");

  auto* invariant = app.add_subcommand("invariant", "Cocycle invariant and E_0 ideal multisets");
  invariant->add_option("--diagram", diagram)->required();
  invariant->add_option("--quandle", quandle);
  invariant->add_option("--cocycle", cocycle)->required();

  auto* matrix = app.add_subcommand("matrix", "Twisted Alexander matrix and elementary ideals");
  add_matrix_options(matrix, mi);
  matrix->add_option("--d", ds, "Elementary ideal index (repeatable)");
  matrix->add_flag("--raw", raw, "List every minor instead of the simplified generators");

  auto* ideal = app.add_subcommand("ideal", "Elementary ideals only");
  MatrixInputs mi2;
  add_matrix_options(ideal, mi2);
  ideal->add_option("--d", ds, "Elementary ideal index (repeatable)")->required();
  ideal->add_flag("--raw", raw, "List every minor instead of the simplified generators");

  auto* search = app.add_subcommand("search-cocycle", "Find a Z_n cocycle, optionally matching an invariant");
  search->add_option("--quandle", quandle)->required();
  search->add_option("--modulus", modulus)->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 30));
  search->add_option("--diagram", diagram, "Diagram for the filter");
  search->add_option("--filter", filter, "Required invariant, e.g. \"(1) x 6; (u) x 24\"");
  search->add_option("--output", output, "Write the cocycle file here");
  search->add_flag("--embed-quandle", embed, "Append the quandle table to the cocycle file");

  auto* verify = app.add_subcommand("verify-theorem", "Check det and E_0 against the product of (phi_i - 1)");
  verify->add_option("--diagram", diagram)->required();
  verify->add_option("--quandle", quandle);
  verify->add_option("--cocycle", cocycle)->required();
  verify->add_option("--coloring", coloring, "Single coloring, e.g. 0,1,2 (default: all)");

  auto* distinguish = app.add_subcommand("distinguish", "Compare the E_0 ideal multisets of two diagrams");
  distinguish->add_option("--diagram", diagrams, "Two PD files")->required()->expected(2);
  distinguish->add_option("--quandle", quandle);
  distinguish->add_option("--cocycle", cocycle)->required();

  auto* deficiency = app.add_subcommand("deficiency", "Generators minus relators");
  auto* dsrc = deficiency->add_option_group("source");
  dsrc->add_option("--presentation", presentation);
  dsrc->add_option("--diagram", diagram);
  dsrc->require_option(1);

  auto* qexport = app.add_subcommand("quandle", "Print a builtin quandle table");
  qexport->add_option("--builtin", builtin, "tetrahedron, r3, s4-4cycles, dihedral:N, trivial:N")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*check) return cmd_check(g, quandle, pair, cocycle, presentation, diagram);
    if (*colorings) return cmd_colorings(g, diagram, quandle, list);
    if (*invariant) return cmd_invariant(g, diagram, quandle, cocycle);
    if (*matrix) return cmd_matrix(g, mi, ds, true, raw);
    if (*ideal) return cmd_matrix(g, mi2, ds, false, raw);
    if (*search) return cmd_search(g, quandle, modulus, diagram, filter, output, embed);
    if (*verify) return cmd_verify(g, diagram, quandle, cocycle, coloring);
    if (*distinguish) return cmd_distinguish(g, diagrams, quandle, cocycle);
    if (*deficiency) return cmd_deficiency(g, presentation, diagram);
    if (*qexport) {
      std::cout << format_quandle(builtin_quandle(builtin).table());
      return kExitOk;
    }
  } catch (const CommandFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
