#include "qalex/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qalex {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    auto h = raw.find('#');
    if (h != std::string::npos) raw.resize(h);
    const auto b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = raw.find_last_not_of(" \t\r");
    out.push_back({n, raw.substr(b, e - b + 1)});
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::int64_t parse_int(const std::string& w, std::size_t line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(w, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (w.empty() || used != w.size()) throw ParseError(line, "'" + w + "' is not an integer");
  return v;
}

int parse_order(const std::string& w, std::size_t line) {
  const auto n = parse_int(w, line);
  if (n < 1 || n > 4096) throw ParseError(line, "order must be between 1 and 4096");
  return static_cast<int>(n);
}

// Header `<kw> n` or `<kw> n over <group>`.
struct Header {
  int n = 0;
  std::optional<AbelianGroup> group;
};

Header parse_header(const Line& l, const std::string& kw, bool needs_group) {
  const auto w = words(l.text);
  const std::string form = kw + " <n>" + (needs_group ? " over <group>" : "");
  if (w.empty() || w[0] != kw) throw ParseError(l.number, "expected header '" + form + "'");
  if (!needs_group && w.size() != 2) throw ParseError(l.number, "expected header '" + form + "'");
  if (needs_group && (w.size() < 4 || w[2] != "over")) throw ParseError(l.number, "expected header '" + form + "'");
  Header h;
  h.n = parse_order(w[1], l.number);
  if (needs_group) {
    std::string spec;
    for (std::size_t i = 3; i < w.size(); ++i) spec += (i > 3 ? " " : "") + w[i];
    try {
      h.group = AbelianGroup::parse(spec);
    } catch (const Error& e) {
      throw ParseError(l.number, e.what());
    }
  }
  return h;
}

// Reads `n` integer rows starting at lines[pos].
std::vector<std::int64_t> int_block(const std::vector<Line>& lines, std::size_t& pos, int n, std::size_t header_line) {
  std::vector<std::int64_t> out;
  for (int r = 0; r < n; ++r) {
    if (pos >= lines.size())
      throw ParseError(header_line, "expected " + std::to_string(n) + " rows, found " + std::to_string(r));
    const auto& l = lines[pos++];
    const auto w = words(l.text);
    if (w.size() != static_cast<std::size_t>(n))
      throw ParseError(l.number, "row " + std::to_string(r + 1) + ": expected " + std::to_string(n) + " entries");
    for (const auto& x : w) out.push_back(parse_int(x, l.number));
  }
  return out;
}

OpTable quandle_section(const std::vector<Line>& lines, std::size_t& pos) {
  const auto h = parse_header(lines[pos], "quandle", false);
  const auto header_line = lines[pos].number;
  ++pos;
  const std::size_t first = pos;
  const auto vals = int_block(lines, pos, h.n, header_line);
  std::vector<Element> e;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] < 0 || vals[i] >= h.n)
      throw ParseError(lines[first + i / static_cast<std::size_t>(h.n)].number,
                       "entry " + std::to_string(vals[i]) + " out of range 0.." + std::to_string(h.n - 1));
    e.push_back(static_cast<Element>(vals[i]));
  }
  return OpTable(h.n, std::move(e));
}

std::vector<GroupRingElem> ring_block(const std::vector<Line>& lines, std::size_t& pos, int n, const AbelianGroup& g,
                                      std::size_t header_line, const std::string& name) {
  std::vector<GroupRingElem> out;
  for (int r = 0; r < n; ++r) {
    if (pos >= lines.size())
      throw ParseError(header_line, name + ": expected " + std::to_string(n) + " rows, found " + std::to_string(r));
    const auto& l = lines[pos++];
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : l.text) {
      if (ch == ',') {
        cells.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    cells.push_back(cur);
    if (cells.size() != static_cast<std::size_t>(n))
      throw ParseError(l.number, name + " row " + std::to_string(r + 1) + ": expected " + std::to_string(n) + " entries");
    for (const auto& c : cells) {
      try {
        out.push_back(GroupRingElem::parse(g, c));
      } catch (const Error& e) {
        throw ParseError(l.number, e.what());
      }
    }
  }
  return out;
}

}  // namespace

OpTable parse_quandle(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty quandle file");
  std::size_t pos = 0;
  auto t = quandle_section(lines, pos);
  if (pos != lines.size()) throw ParseError(lines[pos].number, "unexpected extra row");
  return t;
}

std::string format_quandle(const OpTable& t) {
  std::string out = "quandle " + std::to_string(t.n) + "\n";
  for (int i = 0; i < t.n; ++i) {
    for (int j = 0; j < t.n; ++j) out += (j ? " " : "") + std::to_string(t.at(i, j));
    out += "\n";
  }
  return out;
}

AlexanderPairTable parse_pair(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty pair file");
  const auto h = parse_header(lines[0], "pair", true);
  std::size_t pos = 1;
  AlexanderPairTable p{*h.group, h.n, {}, {}, {}};
  p.f1 = ring_block(lines, pos, h.n, p.group, lines[0].number, "f1");
  p.f2 = ring_block(lines, pos, h.n, p.group, lines[0].number, "f2");
  if (pos < lines.size()) {
    p.f1_inv = ring_block(lines, pos, h.n, p.group, lines[0].number, "f1_inv");
    if (pos != lines.size()) throw ParseError(lines[pos].number, "unexpected extra row");
  } else {
    fill_monomial_inverses(p);
  }
  return p;
}

std::string format_pair(const AlexanderPairTable& p) {
  std::string out = "pair " + std::to_string(p.n) + " over " + p.group.to_string() + "\n";
  auto block = [&](const std::vector<GroupRingElem>& b) {
    for (int i = 0; i < p.n; ++i) {
      for (int j = 0; j < p.n; ++j) out += (j ? ", " : "") + b[p.idx(i, j)].to_string();
      out += "\n";
    }
  };
  block(p.f1);
  block(p.f2);
  if (!p.f1_inv.empty()) block(p.f1_inv);
  return out;
}

CocycleFile parse_cocycle_file(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty cocycle file");
  const auto h = parse_header(lines[0], "cocycle", true);
  if (h.group->rank() != 1) throw ParseError(lines[0].number, "cocycle files need a cyclic group such as Z4");
  CocycleFile f;
  f.n = h.n;
  f.group = *h.group;
  std::size_t pos = 1;
  f.exponents = int_block(lines, pos, h.n, lines[0].number);
  if (pos < lines.size()) {
    f.quandle = quandle_section(lines, pos);
    if (f.quandle->n != f.n) throw ParseError(lines[pos - 1].number, "embedded quandle order differs from the cocycle");
    if (pos != lines.size()) throw ParseError(lines[pos].number, "unexpected extra row");
  }
  return f;
}

std::string format_cocycle_file(const CocycleFile& f) {
  std::string out = "cocycle " + std::to_string(f.n) + " over " + f.group.to_string() + "\n";
  for (int i = 0; i < f.n; ++i) {
    for (int j = 0; j < f.n; ++j) out += (j ? " " : "") + std::to_string(f.exponents[static_cast<std::size_t>(i * f.n + j)]);
    out += "\n";
  }
  if (f.quandle) out += format_quandle(*f.quandle);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qalex
