#include "qalex/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qalex {

Term Term::gen(int index) {
  if (index < 0) throw DomainError("negative generator index");
  auto n = std::make_shared<Node>();
  n->gen = index;
  return Term(std::move(n));
}

Term Term::op(Term left, Term right, int exp) {
  if (exp != 1 && exp != -1) throw DomainError("term exponent must be +1 or -1");
  auto n = std::make_shared<Node>();
  n->exp = exp;
  n->left = std::move(left.node_);
  n->right = std::move(right.node_);
  return Term(std::move(n));
}

std::size_t Term::depth() const {
  if (is_gen()) return 0;
  return 1 + std::max(left().depth(), right().depth());
}

int Term::max_gen() const {
  if (is_gen()) return gen_index();
  return std::max(left().max_gen(), right().max_gen());
}

std::string Term::to_string() const {
  if (is_gen()) return "x" + std::to_string(gen_index() + 1);
  return "(" + left().to_string() + (exp() > 0 ? "*" : "*~") + right().to_string() + ")";
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_gen() || b.is_gen()) return a.is_gen() && b.is_gen() && a.gen_index() == b.gen_index();
  return a.exp() == b.exp() && a.left() == b.left() && a.right() == b.right();
}

void Presentation::validate() const {
  if (n_gens < 0) throw DomainError("negative generator count");
  for (std::size_t i = 0; i < relators.size(); ++i)
    for (const auto* t : {&relators[i].first, &relators[i].second})
      if (t->max_gen() >= n_gens)
        throw DomainError("relator " + std::to_string(i + 1) + " uses x" + std::to_string(t->max_gen() + 1) +
                          " but only " + std::to_string(n_gens) + " generators are declared");
  if (!origins.empty() && origins.size() != relators.size()) throw DomainError("relator metadata size mismatch");
}

// ---------------------------------------------------------------- parsing

namespace {

class TermParser {
 public:
  TermParser(std::string_view s, std::size_t line) : s_(s), line_(line) {}

  Term term() {
    Term acc = primary();
    while (true) {
      skip();
      if (peek() != '*') break;
      ++pos_;
      int e = 1;
      if (peek() == '~') {
        e = -1;
        ++pos_;
      }
      acc = Term::op(acc, primary(), e);
    }
    return acc;
  }

  Relator relator() {
    skip();
    expect('(');
    Term a = term();
    skip();
    expect(',');
    Term b = term();
    skip();
    expect(')');
    return {a, b};
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, msg + " at column " + std::to_string(pos_ + 1));
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Term primary() {
    skip();
    if (peek() == '(') {
      // Either a parenthesised term or (in relator position) handled by caller.
      ++pos_;
      Term t = term();
      skip();
      expect(')');
      return t;
    }
    if (peek() == 'x') {
      ++pos_;
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected generator number after 'x'");
      int k = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (k < 1) fail("generators are numbered from x1");
      return Term::gen(k - 1);
    }
    fail("expected generator or '('");
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  auto h = line.find('#');
  if (h != std::string_view::npos) line = line.substr(0, h);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
  return line;
}

}  // namespace

Term parse_term(std::string_view text, int n_gens) {
  TermParser p(text, 0);
  Term t = p.term();
  p.finish();
  if (n_gens >= 0 && t.max_gen() >= n_gens) throw ParseError(0, "term uses an undeclared generator");
  return t;
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_header = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = strip_comment(raw);
    if (line.empty()) continue;
    if (!have_header) {
      std::istringstream hs{std::string(line)};
      std::string kw;
      int k = -1;
      hs >> kw >> k;
      if (kw != "gens" || k < 0 || !hs.eof()) throw ParseError(line_no, "expected header 'gens <k>'");
      p.n_gens = k;
      have_header = true;
      continue;
    }
    TermParser tp(line, line_no);
    Relator r = tp.relator();
    tp.finish();
    for (const auto* t : {&r.first, &r.second})
      if (t->max_gen() >= p.n_gens)
        throw ParseError(line_no, "generator x" + std::to_string(t->max_gen() + 1) + " not declared");
    p.relators.push_back(std::move(r));
  }
  if (!have_header) throw ParseError(line_no, "missing 'gens <k>' header");
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens " + std::to_string(p.n_gens) + "\n";
  auto bare = [](const Term& t) {
    auto s = t.to_string();
    if (!t.is_gen()) s = s.substr(1, s.size() - 2);
    return s;
  };
  for (const auto& [a, b] : p.relators) out += "(" + bare(a) + " , " + bare(b) + ")\n";
  return out;
}

// ---------------------------------------------------------------- evaluation

Element eval_term(const Term& t, const std::vector<Element>& images, const FiniteQuandle& q) {
  if (t.is_gen()) {
    const auto i = static_cast<std::size_t>(t.gen_index());
    if (i >= images.size()) throw DomainError("no image for generator x" + std::to_string(i + 1));
    const Element v = images[i];
    if (v < 0 || v >= q.order()) throw DomainError("generator image out of range");
    return v;
  }
  return q.op(eval_term(t.left(), images, q), eval_term(t.right(), images, q), t.exp());
}

std::vector<std::size_t> failing_relators(const Presentation& p, const std::vector<Element>& images,
                                          const FiniteQuandle& q) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (eval_term(p.relators[i].first, images, q) != eval_term(p.relators[i].second, images, q)) bad.push_back(i);
  return bad;
}

// ---------------------------------------------------------------- free quandle

namespace {

void push_reduced(std::vector<int>& w, int letter) {
  if (!w.empty() && w.back() == -letter)
    w.pop_back();
  else
    w.push_back(letter);
}

FreeQuandleElem canonicalize(int base, std::vector<int> word) {
  std::vector<int> reduced;
  for (int l : word) push_reduced(reduced, l);
  const int a = base + 1;
  std::size_t k = 0;
  while (k < reduced.size() && (reduced[k] == a || reduced[k] == -a)) ++k;
  reduced.erase(reduced.begin(), reduced.begin() + static_cast<std::ptrdiff_t>(k));
  return {base, std::move(reduced)};
}

}  // namespace

FreeQuandleElem free_operate(const FreeQuandleElem& lhs, const FreeQuandleElem& rhs, int exp) {
  std::vector<int> w = lhs.word;
  for (auto it = rhs.word.rbegin(); it != rhs.word.rend(); ++it) w.push_back(-*it);
  w.push_back(exp > 0 ? rhs.base + 1 : -(rhs.base + 1));
  w.insert(w.end(), rhs.word.begin(), rhs.word.end());
  return canonicalize(lhs.base, std::move(w));
}

FreeQuandleElem free_canonical(const Term& t) {
  if (t.is_gen()) return {t.gen_index(), {}};
  return free_operate(free_canonical(t.left()), free_canonical(t.right()), t.exp());
}

std::string to_string(const FreeQuandleElem& e) {
  std::string w;
  for (int l : e.word) w += (w.empty() ? "" : " ") + std::string("x") + std::to_string(l > 0 ? l : -l) + (l < 0 ? "^-1" : "");
  return "(x" + std::to_string(e.base + 1) + ", [" + w + "])";
}

}  // namespace qalex
