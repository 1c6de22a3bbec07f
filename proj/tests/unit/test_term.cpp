#include "doctest.h"
#include "oracles.hpp"
#include "qalex/term.hpp"

using namespace qalex;

namespace {

Term random_term(std::mt19937_64& rng, int n_gens, int depth) {
  std::uniform_int_distribution<int> pick(0, n_gens - 1);
  if (depth == 0 || rng() % 4 == 0) return Term::gen(pick(rng));
  auto l = random_term(rng, n_gens, depth - 1);
  auto r = random_term(rng, n_gens, depth - 1);
  return Term::op(std::move(l), std::move(r), rng() % 2 ? 1 : -1);
}

// w^-1 a w evaluated directly in the group.
Element conjugate_in_group(const FiniteGroup& g, const FreeQuandleElem& e, const std::vector<Element>& images) {
  Element w = g.identity;
  for (int letter : e.word) {
    const auto x = images[static_cast<std::size_t>(std::abs(letter) - 1)];
    w = g.mul(w, letter > 0 ? x : g.inv(x));
  }
  return g.mul(g.mul(g.inv(w), images[static_cast<std::size_t>(e.base)]), w);
}

}  // namespace

TEST_CASE("terms print and parse back") {
  const auto x1 = Term::gen(0), x2 = Term::gen(1);
  const auto t = Term::op(x1 * x2, x1, -1);
  CHECK(t.to_string() == "((x1*x2)*~x1)");
  CHECK(parse_term(t.to_string()) == t);
  CHECK(parse_term(" ( x1 * x2 ) ") == x1 * x2);
  CHECK(t.depth() == 2);
  CHECK(t.max_gen() == 1);
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    const auto r = random_term(rng, 3, 5);
    CHECK(parse_term(r.to_string()) == r);
  }
}

TEST_CASE("term parse errors carry positions") {
  CHECK_THROWS_AS(parse_term("(x1*"), ParseError);
  CHECK_THROWS_AS(parse_term("x0"), ParseError);
  CHECK_THROWS_AS(parse_term("(x1 x2)"), ParseError);
  CHECK_THROWS_AS(parse_term("x3", 2), ParseError);
  try {
    parse_term("(x1*y)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}

TEST_CASE("presentation files") {
  const auto p = parse_presentation(read_file(oracle::data_path("tetra2.pres")));
  CHECK(p.n_gens == 2);
  CHECK(p.relators.size() == 4);
  CHECK(parse_presentation(format_presentation(p)).relators == p.relators);
  CHECK_THROWS_AS(parse_presentation("((x1*x2) , x1)\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens 1\n(x1*x2 , x1)\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens 1\n(x1 x1)\n"), ParseError);
  try {
    parse_presentation("gens 2\n# comment\n(x1*x2 , x1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("presentation relators hold in the tetrahedron quandle") {
  const auto p = parse_presentation(read_file(oracle::data_path("tetra2.pres")));
  const auto q = tetrahedron_quandle();
  CHECK(failing_relators(p, {0, 1}, q).empty());
  int homs = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) homs += failing_relators(p, {a, b}, q).empty() ? 1 : 0;
  CHECK(homs == 16);
  CHECK(eval_term(parse_term("(x1*x2)"), {0, 1}, q) == q.op(0, 1));
  CHECK(eval_term(parse_term("(x1*~x2)"), {0, 1}, q) == q.inv_op(0, 1));
}

TEST_CASE("free quandle normal forms respect the axioms") {
  const auto x = Term::gen(0), y = Term::gen(1), z = Term::gen(2);
  CHECK(free_canonical(x * x) == free_canonical(x));
  CHECK(free_canonical(Term::op(x * y, y, -1)) == free_canonical(x));
  CHECK(free_canonical(Term::op(Term::op(x, y, -1), y, 1)) == free_canonical(x));
  CHECK(free_canonical((x * y) * z) == free_canonical((x * z) * (y * z)));
  CHECK_FALSE(free_canonical(x * y) == free_canonical(y * x));
  CHECK(to_string(free_canonical(x * y)) == "(x1, [x2])");
}

TEST_CASE("free quandle normal forms evaluate correctly in conjugation quandles") {
  const auto s4 = symmetric_group(4);
  const auto conj = conj_quandle(s4.group);
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> elem(0, s4.group.order() - 1);
  for (int k = 0; k < 300; ++k) {
    const auto t = random_term(rng, 3, 5);
    const std::vector<Element> images{elem(rng), elem(rng), elem(rng)};
    const auto nf = free_canonical(t);
    CHECK(eval_term(t, images, conj) == conjugate_in_group(s4.group, nf, images));
    if (!nf.word.empty()) {
      CHECK(std::abs(nf.word.front()) != nf.base + 1);
      for (std::size_t i = 1; i < nf.word.size(); ++i) CHECK(nf.word[i] != -nf.word[i - 1]);
    }
  }
}
