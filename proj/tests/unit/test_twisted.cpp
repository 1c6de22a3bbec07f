#include "doctest.h"
#include "oracles.hpp"
#include "qalex/ideal.hpp"

using namespace qalex;

namespace {

const AbelianGroup Z = AbelianGroup::integers();

GroupRingElem P(const AbelianGroup& g, const char* s) { return GroupRingElem::parse(g, s); }

RingMatrix matrix_of(const AbelianGroup& g, const std::vector<std::vector<const char*>>& rows) {
  RingMatrix m(g, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, P(g, rows[r][c]));
  return m;
}

DerivativeContext tetra_context() {
  return DerivativeContext(parse_presentation(read_file(oracle::data_path("tetra2.pres"))), tetrahedron_quandle(), {0, 1},
                           alexander_pair(4));
}

DerivativeContext classical_context(const LinkDiagram& d) {
  return DerivativeContext(wirtinger_presentation(d), trivial_quandle(1), Coloring(d.arc_count(), 0), alexander_pair(1));
}

Term random_term(std::mt19937_64& rng, int n_gens, int depth) {
  if (depth == 0 || rng() % 4 == 0) return Term::gen(static_cast<int>(rng() % static_cast<std::uint64_t>(n_gens)));
  auto l = random_term(rng, n_gens, depth - 1);
  auto r = random_term(rng, n_gens, depth - 1);
  return Term::op(std::move(l), std::move(r), rng() % 2 ? 1 : -1);
}

bool same_ideal(const IdealGens& a, const IdealGens& b) { return ideal_equal_finite(a, b); }

}  // namespace

TEST_CASE("tetrahedron presentation: twisted matrix by hand") {
  const auto ctx = tetra_context();
  const auto expected = matrix_of(Z, {{"t^2 - t + 1", "-t^2 + t - 1"},
                                      {"-t^2 + t - 1", "t^2 - t + 1"},
                                      {"-t^2 - t + 1", "t^2 + t - 1"},
                                      {"t^2 + t - 1", "-t^2 - t + 1"}});
  CHECK(twisted_matrix(ctx) == expected);
  const auto& r = ctx.presentation().relators[0];
  CHECK(relator_derivative(r, 0, ctx) == P(Z, "t^2 - t + 1"));
  CHECK(relator_derivative(r, 1, ctx) == P(Z, "-t^2 + t - 1"));
  // Expansion of (x1*x2)*x1 written out: t*d(x1*x2) + (1-t)*d(x1).
  const auto x1 = Term::gen(0), x2 = Term::gen(1);
  CHECK(derive(x1 * x2, 0, ctx) == P(Z, "t"));
  CHECK(derive(x1 * x2, 1, ctx) == P(Z, "1 - t"));
  CHECK(derive((x1 * x2) * x1, 0, ctx) == P(Z, "t^2 - t + 1"));
  CHECK(derive((x1 * x2) * x1, 1, ctx) == P(Z, "t - t^2"));
}

TEST_CASE("tetrahedron presentation: elementary ideals") {
  const auto ctx = tetra_context();
  CHECK(twisted_ideals(ctx, 0).is_zero_ideal());
  const auto e0 = twisted_ideals(ctx, 0).simplified();
  CHECK(e0.generators.empty());
  const auto e1 = twisted_ideals(ctx, 1).simplified();
  CHECK(e1.to_string() == "t^2 - t + 1, -t^2 - t + 1");
  CHECK(twisted_ideals(ctx, 2).to_string() == "1");
  CHECK(deficiency_bound(ctx.presentation()) == -2);
}

TEST_CASE("derivative context rejects bad input") {
  const auto p = parse_presentation(read_file(oracle::data_path("tetra2.pres")));
  const auto q = tetrahedron_quandle();
  CHECK_THROWS_AS(DerivativeContext(p, q, {0}, alexander_pair(4)), DomainError);
  CHECK_THROWS_AS(DerivativeContext(p, q, {0, 9}, alexander_pair(4)), DomainError);
  CHECK_THROWS_AS(DerivativeContext(p, q, {0, 1}, alexander_pair(3)), DomainError);
  auto broken = alexander_pair(4);
  broken.f2[1] = P(Z, "t");
  CHECK_THROWS_AS(DerivativeContext(p, q, {0, 1}, broken), DomainError);
  const auto trefoil = wirtinger_presentation(oracle::diagram("trefoil.pd"));
  try {
    DerivativeContext(trefoil, dihedral_quandle(3), {0, 0, 1}, alexander_pair(3));
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("relator") != std::string::npos);
  }
}

TEST_CASE("trefoil matrix rows are shifts of (t, -1, 1 - t)") {
  const auto ctx = classical_context(oracle::diagram("trefoil.pd"));
  CHECK(twisted_matrix(ctx) == matrix_of(Z, {{"t", "-1", "1 - t"}, {"1 - t", "t", "-1"}, {"-1", "1 - t", "t"}}));
  CHECK(det(twisted_matrix(ctx)).is_zero());
}

TEST_CASE("classical reduction agrees with Fox calculus") {
  struct Case {
    const char* file;
    const char* poly;
  };
  for (const auto& k : {Case{"trefoil.pd", "t^2 - t + 1"}, Case{"figure8.pd", "t^2 - 3*t + 1"},
                        Case{"granny.pd", "t^4 - 2*t^3 + 3*t^2 - 2*t + 1"},
                        Case{"square.pd", "t^4 - 2*t^3 + 3*t^2 - 2*t + 1"}}) {
    const auto d = oracle::diagram(k.file);
    const auto quandle_e1 = twisted_ideals(classical_context(d), 1);
    const auto fox_e1 = elementary_ideal(oracle::fox_alexander_matrix(d), 1);
    CHECK(compare_laurent_ideals(quandle_e1, fox_e1) == IdealRelation::Equal);
    const auto s = quandle_e1.simplified();
    REQUIRE(s.generators.size() == 1);
    CHECK(principal_equal_laurent(s.generators[0], P(Z, k.poly)));
  }
}

TEST_CASE("unknot presentation has an empty matrix") {
  const auto p = parse_presentation(read_file(oracle::data_path("unknot.pres")));
  const DerivativeContext ctx(p, trivial_quandle(1), {0}, alexander_pair(1));
  const auto m = twisted_matrix(ctx);
  CHECK(m.rows() == 0);
  CHECK(m.cols() == 1);
  CHECK(twisted_ideals(ctx, 0).is_zero_ideal());
  CHECK(twisted_ideals(ctx, 1).to_string() == "1");
  CHECK(deficiency_bound(p) == 1);
}

TEST_CASE("deficiency of knot diagrams") {
  for (const char* name : {"trefoil.pd", "figure8.pd", "granny.pd", "square.pd", "hopf.pd"}) {
    const auto d = oracle::diagram(name);
    CHECK(wirtinger_deficiency(d) == 0);
    CHECK(deficiency_bound(wirtinger_presentation(d)) == 0);
  }
}

TEST_CASE("derivatives respect the quandle axioms and the dual operation") {
  std::mt19937_64 rng(51);
  const auto theta = oracle::located_cocycle();
  const Presentation free3{3, {}, {}};
  const DerivativeContext contexts[] = {
      DerivativeContext(free3, tetrahedron_quandle(), {0, 1, 3}, alexander_pair(4)),
      DerivativeContext(free3, theta.quandle, {0, 2, 5}, cocycle_pair(theta)),
  };
  for (const auto& ctx : contexts) {
    for (int k = 0; k < 300; ++k) {
      const auto a = random_term(rng, 3, 4);
      const auto b = random_term(rng, 3, 3);
      const auto c = random_term(rng, 3, 2);
      CHECK(derive_all(Term::op(Term::op(a, b, -1), b, 1), ctx) == derive_all(a, ctx));
      CHECK(derive_all(Term::op(Term::op(a, b, 1), b, -1), ctx) == derive_all(a, ctx));
      CHECK(derive_all(a * a, ctx) == derive_all(a, ctx));
      CHECK(derive_all((a * b) * c, ctx) == derive_all((a * c) * (b * c), ctx));
    }
  }
}

TEST_CASE("elementary ideals are invariant under the matrix moves") {
  std::mt19937_64 rng(52);
  for (int n : {2, 3, 4}) {
    const auto g = AbelianGroup::cyclic(n);
    for (int k = 0; k < 70; ++k) {
      const auto rows = 1 + rng() % 3, cols = 1 + rng() % 3;
      const auto m = oracle::random_matrix(rng, g, rows, cols);
      const auto r = oracle::random_elem(rng, g, 2, 2, 3);
      std::vector<RingMatrix> moved{move_adjoin_zero_row(m), move_stabilize(m)};
      if (cols > 1) moved.push_back(move_column_add(m, 0, cols - 1, r));
      if (rows > 1) moved.push_back(move_row_add(m, rows - 1, 0, r));
      for (long d = 0; d <= static_cast<long>(cols); ++d)
        for (const auto& x : moved) CHECK(same_ideal(elementary_ideal(m, d), elementary_ideal(x, d)));
    }
  }
  const RingMatrix m(Z, 2, 2);
  CHECK_THROWS_AS(move_column_add(m, 1, 1, P(Z, "1")), DomainError);
  CHECK_THROWS_AS(move_row_add(m, 0, 2, P(Z, "1")), DomainError);
}

TEST_CASE("cocycle matrices agree with a crossing-by-crossing construction") {
  const auto theta = oracle::located_cocycle();
  for (const char* name : {"trefoil.pd", "figure8.pd", "hopf.pd", "granny.pd"}) {
    const auto d = oracle::diagram(name);
    for (const auto& c : enumerate_colorings(d, theta.quandle)) {
      const DerivativeContext ctx(wirtinger_presentation(d), theta.quandle, c, cocycle_pair(theta));
      const auto m = twisted_matrix(ctx);
      const auto by_hand = oracle::cocycle_matrix_by_hand(d, theta, c);
      CHECK(m == by_hand);
      GroupRingElem rhs = GroupRingElem::one(theta.group);
      for (const auto& x : component_invariant(d, c, theta))
        rhs = rhs * (GroupRingElem::monomial(theta.group, x) - GroupRingElem::one(theta.group));
      CHECK(same_ideal(IdealGens{theta.group, {oracle::leibniz_det(by_hand)}}, IdealGens{theta.group, {rhs}}));
    }
  }
}

TEST_CASE("E_0 equals the product of component terms for every coloring and cocycle") {
  const auto located = oracle::located_cocycle();
  const auto& q = located.quandle;
  const auto a = located.group;
  std::vector<Cocycle> cocycles{located, Cocycle::trivial(q, a)};
  for (const auto& g : search_cocycles(q, 4).generators) cocycles.push_back(Cocycle::from_exponents(q, a, g));
  std::size_t checked = 0, failures = 0;
  for (const char* name : {"trefoil.pd", "trefoil_left.pd", "figure8.pd", "hopf.pd", "granny.pd", "square.pd"}) {
    const auto d = oracle::diagram(name);
    for (const auto& c : enumerate_colorings(d, q))
      for (const auto& theta : cocycles) {
        const auto r = verify_theorem(d, theta, c);
        ++checked;
        if (!r.ok()) ++failures;
      }
  }
  CHECK(checked > 2000);
  CHECK(failures == 0);
}

TEST_CASE("trivial cocycle gives the zero ideal on both sides") {
  const auto q = s4_four_cycle_quandle();
  const auto theta = Cocycle::trivial(q, AbelianGroup::cyclic(4));
  const auto d = oracle::diagram("trefoil.pd");
  for (const auto& c : enumerate_colorings(d, q)) {
    const auto r = verify_theorem(d, theta, c);
    CHECK(r.ok());
    CHECK(r.rhs_generator.is_zero());
    CHECK(r.lhs_generators.simplified().generators.empty());
  }
}

TEST_CASE("theorem report on the Hopf link") {
  const auto theta = oracle::located_cocycle();
  const auto d = oracle::diagram("hopf.pd");
  const auto all = enumerate_colorings(d, theta.quandle);
  bool saw_nontrivial = false;
  for (const auto& c : all) {
    const auto r = verify_theorem(d, theta, c);
    REQUIRE(r.per_block.size() == 2);
    for (const auto& b : r.per_block) {
      CHECK(b.size == 1);
      CHECK(b.determinant == GroupRingElem::monomial(theta.group, b.phi) - GroupRingElem::one(theta.group));
    }
    if (!is_identity(r.per_block[0].phi)) {
      saw_nontrivial = true;
      CHECK(r.to_text().find("equal: true") != std::string::npos);
      CHECK(r.rhs_generator == P(theta.group, "u^2 - 2*u + 1"));
    }
  }
  CHECK(saw_nontrivial);
  CHECK_THROWS_AS(verify_theorem(d, theta, Coloring{0, 9}), DomainError);
}
