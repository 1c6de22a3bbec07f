#include "doctest.h"
#include "oracles.hpp"
#include "qalex/alexander_pair.hpp"
#include "qalex/quandle.hpp"

using namespace qalex;

namespace {

std::vector<FiniteQuandle> fixtures() {
  return {tetrahedron_quandle(), dihedral_quandle(3), dihedral_quandle(5), s4_four_cycle_quandle(),
          trivial_quandle(3), conj_quandle(symmetric_group(3).group)};
}

// Changes one random entry to a different value.
OpTable mutate(const OpTable& t, std::mt19937_64& rng) {
  OpTable m = t;
  std::uniform_int_distribution<std::size_t> cell(0, m.entries.size() - 1);
  std::uniform_int_distribution<int> shift(1, t.n - 1);
  auto& e = m.entries[cell(rng)];
  e = (e + shift(rng)) % t.n;
  return m;
}

}  // namespace

TEST_CASE("tetrahedron table matches the 0-based printed table") {
  const auto q = tetrahedron_quandle();
  const auto t = OpTable::from_rows({{0, 3, 1, 2}, {2, 1, 3, 0}, {3, 0, 2, 1}, {1, 2, 0, 3}});
  CHECK(q.table().entries == t.entries);
  CHECK(q.op(1, 0) == 2);
  CHECK(verify_quandle_axioms(q).empty());
}

TEST_CASE("constructed quandles satisfy the axioms and the dual operation") {
  for (const auto& q : fixtures()) {
    CHECK(verify_quandle_axioms(q).empty());
    for (int x = 0; x < q.order(); ++x)
      for (int y = 0; y < q.order(); ++y) {
        CHECK(q.inv_op(q.op(x, y), y) == x);
        CHECK(q.op(q.inv_op(x, y), y) == x);
      }
  }
}

TEST_CASE("mutated tables fail verification") {
  std::mt19937_64 rng(21);
  for (const auto& q : fixtures()) {
    if (q.order() < 2) continue;
    for (int k = 0; k < 10; ++k) {
      const auto bad = mutate(q.table(), rng);
      CHECK_FALSE(verify_quandle_axioms(bad).empty());
      CHECK_THROWS_AS(FiniteQuandle{bad}, DomainError);
    }
  }
}

TEST_CASE("axiom violations are reported by rule") {
  const auto not_idempotent = OpTable::from_rows({{1, 1}, {0, 0}});
  const auto r = verify_quandle_axioms(not_idempotent);
  REQUIRE_FALSE(r.empty());
  CHECK(r.front().rule.find("Q1") != std::string::npos);
  const auto not_invertible = OpTable::from_rows({{0, 0, 0}, {1, 1, 1}, {0, 2, 2}});
  bool q2 = false;
  for (const auto& v : verify_quandle_axioms(not_invertible)) q2 = q2 || v.rule.find("Q2") != std::string::npos;
  CHECK(q2);
  CHECK_THROWS_AS(OpTable::from_rows({{0, 1}, {1}}), DomainError);
}

TEST_CASE("conjugation quandles of symmetric groups") {
  const auto s3 = symmetric_group(3);
  CHECK(s3.perms.size() == 6);
  CHECK(s3.perms.front() == std::vector<int>{0, 1, 2});
  const auto c = conj_quandle(s3.group);
  CHECK(c.order() == 6);
  const auto& g = s3.group;
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) CHECK(c.op(x, y) == g.mul(g.mul(g.inv(y), x), y));
  std::vector<Element> members;
  const auto s4 = symmetric_group(4);
  const auto q = conjugacy_class_quandle(s4.group, 9, &members);
  CHECK(q.order() == static_cast<int>(members.size()));
  CHECK(isomorphic(s4_four_cycle_quandle(), conjugacy_class_quandle(s4.group, 9)) == (members.size() == 6));
}

TEST_CASE("four-cycle quandle has six elements and is faithful") {
  const auto q = s4_four_cycle_quandle();
  CHECK(q.order() == 6);
  const auto inner = inner_group_and_faithfulness(q);
  CHECK(inner.perms.size() == 6);
  CHECK(inner.faithful);
  CHECK_FALSE(inner_group_and_faithfulness(trivial_quandle(3)).faithful);
  CHECK(inner_group_and_faithfulness(tetrahedron_quandle()).faithful);
}

TEST_CASE("quandle homomorphisms") {
  const auto r3 = dihedral_quandle(3);
  CHECK(verify_homomorphism(r3, r3, {{0, 2, 1}}).empty());
  CHECK(verify_homomorphism(trivial_quandle(2), r3, {{0, 0}}).empty());
  CHECK_FALSE(verify_homomorphism(r3, trivial_quandle(3), {{0, 1, 2}}).empty());
  CHECK_FALSE(verify_homomorphism(r3, r3, {{0, 1, 7}}).empty());
  CHECK(isomorphic(tetrahedron_quandle(), tetrahedron_quandle()));
  CHECK_FALSE(isomorphic(dihedral_quandle(3), trivial_quandle(3)));
}

TEST_CASE("Alexander pairs") {
  const auto tet = tetrahedron_quandle();
  const auto p = alexander_pair(4);
  CHECK(verify_alexander_pair(tet, p).empty());
  CHECK(p.F1(0, 1).to_string() == "t");
  CHECK(p.F2(0, 1).to_string() == "-t + 1");
  std::mt19937_64 rng(22);
  const auto z = AbelianGroup::integers();
  for (int k = 0; k < 10; ++k) {
    auto bad = p;
    const auto cell = std::uniform_int_distribution<std::size_t>(0, bad.f2.size() - 1)(rng);
    bad.f2[cell] += GroupRingElem::monomial(z, GroupElement{{k % 3}});
    CHECK_FALSE(verify_alexander_pair(tet, bad).empty());
  }
  auto missing = p;
  missing.f1_inv.clear();
  CHECK_THROWS_AS(verify_alexander_pair(tet, missing), DomainError);
  try {
    (void)missing.F1inv(1, 2);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
  }
}

TEST_CASE("cocycle pairs are Alexander pairs and mutations are not") {
  const auto theta = oracle::located_cocycle();
  const auto p = cocycle_pair(theta);
  CHECK(verify_alexander_pair(theta.quandle, p).empty());
  std::mt19937_64 rng(23);
  for (int k = 0; k < 10; ++k) {
    auto bad = p;
    const auto cell = std::uniform_int_distribution<std::size_t>(0, bad.f1.size() - 1)(rng);
    bad.f1[cell] = bad.f1[cell].shifted(cyclic_element(theta.group, 1 + k % 3));
    fill_monomial_inverses(bad);
    CHECK_FALSE(verify_alexander_pair(theta.quandle, bad).empty());
  }
}

TEST_CASE("pull-back of a pair along a homomorphism") {
  const auto r3 = dihedral_quandle(3);
  const auto p = alexander_pair(3);
  const auto pulled = compose_pair_with_hom(p, {{0, 0}});
  CHECK(pulled.n == 2);
  CHECK(verify_alexander_pair(trivial_quandle(2), pulled).empty());
  const auto self = compose_pair_with_hom(p, {{0, 2, 1}});
  CHECK(verify_alexander_pair(r3, self).empty());
  CHECK_THROWS_AS(compose_pair_with_hom(p, {{0, 5}}), DomainError);
}

TEST_CASE("module quandles from scalar pairs") {
  const auto r3 = dihedral_quandle(3);
  // Over Z_5 the Alexander pair (2, -1) satisfies the pair identities on any quandle.
  const auto p = ScalarPair::constant(3, 5, 2, -1);
  CHECK(verify_scalar_pair(r3, p).empty());
  const auto m = build_module_quandle(r3, p);
  CHECK(m.order() == 15);
  CHECK(verify_quandle_axioms(m).empty());
  const auto bad = ScalarPair::constant(3, 4, 2, -1);
  CHECK_FALSE(verify_scalar_pair(r3, bad).empty());
  CHECK_THROWS_AS(build_module_quandle(r3, bad), DomainError);
}
