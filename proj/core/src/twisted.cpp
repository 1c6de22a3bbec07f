#include "qalex/twisted.hpp"

#include "qalex/ideal.hpp"

namespace qalex {

DerivativeContext::DerivativeContext(Presentation p, FiniteQuandle q, std::vector<Element> images,
                                     AlexanderPairTable pair, bool verify_pair)
    : p_(std::move(p)), q_(std::move(q)), images_(std::move(images)), pair_(std::move(pair)) {
  p_.validate();
  if (images_.size() != static_cast<std::size_t>(p_.n_gens))
    throw DomainError("expected " + std::to_string(p_.n_gens) + " generator images, got " +
                      std::to_string(images_.size()));
  for (auto v : images_)
    if (v < 0 || v >= q_.order()) throw DomainError("generator image " + std::to_string(v) + " out of range");
  const auto bad = failing_relators(p_, images_, q_);
  if (!bad.empty()) {
    const auto& r = p_.relators[bad.front()];
    throw DomainError("images do not define a homomorphism: relator " + std::to_string(bad.front() + 1) + " (" +
                      r.first.to_string() + " , " + r.second.to_string() + ") fails");
  }
  if (pair_.n != q_.order()) throw DomainError("pair order does not match the quandle");
  if (verify_pair) {
    const auto report = verify_alexander_pair(q_, pair_);
    if (!report.empty()) throw DomainError("not an Alexander pair: " + to_string(report.front()));
  }
}

namespace {

struct Derived {
  Element value;
  std::vector<GroupRingElem> d;
};

Derived derive_rec(const Term& t, const DerivativeContext& ctx) {
  const auto n = static_cast<std::size_t>(ctx.presentation().n_gens);
  const auto& g = ctx.group();
  if (t.is_gen()) {
    Derived out{ctx.images()[static_cast<std::size_t>(t.gen_index())], std::vector<GroupRingElem>(n, GroupRingElem(g))};
    out.d[static_cast<std::size_t>(t.gen_index())] = GroupRingElem::one(g);
    return out;
  }
  const auto a = derive_rec(t.left(), ctx);
  const auto b = derive_rec(t.right(), ctx);
  const auto& q = ctx.quandle();
  const auto& p = ctx.pair();
  Derived out{0, std::vector<GroupRingElem>(n, GroupRingElem(g))};
  if (t.exp() > 0) {
    out.value = q.op(a.value, b.value);
    const auto& f1 = p.F1(a.value, b.value);
    const auto& f2 = p.F2(a.value, b.value);
    for (std::size_t j = 0; j < n; ++j) out.d[j] = f1 * a.d[j] + f2 * b.d[j];
  } else {
    // From (t * b) = a: d(t) = f1(t,b)^-1 (d(a) - f2(t,b) d(b)).
    out.value = q.inv_op(a.value, b.value);
    const auto& inv = p.F1inv(out.value, b.value);
    const auto& f2 = p.F2(out.value, b.value);
    for (std::size_t j = 0; j < n; ++j) out.d[j] = inv * (a.d[j] - f2 * b.d[j]);
  }
  return out;
}

GroupRingElem unit_minus_one(const AbelianGroup& g, const GroupElement& x) {
  return GroupRingElem::monomial(g, x) - GroupRingElem::one(g);
}

}  // namespace

std::vector<GroupRingElem> derive_all(const Term& t, const DerivativeContext& ctx) {
  if (t.max_gen() >= ctx.presentation().n_gens) throw DomainError("term uses an undeclared generator");
  return derive_rec(t, ctx).d;
}

GroupRingElem derive(const Term& t, int j, const DerivativeContext& ctx) {
  if (j < 0 || j >= ctx.presentation().n_gens) throw DomainError("generator index out of range");
  return derive_all(t, ctx)[static_cast<std::size_t>(j)];
}

GroupRingElem relator_derivative(const Relator& r, int j, const DerivativeContext& ctx) {
  return derive(r.first, j, ctx) - derive(r.second, j, ctx);
}

RingMatrix twisted_matrix(const DerivativeContext& ctx) {
  const auto& p = ctx.presentation();
  RingMatrix m(ctx.group(), p.relators.size(), static_cast<std::size_t>(p.n_gens));
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const auto l = derive_all(p.relators[i].first, ctx);
    const auto r = derive_all(p.relators[i].second, ctx);
    for (std::size_t j = 0; j < l.size(); ++j) m.set(i, j, l[j] - r[j]);
  }
  return m;
}

IdealGens twisted_ideals(const DerivativeContext& ctx, long d, std::size_t max_dim) {
  return elementary_ideal(twisted_matrix(ctx), d, max_dim);
}

AlexanderPairTable cocycle_pair(const Cocycle& theta) {
  const auto& a = theta.group;
  AlexanderPairTable p{a, theta.quandle.order(), {}, {}, {}};
  for (const auto& x : theta.phi) {
    p.f1.push_back(GroupRingElem::monomial(a, x));
    p.f2.push_back(GroupRingElem(a));
    p.f1_inv.push_back(GroupRingElem::monomial(a, inverse(a, x)));
  }
  return p;
}

// ---------------------------------------------------------------- moves

RingMatrix move_column_add(const RingMatrix& m, std::size_t i, std::size_t j, const GroupRingElem& r) {
  if (i >= m.cols() || j >= m.cols() || i == j) throw DomainError("column move needs distinct valid columns");
  RingMatrix out = m;
  for (std::size_t k = 0; k < m.rows(); ++k) out.set(k, i, m(k, i) + m(k, j) * r);
  return out;
}

RingMatrix move_row_add(const RingMatrix& m, std::size_t i, std::size_t j, const GroupRingElem& r) {
  if (i >= m.rows() || j >= m.rows() || i == j) throw DomainError("row move needs distinct valid rows");
  RingMatrix out = m;
  for (std::size_t k = 0; k < m.cols(); ++k) out.set(i, k, m(i, k) + r * m(j, k));
  return out;
}

RingMatrix move_adjoin_zero_row(const RingMatrix& m) {
  RingMatrix out(m.group(), m.rows() + 1, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m(r, c));
  return out;
}

RingMatrix move_stabilize(const RingMatrix& m) {
  RingMatrix out(m.group(), m.rows() + 1, m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m(r, c));
  out.set(m.rows(), m.cols(), GroupRingElem::one(m.group()));
  return out;
}

// ---------------------------------------------------------------- cocycle identity

bool TheoremCheck::ok() const {
  if (!det_equal || !ideal_equal || !structure_ok) return false;
  for (const auto& b : per_block)
    if (!b.structure_ok || !b.determinant_ok) return false;
  return true;
}

std::string TheoremCheck::to_text() const {
  const auto& g = rhs_generator.group();
  std::string s = "lhs_generators: [";
  for (std::size_t i = 0; i < lhs_generators.generators.size(); ++i)
    s += (i ? ", " : "") + lhs_generators.generators[i].to_string();
  s += "]\nrhs_generator: " + rhs_generator.to_string() + "\n";
  s += std::string("equal: ") + (ok() ? "true" : "false") + "\n";
  s += "per_block:\n";
  for (const auto& b : per_block)
    s += "  - component: " + std::to_string(b.component + 1) + ", size: " + std::to_string(b.size) +
         ", phi: " + format_element(g, b.phi) + ", det: " + b.determinant.to_string() +
         ", structure: " + (b.structure_ok ? "ok" : "FAIL") + ", det_matches: " + (b.determinant_ok ? "true" : "false") +
         "\n";
  return s;
}

TheoremCheck verify_theorem(const LinkDiagram& d, const Cocycle& theta, const Coloring& c, std::size_t max_dim) {
  const auto& q = theta.quandle;
  const auto& a = theta.group;
  if (!is_coloring(d, q, c)) throw DomainError("not a coloring of the diagram");
  const auto pair = cocycle_pair(theta);

  TheoremCheck out;
  const auto phi = component_invariant(d, c, theta);
  out.rhs_generator = GroupRingElem::one(a);
  for (const auto& x : phi) out.rhs_generator = out.rhs_generator * unit_minus_one(a, x);

  // Component-ordered matrix and its block structure.
  const auto ow = component_ordered_wirtinger(d);
  std::vector<Element> images;
  for (int arc : ow.generator_arcs) images.push_back(c[static_cast<std::size_t>(arc)]);
  const DerivativeContext ctx(ow.presentation, q, images, pair, false);
  const auto m = twisted_matrix(ctx);

  std::vector<std::size_t> block_of(m.cols());
  std::size_t offset = 0;
  out.structure_ok = true;
  for (std::size_t b = 0; b < ow.block_sizes.size(); ++b) {
    const auto size = ow.block_sizes[b];
    for (std::size_t k = 0; k < size; ++k) block_of[offset + k] = b;
    BlockCheck bc;
    bc.component = b;
    bc.size = size;
    bc.phi = phi[b];
    RingMatrix expected(a, size, size);
    for (std::size_t j = 0; j < size; ++j) {
      const auto ci = static_cast<std::size_t>(ow.relator_crossings[offset + j]);
      const auto w = GroupRingElem::monomial(a, weight(d, ci, c, theta));
      const auto next = (j + 1) % size;
      expected.set(j, j, w);
      expected.set(j, next, expected(j, next) - GroupRingElem::one(a));
    }
    std::vector<std::size_t> idx(size);
    for (std::size_t k = 0; k < size; ++k) idx[k] = offset + k;
    const auto block = m.submatrix(idx, idx);
    bc.structure_ok = block == expected;
    bc.determinant = det(block);
    bc.expected = unit_minus_one(a, phi[b]);
    bc.determinant_ok = bc.determinant == bc.expected;
    out.per_block.push_back(std::move(bc));
    offset += size;
  }
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t col = 0; col < m.cols(); ++col)
      if (block_of[r] != block_of[col] && !m(r, col).is_zero()) out.structure_ok = false;
  out.lhs_det = det(m);
  out.det_equal = out.lhs_det == out.rhs_generator;

  // E_0 of the matrix in diagram order.
  const DerivativeContext plain(wirtinger_presentation(d), q, c, pair, false);
  out.lhs_generators = elementary_ideal(twisted_matrix(plain), 0, max_dim);
  const IdealGens rhs{a, {out.rhs_generator}};
  if (a.is_finite()) {
    out.ideal_equal = ideal_equal_finite(out.lhs_generators, rhs);
  } else {
    const auto lhs = out.lhs_generators.simplified();
    const auto r = rhs.simplified();
    out.ideal_equal = lhs.generators.size() == r.generators.size() &&
                      (lhs.generators.empty() || trivially_associated(lhs.generators[0], r.generators[0]));
  }
  return out;
}

}  // namespace qalex
