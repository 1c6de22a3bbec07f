#include "qalex/ring_matrix.hpp"

#include <bit>
#include <cstdint>

#include "qalex/error.hpp"

namespace qalex {

RingMatrix::RingMatrix(AbelianGroup group, std::size_t rows, std::size_t cols)
    : group_(std::move(group)), rows_(rows), cols_(cols), data_(rows * cols, GroupRingElem(group_)) {}

RingMatrix RingMatrix::identity(const AbelianGroup& group, std::size_t n) {
  RingMatrix m(group, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, GroupRingElem::one(group));
  return m;
}

RingMatrix RingMatrix::from_rows(const AbelianGroup& group, const std::vector<std::vector<GroupRingElem>>& rows,
                                 std::size_t cols) {
  RingMatrix m(group, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged RingMatrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void RingMatrix::set(std::size_t r, std::size_t c, GroupRingElem v) {
  if (r >= rows_ || c >= cols_) throw DomainError("matrix index out of range");
  if (!(v.group() == group_)) throw DomainError("matrix entry from a different group ring");
  data_[r * cols_ + c] = std::move(v);
}

RingMatrix RingMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                 const std::vector<std::size_t>& col_idx) const {
  RingMatrix s(group_, row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) s.data_[i * s.cols_ + j] = (*this)(row_idx[i], col_idx[j]);
  return s;
}

// ---------------------------------------------------------------- determinants

GroupRingElem det_cofactor(const RingMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 20) throw DomainError("cofactor determinant limited to order 20");
  const auto& g = m.group();
  // minor[S] = det of rows (n-|S| .. n-1) restricted to the columns in S.
  std::vector<GroupRingElem> minor(std::size_t{1} << n, GroupRingElem(g));
  minor[0] = GroupRingElem::one(g);
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    const auto row = n - static_cast<std::size_t>(std::popcount(s));
    GroupRingElem acc(g);
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(s & (std::uint32_t{1} << j))) continue;
      const auto& a = m(row, j);
      const auto& rest = minor[s & ~(std::uint32_t{1} << j)];
      if (!a.is_zero() && !rest.is_zero()) {
        auto term = a * rest;
        if (sign > 0)
          acc += term;
        else
          acc -= term;
      }
      sign = -sign;
    }
    minor[s] = std::move(acc);
  }
  return minor.back();
}

GroupRingElem det_berkowitz(const RingMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const auto& g = m.group();
  if (n == 0) return GroupRingElem::one(g);
  // Coefficients of the characteristic polynomial of the leading r x r block,
  // highest degree first.
  std::vector<GroupRingElem> poly{GroupRingElem::one(g), -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<GroupRingElem> toeplitz(r + 2, GroupRingElem(g));
    toeplitz[0] = GroupRingElem::one(g);
    toeplitz[1] = -m(r, r);
    std::vector<GroupRingElem> v(r, GroupRingElem(g));
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      GroupRingElem dot(g);
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * v[i];
      toeplitz[k + 2] = -dot;
      if (k + 1 == r) break;
      std::vector<GroupRingElem> next(r, GroupRingElem(g));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * v[j];
      v = std::move(next);
    }
    std::vector<GroupRingElem> next_poly(r + 2, GroupRingElem(g));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next_poly[i] += toeplitz[i - j] * poly[j];
    poly = std::move(next_poly);
  }
  return n % 2 == 0 ? poly[n] : -poly[n];
}

GroupRingElem det(const RingMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  return m.rows() <= 8 ? det_cofactor(m) : det_berkowitz(m);
}

// ---------------------------------------------------------------- ideals

bool IdealGens::is_zero_ideal() const {
  for (const auto& g : generators)
    if (!g.is_zero()) return false;
  return true;
}

IdealGens IdealGens::simplified() const {
  IdealGens out{ring_group, {}};
  std::vector<GroupRingElem> seen;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    auto key = normalize_associate(g);
    bool dup = false;
    for (const auto& s : seen)
      if (s == key) dup = true;
    if (dup) continue;
    seen.push_back(std::move(key));
    out.generators.push_back(g);
  }
  return out;
}

std::string IdealGens::to_string() const {
  if (generators.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i].to_string();
  return out;
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

IdealGens elementary_ideal(const RingMatrix& m, long d, std::size_t max_dim) {
  const auto& g = m.group();
  const long rows = static_cast<long>(m.rows()), cols = static_cast<long>(m.cols());
  const long k = cols - d;
  if (k <= 0) return {g, {GroupRingElem::one(g)}};
  if (k > std::min(rows, cols)) return {g, {}};
  if (m.rows() > max_dim || m.cols() > max_dim)
    throw DomainError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " exceeds max dimension " +
                      std::to_string(max_dim) + " for minor enumeration");
  IdealGens out{g, {}};
  const auto row_sets = k_subsets(m.rows(), static_cast<std::size_t>(k));
  const auto col_sets = k_subsets(m.cols(), static_cast<std::size_t>(k));
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) out.generators.push_back(det(m.submatrix(rs, cs)));
  return out;
}

}  // namespace qalex
