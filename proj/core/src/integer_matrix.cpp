#include "qalex/integer_matrix.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <utility>

#include "qalex/checked.hpp"
#include "qalex/error.hpp"

namespace qalex {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw DomainError("ragged IntMatrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged IntMatrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t r) const {
  auto b = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  return {b, b + static_cast<std::ptrdiff_t>(cols_)};
}

bool IntMatrix::row_is_zero(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(r, c) != 0) return false;
  return true;
}

IntMatrix IntMatrix::nonzero_rows() const {
  std::vector<std::vector<std::int64_t>> keep;
  for (std::size_t r = 0; r < rows_; ++r)
    if (!row_is_zero(r)) keep.push_back(row(r));
  return from_rows(keep, cols_);
}

IntMatrix IntMatrix::stacked(const IntMatrix& below) const {
  if (rows_ && below.rows_ && cols_ != below.cols_) throw DomainError("stacking matrices of different widths");
  IntMatrix m(rows_ + below.rows_, rows_ ? cols_ : below.cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

namespace {

__extension__ typedef __int128 i128;


void axpy_row(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) = checked::sub(m(dst, c), checked::mul(q, m(src, c)));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? checked::sub(0, v) : v; }

}  // namespace

IntMatrix hnf(IntMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    while (true) {
      // Euclid on the column: bring the smallest nonzero entry up, reduce the rest.
      std::size_t best = m.rows();
      for (std::size_t i = r; i < m.rows(); ++i)
        if (m(i, c) != 0 && (best == m.rows() || abs64(m(i, c)) < abs64(m(best, c)))) best = i;
      if (best == m.rows()) break;
      swap_rows(m, r, best);
      bool clear = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (m(i, c) == 0) continue;
        axpy_row(m, i, r, checked::floor_div(m(i, c), m(r, c)));
        if (m(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0)
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) = checked::sub(0, m(r, k));
    for (std::size_t i = 0; i < r; ++i) axpy_row(m, i, r, checked::floor_div(m(i, c), m(r, c)));
    ++r;
  }
  return m;
}

// ---------------------------------------------------------------- kernel mod n

namespace {

struct ModRing {
  std::int64_t n;
  std::int64_t red(i128 v) const {
    auto r = static_cast<std::int64_t>(v % n);
    return r < 0 ? r + n : r;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return red(static_cast<i128>(a) * b); }
};

// Replaces (x, y) by (s x + t y, p x + q y) entrywise mod n.
template <typename Get>
void combine(const ModRing& R, std::size_t len, Get get, std::int64_t s, std::int64_t t, std::int64_t p,
             std::int64_t q) {
  for (std::size_t k = 0; k < len; ++k) {
    auto [x, y] = get(k);
    std::int64_t nx = R.red(static_cast<i128>(s) * *x + static_cast<i128>(t) * *y);
    std::int64_t ny = R.red(static_cast<i128>(p) * *x + static_cast<i128>(q) * *y);
    *x = nx;
    *y = ny;
  }
}

// Coefficients (s, t, p, q) of a unimodular transform sending (a, b) to (g, 0).
std::array<std::int64_t, 4> gcd_transform(std::int64_t a, std::int64_t b) {
  if (b % a == 0) return {1, 0, -(b / a), 1};
  auto e = checked::egcd(a, b);
  return {e.s, e.t, -(b / e.g), a / e.g};
}

}  // namespace

ModularKernel kernel_mod(const IntMatrix& a, std::int64_t n) {
  if (n < 2) throw DomainError("kernel_mod needs modulus >= 2");
  const ModRing R{n};
  const std::size_t m = a.rows(), k = a.cols();
  IntMatrix b(m, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) b(i, j) = R.red(a(i, j));
  IntMatrix v(k, k);
  for (std::size_t j = 0; j < k; ++j) v(j, j) = 1;

  auto row_op = [&](std::size_t r1, std::size_t r2, const std::array<std::int64_t, 4>& T) {
    combine(R, k, [&](std::size_t c) { return std::pair{&b(r1, c), &b(r2, c)}; }, T[0], T[1], T[2], T[3]);
  };
  auto col_op = [&](std::size_t c1, std::size_t c2, const std::array<std::int64_t, 4>& T) {
    combine(R, m, [&](std::size_t r) { return std::pair{&b(r, c1), &b(r, c2)}; }, T[0], T[1], T[2], T[3]);
    combine(R, k, [&](std::size_t r) { return std::pair{&v(r, c1), &v(r, c2)}; }, T[0], T[1], T[2], T[3]);
  };

  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(m, k); ++t) {
    // Smallest nonzero residue as pivot.
    std::size_t pr = m, pc = k;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < k; ++j)
        if (b(i, j) != 0 && (pr == m || b(i, j) < b(pr, pc))) {
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    if (pr != t)
      for (std::size_t c = 0; c < k; ++c) std::swap(b(pr, c), b(t, c));
    if (pc != t) {
      for (std::size_t r = 0; r < m; ++r) std::swap(b(r, pc), b(r, t));
      for (std::size_t r = 0; r < k; ++r) std::swap(v(r, pc), v(r, t));
    }
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < m; ++i)
        if (b(i, t) != 0) row_op(t, i, gcd_transform(b(t, t), b(i, t)));
      for (std::size_t j = t + 1; j < k; ++j)
        if (b(t, j) != 0) col_op(t, j, gcd_transform(b(t, t), b(t, j)));
      for (std::size_t i = t + 1; i < m; ++i)
        if (b(i, t) != 0) dirty = true;
    }
    diag.push_back(b(t, t));
  }

  ModularKernel out;
  out.modulus = n;
  for (std::size_t j = 0; j < k; ++j) {
    std::int64_t d = j < diag.size() ? diag[j] : 0;
    std::int64_t g = std::gcd(d, n);
    if (g == 1) continue;
    std::int64_t scale = n / g;
    std::vector<std::int64_t> gen(k);
    for (std::size_t r = 0; r < k; ++r) gen[r] = R.mul(v(r, j), scale);
    out.generators.push_back(std::move(gen));
    out.orders.push_back(g);
  }
  return out;
}

}  // namespace qalex
