#pragma once

#include <cstdint>
#include <vector>

namespace qalex {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::int64_t> row(std::size_t r) const;
  bool row_is_zero(std::size_t r) const;
  /// Copy without zero rows.
  IntMatrix nonzero_rows() const;
  /// Vertical concatenation; column counts must agree.
  IntMatrix stacked(const IntMatrix& below) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Row-style Hermite normal form: echelon with positive pivots, entries above
/// each pivot reduced into [0, pivot). Zero rows are kept at the bottom so the
/// shape is unchanged. Throws OverflowError if int64 is exceeded.
IntMatrix hnf(IntMatrix m);

/// Generators of the solution module {x in (Z_n)^k : A x = 0 mod n}, where
/// k = A.cols(). Each generator is returned with its additive order; the
/// module is the internal direct sum of the cyclic subgroups they span.
struct ModularKernel {
  std::int64_t modulus = 0;
  std::vector<std::vector<std::int64_t>> generators;
  std::vector<std::int64_t> orders;
};

ModularKernel kernel_mod(const IntMatrix& a, std::int64_t n);

}  // namespace qalex
