#pragma once

#include <cstddef>
#include <vector>

#include "qalex/group_ring.hpp"

namespace qalex {

/// Rectangular matrix over Z[A]; every entry lives in the same group ring.
class RingMatrix {
 public:
  RingMatrix() = default;
  /// rows x cols zero matrix.
  RingMatrix(AbelianGroup group, std::size_t rows, std::size_t cols);
  static RingMatrix identity(const AbelianGroup& group, std::size_t n);
  /// Builds from rows of entries; the group is taken from `group`.
  static RingMatrix from_rows(const AbelianGroup& group, const std::vector<std::vector<GroupRingElem>>& rows,
                              std::size_t cols);

  const AbelianGroup& group() const noexcept { return group_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const GroupRingElem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Sets an entry; throws DomainError on a group mismatch or bad index.
  void set(std::size_t r, std::size_t c, GroupRingElem v);

  /// Submatrix on the given (sorted) row and column index sets.
  RingMatrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const;

  friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

 private:
  AbelianGroup group_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<GroupRingElem> data_;
};

/// Determinant over Z[A] by a division-free scheme: Laplace expansion with
/// memoisation over column subsets up to order 8, Berkowitz above.
GroupRingElem det(const RingMatrix& m);
GroupRingElem det_cofactor(const RingMatrix& m);
GroupRingElem det_berkowitz(const RingMatrix& m);

inline constexpr std::size_t kDefaultMaxDim = 16;

/// Generator list of an ideal of Z[A]. The empty list is the zero ideal.
struct IdealGens {
  AbelianGroup ring_group;
  std::vector<GroupRingElem> generators;

  bool is_zero_ideal() const;
  /// Drops zeros and keeps the first member of each class of elements
  /// related by +-x (x in A); the ideal is unchanged.
  IdealGens simplified() const;
  /// Comma-separated text, "0" for the zero ideal.
  std::string to_string() const;
};

/// d-th elementary ideal of an m x n matrix: the (n-d)-minors when
/// n-m <= d < n, (0) when d < n-m and the unit ideal when d >= n. Minors are
/// listed in lexicographic order of (row set, column set). Throws DomainError
/// if minors are needed and either dimension exceeds `max_dim`.
IdealGens elementary_ideal(const RingMatrix& m, long d, std::size_t max_dim = kDefaultMaxDim);

/// Lexicographic enumeration of k-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);

}  // namespace qalex
