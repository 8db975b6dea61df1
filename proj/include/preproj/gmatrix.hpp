#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace preproj {

/// Square integer matrix stored column-major. Column j holds the g-vector of
/// the j-th vertex, so columns are the natural unit of access.
///
/// Entries are stored narrow; every arithmetic result is formed in 64 bits and
/// range-checked before narrowing, throwing std::overflow_error on overflow.
class GMatrix {
 public:
  using Entry = std::int16_t;

  GMatrix() = default;
  explicit GMatrix(int n);

  static GMatrix identity(int n);
  // Build from column-major values; throws std::overflow_error if any value
  // does not fit in Entry.
  static GMatrix from_columns(int n, std::span<const std::int64_t> column_major);

  int size() const { return n_; }

  // Zero-based row/column access.
  std::int64_t operator()(int row, int col) const {
    return data_[static_cast<std::size_t>(col) * n_ + row];
  }
  void set(int row, int col, std::int64_t value);

  std::vector<std::int64_t> column(int col) const;
  std::span<const Entry> raw() const { return data_; }

  GMatrix operator*(const GMatrix& rhs) const;
  GMatrix operator-() const;

  // this * r_i, touching only column i: col_i <- -col_i + sum of neighbour
  // columns. `neighbours` are zero-based.
  GMatrix times_reflection(int i, std::span<const int> neighbours) const;

  // Exact determinant (fraction-free elimination in 128-bit).
  std::int64_t determinant() const;

  bool operator==(const GMatrix&) const = default;
  // Lexicographic on the column-major entries (size first).
  std::strong_ordering operator<=>(const GMatrix& rhs) const;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<Entry> data_;
};

struct GMatrixHash {
  std::size_t operator()(const GMatrix& m) const noexcept;
};

}  // namespace preproj
