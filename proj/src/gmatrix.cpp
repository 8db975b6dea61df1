#include "preproj/gmatrix.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace preproj {

namespace {

GMatrix::Entry narrow(std::int64_t v) {
  if (v < std::numeric_limits<GMatrix::Entry>::min() ||
      v > std::numeric_limits<GMatrix::Entry>::max()) {
    throw std::overflow_error("GMatrix entry out of range: " + std::to_string(v));
  }
  return static_cast<GMatrix::Entry>(v);
}

}  // namespace

GMatrix::GMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw std::invalid_argument("GMatrix: negative size");
}

GMatrix GMatrix::identity(int n) {
  GMatrix m(n);
  for (int i = 0; i < n; ++i) m.data_[static_cast<std::size_t>(i) * n + i] = 1;
  return m;
}

GMatrix GMatrix::from_columns(int n, std::span<const std::int64_t> column_major) {
  if (column_major.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("GMatrix::from_columns: expected n*n entries");
  }
  GMatrix m(n);
  std::transform(column_major.begin(), column_major.end(), m.data_.begin(), narrow);
  return m;
}

void GMatrix::set(int row, int col, std::int64_t value) {
  data_[static_cast<std::size_t>(col) * n_ + row] = narrow(value);
}

std::vector<std::int64_t> GMatrix::column(int col) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(col) * n_;
  return {first, first + n_};
}

GMatrix GMatrix::operator*(const GMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("GMatrix: size mismatch");
  GMatrix out(n_);
  for (int c = 0; c < n_; ++c) {
    for (int r = 0; r < n_; ++r) {
      std::int64_t acc = 0;
      for (int k = 0; k < n_; ++k) acc += (*this)(r, k) * rhs(k, c);
      out.data_[static_cast<std::size_t>(c) * n_ + r] = narrow(acc);
    }
  }
  return out;
}

GMatrix GMatrix::operator-() const {
  GMatrix out(n_);
  std::transform(data_.begin(), data_.end(), out.data_.begin(),
                 [](Entry e) { return narrow(-static_cast<std::int64_t>(e)); });
  return out;
}

GMatrix GMatrix::times_reflection(int i, std::span<const int> neighbours) const {
  GMatrix out = *this;
  const std::size_t base = static_cast<std::size_t>(i) * n_;
  for (int r = 0; r < n_; ++r) {
    std::int64_t v = -static_cast<std::int64_t>(data_[base + r]);
    for (int k : neighbours) v += data_[static_cast<std::size_t>(k) * n_ + r];
    out.data_[base + r] = narrow(v);
  }
  return out;
}

std::int64_t GMatrix::determinant() const {
  if (n_ == 0) return 1;
  // Bareiss fraction-free elimination; every intermediate is a minor.
  std::vector<__int128> a(data_.begin(), data_.end());
  auto at = [&](int r, int c) -> __int128& { return a[static_cast<std::size_t>(c) * n_ + r]; };
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n_; ++r) {
        if (at(r, k) != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int c = 0; c < n_; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n_; ++r) {
      for (int c = k + 1; c < n_; ++c) {
        at(r, c) = (at(r, c) * at(k, k) - at(r, k) * at(k, c)) / prev;
      }
    }
    prev = at(k, k);
  }
  return static_cast<std::int64_t>(sign * at(n_ - 1, n_ - 1));
}

std::strong_ordering GMatrix::operator<=>(const GMatrix& rhs) const {
  if (auto c = n_ <=> rhs.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(data_.begin(), data_.end(), rhs.data_.begin(),
                                                rhs.data_.end());
}

std::string GMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int c = 0; c < n_; ++c) {
    if (c) os << ", ";
    os << '(';
    for (int r = 0; r < n_; ++r) {
      if (r) os << ',';
      os << (*this)(r, c);
    }
    os << ')';
  }
  os << ']';
  return os.str();
}

std::size_t GMatrixHash::operator()(const GMatrix& m) const noexcept {
  // FNV-1a over the raw entries.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto e : m.raw()) {
    h ^= static_cast<std::uint16_t>(e);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace preproj
