#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace preproj::oracle {

// Exact arithmetic in F_p. Every dimension and Hom-vanishing computed by the
// oracle is the same over Q at the ranks it accepts.
inline constexpr std::uint32_t kPrime = 32003;

using Fp = std::uint32_t;  // always reduced into [0, kPrime)

inline Fp fp_add(Fp a, Fp b) {
  const Fp s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline Fp fp_sub(Fp a, Fp b) { return a >= b ? a - b : a + kPrime - b; }
inline Fp fp_mul(Fp a, Fp b) {
  return static_cast<Fp>(static_cast<std::uint64_t>(a) * b % kPrime);
}
inline Fp fp_neg(Fp a) { return a == 0 ? 0 : kPrime - a; }
Fp fp_inv(Fp a);
Fp fp_from(std::int64_t v);

using Vec = std::vector<Fp>;

/// Dense matrix over F_p, row-major. Vectors are rows; a matrix A acts on
/// the right, x -> x A.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}
  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Fp& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  Fp operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<Fp> row(int r) { return {a_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const Fp> row(int r) const {
    return {a_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  Vec row_vec(int r) const { return Vec(row(r).begin(), row(r).end()); }

  bool is_zero() const;
  Mat transpose() const;
  void append_row(std::span<const Fp> r);
  Mat block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Mat& m);

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Fp> a_;
};

Vec vec_times(std::span<const Fp> x, const Mat& m);
Mat scaled(const Mat& m, Fp s);
Mat vstack(const Mat& a, const Mat& b);

/// A subspace of F_p^n kept as its reduced row echelon basis, so equal
/// subspaces have equal representations.
struct Subspace {
  Mat basis;  // rank x ambient, RREF, no zero rows
  std::vector<int> pivots;
  int ambient = 0;

  int dim() const { return basis.rows(); }
  bool contains(std::span<const Fp> v) const;
  // Remainder of v modulo the subspace; zero on pivot columns.
  Vec reduce(std::span<const Fp> v) const;
  // Coefficients of v in `basis`, or nullopt if v is outside.
  std::optional<Vec> coordinates(std::span<const Fp> v) const;
  // Columns not used as pivots, ascending; unit vectors there span a complement.
  std::vector<int> free_columns() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient == b.ambient && a.basis == b.basis;
  }
};

Subspace span_of(const Mat& rows);
Subspace span_of(const std::vector<Vec>& rows, int ambient);
int rank(const Mat& m);
// Rows x with x m = 0, as a basis in RREF.
Subspace left_kernel(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
Fp determinant(Mat m);
// Coefficients c_0..c_n of det(x I - m), c_n = 1.
Vec characteristic_polynomial(const Mat& m);
Fp poly_eval(const Vec& coeffs, Fp x);

}  // namespace preproj::oracle
