#include "preproj/oracle/linalg.hpp"

#include <stdexcept>

namespace preproj::oracle {

Fp fp_inv(Fp a) {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  Fp result = 1, base = a;
  for (std::uint32_t e = kPrime - 2; e; e >>= 1) {
    if (e & 1) result = fp_mul(result, base);
    base = fp_mul(base, base);
  }
  return result;
}

Fp fp_from(std::int64_t v) {
  const std::int64_t r = v % static_cast<std::int64_t>(kPrime);
  return static_cast<Fp>(r < 0 ? r + kPrime : r);
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
  Mat m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw std::invalid_argument("ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

bool Mat::is_zero() const {
  for (Fp x : a_)
    if (x) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void Mat::append_row(std::span<const Fp> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
  if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("row length mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

Mat Mat::block(int r0, int c0, int nr, int nc) const {
  Mat b(nr, nc);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Mat::set_block(int r0, int c0, const Mat& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  Mat p(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Fp x = a(i, k);
      if (!x) continue;
      for (int j = 0; j < b.cols_; ++j) p(i, j) = fp_add(p(i, j), fp_mul(x, b(k, j)));
    }
  }
  return p;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch in sum");
  Mat s = a;
  for (std::size_t k = 0; k < s.a_.size(); ++k) s.a_[k] = fp_add(s.a_[k], b.a_[k]);
  return s;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch in difference");
  Mat s = a;
  for (std::size_t k = 0; k < s.a_.size(); ++k) s.a_[k] = fp_sub(s.a_[k], b.a_[k]);
  return s;
}

Vec vec_times(std::span<const Fp> x, const Mat& m) {
  if (static_cast<int>(x.size()) != m.rows()) throw std::invalid_argument("vector length mismatch");
  Vec out(m.cols(), 0);
  for (int k = 0; k < m.rows(); ++k) {
    if (!x[k]) continue;
    for (int j = 0; j < m.cols(); ++j) out[j] = fp_add(out[j], fp_mul(x[k], m(k, j)));
  }
  return out;
}

Mat scaled(const Mat& m, Fp s) {
  Mat out = m;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = fp_mul(m(r, c), s);
  return out;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  Mat out = a;
  for (int r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns, rows beyond them are zero.
std::vector<int> eliminate(Mat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Fp inv = fp_inv(m(r, c));
    for (int j = c; j < m.cols(); ++j) m(r, j) = fp_mul(m(r, j), inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Fp f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) = fp_sub(m(i, j), fp_mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Subspace span_of(const Mat& rows) {
  Mat m = rows;
  Subspace s;
  s.ambient = m.cols();
  s.pivots = eliminate(m);
  s.basis = m.block(0, 0, static_cast<int>(s.pivots.size()), m.cols());
  return s;
}

Subspace span_of(const std::vector<Vec>& rows, int ambient) {
  if (rows.empty()) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Mat(0, ambient);
    return s;
  }
  return span_of(Mat::from_rows(rows, ambient));
}

bool Subspace::contains(std::span<const Fp> v) const {
  for (Fp x : reduce(v))
    if (x) return false;
  return true;
}

Vec Subspace::reduce(std::span<const Fp> v) const {
  Vec out(v.begin(), v.end());
  for (int r = 0; r < dim(); ++r) {
    const Fp f = out[pivots[r]];
    if (!f) continue;
    for (int j = 0; j < ambient; ++j) out[j] = fp_sub(out[j], fp_mul(f, basis(r, j)));
  }
  return out;
}

std::optional<Vec> Subspace::coordinates(std::span<const Fp> v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(dim());
  for (int r = 0; r < dim(); ++r) c[r] = v[pivots[r]];
  return c;
}

std::vector<int> Subspace::free_columns() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int c = 0; c < ambient; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

int rank(const Mat& m) {
  Mat copy = m;
  return static_cast<int>(eliminate(copy).size());
}

Subspace left_kernel(const Mat& m) {
  // x m = 0  <=>  m^T x^T = 0; solve from the RREF of m^T.
  Mat t = m.transpose();
  const auto pivots = eliminate(t);
  const int n = m.rows();
  std::vector<Vec> rows;
  std::size_t k = 0;
  for (int f = 0; f < n; ++f) {
    if (k < pivots.size() && pivots[k] == f) {
      ++k;
      continue;
    }
    Vec x(n, 0);
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = fp_neg(t(static_cast<int>(r), f));
    rows.push_back(std::move(x));
  }
  return span_of(rows, n);
}

std::optional<Mat> inverse(const Mat& m) {
  const int n = m.rows();
  if (n != m.cols()) return std::nullopt;
  Mat aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Mat::identity(n));
  const auto pivots = eliminate(aug);
  if (static_cast<int>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  return aug.block(0, n, n, n);
}

Fp determinant(Mat m) {
  const int n = m.rows();
  Fp det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = fp_neg(det);
    }
    det = fp_mul(det, m(c, c));
    const Fp inv = fp_inv(m(c, c));
    for (int i = c + 1; i < n; ++i) {
      const Fp f = fp_mul(m(i, c), inv);
      if (!f) continue;
      for (int j = c; j < n; ++j) m(i, j) = fp_sub(m(i, j), fp_mul(f, m(c, j)));
    }
  }
  return det;
}

Vec characteristic_polynomial(const Mat& m) {
  // Faddeev-LeVerrier; needs k invertible for k <= n, fine since n < p.
  const int n = m.rows();
  Vec c(n + 1, 0);
  c[n] = 1;
  Mat mk(n, n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk;
    for (int i = 0; i < n; ++i) mk(i, i) = fp_add(mk(i, i), c[n - k + 1]);
    const Mat am = m * mk;
    Fp tr = 0;
    for (int i = 0; i < n; ++i) tr = fp_add(tr, am(i, i));
    c[n - k] = fp_neg(fp_mul(tr, fp_inv(static_cast<Fp>(k))));
  }
  return c;
}

Fp poly_eval(const Vec& coeffs, Fp x) {
  Fp acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = fp_add(fp_mul(acc, x), *it);
  return acc;
}

}  // namespace preproj::oracle
