#include "toricweyl/exact_linalg.hpp"

#include "toricweyl/errors.hpp"

namespace toricweyl {

RatMat::RatMat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      fail(ErrorCode::BadDimension, "ragged initializer");
    for (const auto& v : r) data_.push_back(v);
  }
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::from_double(const Eigen::MatrixXd& src) {
  RatMat m(static_cast<int>(src.rows()), static_cast<int>(src.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rat_from_double(src(i, j));
  return m;
}

RatMat RatMat::transposed() const {
  RatMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Eigen::MatrixXd RatMat::to_double() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = rat_to_double((*this)(i, j));
  return m;
}

RatVec RatMat::row(int i) const {
  RatVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

RatVec RatMat::col(int j) const {
  RatVec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::BadDimension, "matmul shapes");
  RatMat out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

RatVec operator*(const RatMat& a, const RatVec& x) {
  if (a.cols() != static_cast<int>(x.size()))
    fail(ErrorCode::BadDimension, "matvec shapes");
  RatVec out(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) fail(ErrorCode::BadDimension, "vec add");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) fail(ErrorCode::BadDimension, "vec sub");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) fail(ErrorCode::BadDimension, "dot");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Eigen::VectorXd to_double(const RatVec& v) {
  Eigen::VectorXd out(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    out[static_cast<int>(i)] = rat_to_double(v[i]);
  return out;
}

RatVec rat_vec_from_double(const Eigen::VectorXd& v) {
  RatVec out(v.size());
  for (int i = 0; i < v.size(); ++i) out[i] = rat_from_double(v[i]);
  return out;
}

namespace {

// Row echelon by exact Gaussian elimination; returns pivot columns.
std::vector<int> echelon(RatMat& m) {
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    Rat inv = Rat(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

int exact_rank(RatMat m) { return static_cast<int>(echelon(m).size()); }

Rat exact_det(RatMat m) {
  if (m.rows() != m.cols()) fail(ErrorCode::BadDimension, "det of non-square");
  int n = m.rows();
  Rat det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rat inv = Rat(1) / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<RatMat> exact_inverse(const RatMat& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::BadDimension, "inverse of non-square");
  int n = m.rows();
  RatMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) < n || pivots.back() >= n)
    return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (pivots[i] != i) return std::nullopt;
  RatMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<RatMat> exact_solve(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows()) fail(ErrorCode::BadDimension, "solve shapes");
  int n = a.cols(), k = b.cols();
  RatMat aug(a.rows(), n + k);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  auto pivots = echelon(aug);
  // A pivot in the augmented block means inconsistency.
  for (int c : pivots)
    if (c >= n) return std::nullopt;
  RatMat x(n, k);  // free variables set to zero
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < k; ++j) x(pivots[r], j) = aug(static_cast<int>(r), n + j);
  return x;
}

std::optional<RatVec> exact_solve(const RatMat& a, const RatVec& b) {
  RatMat rhs(static_cast<int>(b.size()), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(static_cast<int>(i), 0) = b[i];
  auto x = exact_solve(a, rhs);
  if (!x) return std::nullopt;
  return x->col(0);
}

}  // namespace toricweyl
