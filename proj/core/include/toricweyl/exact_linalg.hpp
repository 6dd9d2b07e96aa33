#ifndef TORICWEYL_EXACT_LINALG_HPP
#define TORICWEYL_EXACT_LINALG_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "toricweyl/scalars.hpp"

namespace toricweyl {

using RatVec = std::vector<Rat>;

/// Dense matrix over exact rationals. Sizes here are tiny (n <= 12, m <= 10);
/// all eliminations use exact pivots, so results are decisions, not estimates.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMat(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMat identity(int n);
  static RatMat from_double(const Eigen::MatrixXd& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  RatMat transposed() const;
  Eigen::MatrixXd to_double() const;

  RatVec row(int i) const;
  RatVec col(int j) const;

  friend RatMat operator*(const RatMat& a, const RatMat& b);
  friend bool operator==(const RatMat& a, const RatMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

RatVec operator*(const RatMat& a, const RatVec& x);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
Rat dot(const RatVec& a, const RatVec& b);
Eigen::VectorXd to_double(const RatVec& v);
RatVec rat_vec_from_double(const Eigen::VectorXd& v);

int exact_rank(RatMat m);
Rat exact_det(RatMat m);
std::optional<RatMat> exact_inverse(const RatMat& m);

/// Solves A X = B exactly. Returns one solution when the system is
/// consistent (unique when A has full column rank), nullopt otherwise.
std::optional<RatMat> exact_solve(const RatMat& a, const RatMat& b);
std::optional<RatVec> exact_solve(const RatMat& a, const RatVec& b);

}  // namespace toricweyl

#endif
