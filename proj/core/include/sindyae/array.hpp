#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace sindyae {

// Dense 2-D array of doubles, row-major. This is the value type everything
// else is built on: data matrices X/Xdot, network weights, SINDy libraries
// and coefficients all live in Array2.
class Array2 {
 public:
  Array2() = default;
  Array2(int rows, int cols);  // zero-initialized
  Array2(int rows, int cols, std::vector<double> data);

  static Array2 full(int rows, int cols, double value);
  static Array2 identity(int n);
  static Array2 from_rows(std::initializer_list<std::initializer_list<double>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double& operator[](std::size_t k) { return data_[k]; }
  double operator[](std::size_t k) const { return data_[k]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  bool same_shape(const Array2& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
  bool all_finite() const;
  std::string shape_str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// ---- plain (untraced) arithmetic -------------------------------------------
// These are the forward kernels; the autodiff tape reuses them for its op
// implementations. Shape mismatches throw DimensionError.

Array2 matmul(const Array2& a, const Array2& b);
Array2 matmul_tn(const Array2& a, const Array2& b);  // a^T * b
Array2 matmul_nt(const Array2& a, const Array2& b);  // a * b^T

Array2 add(const Array2& a, const Array2& b);
Array2 sub(const Array2& a, const Array2& b);
Array2 hadamard(const Array2& a, const Array2& b);
Array2 scale(const Array2& a, double c);
Array2 add_rowvec(const Array2& a, const Array2& row);  // row is 1 x cols
void add_inplace(Array2& a, const Array2& b);
void axpy_inplace(Array2& a, double c, const Array2& b);  // a += c*b

Array2 transpose(const Array2& a);
Array2 square(const Array2& a);
Array2 abs_elem(const Array2& a);
Array2 sign_elem(const Array2& a);  // sign(0) = 0 (L1 subgradient convention)
Array2 sin_elem(const Array2& a);
Array2 cos_elem(const Array2& a);

// Elementwise logistic sigmoid and its derivatives: order 0 -> f,
// 1 -> f' = f(1-f), 2 -> f'' = f(1-f)(1-2f), 3 -> f''' (used by backward).
Array2 sigmoid_family(const Array2& a, int order);

double sum(const Array2& a);
Array2 colsum(const Array2& a);  // 1 x cols
Array2 colmean(const Array2& a);
double max_abs(const Array2& a);

Array2 slice_cols(const Array2& a, int j0, int j1);  // columns [j0, j1)
Array2 slice_rows(const Array2& a, int i0, int i1);
Array2 hconcat(const std::vector<const Array2*>& parts);
Array2 take_rows(const Array2& a, const std::vector<int>& idx);

}  // namespace sindyae
