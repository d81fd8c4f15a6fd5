#ifndef VQG_MATRIX_HPP
#define VQG_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "vqg/rng.hpp"

namespace vqg {

// Dense row-major matrix of doubles; the sole numeric carrier.
// Column vectors are matrices with cols == 1.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);  // zero-filled
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Matrix ones(std::size_t rows, std::size_t cols);
  static Matrix column(std::vector<double> values);
  static Matrix filled(std::size_t rows, std::size_t cols, double value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  void fill_uniform(Rng& rng, double lo, double hi);

  std::string shape_str() const;  // e.g. "3x4"

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

using Vector = Matrix;  // n x 1 by convention

// Throws if any entry of m is NaN/Inf, naming the operation that produced it.
void ensure_finite(const Matrix& m, const char* op);

Matrix matmul(const Matrix& a, const Matrix& b);
// a * b^T and a^T * b; used by reverse-mode matmul adjoints
Matrix matmul_nt(const Matrix& a, const Matrix& b);
Matrix matmul_tn(const Matrix& a, const Matrix& b);

Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix hadamard(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double s);
Matrix sigmoid(const Matrix& a);
Matrix tanh_elem(const Matrix& a);
Matrix exp_elem(const Matrix& a);
Matrix log_elem(const Matrix& a);
Matrix clamp_elem(const Matrix& a, double lo, double hi);

// Max-subtracted softmax over all entries of a column vector.
Matrix softmax(const Matrix& logits);

double sum(const Matrix& a);
double squared_norm(const Matrix& a);
std::size_t argmax(const Matrix& a);  // ties -> lowest index

Matrix rows_slice(const Matrix& a, std::size_t first, std::size_t count);
Matrix column_of(const Matrix& a, std::size_t col);
Matrix onehot(std::size_t index, std::size_t size);

bool bit_equal(const Matrix& a, const Matrix& b);
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace vqg

#endif
