#include "vqg/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace vqg {

namespace {

std::string shape_of(const Matrix& m) { return m.shape_str(); }

[[noreturn]] void shape_error(const char* op, const Matrix& a, const Matrix& b) {
  throw std::invalid_argument(std::string(op) + ": shape mismatch (" + shape_of(a) +
                              " vs " + shape_of(b) + ")");
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("Matrix: data length " + std::to_string(data_.size()) +
                                " does not match shape " + shape_str());
  }
  ensure_finite(*this, "Matrix");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw std::invalid_argument("Matrix: ragged initializer rows");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
  ensure_finite(*this, "Matrix");
}

Matrix Matrix::ones(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  std::fill(m.data_.begin(), m.data_.end(), 1.0);
  return m;
}

Matrix Matrix::column(std::vector<double> values) {
  const std::size_t n = values.size();
  return {n, 1, std::move(values)};
}

Matrix Matrix::filled(std::size_t rows, std::size_t cols, double value) {
  Matrix m(rows, cols);
  std::fill(m.data_.begin(), m.data_.end(), value);
  return m;
}

void Matrix::fill_uniform(Rng& rng, double lo, double hi) {
  for (double& v : data_) v = rng.uniform(lo, hi);
}

std::string Matrix::shape_str() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

void ensure_finite(const Matrix& m, const char* op) {
  for (double v : m.data()) {
    if (!std::isfinite(v)) {
      throw std::runtime_error(std::string(op) + ": non-finite value produced");
    }
  }
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: dimension mismatch (" + a.shape_str() + " * " +
                                b.shape_str() + ")");
  }
  Matrix out(a.rows(), b.cols());
  const std::size_t n = a.cols(), bc = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double* orow = &out(i, 0);
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      const double* brow = &b(k, 0);
      for (std::size_t j = 0; j < bc; ++j) orow[j] += aik * brow[j];
    }
  }
  ensure_finite(out, "matmul");
  return out;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("matmul_nt: dimension mismatch (" + a.shape_str() + " * " +
                                b.shape_str() + "^T)");
  }
  Matrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* arow = &a(i, 0);
    for (std::size_t j = 0; j < b.rows(); ++j) {
      const double* brow = &b(j, 0);
      double acc = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += arow[k] * brow[k];
      out(i, j) = acc;
    }
  }
  ensure_finite(out, "matmul_nt");
  return out;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw std::invalid_argument("matmul_tn: dimension mismatch (" + a.shape_str() + "^T * " +
                                b.shape_str() + ")");
  }
  Matrix out(a.cols(), b.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    const double* arow = &a(k, 0);
    const double* brow = &b(k, 0);
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const double aki = arow[i];
      if (aki == 0.0) continue;
      double* orow = &out(i, 0);
      for (std::size_t j = 0; j < b.cols(); ++j) orow[j] += aki * brow[j];
    }
  }
  ensure_finite(out, "matmul_tn");
  return out;
}

namespace {

template <typename F>
Matrix zip(const char* op, const Matrix& a, const Matrix& b, F f) {
  if (!a.same_shape(b)) shape_error(op, a, b);
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f(a[i], b[i]);
  ensure_finite(out, op);
  return out;
}

template <typename F>
Matrix map(const char* op, const Matrix& a, F f) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f(a[i]);
  ensure_finite(out, op);
  return out;
}

}  // namespace

Matrix add(const Matrix& a, const Matrix& b) {
  return zip("add", a, b, [](double x, double y) { return x + y; });
}

Matrix sub(const Matrix& a, const Matrix& b) {
  return zip("sub", a, b, [](double x, double y) { return x - y; });
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  return zip("hadamard", a, b, [](double x, double y) { return x * y; });
}

Matrix scale(const Matrix& a, double s) {
  return map("scale", a, [s](double x) { return s * x; });
}

Matrix sigmoid(const Matrix& a) {
  return map("sigmoid", a, [](double x) {
    // split on sign to avoid overflow in exp
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
  });
}

Matrix tanh_elem(const Matrix& a) {
  return map("tanh", a, [](double x) { return std::tanh(x); });
}

Matrix exp_elem(const Matrix& a) {
  return map("exp", a, [](double x) { return std::exp(x); });
}

Matrix log_elem(const Matrix& a) {
  return map("log", a, [](double x) { return std::log(x); });
}

Matrix clamp_elem(const Matrix& a, double lo, double hi) {
  return map("clamp", a, [lo, hi](double x) { return std::clamp(x, lo, hi); });
}

Matrix softmax(const Matrix& logits) {
  if (logits.size() == 0) {
    throw std::invalid_argument("softmax: empty input");
  }
  ensure_finite(logits, "softmax input");
  double mx = logits[0];
  for (double v : logits.data()) mx = std::max(mx, v);
  Matrix out(logits.rows(), logits.cols());
  double total = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - mx);
    total += out[i];
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i] /= total;
  return out;
}

double sum(const Matrix& a) {
  double acc = 0.0;
  for (double v : a.data()) acc += v;
  return acc;
}

double squared_norm(const Matrix& a) {
  double acc = 0.0;
  for (double v : a.data()) acc += v * v;
  return acc;
}

std::size_t argmax(const Matrix& a) {
  if (a.size() == 0) throw std::invalid_argument("argmax: empty input");
  std::size_t best = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] > a[best]) best = i;
  }
  return best;
}

Matrix rows_slice(const Matrix& a, std::size_t first, std::size_t count) {
  if (first + count > a.rows()) {
    throw std::invalid_argument("rows_slice: [" + std::to_string(first) + ", " +
                                std::to_string(first + count) + ") out of range for " +
                                a.shape_str());
  }
  Matrix out(count, a.cols());
  std::memcpy(out.data().data(), a.data().data() + first * a.cols(),
              count * a.cols() * sizeof(double));
  return out;
}

Matrix column_of(const Matrix& a, std::size_t col) {
  if (col >= a.cols()) {
    throw std::invalid_argument("column_of: column " + std::to_string(col) +
                                " out of range for " + a.shape_str());
  }
  Matrix out(a.rows(), 1);
  for (std::size_t r = 0; r < a.rows(); ++r) out[r] = a(r, col);
  return out;
}

Matrix onehot(std::size_t index, std::size_t size) {
  if (index >= size) {
    throw std::invalid_argument("onehot: index " + std::to_string(index) +
                                " out of range for size " + std::to_string(size));
  }
  Matrix out(size, 1);
  out[index] = 1.0;
  return out;
}

bool bit_equal(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) return false;
  return std::memcmp(a.data().data(), b.data().data(), a.size() * sizeof(double)) == 0;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) shape_error("max_abs_diff", a, b);
  double mx = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) mx = std::max(mx, std::abs(a[i] - b[i]));
  return mx;
}

}  // namespace vqg
