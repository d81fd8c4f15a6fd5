#include "vqg/gradcheck.hpp"

#include <cmath>
#include <stdexcept>

namespace vqg {

namespace {

Val build(const LossBuilder& f, Tape& tape, std::span<const Matrix> params) {
  std::vector<Val> leaves;
  leaves.reserve(params.size());
  for (const Matrix& p : params) leaves.push_back(tape.leaf(p));
  return f(tape, leaves);
}

}  // namespace

ValueGrad value_and_grad(const LossBuilder& f, std::span<const Matrix> params) {
  Tape tape;
  std::vector<Val> leaves;
  leaves.reserve(params.size());
  for (const Matrix& p : params) leaves.push_back(tape.leaf(p));
  const Val root = f(tape, leaves);
  tape.backward(root);
  ValueGrad out;
  out.value = tape.scalar(root);
  out.grads.reserve(params.size());
  for (Val v : leaves) out.grads.push_back(tape.grad(v));
  return out;
}

double loss_value(const LossBuilder& f, std::span<const Matrix> params) {
  Tape tape;
  return tape.scalar(build(f, tape, params));
}

double finite_difference_check(const LossBuilder& f, std::span<const Matrix> params,
                               double step) {
  if (step <= 0.0) {
    throw std::invalid_argument("finite_difference_check: step must be positive");
  }
  const ValueGrad analytic = value_and_grad(f, params);
  std::vector<Matrix> work(params.begin(), params.end());
  double worst = 0.0;
  for (std::size_t p = 0; p < work.size(); ++p) {
    for (std::size_t i = 0; i < work[p].size(); ++i) {
      const double saved = work[p][i];
      work[p][i] = saved + step;
      const double up = loss_value(f, work);
      work[p][i] = saved - step;
      const double down = loss_value(f, work);
      work[p][i] = saved;
      const double numeric = (up - down) / (2.0 * step);
      const double a = analytic.grads[p][i];
      const double err = std::abs(a - numeric) / (std::abs(a) + 1e-8);
      worst = std::max(worst, err);
    }
  }
  return worst;
}

}  // namespace vqg
