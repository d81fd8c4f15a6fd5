#ifndef VQG_GRADCHECK_HPP
#define VQG_GRADCHECK_HPP

#include <functional>
#include <span>
#include <vector>

#include "vqg/tape.hpp"

namespace vqg {

// Builds a scalar loss expression on the given tape from parameter leaves
// registered in the same order as the params span.
using LossBuilder = std::function<Val(Tape&, std::span<const Val>)>;

struct ValueGrad {
  double value = 0.0;
  std::vector<Matrix> grads;  // aligned with the params span
};

ValueGrad value_and_grad(const LossBuilder& f, std::span<const Matrix> params);

// Forward evaluation only.
double loss_value(const LossBuilder& f, std::span<const Matrix> params);

// Max over parameter coordinates of
//   |analytic - (f(x+h) - f(x-h)) / 2h| / (|analytic| + 1e-8).
double finite_difference_check(const LossBuilder& f, std::span<const Matrix> params,
                               double step);

}  // namespace vqg

#endif
