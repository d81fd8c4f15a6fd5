#include "vqg/tape.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vqg {

Val Tape::push(Node node) {
  node.grad = Matrix(node.value.rows(), node.value.cols());
  nodes_.push_back(std::move(node));
  return Val{static_cast<std::uint32_t>(nodes_.size() - 1)};
}

const Tape::Node& Tape::at(Val v) const {
  if (v.idx >= nodes_.size()) {
    throw std::invalid_argument("Tape: stale value handle " + std::to_string(v.idx));
  }
  return nodes_[v.idx];
}

Val Tape::leaf(Matrix value) {
  ensure_finite(value, "Tape::leaf");
  Node n;
  n.op = Op::kLeaf;
  n.value = std::move(value);
  return push(std::move(n));
}

Val Tape::matmul(Val a, Val b) {
  Node n;
  n.op = Op::kMatMul;
  n.a = a.idx;
  n.b = b.idx;
  n.value = vqg::matmul(at(a).value, at(b).value);
  return push(std::move(n));
}

Val Tape::add(Val a, Val b) {
  Node n;
  n.op = Op::kAdd;
  n.a = a.idx;
  n.b = b.idx;
  n.value = vqg::add(at(a).value, at(b).value);
  return push(std::move(n));
}

Val Tape::sub(Val a, Val b) {
  Node n;
  n.op = Op::kSub;
  n.a = a.idx;
  n.b = b.idx;
  n.value = vqg::sub(at(a).value, at(b).value);
  return push(std::move(n));
}

Val Tape::mul(Val a, Val b) {
  Node n;
  n.op = Op::kMul;
  n.a = a.idx;
  n.b = b.idx;
  n.value = hadamard(at(a).value, at(b).value);
  return push(std::move(n));
}

Val Tape::scale(Val a, double s) {
  Node n;
  n.op = Op::kScale;
  n.a = a.idx;
  n.d0 = s;
  n.value = vqg::scale(at(a).value, s);
  return push(std::move(n));
}

Val Tape::sigmoid(Val a) {
  Node n;
  n.op = Op::kSigmoid;
  n.a = a.idx;
  n.value = vqg::sigmoid(at(a).value);
  return push(std::move(n));
}

Val Tape::tanh(Val a) {
  Node n;
  n.op = Op::kTanh;
  n.a = a.idx;
  n.value = tanh_elem(at(a).value);
  return push(std::move(n));
}

Val Tape::exp(Val a) {
  Node n;
  n.op = Op::kExp;
  n.a = a.idx;
  n.value = exp_elem(at(a).value);
  return push(std::move(n));
}

Val Tape::log(Val a) {
  Node n;
  n.op = Op::kLog;
  n.a = a.idx;
  n.value = log_elem(at(a).value);
  return push(std::move(n));
}

Val Tape::clamp(Val a, double lo, double hi) {
  Node n;
  n.op = Op::kClamp;
  n.a = a.idx;
  n.d0 = lo;
  n.d1 = hi;
  n.value = clamp_elem(at(a).value, lo, hi);
  return push(std::move(n));
}

Val Tape::sum(Val a) {
  Node n;
  n.op = Op::kSum;
  n.a = a.idx;
  n.value = Matrix{{vqg::sum(at(a).value)}};
  return push(std::move(n));
}

Val Tape::rows(Val a, std::size_t first, std::size_t count) {
  Node n;
  n.op = Op::kRows;
  n.a = a.idx;
  n.i0 = static_cast<std::uint32_t>(first);
  n.i1 = static_cast<std::uint32_t>(count);
  n.value = rows_slice(at(a).value, first, count);
  return push(std::move(n));
}

Val Tape::column(Val a, std::size_t col) {
  Node n;
  n.op = Op::kColumn;
  n.a = a.idx;
  n.i0 = static_cast<std::uint32_t>(col);
  n.value = column_of(at(a).value, col);
  return push(std::move(n));
}

Val Tape::softmax_cross_entropy(Val logits, std::size_t target) {
  const Matrix& x = at(logits).value;
  if (x.cols() != 1) {
    throw std::invalid_argument("softmax_cross_entropy: expected column vector, got " +
                                x.shape_str());
  }
  if (target >= x.rows()) {
    throw std::invalid_argument("softmax_cross_entropy: target " + std::to_string(target) +
                                " out of range for " + std::to_string(x.rows()) + " classes");
  }
  // log-sum-exp with max subtraction; loss = lse - x[target]
  double mx = x[0];
  for (double v : x.data()) mx = std::max(mx, v);
  double total = 0.0;
  Matrix probs(x.rows(), 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    probs[i] = std::exp(x[i] - mx);
    total += probs[i];
  }
  for (std::size_t i = 0; i < probs.size(); ++i) probs[i] /= total;
  const double loss = std::log(total) + mx - x[target];

  Node n;
  n.op = Op::kSoftmaxXent;
  n.a = logits.idx;
  n.i0 = static_cast<std::uint32_t>(target);
  n.value = Matrix{{loss}};
  n.cache = std::move(probs);
  return push(std::move(n));
}

const Matrix& Tape::value(Val v) const { return at(v).value; }

const Matrix& Tape::grad(Val v) const { return at(v).grad; }

double Tape::scalar(Val v) const {
  const Matrix& m = at(v).value;
  if (m.size() != 1) {
    throw std::invalid_argument("Tape::scalar: node is " + m.shape_str() + ", not 1x1");
  }
  return m[0];
}

void Tape::accumulate(std::uint32_t slot, const Matrix& delta) {
  Matrix& g = nodes_[slot].grad;
  for (std::size_t i = 0; i < g.size(); ++i) g[i] += delta[i];
}

void Tape::backward(Val root) {
  if (nodes_.empty()) {
    throw std::logic_error("Tape::backward: no recorded operations");
  }
  const Node& r = at(root);
  if (r.value.size() != 1) {
    throw std::invalid_argument("Tape::backward: root must be 1x1, got " + r.value.shape_str());
  }
  for (Node& n : nodes_) {
    std::fill(n.grad.data().begin(), n.grad.data().end(), 0.0);
  }
  nodes_[root.idx].grad[0] = 1.0;
  // exact reverse order of recording
  for (std::uint32_t i = root.idx + 1; i-- > 0;) {
    backprop_node(nodes_[i]);
  }
}

void Tape::backprop_node(Node& n) {
  const Matrix& g = n.grad;
  switch (n.op) {
    case Op::kLeaf:
      break;
    case Op::kMatMul:
      accumulate(n.a, matmul_nt(g, nodes_[n.b].value));
      accumulate(n.b, matmul_tn(nodes_[n.a].value, g));
      break;
    case Op::kAdd:
      accumulate(n.a, g);
      accumulate(n.b, g);
      break;
    case Op::kSub: {
      accumulate(n.a, g);
      Matrix& gb = nodes_[n.b].grad;
      for (std::size_t i = 0; i < gb.size(); ++i) gb[i] -= g[i];
      break;
    }
    case Op::kMul:
      accumulate(n.a, hadamard(g, nodes_[n.b].value));
      accumulate(n.b, hadamard(g, nodes_[n.a].value));
      break;
    case Op::kScale:
      accumulate(n.a, vqg::scale(g, n.d0));
      break;
    case Op::kSigmoid: {
      Matrix d(g.rows(), g.cols());
      for (std::size_t i = 0; i < d.size(); ++i) {
        const double y = n.value[i];
        d[i] = g[i] * y * (1.0 - y);
      }
      accumulate(n.a, d);
      break;
    }
    case Op::kTanh: {
      Matrix d(g.rows(), g.cols());
      for (std::size_t i = 0; i < d.size(); ++i) {
        const double y = n.value[i];
        d[i] = g[i] * (1.0 - y * y);
      }
      accumulate(n.a, d);
      break;
    }
    case Op::kExp:
      accumulate(n.a, hadamard(g, n.value));
      break;
    case Op::kLog: {
      Matrix d(g.rows(), g.cols());
      const Matrix& x = nodes_[n.a].value;
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = g[i] / x[i];
      accumulate(n.a, d);
      break;
    }
    case Op::kClamp: {
      Matrix d(g.rows(), g.cols());
      const Matrix& x = nodes_[n.a].value;
      for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = (x[i] >= n.d0 && x[i] <= n.d1) ? g[i] : 0.0;
      }
      accumulate(n.a, d);
      break;
    }
    case Op::kSum: {
      Matrix& ga = nodes_[n.a].grad;
      for (std::size_t i = 0; i < ga.size(); ++i) ga[i] += g[0];
      break;
    }
    case Op::kRows: {
      Matrix& ga = nodes_[n.a].grad;
      const std::size_t cols = ga.cols();
      for (std::size_t r = 0; r < n.i1; ++r) {
        for (std::size_t c = 0; c < cols; ++c) ga(n.i0 + r, c) += g(r, c);
      }
      break;
    }
    case Op::kColumn: {
      Matrix& ga = nodes_[n.a].grad;
      for (std::size_t r = 0; r < g.rows(); ++r) ga(r, n.i0) += g[r];
      break;
    }
    case Op::kSoftmaxXent: {
      Matrix d(n.cache.rows(), 1);
      const double up = g[0];
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = up * n.cache[i];
      d[n.i0] -= up;
      accumulate(n.a, d);
      break;
    }
  }
}

}  // namespace vqg
