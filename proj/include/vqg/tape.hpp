#ifndef VQG_TAPE_HPP
#define VQG_TAPE_HPP

#include <cstdint>
#include <vector>

#include "vqg/matrix.hpp"

namespace vqg {

// Handle to a value recorded on a Tape.
struct Val {
  std::uint32_t idx = 0;
};

// Reverse-mode gradient tape. Records primitive operations in execution
// order; backward() replays them in exact reverse order, accumulating
// adjoints into every recorded value. One training step owns one tape;
// tapes are not shared across threads.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Val leaf(Matrix value);

  Val matmul(Val a, Val b);
  Val add(Val a, Val b);
  Val sub(Val a, Val b);
  Val mul(Val a, Val b);  // elementwise
  Val scale(Val a, double s);
  Val sigmoid(Val a);
  Val tanh(Val a);
  Val exp(Val a);
  Val log(Val a);
  Val clamp(Val a, double lo, double hi);
  Val sum(Val a);  // 1x1
  Val rows(Val a, std::size_t first, std::size_t count);
  Val column(Val a, std::size_t col);
  // -log(softmax(logits)[target]); logits must be a column vector.
  Val softmax_cross_entropy(Val logits, std::size_t target);

  const Matrix& value(Val v) const;
  const Matrix& grad(Val v) const;
  double scalar(Val v) const;  // value of a 1x1 node

  // Zeroes every gradient slot, seeds d(root)/d(root) = 1 and replays the
  // tape backward. root must be 1x1. Rejected on an empty tape.
  void backward(Val root);

  std::size_t size() const { return nodes_.size(); }

 private:
  enum class Op : std::uint8_t {
    kLeaf,
    kMatMul,
    kAdd,
    kSub,
    kMul,
    kScale,
    kSigmoid,
    kTanh,
    kExp,
    kLog,
    kClamp,
    kSum,
    kRows,
    kColumn,
    kSoftmaxXent,
  };

  struct Node {
    Op op = Op::kLeaf;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t i0 = 0;  // slice offset / column / target index
    std::uint32_t i1 = 0;  // slice count
    double d0 = 0.0;       // scale factor / clamp lo
    double d1 = 0.0;       // clamp hi
    Matrix value;
    Matrix grad;
    Matrix cache;  // softmax probabilities for kSoftmaxXent
  };

  Val push(Node node);
  const Node& at(Val v) const;
  void backprop_node(Node& n);
  void accumulate(std::uint32_t slot, const Matrix& delta);

  std::vector<Node> nodes_;
};

}  // namespace vqg

#endif
