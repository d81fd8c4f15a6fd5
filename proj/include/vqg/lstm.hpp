#ifndef VQG_LSTM_HPP
#define VQG_LSTM_HPP

#include <span>
#include <vector>

#include "vqg/matrix.hpp"
#include "vqg/tape.hpp"

namespace vqg {

// Single-layer LSTM cell parameters. Gate rows are packed in fixed order
// [input, forget, cell-candidate, output], H rows each.
struct LstmParams {
  Matrix input_weights;      // 4H x D_in
  Matrix recurrent_weights;  // 4H x H
  Matrix bias;               // 4H x 1

  std::size_t hidden_size() const { return recurrent_weights.cols(); }
  std::size_t input_size() const { return input_weights.cols(); }

  static LstmParams zeros(std::size_t input_size, std::size_t hidden_size);
  void validate() const;
};

struct LstmState {
  Vector hidden;  // H x 1
  Vector cell;    // H x 1

  static LstmState zero(std::size_t hidden_size) {
    return {Matrix(hidden_size, 1), Matrix(hidden_size, 1)};
  }
};

// One recurrence step:
//   i,f,o = sigmoid(gates), g = tanh(gates), c' = f.c + i.g, h' = o.tanh(c')
LstmState lstm_step(const Vector& input, const LstmState& state, const LstmParams& params);

// states[t] = lstm_step(inputs[t], states[t-1]); rejects an empty input list.
std::vector<LstmState> unroll(std::span<const Vector> inputs, const LstmState& initial,
                              const LstmParams& params);

// Learned word embeddings, one E-dimensional column per vocabulary entry.
struct EmbeddingTable {
  Matrix weights;  // E x V

  std::size_t embed_dim() const { return weights.rows(); }
  std::size_t vocab_size() const { return weights.cols(); }
};

// Column `token` of the table (identical to weights * onehot(token)).
Vector embed(int token, const EmbeddingTable& table);

// Tape-recorded counterparts used inside training expressions.

struct LstmParamVals {
  Val input_weights;
  Val recurrent_weights;
  Val bias;
};

struct LstmStateVals {
  Val hidden;
  Val cell;
};

LstmStateVals lstm_step(Tape& t, Val input, const LstmStateVals& state,
                        const LstmParamVals& params, std::size_t hidden_size);

Val embed(Tape& t, Val table_weights, int token);

}  // namespace vqg

#endif
