#include "vqg/lstm.hpp"

#include <stdexcept>
#include <string>

namespace vqg {

LstmParams LstmParams::zeros(std::size_t input_size, std::size_t hidden_size) {
  return {Matrix(4 * hidden_size, input_size), Matrix(4 * hidden_size, hidden_size),
          Matrix(4 * hidden_size, 1)};
}

void LstmParams::validate() const {
  const std::size_t h = hidden_size();
  if (h == 0 || input_weights.rows() != 4 * h || recurrent_weights.rows() != 4 * h ||
      bias.rows() != 4 * h || bias.cols() != 1) {
    throw std::invalid_argument("LstmParams: inconsistent shapes (input " +
                                input_weights.shape_str() + ", recurrent " +
                                recurrent_weights.shape_str() + ", bias " + bias.shape_str() +
                                ")");
  }
}

LstmState lstm_step(const Vector& input, const LstmState& state, const LstmParams& params) {
  params.validate();
  const std::size_t h = params.hidden_size();
  if (input.rows() != params.input_size() || input.cols() != 1) {
    throw std::invalid_argument("lstm_step: input " + input.shape_str() +
                                " does not match cell input size " +
                                std::to_string(params.input_size()));
  }
  if (state.hidden.rows() != h || state.cell.rows() != h) {
    throw std::invalid_argument("lstm_step: state size does not match hidden size " +
                                std::to_string(h));
  }

  const Matrix gates =
      add(add(matmul(params.input_weights, input), matmul(params.recurrent_weights, state.hidden)),
          params.bias);
  const Matrix in_gate = sigmoid(rows_slice(gates, 0, h));
  const Matrix forget_gate = sigmoid(rows_slice(gates, h, h));
  const Matrix candidate = tanh_elem(rows_slice(gates, 2 * h, h));
  const Matrix out_gate = sigmoid(rows_slice(gates, 3 * h, h));

  LstmState next;
  next.cell = add(hadamard(forget_gate, state.cell), hadamard(in_gate, candidate));
  next.hidden = hadamard(out_gate, tanh_elem(next.cell));
  return next;
}

std::vector<LstmState> unroll(std::span<const Vector> inputs, const LstmState& initial,
                              const LstmParams& params) {
  if (inputs.empty()) {
    throw std::invalid_argument("unroll: empty input sequence");
  }
  std::vector<LstmState> states;
  states.reserve(inputs.size());
  const LstmState* prev = &initial;
  for (const Vector& input : inputs) {
    states.push_back(lstm_step(input, *prev, params));
    prev = &states.back();
  }
  return states;
}

Vector embed(int token, const EmbeddingTable& table) {
  if (token < 0 || static_cast<std::size_t>(token) >= table.vocab_size()) {
    throw std::out_of_range("embed: token " + std::to_string(token) +
                            " out of range for vocabulary of " +
                            std::to_string(table.vocab_size()));
  }
  return column_of(table.weights, static_cast<std::size_t>(token));
}

LstmStateVals lstm_step(Tape& t, Val input, const LstmStateVals& state,
                        const LstmParamVals& params, std::size_t hidden_size) {
  const std::size_t h = hidden_size;
  const Val gates = t.add(
      t.add(t.matmul(params.input_weights, input), t.matmul(params.recurrent_weights, state.hidden)),
      params.bias);
  const Val in_gate = t.sigmoid(t.rows(gates, 0, h));
  const Val forget_gate = t.sigmoid(t.rows(gates, h, h));
  const Val candidate = t.tanh(t.rows(gates, 2 * h, h));
  const Val out_gate = t.sigmoid(t.rows(gates, 3 * h, h));

  LstmStateVals next;
  next.cell = t.add(t.mul(forget_gate, state.cell), t.mul(in_gate, candidate));
  next.hidden = t.mul(out_gate, t.tanh(next.cell));
  return next;
}

Val embed(Tape& t, Val table_weights, int token) {
  if (token < 0 || static_cast<std::size_t>(token) >= t.value(table_weights).cols()) {
    throw std::out_of_range("embed: token " + std::to_string(token) +
                            " out of range for vocabulary of " +
                            std::to_string(t.value(table_weights).cols()));
  }
  return t.column(table_weights, static_cast<std::size_t>(token));
}

}  // namespace vqg
