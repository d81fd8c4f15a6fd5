#include "vqg/decoder.hpp"

#include <stdexcept>

namespace vqg {

DecoderParams DecoderParams::zeros(const ModelDims& d) {
  DecoderParams p;
  p.image_proj = Matrix(d.hidden, d.feature);
  p.image_bias = Matrix(d.hidden, 1);
  p.latent_proj = Matrix(d.hidden, d.latent);
  p.latent_bias = Matrix(d.hidden, 1);
  p.word_table.weights = Matrix(d.embed, d.vocab);
  p.word_proj = Matrix(d.hidden, d.embed);
  p.word_bias = Matrix(d.hidden, 1);
  p.lstm = LstmParams::zeros(d.hidden, d.hidden);
  p.to_logits = Matrix(d.vocab, d.hidden);
  p.logits_bias = Matrix(d.vocab, 1);
  return p;
}

void DecoderParams::validate(const ModelDims& d) const {
  lstm.validate();
  const bool ok = image_proj.rows() == d.hidden && image_proj.cols() == d.feature &&
                  image_bias.rows() == d.hidden && latent_proj.rows() == d.hidden &&
                  latent_proj.cols() == d.latent && latent_bias.rows() == d.hidden &&
                  word_table.embed_dim() == d.embed && word_table.vocab_size() == d.vocab &&
                  word_proj.rows() == d.hidden && word_proj.cols() == d.embed &&
                  word_bias.rows() == d.hidden && lstm.input_size() == d.hidden &&
                  lstm.hidden_size() == d.hidden && to_logits.rows() == d.vocab &&
                  to_logits.cols() == d.hidden && logits_bias.rows() == d.vocab;
  if (!ok) {
    throw std::invalid_argument("DecoderParams: shapes inconsistent with declared dims");
  }
}

namespace {

void check_conditioning(const Vector& features, const Vector& z, const DecoderParams& p) {
  if (features.cols() != 1 || features.rows() != p.image_proj.cols()) {
    throw std::invalid_argument("decoder: feature vector " + features.shape_str() +
                                " does not match image projection " + p.image_proj.shape_str());
  }
  if (z.cols() != 1 || z.rows() != p.latent_proj.cols()) {
    throw std::invalid_argument("decoder: latent sample " + z.shape_str() +
                                " does not match latent projection " +
                                p.latent_proj.shape_str());
  }
}

}  // namespace

std::vector<Vector> decode_teacher_forced(const Vector& features, const Vector& z,
                                          const TokenSequence& tokens,
                                          const DecoderParams& params) {
  check_conditioning(features, z, params);
  tokens.validate(params.word_table.vocab_size());

  const std::size_t h = params.lstm.hidden_size();
  LstmState state = LstmState::zero(h);
  state = lstm_step(add(matmul(params.image_proj, features), params.image_bias), state,
                    params.lstm);
  state = lstm_step(add(matmul(params.latent_proj, z), params.latent_bias), state, params.lstm);

  // feed every token except the final one; each step predicts its successor
  std::vector<Vector> logits;
  logits.reserve(tokens.length() - 1);
  for (std::size_t i = 0; i + 1 < tokens.length(); ++i) {
    const Vector word = embed(tokens.indices[i], params.word_table);
    state = lstm_step(add(matmul(params.word_proj, word), params.word_bias), state, params.lstm);
    logits.push_back(add(matmul(params.to_logits, state.hidden), params.logits_bias));
  }
  return logits;
}

TokenSequence decode_greedy(const Vector& features, const Vector& z,
                            const DecoderParams& params, std::size_t max_len) {
  check_conditioning(features, z, params);
  if (max_len < 2) {
    throw std::invalid_argument("decode_greedy: max_len must be >= 2");
  }

  const std::size_t h = params.lstm.hidden_size();
  LstmState state = LstmState::zero(h);
  state = lstm_step(add(matmul(params.image_proj, features), params.image_bias), state,
                    params.lstm);
  state = lstm_step(add(matmul(params.latent_proj, z), params.latent_bias), state, params.lstm);

  TokenSequence out;
  out.indices.push_back(tok::kStart);
  int current = tok::kStart;
  while (out.indices.size() < max_len) {
    const Vector word = embed(current, params.word_table);
    state = lstm_step(add(matmul(params.word_proj, word), params.word_bias), state, params.lstm);
    const Vector logits = add(matmul(params.to_logits, state.hidden), params.logits_bias);
    current = static_cast<int>(argmax(logits));
    out.indices.push_back(current);
    if (current == tok::kEnd) break;
  }
  out.truncated = out.indices.back() != tok::kEnd;
  return out;
}

std::vector<Val> decode_teacher_forced(Tape& t, const Vector& features, Val z,
                                       const TokenSequence& tokens,
                                       const DecoderParamVals& params, const ModelDims& dims) {
  tokens.validate(dims.vocab);

  const Val feat = t.leaf(features);
  LstmStateVals state{t.leaf(Matrix(dims.hidden, 1)), t.leaf(Matrix(dims.hidden, 1))};
  state = lstm_step(t, t.add(t.matmul(params.image_proj, feat), params.image_bias), state,
                    params.lstm, dims.hidden);
  state = lstm_step(t, t.add(t.matmul(params.latent_proj, z), params.latent_bias), state,
                    params.lstm, dims.hidden);

  std::vector<Val> logits;
  logits.reserve(tokens.length() - 1);
  for (std::size_t i = 0; i + 1 < tokens.length(); ++i) {
    const Val word = embed(t, params.word_table, tokens.indices[i]);
    state = lstm_step(t, t.add(t.matmul(params.word_proj, word), params.word_bias), state,
                      params.lstm, dims.hidden);
    logits.push_back(t.add(t.matmul(params.to_logits, state.hidden), params.logits_bias));
  }
  return logits;
}

}  // namespace vqg
