#include "vqg/encoder.hpp"

#include <stdexcept>

namespace vqg {

EncoderParams EncoderParams::zeros(const ModelDims& d) {
  EncoderParams p;
  p.image_proj = Matrix(d.hidden, d.feature);
  p.image_bias = Matrix(d.hidden, 1);
  p.word_table.weights = Matrix(d.embed, d.vocab);
  p.word_proj = Matrix(d.hidden, d.embed);
  p.word_bias = Matrix(d.hidden, 1);
  p.lstm = LstmParams::zeros(d.hidden, d.hidden);
  p.to_mu = Matrix(d.latent, d.hidden);
  p.mu_bias = Matrix(d.latent, 1);
  p.to_logvar = Matrix(d.latent, d.hidden);
  p.logvar_bias = Matrix(d.latent, 1);
  return p;
}

void EncoderParams::validate(const ModelDims& d) const {
  lstm.validate();
  const bool ok = image_proj.rows() == d.hidden && image_proj.cols() == d.feature &&
                  image_bias.rows() == d.hidden && word_table.embed_dim() == d.embed &&
                  word_table.vocab_size() == d.vocab && word_proj.rows() == d.hidden &&
                  word_proj.cols() == d.embed && word_bias.rows() == d.hidden &&
                  lstm.input_size() == d.hidden && lstm.hidden_size() == d.hidden &&
                  to_mu.rows() == d.latent && to_mu.cols() == d.hidden &&
                  mu_bias.rows() == d.latent && to_logvar.rows() == d.latent &&
                  to_logvar.cols() == d.hidden && logvar_bias.rows() == d.latent;
  if (!ok) {
    throw std::invalid_argument("EncoderParams: shapes inconsistent with declared dims");
  }
}

LatentGaussian encode(const Vector& features, const TokenSequence& tokens,
                      const EncoderParams& params) {
  if (tokens.indices.empty()) {
    throw std::invalid_argument("encode: empty token sequence");
  }
  if (features.cols() != 1 || features.rows() != params.image_proj.cols()) {
    throw std::invalid_argument("encode: feature vector " + features.shape_str() +
                                " does not match image projection " +
                                params.image_proj.shape_str());
  }
  tokens.validate(params.word_table.vocab_size());

  const std::size_t h = params.lstm.hidden_size();
  LstmState state = LstmState::zero(h);
  state = lstm_step(add(matmul(params.image_proj, features), params.image_bias), state,
                    params.lstm);
  for (int token : tokens.indices) {
    const Vector word = embed(token, params.word_table);
    state = lstm_step(add(matmul(params.word_proj, word), params.word_bias), state, params.lstm);
  }

  LatentGaussian g;
  g.mu = add(matmul(params.to_mu, state.hidden), params.mu_bias);
  g.log_var = clamp_elem(add(matmul(params.to_logvar, state.hidden), params.logvar_bias),
                         -kLogVarBound, kLogVarBound);
  return g;
}

LatentGaussianVals encode(Tape& t, const Vector& features, const TokenSequence& tokens,
                          const EncoderParamVals& params, const ModelDims& dims) {
  if (tokens.indices.empty()) {
    throw std::invalid_argument("encode: empty token sequence");
  }
  tokens.validate(dims.vocab);

  const Val feat = t.leaf(features);
  LstmStateVals state{t.leaf(Matrix(dims.hidden, 1)), t.leaf(Matrix(dims.hidden, 1))};
  state = lstm_step(t, t.add(t.matmul(params.image_proj, feat), params.image_bias), state,
                    params.lstm, dims.hidden);
  for (int token : tokens.indices) {
    const Val word = embed(t, params.word_table, token);
    state = lstm_step(t, t.add(t.matmul(params.word_proj, word), params.word_bias), state,
                      params.lstm, dims.hidden);
  }

  LatentGaussianVals g;
  g.mu = t.add(t.matmul(params.to_mu, state.hidden), params.mu_bias);
  g.log_var = t.clamp(t.add(t.matmul(params.to_logvar, state.hidden), params.logvar_bias),
                      -kLogVarBound, kLogVarBound);
  return g;
}

}  // namespace vqg
