#ifndef VQG_ENCODER_HPP
#define VQG_ENCODER_HPP

#include <span>

#include "vqg/dims.hpp"
#include "vqg/lstm.hpp"
#include "vqg/tokens.hpp"

namespace vqg {

// log-variance entries are clamped to this band; wide enough to stay
// inactive in healthy training, tight enough to keep exp(log_var) sane.
inline constexpr double kLogVarBound = 10.0;

// Diagonal Gaussian over the latent space.
struct LatentGaussian {
  Vector mu;       // M x 1
  Vector log_var;  // M x 1, entries in [-kLogVarBound, kLogVarBound]
};

// Variational encoder: (image feature, question) -> latent Gaussian.
struct EncoderParams {
  Matrix image_proj;        // H x F
  Vector image_bias;        // H x 1
  EmbeddingTable word_table;  // E x V
  Matrix word_proj;         // H x E
  Vector word_bias;         // H x 1
  LstmParams lstm;          // operates on H-dimensional projected inputs
  Matrix to_mu;             // M x H
  Vector mu_bias;           // M x 1
  Matrix to_logvar;         // M x H
  Vector logvar_bias;       // M x 1

  static EncoderParams zeros(const ModelDims& dims);
  void validate(const ModelDims& dims) const;
};

// Unrolls the LSTM over [proj(features), proj(embed(x_1)), ..., proj(embed(x_T))]
// and maps the final hidden state to (mu, log_var).
LatentGaussian encode(const Vector& features, const TokenSequence& tokens,
                      const EncoderParams& params);

// Tape counterpart.

struct EncoderParamVals {
  Val image_proj, image_bias;
  Val word_table;
  Val word_proj, word_bias;
  LstmParamVals lstm;
  Val to_mu, mu_bias;
  Val to_logvar, logvar_bias;
};

struct LatentGaussianVals {
  Val mu;
  Val log_var;
};

LatentGaussianVals encode(Tape& t, const Vector& features, const TokenSequence& tokens,
                          const EncoderParamVals& params, const ModelDims& dims);

}  // namespace vqg

#endif
