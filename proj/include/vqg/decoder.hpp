#ifndef VQG_DECODER_HPP
#define VQG_DECODER_HPP

#include <vector>

#include "vqg/dims.hpp"
#include "vqg/lstm.hpp"
#include "vqg/tokens.hpp"

namespace vqg {

// Generative decoder: (image feature, latent sample) -> question.
// Owns its own word embedding table, separate from the encoder's.
struct DecoderParams {
  Matrix image_proj;          // H x F
  Vector image_bias;          // H x 1
  Matrix latent_proj;         // H x M
  Vector latent_bias;         // H x 1
  EmbeddingTable word_table;  // E x V
  Matrix word_proj;           // H x E
  Vector word_bias;           // H x 1
  LstmParams lstm;            // operates on H-dimensional projected inputs
  Matrix to_logits;           // V x H
  Vector logits_bias;         // V x 1

  static DecoderParams zeros(const ModelDims& dims);
  void validate(const ModelDims& dims) const;
};

// Teacher-forced pass. LSTM inputs are
//   [proj(features), proj(z), proj(embed(START)), proj(embed(x_1)), ...]
// and the logits row emitted at each word step predicts the next token, so
// the result holds exactly tokens.length() - 1 rows of V logits.
std::vector<Vector> decode_teacher_forced(const Vector& features, const Vector& z,
                                          const TokenSequence& tokens,
                                          const DecoderParams& params);

// Greedy inference: feeds the argmax of each step's distribution back as the
// next input. Stops at END or when the sequence reaches max_len (then the
// result is flagged truncated). Ties break toward the lowest index.
TokenSequence decode_greedy(const Vector& features, const Vector& z,
                            const DecoderParams& params, std::size_t max_len);

// Tape counterpart of the teacher-forced pass.

struct DecoderParamVals {
  Val image_proj, image_bias;
  Val latent_proj, latent_bias;
  Val word_table;
  Val word_proj, word_bias;
  LstmParamVals lstm;
  Val to_logits, logits_bias;
};

std::vector<Val> decode_teacher_forced(Tape& t, const Vector& features, Val z,
                                       const TokenSequence& tokens,
                                       const DecoderParamVals& params, const ModelDims& dims);

}  // namespace vqg

#endif
