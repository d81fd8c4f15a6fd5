#ifndef VQG_DIMS_HPP
#define VQG_DIMS_HPP

#include <cstddef>
#include <stdexcept>

namespace vqg {

// Model dimensions: image feature width, word embedding width, LSTM hidden
// width, latent code width, vocabulary size.
struct ModelDims {
  std::size_t feature = 0;
  std::size_t embed = 0;
  std::size_t hidden = 0;
  std::size_t latent = 0;
  std::size_t vocab = 0;

  bool operator==(const ModelDims&) const = default;

  void validate() const {
    if (feature == 0 || embed == 0 || hidden == 0 || latent == 0 || vocab == 0) {
      throw std::invalid_argument("ModelDims: all dimensions must be >= 1");
    }
  }
};

}  // namespace vqg

#endif
