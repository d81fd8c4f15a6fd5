#include "vqg/tokens.hpp"

#include <stdexcept>
#include <string>

namespace vqg {

void TokenSequence::validate(std::size_t vocab_size) const {
  if (indices.size() < 2) {
    throw std::invalid_argument("TokenSequence: length " + std::to_string(indices.size()) +
                                " is below the minimum of 2");
  }
  if (indices.front() != tok::kStart) {
    throw std::invalid_argument("TokenSequence: first index must be START");
  }
  if (!truncated && indices.back() != tok::kEnd) {
    throw std::invalid_argument("TokenSequence: last index must be END");
  }
  for (int idx : indices) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= vocab_size) {
      throw std::out_of_range("TokenSequence: index " + std::to_string(idx) +
                              " out of range for vocabulary of " + std::to_string(vocab_size));
    }
  }
}

}  // namespace vqg
