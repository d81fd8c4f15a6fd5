#ifndef VQG_TOKENS_HPP
#define VQG_TOKENS_HPP

#include <cstddef>
#include <vector>

namespace vqg {

// Reserved vocabulary indices.
namespace tok {
inline constexpr int kPad = 0;
inline constexpr int kStart = 1;
inline constexpr int kEnd = 2;
inline constexpr int kUnk = 3;
inline constexpr std::size_t kReservedCount = 4;
}  // namespace tok

// A question as vocabulary indices: START first, END last unless the
// sequence was cut off at the length limit (then truncated is set).
struct TokenSequence {
  std::vector<int> indices;
  bool truncated = false;

  std::size_t length() const { return indices.size(); }
  bool operator==(const TokenSequence&) const = default;

  // Checks the sentinel framing and that every index is in [0, vocab_size).
  void validate(std::size_t vocab_size) const;
};

}  // namespace vqg

#endif
