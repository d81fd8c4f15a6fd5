#ifndef VQG_RNG_HPP
#define VQG_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace vqg {

std::uint64_t fnv1a64(std::string_view s);
std::uint64_t splitmix64(std::uint64_t x);

// Seeded RNG with portable draw algorithms layered over mt19937_64.
// uniform() and normal() consume a fixed number of engine outputs per call,
// so two streams with the same seed produce identical draw sequences
// regardless of what mixture of draws the callers request.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // [0, 1), 53-bit resolution
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Box-Muller (cosine branch; exactly two engine draws)
  double normal();

  // [0, n)
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

// Fisher-Yates shuffle driven by Rng (std::shuffle leaves the algorithm
// implementation-defined, which would break cross-run determinism contracts).
template <typename T>
void shuffle(std::vector<T>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[rng.index(i)]);
  }
}

}  // namespace vqg

#endif
