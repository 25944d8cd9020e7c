#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace csw {

uint64_t fnv1a64(std::string_view s);

// splitmix64 generator. Self-contained so seeded runs produce identical
// streams on every platform and standard library.
class Rng {
public:
  explicit Rng(uint64_t seed);
  // Per-sentence stream: mixes a sentence key into the seed so work can be
  // distributed across threads without changing any draw.
  Rng(uint64_t seed, std::string_view sentence_key);

  uint64_t next();
  // Unbiased draw in [0, n); n must be positive.
  uint64_t below(uint64_t n);
  // k distinct values from [0, n), in draw order.
  std::vector<size_t> sample(size_t n, size_t k);

private:
  uint64_t state_;
};

}  // namespace csw
