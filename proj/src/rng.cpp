#include "csw/rng.hpp"

#include <numeric>

#include "csw/errors.hpp"

namespace csw {

uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {
uint64_t splitmix(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace

Rng::Rng(uint64_t seed) : state_(seed) {
  // warm up so small seeds diverge immediately
  splitmix(state_);
}

Rng::Rng(uint64_t seed, std::string_view sentence_key) : state_(seed) {
  state_ ^= fnv1a64(sentence_key);
  splitmix(state_);
}

uint64_t Rng::next() { return splitmix(state_); }

uint64_t Rng::below(uint64_t n) {
  if (n == 0) throw UsageError("Rng::below needs a positive bound");
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

std::vector<size_t> Rng::sample(size_t n, size_t k) {
  if (k > n) k = n;
  std::vector<size_t> pool(n);
  std::iota(pool.begin(), pool.end(), size_t{0});
  for (size_t i = 0; i < k; ++i) {
    size_t j = i + static_cast<size_t>(below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

}  // namespace csw
