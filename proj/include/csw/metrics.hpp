#pragma once

#include <span>

#include "csw/langid.hpp"

namespace csw {

struct Augmentation;

// Per-sentence switch accounting over language-dependent tokens. Other
// tokens are transparent: a switch is counted between the nearest
// Arabic/English neighbours.
struct MixCounts {
  int dependent = 0;  // Arabic + English tokens
  int arabic = 0;
  int english = 0;
  int dominant = 0;   // max(arabic, english)
  int switches = 0;
};

MixCounts mix_counts(std::span<const Token> tokens);

// All three return 0 for sentences without language-dependent tokens.
double cmi(const MixCounts& c);
double spf(const MixCounts& c);
double pct_en(const MixCounts& c);
double cmi(std::span<const Token> tokens);
double spf(std::span<const Token> tokens);
double pct_en(std::span<const Token> tokens);

struct CswStats {
  size_t size = 0;
  double cmi_mean = 0;
  double spf_mean = 0;
  double spf_std = 0;  // sample (n-1) standard deviation
  double pct_en_mean = 0;
};

// Sentence-level means; empty input gives size 0 and zeroed statistics.
CswStats corpus_stats(std::span<const Augmentation> augs);

}  // namespace csw
