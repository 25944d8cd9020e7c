#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csw/augmentation.hpp"

namespace csw {

struct Hypothesis {
  int rank = 0;
  double score = 0;  // higher = more confident
  std::vector<Token> tokens;
};

// Decoder hypotheses for one sentence; ranks unique and ascending from 1.
struct NBestList {
  std::string sentence_id;
  std::vector<Hypothesis> hypotheses;
};

inline constexpr int kDefaultBtTopK = 19;

// TSV lines "sentence_id<TAB>rank<TAB>score<TAB>hypothesis tokens".
// negate_scores flips sign on ingestion for cost-style score conventions.
std::vector<NBestList> load_nbest_tsv(const std::string& path,
                                      bool negate_scores = false);

// Highest-score mixed-language hypothesis among the first min(k, n); ties on
// score go to the lower rank. Nothing if no hypothesis in the window mixes.
std::optional<Augmentation> select_csw(const NBestList& nbest, int k);

struct SelectionStats {
  size_t selected = 0;
  size_t total = 0;
  double fraction = 0;
};

SelectionStats selection_stats(std::span<const std::optional<Augmentation>> results,
                               size_t total);

}  // namespace csw
