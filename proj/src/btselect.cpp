#include "csw/btselect.hpp"

#include "csw/errors.hpp"
#include "csw/metrics.hpp"
#include "csw/textio.hpp"

namespace csw {

std::vector<NBestList> load_nbest_tsv(const std::string& path, bool negate_scores) {
  std::vector<NBestList> lists;
  std::vector<std::string> lines = read_lines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<std::string> cols = split_char(lines[i], '\t');
    if (cols.size() != 4)
      throw FormatError(path + " line " + std::to_string(i + 1) +
                        ": expected 'id<TAB>rank<TAB>score<TAB>tokens'");
    Hypothesis hyp;
    hyp.rank = static_cast<int>(parse_int(cols[1]));
    hyp.score = parse_double(cols[2]);
    if (negate_scores) hyp.score = -hyp.score;
    hyp.tokens = tokenize_line(cols[3]);

    if (lists.empty() || lists.back().sentence_id != cols[0]) {
      lists.push_back({cols[0], {}});
    }
    NBestList& list = lists.back();
    const int expected = list.hypotheses.empty() ? 1 : list.hypotheses.back().rank + 1;
    if (hyp.rank != expected)
      throw StructureError("sentence " + cols[0] + ": rank " +
                           std::to_string(hyp.rank) + " out of order, expected " +
                           std::to_string(expected));
    list.hypotheses.push_back(std::move(hyp));
  }
  return lists;
}

std::optional<Augmentation> select_csw(const NBestList& nbest, int k) {
  if (k < 1) throw UsageError("k must be positive");
  const size_t window = std::min<size_t>(static_cast<size_t>(k), nbest.hypotheses.size());
  const Hypothesis* best = nullptr;
  for (size_t i = 0; i < window; ++i) {
    const Hypothesis& hyp = nbest.hypotheses[i];
    if (!is_csw(hyp.tokens)) continue;
    if (!best || hyp.score > best->score) best = &hyp;  // ties keep the lower rank
  }
  if (!best) return std::nullopt;

  Augmentation aug;
  aug.sentence_id = nbest.sentence_id;
  aug.technique = Technique::BackTranslation;
  aug.mixed_src = best->tokens;
  MixCounts counts = mix_counts(aug.mixed_src);
  aug.cmi = cmi(counts);
  aug.spf = spf(counts);
  aug.pct_en = pct_en(counts);
  return aug;
}

SelectionStats selection_stats(std::span<const std::optional<Augmentation>> results,
                               size_t total) {
  SelectionStats stats;
  stats.total = total;
  for (const auto& r : results)
    if (r.has_value()) ++stats.selected;
  stats.fraction = total == 0 ? 0.0
                              : static_cast<double>(stats.selected) /
                                    static_cast<double>(total);
  return stats;
}

}  // namespace csw
