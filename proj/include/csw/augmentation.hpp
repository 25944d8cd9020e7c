#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csw/align.hpp"
#include "csw/langid.hpp"

namespace csw {

enum class Technique {
  LexDict,
  LexRandWord,
  LexRandSeg,
  LexPred,
  EcRandom,
  EcSpf,
  MlRandom,
  MlSpf,
  BackTranslation,
};

const char* to_string(Technique t);
Technique technique_from_string(std::string_view s);  // throws FormatError

// One source replacement: an aligned target span spliced in, or a
// dictionary gloss when no alignment backs the substitution.
struct ReplacedSpan {
  Span src;
  std::optional<Span> tgt;
  std::string gloss;  // non-empty iff tgt is absent
};

// A mixed-language source sentence with provenance and per-sentence metrics.
// The target side is carried unchanged from the input pair.
struct Augmentation {
  std::string sentence_id;
  std::vector<Token> mixed_src;
  std::vector<Token> tgt;
  Technique technique = Technique::LexDict;
  std::vector<ReplacedSpan> replaced_spans;
  double cmi = 0;
  double spf = 0;
  double pct_en = 0;
};

// Splices each replacement into `src`, recomputes metrics, and enforces the
// mixed-language invariant: the result must contain at least one Arabic and
// one English token, otherwise nothing is returned. Replacements must be
// in-bounds and non-overlapping (UsageError).
std::optional<Augmentation> make_augmentation(std::string sentence_id,
                                              std::span<const Token> src,
                                              std::span<const Token> tgt,
                                              Technique technique,
                                              std::vector<ReplacedSpan> replacements);

// TSV columns: id, technique, mixed_src, tgt, cmi, spf, pct_en, spans.
// Spans column: ';'-joined items, "sLo-sHi:tLo-tHi" or "sLo-sHi:g:<gloss>".
void write_augmentations_tsv(std::span<const Augmentation> augs, std::ostream& out);
std::vector<Augmentation> read_augmentations_tsv(const std::string& path);

std::string format_replaced_spans(std::span<const ReplacedSpan> spans);
std::vector<ReplacedSpan> parse_replaced_spans(std::string_view field);

}  // namespace csw
