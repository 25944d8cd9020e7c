#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "csw/align.hpp"
#include "csw/langid.hpp"
#include "csw/tree.hpp"

namespace csw {

// One parallel sentence pair: Arabic-dominant source, English target,
// word alignment, optional constituency tree over the target side.
struct BiSentence {
  std::string id;
  std::vector<Token> src;
  std::vector<Token> tgt;
  AlignmentSet alignment;
  std::optional<ParseTree> tree;
};

struct Corpus {
  std::vector<BiSentence> sentences;
  std::string provenance;
  size_t size() const { return sentences.size(); }
};

// Alignment bounds and tree/target agreement; throws StructureError.
void check_sentence(const BiSentence& sentence);

// One sentence per line, tokens space-separated; optional Pharaoh alignment
// file and one-tree-per-line file (empty line = none). Ids are "L<line>".
Corpus load_parallel(const std::string& src_path, const std::string& tgt_path,
                     const std::string& align_path = "",
                     const std::string& trees_path = "");

// TSV columns: id, src, tgt, alignment, tree (last two may be empty).
Corpus load_corpus_tsv(const std::string& path);
void save_corpus_tsv(const Corpus& corpus, std::ostream& out);
void save_corpus_tsv(const Corpus& corpus, const std::string& path);

struct NormalizeOptions {
  bool lowercase = false;        // Basic Latin letters only
  bool alef = false;             // أ / إ / آ -> ا
  bool ya = false;               // ى -> ي
  bool strip_urls = false;       // drop URL tokens, remap links
  bool strip_emoticons = false;  // drop emoticon tokens, remap links
  bool split_numbers = false;    // split digit runs from letter runs
};

// Pure transformation; every flag is idempotent. Token-dropping and
// token-splitting flags remap alignment links; a target tree survives only
// if the target token count is unchanged.
Corpus normalize(const Corpus& corpus, const NormalizeOptions& options);

// Surface-level pieces, exposed for tests. Count-preserving rewrites only.
std::string normalize_surface(std::string_view surface, const NormalizeOptions& options);
bool is_url_token(std::string_view surface);
bool is_emoticon_token(std::string_view surface);
std::vector<std::string> split_number_runs(std::string_view surface);

// Originals followed by one target-target copy per original: src = tgt,
// identity links, id suffixed "-tt". Output size is exactly 2N.
Corpus append_target_target(const Corpus& corpus);

// Ids present in every collection; needs >= 2 collections (UsageError).
// Result is sorted and duplicate-free.
std::vector<std::string> intersect_augmented(
    const std::vector<std::vector<std::string>>& id_sets);

// Deterministic subset of round(fraction * N) sentences, original order.
Corpus sample_subset(const Corpus& corpus, double fraction, uint64_t seed);

}  // namespace csw
