#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "csw/augmentation.hpp"
#include "csw/corpus.hpp"

namespace csw {

enum class Theory { EquivalenceConstraint, MatrixLanguageFrame };
const char* to_string(Theory t);

inline constexpr double kDefaultSpfReference = 0.22;
inline constexpr int kDefaultMaxCandidates = 1000;

// Mean switch-point fraction of a real code-switched reference corpus.
struct SpfReference {
  double mean_spf = kDefaultSpfReference;
};

struct GenerationSet {
  std::string sentence_id;
  Theory theory = Theory::EquivalenceConstraint;
  // Deterministic enumeration order; every candidate is complete and mixed.
  std::vector<Augmentation> candidates;
};

// Penn tags barred from standing alone as an embedded unit, plus auxiliary
// be/have/do forms under any VB* tag.
class ClosedClassSet {
public:
  static const ClosedClassSet& default_set();
  static ClosedClassSet load(const std::string& path);  // one tag per line

  explicit ClosedClassSet(std::set<std::string> tags);
  bool is_closed(const std::string& pos, const std::string& surface) const;
  const std::set<std::string>& tags() const { return tags_; }

private:
  std::set<std::string> tags_;
};

// Enumerates disjoint sets of order-preserving consistent segments and emits
// one candidate per set. With a tree present, segments are restricted to
// constituent yields.
GenerationSet generate_ec(const BiSentence& sentence,
                          int max_candidates = kDefaultMaxCandidates,
                          int max_len = kDefaultMaxSegmentLen);

// Embedded units are target subtrees whose yields form consistent segments
// and are not entirely closed-class; chosen units are pairwise disjoint,
// which also rules out nested subtree choices. Requires a tree (UsageError).
GenerationSet generate_mlf(const BiSentence& sentence,
                           const ClosedClassSet& closed = ClosedClassSet::default_set(),
                           int max_candidates = kDefaultMaxCandidates);

// min(k, |candidates|) draws without replacement, deterministic given seed.
std::vector<Augmentation> sample_random(const GenerationSet& gens, int k, uint64_t seed);

// Candidates ranked by |spf - reference|, ties kept in enumeration order.
std::vector<Augmentation> sample_spf(const GenerationSet& gens, int k,
                                     const SpfReference& reference);

// No source token dropped without a replacing segment; mixed source equals
// the splice of its replacements.
bool is_complete(const Augmentation& aug, const BiSentence& sentence);

// TSV dump: id, theory, candidate_index, spf, mixed_src.
void write_generations_tsv(const GenerationSet& gens, std::ostream& out);

}  // namespace csw
