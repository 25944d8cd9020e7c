#include "csw/theories.hpp"

#include <algorithm>
#include <ostream>

#include "csw/errors.hpp"
#include "csw/rng.hpp"
#include "csw/textio.hpp"

namespace csw {

const char* to_string(Theory t) {
  switch (t) {
    case Theory::EquivalenceConstraint: return "ec";
    case Theory::MatrixLanguageFrame: return "ml";
  }
  return "ec";
}

namespace {

const char* kDefaultClosedTags[] = {"DT", "PDT", "WDT", "CC",  "IN", "TO",
                                    "PRP$", "WP$", "POS", "MD", "EX", "RP"};

// Auxiliary / tense forms of be, have, do; closed-class under any VB* tag.
const char* kAuxForms[] = {"be", "is", "am", "are", "was", "were", "been",
                           "being", "'s", "'re", "'m", "have", "has", "had",
                           "having", "'ve", "'d", "do", "does", "did", "doing"};

}  // namespace

ClosedClassSet::ClosedClassSet(std::set<std::string> tags) : tags_(std::move(tags)) {}

const ClosedClassSet& ClosedClassSet::default_set() {
  static const ClosedClassSet instance{
      std::set<std::string>(std::begin(kDefaultClosedTags), std::end(kDefaultClosedTags))};
  return instance;
}

ClosedClassSet ClosedClassSet::load(const std::string& path) {
  std::set<std::string> tags;
  for (const std::string& line : read_lines(path)) {
    std::vector<std::string> parts = split_ws(line);
    if (parts.empty()) continue;
    tags.insert(parts[0]);
  }
  return ClosedClassSet(std::move(tags));
}

bool ClosedClassSet::is_closed(const std::string& pos, const std::string& surface) const {
  if (tags_.count(pos)) return true;
  if (pos.rfind("VB", 0) == 0) {
    std::string lower = ascii_lower(surface);
    for (const char* aux : kAuxForms)
      if (lower == aux) return true;
  }
  return false;
}

namespace {

bool disjoint_from_all(const SegmentPair& seg, const std::vector<SegmentPair>& taken) {
  for (const SegmentPair& t : taken)
    if (seg.src.overlaps(t.src) || seg.tgt.overlaps(t.tgt)) return false;
  return true;
}

// Preorder enumeration of disjoint unit subsets; subsets appear in
// lexicographic order of their unit indices, so truncation is reproducible.
void enumerate_subsets(const BiSentence& sentence, Technique technique,
                       const std::vector<SegmentPair>& units, int max_candidates,
                       std::vector<Augmentation>& out) {
  std::vector<SegmentPair> chosen;
  auto emit = [&]() {
    std::vector<ReplacedSpan> replacements;
    replacements.reserve(chosen.size());
    for (const SegmentPair& seg : chosen)
      replacements.push_back({seg.src, seg.tgt, ""});
    auto aug = make_augmentation(sentence.id, sentence.src, sentence.tgt, technique,
                                 std::move(replacements));
    if (aug) out.push_back(std::move(*aug));
  };
  auto dfs = [&](auto&& self, size_t start) -> void {
    for (size_t i = start; i < units.size(); ++i) {
      if (static_cast<int>(out.size()) >= max_candidates) return;
      if (!disjoint_from_all(units[i], chosen)) continue;
      chosen.push_back(units[i]);
      emit();
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
}

}  // namespace

GenerationSet generate_ec(const BiSentence& sentence, int max_candidates, int max_len) {
  if (max_candidates < 1) throw UsageError("max_candidates must be positive");
  GenerationSet gens;
  gens.sentence_id = sentence.id;
  gens.theory = Theory::EquivalenceConstraint;

  std::vector<SegmentPair> segments = extract_segments(sentence, max_len);
  std::vector<SegmentPair> units;
  if (sentence.tree) {
    std::vector<Span> yields;
    for (const ParseTree::NodeSpan& ns : sentence.tree->node_spans())
      yields.push_back(ns.span);
    std::sort(yields.begin(), yields.end());
    for (const SegmentPair& seg : segments) {
      if (!std::binary_search(yields.begin(), yields.end(), seg.tgt)) continue;
      if (order_preserving(sentence, seg)) units.push_back(seg);
    }
  } else {
    for (const SegmentPair& seg : segments)
      if (order_preserving(sentence, seg)) units.push_back(seg);
  }
  enumerate_subsets(sentence, Technique::EcRandom, units, max_candidates,
                    gens.candidates);
  return gens;
}

GenerationSet generate_mlf(const BiSentence& sentence, const ClosedClassSet& closed,
                           int max_candidates) {
  if (max_candidates < 1) throw UsageError("max_candidates must be positive");
  if (!sentence.tree)
    throw UsageError("sentence " + sentence.id + " has no target parse tree");

  GenerationSet gens;
  gens.sentence_id = sentence.id;
  gens.theory = Theory::MatrixLanguageFrame;

  const std::vector<std::string> tags = sentence.tree->leaf_tags();
  const std::vector<Token>& tgt = sentence.tgt;

  std::vector<SegmentPair> units;
  std::vector<Span> seen_yields;  // unary chains share a yield; first node wins
  for (const ParseTree::NodeSpan& ns : sentence.tree->node_spans()) {
    const Span yield = ns.span;
    if (std::find(seen_yields.begin(), seen_yields.end(), yield) != seen_yields.end())
      continue;
    seen_yields.push_back(yield);

    bool all_closed = true;
    for (int j = yield.lo; j < yield.hi; ++j) {
      if (!closed.is_closed(tags[j], tgt[j].surface)) {
        all_closed = false;
        break;
      }
    }
    if (all_closed) continue;

    // Tightest source span covering the links into this yield.
    int s_min = static_cast<int>(sentence.src.size());
    int s_max = -1;
    for (const Link& l : sentence.alignment.links()) {
      if (!yield.contains(l.tgt)) continue;
      s_min = std::min(s_min, l.src);
      s_max = std::max(s_max, l.src);
    }
    if (s_max < 0) continue;  // unaligned constituent
    SegmentPair unit{Span{s_min, s_max + 1}, yield};
    if (!is_consistent(sentence.alignment, unit)) continue;
    units.push_back(unit);
  }
  std::sort(units.begin(), units.end());
  enumerate_subsets(sentence, Technique::MlRandom, units, max_candidates,
                    gens.candidates);
  return gens;
}

std::vector<Augmentation> sample_random(const GenerationSet& gens, int k, uint64_t seed) {
  if (k < 1) throw UsageError("k must be positive");
  Rng rng(seed, gens.sentence_id);
  std::vector<size_t> picks =
      rng.sample(gens.candidates.size(),
                 std::min<size_t>(static_cast<size_t>(k), gens.candidates.size()));
  std::vector<Augmentation> out;
  out.reserve(picks.size());
  Technique technique = gens.theory == Theory::EquivalenceConstraint
                            ? Technique::EcRandom
                            : Technique::MlRandom;
  for (size_t p : picks) {
    Augmentation a = gens.candidates[p];
    a.technique = technique;
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<Augmentation> sample_spf(const GenerationSet& gens, int k,
                                     const SpfReference& reference) {
  if (k < 1) throw UsageError("k must be positive");
  if (reference.mean_spf < 0.0 || reference.mean_spf > 1.0)
    throw UsageError("reference SPF must be in [0, 1]");
  std::vector<size_t> order(gens.candidates.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    double da = std::abs(gens.candidates[a].spf - reference.mean_spf);
    double db = std::abs(gens.candidates[b].spf - reference.mean_spf);
    return da < db;  // ties keep enumeration order
  });
  size_t n = std::min<size_t>(static_cast<size_t>(k), order.size());
  Technique technique = gens.theory == Theory::EquivalenceConstraint
                            ? Technique::EcSpf
                            : Technique::MlSpf;
  std::vector<Augmentation> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    Augmentation a = gens.candidates[order[i]];
    a.technique = technique;
    out.push_back(std::move(a));
  }
  return out;
}

bool is_complete(const Augmentation& aug, const BiSentence& sentence) {
  std::vector<ReplacedSpan> spans = aug.replaced_spans;
  std::sort(spans.begin(), spans.end(), [](const ReplacedSpan& a, const ReplacedSpan& b) {
    return a.src.lo < b.src.lo;
  });
  std::vector<std::string> expected;
  int pos = 0;
  for (const ReplacedSpan& r : spans) {
    if (r.src.lo < pos || r.src.hi > static_cast<int>(sentence.src.size())) return false;
    for (int i = pos; i < r.src.lo; ++i) expected.push_back(sentence.src[i].surface);
    if (r.tgt) {
      if (r.tgt->hi > static_cast<int>(sentence.tgt.size())) return false;
      for (int j = r.tgt->lo; j < r.tgt->hi; ++j)
        expected.push_back(sentence.tgt[j].surface);
    } else {
      for (const std::string& piece : split_ws(r.gloss)) expected.push_back(piece);
    }
    pos = r.src.hi;
  }
  for (int i = pos; i < static_cast<int>(sentence.src.size()); ++i)
    expected.push_back(sentence.src[i].surface);

  if (expected.size() != aug.mixed_src.size()) return false;
  for (size_t i = 0; i < expected.size(); ++i)
    if (expected[i] != aug.mixed_src[i].surface) return false;
  return true;
}

void write_generations_tsv(const GenerationSet& gens, std::ostream& out) {
  for (size_t i = 0; i < gens.candidates.size(); ++i) {
    const Augmentation& a = gens.candidates[i];
    out << gens.sentence_id << '\t' << to_string(gens.theory) << '\t' << i << '\t'
        << format_double(a.spf) << '\t' << detokenize(a.mixed_src) << '\n';
  }
}

}  // namespace csw
