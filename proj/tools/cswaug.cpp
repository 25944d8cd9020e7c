// cswaug — synthesize code-switched Arabic-English parallel data from
// monolingual parallel corpora, and compute mixing metrics and
// annotation-agreement statistics over the results.

#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "csw/agreement.hpp"
#include "csw/btselect.hpp"
#include "csw/corpus.hpp"
#include "csw/errors.hpp"
#include "csw/lexrep.hpp"
#include "csw/metrics.hpp"
#include "csw/tagger.hpp"
#include "csw/textio.hpp"
#include "csw/theories.hpp"
#include "csw/validate.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CorpusInputs {
  std::string tsv;
  std::string src;
  std::string tgt;
  std::string align;
  std::string trees;
};

void add_corpus_options(CLI::App* cmd, CorpusInputs& in) {
  auto* tsv = cmd->add_option("--in", in.tsv, "corpus TSV (id, src, tgt, alignment, tree)");
  auto* src = cmd->add_option("--src", in.src, "source text, one tokenized sentence per line");
  cmd->add_option("--tgt", in.tgt, "target text, one tokenized sentence per line");
  cmd->add_option("--align", in.align, "Pharaoh alignment file");
  cmd->add_option("--trees", in.trees, "bracketed target trees, one per line");
  tsv->excludes(src);
}

csw::Corpus load_corpus(const CorpusInputs& in) {
  if (!in.tsv.empty()) return csw::load_corpus_tsv(in.tsv);
  if (in.src.empty() || in.tgt.empty())
    throw csw::UsageError("provide either --in or both --src and --tgt");
  return csw::load_parallel(in.src, in.tgt, in.align, in.trees);
}

// stdout carries data when --out is omitted; diagnostics go to stderr.
class OutputFile {
public:
  explicit OutputFile(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw csw::IoError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    stream().flush();
    if (file_.is_open() && !file_) throw csw::IoError("write failure on output file");
  }

private:
  std::ofstream file_;
};

// Applies fn to every sentence index; results land in caller-owned slots so
// output order matches input order regardless of scheduling.
template <typename Fn>
void for_each_sentence(size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    while (!failed) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  const int n = std::min<int>(jobs, static_cast<int>(count));
  threads.reserve(n);
  for (int t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

struct AugmentArgs {
  CorpusInputs in;
  std::string out;
  std::string technique;
  std::string sampling = "random";
  int k = 1;
  double percent = csw::kDefaultReplacementRate;
  double spf_ref = csw::kDefaultSpfReference;
  uint64_t seed = 0;
  int max_candidates = csw::kDefaultMaxCandidates;
  int max_len = csw::kDefaultMaxSegmentLen;
  int jobs = 1;
  bool validate = false;
  std::string lexicon_path;
  std::string labels_path;
  std::string closed_class_path;
  std::string dump_candidates;
};

int run_augment(const AugmentArgs& args) {
  csw::Corpus corpus = load_corpus(args.in);

  std::optional<csw::GlossLexicon> lexicon;
  if (args.technique == "dict") {
    if (args.lexicon_path.empty())
      throw csw::UsageError("--technique dict requires --lexicon");
    lexicon = csw::GlossLexicon::load_tsv(args.lexicon_path);
  }
  std::optional<csw::PredictionLabels> labels;
  if (args.technique == "pred") {
    if (args.labels_path.empty())
      throw csw::UsageError("--technique pred requires --labels");
    labels = csw::PredictionLabels::load(args.labels_path);
  }
  csw::ClosedClassSet closed = args.closed_class_path.empty()
                                   ? csw::ClosedClassSet::default_set()
                                   : csw::ClosedClassSet::load(args.closed_class_path);
  const bool theory_based = args.technique == "ec" || args.technique == "ml";
  if (!args.dump_candidates.empty() && !theory_based)
    throw csw::UsageError("--dump-candidates applies to --technique ec or ml");

  std::vector<std::vector<csw::Augmentation>> rows(corpus.size());
  std::vector<csw::GenerationSet> generations;
  if (theory_based && !args.dump_candidates.empty()) generations.resize(corpus.size());
  std::atomic<size_t> skipped_no_tree{0};

  for_each_sentence(corpus.size(), args.jobs, [&](size_t i) {
    const csw::BiSentence& sentence = corpus.sentences[i];
    if (args.technique == "dict") {
      if (auto aug = csw::lex_dict(sentence, *lexicon, args.percent, args.seed))
        rows[i].push_back(std::move(*aug));
    } else if (args.technique == "rand-word") {
      if (auto aug = csw::lex_rand_word(sentence, args.percent, args.seed))
        rows[i].push_back(std::move(*aug));
    } else if (args.technique == "rand-seg") {
      if (auto aug = csw::lex_rand_segment(sentence, args.percent, args.seed, args.max_len))
        rows[i].push_back(std::move(*aug));
    } else if (args.technique == "pred") {
      if (auto aug = csw::lex_pred(sentence, *labels, args.max_len))
        rows[i].push_back(std::move(*aug));
    } else {
      if (args.technique == "ml" && !sentence.tree) {
        ++skipped_no_tree;
        return;
      }
      csw::GenerationSet gens =
          args.technique == "ec"
              ? csw::generate_ec(sentence, args.max_candidates, args.max_len)
              : csw::generate_mlf(sentence, closed, args.max_candidates);
      if (args.sampling == "spf")
        rows[i] = csw::sample_spf(gens, args.k, csw::SpfReference{args.spf_ref});
      else
        rows[i] = csw::sample_random(gens, args.k, args.seed);
      if (!generations.empty()) generations[i] = std::move(gens);
    }
  });

  if (args.validate) {
    for (size_t i = 0; i < rows.size(); ++i) {
      for (const csw::Augmentation& aug : rows[i]) {
        std::vector<std::string> violations =
            csw::validate_augmentation(aug, corpus.sentences[i], closed);
        if (!violations.empty())
          throw csw::StructureError("sentence " + aug.sentence_id +
                                    " failed validation: " + violations.front());
      }
    }
  }

  if (!args.dump_candidates.empty()) {
    std::ofstream dump(args.dump_candidates, std::ios::binary);
    if (!dump) throw csw::IoError("cannot open " + args.dump_candidates + " for writing");
    for (const csw::GenerationSet& gens : generations)
      csw::write_generations_tsv(gens, dump);
  }

  OutputFile out(args.out);
  size_t augmented = 0;
  for (const auto& sentence_rows : rows) {
    if (!sentence_rows.empty()) ++augmented;
    csw::write_augmentations_tsv(sentence_rows, out.stream());
  }
  out.finish();

  json note{{"sentences", corpus.size()}, {"augmented", augmented}};
  if (skipped_no_tree > 0) note["skipped_no_tree"] = skipped_no_tree.load();
  std::cerr << note.dump() << "\n";
  return 0;
}

int run_stats(const std::string& in_path, const std::string& out_path) {
  std::vector<csw::Augmentation> augs = csw::read_augmentations_tsv(in_path);
  // Metrics are re-derived from the tokens, not trusted from the file.
  for (csw::Augmentation& a : augs) {
    csw::MixCounts counts = csw::mix_counts(a.mixed_src);
    a.cmi = csw::cmi(counts);
    a.spf = csw::spf(counts);
    a.pct_en = csw::pct_en(counts);
  }
  std::vector<std::string> order;
  std::map<std::string, std::vector<csw::Augmentation>> groups;
  for (csw::Augmentation& a : augs) {
    std::string key = csw::to_string(a.technique);
    if (!groups.count(key)) order.push_back(key);
    groups[key].push_back(std::move(a));
  }
  json result{{"size", augs.size()}, {"groups", json::array()}};
  for (const std::string& key : order) {
    csw::CswStats stats = csw::corpus_stats(groups[key]);
    result["groups"].push_back({{"technique", key},
                                {"size", stats.size},
                                {"cmi", stats.cmi_mean},
                                {"spf", stats.spf_mean},
                                {"spf_std", stats.spf_std},
                                {"pct_en", stats.pct_en_mean}});
  }
  OutputFile out(out_path);
  out.stream() << result.dump(2) << "\n";
  out.finish();
  return 0;
}

int run_btselect(const std::string& nbest_path, int k, bool negate,
                 const CorpusInputs& in, const std::string& out_path) {
  std::vector<csw::NBestList> lists = csw::load_nbest_tsv(nbest_path, negate);

  std::map<std::string, const csw::BiSentence*> by_id;
  csw::Corpus corpus;
  if (!in.tsv.empty() || !in.src.empty()) {
    corpus = load_corpus(in);
    for (const csw::BiSentence& s : corpus.sentences) by_id[s.id] = &s;
  }

  std::vector<std::optional<csw::Augmentation>> picks;
  picks.reserve(lists.size());
  for (const csw::NBestList& list : lists) {
    auto pick = csw::select_csw(list, k);
    if (pick) {
      auto it = by_id.find(list.sentence_id);
      if (it != by_id.end()) pick->tgt = it->second->tgt;
    }
    picks.push_back(std::move(pick));
  }

  OutputFile out(out_path);
  for (const auto& pick : picks)
    if (pick) csw::write_augmentations_tsv({&*pick, 1}, out.stream());
  out.finish();

  csw::SelectionStats stats = csw::selection_stats(picks, lists.size());
  std::cerr << json{{"selected", stats.selected},
                    {"total", stats.total},
                    {"fraction", stats.fraction}}
                   .dump()
            << "\n";
  return 0;
}

int run_tag(const CorpusInputs& in, const std::string& out_path) {
  csw::Corpus corpus = load_corpus(in);
  OutputFile out(out_path);
  for (const csw::BiSentence& sentence : corpus.sentences)
    csw::write_labels_line(out.stream(), sentence.id, csw::tag_targets(sentence));
  out.finish();
  return 0;
}

int run_append_tt(const CorpusInputs& in, const std::string& out_path) {
  csw::Corpus corpus = csw::append_target_target(load_corpus(in));
  OutputFile out(out_path);
  csw::save_corpus_tsv(corpus, out.stream());
  out.finish();
  return 0;
}

int run_intersect(const std::vector<std::string>& paths, const std::string& out_path) {
  if (paths.size() < 2)
    throw csw::UsageError("intersect needs at least 2 augmentation files");
  std::vector<std::vector<std::string>> id_sets;
  for (const std::string& path : paths) {
    std::vector<std::string> ids;
    for (const csw::Augmentation& a : csw::read_augmentations_tsv(path))
      ids.push_back(a.sentence_id);
    id_sets.push_back(std::move(ids));
  }
  OutputFile out(out_path);
  for (const std::string& id : csw::intersect_augmented(id_sets))
    out.stream() << id << "\n";
  out.finish();
  return 0;
}

int run_sample(const CorpusInputs& in, double fraction, uint64_t seed,
               const std::string& out_path) {
  csw::Corpus corpus = csw::sample_subset(load_corpus(in), fraction, seed);
  OutputFile out(out_path);
  csw::save_corpus_tsv(corpus, out.stream());
  out.finish();
  return 0;
}

json kappa_cohen(const std::vector<csw::AnnotationRecord>& records) {
  std::vector<std::string> annotators;
  for (const auto& rec : records)
    if (std::find(annotators.begin(), annotators.end(), rec.annotator_id) ==
        annotators.end())
      annotators.push_back(rec.annotator_id);
  std::sort(annotators.begin(), annotators.end());

  json result;
  for (csw::Dimension dim :
       {csw::Dimension::Understandability, csw::Dimension::Naturalness}) {
    std::map<std::string, std::map<std::string, int>> ratings;
    for (const auto& rec : records)
      ratings[rec.annotator_id][rec.item_id] =
          dim == csw::Dimension::Understandability ? rec.understandability
                                                   : rec.naturalness;
    json pairs;
    for (size_t i = 0; i < annotators.size(); ++i)
      for (size_t j = i + 1; j < annotators.size(); ++j)
        pairs[annotators[i] + "|" + annotators[j]] =
            csw::cohen_kappa(ratings[annotators[i]], ratings[annotators[j]]);
    result[csw::to_string(dim)] = pairs;
  }
  return result;
}

json kappa_fleiss(const std::vector<csw::AnnotationRecord>& records) {
  std::vector<std::string> items;
  std::map<std::string, int> raters;
  for (const auto& rec : records) {
    if (!raters.count(rec.item_id)) items.push_back(rec.item_id);
    ++raters[rec.item_id];
  }
  if (items.empty()) throw csw::StructureError("no annotation records");
  const int per_item = raters[items.front()];
  for (const std::string& item : items)
    if (raters[item] != per_item)
      throw csw::StructureError("item '" + item + "' has " +
                                std::to_string(raters[item]) + " ratings, expected " +
                                std::to_string(per_item));

  json result{{"raters_per_item", per_item}};
  for (csw::Dimension dim :
       {csw::Dimension::Understandability, csw::Dimension::Naturalness}) {
    std::map<std::string, std::vector<int>> table;
    for (const std::string& item : items)
      table[item].assign(csw::scale_max(dim), 0);
    for (const auto& rec : records) {
      int rating = dim == csw::Dimension::Understandability ? rec.understandability
                                                            : rec.naturalness;
      ++table[rec.item_id][rating - 1];
    }
    std::vector<std::vector<int>> counts;
    counts.reserve(items.size());
    for (const std::string& item : items) counts.push_back(table[item]);
    result[csw::to_string(dim)] = csw::fleiss_kappa(counts, per_item);
  }
  return result;
}

json kappa_mos(const std::vector<csw::AnnotationRecord>& records) {
  json result;
  for (csw::Dimension dim :
       {csw::Dimension::Understandability, csw::Dimension::Naturalness}) {
    csw::MosResult mos_result = csw::mos(records, dim);
    double mean = 0;
    for (const auto& [item, value] : mos_result.by_item) mean += value;
    if (!mos_result.by_item.empty())
      mean /= static_cast<double>(mos_result.by_item.size());

    std::vector<csw::Bin> bins = csw::scale_bins(dim);
    std::vector<double> percents = csw::mos_histogram(mos_result.by_item, bins);
    json histogram;
    for (size_t b = 0; b < bins.size(); ++b) histogram[bins[b].name()] = percents[b];

    json items;
    for (const auto& [item, value] : mos_result.by_item) items[item] = value;
    result[csw::to_string(dim)] = {{"mean", mean},
                                   {"items", items},
                                   {"histogram", histogram}};
  }
  return result;
}

int run_kappa(const std::string& ratings_path, const std::string& mode,
              const std::string& out_path) {
  std::vector<csw::AnnotationRecord> records = csw::load_ratings_csv(ratings_path);
  json result;
  if (mode == "cohen") result = kappa_cohen(records);
  else if (mode == "fleiss") result = kappa_fleiss(records);
  else result = kappa_mos(records);
  OutputFile out(out_path);
  out.stream() << result.dump(2) << "\n";
  out.finish();
  return 0;
}

int error_exit(const csw::Error& e) {
  std::cerr << json{{"code", e.code()}, {"message", e.what()}}.dump() << "\n";
  if (e.code() == "usage") return 2;
  if (e.code() == "format") return 3;
  if (e.code() == "structure") return 4;
  if (e.code() == "io") return 5;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"synthesize and measure code-switched Arabic-English parallel data"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value defaults, one [section] per subcommand");

  AugmentArgs aug;
  CLI::App* augment = app.add_subcommand("augment", "convert source sides to mixed language");
  add_corpus_options(augment, aug.in);
  augment->add_option("--out", aug.out, "output augmentation TSV (default stdout)");
  augment->add_option("--technique", aug.technique, "augmentation technique")
      ->required()
      ->check(CLI::IsMember({"dict", "rand-word", "rand-seg", "pred", "ec", "ml"}));
  augment->add_option("--sampling", aug.sampling, "candidate sampling for ec/ml")
      ->check(CLI::IsMember({"random", "spf"}));
  augment->add_option("--k", aug.k, "candidates kept per sentence (ec/ml)");
  augment->add_option("--percent", aug.percent, "replacement rate in (0,1]");
  augment->add_option("--spf-ref", aug.spf_ref, "reference switch-point fraction");
  augment->add_option("--seed", aug.seed, "random seed");
  augment->add_option("--max-candidates", aug.max_candidates, "per-sentence candidate cap");
  augment->add_option("--max-len", aug.max_len, "max source tokens per segment");
  augment->add_option("--jobs", aug.jobs, "worker threads; output order is unaffected");
  augment->add_option("--lexicon", aug.lexicon_path, "gloss lexicon TSV (dict)");
  augment->add_option("--labels", aug.labels_path, "prediction labels file (pred)");
  augment->add_option("--closed-class", aug.closed_class_path,
                      "closed-class tag file, one tag per line (ml)");
  augment->add_option("--dump-candidates", aug.dump_candidates,
                      "write full generation sets TSV (ec/ml)");
  augment->add_flag("--validate", aug.validate, "re-check every emitted row");

  std::string stats_in, stats_out;
  CLI::App* stats = app.add_subcommand("stats", "mixing statistics over an augmentation TSV");
  stats->add_option("--in", stats_in, "augmentation TSV")->required();
  stats->add_option("--out", stats_out, "output JSON (default stdout)");

  std::string nbest_path, bt_out;
  CorpusInputs bt_in;
  int bt_k = csw::kDefaultBtTopK;
  bool bt_negate = false;
  CLI::App* bts = app.add_subcommand("btselect", "pick mixed hypotheses from n-best lists");
  bts->add_option("--nbest", nbest_path, "TSV: id, rank, score, hypothesis")->required();
  bts->add_option("--k", bt_k, "hypothesis window size");
  bts->add_flag("--negate-scores", bt_negate, "flip score sign (cost conventions)");
  add_corpus_options(bts, bt_in);
  bts->add_option("--out", bt_out, "output augmentation TSV (default stdout)");

  CorpusInputs tag_in;
  std::string tag_out;
  CLI::App* tag = app.add_subcommand("tag", "label target tokens that appear in a mixed source");
  add_corpus_options(tag, tag_in);
  tag->add_option("--out", tag_out, "output labels file (default stdout)");

  CorpusInputs tt_in;
  std::string tt_out;
  CLI::App* tt = app.add_subcommand("append-tt", "append target-target copies to a corpus");
  add_corpus_options(tt, tt_in);
  tt->add_option("--out", tt_out, "output corpus TSV (default stdout)");

  std::vector<std::string> intersect_in;
  std::string intersect_out;
  CLI::App* inter = app.add_subcommand("intersect", "ids augmented by every technique");
  inter->add_option("--in", intersect_in, "augmentation TSVs (two or more)")->required();
  inter->add_option("--out", intersect_out, "output id list (default stdout)");

  CorpusInputs sample_in;
  std::string sample_out;
  double fraction = 0;
  uint64_t sample_seed = 0;
  CLI::App* sample = app.add_subcommand("sample", "deterministic corpus subset");
  add_corpus_options(sample, sample_in);
  sample->add_option("--fraction", fraction, "fraction of sentences in (0,1]")->required();
  sample->add_option("--seed", sample_seed, "random seed");
  sample->add_option("--out", sample_out, "output corpus TSV (default stdout)");

  std::string ratings_path, kappa_mode, kappa_out;
  CLI::App* kappa = app.add_subcommand("kappa", "annotation agreement statistics");
  kappa->add_option("--ratings", ratings_path, "ratings CSV")->required();
  kappa->add_option("--mode", kappa_mode, "statistic to compute")
      ->required()
      ->check(CLI::IsMember({"cohen", "fleiss", "mos"}));
  kappa->add_option("--out", kappa_out, "output JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << json{{"code", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    if (*augment) return run_augment(aug);
    if (*stats) return run_stats(stats_in, stats_out);
    if (*bts) return run_btselect(nbest_path, bt_k, bt_negate, bt_in, bt_out);
    if (*tag) return run_tag(tag_in, tag_out);
    if (*tt) return run_append_tt(tt_in, tt_out);
    if (*inter) return run_intersect(intersect_in, intersect_out);
    if (*sample) return run_sample(sample_in, fraction, sample_seed, sample_out);
    if (*kappa) return run_kappa(ratings_path, kappa_mode, kappa_out);
  } catch (const csw::Error& e) {
    return error_exit(e);
  } catch (const std::exception& e) {
    std::cerr << json{{"code", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
