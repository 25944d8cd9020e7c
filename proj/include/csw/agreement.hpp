#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

namespace csw {

// One annotator's judgment of one augmented sentence.
// Understandability is a 1-3 scale, naturalness 1-5.
struct AnnotationRecord {
  std::string item_id;
  std::string annotator_id;
  int understandability = 0;
  int naturalness = 0;
};

enum class Dimension { Understandability, Naturalness };
const char* to_string(Dimension d);
int scale_max(Dimension d);

// CSV columns: item_id, annotator_id, understandability, naturalness.
// A leading header row is skipped. Ratings outside their scales are rejected.
std::vector<AnnotationRecord> load_ratings_csv(const std::string& path);

struct MosResult {
  std::map<std::string, double> by_item;  // mean opinion score per item
  std::vector<std::string> skipped;       // expected items with no records
};

MosResult mos(std::span<const AnnotationRecord> records, Dimension dimension);
MosResult mos(std::span<const AnnotationRecord> records, Dimension dimension,
              std::span<const std::string> expected_items);

struct Bin {
  double lo = 0;
  double hi = 0;
  bool closed_hi = false;  // last bin of a scale includes its upper bound
  std::string name() const;
};

// [1,2), [2,3), ..., [max-1, max] for the dimension's scale.
std::vector<Bin> scale_bins(Dimension dimension);

// Percentage of items per bin; sums to 100 (within rounding) for nonempty
// input. Overlapping bins are a UsageError.
std::vector<double> mos_histogram(const std::map<std::string, double>& mos_values,
                                  std::span<const Bin> bins);

// Unweighted Cohen's kappa; chance agreement from marginal frequencies.
// Index-aligned vectors must have equal length (StructureError).
double cohen_kappa(std::span<const int> a, std::span<const int> b);
// Id-aligned variant; item sets must be identical (StructureError).
double cohen_kappa(const std::map<std::string, int>& a,
                   const std::map<std::string, int>& b);

// rows = items, columns = categories, counts per cell; every row must sum to
// raters_per_item >= 2 (StructureError naming the row).
double fleiss_kappa(const std::vector<std::vector<int>>& counts,
                    int raters_per_item);

}  // namespace csw
