#include "csw/agreement.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "csw/errors.hpp"
#include "csw/textio.hpp"

namespace csw {

const char* to_string(Dimension d) {
  return d == Dimension::Understandability ? "understandability" : "naturalness";
}

int scale_max(Dimension d) { return d == Dimension::Understandability ? 3 : 5; }

std::vector<AnnotationRecord> load_ratings_csv(const std::string& path) {
  std::vector<AnnotationRecord> records;
  std::vector<std::string> lines = read_lines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<std::string> cols = split_char(lines[i], ',');
    if (cols.size() != 4)
      throw FormatError(path + " line " + std::to_string(i + 1) +
                        ": expected item_id,annotator_id,understandability,naturalness");
    if (i == 0 && cols[0] == "item_id") continue;  // header
    AnnotationRecord rec;
    rec.item_id = cols[0];
    rec.annotator_id = cols[1];
    rec.understandability = static_cast<int>(parse_int(cols[2]));
    rec.naturalness = static_cast<int>(parse_int(cols[3]));
    if (rec.understandability < 1 || rec.understandability > 3)
      throw FormatError(path + " line " + std::to_string(i + 1) +
                        ": understandability must be 1..3");
    if (rec.naturalness < 1 || rec.naturalness > 5)
      throw FormatError(path + " line " + std::to_string(i + 1) +
                        ": naturalness must be 1..5");
    records.push_back(std::move(rec));
  }
  return records;
}

namespace {

int rating_of(const AnnotationRecord& rec, Dimension d) {
  return d == Dimension::Understandability ? rec.understandability : rec.naturalness;
}

}  // namespace

MosResult mos(std::span<const AnnotationRecord> records, Dimension dimension) {
  return mos(records, dimension, {});
}

MosResult mos(std::span<const AnnotationRecord> records, Dimension dimension,
              std::span<const std::string> expected_items) {
  std::map<std::string, std::pair<double, int>> sums;
  for (const AnnotationRecord& rec : records) {
    auto& [sum, count] = sums[rec.item_id];
    sum += rating_of(rec, dimension);
    ++count;
  }
  MosResult result;
  for (const auto& [item, sc] : sums)
    result.by_item[item] = sc.first / sc.second;
  for (const std::string& item : expected_items)
    if (!sums.count(item)) result.skipped.push_back(item);
  return result;
}

std::string Bin::name() const {
  return format_double(lo) + (closed_hi ? ".." : "..<") + format_double(hi);
}

std::vector<Bin> scale_bins(Dimension dimension) {
  std::vector<Bin> bins;
  const int top = scale_max(dimension);
  for (int lo = 1; lo < top; ++lo)
    bins.push_back({static_cast<double>(lo), static_cast<double>(lo + 1), lo + 1 == top});
  return bins;
}

std::vector<double> mos_histogram(const std::map<std::string, double>& mos_values,
                                  std::span<const Bin> bins) {
  for (size_t i = 0; i < bins.size(); ++i) {
    if (!(bins[i].lo < bins[i].hi))
      throw UsageError("bin " + bins[i].name() + " is empty");
    for (size_t j = i + 1; j < bins.size(); ++j) {
      bool separate = bins[i].hi <= bins[j].lo || bins[j].hi <= bins[i].lo;
      // A closed upper bound touching the next bin's lower bound overlaps.
      if (separate && bins[i].closed_hi && bins[i].hi == bins[j].lo) separate = false;
      if (separate && bins[j].closed_hi && bins[j].hi == bins[i].lo) separate = false;
      if (!separate)
        throw UsageError("bins " + bins[i].name() + " and " + bins[j].name() +
                         " overlap");
    }
  }
  std::vector<double> percent(bins.size(), 0.0);
  if (mos_values.empty()) return percent;
  for (const auto& [item, value] : mos_values) {
    for (size_t b = 0; b < bins.size(); ++b) {
      bool in = value >= bins[b].lo &&
                (value < bins[b].hi || (bins[b].closed_hi && value == bins[b].hi));
      if (in) {
        percent[b] += 1.0;
        break;
      }
    }
  }
  const double n = static_cast<double>(mos_values.size());
  for (double& p : percent) p = 100.0 * p / n;
  return percent;
}

double cohen_kappa(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size())
    throw StructureError("rating vectors differ in length: " +
                         std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  if (a.empty()) throw StructureError("cannot compute kappa on empty ratings");

  const double n = static_cast<double>(a.size());
  std::map<int, int> freq_a, freq_b;
  double agree = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    ++freq_a[a[i]];
    ++freq_b[b[i]];
    if (a[i] == b[i]) agree += 1.0;
  }
  const double p_o = agree / n;
  double p_e = 0;
  for (const auto& [cat, fa] : freq_a) {
    auto it = freq_b.find(cat);
    if (it != freq_b.end()) p_e += (fa / n) * (it->second / n);
  }
  if (p_e == 1.0) return p_o == 1.0 ? 1.0 : 0.0;
  return (p_o - p_e) / (1.0 - p_e);
}

double cohen_kappa(const std::map<std::string, int>& a,
                   const std::map<std::string, int>& b) {
  if (a.size() != b.size())
    throw StructureError("annotators rated different item counts: " +
                         std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  std::vector<int> va, vb;
  va.reserve(a.size());
  vb.reserve(b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first)
      throw StructureError("item sets differ: '" + ia->first + "' vs '" +
                           ib->first + "'");
    va.push_back(ia->second);
    vb.push_back(ib->second);
  }
  return cohen_kappa(va, vb);
}

double fleiss_kappa(const std::vector<std::vector<int>>& counts, int raters_per_item) {
  if (raters_per_item < 2) throw StructureError("need at least 2 raters per item");
  if (counts.empty()) throw StructureError("cannot compute kappa on empty table");

  const double n = raters_per_item;
  const double items = static_cast<double>(counts.size());
  const size_t categories = counts[0].size();

  std::vector<double> category_share(categories, 0.0);
  double mean_agreement = 0;
  for (size_t i = 0; i < counts.size(); ++i) {
    const std::vector<int>& row = counts[i];
    if (row.size() != categories)
      throw StructureError("row " + std::to_string(i) + " has " +
                           std::to_string(row.size()) + " categories, expected " +
                           std::to_string(categories));
    int row_sum = 0;
    double sq = 0;
    for (size_t j = 0; j < categories; ++j) {
      row_sum += row[j];
      sq += static_cast<double>(row[j]) * row[j];
      category_share[j] += row[j];
    }
    if (row_sum != raters_per_item)
      throw StructureError("row " + std::to_string(i) + " sums to " +
                           std::to_string(row_sum) + ", expected " +
                           std::to_string(raters_per_item));
    mean_agreement += (sq - n) / (n * (n - 1.0));
  }
  mean_agreement /= items;

  double chance = 0;
  for (double share : category_share) {
    double p = share / (items * n);
    chance += p * p;
  }
  if (chance == 1.0) return mean_agreement == 1.0 ? 1.0 : 0.0;
  return (mean_agreement - chance) / (1.0 - chance);
}

}  // namespace csw
