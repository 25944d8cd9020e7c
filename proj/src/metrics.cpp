#include "csw/metrics.hpp"

#include <cmath>

#include "csw/augmentation.hpp"

namespace csw {

MixCounts mix_counts(std::span<const Token> tokens) {
  MixCounts c;
  bool have_prev = false;
  Lang prev = Lang::Other;
  for (const Token& t : tokens) {
    if (t.lang == Lang::Other) continue;  // transparent for switch counting
    ++c.dependent;
    if (t.lang == Lang::Arabic) ++c.arabic;
    else ++c.english;
    if (have_prev && t.lang != prev) ++c.switches;
    prev = t.lang;
    have_prev = true;
  }
  c.dominant = std::max(c.arabic, c.english);
  return c;
}

double cmi(const MixCounts& c) {
  if (c.dependent == 0) return 0.0;
  return (0.5 * (c.dependent - c.dominant) + 0.5 * c.switches) / c.dependent;
}

double spf(const MixCounts& c) {
  if (c.dependent == 0) return 0.0;
  return static_cast<double>(c.switches) / c.dependent;
}

double pct_en(const MixCounts& c) {
  if (c.dependent == 0) return 0.0;
  return static_cast<double>(c.english) / c.dependent;
}

double cmi(std::span<const Token> tokens) { return cmi(mix_counts(tokens)); }
double spf(std::span<const Token> tokens) { return spf(mix_counts(tokens)); }
double pct_en(std::span<const Token> tokens) { return pct_en(mix_counts(tokens)); }

namespace {

// Compensated (Kahan) sum so aggregation is reproducible.
class KahanSum {
public:
  void add(double v) {
    double y = v - compensation_;
    double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

private:
  double sum_ = 0;
  double compensation_ = 0;
};

}  // namespace

CswStats corpus_stats(std::span<const Augmentation> augs) {
  CswStats stats;
  stats.size = augs.size();
  if (augs.empty()) return stats;

  KahanSum cmi_sum, spf_sum, en_sum;
  for (const Augmentation& a : augs) {
    cmi_sum.add(a.cmi);
    spf_sum.add(a.spf);
    en_sum.add(a.pct_en);
  }
  const double n = static_cast<double>(augs.size());
  stats.cmi_mean = cmi_sum.value() / n;
  stats.spf_mean = spf_sum.value() / n;
  stats.pct_en_mean = en_sum.value() / n;

  if (augs.size() > 1) {
    KahanSum sq;
    for (const Augmentation& a : augs) {
      double d = a.spf - stats.spf_mean;
      sq.add(d * d);
    }
    stats.spf_std = std::sqrt(sq.value() / (n - 1.0));
  }
  return stats;
}

}  // namespace csw
