#include "omprace/metrics.hpp"

#include <numeric>

namespace omprace {

Rational Rational::make(std::int64_t n, std::int64_t d) {
  if (d == 0)
    return {};
  std::int64_t g = std::gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return {n, d};
}

std::string Rational::str() const {
  if (!defined())
    return "n/a";
  if (den == 1)
    return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

double Rational::approx() const {
  return defined() ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
}

Metrics computeMetrics(std::int64_t tp, std::int64_t fp, std::int64_t tn,
                       std::int64_t fn) {
  Metrics m;
  m.tp = tp;
  m.fp = fp;
  m.tn = tn;
  m.fn = fn;
  m.precision = Rational::make(tp, tp + fp);
  m.recall = Rational::make(tp, tp + fn);
  m.accuracy = Rational::make(tp + tn, tp + fp + tn + fn);
  m.f1 = Rational::make(2 * tp, 2 * tp + fp + fn);
  m.tpr = m.recall;
  m.fpr = Rational::make(fp, fp + tn);
  m.tnr = Rational::make(tn, fp + tn);
  m.fnr = Rational::make(fn, tp + fn);
  // ratio-of-ratios, kept exact; any zero denominator factor makes them n/a
  m.positiveLikelihood = Rational::make(tp * (fp + tn), (tp + fn) * fp);
  m.negativeLikelihood = Rational::make(fn * (fp + tn), (tp + fn) * tn);
  m.diagnosticOdds = Rational::make(tp * tn, fp * fn);
  return m;
}

} // namespace omprace
