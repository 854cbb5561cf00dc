#ifndef OMPRACE_METRICS_HPP
#define OMPRACE_METRICS_HPP

#include <cstdint>
#include <string>

namespace omprace {

/// An exact ratio of confusion-matrix counts, reduced to lowest terms.
/// den == 0 encodes "undefined" (a ratio whose denominator count is zero);
/// it renders as "n/a".
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 0;

  static Rational make(std::int64_t n, std::int64_t d);
  bool defined() const { return den != 0; }
  std::string str() const;
  double approx() const;
  bool operator==(const Rational &o) const {
    return num == o.num && den == o.den;
  }
};

struct Metrics {
  std::int64_t tp = 0, fp = 0, tn = 0, fn = 0;
  Rational precision, recall, accuracy, f1;
  Rational tpr, fpr, tnr, fnr;
  Rational positiveLikelihood; // tpr / fpr
  Rational negativeLikelihood; // fnr / tnr
  Rational diagnosticOdds;     // (tp*tn) / (fp*fn)
};

Metrics computeMetrics(std::int64_t tp, std::int64_t fp, std::int64_t tn,
                       std::int64_t fn);

} // namespace omprace

#endif // OMPRACE_METRICS_HPP
