#include "radial/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

namespace radial {

MeanStd mean_std(std::span<const double> values) {
  if (values.empty()) {
    return {};
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  for (const double v : sorted) {
    sum += v;
  }
  const double mean = sum / static_cast<double>(sorted.size());
  if (sorted.size() < 2) {
    return {mean, 0.0};
  }
  double squares = 0.0;
  for (const double v : sorted) {
    squares += (v - mean) * (v - mean);
  }
  return {mean, std::sqrt(squares / static_cast<double>(sorted.size() - 1))};
}

WelchResult welch_greater(std::span<const double> a, std::span<const double> b, double confidence) {
  const auto sa = mean_std(a);
  const auto sb = mean_std(b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double va = sa.std * sa.std / na;
  const double vb = sb.std * sb.std / nb;

  WelchResult out;
  out.difference = sa.mean - sb.mean;
  out.standard_error = std::sqrt(va + vb);
  if (out.standard_error == 0.0) {
    out.significant = out.difference > 0.0;
    return out;
  }
  const double denom = (na > 1 ? va * va / (na - 1) : 0.0) + (nb > 1 ? vb * vb / (nb - 1) : 0.0);
  out.dof = denom > 0.0 ? (va + vb) * (va + vb) / denom : na + nb - 2;
  out.critical = boost::math::quantile(boost::math::students_t(out.dof), confidence);
  out.significant = out.difference > out.critical * out.standard_error;
  return out;
}

}  // namespace radial
