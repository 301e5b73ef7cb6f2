#include "navembed/stats.hpp"

#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace navembed {

std::optional<double> ks_statistic(const PathLengthDistribution& a,
                                   const PathLengthDistribution& b) {
  if (a.total == 0 || b.total == 0) return std::nullopt;
  const double total_a = static_cast<double>(a.total);
  const double total_b = static_cast<double>(b.total);
  double cum_a = 0.0;
  double cum_b = 0.0;
  double sup = 0.0;
  auto ia = a.histogram.begin();
  auto ib = b.histogram.begin();
  // Walk the union of supports in ascending hop count.
  while (ia != a.histogram.end() || ib != b.histogram.end()) {
    HopCount next = std::numeric_limits<HopCount>::max();
    if (ia != a.histogram.end()) next = std::min(next, ia->first);
    if (ib != b.histogram.end()) next = std::min(next, ib->first);
    if (ia != a.histogram.end() && ia->first == next) cum_a += static_cast<double>((ia++)->second);
    if (ib != b.histogram.end() && ib->first == next) cum_b += static_cast<double>((ib++)->second);
    sup = std::max(sup, std::abs(cum_a / total_a - cum_b / total_b));
  }
  return sup;
}

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0) || !(q > 0.0)) throw std::domain_error("hurwitz_zeta needs s > 1 and q > 0");
  // Direct sum up to N, then Euler-Maclaurin for the tail.
  constexpr int kDirect = 20;
  double sum = 0.0;
  for (int k = 0; k < kDirect; ++k) sum += std::pow(q + k, -s);
  const double a = q + kDirect;
  sum += std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  // B_{2j} / (2j)!
  constexpr double kBernoulliOverFactorial[] = {
      1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0, 1.0 / 47900160.0,
      -691.0 / 1307674368000.0};
  double rising = s;  // s (s+1) ... (s+2j-2)
  double power = std::pow(a, -s - 1.0);
  for (int j = 0; j < 6; ++j) {
    sum += kBernoulliOverFactorial[j] * rising * power;
    rising *= (s + 2 * j + 1) * (s + 2 * j + 2);
    power /= a * a;
  }
  return sum;
}

double fit_power_law_exponent(std::span<const std::size_t> samples, std::size_t k_min) {
  if (k_min < 1) throw std::invalid_argument("k_min must be >= 1");
  double log_sum = 0.0;
  std::size_t count = 0;
  for (std::size_t k : samples) {
    if (k >= k_min) {
      log_sum += std::log(static_cast<double>(k));
      ++count;
    }
  }
  if (count < 2) throw std::invalid_argument("power-law fit needs at least two samples >= k_min");
  const double mean_log = log_sum / static_cast<double>(count);
  const double q = static_cast<double>(k_min);
  // Negative mean log-likelihood per sample.
  auto objective = [&](double alpha) { return std::log(hurwitz_zeta(alpha, q)) + alpha * mean_log; };
  const auto [alpha, value] =
      boost::math::tools::brent_find_minima(objective, 1.0 + 1e-6, 20.0, 40);
  (void)value;
  return alpha;
}

MeanStderr mean_stderr(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("mean of empty sample");
  MeanStderr out;
  out.count = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    const double variance = ss / static_cast<double>(values.size() - 1);
    out.standard_error = std::sqrt(variance / static_cast<double>(values.size()));
  }
  return out;
}

}  // namespace navembed
