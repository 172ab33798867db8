#include "dsm/series.hpp"

#include <map>
#include <mutex>

#include "dsm/errors.hpp"

namespace dsm {

bool operator==(const SeriesModel& a, const SeriesModel& b) {
  return a.period == b.period && a.order == b.order && a.numerator == b.numerator;
}

std::vector<Rational> series_coefficients(const SeriesModel& model, std::size_t upto) {
  const unsigned long N = model.period, s = model.order;
  std::vector<Rational> out(upto + 1);
  for (std::size_t idx = 0; idx <= upto; ++idx) {
    const unsigned long j = idx % N;
    const long m = static_cast<long>(idx / N);
    Rational acc = 0;
    for (unsigned long h = 0; h < s; ++h) {
      Rational b = model.numerator.coefficient(h * N + j);
      if (b == 0) continue;
      acc += b * Rational(binomial(m - static_cast<long>(h) + static_cast<long>(s) - 1, s - 1));
    }
    out[idx] = acc;
  }
  return out;
}

SeriesModel fit_numerator(const std::vector<Rational>& series, unsigned long N, unsigned long s) {
  if (N == 0 || s == 0) fail_validation("SchemaError", "period and order must be positive");
  if (series.size() < 2 * N * s)
    fail_validation("SchemaError", "need at least 2*N*s coefficients to fit");
  // (1 - z^N)^s expanded via binomials, then multiplied into the window.
  Polynomial<Rational> window{std::vector<Rational>(series)};
  std::vector<Rational> denom(N * s + 1);
  for (unsigned long i = 0; i <= s; ++i) {
    Rational c = Rational(binomial(static_cast<long>(s), i));
    if (i % 2 == 1) c = -c;
    denom[i * N] = c;
  }
  Polynomial<Rational> product = window * Polynomial<Rational>{std::move(denom)};
  // Coefficients of the product are reliable up to the window length.
  for (std::size_t d = N * s; d < series.size(); ++d) {
    if (product.coefficient(d) != 0)
      fail_inconsistency("NotRepresentable",
                         "sequence is not generated by (1-z^" + std::to_string(N) + ")^" +
                             std::to_string(s) + "; offending degree " + std::to_string(d));
  }
  SeriesModel model{product.truncated(N * s), N, s};
  return model;
}

Polynomial<Rational> power_sum_numerator(unsigned long j) {
  static std::map<unsigned long, Polynomial<Rational>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(j);
  if (it != cache.end()) return it->second;

  // one_minus_x = 1 - x
  const Polynomial<Rational> one_minus_x{std::vector<Rational>{1, -1}};
  for (unsigned long n = 0; n <= j; ++n) {
    if (cache.count(n)) continue;
    // Coefficients of (k+1)(k+2)...(k+n) as a polynomial in k.
    std::vector<Rational> rising{1};
    for (unsigned long i = 1; i <= n; ++i) {
      std::vector<Rational> next(rising.size() + 1);
      for (std::size_t t = 0; t < rising.size(); ++t) {
        next[t] += rising[t] * Rational(static_cast<long>(i));
        next[t + 1] += rising[t];
      }
      rising = std::move(next);
    }
    // n! (1 - (1-x)^{n+1}) - sum_{l<n} c_l p_l(x) (1-x)^{n-l},
    // where rising = k^n + sum c_l k^l.
    Polynomial<Rational> p =
        (Polynomial<Rational>::constant(Rational(factorial(n))) -
         one_minus_x.pow(n + 1).times(Rational(factorial(n))));
    for (unsigned long l = 0; l < n; ++l) {
      if (rising[l] == 0) continue;
      p -= cache.at(l).times(rising[l]) * one_minus_x.pow(n - l);
    }
    cache.emplace(n, std::move(p));
  }
  return cache.at(j);
}

Polynomial<Cyclotomic> substitute_scaled(const Polynomial<Rational>& p, const Cyclotomic& c) {
  std::vector<Cyclotomic> out(p.coefficients().size());
  Cyclotomic power(Rational(1));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = Cyclotomic(p.coefficient(i)) * power;
    power = power * c;
  }
  return Polynomial<Cyclotomic>{std::move(out)};
}

PowerSumModel power_sum_model(unsigned long j, const Cyclotomic& c) {
  return PowerSumModel{substitute_scaled(power_sum_numerator(j), c), j + 1};
}

std::vector<Cyclotomic> expand_unit_pole(const Polynomial<Cyclotomic>& num, const Cyclotomic& c,
                                         unsigned long order, std::size_t upto) {
  // 1/(1-cz)^order = sum C(k+order-1, order-1) c^k z^k
  std::vector<Cyclotomic> geo(upto + 1);
  Cyclotomic power(Rational(1));
  for (std::size_t k = 0; k <= upto; ++k) {
    geo[k] = Cyclotomic(Rational(binomial(static_cast<long>(k + order - 1), order - 1))) * power;
    power = power * c;
  }
  std::vector<Cyclotomic> out(upto + 1);
  for (std::size_t k = 0; k <= upto; ++k) {
    Cyclotomic acc;
    for (std::size_t i = 0; i <= k && i < num.coefficients().size(); ++i) {
      if (num.coefficient(i).is_zero()) continue;
      acc = acc + num.coefficient(i) * geo[k - i];
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace dsm
