#pragma once

#include <cstddef>
#include <vector>

#include "dsm/cyclotomic.hpp"
#include "dsm/polynomial.hpp"
#include "dsm/rational.hpp"

namespace dsm {

// p(z) / (1 - z^period)^order with deg p < period * order; coefficient
// extraction is exact for every index.
struct SeriesModel {
  Polynomial<Rational> numerator;
  unsigned long period = 1;
  unsigned long order = 1;
};

bool operator==(const SeriesModel& a, const SeriesModel& b);

// Coefficients of indices 0..upto inclusive.
std::vector<Rational> series_coefficients(const SeriesModel& model, std::size_t upto);

// Inverse of series_coefficients: multiplies the window by
// (1 - z^N)^s and checks that everything at degree >= N*s vanishes.
// Requires at least 2*N*s terms; throws NotRepresentable otherwise.
SeriesModel fit_numerator(const std::vector<Rational>& series, unsigned long N, unsigned long s);

// Numerator p_j with sum_{k>=1} k^j x^k = p_j(x) / (1-x)^{j+1},
// deg p_j <= j+1, by the recursion j! C(k+j,k) = k^j + lower terms.
Polynomial<Rational> power_sum_numerator(unsigned long j);

struct PowerSumModel {
  Polynomial<Cyclotomic> numerator;
  unsigned long order;  // j + 1
};

// sum_{k>=1} k^j (c z)^k = numerator(z) / (1 - c z)^{j+1}.
PowerSumModel power_sum_model(unsigned long j, const Cyclotomic& c);

// Substitute x -> c*z into a rational-coefficient polynomial.
Polynomial<Cyclotomic> substitute_scaled(const Polynomial<Rational>& p, const Cyclotomic& c);

// Series coefficients 0..upto of num(z) / (1 - c z)^order.
std::vector<Cyclotomic> expand_unit_pole(const Polynomial<Cyclotomic>& num, const Cyclotomic& c,
                                         unsigned long order, std::size_t upto);

}  // namespace dsm
